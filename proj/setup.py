"""CMake-driven build of the gatecost extension module.

The C++ core, CLI and tests live in the CMake project; this shim builds the
same tree with the python extension enabled and ships python/gatecost plus
the compiled module as a wheel.
"""

import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)

        out_dir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_core", "-j"],
            check=True,
        )

        out_dir.mkdir(parents=True, exist_ok=True)
        built = build_dir / "python" / "gatecost"
        for artifact in built.glob("_core.*"):
            (out_dir / artifact.name).write_bytes(artifact.read_bytes())


setup(
    ext_modules=[CMakeExtension("gatecost._core")],
    cmdclass={"build_ext": CMakeBuild},
)
