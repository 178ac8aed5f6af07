#pragma once

#include <cstdio>
#include <string>

namespace gatecost {

// 17 significant digits round-trip a double exactly.
inline std::string format_g17(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

} // namespace gatecost
