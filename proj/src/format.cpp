#include "qcorr/format.hpp"

#include <cstdio>

namespace qcorr {

std::string format_number(double x) {
    if (x == 0.0) x = 0.0; // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

} // namespace qcorr
