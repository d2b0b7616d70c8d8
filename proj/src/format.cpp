#include "solenoid/format.hpp"

#include <charconv>

namespace solenoid {

std::string fmt_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

}  // namespace solenoid
