#pragma once

#include <string>

namespace solenoid {

// Shortest decimal representation that round-trips the double (at most 17
// significant digits). Keeps emitted CSV and JSON byte-stable across runs.
std::string fmt_double(double x);

}  // namespace solenoid
