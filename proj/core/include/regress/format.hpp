#pragma once

#include <string>

namespace regress {

// Shortest decimal representation that parses back to the same double.
// Locale-independent, so emitted files are byte-stable.
std::string format_double(double value);

}  // namespace regress
