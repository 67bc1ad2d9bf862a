#pragma once

#include <string>

namespace ralloc {

/// Shortest round-trip decimal representation of a double ("10", "7.5").
std::string format_number(double value);

}  // namespace ralloc
