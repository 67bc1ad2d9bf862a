#include "ralloc/format.hpp"

#include <charconv>

namespace ralloc {

std::string format_number(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  (void)ec;
  return std::string(buffer, ptr);
}

}  // namespace ralloc
