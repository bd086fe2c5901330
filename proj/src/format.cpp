#include "wmax/format.hpp"

#include <charconv>
#include <stdexcept>

namespace wmax {

std::string fmt12(double x) {
  char buf[40];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, p);
}

}  // namespace wmax
