#include "asymcone/numbers.hpp"

#include "asymcone/errors.hpp"

namespace asymcone {

Rat parse_rational(std::string_view text) {
  auto bad = [&] {
    throw ParseError("malformed rational '" + std::string(text) +
                     "' (expected \"p\" or \"p/q\" with q > 0)");
  };
  if (text.empty()) bad();
  std::size_t slash = text.find('/');
  auto parse_int = [&](std::string_view s) -> Int {
    if (s.empty()) bad();
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) bad();
    Int v = 0;
    for (std::size_t k = i; k < s.size(); ++k) {
      if (s[k] < '0' || s[k] > '9') bad();
      v = v * 10 + (s[k] - '0');
    }
    return neg ? -v : v;
  };
  Int num = parse_int(text.substr(0, slash));
  Int den = 1;
  if (slash != std::string_view::npos) {
    den = parse_int(text.substr(slash + 1));
    if (den <= 0) bad();
  }
  return Rat(num, den);
}

}  // namespace asymcone
