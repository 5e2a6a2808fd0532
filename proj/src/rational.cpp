#include "copoisson/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace copoisson {

Rational parse_rational(std::string_view text) {
  auto bad = [&] {
    return std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
  };
  if (text.empty()) throw bad();
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') ++i;
  std::size_t digits = 0;
  bool slash = false;
  std::size_t denom_digits = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      (slash ? denom_digits : digits)++;
    } else if (c == '/' && !slash) {
      slash = true;
    } else {
      throw bad();
    }
  }
  if (digits == 0 || (slash && denom_digits == 0)) throw bad();
  std::string s(text[0] == '+' ? text.substr(1) : text);
  Rational r;
  if (r.set_str(s, 10) != 0) throw bad();
  if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator in \"" + s + "\"");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

}  // namespace copoisson
