#include "copoisson/tensor.hpp"

namespace copoisson {

Poly truncate(const Poly& p, std::size_t n) {
  Poly r;
  for (const auto& [m, c] : p) {
    if (m.degree() <= n) r.add(m, c);
  }
  return r;
}

Poly derivative(const Poly& p, std::size_t i) {
  Poly r;
  for (const auto& [m, c] : p) {
    if (m[i] == 0) continue;
    Monomial d = m;
    d.set(i, m[i] - 1);
    r.add(d, c * m[i]);
  }
  return r;
}

Poly embed(const Poly& p, std::size_t nvars, std::size_t offset) {
  Poly r;
  for (const auto& [m, c] : p) r.add(m.embed(nvars, offset), c);
  return r;
}

std::string to_string(const Poly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      s += to_string(mag);
    } else {
      if (mag != 1) s += to_string(mag) + "*";
      s += to_string(m, names);
    }
  }
  return s;
}

}  // namespace copoisson
