#include "oyang/rat.hpp"

#include <cctype>
#include <ostream>

namespace oyang {

Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rat::parse: empty string");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw std::invalid_argument("Rat::parse: bad character in '" + s + "'");
  }
  mpq_class v;
  if (v.set_str(s, 10) != 0)
    throw std::invalid_argument("Rat::parse: malformed rational '" + s + "'");
  if (sgn(v.get_den()) == 0)
    throw std::invalid_argument("Rat::parse: zero denominator in '" + s + "'");
  v.canonicalize();
  return Rat(v);
}

Rat Rat::pow(long e) const {
  if (e == 0) return Rat(1);
  Rat base = e > 0 ? *this : inv();
  long k = e > 0 ? e : -e;
  Rat acc(1);
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::string Rat::str() const {
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

}  // namespace oyang
