#include "oyang/upoly.hpp"

#include <sstream>

namespace oyang {

UPoly UPoly::monomial(int deg, Rat c) {
  std::vector<Rat> v(deg + 1, Rat(0));
  v[deg] = std::move(c);
  return UPoly(std::move(v));
}

UPoly UPoly::operator-() const {
  std::vector<Rat> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(-c);
  return UPoly(std::move(v));
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j)
      v[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(v));
}

UPoly operator*(const Rat& c, const UPoly& p) {
  std::vector<Rat> v;
  v.reserve(p.c_.size());
  for (const auto& a : p.c_) v.push_back(c * a);
  return UPoly(std::move(v));
}

Rat UPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rat> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = Rat(static_cast<long>(i)) * c_[i];
  return UPoly(std::move(v));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("UPoly::divmod: division by zero polynomial");
  UPoly r = a;
  std::vector<Rat> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1, Rat(0));
  const Rat lead = b.c_.back();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int d = r.degree() - b.degree();
    Rat c = r.c_.back() / lead;
    q[d] = c;
    r -= UPoly::monomial(d, c) * b;
  }
  return {UPoly(std::move(q)), r};
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = coeff(k);
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    Rat a = c.sign() < 0 ? -c : c;
    if (k == 0 || !a.is_one()) os << a.str();
    if (k > 0) {
      if (!a.is_one()) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

RatFn1::RatFn1(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFn1: zero denominator");
  reduce();
}

void RatFn1::reduce() {
  // Keep the denominator monic; full gcd reduction is not needed since
  // equality tests cross-multiply, but a cheap euclidean gcd keeps the
  // degrees bounded through long computations.
  UPoly a = num_, b = den_;
  while (!b.is_zero()) {
    auto [q, r] = UPoly::divmod(a, b);
    a = b;
    b = r;
  }
  if (!a.is_zero() && a.degree() > 0) {
    num_ = UPoly::divmod(num_, a).first;
    den_ = UPoly::divmod(den_, a).first;
  }
  Rat lead = den_.coeff(den_.degree());
  if (!lead.is_one()) {
    Rat inv = lead.inv();
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

RatFn1 operator+(const RatFn1& a, const RatFn1& b) {
  return RatFn1(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn1 operator-(const RatFn1& a, const RatFn1& b) {
  return RatFn1(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFn1 operator*(const RatFn1& a, const RatFn1& b) {
  return RatFn1(a.num_ * b.num_, a.den_ * b.den_);
}

RatFn1 operator/(const RatFn1& a, const RatFn1& b) {
  if (b.is_zero()) throw std::domain_error("RatFn1: division by zero");
  return RatFn1(a.num_ * b.den_, a.den_ * b.num_);
}

Rat RatFn1::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d.is_zero()) throw PoleError("RatFn1::eval: pole at s = " + x.str());
  return num_.eval(x) / d;
}

std::string RatFn1::str(const std::string& var) const {
  if (den_ == UPoly(Rat(1))) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace oyang
