#pragma once

#include <array>
#include <map>
#include <sstream>
#include <string>

#include "oyang/errors.hpp"
#include "oyang/rat.hpp"

namespace oyang {

/// Polynomial in up to three variables (u, v, w) over Rat.
class MPoly3 {
 public:
  using Expo = std::array<int, 3>;

  MPoly3() = default;
  explicit MPoly3(Rat c) {
    if (!c.is_zero()) c_[{0, 0, 0}] = std::move(c);
  }
  static MPoly3 var(int k, int power = 1) {
    MPoly3 p;
    Expo e{0, 0, 0};
    e[k] = power;
    p.c_[e] = Rat(1);
    return p;
  }
  static MPoly3 u() { return var(0); }
  static MPoly3 v() { return var(1); }
  static MPoly3 w() { return var(2); }

  bool is_zero() const { return c_.empty(); }
  const std::map<Expo, Rat>& terms() const { return c_; }

  void add_term(const Expo& e, const Rat& c) {
    if (c.is_zero()) return;
    auto it = c_.find(e);
    if (it == c_.end()) c_.emplace(e, c);
    else {
      it->second += c;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  MPoly3 operator-() const {
    MPoly3 r;
    for (auto& [e, c] : c_) r.c_.emplace(e, -c);
    return r;
  }
  friend MPoly3 operator+(const MPoly3& a, const MPoly3& b) {
    MPoly3 r = a;
    for (auto& [e, c] : b.c_) r.add_term(e, c);
    return r;
  }
  friend MPoly3 operator-(const MPoly3& a, const MPoly3& b) { return a + (-b); }
  friend MPoly3 operator*(const MPoly3& a, const MPoly3& b) {
    MPoly3 r;
    for (auto& [ea, ca] : a.c_)
      for (auto& [eb, cb] : b.c_)
        r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
  }
  MPoly3 scaled(const Rat& c) const {
    MPoly3 r;
    if (c.is_zero()) return r;
    for (auto& [e, x] : c_) r.c_.emplace(e, c * x);
    return r;
  }

  friend bool operator==(const MPoly3& a, const MPoly3& b) { return a.c_ == b.c_; }

  MPoly3 derivative(int k) const {
    MPoly3 r;
    for (auto& [e, c] : c_) {
      if (e[k] == 0) continue;
      Expo e2 = e;
      e2[k] -= 1;
      r.add_term(e2, Rat(e[k]) * c);
    }
    return r;
  }

  Rat eval(const Rat& x, const Rat& y, const Rat& z) const {
    Rat acc(0);
    for (auto& [e, c] : c_)
      acc += c * x.pow(e[0]) * y.pow(e[1]) * z.pow(e[2]);
    return acc;
  }

  /// Componentwise minimum of all exponent vectors.
  Expo monomial_content() const {
    if (c_.empty()) return {0, 0, 0};
    Expo g = c_.begin()->first;
    for (auto& [e, c] : c_)
      for (int k = 0; k < 3; ++k) g[k] = std::min(g[k], e[k]);
    return g;
  }

  void divide_monomial(const Expo& g) {
    if (g == Expo{0, 0, 0}) return;
    std::map<Expo, Rat> out;
    for (auto& [e, c] : c_) out.emplace(Expo{e[0] - g[0], e[1] - g[1], e[2] - g[2]}, c);
    c_ = std::move(out);
  }

  std::string str() const;

 private:
  std::map<Expo, Rat> c_;
};

/// Rational function of (u, v, w). Equality cross-multiplies, evaluation
/// refuses poles.
class RationalFn3 {
 public:
  RationalFn3() : num_(), den_(Rat(1)) {}
  RationalFn3(Rat c) : num_(std::move(c)), den_(Rat(1)) {}
  RationalFn3(MPoly3 num, MPoly3 den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFn3: zero denominator");
    normalize();
  }

  const MPoly3& num() const { return num_; }
  const MPoly3& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFn3 operator-() const { return RationalFn3(-num_, den_); }
  friend RationalFn3 operator+(const RationalFn3& a, const RationalFn3& b) {
    return RationalFn3(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFn3 operator-(const RationalFn3& a, const RationalFn3& b) {
    return a + (-b);
  }
  friend RationalFn3 operator*(const RationalFn3& a, const RationalFn3& b) {
    return RationalFn3(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFn3 operator/(const RationalFn3& a, const RationalFn3& b) {
    if (b.is_zero()) throw std::domain_error("RationalFn3: division by zero");
    return RationalFn3(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const RationalFn3& a, const RationalFn3& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const RationalFn3& a, const RationalFn3& b) { return !(a == b); }

  RationalFn3 derivative(int k) const {
    return RationalFn3(num_.derivative(k) * den_ - num_ * den_.derivative(k),
                       den_ * den_);
  }

  Rat eval(const Rat& x, const Rat& y, const Rat& z) const {
    Rat d = den_.eval(x, y, z);
    if (d.is_zero()) throw PoleError("RationalFn3::eval: pole hit");
    return num_.eval(x, y, z) / d;
  }

  std::string str() const;

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = MPoly3(Rat(1));
      return;
    }
    // cancel the common monomial factor and make the denominator's first
    // term 1, keeping sizes bounded through long computations
    auto gn = num_.monomial_content();
    auto gd = den_.monomial_content();
    MPoly3::Expo g{std::min(gn[0], gd[0]), std::min(gn[1], gd[1]),
                   std::min(gn[2], gd[2])};
    num_.divide_monomial(g);
    den_.divide_monomial(g);
    Rat lead = den_.terms().begin()->second;
    if (!lead.is_one()) {
      num_ = num_.scaled(lead.inv());
      den_ = den_.scaled(lead.inv());
    }
  }

  MPoly3 num_, den_;
};

inline RationalFn3 scale(const Rat& c, const RationalFn3& x) {
  return RationalFn3(c) * x;
}

}  // namespace oyang
