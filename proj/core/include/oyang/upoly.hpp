#pragma once

#include <string>
#include <vector>

#include "oyang/errors.hpp"
#include "oyang/rat.hpp"

namespace oyang {

/// Dense univariate polynomial over Rat, coefficient index = degree.
/// Trailing zeros are trimmed; the zero polynomial has empty storage.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(Rat c) { c_.push_back(std::move(c)); trim(); }
  explicit UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly x() { return UPoly(std::vector<Rat>{Rat(0), Rat(1)}); }
  static UPoly monomial(int deg, Rat c = Rat(1));

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rat coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rat(0);
  }
  const std::vector<Rat>& coeffs() const { return c_; }

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rat& c, const UPoly& p);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  Rat eval(const Rat& x) const;
  UPoly derivative() const;

  /// Long division; throws if the divisor is zero. Returns (quotient, remainder).
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

  std::string str(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rat> c_;
};

/// Rational function in one variable over Rat, kept as num/den with a monic
/// denominator. Comparison cross-multiplies, so no gcd normalization is
/// required for correctness.
class RatFn1 {
 public:
  RatFn1() : num_(), den_(Rat(1)) {}
  RatFn1(Rat c) : num_(std::move(c)), den_(Rat(1)) {}
  RatFn1(UPoly num, UPoly den);

  static RatFn1 var() { return RatFn1(UPoly::x(), UPoly(Rat(1))); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFn1 operator-() const { return RatFn1(-num_, den_); }
  friend RatFn1 operator+(const RatFn1& a, const RatFn1& b);
  friend RatFn1 operator-(const RatFn1& a, const RatFn1& b);
  friend RatFn1 operator*(const RatFn1& a, const RatFn1& b);
  friend RatFn1 operator/(const RatFn1& a, const RatFn1& b);
  RatFn1& operator+=(const RatFn1& o) { return *this = *this + o; }
  RatFn1& operator-=(const RatFn1& o) { return *this = *this - o; }
  RatFn1& operator*=(const RatFn1& o) { return *this = *this * o; }

  friend bool operator==(const RatFn1& a, const RatFn1& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const RatFn1& a, const RatFn1& b) { return !(a == b); }

  /// Exact evaluation; throws PoleError if the point is a pole.
  Rat eval(const Rat& x) const;

  std::string str(const std::string& var = "s") const;

 private:
  void reduce();
  UPoly num_, den_;
};

inline RatFn1 scale(const Rat& c, const RatFn1& x) { return RatFn1(c) * x; }

}  // namespace oyang
