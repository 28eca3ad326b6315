#pragma once

#include <vector>

#include "oyang/mpoly.hpp"

namespace oyang {

/// Operator sum_t rho_t(u,v,w) * d_u^{a} d_v^{b} d_w^{c} acting on rational
/// functions of (u, v, w). Localized coefficients (1/u, 1/(u+v), ...) are
/// ordinary rational functions, so the algebra closes under composition by
/// the Leibniz rule; verification nevertheless goes through weyl_apply on
/// test functions, never through normal forms of both sides.
class WeylOp {
 public:
  struct Term {
    RationalFn3 coeff;
    std::array<int, 3> d{0, 0, 0};
  };

  WeylOp() = default;
  WeylOp(Rat c) { add_term(RationalFn3(std::move(c)), {0, 0, 0}); }
  explicit WeylOp(RationalFn3 c) { add_term(std::move(c), {0, 0, 0}); }

  static WeylOp mul(RationalFn3 f) { return WeylOp(std::move(f)); }
  static WeylOp partial(int var, int order = 1) {
    WeylOp op;
    std::array<int, 3> d{0, 0, 0};
    d[var] = order;
    op.add_term(RationalFn3(Rat(1)), d);
    return op;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  void add_term(RationalFn3 c, std::array<int, 3> d) {
    if (c.is_zero()) return;
    for (auto& t : terms_)
      if (t.d == d) {
        t.coeff = t.coeff + c;
        if (t.coeff.is_zero()) {
          t = terms_.back();
          terms_.pop_back();
        }
        return;
      }
    terms_.push_back({std::move(c), d});
  }

  WeylOp operator-() const {
    WeylOp r;
    for (auto& t : terms_) r.terms_.push_back({-t.coeff, t.d});
    return r;
  }
  friend WeylOp operator+(const WeylOp& a, const WeylOp& b) {
    WeylOp r = a;
    for (auto& t : b.terms_) r.add_term(t.coeff, t.d);
    return r;
  }
  friend WeylOp operator-(const WeylOp& a, const WeylOp& b) { return a + (-b); }

  /// Composition a o b via the Leibniz rule:
  /// d^alpha (sigma g) = sum_gamma C(alpha, gamma) sigma^(gamma) d^(alpha-gamma) g.
  friend WeylOp operator*(const WeylOp& a, const WeylOp& b);

  /// Equality of representations; operator identities are decided by action
  /// on test functions instead (see weyl_apply).
  friend bool operator==(const WeylOp& a, const WeylOp& b) {
    return (a - b).is_zero();
  }

  WeylOp scaled(const Rat& c) const {
    WeylOp r;
    if (c.is_zero()) return r;
    for (auto& t : terms_) r.terms_.push_back({RationalFn3(c) * t.coeff, t.d});
    return r;
  }

  std::string str() const;

 private:
  std::vector<Term> terms_;
};

inline WeylOp scale(const Rat& c, const WeylOp& x) { return x.scaled(c); }

/// Exact action on a rational function.
RationalFn3 weyl_apply(const WeylOp& op, const RationalFn3& f);

}  // namespace oyang
