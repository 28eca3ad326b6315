#pragma once

#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <string>

#include "oyang/errors.hpp"
#include "oyang/rat.hpp"

namespace oyang {

/// Truncated Laurent series in t = u^{-1}: exponent k stores the coefficient
/// of u^{-k}. Negative exponents are finitely many positive powers of u.
///
/// Every series carries a validity order: coefficients at exponents <= order
/// are exact, deeper ones are unknown. Arithmetic propagates the bound, so a
/// coefficient can never be read past what the inputs determine. Exact
/// objects (Laurent polynomials) use the kExact sentinel.
template <typename R>
class TruncSeries {
 public:
  static constexpr long kExact = std::numeric_limits<int>::max() / 4;

  TruncSeries() : order_(kExact) {}
  explicit TruncSeries(long order) : order_(order) {}

  static TruncSeries constant(R c) {
    TruncSeries s;
    s.set(0, std::move(c));
    return s;
  }
  /// The monomial u^{-k} (k < 0 gives positive powers of u).
  static TruncSeries monomial(int k, R c) {
    TruncSeries s;
    s.set(k, std::move(c));
    return s;
  }

  long valid_order() const { return order_; }
  bool is_exact() const { return order_ >= kExact; }
  void clamp_order(long n) {
    order_ = std::min(order_, n);
    prune();
  }

  bool is_zero() const { return c_.empty(); }
  int min_exponent() const {
    if (c_.empty()) throw OrderError("TruncSeries: valuation of zero series");
    return c_.begin()->first;
  }

  R coeff(int k) const {
    if (k > order_)
      throw OrderError("TruncSeries: coefficient beyond validity order requested");
    auto it = c_.find(k);
    return it == c_.end() ? R{} : it->second;
  }

  void set(int k, R c) {
    if (k > order_) return;
    if (c == R{}) c_.erase(k);
    else c_[k] = std::move(c);
  }

  void add_to(int k, const R& c) {
    if (k > order_) return;
    auto it = c_.find(k);
    if (it == c_.end()) {
      if (!(c == R{})) c_[k] = c;
    } else {
      it->second = it->second + c;
      if (it->second == R{}) c_.erase(it);
    }
  }

  const std::map<int, R>& terms() const { return c_; }

  TruncSeries operator-() const {
    TruncSeries r(order_);
    for (const auto& [k, c] : c_) r.c_[k] = -c;
    return r;
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(std::min(a.order_, b.order_));
    for (const auto& [k, c] : a.c_) r.add_to(k, c);
    for (const auto& [k, c] : b.c_) r.add_to(k, c);
    return r;
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    return a + (-b);
  }

  /// Product with order tracking: ord(ab) = min(ord(a)+val(b), ord(b)+val(a)).
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    if (a.is_zero() || b.is_zero()) return TruncSeries();
    long ord;
    if (a.is_exact() && b.is_exact()) ord = kExact;
    else {
      long oa = a.is_exact() ? kExact : a.order_ + b.min_exponent();
      long ob = b.is_exact() ? kExact : b.order_ + a.min_exponent();
      ord = std::min(oa, ob);
    }
    TruncSeries r(ord);
    for (const auto& [i, ci] : a.c_)
      for (const auto& [j, cj] : b.c_) {
        long k = static_cast<long>(i) + j;
        if (k > ord) continue;
        r.add_to(static_cast<int>(k), ci * cj);  // left factor first: R may be noncommutative
      }
    return r;
  }

  TruncSeries scaled(const Rat& c) const {
    TruncSeries r(order_);
    for (const auto& [k, x] : c_) {
      R y = scale(c, x);
      if (!(y == R{})) r.c_[k] = std::move(y);
    }
    return r;
  }

  /// Multiplication by the exact monomial u^{-d}.
  TruncSeries shifted(int d) const {
    TruncSeries r(is_exact() ? kExact : order_ + d);
    for (const auto& [k, x] : c_) r.c_[k + d] = x;
    return r;
  }

  /// Substitution u -> q*u (coefficient at u^{-k} scales by q^{-k}).
  TruncSeries variable_scaled(const Rat& q) const {
    if (q.is_zero()) throw BadParam("variable_scaled: q = 0");
    TruncSeries r(order_);
    for (const auto& [k, x] : c_) {
      R y = scale(q.pow(-k), x);
      if (!(y == R{})) r.c_[k] = std::move(y);
    }
    return r;
  }

  /// Formal d/du: u^{-k} -> -k u^{-k-1}.
  TruncSeries derivative_u() const {
    TruncSeries r(is_exact() ? kExact : order_ + 1);
    for (const auto& [k, x] : c_) {
      if (k == 0) continue;
      R y = scale(Rat(-k), x);
      if (!(y == R{})) r.c_[k + 1] = std::move(y);
    }
    return r;
  }

  /// Repeated product, dropping exponents beyond cap to bound the work.
  TruncSeries pow(int e, long cap) const {
    if (e < 0) throw BadParam("TruncSeries::pow: negative exponent");
    TruncSeries r = constant(R{1});
    for (int i = 0; i < e; ++i) {
      r = r * *this;
      r.clamp_order(cap);
    }
    return r;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    long ord = std::min(a.order_, b.order_);
    for (const auto& [k, c] : a.c_)
      if (k <= ord && !(c == b.coeff(k))) return false;
    for (const auto& [k, c] : b.c_)
      if (k <= ord && !(c == a.coeff(k))) return false;
    return true;
  }

  std::string str(const std::string& var = "u") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : c_) {
      if (!first) os << " + ";
      os << "(" << c << ")";
      if (k != 0) os << "*" << var << "^" << -k;
      first = false;
    }
    if (!is_exact()) os << " + O(" << var << "^" << -(order_ + 1) << ")";
    return os.str();
  }

 private:
  void prune() {
    for (auto it = c_.begin(); it != c_.end();)
      it = (it->first > order_) ? c_.erase(it) : std::next(it);
  }

  std::map<int, R> c_;
  long order_;
};

using RatSeries = TruncSeries<Rat>;

/// Multiplicative inverse of a series with invertible leading term, valid to
/// the requested order.
inline RatSeries series_inverse(const RatSeries& f, long order) {
  if (f.is_zero()) throw BadParam("series_inverse: zero series");
  int v = f.min_exponent();
  if (!f.is_exact() && f.valid_order() - 2L * v < order)
    throw OrderError("series_inverse: input order insufficient");
  Rat lead = f.coeff(v);
  // f = lead * t^v * (1 + eps), eps of positive valuation.
  long n = std::max(order + v, 0L);  // needed order of (1+eps)^{-1}
  RatSeries eps(f.is_exact() ? RatSeries::kExact : f.valid_order() - v);
  for (const auto& [k, c] : f.terms()) {
    if (k == v) continue;
    eps.set(k - v, c / lead);
  }
  eps.clamp_order(n);
  RatSeries geom = RatSeries::constant(Rat(1));
  geom.clamp_order(n);
  if (!eps.is_zero()) {
    if (eps.min_exponent() <= 0)
      throw BadParam("series_inverse: leading term not dominant");
    RatSeries acc = geom;
    int ev = eps.min_exponent();
    for (long i = 1; i * ev <= n; ++i) {
      acc = acc * (-eps);
      acc.clamp_order(n);
      geom = geom + acc;
    }
  }
  RatSeries r = geom.shifted(-v).scaled(lead.inv());
  r.clamp_order(order);
  return r;
}

/// Coefficientwise operator L^c: the stored coefficient at u^{-k} gets
/// multiplied by c(k). The input must contain no positive powers of u.
template <typename R>
TruncSeries<R> l_apply(const std::function<Rat(int)>& c, const TruncSeries<R>& f) {
  if (!f.is_zero() && f.min_exponent() < 0)
    throw WindowViolation("l_apply: series has positive powers of u");
  TruncSeries<R> r(f.valid_order());
  for (const auto& [k, x] : f.terms()) {
    R y = scale(c(k), x);
    if (!(y == R{})) r.set(k, std::move(y));
  }
  return r;
}

/// Substitution f(phi(u)) truncated at `order`.
///
/// phi must behave like u*(1 + O(1/u)), or be exactly gamma/u with f exact;
/// any other leading behavior would draw on infinitely many coefficients of
/// f inside the window and is rejected.
template <typename R>
TruncSeries<R> series_compose(const TruncSeries<R>& f, const RatSeries& phi,
                              long order) {
  if (f.is_zero()) return TruncSeries<R>();
  if (phi.is_zero()) throw IncomposableLeadingTerm("series_compose: phi = 0");
  int v = phi.min_exponent();
  if (v == -1) {
    if (!phi.is_exact() && phi.valid_order() < order)
      throw OrderError("series_compose: phi order too small");
    TruncSeries<R> result(std::min<long>(order, f.is_exact() ? order : f.valid_order()));
    RatSeries pinv = series_inverse(phi, order);  // valuation +1
    RatSeries pk = RatSeries::constant(Rat(1));
    pk.clamp_order(order);
    int cur = 0;
    for (const auto& [k, ck] : f.terms()) {
      if (k < 0) continue;
      while (cur < k) {
        pk = pk * pinv;
        pk.clamp_order(order);
        ++cur;
      }
      for (const auto& [e, c] : pk.terms()) result.add_to(e, scale(c, ck));
    }
    // positive powers of u in f: multiply by phi itself, keeping the natural
    // validity bound (phi has valuation -1, so each product costs one order;
    // callers pad phi accordingly)
    RatSeries pj = RatSeries::constant(Rat(1));
    int curj = 0;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
      int k = it->first;
      if (k >= 0) continue;
      while (curj < -k) {
        pj = pj * phi;
        ++curj;
      }
      if (pj.valid_order() < order)
        throw OrderError("series_compose: phi order insufficient for u^" +
                         std::to_string(-k));
      for (const auto& [e, c] : pj.terms()) result.add_to(e, scale(c, it->second));
    }
    return result;
  }
  if (v == 1) {
    if (phi.terms().size() != 1)
      throw IncomposableLeadingTerm(
          "series_compose: phi ~ 1/u with a tail; every truncated coefficient "
          "of f would contribute inside the window");
    if (!f.is_exact())
      throw IncomposableLeadingTerm(
          "series_compose: phi ~ 1/u inverts the window; the discarded tail "
          "of f would contribute at every order");
    Rat gamma = phi.coeff(1);
    TruncSeries<R> result;  // exact
    for (const auto& [k, ck] : f.terms()) {
      R y = scale(gamma.pow(k), ck);
      if (!(y == R{})) result.set(-k, std::move(y));
    }
    result.clamp_order(order);
    return result;
  }
  throw IncomposableLeadingTerm(
      "series_compose: phi must be u*(1+O(1/u)) or gamma/u, got valuation " +
      std::to_string(v));
}

/// Formal residue pairing on Laurent polynomials in z: (1/2*pi*i) times the
/// contour integral of g(z) dz/z, i.e. the coefficient of z^0. Exponent k in
/// the series convention stores z^{-k}.
template <typename R>
R residue_pairing(const TruncSeries<R>& g) {
  if (!g.is_exact())
    throw OrderError("residue_pairing: needs an exact Laurent polynomial");
  return g.coeff(0);
}

}  // namespace oyang
