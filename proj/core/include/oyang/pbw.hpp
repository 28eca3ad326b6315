#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "oyang/errors.hpp"
#include "oyang/rat.hpp"
#include "oyang/upoly.hpp"

namespace oyang {

/// Normal-ordered monomial in the matrix units E_ij of gl_n. The product is
/// written with index pairs strictly decreasing left to right in the
/// lexicographic order on (i, j); internally the factor codes ascend, with
/// code = (n-i)*n + (n-j).
struct PBWMonomial {
  std::vector<std::pair<std::uint8_t, std::uint8_t>> factors;  // (gen, exp)

  bool operator==(const PBWMonomial&) const = default;
  bool empty() const { return factors.empty(); }
  int degree() const {
    int d = 0;
    for (auto& [g, e] : factors) d += e;
    return d;
  }
  /// Canonical order: by total degree, then lexicographically on factors.
  bool operator<(const PBWMonomial& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da < db;
    return factors < o.factors;
  }
};

struct PBWMonomialHash {
  std::size_t operator()(const PBWMonomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto& [g, e] : m.factors) {
      h = (h ^ g) * 1099511628211ull;
      h = (h ^ e) * 1099511628211ull;
    }
    return h;
  }
};

namespace detail {
/// Normal ordering of (monomial * E_gen) with integer coefficients,
/// memoized per rank. The straightening rule is
/// [E_ij, E_kl] = delta_jk E_il - delta_li E_kj.
const std::vector<std::pair<PBWMonomial, Rat>>& mono_times_gen(int n,
                                                               const PBWMonomial& m,
                                                               int gen);
std::string gen_name(int n, int gen);

inline int encode_gen(int n, int i, int j) { return (n - i) * n + (n - j); }
inline std::pair<int, int> decode_gen(int n, int code) {
  return {n - code / n, n - code % n};
}
}  // namespace detail

template <typename R>
R pbw_lift(const Rat& c) { return R(c); }
template <>
inline Rat pbw_lift<Rat>(const Rat& c) { return c; }

/// Element of U(gl_n): sparse map from normal-ordered monomials to exact
/// coefficients in R (R = Rat for plain elements, RatFn1 for elements with
/// rational-function coefficients in a spectral parameter).
template <typename R = Rat>
class BasicPBW {
 public:
  using Terms = std::unordered_map<PBWMonomial, R, PBWMonomialHash>;

  BasicPBW() : n_(0) {}
  explicit BasicPBW(int n) : n_(n) {}

  static BasicPBW unit(int n, R c = R{1}) {
    BasicPBW x(n);
    x.add_term(PBWMonomial{}, std::move(c));
    return x;
  }
  static BasicPBW generator(int n, int i, int j, R c = R{1}) {
    BasicPBW x(n);
    PBWMonomial m;
    m.factors.push_back({static_cast<std::uint8_t>(detail::encode_gen(n, i, j)), 1});
    x.add_term(std::move(m), std::move(c));
    return x;
  }

  int rank() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  void add_term(PBWMonomial m, R c) {
    if (c == R{}) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) terms_.emplace(std::move(m), std::move(c));
    else {
      it->second = it->second + c;
      if (it->second == R{}) terms_.erase(it);
    }
  }

  R coeff(const PBWMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? R{} : it->second;
  }

  BasicPBW operator-() const {
    BasicPBW r(n_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  BasicPBW& operator+=(const BasicPBW& o) {
    merge_rank(o);
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BasicPBW& operator-=(const BasicPBW& o) {
    merge_rank(o);
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend BasicPBW operator+(BasicPBW a, const BasicPBW& b) { return a += b; }
  friend BasicPBW operator-(BasicPBW a, const BasicPBW& b) { return a -= b; }

  BasicPBW scaled(const R& c) const {
    BasicPBW r(n_);
    if (c == R{}) return r;
    for (auto& [m, x] : terms_) r.add_term(m, c * x);
    return r;
  }

  friend BasicPBW operator*(const BasicPBW& a, const BasicPBW& b) {
    int n = a.n_ ? a.n_ : b.n_;
    if (a.n_ && b.n_ && a.n_ != b.n_)
      throw RankMismatch("BasicPBW: product of elements of different rank");
    BasicPBW r(n);
    for (auto& [mb, cb] : b.terms_) {
      // multiply the whole left element by mb generator by generator
      BasicPBW cur(n);
      for (auto& [ma, ca] : a.terms_) cur.add_term(ma, ca * cb);
      for (auto& [g, e] : mb.factors)
        for (int t = 0; t < e; ++t) cur = cur.times_gen(g);
      r += cur;
    }
    return r;
  }

  friend BasicPBW commutator(const BasicPBW& a, const BasicPBW& b) {
    return a * b - b * a;
  }

  friend bool operator==(const BasicPBW& a, const BasicPBW& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto& [m, c] : a.terms_) {
      auto it = b.terms_.find(m);
      if (it == b.terms_.end() || !(it->second == c)) return false;
    }
    return true;
  }
  friend bool operator!=(const BasicPBW& a, const BasicPBW& b) { return !(a == b); }

  /// Canonical readable form with monomials in (degree, lex) order.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<const PBWMonomial*> keys;
    keys.reserve(terms_.size());
    for (auto& [m, c] : terms_) keys.push_back(&m);
    std::sort(keys.begin(), keys.end(),
              [](const PBWMonomial* x, const PBWMonomial* y) { return *x < *y; });
    std::string out;
    bool first = true;
    for (const PBWMonomial* m : keys) {
      if (!first) out += " + ";
      std::ostringstream os;
      os << "(" << terms_.at(*m) << ")";
      out += os.str();
      for (auto& [g, e] : m->factors) {
        out += "*" + detail::gen_name(n_, g);
        if (e > 1) out += "^" + std::to_string(static_cast<int>(e));
      }
      first = false;
    }
    return out;
  }

 private:
  void merge_rank(const BasicPBW& o) {
    if (n_ == 0) n_ = o.n_;
    else if (o.n_ != 0 && o.n_ != n_)
      throw RankMismatch("BasicPBW: mixing ranks " + std::to_string(n_) + " and " +
                         std::to_string(o.n_));
  }

  BasicPBW times_gen(int g) const {
    BasicPBW r(n_);
    for (auto& [m, c] : terms_) {
      for (auto& [m2, q] : detail::mono_times_gen(n_, m, g)) {
        R add = c * pbw_lift<R>(q);
        r.add_term(m2, std::move(add));
      }
    }
    return r;
  }

  int n_;
  Terms terms_;
};

using PBWElement = BasicPBW<Rat>;
using SPBW = BasicPBW<RatFn1>;  // coefficients rational in a spectral variable

inline PBWElement scale(const Rat& c, const PBWElement& x) { return x.scaled(c); }
inline SPBW scale(const Rat& c, const SPBW& x) { return x.scaled(RatFn1(c)); }

/// Evaluate the spectral variable of every coefficient.
inline PBWElement eval_spectral(const SPBW& x, const Rat& s) {
  PBWElement r(x.rank());
  for (auto& [m, c] : x.terms()) r.add_term(m, c.eval(s));
  return r;
}

/// Normal-ordered product of two monomials, memoized.
const PBWElement& mono_product(int n, const PBWMonomial& a, const PBWMonomial& b);

/// (E^r)_{ij} with the left-to-right convention
/// (E^{r+1})_{ij} = sum_k (E^r)_{ik} E_{kj}; results are memoized.
const PBWElement& matrix_power_entry(int n, int r, int i, int j);

/// (p(E))_{ij} = sum_l p_l (E^l)_{ij}.
PBWElement poly_of_matrix_entry(const UPoly& p, int n, int i, int j);

}  // namespace oyang
