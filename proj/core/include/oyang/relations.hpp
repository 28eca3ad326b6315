#pragma once

#include <map>
#include <optional>

#include "oyang/check.hpp"
#include "oyang/pbw.hpp"
#include "oyang/recurrence.hpp"
#include "oyang/series.hpp"
#include "oyang/tensor_pbw.hpp"

namespace oyang {

/// Realization of the deformed generators inside U(gl_n):
/// t^{(r)}_{ij} = (p_r(E))_{ij}, with t^{(-1)} = 0 and t^{(0)} = delta.
class OYRealization {
 public:
  OYRealization(const RecurrenceFamily& fam, int n, int rmax);
  /// Realization by an explicit polynomial sequence (row r = p_r).
  OYRealization(std::vector<UPoly> polys, int n);

  int rank() const { return n_; }
  int rmax() const { return static_cast<int>(polys_.size()) - 1; }
  const UPoly& poly(int r) const { return polys_.at(r); }
  const PBWElement& t(int r, int i, int j) const;

 private:
  void build();
  int n_;
  std::vector<UPoly> polys_;
  std::vector<std::vector<std::vector<PBWElement>>> gens_;  // [r][i-1][j-1]
  PBWElement zero_;
};

/// Two-variable truncated series with coefficients in a (possibly
/// noncommutative) ring; exponent (r, s) stores the coefficient of
/// u^{-r} v^{-s}. Validity orders are tracked per variable.
template <typename R>
struct BiSeries {
  std::map<std::pair<int, int>, R> c;
  long ou, ov;

  explicit BiSeries(long ou_ = TruncSeries<R>::kExact, long ov_ = TruncSeries<R>::kExact)
      : ou(ou_), ov(ov_) {}

  R coeff(int r, int s) const {
    if (r > ou || s > ov) throw OrderError("BiSeries: beyond validity order");
    auto it = c.find({r, s});
    return it == c.end() ? R{} : it->second;
  }
  void add_to(int r, int s, const R& x) {
    if (r > ou || s > ov) return;
    auto it = c.find({r, s});
    if (it == c.end()) {
      if (!(x == R{})) c.emplace(std::make_pair(r, s), x);
    } else {
      it->second = it->second + x;
      if (it->second == R{}) c.erase(it);
    }
  }

  /// Ordered product of a pure-u series and a pure-v series. Coefficients
  /// with total exponent beyond total_cap are never formed; callers read
  /// only within the cap.
  static BiSeries outer(const TruncSeries<R>& fu, const TruncSeries<R>& fv,
                        long total_cap = TruncSeries<R>::kExact) {
    BiSeries r(fu.valid_order(), fv.valid_order());
    for (auto& [i, a] : fu.terms())
      for (auto& [j, b] : fv.terms()) {
        if (static_cast<long>(i) + j > total_cap) continue;
        r.add_to(i, j, a * b);
      }
    return r;
  }

  friend BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    BiSeries r(std::min(a.ou, b.ou), std::min(a.ov, b.ov));
    for (auto& [k, x] : a.c) r.add_to(k.first, k.second, x);
    for (auto& [k, x] : b.c) r.add_to(k.first, k.second, x);
    return r;
  }
  friend BiSeries operator-(const BiSeries& a, const BiSeries& b) {
    return a + b.scaled(Rat(-1));
  }
  BiSeries scaled(const Rat& q) const {
    BiSeries r(ou, ov);
    for (auto& [k, x] : c) {
      R y = scale(q, x);
      if (!(y == R{})) r.c.emplace(k, std::move(y));
    }
    return r;
  }

  /// Multiplication by u: coefficient (r, s) of u*f is f(r+1, s).
  BiSeries mul_u() const {
    BiSeries r(ou - 1, ov);
    for (auto& [k, x] : c) r.add_to(k.first - 1, k.second, x);
    return r;
  }
  BiSeries mul_v() const {
    BiSeries r(ou, ov - 1);
    for (auto& [k, x] : c) r.add_to(k.first, k.second - 1, x);
    return r;
  }
  /// Coefficientwise operator in the u-exponent.
  BiSeries l_u(const std::function<Rat(int)>& w) const {
    BiSeries r(ou, ov);
    for (auto& [k, x] : c) r.add_to(k.first, k.second, scale(w(k.first), x));
    return r;
  }
  BiSeries l_v(const std::function<Rat(int)>& w) const {
    BiSeries r(ou, ov);
    for (auto& [k, x] : c) r.add_to(k.first, k.second, scale(w(k.second), x));
    return r;
  }
  /// Multiplication by u^{-1} weighted in the u-exponent: (1/u) L^w_u.
  BiSeries shift_u(const std::function<Rat(int)>& w) const {
    BiSeries r(ou + 1, ov);
    for (auto& [k, x] : c) r.add_to(k.first + 1, k.second, scale(w(k.first), x));
    return r;
  }
  BiSeries shift_v(const std::function<Rat(int)>& w) const {
    BiSeries r(ou, ov + 1);
    for (auto& [k, x] : c) r.add_to(k.first, k.second + 1, scale(w(k.second), x));
    return r;
  }
  /// Substitution u -> q*u.
  BiSeries scale_u(const Rat& q) const {
    BiSeries r(ou, ov);
    for (auto& [k, x] : c) r.add_to(k.first, k.second, scale(q.pow(-k.first), x));
    return r;
  }
  BiSeries scale_v(const Rat& q) const {
    BiSeries r(ou, ov);
    for (auto& [k, x] : c) r.add_to(k.first, k.second, scale(q.pow(-k.second), x));
    return r;
  }
  /// Exchange of the exponents (r,s) -> (s,r); coefficients (and hence the
  /// noncommutative product order inside them) are untouched. outer(A, B)
  /// transposed gives the coefficients of B(v)A(u)-style products.
  BiSeries transposed() const {
    BiSeries r(ov, ou);
    for (auto& [k, x] : c) r.add_to(k.second, k.first, x);
    return r;
  }
};

/// Compares two bivariate series coefficientwise on r+s <= maxtotal; the
/// perturbed variant shifts the (0,0) difference by one before testing.
std::pair<bool, std::string> bi_compare(const BiSeries<PBWElement>& lhs,
                                        const BiSeries<PBWElement>& rhs, int maxtotal,
                                        int rank, bool perturb);

struct GridOptions {
  int jobs = 1;
  std::optional<std::size_t> perturb;  // negative-control target task
};

/// [(E^{r+1})_ij, (E^s)_kl] - [(E^r)_ij, (E^{s+1})_kl]
///   = (E^r)_kj (E^s)_il - (E^s)_kj (E^r)_il over the full index grid.
std::vector<CheckRecord> check_base_identity(int n, int rmax, int smax,
                                             const GridOptions& opt = {});

/// Deformed defining relations for t^{(r)} = (p_r(E)) over the grid.
std::vector<CheckRecord> check_oy_relations(const RecurrenceFamily& fam, int n,
                                            int rmax, int smax,
                                            const GridOptions& opt = {});

/// Generating-function form of the relations, checked coefficientwise to
/// order N and cross-checked term-by-term against the grid form.
std::vector<CheckRecord> check_series_relation(const RecurrenceFamily& fam, int n,
                                               int N, const GridOptions& opt = {});

/// [omega(u), omega(v)] = 0 for omega = tr T(u).
std::vector<CheckRecord> check_omega(const RecurrenceFamily& fam, int n, int rmax,
                                     int smax, const GridOptions& opt = {});

/// q-Pochhammer relations: coefficient grid, series form to order N, and the
/// rescaled series form for one fixed index.
std::vector<CheckRecord> check_pochhammer(const Rat& q, int n, int rmax, int smax,
                                          int N, const GridOptions& opt = {});

/// Quantum Christoffel-Darboux suite in U(gl_N) (x) U(gl_N): the two-leg
/// commutator identity, its s=0 corollary, the constant-a corollary and the
/// constant-(a,b) two-parameter corollary.
std::vector<CheckRecord> check_cd(const RecurrenceFamily& fam, int N_gl, int n_sum,
                                  int smax, const GridOptions& opt = {});

}  // namespace oyang
