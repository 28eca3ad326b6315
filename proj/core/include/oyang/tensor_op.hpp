#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "oyang/errors.hpp"
#include "oyang/pbw.hpp"
#include "oyang/rat.hpp"

namespace oyang {

/// Kronecker index helpers for (C^n)^(x)m, tuples encoded base-n with leg 1
/// as the most significant digit.
struct LegIndex {
  int n, m;
  long dim() const {
    long d = 1;
    for (int i = 0; i < m; ++i) d *= n;
    return d;
  }
  int digit(long code, int leg) const {  // leg in 1..m, returns value in 1..n
    for (int i = m; i > leg; --i) code /= n;
    return static_cast<int>(code % n) + 1;
  }
  long with_digit(long code, int leg, int value) const {
    long scale = 1;
    for (int i = m; i > leg; --i) scale *= n;
    int old = digit(code, leg) - 1;
    return code + (static_cast<long>(value - 1) - old) * scale;
  }
  long swap_digits(long code, int leg_a, int leg_b) const {
    int a = digit(code, leg_a), b = digit(code, leg_b);
    return with_digit(with_digit(code, leg_a, b), leg_b, a);
  }
};

/// Sparse n^m x n^m matrix over a ring R acting on (C^n)^(x)m.
template <typename R>
class TensorOperator {
 public:
  TensorOperator(int n, int m) : idx_{n, m} {}

  const LegIndex& legs() const { return idx_; }
  long dim() const { return idx_.dim(); }
  bool is_zero() const { return c_.empty(); }

  static TensorOperator identity(int n, int m, R unit) {
    TensorOperator op(n, m);
    for (long d = 0; d < op.dim(); ++d) op.add(d, d, unit);
    return op;
  }

  R entry(long row, long col) const {
    auto it = c_.find({row, col});
    return it == c_.end() ? R{} : it->second;
  }
  const std::map<std::pair<long, long>, R>& entries() const { return c_; }

  void add(long row, long col, R x) {
    if (x == R{}) return;
    auto key = std::make_pair(row, col);
    auto it = c_.find(key);
    if (it == c_.end()) c_.emplace(key, std::move(x));
    else {
      it->second = it->second + x;
      if (it->second == R{}) c_.erase(it);
    }
  }

  TensorOperator operator-() const {
    TensorOperator r(idx_.n, idx_.m);
    for (auto& [k, x] : c_) r.c_.emplace(k, -x);
    return r;
  }
  friend TensorOperator operator+(const TensorOperator& a, const TensorOperator& b) {
    a.check_shape(b);
    TensorOperator r = a;
    for (auto& [k, x] : b.c_) r.add(k.first, k.second, x);
    return r;
  }
  friend TensorOperator operator-(const TensorOperator& a, const TensorOperator& b) {
    return a + (-b);
  }
  friend TensorOperator operator*(const TensorOperator& a, const TensorOperator& b) {
    a.check_shape(b);
    // group b's entries by row for the sparse product
    std::map<long, std::vector<std::pair<long, const R*>>> rows;
    for (auto& [k, x] : b.c_) rows[k.first].push_back({k.second, &x});
    TensorOperator r(a.idx_.n, a.idx_.m);
    for (auto& [k, x] : a.c_) {
      auto it = rows.find(k.second);
      if (it == rows.end()) continue;
      for (auto& [col, y] : it->second) r.add(k.first, col, x * (*y));
    }
    return r;
  }

  TensorOperator scaled(const Rat& q) const {
    TensorOperator r(idx_.n, idx_.m);
    for (auto& [k, x] : c_) {
      R y = scale(q, x);
      if (!(y == R{})) r.c_.emplace(k, std::move(y));
    }
    return r;
  }

  friend bool operator==(const TensorOperator& a, const TensorOperator& b) {
    return (a - b).is_zero();
  }
  friend bool operator!=(const TensorOperator& a, const TensorOperator& b) {
    return !(a == b);
  }

  /// First nonzero entry of the difference, for witnesses.
  std::string describe_first_entry() const {
    if (c_.empty()) return "0";
    auto& [k, x] = *c_.begin();
    std::ostringstream os;
    os << "entry (" << k.first << "," << k.second << "): ";
    if constexpr (requires { x.str(); }) os << x.str();
    else os << x;
    return os.str();
  }

 private:
  void check_shape(const TensorOperator& o) const {
    if (idx_.n != o.idx_.n || idx_.m != o.idx_.m)
      throw RankMismatch("TensorOperator: shape mismatch");
  }

  LegIndex idx_;
  std::map<std::pair<long, long>, R> c_;
};

/// Permutation operator P swapping legs a and b.
template <typename R>
TensorOperator<R> perm_op(int n, int m, int leg_a, int leg_b, R unit) {
  TensorOperator<R> op(n, m);
  LegIndex idx{n, m};
  for (long d = 0; d < idx.dim(); ++d) op.add(idx.swap_digits(d, leg_a, leg_b), d, unit);
  return op;
}

/// Unnormalized antisymmetrizer A_m = sum_p sgn(p) P_p; A_m^2 = m! A_m.
template <typename R>
TensorOperator<R> antisym_op(int n, int m, R unit) {
  TensorOperator<R> op(n, m);
  LegIndex idx{n, m};
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  auto sign_of = [](const std::vector<int>& p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) s = -s;
    return s;
  };
  do {
    int sgn = sign_of(perm);
    for (long d = 0; d < idx.dim(); ++d) {
      // A_m e_{i_1...i_m} = sum_p sgn(p) e_{i_{p(1)}...i_{p(m)}}
      long out = 0;
      for (int leg = 1; leg <= m; ++leg) {
        out = out * n + (idx.digit(d, perm[leg - 1] + 1) - 1);
      }
      R val = sgn > 0 ? unit : -unit;
      op.add(out, d, val);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return op;
}

/// R_{ab}(x) = I - P_{ab}/x on legs (a, b).
template <typename R>
TensorOperator<R> r_op(int n, int m, int leg_a, int leg_b, const Rat& x, R unit) {
  if (x.is_zero()) throw DegenerateArgument("r_op: coincident spectral values");
  return TensorOperator<R>::identity(n, m, unit) -
         perm_op<R>(n, m, leg_a, leg_b, unit).scaled(x.inv());
}

/// Fused product R_{m-1,m} (R_{m-2,m} R_{m-2,m-1}) ... (R_{1,m} ... R_{12})
/// with R_{ij} depending on args[i] - args[j].
template <typename R>
TensorOperator<R> fused_r_op(int n, int m, const std::vector<Rat>& args, R unit) {
  if (static_cast<int>(args.size()) != m)
    throw BadParam("fused_r_op: need one spectral value per leg");
  TensorOperator<R> acc = TensorOperator<R>::identity(n, m, unit);
  for (int i = m - 1; i >= 1; --i)
    for (int j = m; j >= i + 1; --j)
      acc = acc * r_op<R>(n, m, i, j, args[i - 1] - args[j - 1], unit);
  return acc;
}

/// Embeds an n x n matrix of ring elements as an operator on one leg.
template <typename R>
TensorOperator<R> leg_op(int n, int m, int leg,
                         const std::vector<std::vector<R>>& mat) {
  TensorOperator<R> op(n, m);
  LegIndex idx{n, m};
  for (long d = 0; d < idx.dim(); ++d) {
    int col = idx.digit(d, leg);
    for (int row = 1; row <= n; ++row) {
      const R& x = mat[row - 1][col - 1];
      if (x == R{}) continue;
      op.add(idx.with_digit(d, leg, row), d, x);
    }
  }
  return op;
}

}  // namespace oyang
