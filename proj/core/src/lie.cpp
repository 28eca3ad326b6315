#include "oyang/lie.hpp"

#include <sstream>
#include <tuple>

namespace oyang {

RatMatrix zero_matrix(int rows, int cols) {
  return RatMatrix(rows, RatVector(cols, Rat(0)));
}

RatMatrix identity_matrix(int n) {
  RatMatrix m = zero_matrix(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = Rat(1);
  return m;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  int n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMatrix r = zero_matrix(n, m);
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < k; ++p) {
      if (a[i][p].is_zero()) continue;
      for (int j = 0; j < m; ++j) r[i][j] += a[i][p] * b[p][j];
    }
  return r;
}

RatMatrix mat_sub(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] -= b[i][j];
  return r;
}

RatMatrix mat_commutator(const RatMatrix& a, const RatMatrix& b) {
  return mat_sub(mat_mul(a, b), mat_mul(b, a));
}

bool mat_is_zero(const RatMatrix& a) {
  for (auto& row : a)
    for (auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

std::vector<RatVector> row_space_basis(std::vector<RatVector> rows) {
  std::vector<RatVector> basis;
  for (auto& v : rows) {
    RatVector w = v;
    for (auto& b : basis) {
      // eliminate using the pivot of b
      std::size_t p = 0;
      while (p < b.size() && b[p].is_zero()) ++p;
      if (p < w.size() && !w[p].is_zero()) {
        Rat f = w[p] / b[p];
        for (std::size_t k = 0; k < w.size(); ++k) w[k] -= f * b[k];
      }
    }
    std::size_t p = 0;
    while (p < w.size() && w[p].is_zero()) ++p;
    if (p == w.size()) continue;
    Rat inv = w[p].inv();
    for (auto& x : w) x *= inv;
    // back-eliminate to keep the basis reduced
    for (auto& b : basis)
      if (!b[p].is_zero()) {
        Rat f = b[p];
        for (std::size_t k = 0; k < b.size(); ++k) b[k] -= f * w[k];
      }
    basis.push_back(std::move(w));
  }
  // sort rows by pivot position for determinism
  std::sort(basis.begin(), basis.end(), [](const RatVector& x, const RatVector& y) {
    std::size_t px = 0, py = 0;
    while (px < x.size() && x[px].is_zero()) ++px;
    while (py < y.size() && y[py].is_zero()) ++py;
    return px < py;
  });
  return basis;
}

int rank_of(std::vector<RatVector> rows) {
  return static_cast<int>(row_space_basis(std::move(rows)).size());
}

std::optional<RatVector> coordinates_in(const std::vector<RatVector>& basis,
                                        const RatVector& v) {
  RatVector w = v, coords(basis.size(), Rat(0));
  for (std::size_t bi = 0; bi < basis.size(); ++bi) {
    const auto& b = basis[bi];
    std::size_t p = 0;
    while (p < b.size() && b[p].is_zero()) ++p;
    if (p < w.size() && !w[p].is_zero()) {
      Rat f = w[p] / b[p];
      coords[bi] = f;
      for (std::size_t k = 0; k < w.size(); ++k) w[k] -= f * b[k];
    }
  }
  for (auto& x : w)
    if (!x.is_zero()) return std::nullopt;
  return coords;
}

LieAlgebraSC::LieAlgebraSC(std::string name, int dim,
                           const std::vector<std::tuple<int, int, RatVector>>& brackets)
    : name_(std::move(name)), dim_(dim),
      c_(dim, std::vector<RatVector>(dim, RatVector(dim, Rat(0)))) {
  for (auto& [i, j, v] : brackets) {
    if (i < 1 || i > dim || j < 1 || j > dim || static_cast<int>(v.size()) != dim)
      throw BadParam("LieAlgebraSC: bad bracket spec in " + name_);
    for (int k = 0; k < dim; ++k) {
      c_[i - 1][j - 1][k] = v[k];
      c_[j - 1][i - 1][k] = -v[k];
    }
  }
  validate();
}

void LieAlgebraSC::validate() const {
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k)
      if (!c_[i][i][k].is_zero())
        throw JacobiViolation(name_ + ": [e_i, e_i] != 0");
  // Jacobi: [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] = 0
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        RatVector lhs(dim_, Rat(0));
        auto add_term = [&](int a, const RatVector& inner) {
          // [e_a, inner]
          for (int m = 0; m < dim_; ++m) {
            if (inner[m].is_zero()) continue;
            for (int t = 0; t < dim_; ++t) lhs[t] += inner[m] * c_[a][m][t];
          }
        };
        add_term(i, c_[j][k]);
        add_term(j, c_[k][i]);
        add_term(k, c_[i][j]);
        for (auto& x : lhs)
          if (!x.is_zero())
            throw JacobiViolation(name_ + ": Jacobi identity fails at (" +
                                  std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                  "," + std::to_string(k + 1) + ")");
      }
}

RatVector LieAlgebraSC::bracket(const RatVector& x, const RatVector& y) const {
  RatVector r(dim_, Rat(0));
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Rat f = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) r[k] += f * c_[i][j][k];
    }
  }
  return r;
}

RatMatrix LieAlgebraSC::ad(const RatVector& x) const {
  RatMatrix m = zero_matrix(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    RatVector ej(dim_, Rat(0));
    ej[j] = Rat(1);
    RatVector img = bracket(x, ej);
    for (int k = 0; k < dim_; ++k) m[k][j] = img[k];
  }
  return m;
}

RatMatrix LieAlgebraSC::ad_basis(int i) const {
  RatVector x(dim_, Rat(0));
  x[i - 1] = Rat(1);
  return ad(x);
}

LieAlgebraSC LieAlgebraSC::permuted(const std::vector<int>& perm) const {
  // new e'_i = e_{perm[i]}
  std::vector<std::tuple<int, int, RatVector>> brackets;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      RatVector v(dim_, Rat(0));
      const RatVector& img = c_[perm[i]][perm[j]];
      // express img back in the permuted basis
      std::vector<int> inv(dim_);
      for (int k = 0; k < dim_; ++k) inv[perm[k]] = k;
      for (int k = 0; k < dim_; ++k) v[inv[k]] = img[k];
      brackets.push_back({i + 1, j + 1, v});
    }
  return LieAlgebraSC(name_ + "(permuted)", dim_, brackets);
}

LieAlgebraSC LieAlgebraSC::direct_sum(const LieAlgebraSC& a, const LieAlgebraSC& b) {
  int d = a.dim_ + b.dim_;
  std::vector<std::tuple<int, int, RatVector>> brackets;
  auto pad = [&](const RatVector& v, int offset) {
    RatVector r(d, Rat(0));
    for (std::size_t k = 0; k < v.size(); ++k) r[offset + k] = v[k];
    return r;
  };
  for (int i = 0; i < a.dim_; ++i)
    for (int j = i + 1; j < a.dim_; ++j)
      brackets.push_back({i + 1, j + 1, pad(a.c_[i][j], 0)});
  for (int i = 0; i < b.dim_; ++i)
    for (int j = i + 1; j < b.dim_; ++j)
      brackets.push_back({a.dim_ + i + 1, a.dim_ + j + 1, pad(b.c_[i][j], a.dim_)});
  return LieAlgebraSC(a.name_ + "+" + b.name_, d, brackets);
}

namespace {

/// Dimensions of span{[x, y] : x in S, y in T} in the given algebra.
std::vector<RatVector> bracket_span(const LieAlgebraSC& g,
                                    const std::vector<RatVector>& S,
                                    const std::vector<RatVector>& T) {
  std::vector<RatVector> prods;
  for (auto& x : S)
    for (auto& y : T) prods.push_back(g.bracket(x, y));
  return row_space_basis(std::move(prods));
}

std::vector<RatVector> full_basis(int d) {
  std::vector<RatVector> b;
  for (int i = 0; i < d; ++i) {
    RatVector v(d, Rat(0));
    v[i] = Rat(1);
    b.push_back(std::move(v));
  }
  return b;
}

}  // namespace

std::vector<RatVector> nullspace(const std::vector<RatVector>& rows, int dim) {
  auto rref = row_space_basis(rows);
  // pivot columns
  std::vector<bool> is_pivot(dim, false);
  for (auto& r : rref) {
    std::size_t p = 0;
    while (p < r.size() && r[p].is_zero()) ++p;
    if (p < r.size()) is_pivot[p] = true;
  }
  std::vector<RatVector> basis;
  for (int free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(dim, Rat(0));
    v[free] = Rat(1);
    for (auto& r : rref) {
      std::size_t p = 0;
      while (p < r.size() && r[p].is_zero()) ++p;
      if (p < r.size()) v[p] = -r[free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

LieAlgebraSC subalgebra(const LieAlgebraSC& g, const std::vector<RatVector>& span_vecs,
                        const std::string& name) {
  auto basis = row_space_basis(span_vecs);
  int d = static_cast<int>(basis.size());
  std::vector<std::tuple<int, int, RatVector>> brackets;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      RatVector br = g.bracket(basis[i], basis[j]);
      auto coords = coordinates_in(basis, br);
      if (!coords)
        throw BadParam("subalgebra: span of " + name + " not closed under bracket");
      brackets.push_back({i + 1, j + 1, *coords});
    }
  return LieAlgebraSC(name, d, brackets);
}

LieAlgebraSC quotient_by_ideal(const LieAlgebraSC& g,
                               const std::vector<RatVector>& ideal_vecs,
                               const std::string& name) {
  auto ideal = row_space_basis(ideal_vecs);
  int d = g.dim();
  // complete the ideal basis with coordinate vectors
  std::vector<RatVector> full = ideal;
  std::vector<RatVector> complement;
  for (int i = 0; i < d; ++i) {
    RatVector e(d, Rat(0));
    e[i] = Rat(1);
    auto trial = full;
    trial.push_back(e);
    if (rank_of(trial) > static_cast<int>(row_space_basis(full).size())) {
      full.push_back(e);
      complement.push_back(std::move(e));
    }
  }
  int q = static_cast<int>(complement.size());
  // brackets of complement classes, with coordinates obtained by solving
  // the linear system over the combined (ideal, complement) basis
  std::vector<std::tuple<int, int, RatVector>> brackets;
  int m = static_cast<int>(full.size());
  auto solve_coords = [&](const RatVector& v) {
    // gaussian elimination on [full^T | v]
    std::vector<RatVector> a(d, RatVector(m + 1, Rat(0)));
    for (int col = 0; col < m; ++col)
      for (int row = 0; row < d; ++row) a[row][col] = full[col][row];
    for (int row = 0; row < d; ++row) a[row][m] = v[row];
    std::vector<int> pivot_col_of_row;
    int prow = 0;
    for (int col = 0; col < m && prow < d; ++col) {
      int sel = -1;
      for (int r = prow; r < d; ++r)
        if (!a[r][col].is_zero()) {
          sel = r;
          break;
        }
      if (sel < 0) continue;
      std::swap(a[sel], a[prow]);
      Rat inv = a[prow][col].inv();
      for (int cc = 0; cc <= m; ++cc) a[prow][cc] *= inv;
      for (int r = 0; r < d; ++r) {
        if (r == prow || a[r][col].is_zero()) continue;
        Rat f = a[r][col];
        for (int cc = 0; cc <= m; ++cc) a[r][cc] -= f * a[prow][cc];
      }
      pivot_col_of_row.push_back(col);
      ++prow;
    }
    RatVector coords(m, Rat(0));
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
      coords[pivot_col_of_row[r]] = a[r][m];
    return coords;
  };
  int ideal_dim = static_cast<int>(ideal.size());
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) {
      RatVector br = g.bracket(complement[i], complement[j]);
      RatVector coords = solve_coords(br);
      RatVector v(q, Rat(0));
      for (int t = 0; t < q; ++t) v[t] = coords[ideal_dim + t];
      brackets.push_back({i + 1, j + 1, v});
    }
  return LieAlgebraSC(name, q, brackets);
}

std::vector<RatVector> radical_basis(const LieAlgebraSC& g) {
  int d = g.dim();
  auto all = full_basis(d);
  auto derived = bracket_span(g, all, all);
  // rows: x -> K(x, y) for y in the derived algebra
  std::vector<RatMatrix> ads;
  for (int i = 1; i <= d; ++i) ads.push_back(g.ad_basis(i));
  std::vector<RatVector> rows;
  for (auto& y : derived) {
    RatMatrix ady = g.ad(y);
    RatVector row(d, Rat(0));
    for (int i = 0; i < d; ++i) {
      RatMatrix prod = mat_mul(ads[i], ady);
      Rat tr(0);
      for (int k = 0; k < d; ++k) tr += prod[k][k];
      row[i] = tr;
    }
    rows.push_back(std::move(row));
  }
  return nullspace(rows, d);
}

LieSignature signature_of(const LieAlgebraSC& g) {
  LieSignature sig;
  int d = g.dim();
  sig.dim = d;

  auto all = full_basis(d);
  // derived series
  std::vector<RatVector> cur = all;
  sig.derived.push_back(d);
  for (;;) {
    auto next = bracket_span(g, cur, cur);
    int nd = static_cast<int>(next.size());
    if (nd == sig.derived.back()) break;
    sig.derived.push_back(nd);
    cur = std::move(next);
    if (nd == 0) break;
  }
  // lower central series
  cur = all;
  sig.lower_central.push_back(d);
  for (;;) {
    auto next = bracket_span(g, all, cur);
    int nd = static_cast<int>(next.size());
    if (nd == sig.lower_central.back()) break;
    sig.lower_central.push_back(nd);
    cur = std::move(next);
    if (nd == 0) break;
  }
  // center: kernel of x -> (ad_x e_j)_j; rows of the system are indexed by
  // (j, k): sum_i x_i c_{i j}^k = 0
  {
    std::vector<RatVector> rows;  // d*d rows of length d... transpose instead
    // build the d x (d*d) matrix with entry ((j,k), i) = c_{i j}^k, rank r,
    // center dim = d - r
    std::vector<RatVector> cols;
    for (int i = 1; i <= d; ++i) {
      RatMatrix adm = g.ad_basis(i);
      RatVector flat;
      flat.reserve(d * d);
      for (auto& row : adm)
        for (auto& x : row) flat.push_back(x);
      cols.push_back(std::move(flat));
    }
    sig.center = d - rank_of(cols);
  }
  // Killing form rank
  {
    std::vector<RatMatrix> ads;
    for (int i = 1; i <= d; ++i) ads.push_back(g.ad_basis(i));
    std::vector<RatVector> K(d, RatVector(d, Rat(0)));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Rat tr(0);
        RatMatrix prod = mat_mul(ads[i], ads[j]);
        for (int k = 0; k < d; ++k) tr += prod[k][k];
        K[i][j] = tr;
      }
    sig.killing_rank = rank_of(K);
  }
  return sig;
}

std::string LieSignature::str() const {
  std::ostringstream os;
  os << "dim=" << dim << " derived=[";
  for (std::size_t i = 0; i < derived.size(); ++i) os << (i ? "," : "") << derived[i];
  os << "] lower_central=[";
  for (std::size_t i = 0; i < lower_central.size(); ++i)
    os << (i ? "," : "") << lower_central[i];
  os << "] center=" << center << " killing_rank=" << killing_rank;
  return os.str();
}

MatrixAlgebraResult matrix_algebra_from_span(const std::string& name,
                                             const std::vector<RatMatrix>& spanning) {
  MatrixAlgebraResult res;
  if (spanning.empty()) {
    res.algebra = LieAlgebraSC(name, 0, {});
    return res;
  }
  int N = static_cast<int>(spanning[0].size());
  auto flatten = [N](const RatMatrix& m) {
    RatVector v;
    v.reserve(N * N);
    for (auto& row : m)
      for (auto& x : row) v.push_back(x);
    return v;
  };
  std::vector<RatVector> flat;
  for (auto& m : spanning) flat.push_back(flatten(m));
  auto basis_vecs = row_space_basis(std::move(flat));
  int d = static_cast<int>(basis_vecs.size());
  for (auto& v : basis_vecs) {
    RatMatrix m = zero_matrix(N, N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) m[i][j] = v[i * N + j];
    res.basis.push_back(std::move(m));
  }
  std::vector<std::tuple<int, int, RatVector>> brackets;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      RatMatrix br = mat_commutator(res.basis[i], res.basis[j]);
      auto coords = coordinates_in(basis_vecs, flatten(br));
      if (!coords) {
        res.closure_failure = name + ": bracket of basis elements " +
                              std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              " leaves the span";
        return res;
      }
      brackets.push_back({i + 1, j + 1, *coords});
    }
  res.algebra = LieAlgebraSC(name, d, brackets);
  return res;
}

namespace {

RatVector ev(int d, std::initializer_list<std::pair<int, Rat>> entries) {
  RatVector v(d, Rat(0));
  for (auto& [i, c] : entries) v[i - 1] = c;
  return v;
}

LieAlgebraSC from_matrix_units(const std::string& name, int n, bool traceless) {
  // basis of gl_n: E_{ij} ordered row-major; sl_n: E_{ij} (i != j) plus
  // E_{ii} - E_{i+1,i+1}
  std::vector<RatMatrix> basis;
  if (!traceless) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        RatMatrix m = zero_matrix(n, n);
        m[i][j] = Rat(1);
        basis.push_back(std::move(m));
      }
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        RatMatrix m = zero_matrix(n, n);
        m[i][j] = Rat(1);
        basis.push_back(std::move(m));
      }
    for (int i = 0; i + 1 < n; ++i) {
      RatMatrix m = zero_matrix(n, n);
      m[i][i] = Rat(1);
      m[i + 1][i + 1] = Rat(-1);
      basis.push_back(std::move(m));
    }
  }
  auto res = matrix_algebra_from_span(name, basis);
  return *res.algebra;
}

}  // namespace

LieAlgebraSC catalog_algebra(const std::string& name, const Rat& a, const Rat& b) {
  if (name == "A1") return LieAlgebraSC("A1", 1, {});
  if (name == "2A1") return LieAlgebraSC("2A1", 2, {});
  if (name == "A2,1")
    return LieAlgebraSC("A2,1", 2, {{1, 2, ev(2, {{1, Rat(1)}})}});
  if (name == "A3,1")
    return LieAlgebraSC("A3,1", 3, {{2, 3, ev(3, {{1, Rat(1)}})}});
  if (name == "A3,2")
    return LieAlgebraSC("A3,2", 3,
                        {{1, 3, ev(3, {{1, Rat(1)}})},
                         {2, 3, ev(3, {{1, Rat(1)}, {2, Rat(1)}})}});
  if (name == "A3,3")
    return LieAlgebraSC("A3,3", 3,
                        {{1, 3, ev(3, {{1, Rat(1)}})}, {2, 3, ev(3, {{2, Rat(1)}})}});
  if (name == "A3,4")
    return LieAlgebraSC("A3,4(a=" + a.str() + ")", 3,
                        {{1, 3, ev(3, {{1, Rat(1)}})}, {2, 3, ev(3, {{2, a}})}});
  if (name == "A3,5")
    return LieAlgebraSC("A3,5(b=" + b.str() + ")", 3,
                        {{1, 3, ev(3, {{1, b}, {2, Rat(-1)}})},
                         {2, 3, ev(3, {{1, Rat(1)}, {2, b}})}});
  if (name == "sl2")
    return LieAlgebraSC("sl2", 3,
                        {{1, 2, ev(3, {{3, Rat(1)}})},
                         {3, 2, ev(3, {{2, Rat(-2)}})},
                         {3, 1, ev(3, {{1, Rat(2)}})}});
  if (name == "so3")
    return LieAlgebraSC("so3", 3,
                        {{1, 2, ev(3, {{3, Rat(1)}})},
                         {2, 3, ev(3, {{1, Rat(1)}})},
                         {3, 1, ev(3, {{2, Rat(1)}})}});
  if (name == "A4,1")
    return LieAlgebraSC("A4,1", 4,
                        {{2, 4, ev(4, {{1, Rat(1)}})}, {3, 4, ev(4, {{2, Rat(1)}})}});
  if (name == "A4,2")
    return LieAlgebraSC("A4,2(b=" + b.str() + ")", 4,
                        {{1, 4, ev(4, {{1, b}})},
                         {2, 4, ev(4, {{2, Rat(1)}})},
                         {3, 4, ev(4, {{2, Rat(1)}, {3, Rat(1)}})}});
  if (name == "A4,5(1,1,1)")
    return LieAlgebraSC("A4,5(1,1,1)", 4,
                        {{1, 4, ev(4, {{1, Rat(1)}})},
                         {2, 4, ev(4, {{2, Rat(1)}})},
                         {3, 4, ev(4, {{3, Rat(1)}})}});
  if (name == "A5,7(1,1,1)")
    return LieAlgebraSC("A5,7(1,1,1)", 5,
                        {{1, 5, ev(5, {{1, Rat(1)}})},
                         {2, 5, ev(5, {{2, Rat(1)}})},
                         {3, 5, ev(5, {{3, Rat(1)}})},
                         {4, 5, ev(5, {{4, Rat(1)}})}});
  if (name == "gl3") return from_matrix_units("gl3", 3, false);
  if (name == "sl3") return from_matrix_units("sl3", 3, true);
  if (name == "A2,1+A1")
    return LieAlgebraSC::direct_sum(catalog_algebra("A2,1"), catalog_algebra("A1"));
  if (name == "sl2+A1")
    return LieAlgebraSC::direct_sum(catalog_algebra("sl2"), catalog_algebra("A1"));
  if (name == "so3+A1")
    return LieAlgebraSC::direct_sum(catalog_algebra("so3"), catalog_algebra("A1"));
  if (name == "sl2+A3,3")
    return LieAlgebraSC::direct_sum(catalog_algebra("sl2"), catalog_algebra("A3,3"));
  if (name == "sl3+A4,5(1,1,1)")
    return LieAlgebraSC::direct_sum(catalog_algebra("sl3"),
                                    catalog_algebra("A4,5(1,1,1)"));
  if (name == "sl2+A5,7(1,1,1)")
    return LieAlgebraSC::direct_sum(catalog_algebra("sl2"),
                                    catalog_algebra("A5,7(1,1,1)"));
  throw BadParam("catalog_algebra: unknown algebra '" + name + "'");
}

}  // namespace oyang
