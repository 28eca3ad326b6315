#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oyang/errors.hpp"
#include "oyang/rat.hpp"

namespace oyang {

using RatMatrix = std::vector<std::vector<Rat>>;
using RatVector = std::vector<Rat>;

RatMatrix zero_matrix(int rows, int cols);
RatMatrix identity_matrix(int n);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_sub(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_commutator(const RatMatrix& a, const RatMatrix& b);
bool mat_is_zero(const RatMatrix& a);
int rank_of(std::vector<RatVector> rows);  // exact Gaussian elimination

/// Row-reduced basis of the span of the given vectors.
std::vector<RatVector> row_space_basis(std::vector<RatVector> rows);

/// Coordinates of v in the reduced basis; empty if v is outside the span.
std::optional<RatVector> coordinates_in(const std::vector<RatVector>& basis,
                                        const RatVector& v);

/// Finite-dimensional Lie algebra by structure constants:
/// [e_i, e_j] = sum_k c[i][j][k] e_k. Antisymmetry and the Jacobi identity
/// are verified at construction.
class LieAlgebraSC {
 public:
  LieAlgebraSC(std::string name, int dim,
               const std::vector<std::tuple<int, int, RatVector>>& brackets);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  const RatVector& bracket_basis(int i, int j) const { return c_[i][j]; }
  RatVector bracket(const RatVector& x, const RatVector& y) const;
  /// Matrix of ad_x in the defining basis (columns = images of e_j).
  RatMatrix ad(const RatVector& x) const;
  RatMatrix ad_basis(int i) const;

  /// The same algebra with its basis permuted.
  LieAlgebraSC permuted(const std::vector<int>& perm) const;

  static LieAlgebraSC direct_sum(const LieAlgebraSC& a, const LieAlgebraSC& b);

 private:
  void validate() const;
  std::string name_;
  int dim_;
  std::vector<std::vector<RatVector>> c_;
};

/// Kernel of the linear system given by the rows (as functionals).
std::vector<RatVector> nullspace(const std::vector<RatVector>& rows, int dim);

/// Structure constants of the subalgebra spanned by the given (closed)
/// subspace; throws if the span is not closed under the bracket.
LieAlgebraSC subalgebra(const LieAlgebraSC& g, const std::vector<RatVector>& span_vecs,
                        const std::string& name);

/// Quotient of g by an ideal given by spanning vectors.
LieAlgebraSC quotient_by_ideal(const LieAlgebraSC& g,
                               const std::vector<RatVector>& ideal_vecs,
                               const std::string& name);

/// Solvable radical via the Cartan criterion: the Killing-orthogonal
/// complement of the derived algebra.
std::vector<RatVector> radical_basis(const LieAlgebraSC& g);

/// Isomorphism-invariant fingerprint used to identify small Lie algebras:
/// dimension, derived series and lower central series dimensions (until
/// stable), center dimension and Killing form rank.
struct LieSignature {
  int dim = 0;
  std::vector<int> derived;
  std::vector<int> lower_central;
  int center = 0;
  int killing_rank = 0;

  bool operator==(const LieSignature&) const = default;
  std::string str() const;
};

LieSignature signature_of(const LieAlgebraSC& g);

/// Abstract structure constants of a Lie algebra of matrices given by a
/// spanning set; sets `closure_failure` instead of repairing if a bracket
/// leaves the span.
struct MatrixAlgebraResult {
  std::vector<RatMatrix> basis;
  std::optional<LieAlgebraSC> algebra;
  std::string closure_failure;
};
MatrixAlgebraResult matrix_algebra_from_span(const std::string& name,
                                             const std::vector<RatMatrix>& spanning);

/// Built-in catalog of small Lie algebras in the standard nomenclature for
/// solvable algebras of dimension <= 5 plus sl/so/gl entries. Parameters a,
/// b enter the one-parameter families.
LieAlgebraSC catalog_algebra(const std::string& name, const Rat& a = Rat(1),
                             const Rat& b = Rat(1));

}  // namespace oyang
