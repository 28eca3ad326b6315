#pragma once

#include "oyang/check.hpp"
#include "oyang/lie.hpp"
#include "oyang/relations.hpp"

namespace oyang {

/// The concrete ternary extension built from the adjoint representation on
/// W = C[x_1..x_d]: x_{ij}(a) = sum_k <[a, e_i], e_k> x_j d_k, realized as
/// the d x d matrix with row j the coordinates of [a, e_i].
struct TernaryBuild {
  int ambient = 0;                       // d = dim g
  std::vector<RatMatrix> basis;          // reduced basis of the span
  std::optional<LieAlgebraSC> algebra;   // structure constants in that basis
  LieSignature signature;
  std::string closure_failure;           // nonempty = finding, not repaired
  bool bracket_formula_ok = false;       // printed bracket vs matrix bracket
  std::string bracket_witness;
};

TernaryBuild build_ternary(const LieAlgebraSC& g);

/// The generator matrix x_{ij}(a) of the ternary construction above.
RatMatrix ternary_generator(const LieAlgebraSC& g, int i, int j, const RatVector& a);

/// Polarized relation suite over U(gl_{n_gl}) with t^{(r)} = (E^r):
/// the two-variable polarized relation, its residue form, the trace form,
/// the equal-argument derivative form, epsilon symmetry for the given
/// arguments, and the matrix (RTT-style) form at sample pairs.
std::vector<CheckRecord> check_polarized_suite(
    int n_gl, const RatMatrix& A, const RatMatrix& B, int rmax, int N,
    const std::vector<std::pair<Rat, Rat>>& uv_pairs, const GridOptions& opt = {});

/// The six ternary-extension identifications for the built-in catalog,
/// decided by invariant-signature match against the named targets.
std::vector<CheckRecord> check_ternary_table(const Rat& a_param, const Rat& b_param,
                                             const GridOptions& opt = {});

/// Symmetry determination for the bilinear form
/// eps(a,b) = sum <psi(a)e_k, f_l> x_{lk}(b) - sum_m x_{mm}(psi(a)psi(b)),
/// the identity eps(a,b) = -tr(x)([a,b]) it satisfies in this construction,
/// the homomorphism property of -tr(x), and the kernel of tr(x).
std::vector<CheckRecord> check_trace_and_epsilon(const LieAlgebraSC& g,
                                                 const GridOptions& opt = {});

/// Ternary Yangian suite on the realization
/// g^{(r)}_{ij}(a) = sum_m psi(a)_{im} (E^r)_{jm} in U(gl_{dim g}):
/// the closed-bracket relation, its h-rescaled form, the degeneration of the
/// first-order algebra, the module action, the evaluation epimorphism
/// relation at sample pairs, and rank stability across h.
std::vector<CheckRecord> check_yt_suite(const LieAlgebraSC& g, int rmax,
                                        const std::vector<Rat>& h_values,
                                        const std::vector<std::pair<Rat, Rat>>& uv_pairs,
                                        const GridOptions& opt = {});

/// The 3 x 3 coefficient display for sl(2) and the rank-9 span claim.
std::vector<CheckRecord> check_sl2_span(const GridOptions& opt = {});

}  // namespace oyang
