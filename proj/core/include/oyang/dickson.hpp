#pragma once

#include "oyang/check.hpp"
#include "oyang/relations.hpp"
#include "oyang/rmatrix.hpp"
#include "oyang/series.hpp"

namespace oyang {

enum class PhiBranch { Plus, Minus };

/// The series phi_c solving phi + beta/phi = u + beta/u + c, built from the
/// square-root coefficient system a_2 = -beta, a_3 = 2 beta c,
/// a_4 = -2 beta c^2, a_n = -c a_{n-1} - (1/2) sum_{m+l=n} a_m a_l.
/// Plus branch: leading term u + c; minus branch: leading term beta/u.
RatSeries phi_series(const Rat& beta, const Rat& c, int N, PhiBranch branch);

/// Residual of the defining equation: phi + beta/phi - (u + beta/u + c),
/// computed by independent substitution; zero through order N on success.
RatSeries phi_defining_residual(const RatSeries& phi, const Rat& beta, const Rat& c,
                                int N);

/// Group property phi_{c+d} = phi_c o phi_d on the plus branch; on the minus
/// branch the composition obstruction is reported verbatim, not repaired.
std::vector<CheckRecord> check_phi_group(const Rat& beta, const Rat& c, const Rat& d,
                                         int N, const GridOptions& opt = {});

/// Inhomogeneous RTT on the evaluation image T(s) = I + E/s at sample pairs
/// (both legs in s-coordinates).
std::vector<CheckRecord> check_rtt_eval(int n,
                                        const std::vector<std::pair<Rat, Rat>>& s_pairs,
                                        const GridOptions& opt = {});

/// Closed commutation formula for the Dickson realization t^{(r)} = (d_r(E)):
/// [t^{(r)}, t^{(s)}] = sum_{p,m >= 0, m-s <= p <= r-m-1} beta^m
///   (t^{(r-p-m-1)}_{kj} t^{(p+s-m)}_{il} - t^{(p+s-m)}_{kj} t^{(r-p-m-1)}_{il});
/// alpha must cancel.
std::vector<CheckRecord> check_commutation_formula(const Rat& alpha, const Rat& beta,
                                                   int n, int rmax, int smax,
                                                   const GridOptions& opt = {});

/// Evaluation homomorphism, the E -> t^{(1)} embedding, the series
/// substitution u + beta/u into the classical realization, and the two
/// automorphism families f(u) T(u) and B T(u) B^{-1}.
std::vector<CheckRecord> check_eval_hom_and_autos(
    const Rat& beta, int n, int N, const std::vector<Rat>& f_coeffs,
    const std::vector<std::vector<Rat>>& B,
    const std::vector<std::pair<Rat, Rat>>& s_pairs, const GridOptions& opt = {});

/// Quantum determinant in the evaluation image at s0:
/// sum_sigma sgn(sigma) t_{sigma(1),1}(s0) t_{sigma(2),2}(s0-1) ...
/// The shifted arguments enter through s -> s - k.
PBWElement qdet_eval(int n, const Rat& s0);

/// Same element with the columns (permute_rows = false, arguments
/// descending) or rows (permute_rows = true, arguments ascending) permuted
/// by tau and the sign compensated; agrees with qdet_eval for every tau.
/// The row expansion with descending arguments differs by commutator terms
/// and is reported as such by check_qdet_properties.
PBWElement qdet_eval_permuted(int n, const Rat& s0, const std::vector<int>& tau,
                              bool permute_rows);

/// Matrix of quantum m x m minors: A_m T_1(s0) T_2(s0-1) ... T_m(s0-m+1)
/// over PBW; entry ((a), (b)) is the minor with upper row a, lower row b.
TensorOperator<PBWElement> minor_matrix(int n, int m, const Rat& s0);

/// Centrality, minor antisymmetry, the minor commutation formula, and
/// comultiplicativity of qdet in the evaluation image.
std::vector<CheckRecord> check_qdet_properties(int n, const std::vector<Rat>& s_points,
                                               const std::vector<std::pair<Rat, Rat>>& s_pairs,
                                               const GridOptions& opt = {});

}  // namespace oyang
