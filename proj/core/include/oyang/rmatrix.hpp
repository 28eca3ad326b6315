#pragma once

#include "oyang/check.hpp"
#include "oyang/relations.hpp"
#include "oyang/tensor_op.hpp"
#include "oyang/weyl.hpp"

namespace oyang {

/// Interpretation of the derivative symbol inside an operator evaluated at a
/// composite argument like u+v or u-v.
enum class DerivConvention { FirstSlot, SecondSlot, Difference, Sum };

std::string deriv_convention_name(DerivConvention c);

/// R_12 R_13 R_23 = R_23 R_13 R_12 at exact sample triples. For the
/// homogeneous matrix the arguments are spectral points u; for the
/// inhomogeneous one they are the s-values through which it factors --
/// formally identical, so one checker serves both.
std::vector<CheckRecord> check_ybe(const std::string& r_kind, int n,
                                   const std::vector<std::array<Rat, 3>>& triples,
                                   const GridOptions& opt = {});

/// Fused R at consecutive arguments s_i = s0 - (i-1) equals the unnormalized
/// antisymmetrizer A_m; a non-consecutive negative control must differ.
std::vector<CheckRecord> check_fusion(int n, int m, const Rat& s0,
                                      const GridOptions& opt = {});

/// Fused RTT on the evaluation image T(s) = I + E/s:
/// R(s_1..s_m) T_1(s_1)...T_m(s_m) = T_m(s_m)...T_1(s_1) R(s_1..s_m).
std::vector<CheckRecord> check_fused_rtt(int n, int m, const std::vector<Rat>& s_list,
                                         const GridOptions& opt = {});

/// Operator identities for the derivative-deformed S / R pair, decided by
/// applying both sides to monomials u^a v^b with a, b <= test_degree.
/// The difference-of-operators identity (two legs) is expected to hold under
/// the Difference convention; the triple-product identity (three legs) is
/// tabulated per convention, unhatted and hatted, and the table itself is
/// the result.
std::vector<CheckRecord> check_hermite_ops(DerivConvention convention, int test_degree,
                                           int n = 2, const GridOptions& opt = {});

/// The evaluation matrix T(s) = I + E/s as a one-leg operator over PBW.
TensorOperator<PBWElement> eval_t_leg(int n, int m, int leg, const Rat& s);

}  // namespace oyang
