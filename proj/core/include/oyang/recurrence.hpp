#pragma once

#include <functional>
#include <string>
#include <vector>

#include "oyang/errors.hpp"
#include "oyang/rat.hpp"
#include "oyang/series.hpp"
#include "oyang/upoly.hpp"

namespace oyang {

/// A three-term recurrence p_{m+1}(x) = (x - a_m) p_m(x) - b_m p_{m-1}(x)
/// given by its coefficient sequences, with the convention b_0 = 0.
/// The q-Pochhammer family is not three-term; it carries its own parameter.
struct RecurrenceFamily {
  std::string name;
  std::function<Rat(int)> a;  // defined for m >= 0
  std::function<Rat(int)> b;  // defined for m >= 1; b(0) == 0 by convention
  bool is_three_term = true;
  Rat q;  // q-Pochhammer parameter, unused elsewhere

  Rat a_at(int m) const { return a(m); }
  Rat b_at(int m) const { return m <= 0 ? Rat(0) : b(m); }
};

enum class FamilyKind { Monomial, Hermite, Dickson, NonOrthogonal, Pochhammer };

struct FamilyParams {
  Rat alpha;  // Dickson a_m = alpha
  Rat beta;   // Dickson b_m = beta (nonzero)
  Rat a;      // non-orthogonal alternating +-a
  Rat q;      // Pochhammer base
};

RecurrenceFamily make_family(FamilyKind kind, const FamilyParams& params = {});

/// Shift a |-> s^m(a), b |-> s^m(b), keeping b_0 = 0.
RecurrenceFamily shift_family(const RecurrenceFamily& fam, int m);

/// Rows 0..M of polynomial coefficients in the monomial basis; row m holds
/// the m+1 coefficients of a monic degree-m polynomial.
struct CoeffTriangle {
  std::vector<std::vector<Rat>> rows;

  int max_degree() const { return static_cast<int>(rows.size()) - 1; }
  Rat at(int m, int l) const {
    if (m < 0 || m > max_degree()) return Rat(0);
    if (l < 0 || l >= static_cast<int>(rows[m].size())) return Rat(0);
    return rows[m][l];
  }
  UPoly poly(int m) const { return UPoly(rows.at(m)); }
};

/// Coefficients p_l^m of the recurrence polynomials p_0..p_M.
CoeffTriangle poly_triangle(const RecurrenceFamily& fam, int M);

/// Coefficients q_l^r of the inverse expansion x^r = sum_l q_l^r p_l(x),
/// computed by the recurrence q_m^{r+1} = q_{m-1}^r + a_m q_m^r + b_{m+1} q_{m+1}^r.
CoeffTriangle inverse_triangle(const RecurrenceFamily& fam, int M);

/// Same coefficients obtained by solving the unitriangular system directly;
/// used as an independent cross-check of inverse_triangle.
CoeffTriangle inverse_triangle_by_solve(const RecurrenceFamily& fam, int M);

/// Triangular basis-change matrices between x^r and p_r(x): W rows are the
/// coefficient rows of p_m, Winv rows are the q_l^r, both with unit diagonal;
/// their product is the identity.
struct WPair {
  std::vector<std::vector<Rat>> W, Winv;
};
WPair w_pair(const RecurrenceFamily& fam, int M);

/// Verifies (u + L^a_u + (1/u) L^{s(b)}_u) K(z, 1/u) = z K(z, 1/u) + u at a
/// rational sample z, with K truncated to sum_{l<=M} p_l(z) u^{-l}. All
/// coefficients of u^{-k}, -1 <= k <= M-1, must agree exactly (the top one
/// is truncation-contaminated). Returns the first failing exponent, or -2 if
/// every compared coefficient matches.
int kernel_check(const RecurrenceFamily& fam, int M, const Rat& z);

/// The q-Pochhammer polynomial (x; q)_r as a degree-r polynomial.
UPoly pochhammer_poly(const Rat& q, int r);

}  // namespace oyang
