#include "oyang/recurrence.hpp"

namespace oyang {

RecurrenceFamily make_family(FamilyKind kind, const FamilyParams& params) {
  RecurrenceFamily f;
  switch (kind) {
    case FamilyKind::Monomial:
      f.name = "monomial";
      f.a = [](int) { return Rat(0); };
      f.b = [](int) { return Rat(0); };
      break;
    case FamilyKind::Hermite:
      f.name = "hermite";
      f.a = [](int) { return Rat(0); };
      f.b = [](int m) { return m <= 0 ? Rat(0) : Rat(m); };
      break;
    case FamilyKind::Dickson: {
      if (params.beta.is_zero()) throw BadParam("Dickson family needs beta != 0");
      Rat alpha = params.alpha, beta = params.beta;
      f.name = "dickson(alpha=" + alpha.str() + ",beta=" + beta.str() + ")";
      f.a = [alpha](int) { return alpha; };
      f.b = [beta](int m) { return m <= 0 ? Rat(0) : beta; };
      break;
    }
    case FamilyKind::NonOrthogonal: {
      Rat a = params.a;
      f.name = "nonorthogonal(a=" + a.str() + ")";
      f.a = [a](int m) { return m % 2 == 0 ? a : -a; };
      f.b = [](int) { return Rat(0); };
      break;
    }
    case FamilyKind::Pochhammer: {
      if (params.q.is_zero()) throw BadParam("Pochhammer family needs q != 0");
      Rat q = params.q;
      f.name = "pochhammer(q=" + q.str() + ")";
      f.is_three_term = false;
      f.q = q;
      f.a = [](int) -> Rat { throw BadParam("Pochhammer family is not three-term"); };
      f.b = [](int) -> Rat { throw BadParam("Pochhammer family is not three-term"); };
      break;
    }
  }
  return f;
}

RecurrenceFamily shift_family(const RecurrenceFamily& fam, int m) {
  if (m < 0) throw BadParam("shift_family: negative shift");
  if (!fam.is_three_term) throw BadParam("shift_family: family is not three-term");
  RecurrenceFamily f = fam;
  f.name = fam.name + "<<" + std::to_string(m);
  auto a0 = fam.a, b0 = fam.b;
  f.a = [a0, m](int k) { return a0(k + m); };
  f.b = [b0, m](int k) { return k <= 0 ? Rat(0) : b0(k + m); };
  return f;
}

CoeffTriangle poly_triangle(const RecurrenceFamily& fam, int M) {
  if (!fam.is_three_term) throw BadParam("poly_triangle: family is not three-term");
  std::vector<UPoly> p(M + 1);
  p[0] = UPoly(Rat(1));
  if (M >= 1) p[1] = UPoly::x() - UPoly(fam.a_at(0));
  for (int m = 1; m < M; ++m)
    p[m + 1] = (UPoly::x() - UPoly(fam.a_at(m))) * p[m] - fam.b_at(m) * p[m - 1];
  CoeffTriangle t;
  t.rows.resize(M + 1);
  for (int m = 0; m <= M; ++m) {
    t.rows[m].assign(m + 1, Rat(0));
    for (int l = 0; l <= m; ++l) t.rows[m][l] = p[m].coeff(l);
  }
  return t;
}

CoeffTriangle inverse_triangle(const RecurrenceFamily& fam, int M) {
  if (!fam.is_three_term) throw BadParam("inverse_triangle: family is not three-term");
  CoeffTriangle t;
  t.rows.resize(M + 1);
  t.rows[0] = {Rat(1)};
  for (int r = 0; r < M; ++r) {
    t.rows[r + 1].assign(r + 2, Rat(0));
    for (int m = 0; m <= r + 1; ++m) {
      Rat v = t.at(r, m - 1) + fam.a_at(m) * t.at(r, m) + fam.b_at(m + 1) * t.at(r, m + 1);
      t.rows[r + 1][m] = v;
    }
  }
  return t;
}

CoeffTriangle inverse_triangle_by_solve(const RecurrenceFamily& fam, int M) {
  CoeffTriangle p = poly_triangle(fam, M);
  CoeffTriangle t;
  t.rows.resize(M + 1);
  for (int r = 0; r <= M; ++r) {
    // back-substitution in x^r = sum_l q_l p_l with p unitriangular
    std::vector<Rat> rem(r + 1, Rat(0));
    rem[r] = Rat(1);
    std::vector<Rat> q(r + 1, Rat(0));
    for (int l = r; l >= 0; --l) {
      q[l] = rem[l];
      if (q[l].is_zero()) continue;
      for (int k = 0; k <= l; ++k) rem[k] -= q[l] * p.at(l, k);
    }
    t.rows[r] = std::move(q);
  }
  return t;
}

WPair w_pair(const RecurrenceFamily& fam, int M) {
  CoeffTriangle p = poly_triangle(fam, M);
  CoeffTriangle q = inverse_triangle(fam, M);
  WPair w;
  w.W.assign(M + 1, std::vector<Rat>(M + 1, Rat(0)));
  w.Winv.assign(M + 1, std::vector<Rat>(M + 1, Rat(0)));
  for (int m = 0; m <= M; ++m)
    for (int l = 0; l <= m; ++l) {
      w.W[m][l] = p.at(m, l);
      w.Winv[m][l] = q.at(m, l);
    }
  return w;
}

int kernel_check(const RecurrenceFamily& fam, int M, const Rat& z) {
  if (M < 2) throw BadParam("kernel_check: M >= 2 required");
  CoeffTriangle t = poly_triangle(fam, M);
  RatSeries K(M);  // sum_{l<=M} p_l(z) u^{-l}
  for (int l = 0; l <= M; ++l) K.set(l, t.poly(l).eval(z));

  RatSeries lhs = K.shifted(-1);  // u * K
  lhs = lhs + l_apply<Rat>([&](int k) { return fam.a_at(k); }, K);
  lhs = lhs + l_apply<Rat>([&](int k) { return fam.b_at(k + 1); }, K).shifted(1);
  RatSeries rhs = K.scaled(z) + RatSeries::monomial(-1, Rat(1));

  for (int k = -1; k <= M - 1; ++k)
    if (lhs.coeff(k) != rhs.coeff(k)) return k;
  return -2;
}

UPoly pochhammer_poly(const Rat& q, int r) {
  if (q.is_zero()) throw BadParam("pochhammer_poly: q = 0");
  UPoly p(Rat(1));
  Rat qk(1);
  for (int k = 0; k < r; ++k) {
    p = p * (UPoly(Rat(1)) - qk * UPoly::x());
    qk *= q;
  }
  return p;
}

}  // namespace oyang
