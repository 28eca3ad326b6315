#include "oyang/relations.hpp"

#include <memory>

#include <sstream>

namespace oyang {

namespace {

std::string tuple_str(std::initializer_list<std::pair<const char*, std::string>> kv) {
  std::ostringstream os;
  bool first = true;
  for (auto& [k, v] : kv) {
    if (!first) os << " ";
    os << k << "=" << v;
    first = false;
  }
  return os.str();
}

std::pair<bool, std::string> verdict(PBWElement diff, bool perturb) {
  if (perturb) diff += PBWElement::unit(diff.rank() ? diff.rank() : 1);
  if (diff.is_zero()) return {true, ""};
  return {false, diff.str()};
}

std::pair<bool, std::string> verdict(TensorPBW diff, bool perturb) {
  if (perturb) diff += TensorPBW::unit(diff.rank() ? diff.rank() : 1);
  if (diff.is_zero()) return {true, ""};
  return {false, diff.str()};
}

}  // namespace

std::pair<bool, std::string> bi_compare(const BiSeries<PBWElement>& lhs,
                                        const BiSeries<PBWElement>& rhs, int maxtotal,
                                        int rank, bool perturb) {
  for (int r = 0; r <= maxtotal; ++r)
    for (int s = 0; r + s <= maxtotal; ++s) {
      PBWElement diff = lhs.coeff(r, s) - rhs.coeff(r, s);
      if (perturb && r == 0 && s == 0) diff += PBWElement::unit(rank);
      if (!diff.is_zero()) {
        std::ostringstream os;
        os << "coefficient (u^-" << r << ", v^-" << s << "): " << diff.str();
        return {false, os.str()};
      }
    }
  return {true, ""};
}

OYRealization::OYRealization(const RecurrenceFamily& fam, int n, int rmax) : n_(n) {
  CoeffTriangle tri = poly_triangle(fam, rmax);
  polys_.reserve(rmax + 1);
  for (int r = 0; r <= rmax; ++r) polys_.push_back(tri.poly(r));
  build();
}

OYRealization::OYRealization(std::vector<UPoly> polys, int n)
    : n_(n), polys_(std::move(polys)) {
  build();
}

void OYRealization::build() {
  zero_ = PBWElement(n_);
  gens_.resize(polys_.size());
  for (std::size_t r = 0; r < polys_.size(); ++r) {
    gens_[r].resize(n_);
    for (int i = 1; i <= n_; ++i) {
      gens_[r][i - 1].reserve(n_);
      for (int j = 1; j <= n_; ++j)
        gens_[r][i - 1].push_back(poly_of_matrix_entry(polys_[r], n_, i, j));
    }
  }
}

const PBWElement& OYRealization::t(int r, int i, int j) const {
  if (r < 0) return zero_;
  return gens_.at(r).at(i - 1).at(j - 1);
}

std::vector<CheckRecord> check_base_identity(int n, int rmax, int smax,
                                             const GridOptions& opt) {
  TaskList tasks("base");
  for (int r = 0; r <= rmax; ++r)
    for (int s = 0; s <= smax; ++s)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l) {
              auto params = tuple_str({{"n", std::to_string(n)},
                                       {"r", std::to_string(r)},
                                       {"s", std::to_string(s)},
                                       {"ijkl", std::to_string(i) + std::to_string(j) +
                                                    std::to_string(k) + std::to_string(l)}});
              tasks.add(params, [=](bool perturb) {
                const auto& Er1 = matrix_power_entry(n, r + 1, i, j);
                const auto& Es = matrix_power_entry(n, s, k, l);
                const auto& Er = matrix_power_entry(n, r, i, j);
                const auto& Es1 = matrix_power_entry(n, s + 1, k, l);
                PBWElement lhs = commutator(Er1, Es) - commutator(Er, Es1);
                PBWElement rhs = matrix_power_entry(n, r, k, j) * matrix_power_entry(n, s, i, l) -
                                 matrix_power_entry(n, s, k, j) * matrix_power_entry(n, r, i, l);
                return verdict(lhs - rhs, perturb);
              });
            }
  return tasks.run(opt.jobs, opt.perturb);
}

std::vector<CheckRecord> check_oy_relations(const RecurrenceFamily& fam, int n,
                                            int rmax, int smax, const GridOptions& opt) {
  auto real = std::make_shared<OYRealization>(fam, n, std::max(rmax, smax) + 1);
  TaskList tasks("oy");
  for (int r = 0; r <= rmax; ++r)
    for (int s = 0; s <= smax; ++s)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l) {
              auto params = tuple_str({{"fam", fam.name},
                                       {"n", std::to_string(n)},
                                       {"r", std::to_string(r)},
                                       {"s", std::to_string(s)},
                                       {"ijkl", std::to_string(i) + std::to_string(j) +
                                                    std::to_string(k) + std::to_string(l)}});
              Rat ar = fam.a_at(r), br = fam.b_at(r);
              Rat as = fam.a_at(s), bs = fam.b_at(s);
              tasks.add(params, [=](bool perturb) {
                PBWElement xr = real->t(r + 1, i, j) + real->t(r, i, j).scaled(ar) +
                                real->t(r - 1, i, j).scaled(br);
                PBWElement xs = real->t(s + 1, k, l) + real->t(s, k, l).scaled(as) +
                                real->t(s - 1, k, l).scaled(bs);
                PBWElement lhs =
                    commutator(xr, real->t(s, k, l)) - commutator(real->t(r, i, j), xs);
                PBWElement rhs = real->t(r, k, j) * real->t(s, i, l) -
                                 real->t(s, k, j) * real->t(r, i, l);
                return verdict(lhs - rhs, perturb);
              });
            }
  return tasks.run(opt.jobs, opt.perturb);
}

namespace {

using PBWBi = BiSeries<PBWElement>;

TruncSeries<PBWElement> gen_series(const OYRealization& real, int i, int j, int N) {
  TruncSeries<PBWElement> f(N);
  for (int r = 0; r <= N; ++r) f.set(r, real.t(r, i, j));
  return f;
}

}  // namespace

std::vector<CheckRecord> check_series_relation(const RecurrenceFamily& fam, int n,
                                               int N, const GridOptions& opt) {
  auto real = std::make_shared<OYRealization>(fam, n, N + 1);
  TaskList tasks("series");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          auto params = tuple_str({{"fam", fam.name},
                                   {"n", std::to_string(n)},
                                   {"N", std::to_string(N)},
                                   {"ijkl", std::to_string(i) + std::to_string(j) +
                                                std::to_string(k) + std::to_string(l)}});
          tasks.add(params, [=, &fam](bool perturb) {
            auto a = [&fam](int m) { return fam.a_at(m); };
            auto sb = [&fam](int m) { return fam.b_at(m + 1); };
            auto Tij = gen_series(*real, i, j, N);
            auto Tkl = gen_series(*real, k, l, N);
            auto Tkj = gen_series(*real, k, j, N);
            auto Til = gen_series(*real, i, l, N);

            PBWBi comm = PBWBi::outer(Tij, Tkl) - PBWBi::outer(Tkl, Tij).transposed();
            PBWBi lhs = comm.mul_u() + comm.l_u(a) + comm.shift_u(sb) - comm.mul_v() -
                        comm.l_v(a) - comm.shift_v(sb);
            PBWBi rhs = PBWBi::outer(Tkj, Til) - PBWBi::outer(Tkj, Til).transposed();

            bool pass = true;
            std::string witness;
            for (int r = 0; r + 0 <= N - 1 && pass; ++r)
              for (int s = 0; r + s <= N - 1 && pass; ++s) {
                PBWElement diff = lhs.coeff(r, s) - rhs.coeff(r, s);
                // cross-check against the grid form of the same coefficient
                Rat ar = fam.a_at(r), br = fam.b_at(r);
                Rat as = fam.a_at(s), bs = fam.b_at(s);
                PBWElement xr = real->t(r + 1, i, j) + real->t(r, i, j).scaled(ar) +
                                real->t(r - 1, i, j).scaled(br);
                PBWElement xs = real->t(s + 1, k, l) + real->t(s, k, l).scaled(as) +
                                real->t(s - 1, k, l).scaled(bs);
                PBWElement grid = commutator(xr, real->t(s, k, l)) -
                                  commutator(real->t(r, i, j), xs) -
                                  (real->t(r, k, j) * real->t(s, i, l) -
                                   real->t(s, k, j) * real->t(r, i, l));
                if (perturb && r == 0 && s == 0) diff += PBWElement::unit(n);
                if (!diff.is_zero() || diff != grid) {
                  pass = false;
                  std::ostringstream os;
                  os << "coefficient (u^-" << r << ", v^-" << s << "): " << diff.str();
                  if (diff != grid) os << " [series/grid mismatch, grid: " << grid.str() << "]";
                  witness = os.str();
                }
              }
            return std::make_pair(pass, witness);
          });
        }
  return tasks.run(opt.jobs, opt.perturb);
}

std::vector<CheckRecord> check_omega(const RecurrenceFamily& fam, int n, int rmax,
                                     int smax, const GridOptions& opt) {
  auto real = std::make_shared<OYRealization>(fam, n, std::max(rmax, smax));
  TaskList tasks("omega");
  for (int r = 0; r <= rmax; ++r)
    for (int s = 0; s <= smax; ++s) {
      auto params = tuple_str({{"fam", fam.name},
                               {"n", std::to_string(n)},
                               {"r", std::to_string(r)},
                               {"s", std::to_string(s)}});
      tasks.add(params, [=](bool perturb) {
        PBWElement wr(n), ws(n);
        for (int i = 1; i <= n; ++i) {
          wr += real->t(r, i, i);
          ws += real->t(s, i, i);
        }
        return verdict(commutator(wr, ws), perturb);
      });
    }
  return tasks.run(opt.jobs, opt.perturb);
}

std::vector<CheckRecord> check_pochhammer(const Rat& q, int n, int rmax, int smax,
                                          int N, const GridOptions& opt) {
  if (q.is_zero()) throw BadParam("check_pochhammer: q = 0");
  std::vector<UPoly> polys;
  int top = std::max({rmax + 1, smax + 1, N + 4});
  polys.reserve(top + 1);
  for (int r = 0; r <= top; ++r) polys.push_back(pochhammer_poly(q, r));
  auto real = std::make_shared<OYRealization>(polys, n);

  TaskList tasks("pochhammer");
  // coefficient grid
  for (int r = 0; r <= rmax; ++r)
    for (int s = 0; s <= smax; ++s)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l) {
              auto params = tuple_str({{"q", q.str()},
                                       {"form", "grid"},
                                       {"r", std::to_string(r)},
                                       {"s", std::to_string(s)},
                                       {"ijkl", std::to_string(i) + std::to_string(j) +
                                                    std::to_string(k) + std::to_string(l)}});
              tasks.add(params, [=](bool perturb) {
                Rat qr = q.pow(-r), qs = q.pow(-s);
                PBWElement lhs =
                    commutator(real->t(r, i, j), real->t(s, k, l)).scaled(qr - qs) +
                    commutator(real->t(r, i, j), real->t(s + 1, k, l)).scaled(qs) -
                    commutator(real->t(r + 1, i, j), real->t(s, k, l)).scaled(qr);
                PBWElement rhs = real->t(r, k, j) * real->t(s, i, l) -
                                 real->t(s, k, j) * real->t(r, i, l);
                return verdict(lhs - rhs, perturb);
              });
            }

  // series form (1-qu)[m(qu), m(v)] - (1-qv)[m(u), m(qv)] = RHS, to order N
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          auto params = tuple_str({{"q", q.str()},
                                   {"form", "series"},
                                   {"N", std::to_string(N)},
                                   {"ijkl", std::to_string(i) + std::to_string(j) +
                                                std::to_string(k) + std::to_string(l)}});
          tasks.add(params, [=](bool perturb) {
            auto Mij = gen_series(*real, i, j, N + 1);
            auto Mkl = gen_series(*real, k, l, N + 1);
            auto Mkj = gen_series(*real, k, j, N + 1);
            auto Mil = gen_series(*real, i, l, N + 1);
            auto commQ = [&](const TruncSeries<PBWElement>& A,
                             const TruncSeries<PBWElement>& B) {
              return BiSeries<PBWElement>::outer(A, B) -
                     BiSeries<PBWElement>::outer(B, A).transposed();
            };
            auto c1 = commQ(Mij, Mkl).scale_u(q);          // [m(qu), m(v)]
            auto c2 = commQ(Mij, Mkl).scale_v(q);          // [m(u), m(qv)]
            auto lhs = c1 - c1.mul_u().scaled(q) - (c2 - c2.mul_v().scaled(q));
            auto rhs = BiSeries<PBWElement>::outer(Mkj, Mil) -
                       BiSeries<PBWElement>::outer(Mkj, Mil).transposed();
            return bi_compare(lhs, rhs, N - 1, n, perturb);
          });
        }

  // rescaled form for the fixed index 2: m~(u) = m(u)/(1 - q u)
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          auto params = tuple_str({{"q", q.str()},
                                   {"form", "rescaled(n=2)"},
                                   {"N", std::to_string(N)},
                                   {"ijkl", std::to_string(i) + std::to_string(j) +
                                                std::to_string(k) + std::to_string(l)}});
          tasks.add(params, [=](bool perturb) {
            int pad = N + 3;
            // 1/(1-qu) expanded in u^{-1}: -sum_{t>=1} q^{-t} u^{-t}
            RatSeries g(pad);
            for (int t = 1; t <= pad; ++t) g.set(t, -q.pow(-t));
            auto mt = [&](int a, int b) {
              auto M = gen_series(*real, a, b, pad);
              TruncSeries<PBWElement> r(pad);
              for (auto& [e, cg] : g.terms())
                for (auto& [f, cm] : M.terms())
                  if (e + f <= pad) r.add_to(e + f, cm.scaled(cg));
              return r;
            };
            auto Tij = mt(i, j), Tkl = mt(k, l), Tkj = mt(k, j), Til = mt(i, l);
            auto commQ = [&](const TruncSeries<PBWElement>& A,
                             const TruncSeries<PBWElement>& B) {
              return BiSeries<PBWElement>::outer(A, B) -
                     BiSeries<PBWElement>::outer(B, A).transposed();
            };
            Rat q2 = q * q;
            auto c1 = commQ(Tij, Tkl).scale_u(q);
            auto c2 = commQ(Tij, Tkl).scale_v(q);
            auto lhs = c1 - c1.mul_u().scaled(q2) - (c2 - c2.mul_v().scaled(q2));
            auto rhs = BiSeries<PBWElement>::outer(Tkj, Til) -
                       BiSeries<PBWElement>::outer(Tkj, Til).transposed();
            return bi_compare(lhs, rhs, N - 1, n, perturb);
          });
        }

  return tasks.run(opt.jobs, opt.perturb);
}

std::vector<CheckRecord> check_cd(const RecurrenceFamily& fam, int N_gl, int n_sum,
                                  int smax, const GridOptions& opt) {
  for (int m = 1; m <= n_sum + 1; ++m)
    if (fam.b_at(m).is_zero())
      throw BadParam("check_cd: b_" + std::to_string(m) +
                     " = 0, Z-weights undefined for this family");

  int rtop = n_sum + 2 + std::max(smax, 1);
  auto real = std::make_shared<OYRealization>(fam, N_gl, rtop);

  // Z weights 1/(b_1...b_m)
  std::vector<Rat> w(n_sum + 2, Rat(1));
  for (int m = 1; m <= n_sum + 1; ++m) w[m] = w[m - 1] / fam.b_at(m);

  auto tl = [real](int r, int i, int j) { return TensorPBW::left(real->t(r, i, j)); };
  auto tr = [real](int r, int k, int l) { return TensorPBW::right(real->t(r, k, l)); };
  auto tens = [real](int r1, int i, int j, int r2, int k, int l) {
    return TensorPBW::tensor(real->t(r1, i, j), real->t(r2, k, l));
  };
  auto Z = [&, real](int nn, int i, int j, int k, int l) {
    TensorPBW z(N_gl);
    for (int m = 1; m <= nn; ++m) z += tens(m, i, j, m, k, l).scaled(w[m]);
    return z;
  };
  auto A = [&, real](int s, int al, int be, int ep, int ka) {
    if (s < 0) return TensorPBW(N_gl);
    return tl(s, al, be) - tr(s, ep, ka);
  };

  bool const_a = true, const_b = true;
  for (int m = 1; m <= n_sum + 2; ++m) {
    if (fam.a_at(m) != fam.a_at(0)) const_a = false;
    if (m >= 2 && fam.b_at(m) != fam.b_at(1)) const_b = false;
  }

  TaskList tasks("cd");
  for (int s = 0; s <= smax; ++s)
    for (int al = 1; al <= N_gl; ++al)
      for (int be = 1; be <= N_gl; ++be)
        for (int ep = 1; ep <= N_gl; ++ep)
          for (int ka = 1; ka <= N_gl; ++ka)
            for (int i = 1; i <= N_gl; ++i)
              for (int j = 1; j <= N_gl; ++j)
                for (int k = 1; k <= N_gl; ++k)
                  for (int l = 1; l <= N_gl; ++l) {
                    std::string idx = std::to_string(al) + std::to_string(be) +
                                      std::to_string(ep) + std::to_string(ka) +
                                      std::to_string(i) + std::to_string(j) +
                                      std::to_string(k) + std::to_string(l);
                    auto params = tuple_str({{"fam", fam.name},
                                             {"N", std::to_string(N_gl)},
                                             {"n", std::to_string(n_sum)},
                                             {"s", std::to_string(s)},
                                             {"abekijkl", idx}});
                    tasks.add("lemma " + params, [=, &fam](bool perturb) {
                      TensorPBW lhs = commutator(
                          A(s + 1, al, be, ep, ka) + A(s, al, be, ep, ka).scaled(fam.a_at(s)) +
                              A(s - 1, al, be, ep, ka).scaled(fam.b_at(s)),
                          Z(n_sum, i, j, k, l));
                      TensorPBW sum_a(N_gl);
                      for (int m = 1; m <= n_sum; ++m)
                        sum_a += tens(m, i, j, m, k, l).scaled(fam.a_at(m) * w[m]);
                      TensorPBW sum_mix(N_gl);
                      for (int m = 1; m <= n_sum - 1; ++m)
                        sum_mix += (tens(m + 1, i, j, m, k, l) + tens(m, i, j, m + 1, k, l))
                                       .scaled(w[m]);
                      TensorPBW rhs =
                          commutator(A(s, al, be, ep, ka), sum_a) +
                          commutator(A(s, al, be, ep, ka), sum_mix) +
                          commutator(tl(s, al, be), tens(n_sum + 1, i, j, n_sum, k, l))
                              .scaled(w[n_sum]) -
                          commutator(tr(s, ep, ka), tens(n_sum, i, j, n_sum + 1, k, l))
                              .scaled(w[n_sum]) +
                          tl(s, i, be) * Z(n_sum, al, j, k, l) -
                          Z(n_sum, i, be, k, l) * tl(s, al, j) +
                          Z(n_sum, i, j, k, ka) * tr(s, ep, l) -
                          tr(s, k, ka) * Z(n_sum, i, j, ep, l);
                      return verdict(lhs - rhs, perturb);
                    });

                    if (s == 0) {
                      tasks.add("cor-s0 " + params, [=](bool perturb) {
                        TensorPBW lhs = commutator(A(1, al, be, ep, ka), Z(n_sum, i, j, k, l));
                        TensorPBW rhs(N_gl);
                        if (i == be) rhs += Z(n_sum, al, j, k, l);
                        if (al == j) rhs -= Z(n_sum, i, be, k, l);
                        if (ep == l) rhs += Z(n_sum, i, j, k, ka);
                        if (k == ka) rhs -= Z(n_sum, i, j, ep, l);
                        return verdict(lhs - rhs, perturb);
                      });
                    }

                    if (const_a) {
                      tasks.add("cor-const-a " + params, [=, &fam](bool perturb) {
                        TensorPBW lhs = commutator(
                            A(s + 1, al, be, ep, ka) + A(s - 1, al, be, ep, ka).scaled(fam.b_at(s)),
                            Z(n_sum, i, j, k, l));
                        TensorPBW sum_mix(N_gl);
                        for (int m = 1; m <= n_sum - 1; ++m)
                          sum_mix += (tens(m + 1, i, j, m, k, l) + tens(m, i, j, m + 1, k, l))
                                         .scaled(w[m]);
                        TensorPBW rhs =
                            (commutator(tl(s, al, be), tens(n_sum + 1, i, j, n_sum, k, l)) -
                             commutator(tr(s, ep, ka), tens(n_sum, i, j, n_sum + 1, k, l)))
                                .scaled(w[n_sum]) +
                            commutator(A(s, al, be, ep, ka), sum_mix) +
                            tl(s, i, be) * Z(n_sum, al, j, k, l) -
                            Z(n_sum, i, be, k, l) * tl(s, al, j) +
                            Z(n_sum, i, j, k, ka) * tr(s, ep, l) -
                            tr(s, k, ka) * Z(n_sum, i, j, ep, l);
                        return verdict(lhs - rhs, perturb);
                      });
                    }
                  }

  // Constant-coefficient two-parameter corollary on the diagonal index
  // pattern and a few (p, q) shifts.
  if (const_a && const_b) {
    Rat b = fam.b_at(1);
    // capture by value: these closures run after this block is gone
    auto Zpq = [b, N_gl, tens, real](int nn, int p, int qq, int i, int j, int k, int l) {
      TensorPBW z(N_gl);
      Rat bm(1);
      for (int m = 1; m <= nn; ++m) {
        bm /= b;
        z += tens(m + p, i, j, m + qq, k, l).scaled(bm);
      }
      return z;
    };
    for (int s = 0; s <= smax; ++s)
      for (auto [p, qq] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, -1}})
        for (int i = 1; i <= N_gl; ++i)
          for (int j = 1; j <= N_gl; ++j)
            for (int k = 1; k <= N_gl; ++k)
              for (int l = 1; l <= N_gl; ++l)
                for (int al = 1; al <= N_gl; ++al)
                  for (int be = 1; be <= N_gl; ++be)
                    for (int ep = 1; ep <= N_gl; ++ep)
                      for (int ka = 1; ka <= N_gl; ++ka) {
                        std::string idx = std::to_string(al) + std::to_string(be) +
                                          std::to_string(ep) + std::to_string(ka) +
                                          std::to_string(i) + std::to_string(j) +
                                          std::to_string(k) + std::to_string(l);
                        auto params = tuple_str(
                            {{"fam", fam.name},
                             {"s", std::to_string(s)},
                             {"pq", std::to_string(p) + "," + std::to_string(qq)},
                             {"abekijkl", idx}});
                        Rat bn = b.pow(-n_sum);
                        tasks.add("cor-cheb " + params, [=](bool perturb) {
                          TensorPBW lhs = commutator(
                              A(s + 1, al, be, ep, ka) + A(s - 1, al, be, ep, ka).scaled(b),
                              Zpq(n_sum, p, qq, i, j, k, l));
                          TensorPBW rhs =
                              (commutator(tl(s, al, be),
                                          tens(n_sum + p + 1, i, j, n_sum + qq, k, l)) -
                               commutator(tr(s, ep, ka),
                                          tens(n_sum + p, i, j, n_sum + qq + 1, k, l)))
                                  .scaled(bn) +
                              commutator(tl(s, al, be), tens(p, i, j, qq + 1, k, l)) -
                              commutator(tr(s, ep, ka), tens(p + 1, i, j, qq, k, l)) +
                              commutator(A(s, al, be, ep, ka),
                                         Zpq(n_sum - 1, p + 1, qq, i, j, k, l) +
                                             Zpq(n_sum - 1, p, qq + 1, i, j, k, l)) +
                              tl(s, i, be) * Zpq(n_sum, p, qq, al, j, k, l) -
                              Zpq(n_sum, p, qq, i, be, k, l) * tl(s, al, j) +
                              Zpq(n_sum, p, qq, i, j, k, ka) * tr(s, ep, l) -
                              tr(s, k, ka) * Zpq(n_sum, p, qq, i, j, ep, l);
                          return verdict(lhs - rhs, perturb);
                        });
                      }
  }

  return tasks.run(opt.jobs, opt.perturb);
}

}  // namespace oyang
