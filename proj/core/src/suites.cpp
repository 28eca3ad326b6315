#include "oyang/suites.hpp"

#include <random>

#include "oyang/dickson.hpp"
#include "oyang/polarization.hpp"
#include "oyang/recurrence.hpp"
#include "oyang/relations.hpp"
#include "oyang/rmatrix.hpp"

namespace oyang {

namespace {

/// Seeded generator of small exact rationals, rejecting excluded points.
class SampleGen {
 public:
  explicit SampleGen(std::uint64_t seed) : rng_(seed ^ 0x9e3779b97f4a7c15ull) {}

  Rat rational(long lo = -12, long hi = 12, long den_max = 4) {
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<long> den(1, den_max);
    return Rat(num(rng_), den(rng_));
  }

  Rat nonzero(long lo = -12, long hi = 12) {
    for (;;) {
      Rat r = rational(lo, hi);
      if (!r.is_zero()) return r;
    }
  }

  /// s-point outside {0, 1, ..., n-1} (the shifted pole set).
  Rat qdet_point(int n) {
    for (;;) {
      Rat r = rational(2, 24, 3);
      bool ok = !r.is_zero();
      for (int k = 0; k < n && ok; ++k)
        if (r == Rat(k)) ok = false;
      if (ok) return r;
    }
  }

  std::pair<Rat, Rat> distinct_pair(int guard_n = 0) {
    for (;;) {
      Rat a = guard_n ? qdet_point(guard_n) : nonzero();
      Rat b = guard_n ? qdet_point(guard_n) : nonzero();
      if (a != b) return {a, b};
    }
  }

  std::array<Rat, 3> distinct_triple() {
    for (;;) {
      Rat a = nonzero(), b = nonzero(), c = nonzero();
      if (a != b && b != c && a != c) return {a, b, c};
    }
  }

  std::uint64_t raw() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

GridOptions grid_options(const RunConfig& cfg, SampleGen& gen) {
  GridOptions opt;
  opt.jobs = cfg.jobs > 0 ? cfg.jobs : default_jobs();
  if (cfg.negative_controls) opt.perturb = gen.raw();
  return opt;
}

RecurrenceFamily family_from_config(const RunConfig& cfg, const std::string& name) {
  FamilyParams p;
  p.alpha = cfg.alpha;
  p.beta = cfg.beta;
  p.a = cfg.nonorth_a;
  p.q = cfg.q;
  if (name == "monomial") return make_family(FamilyKind::Monomial, p);
  if (name == "hermite") return make_family(FamilyKind::Hermite, p);
  if (name == "dickson") return make_family(FamilyKind::Dickson, p);
  if (name == "nonorthogonal") return make_family(FamilyKind::NonOrthogonal, p);
  throw BadParam("unknown family '" + name + "'");
}

using Runner = std::function<std::vector<CheckRecord>(const RunConfig&, SampleGen&)>;

std::vector<std::pair<std::string, Runner>> build_registry() {
  std::vector<std::pair<std::string, Runner>> reg;

  reg.push_back({"base", [](const RunConfig& cfg, SampleGen& gen) {
    return check_base_identity(cfg.n, cfg.rmax, cfg.smax, grid_options(cfg, gen));
  }});

  reg.push_back({"oy", [](const RunConfig& cfg, SampleGen& gen) {
    std::vector<CheckRecord> all;
    for (const char* fname : {"monomial", "hermite", "dickson", "nonorthogonal"}) {
      auto rec = check_oy_relations(family_from_config(cfg, fname), cfg.n, cfg.rmax,
                                    cfg.smax, grid_options(cfg, gen));
      all.insert(all.end(), rec.begin(), rec.end());
    }
    return all;
  }});

  reg.push_back({"series", [](const RunConfig& cfg, SampleGen& gen) {
    std::vector<CheckRecord> all;
    for (const char* fname : {"monomial", "hermite", "dickson"}) {
      auto rec = check_series_relation(family_from_config(cfg, fname), cfg.n,
                                       std::min(cfg.N, 6), grid_options(cfg, gen));
      all.insert(all.end(), rec.begin(), rec.end());
    }
    // shifted family: associated-polynomial form
    auto shifted = shift_family(family_from_config(cfg, "hermite"), 2);
    auto rec = check_series_relation(shifted, cfg.n, std::min(cfg.N, 6),
                                     grid_options(cfg, gen));
    all.insert(all.end(), rec.begin(), rec.end());
    return all;
  }});

  reg.push_back({"omega", [](const RunConfig& cfg, SampleGen& gen) {
    std::vector<CheckRecord> all;
    for (const char* fname : {"hermite", "dickson"}) {
      auto rec = check_omega(family_from_config(cfg, fname), cfg.n, cfg.rmax, cfg.smax,
                             grid_options(cfg, gen));
      all.insert(all.end(), rec.begin(), rec.end());
    }
    return all;
  }});

  reg.push_back({"pochhammer", [](const RunConfig& cfg, SampleGen& gen) {
    return check_pochhammer(cfg.q, cfg.n, cfg.rmax, cfg.smax, std::min(cfg.N, 6),
                            grid_options(cfg, gen));
  }});

  reg.push_back({"cd", [](const RunConfig& cfg, SampleGen& gen) {
    std::vector<CheckRecord> all;
    for (const char* fname : {"hermite", "dickson"}) {
      auto rec = check_cd(family_from_config(cfg, fname), 2, 2, std::min(cfg.smax, 2),
                          grid_options(cfg, gen));
      all.insert(all.end(), rec.begin(), rec.end());
    }
    return all;
  }});

  reg.push_back({"dickson-rtt", [](const RunConfig& cfg, SampleGen& gen) {
    std::vector<CheckRecord> all;
    for (int n : {2, 3}) {
      std::vector<std::pair<Rat, Rat>> pairs;
      for (int k = 0; k < cfg.samples; ++k) pairs.push_back(gen.distinct_pair());
      auto rec = check_rtt_eval(n, pairs, grid_options(cfg, gen));
      all.insert(all.end(), rec.begin(), rec.end());
    }
    return all;
  }});

  reg.push_back({"dickson-comm", [](const RunConfig& cfg, SampleGen& gen) {
    std::vector<CheckRecord> all;
    for (Rat alpha : {cfg.alpha, cfg.alpha + Rat(1)}) {
      auto rec = check_commutation_formula(alpha, cfg.beta, cfg.n,
                                           std::min(cfg.rmax, 3), std::min(cfg.smax, 3),
                                           grid_options(cfg, gen));
      all.insert(all.end(), rec.begin(), rec.end());
    }
    return all;
  }});

  reg.push_back({"phi", [](const RunConfig& cfg, SampleGen& gen) {
    return check_phi_group(cfg.beta, cfg.c, cfg.d, cfg.N, grid_options(cfg, gen));
  }});

  reg.push_back({"eval-auto", [](const RunConfig& cfg, SampleGen& gen) {
    std::vector<Rat> f_coeffs = {gen.rational(), gen.rational()};
    std::vector<std::vector<Rat>> B = {{Rat(1), Rat(1)}, {Rat(0), Rat(1)}};
    if (cfg.n == 3)
      B = {{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(2), Rat(0), Rat(1)}};
    std::vector<std::pair<Rat, Rat>> pairs;
    for (int k = 0; k < cfg.samples; ++k) pairs.push_back(gen.distinct_pair());
    return check_eval_hom_and_autos(cfg.beta, cfg.n, std::min(cfg.N, 6), f_coeffs, B,
                                    pairs, grid_options(cfg, gen));
  }});

  reg.push_back({"qdet", [](const RunConfig& cfg, SampleGen& gen) {
    std::vector<CheckRecord> all;
    for (int n : {2, 3}) {
      std::vector<Rat> points;
      for (int k = 0; k < std::min(cfg.samples, 3); ++k) points.push_back(gen.qdet_point(n));
      std::vector<std::pair<Rat, Rat>> pairs;
      for (int k = 0; k < std::min(cfg.samples, 3); ++k)
        pairs.push_back(gen.distinct_pair(n));
      auto rec = check_qdet_properties(n, points, pairs, grid_options(cfg, gen));
      all.insert(all.end(), rec.begin(), rec.end());
    }
    return all;
  }});

  reg.push_back({"ybe", [](const RunConfig& cfg, SampleGen& gen) {
    std::vector<std::array<Rat, 3>> triples;
    for (int k = 0; k < std::max(cfg.samples, 10); ++k) {
      auto t = gen.distinct_triple();
      triples.push_back(t);
    }
    std::vector<CheckRecord> all = check_ybe("homogeneous", cfg.n, triples,
                                             grid_options(cfg, gen));
    std::vector<std::array<Rat, 3>> striples;
    for (int k = 0; k < std::max(cfg.samples, 10); ++k)
      striples.push_back(gen.distinct_triple());
    auto rec = check_ybe("inhomogeneous-s", cfg.n, striples, grid_options(cfg, gen));
    all.insert(all.end(), rec.begin(), rec.end());
    return all;
  }});

  reg.push_back({"fusion", [](const RunConfig& cfg, SampleGen& gen) {
    std::vector<CheckRecord> all;
    for (int m : {2, 3}) {
      auto rec = check_fusion(cfg.n, m, Rat(10), grid_options(cfg, gen));
      all.insert(all.end(), rec.begin(), rec.end());
    }
    return all;
  }});

  reg.push_back({"fused-rtt", [](const RunConfig& cfg, SampleGen& gen) {
    std::vector<CheckRecord> all;
    auto rec = check_fused_rtt(cfg.n, 2, {Rat(5), Rat(3)}, grid_options(cfg, gen));
    all.insert(all.end(), rec.begin(), rec.end());
    rec = check_fused_rtt(cfg.n, 3, {Rat(9), Rat(5), Rat(2)}, grid_options(cfg, gen));
    all.insert(all.end(), rec.begin(), rec.end());
    return all;
  }});

  reg.push_back({"hermite-ops", [](const RunConfig& cfg, SampleGen& gen) {
    std::vector<CheckRecord> all;
    for (auto conv : {DerivConvention::FirstSlot, DerivConvention::SecondSlot,
                      DerivConvention::Difference, DerivConvention::Sum}) {
      auto rec = check_hermite_ops(conv, cfg.test_degree, 2, grid_options(cfg, gen));
      all.insert(all.end(), rec.begin(), rec.end());
    }
    return all;
  }});

  reg.push_back({"polarized", [](const RunConfig& cfg, SampleGen& gen) {
    std::vector<CheckRecord> all;
    auto run = [&](int n_gl, RatMatrix A, RatMatrix B) {
      std::vector<std::pair<Rat, Rat>> pairs;
      for (int k = 0; k < std::min(cfg.samples, 3); ++k)
        pairs.push_back(gen.distinct_pair());
      auto rec = check_polarized_suite(n_gl, A, B, std::min(cfg.rmax, 3), cfg.N, pairs,
                                       grid_options(cfg, gen));
      all.insert(all.end(), rec.begin(), rec.end());
    };
    // antisymmetric arguments: the epsilon form is symmetric on this domain
    {
      RatMatrix J = zero_matrix(2, 2);
      J[0][1] = Rat(1);
      J[1][0] = Rat(-1);
      run(2, J, J);
    }
    {
      RatMatrix A = zero_matrix(3, 3), B = zero_matrix(3, 3);
      A[0][1] = Rat(1);
      A[1][0] = Rat(-1);
      B[0][2] = Rat(1);
      B[2][0] = Rat(-1);
      run(3, A, B);
    }
    return all;
  }});

  reg.push_back({"ternary", [](const RunConfig& cfg, SampleGen& gen) {
    TaskList tasks("ternary");
    std::string name = cfg.algebra;
    Rat ta = cfg.ternary_a, tb = cfg.ternary_b;
    std::uint64_t permseed = gen.raw();
    tasks.add("algebra=" + name, [=](bool perturb) {
      LieAlgebraSC g = catalog_algebra(name, ta, tb);
      TernaryBuild t = build_ternary(g);
      if (!t.closure_failure.empty()) return std::make_pair(false, t.closure_failure);
      if (!t.bracket_formula_ok)
        return std::make_pair(false, "bracket mismatch: " + t.bracket_witness);
      // signature invariance under a seeded basis permutation of g
      std::vector<int> perm(g.dim());
      std::iota(perm.begin(), perm.end(), 0);
      std::mt19937_64 prng(permseed);
      std::shuffle(perm.begin(), perm.end(), prng);
      TernaryBuild t2 = build_ternary(g.permuted(perm));
      LieSignature s2 = t2.signature;
      if (perturb) s2.dim += 1;
      if (!(t.signature == s2))
        return std::make_pair(false, "signature changed under basis permutation: " +
                                         t.signature.str() + " vs " + s2.str());
      return std::make_pair(true, std::string());
    });
    auto opt = grid_options(cfg, gen);
    return tasks.run(opt.jobs, opt.perturb);
  }});

  reg.push_back({"ternary-table", [](const RunConfig& cfg, SampleGen& gen) {
    return check_ternary_table(cfg.ternary_a, cfg.ternary_b, grid_options(cfg, gen));
  }});

  reg.push_back({"trace-epsilon", [](const RunConfig& cfg, SampleGen& gen) {
    return check_trace_and_epsilon(catalog_algebra(cfg.algebra, cfg.ternary_a, cfg.ternary_b),
                                   grid_options(cfg, gen));
  }});

  reg.push_back({"yt", [](const RunConfig& cfg, SampleGen& gen) {
    std::vector<std::pair<Rat, Rat>> pairs;
    for (int k = 0; k < cfg.samples; ++k) pairs.push_back(gen.distinct_pair());
    std::vector<Rat> hs = {Rat(1), Rat(1, 2), Rat(1, 100)};
    LieAlgebraSC g = catalog_algebra(cfg.algebra, cfg.ternary_a, cfg.ternary_b);
    return check_yt_suite(g, std::min(cfg.rmax, 3), hs, pairs, grid_options(cfg, gen));
  }});

  reg.push_back({"sl2-span", [](const RunConfig& cfg, SampleGen& gen) {
    return check_sl2_span(grid_options(cfg, gen));
  }});

  return reg;
}

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const auto reg = build_registry();
  return reg;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

std::vector<SuiteResult> run_suite(const RunConfig& config) {
  std::vector<SuiteResult> out;
  SampleGen gen(config.seed);
  bool found = false;
  for (auto& [name, fn] : registry()) {
    if (config.suite != "all" && config.suite != name) continue;
    found = true;
    SuiteResult res;
    res.suite = name;
    res.records = fn(config, gen);
    out.push_back(std::move(res));
  }
  if (!found) throw BadParam("unknown suite '" + config.suite + "'");
  return out;
}

}  // namespace oyang
