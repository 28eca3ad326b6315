#include "oyang/pbw.hpp"

#include <map>
#include <sstream>

namespace oyang {
namespace detail {

namespace {

struct MonoGenKey {
  PBWMonomial m;
  int gen;
  bool operator==(const MonoGenKey&) const = default;
};

struct MonoGenKeyHash {
  std::size_t operator()(const MonoGenKey& k) const {
    return PBWMonomialHash{}(k.m) * 31 + static_cast<std::size_t>(k.gen);
  }
};

using Expansion = std::vector<std::pair<PBWMonomial, Rat>>;

// One straightening cache per rank; thread_local so grid workers never share
// mutable state.
thread_local std::unordered_map<MonoGenKey, Expansion, MonoGenKeyHash> g_cache[8];

void accumulate(std::map<PBWMonomial, Rat>& acc, const PBWMonomial& m, const Rat& c) {
  auto it = acc.find(m);
  if (it == acc.end()) {
    if (!c.is_zero()) acc.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

// [E_a, E_b] for generator codes a, b: delta_jk E_il - delta_li E_kj.
void gen_commutator(int n, int a, int b, std::vector<std::pair<int, int>>& out) {
  out.clear();
  auto [i, j] = decode_gen(n, a);
  auto [k, l] = decode_gen(n, b);
  if (j == k) out.push_back({encode_gen(n, i, l), +1});
  if (l == i) out.push_back({encode_gen(n, k, j), -1});
}

Expansion compute_mono_times_gen(int n, const PBWMonomial& m, int gen);

const Expansion& cached(int n, const PBWMonomial& m, int gen) {
  auto& cache = g_cache[n];
  MonoGenKey key{m, gen};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Expansion e = compute_mono_times_gen(n, m, gen);
  return cache.emplace(std::move(key), std::move(e)).first->second;
}

Expansion compute_mono_times_gen(int n, const PBWMonomial& m, int gen) {
  // Already ordered: append or bump the exponent.
  if (m.factors.empty() || m.factors.back().first <= gen) {
    PBWMonomial r = m;
    if (!r.factors.empty() && r.factors.back().first == gen)
      r.factors.back().second++;
    else
      r.factors.push_back({static_cast<std::uint8_t>(gen), 1});
    return {{std::move(r), Rat(1)}};
  }
  // m = m' * E_h^e with h > gen:
  // m' E_h^e E_g = (m' E_h^{e-1} E_g) E_h + m' E_h^{e-1} [E_h, E_g].
  auto [h, e] = m.factors.back();
  PBWMonomial head = m;
  if (e > 1) head.factors.back().second--;
  else head.factors.pop_back();

  std::map<PBWMonomial, Rat> acc;
  for (const auto& [m1, c1] : cached(n, head, gen))
    for (const auto& [m2, c2] : cached(n, m1, h)) accumulate(acc, m2, c1 * c2);

  std::vector<std::pair<int, int>> comm;
  gen_commutator(n, h, gen, comm);
  for (auto [g2, sgn] : comm)
    for (const auto& [m2, c2] : cached(n, head, g2))
      accumulate(acc, m2, Rat(sgn) * c2);

  Expansion out;
  out.reserve(acc.size());
  for (auto& [mm, cc] : acc) out.push_back({mm, cc});
  return out;
}

}  // namespace

const Expansion& mono_times_gen(int n, const PBWMonomial& m, int gen) {
  if (n < 1 || n >= 8) throw RankMismatch("mono_times_gen: rank out of range");
  return cached(n, m, gen);
}

std::string gen_name(int n, int gen) {
  auto [i, j] = decode_gen(n, gen);
  std::ostringstream os;
  os << "E[" << i << "," << j << "]";
  return os.str();
}

}  // namespace detail

namespace {

// (E^r)_{ij} cache: per-thread, keyed by (n, r, i, j).
thread_local std::unordered_map<std::uint32_t, PBWElement> g_power_cache;

std::uint32_t power_key(int n, int r, int i, int j) {
  return (static_cast<std::uint32_t>(n) << 24) | (static_cast<std::uint32_t>(r) << 16) |
         (static_cast<std::uint32_t>(i) << 8) | static_cast<std::uint32_t>(j);
}

struct MonoPairKey {
  PBWMonomial a, b;
  bool operator==(const MonoPairKey&) const = default;
};
struct MonoPairKeyHash {
  std::size_t operator()(const MonoPairKey& k) const {
    return PBWMonomialHash{}(k.a) * 1000003 + PBWMonomialHash{}(k.b);
  }
};

thread_local std::unordered_map<MonoPairKey, PBWElement, MonoPairKeyHash>
    g_mono_product_cache[8];

}  // namespace

const PBWElement& mono_product(int n, const PBWMonomial& a, const PBWMonomial& b) {
  auto& cache = g_mono_product_cache[n];
  MonoPairKey key{a, b};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  PBWElement cur(n);
  cur.add_term(a, Rat(1));
  for (auto& [g, e] : b.factors)
    for (int t = 0; t < e; ++t) {
      PBWElement next(n);
      for (auto& [m, c] : cur.terms())
        for (auto& [m2, q] : detail::mono_times_gen(n, m, g)) next.add_term(m2, c * q);
      cur = std::move(next);
    }
  return cache.emplace(std::move(key), std::move(cur)).first->second;
}

const PBWElement& matrix_power_entry(int n, int r, int i, int j) {
  if (r < 0) throw BadParam("matrix_power_entry: negative power");
  if (i < 1 || i > n || j < 1 || j > n)
    throw BadParam("matrix_power_entry: index out of range");
  auto key = power_key(n, r, i, j);
  auto it = g_power_cache.find(key);
  if (it != g_power_cache.end()) return it->second;

  PBWElement result(n);
  if (r == 0) {
    if (i == j) result = PBWElement::unit(n);
  } else if (r == 1) {
    result = PBWElement::generator(n, i, j);
  } else {
    for (int k = 1; k <= n; ++k) {
      // copy: the recursive call may rehash the cache under the reference
      PBWElement prev = matrix_power_entry(n, r - 1, i, k);
      result += prev * PBWElement::generator(n, k, j);
    }
  }
  return g_power_cache.emplace(key, std::move(result)).first->second;
}

PBWElement poly_of_matrix_entry(const UPoly& p, int n, int i, int j) {
  PBWElement r(n);
  for (int l = 0; l <= p.degree(); ++l) {
    Rat c = p.coeff(l);
    if (c.is_zero()) continue;
    r += matrix_power_entry(n, l, i, j).scaled(c);
  }
  return r;
}

}  // namespace oyang
