#pragma once

#include "oyang/pbw.hpp"

namespace oyang {

/// Element of U(gl_n) (x) U(gl_n): sparse map from monomial pairs to Rat.
/// Multiplication is legwise, with no cross terms.
class TensorPBW {
 public:
  struct Mono {
    PBWMonomial a, b;
    bool operator==(const Mono&) const = default;
    bool operator<(const Mono& o) const {
      if (a < o.a) return true;
      if (o.a < a) return false;
      return b < o.b;
    }
  };
  struct MonoHash {
    std::size_t operator()(const Mono& m) const {
      return PBWMonomialHash{}(m.a) * 1000003 + PBWMonomialHash{}(m.b);
    }
  };
  using Terms = std::unordered_map<Mono, Rat, MonoHash>;

  TensorPBW() : n_(0) {}
  explicit TensorPBW(int n) : n_(n) {}

  static TensorPBW unit(int n, Rat c = Rat(1)) {
    TensorPBW x(n);
    x.add_term(Mono{}, std::move(c));
    return x;
  }

  /// x (x) y.
  static TensorPBW tensor(const PBWElement& x, const PBWElement& y) {
    int n = x.rank() ? x.rank() : y.rank();
    if (x.rank() && y.rank() && x.rank() != y.rank())
      throw RankMismatch("TensorPBW::tensor: leg ranks differ");
    TensorPBW r(n);
    for (auto& [ma, ca] : x.terms())
      for (auto& [mb, cb] : y.terms()) r.add_term(Mono{ma, mb}, ca * cb);
    return r;
  }
  static TensorPBW left(const PBWElement& x) {
    return tensor(x, PBWElement::unit(x.rank()));
  }
  static TensorPBW right(const PBWElement& y) {
    return tensor(PBWElement::unit(y.rank()), y);
  }

  int rank() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  void add_term(Mono m, Rat c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) terms_.emplace(std::move(m), std::move(c));
    else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TensorPBW operator-() const {
    TensorPBW r(n_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  TensorPBW& operator+=(const TensorPBW& o) {
    merge_rank(o);
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  TensorPBW& operator-=(const TensorPBW& o) {
    merge_rank(o);
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend TensorPBW operator+(TensorPBW a, const TensorPBW& b) { return a += b; }
  friend TensorPBW operator-(TensorPBW a, const TensorPBW& b) { return a -= b; }

  TensorPBW scaled(const Rat& c) const {
    TensorPBW r(n_);
    if (c.is_zero()) return r;
    for (auto& [m, x] : terms_) r.terms_.emplace(m, c * x);
    return r;
  }

  friend TensorPBW operator*(const TensorPBW& x, const TensorPBW& y) {
    int n = x.n_ ? x.n_ : y.n_;
    if (x.n_ && y.n_ && x.n_ != y.n_)
      throw RankMismatch("TensorPBW: product of different ranks");
    TensorPBW r(n);
    for (auto& [mx, cx] : x.terms_)
      for (auto& [my, cy] : y.terms_) {
        const PBWElement& pa = mono_product(n, mx.a, my.a);
        const PBWElement& pb = mono_product(n, mx.b, my.b);
        Rat c = cx * cy;
        for (auto& [ma, ca] : pa.terms())
          for (auto& [mb, cb] : pb.terms()) r.add_term(Mono{ma, mb}, c * ca * cb);
      }
    return r;
  }

  friend TensorPBW commutator(const TensorPBW& a, const TensorPBW& b) {
    return a * b - b * a;
  }

  friend bool operator==(const TensorPBW& a, const TensorPBW& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto& [m, c] : a.terms_) {
      auto it = b.terms_.find(m);
      if (it == b.terms_.end() || it->second != c) return false;
    }
    return true;
  }
  friend bool operator!=(const TensorPBW& a, const TensorPBW& b) { return !(a == b); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<const Mono*> keys;
    for (auto& [m, c] : terms_) keys.push_back(&m);
    std::sort(keys.begin(), keys.end(),
              [](const Mono* x, const Mono* y) { return *x < *y; });
    std::string out;
    bool first = true;
    for (const Mono* m : keys) {
      if (!first) out += " + ";
      std::ostringstream os;
      os << "(" << terms_.at(*m) << ")*[";
      out += os.str() + mono_str(m->a) + " (x) " + mono_str(m->b) + "]";
      first = false;
    }
    return out;
  }

 private:
  std::string mono_str(const PBWMonomial& m) const {
    if (m.empty()) return "1";
    std::string s;
    for (auto& [g, e] : m.factors) {
      s += detail::gen_name(n_, g);
      if (e > 1) s += "^" + std::to_string(static_cast<int>(e));
    }
    return s;
  }
  void merge_rank(const TensorPBW& o) {
    if (n_ == 0) n_ = o.n_;
    else if (o.n_ != 0 && o.n_ != n_)
      throw RankMismatch("TensorPBW: mixing ranks");
  }

  int n_;
  Terms terms_;
};

inline TensorPBW scale(const Rat& c, const TensorPBW& x) { return x.scaled(c); }

/// Evaluation image of the coproduct: the n x n matrix with entries
/// sum_k (delta_ik + E_ik/s) (x) (delta_kj + E_kj/s).
inline std::vector<std::vector<TensorPBW>> coproduct_eval(int n, const Rat& s) {
  if (s.is_zero()) throw PoleError("coproduct_eval: s = 0");
  Rat inv = s.inv();
  auto t = [&](int i, int j) {
    PBWElement x = PBWElement::generator(n, i, j, inv);
    if (i == j) x += PBWElement::unit(n);
    return x;
  };
  std::vector<std::vector<TensorPBW>> m(n, std::vector<TensorPBW>(n, TensorPBW(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      TensorPBW acc(n);
      for (int k = 1; k <= n; ++k) acc += TensorPBW::tensor(t(i, k), t(k, j));
      m[i - 1][j - 1] = std::move(acc);
    }
  return m;
}

}  // namespace oyang
