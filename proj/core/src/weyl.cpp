#include "oyang/weyl.hpp"

#include <sstream>

namespace oyang {

namespace {

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

RationalFn3 multi_derivative(RationalFn3 f, const std::array<int, 3>& d) {
  for (int var = 0; var < 3; ++var)
    for (int k = 0; k < d[var]; ++k) f = f.derivative(var);
  return f;
}

}  // namespace

WeylOp operator*(const WeylOp& a, const WeylOp& b) {
  WeylOp r;
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) {
      // (rho d^alpha)(sigma d^beta)
      for (int g0 = 0; g0 <= ta.d[0]; ++g0)
        for (int g1 = 0; g1 <= ta.d[1]; ++g1)
          for (int g2 = 0; g2 <= ta.d[2]; ++g2) {
            long mult = binom(ta.d[0], g0) * binom(ta.d[1], g1) * binom(ta.d[2], g2);
            RationalFn3 sig = multi_derivative(tb.coeff, {g0, g1, g2});
            if (sig.is_zero()) continue;
            RationalFn3 coeff = ta.coeff * sig * RationalFn3(Rat(mult));
            std::array<int, 3> d{ta.d[0] - g0 + tb.d[0], ta.d[1] - g1 + tb.d[1],
                                 ta.d[2] - g2 + tb.d[2]};
            r.add_term(std::move(coeff), d);
          }
    }
  return r;
}

RationalFn3 weyl_apply(const WeylOp& op, const RationalFn3& f) {
  RationalFn3 out;
  for (const auto& t : op.terms()) out = out + t.coeff * multi_derivative(f, t.d);
  return out;
}

std::string WeylOp::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  static const char* names[3] = {"u", "v", "w"};
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    os << "(" << t.coeff.str() << ")";
    for (int k = 0; k < 3; ++k)
      if (t.d[k] > 0) {
        os << "*d" << names[k];
        if (t.d[k] > 1) os << "^" << t.d[k];
      }
    first = false;
  }
  return os.str();
}

std::string MPoly3::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  static const char* names[3] = {"u", "v", "w"};
  bool first = true;
  for (auto& [e, c] : c_) {
    if (!first) os << " + ";
    os << "(" << c << ")";
    for (int k = 0; k < 3; ++k)
      if (e[k] > 0) {
        os << "*" << names[k];
        if (e[k] > 1) os << "^" << e[k];
      }
    first = false;
  }
  return os.str();
}

std::string RationalFn3::str() const {
  if (den_ == MPoly3(Rat(1))) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace oyang
