#include "dgh/completion.hpp"

#include <algorithm>

#include "dgh/linalg.hpp"

namespace dgh {

std::vector<Label> orbit(const Label& a) {
  Label b = a;
  std::sort(b.begin(), b.end());
  std::vector<Label> out;
  do out.push_back(b);
  while (std::next_permutation(b.begin(), b.end()));
  return out;
}

SuperPoly truncated(const SuperPoly& f, int N) {
  SuperPoly out(f.ring(), f.d(), f.label());
  for (auto& [m, c] : f.terms())
    if (m.degree() < N) out.add_term(m, c);
  return out;
}

SuperPoly mul_truncated(const SuperPoly& f, const SuperPoly& g, int N) {
  if (f.ring() != g.ring() || f.d() != g.d()) fail(ErrorKind::RingMismatch, "series from different rings");
  if (f.label() != g.label()) fail(ErrorKind::LabelMismatch, "series on different components");
  SuperPoly out(f.ring(), f.d(), f.label());
  for (auto& [a, ca] : f.terms()) {
    int da = a.degree();
    if (da >= N) continue;
    for (auto& [b, cb] : g.terms()) {
      if (da + b.degree() >= N) continue;
      int sg = exterior_sign(a.s, b.s);
      if (sg == 0) continue;
      Mono m;
      m.s = a.s | b.s;
      for (int r = 0; r < f.d(); ++r) m.e[r] = static_cast<std::int16_t>(a.e[r] + b.e[r]);
      Scalar c = ca * cb;
      if (sg < 0) c = -c;
      out.add_term(m, c);
    }
  }
  return out;
}

namespace {

// (b + x)^e as a univariate series below degree N
std::vector<Scalar> shifted_power(const Scalar& b, int e, int N) {
  std::vector<Scalar> out(std::max(N, 0), Scalar(0));
  if (N <= 0) return out;
  if (e >= 0) {
    Scalar binom = 1;
    for (int k = 0; k <= e && k < N; ++k) {
      out[k] = binom * power(b, e - k);
      binom = binom * (e - k) / (k + 1);
    }
    return out;
  }
  if (b == 0) fail(ErrorKind::NotInvertible, "X^-1 at a point with coordinate 0");
  // (b + x)^-n = sum_k C(n+k-1, k) (-1)^k b^{-n-k} x^k
  const int n = -e;
  Scalar binom = 1;
  for (int k = 0; k < N; ++k) {
    Scalar c = binom * power(b, -n - k);
    out[k] = (k % 2) ? Scalar(-c) : c;
    binom = binom * (n + k) / (k + 1);
  }
  return out;
}

}  // namespace

SuperPoly shift_to(const SuperPoly& f, const Label& b, int N) {
  const int d = f.d();
  if (static_cast<int>(b.size()) != d) fail(ErrorKind::InvalidParam, "point has the wrong length");
  SuperPoly out(Ring::HeckeP, d);
  for (auto& [m, c] : f.terms()) {
    SuperPoly acc = SuperPoly::monomial(Ring::HeckeP, d, Mono{{}, m.s}, c);
    for (int r = 0; r < d; ++r) {
      if (m.e[r] == 0) continue;
      auto ser = shifted_power(b[r], m.e[r], N);
      SuperPoly u(Ring::HeckeP, d);
      for (int k = 0; k < N; ++k) {
        Mono mk;
        mk.e[r] = static_cast<std::int16_t>(k);
        u.add_term(mk, ser[k]);
      }
      acc = mul_truncated(u, acc, N);
    }
    out += acc;
  }
  return truncated(out, N);
}

SuperPoly invert_series(const SuperPoly& f, int N) {
  Scalar c = f.coeff(Mono{});
  if (c == 0) fail(ErrorKind::NotInvertible, "series " + f.str() + " has no invertible constant term");
  SuperPoly one = SuperPoly::constant(f.ring(), f.d(), 1, f.label());
  SuperPoly u = truncated(one - divide(1, c) * f, N);
  SuperPoly g = one, p = one;
  // u is nilpotent below degree N: every factor raises degree or uses up an odd generator
  for (int k = 1; k <= N + f.d(); ++k) {
    p = mul_truncated(p, u, N);
    if (p.is_zero()) break;
    g += p;
  }
  return divide(1, c) * g;
}

// --- Trunc ---

void Trunc::add(const Label& b, const SuperPoly& f) {
  SuperPoly g = truncated(f, N);
  if (g.is_zero()) return;
  auto it = comps.find(b);
  if (it == comps.end()) {
    comps.emplace(b, g);
    return;
  }
  it->second += g;
  if (it->second.is_zero()) comps.erase(it);
}

Trunc& Trunc::operator+=(const Trunc& o) {
  if (side != o.side || d != o.d) fail(ErrorKind::RingMismatch, "completed elements of different modules");
  if (o.N < N) *this = at_order(o.N);
  for (auto& [b, f] : o.comps) add(b, f);
  return *this;
}

Trunc& Trunc::operator-=(const Trunc& o) { return *this += Scalar(-1) * o; }

Trunc& Trunc::operator*=(const Scalar& c) {
  if (c == 0) {
    comps.clear();
    return *this;
  }
  for (auto& [b, f] : comps) f *= c;
  return *this;
}

Trunc Trunc::at_order(int n) const {
  Trunc t{side, d, std::min(n, N), {}};
  for (auto& [b, f] : comps) t.add(b, f);
  return t;
}

bool Trunc::is_zero() const {
  for (auto& [b, f] : comps)
    if (!truncated(f, N).is_zero()) return false;
  return true;
}

std::string Trunc::str() const {
  if (comps.empty()) return "0 (order " + std::to_string(N) + ")";
  std::string s;
  for (auto& [b, f] : comps) {
    if (!s.empty()) s += " + ";
    s += side == Side::KLR ? f.str() : "(" + f.str() + ")·1_" + label_str(b);
  }
  return s + " (order " + std::to_string(N) + ")";
}

Trunc operator+(Trunc a, const Trunc& b) { return a += b; }
Trunc operator-(Trunc a, const Trunc& b) { return a -= b; }
Trunc operator*(const Scalar& c, Trunc a) { return a *= c; }

bool same_below(const Trunc& a, const Trunc& b) {
  int n = std::min(a.N, b.N);
  return (a.at_order(n) - b.at_order(n)).is_zero();
}

// --- Hecke side ---

CompletedHecke::CompletedHecke(Variant v, int d, const Scalar& q, const Label& a)
    : alg_(v, d, q), variant_(v), d_(d), q_(q), points_(orbit(a)) {
  if (static_cast<int>(a.size()) != d) fail(ErrorKind::InvalidParam, "a must have exactly d entries");
  if (v == Variant::Q)
    for (auto& x : a)
      if (x == 0) fail(ErrorKind::InvalidParam, "points of the q-variant must be nonzero");
}

CompletedHecke CompletedHecke::from_params(const ParamSet& p) {
  validate(p);
  return CompletedHecke(p.variant, p.d, p.q, p.a);
}

void CompletedHecke::check_point(const Label& b) const {
  if (!std::binary_search(points_.begin(), points_.end(), b))
    fail(ErrorKind::LabelMismatch, label_str(b) + " is not in the orbit");
}

Trunc CompletedHecke::zero(int N) const { return Trunc{Side::Hecke, d_, N, {}}; }

Trunc CompletedHecke::unit(const Label& b, int N) const {
  check_point(b);
  Trunc t = zero(N);
  t.add(b, SuperPoly::constant(Ring::HeckeP, d_, 1));
  return t;
}

Trunc CompletedHecke::one(int N) const {
  Trunc t = zero(N);
  for (auto& b : points_) t.add(b, SuperPoly::constant(Ring::HeckeP, d_, 1));
  return t;
}

Trunc CompletedHecke::poly(const SuperPoly& f, int N) const {
  Trunc t = zero(N);
  for (auto& b : points_) t.add(b, shift_to(f, b, N));
  return t;
}

Trunc CompletedHecke::x(int r, int N) const {
  if (r < 1 || r > d_) fail(ErrorKind::IndexOutOfRange, "X_" + std::to_string(r));
  return poly(SuperPoly::var(Ring::HeckeP, d_, r), N);
}

Trunc CompletedHecke::theta(int r, int N) const {
  if (r < 1 || r > d_) fail(ErrorKind::IndexOutOfRange, "theta_" + std::to_string(r));
  Trunc t = zero(N);
  for (auto& b : points_) t.add(b, SuperPoly::odd(Ring::HeckeP, d_, r));
  return t;
}

Trunc CompletedHecke::mul(const Trunc& m, const Trunc& v) const {
  Trunc out = zero(std::min(m.N, v.N));
  for (auto& [b, f] : v.comps) {
    auto it = m.comps.find(b);
    if (it != m.comps.end()) out.add(b, mul_truncated(it->second, f, out.N));
  }
  return out;
}

Trunc CompletedHecke::project(const Label& b, const Trunc& v) const {
  Trunc out = zero(v.N);
  auto it = v.comps.find(b);
  if (it != v.comps.end()) out.add(b, it->second);
  return out;
}

Trunc CompletedHecke::s(int r, const Trunc& v) const {
  if (r < 1 || r >= d_) fail(ErrorKind::IndexOutOfRange, "s_" + std::to_string(r));
  Trunc out = zero(v.N);
  for (auto& [b, f] : v.comps) {
    Label t = b;
    std::swap(t[r - 1], t[r]);
    // X_r - X_{r+1} = x_r - x_{r+1} + t_r - t_{r+1} on the target component
    out.add(t, twisted_swap(r, f, t[r - 1] - t[r]));
  }
  return out;
}

namespace {

// (c + x_r - x_{r+1})^{-1}
SuperPoly inverse_difference(int d, int r, const Scalar& c, int N) {
  SuperPoly g = SuperPoly::constant(Ring::HeckeP, d, c) + SuperPoly::var(Ring::HeckeP, d, r) -
                SuperPoly::var(Ring::HeckeP, d, r + 1);
  return invert_series(g, N);
}

}  // namespace

Trunc CompletedHecke::demazure(int r, const Trunc& v) const {
  if (r < 1 || r >= d_) fail(ErrorKind::IndexOutOfRange, "demazure " + std::to_string(r));
  bool loses = false;
  for (auto& [b, f] : v.comps)
    if (b[r - 1] == b[r]) loses = true;
  Trunc out = zero(loses ? v.N - 1 : v.N);
  for (auto& [b, f] : v.comps) {
    if (b[r - 1] == b[r]) {
      out.add(b, demazure_hecke(r, f));
      continue;
    }
    Label t = b;
    std::swap(t[r - 1], t[r]);
    SuperPoly sf = twisted_swap(r, f, t[r - 1] - t[r]);
    out.add(b, mul_truncated(inverse_difference(d_, r, b[r - 1] - b[r], v.N), f, v.N));
    out.add(t, -mul_truncated(inverse_difference(d_, r, t[r - 1] - t[r], v.N), sf, v.N));
  }
  return out;
}

Trunc CompletedHecke::T(int r, const Trunc& v) const {
  Trunc dd = demazure(r, v);
  Trunc sv = s(r, v);
  if (variant_ == Variant::Degenerate) return sv - dd;
  // q s_r - (q-1) X_{r+1} d_r
  return q_ * sv - (q_ - 1) * mul(x(r + 1, dd.N), dd);
}

Trunc CompletedHecke::Tinv(int r, const Trunc& v) const {
  if (variant_ != Variant::Q) fail(ErrorKind::VariantMismatch, "T^-1 is only a letter of the q-variant");
  return divide(1, q_) * (T(r, v) - (q_ - 1) * v);
}

Trunc CompletedHecke::act_letter(const HLetter& l, const Trunc& v) const {
  if (v.side != Side::Hecke || v.d != d_) fail(ErrorKind::RingMismatch, "not a completed Hecke module element");
  switch (l.kind) {
    case HLetter::Poly: {
      if (l.poly.ring() != alg_.ring()) fail(ErrorKind::RingMismatch, "polynomial letter from another ring");
      return mul(poly(l.poly, v.N), v);
    }
    case HLetter::T: return T(l.r, v);
    case HLetter::InvT: return Tinv(l.r, v);
    case HLetter::Theta: return mul(theta(1, v.N), v);
    case HLetter::Xi: return act(alg_.xi_word(l.r), v);
  }
  fail(ErrorKind::InternalError, "bad letter");
}

Trunc CompletedHecke::act(const HeckeWord& w, const Trunc& v) const {
  Trunc g = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) g = act_letter(*it, g);
  return g;
}

std::vector<Trunc> CompletedHecke::probes(int deg, int N) const {
  std::vector<Trunc> out;
  for (auto& b : points_)
    for (std::uint16_t s = 0; s < (1u << d_); ++s)
      for (auto& e : exponent_vectors(d_, deg)) {
        Trunc t = zero(N);
        t.add(b, SuperPoly::monomial(Ring::HeckeP, d_, Mono{e, s}));
        if (!t.is_zero()) out.push_back(t);
      }
  return out;
}

// --- KLR side ---

CompletedKLR::CompletedKLR(KLRAlgebra alg) : alg_(std::move(alg)) {}

Trunc CompletedKLR::zero(int N) const { return Trunc{Side::KLR, d(), N, {}}; }

Trunc CompletedKLR::unit(const Label& i, int N) const {
  alg_.check_source(i);
  Trunc t = zero(N);
  t.add(i, alg_.one(i));
  return t;
}

Trunc CompletedKLR::one(int N) const {
  Trunc t = zero(N);
  for (auto& i : points()) t.add(i, alg_.one(i));
  return t;
}

Trunc CompletedKLR::y(int r, int N) const {
  Trunc t = zero(N);
  for (auto& i : points()) t.add(i, alg_.y(r, i));
  return t;
}

Trunc CompletedKLR::omega(int r, int N) const {
  Trunc t = zero(N);
  for (auto& i : points()) t.add(i, alg_.omega(r, i));
  return t;
}

Trunc CompletedKLR::mul(const Trunc& m, const Trunc& v) const {
  Trunc out = zero(std::min(m.N, v.N));
  for (auto& [i, f] : v.comps) {
    auto it = m.comps.find(i);
    if (it != m.comps.end()) out.add(i, mul_truncated(it->second, f, out.N));
  }
  return out;
}

Trunc CompletedKLR::project(const Label& i, const Trunc& v) const {
  Trunc out = zero(v.N);
  auto it = v.comps.find(i);
  if (it != v.comps.end()) out.add(i, it->second);
  return out;
}

Trunc CompletedKLR::s(int r, const Trunc& v) const {
  if (r < 1 || r >= d()) fail(ErrorKind::IndexOutOfRange, "s_" + std::to_string(r));
  Trunc out = zero(v.N);
  for (auto& [i, f] : v.comps) {
    SuperPoly g = sym_act_klr(r, f);
    out.add(g.label(), g);
  }
  return out;
}

Trunc CompletedKLR::tau(int r, const Trunc& v) const {
  if (r < 1 || r >= d()) fail(ErrorKind::IndexOutOfRange, "tau_" + std::to_string(r));
  bool loses = false;
  for (auto& [i, f] : v.comps)
    if (i[r - 1] == i[r]) loses = true;
  Trunc out = zero(loses ? v.N - 1 : v.N);
  for (auto& [i, f] : v.comps) {
    SuperPoly g = alg_.act_letter(KLRLetter::tau(r), f);
    if (!g.is_zero()) out.add(g.label(), g);
  }
  return out;
}

Trunc CompletedKLR::act_letter(const KLRLetter& l, const Trunc& v) const {
  if (v.side != Side::KLR || v.d != d()) fail(ErrorKind::RingMismatch, "not a completed KLR module element");
  switch (l.kind) {
    case KLRLetter::Tau: return tau(l.r, v);
    case KLRLetter::Dot: return mul(y(l.r, v.N), v);
    case KLRLetter::Float: return mul(omega(1, v.N), v);
  }
  fail(ErrorKind::InternalError, "bad letter");
}

Trunc CompletedKLR::act(const KLRWord& w, const Trunc& v) const {
  Trunc g = project(w.source, v);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) g = act_letter(*it, g);
  return g;
}

std::vector<Trunc> CompletedKLR::probes(int deg, int N) const {
  std::vector<Trunc> out;
  for (auto& i : points())
    for (std::uint16_t s = 0; s < (1u << d()); ++s)
      for (auto& e : exponent_vectors(d(), deg)) {
        Trunc t = zero(N);
        t.add(i, SuperPoly::monomial(Ring::KLR, d(), Mono{e, s}, 1, i));
        if (!t.is_zero()) out.push_back(t);
      }
  return out;
}

Trunc completed_act(const CompletedHecke& m, const HeckeElement& h, const Trunc& v) {
  if (h.variant() != m.variant() || h.d() != m.d()) fail(ErrorKind::VariantMismatch, "element of another algebra");
  HeckeAlgebra alg(m.variant(), m.d(), m.q());
  Trunc out = m.zero(v.N);
  bool first = true;
  for (auto& [k, c] : h.terms()) {
    Trunc t = c * m.act(alg.key_word(k), v);
    if (first) {
      out = t;
      first = false;
    } else {
      out += t;
    }
  }
  return out;
}

Trunc completed_act(const CompletedKLR& m, const KLRElement& e, const Trunc& v) {
  Trunc out = m.zero(v.N);
  bool first = true;
  for (auto& [w, c] : e.terms()) {
    Trunc t = c * m.act(w, v);
    if (first) {
      out = t;
      first = false;
    } else {
      out += t;
    }
  }
  return out;
}

Report completed_basis_check(const ParamSet& p, int N) {
  auto m = CompletedHecke::from_params(p);
  HeckeAlgebra alg = HeckeAlgebra::from_params(p);
  const int d = p.d;
  const SymGroup& g = SymGroup::get(d);
  Report rep;
  const std::string pre = std::string("completion.") + variant_name(p.variant) + ".d" + std::to_string(d) + ".N" +
                          std::to_string(N) + ".free.";
  // Coefficients sit on the left, so independence is checked per target component: no combination
  // sum f_j T_w xi^c with deg f_j < N may vanish on the probes. Outputs are kept K orders past N
  // since the operators can push leading terms up.
  const int K = d * (d - 1) / 2 + 1;
  const int probe_deg = K;
  auto probes = m.probes(probe_deg, N + K + probe_deg + d);
  std::vector<std::string> names;
  std::vector<std::vector<Trunc>> out;
  for (int w = 0; w < g.size(); ++w)
    for (std::uint16_t c = 0; c < (1u << d); ++c) {
      HKey k;
      k.w = w;
      k.b = c;
      HeckeWord word = alg.key_word(k);
      names.push_back("T_" + g.perm(w).str() + "·xi^" + std::to_string(c));
      out.emplace_back();
      for (auto& pr : probes) {
        out.back().push_back(m.act(word, pr));
        if (out.back().back().N < N + K) fail(ErrorKind::InternalError, "probe order too small for the basis check");
      }
    }
  auto coeff_monos = exponent_vectors(d, N - 1);
  for (auto& b : m.points()) {
    rep.run(pre + label_str(b), [&]() -> std::optional<std::string> {
      std::map<std::pair<int, Mono>, int> rows;
      Echelon ech(true);
      std::vector<std::string> cols;
      for (int j = 0; j < static_cast<int>(names.size()); ++j)
        for (auto& e : coeff_monos) {
          auto xe = SuperPoly::monomial(Ring::HeckeP, d, Mono{e, 0});
          std::map<int, Scalar> col;
          for (int pi = 0; pi < static_cast<int>(probes.size()); ++pi) {
            auto it = out[j][pi].comps.find(b);
            if (it == out[j][pi].comps.end()) continue;
            SuperPoly v = mul_truncated(xe, it->second, N + K);
            for (auto& [mono, cf] : v.terms()) {
              auto r = rows.emplace(std::make_pair(pi, mono), static_cast<int>(rows.size())).first;
              col[r->second] += cf;
            }
          }
          cols.push_back(xe.str() + "·" + names[j]);
          SparseVec kernel;
          if (!ech.insert(sparse_from_map(col), static_cast<int>(cols.size()) - 1, &kernel)) {
            std::string wit;
            for (auto& [id, cf] : kernel) wit += (wit.empty() ? "" : " + ") + to_string(cf) + "·" + cols[id];
            return "dependent on the probes: 1_" + label_str(b) + "·(" + wit + ") = 0";
          }
        }
      return std::nullopt;
    });
  }
  return rep;
}

}  // namespace dgh
