#include "dgh/bkr.hpp"

#include <algorithm>
#include <memory>

namespace dgh {

namespace {

Label swapped(Label l, int r) {
  std::swap(l[r - 1], l[r]);
  return l;
}

SuperPoly hvar(int d, int r) { return SuperPoly::var(Ring::HeckeP, d, r); }
SuperPoly hconst(int d, const Scalar& c) { return SuperPoly::constant(Ring::HeckeP, d, c); }

int count_T(const HeckeWord& w) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](const HLetter& l) {
    return l.kind == HLetter::T || l.kind == HLetter::InvT;
  }));
}

}  // namespace

BKRIso::BKRIso(const ParamSet& p, int order, bool flip_sign)
    : p_(p),
      alg_(HeckeAlgebra::from_params(p)),
      hecke_(CompletedHecke::from_params(p)),
      klr_(KLRAlgebra::from_params(p)),
      base_(p.variant == Variant::Q ? p.q : Scalar(1)) {
  if (order < 1) fail(ErrorKind::InvalidParam, "truncation order must be positive");
  alpha_.N = order;
  build_alpha(flip_sign);
  build_gamma();
}

// x_r = X_r - b_r goes to Y_r, resp. b_r Y_r
SuperPoly BKRIso::to_klr(const SuperPoly& f, const Label& b) const {
  SuperPoly out(Ring::KLR, p_.d, b);
  for (auto& [m, c] : f.terms()) {
    Scalar k = c;
    if (p_.variant == Variant::Q)
      for (int r = 0; r < p_.d; ++r) k *= power(b[r], m.e[r]);
    out.add_term(m, k);
  }
  return out;
}

SuperPoly BKRIso::to_hecke(const SuperPoly& f, const Label& b) const {
  SuperPoly out(Ring::HeckeP, p_.d);
  for (auto& [m, c] : f.terms()) {
    Scalar k = c;
    if (p_.variant == Variant::Q)
      for (int r = 0; r < p_.d; ++r) k *= power(b[r], -m.e[r]);
    out.add_term(m, k);
  }
  return out;
}

Trunc BKRIso::multiply_klr(const std::map<Label, SuperPoly>& m, const Trunc& v) const {
  Trunc t = klr_.zero(alpha_.N);
  for (auto& [b, f] : m) t.add(b, f);
  return klr_.mul(t, v);
}

Trunc BKRIso::multiply_hecke(const std::map<Label, SuperPoly>& m, const Trunc& v) const {
  Trunc t = hecke_.zero(alpha_.N);
  for (auto& [b, f] : m) t.add(b, f);
  return hecke_.mul(t, v);
}

void BKRIso::build_alpha(bool flip_sign) {
  const int d = p_.d;
  const int target = alpha_.N;
  // each step with equal neighbouring labels costs one order
  const int n1 = target + d - 1;
  const auto& points = hecke_.points();

  Trunc a1 = klr_.zero(n1);
  for (auto& b : points) {
    SuperPoly P = hconst(d, 1);
    int lam = 0;
    for (auto& Qk : p_.Q) {
      if (Qk == b[0])
        ++lam;
      else
        P = P * (hvar(d, 1) + hconst(d, b[0] - Qk));
    }
    Scalar kappa = p_.variant == Variant::Q ? b[0] : Scalar(1);
    Scalar c = power(-kappa, lam);
    if (flip_sign) c = -c;
    a1.add(b, mul_mono(c * to_klr(truncated(P, n1), b), Mono{{}, 1}));
  }
  alpha_.theta.push_back(a1);

  for (int r = 2; r <= d; ++r) {
    const Trunc& prev = alpha_.theta.back();
    Trunc sp = klr_.s(r - 1, prev);
    bool loses = false;
    for (auto& b : points)
      if (b[r - 2] == b[r - 1]) loses = true;
    const int n = loses ? prev.N - 1 : prev.N;
    Trunc next = klr_.zero(n);
    for (auto& b : points) {
      auto it = prev.comps.find(b);
      SuperPoly f = it == prev.comps.end() ? SuperPoly(Ring::KLR, d, b) : it->second;
      if (b[r - 2] == b[r - 1]) {
        // (s f - f) / (kappa (Y_{r-1} - Y_r)) = -kappa^{-1} times the Demazure operator
        Scalar kappa = p_.variant == Variant::Q ? b[r - 2] : Scalar(1);
        next.add(b, divide(-1, kappa) * demazure_klr(r - 1, f));
        continue;
      }
      auto jt = sp.comps.find(b);
      SuperPoly g = (jt == sp.comps.end() ? SuperPoly(Ring::KLR, d, b) : jt->second) - f;
      SuperPoly D = to_klr(shift_to(hvar(d, r - 1) - hvar(d, r), b, n), b);
      next.add(b, mul_truncated(invert_series(D, n), g, n));
    }
    alpha_.theta.push_back(next);
  }
  for (auto& t : alpha_.theta) alpha_.N = std::min(alpha_.N, t.N);
  for (auto& t : alpha_.theta) t = t.at_order(alpha_.N);

  // back substitution along the triangular form
  const int N = alpha_.N;
  std::vector<Trunc> omega(d, hecke_.zero(N));
  for (auto& b : points) {
    std::vector<SuperPoly> B;
    for (int r = 1; r <= d; ++r) {
      auto it = alpha_.theta[r - 1].comps.find(b);
      SuperPoly A = it == alpha_.theta[r - 1].comps.end() ? SuperPoly(Ring::KLR, d, b) : it->second;
      SuperPoly rest = SuperPoly::odd(Ring::HeckeP, d, r);
      SuperPoly lead(Ring::HeckeP, d);
      for (int t = 1; t <= r; ++t) {
        SuperPoly Pt = to_hecke(A.odd_component(static_cast<std::uint16_t>(1u << (t - 1))), b);
        if (t == r)
          lead = Pt;
        else
          rest -= mul_truncated(Pt, B[t - 1], N);
      }
      B.push_back(mul_truncated(invert_series(lead, N), rest, N));
      omega[r - 1].add(b, B.back());
    }
  }
  alpha_.omega = omega;

  for (auto& b : points)
    for (std::uint16_t S = 0; S < (1u << d); ++S) {
      SuperPoly th = SuperPoly::constant(Ring::KLR, d, 1, b);
      SuperPoly om = hconst(d, 1);
      for (int r = 1; r <= d; ++r) {
        if (!(S & (1u << (r - 1)))) continue;
        auto it = alpha_.theta[r - 1].comps.find(b);
        th = it == alpha_.theta[r - 1].comps.end() ? SuperPoly(Ring::KLR, d, b) : mul_truncated(th, it->second, N);
        auto jt = alpha_.omega[r - 1].comps.find(b);
        om = jt == alpha_.omega[r - 1].comps.end() ? SuperPoly(Ring::HeckeP, d) : mul_truncated(om, jt->second, N);
      }
      theta_prod_[{b, S}] = th;
      omega_prod_[{b, S}] = om;
    }

  // d_Lambda(P Omega_1 1_b) = P (-Y_1)^{Lambda_{b_1}}
  auto lambda = p_.lambda();
  for (auto& b : points) {
    auto it = alpha_.theta[0].comps.find(b);
    if (it == alpha_.theta[0].comps.end()) continue;
    SuperPoly P = it->second.odd_component(1);
    int lam = lambda.count(b[0]) ? lambda.at(b[0]) : 0;
    SuperPoly y1 = SuperPoly::var(Ring::KLR, d, 1, b);
    for (int k = 0; k < lam; ++k) P = mul_truncated(P, -y1, N);
    d_theta_[b] = P;
  }
}

void BKRIso::build_gamma() {
  const int d = p_.d;
  const int N = alpha_.N;
  const bool q = p_.variant == Variant::Q;
  const Quiver& quiver = klr_.algebra().quiver();
  gamma_.entries.assign(d > 0 ? d - 1 : 0, {});
  for (int r = 1; r < d; ++r) {
    SuperPoly D = hvar(d, r) - hvar(d, r + 1);
    SuperPoly M = q ? p_.q * hvar(d, r) - hvar(d, r + 1) : D + hconst(d, 1);
    for (auto& i : hecke_.points()) {
      GammaEntry e;
      e.source = i;
      e.target = swapped(i, r);
      const Label& t = e.target;
      SuperPoly Mi = shift_to(M, i, N), Di = shift_to(D, i, N);
      SuperPoly Mt = shift_to(M, t, N), Dt = shift_to(D, t, N);
      if (i[r - 1] == i[r]) {
        e.kind = GammaEntry::Equal;
        Scalar kappa = q ? i[r - 1] : Scalar(1);
        e.a = hconst(d, base_);
        e.b = divide(-1, kappa) * Mi;
        e.f = invert_series(e.b, N);
      } else {
        e.a = hconst(d, base_) - mul_truncated(Mi, invert_series(Di, N), N);
        if (!quiver.h(i[r - 1], i[r])) {
          e.kind = GammaEntry::NoArrow;
          e.b = mul_truncated(Mt, invert_series(Dt, N), N);
          e.f = mul_truncated(Dt, invert_series(Mt, N), N);
        } else {
          // M on the target is a multiple of the crossing polynomial
          e.kind = GammaEntry::Arrow;
          SuperPoly P = klr_.algebra().P(i[r - 1], i[r], r, t);
          SuperPoly Mk = to_klr(Mt, t);
          Mono yr;
          yr.e[r - 1] = 1;
          Scalar lam = divide(Mk.coeff(yr), P.coeff(yr));
          if (lam == 0 || Mk != lam * P)
            fail(ErrorKind::InternalError, "edge case: " + Mk.str() + " is not a multiple of " + P.str());
          e.b = lam * invert_series(Dt, N);
          e.f = divide(1, lam) * Dt;
        }
      }
      e.ka = to_klr(e.a, i);
      e.kb = to_klr(e.b, t);
      gamma_.entries[r - 1].emplace(i, std::move(e));
    }
  }
}

Trunc BKRIso::alpha_prime(const Trunc& v) const {
  if (v.side != Side::Hecke) fail(ErrorKind::RingMismatch, "alpha' takes a Hecke-side element");
  Trunc out = klr_.zero(v.N);
  for (auto& [b, f] : v.comps) {
    if (!f.exterior_free()) fail(ErrorKind::InvalidParam, "alpha' is defined on exterior-free elements");
    out.add(b, to_klr(f, b));
  }
  return out;
}

Trunc BKRIso::alpha_prime_inverse(const Trunc& v) const {
  if (v.side != Side::KLR) fail(ErrorKind::RingMismatch, "alpha'^-1 takes a KLR-side element");
  Trunc out = hecke_.zero(v.N);
  for (auto& [b, f] : v.comps) {
    if (!f.exterior_free()) fail(ErrorKind::InvalidParam, "alpha'^-1 is defined on exterior-free elements");
    out.add(b, to_hecke(f, b));
  }
  return out;
}

Trunc BKRIso::alpha(const Trunc& v) const {
  if (v.side != Side::Hecke) fail(ErrorKind::RingMismatch, "alpha takes a Hecke-side element");
  const int n = std::min(v.N, alpha_.N);
  Trunc out = klr_.zero(n);
  for (auto& [b, f] : v.comps) {
    std::map<std::uint16_t, SuperPoly> parts;
    for (auto& [m, c] : f.terms()) {
      auto [it, fresh] = parts.try_emplace(m.s, SuperPoly(Ring::HeckeP, p_.d));
      it->second.add_term(Mono{m.e, 0}, c);
    }
    for (auto& [S, g] : parts) out.add(b, mul_truncated(to_klr(g, b), theta_prod_.at({b, S}), n));
  }
  return out;
}

Trunc BKRIso::alpha_inverse(const Trunc& v) const {
  if (v.side != Side::KLR) fail(ErrorKind::RingMismatch, "alpha^-1 takes a KLR-side element");
  const int n = std::min(v.N, alpha_.N);
  Trunc out = hecke_.zero(n);
  for (auto& [b, f] : v.comps) {
    std::map<std::uint16_t, SuperPoly> parts;
    for (auto& [m, c] : f.terms()) {
      auto [it, fresh] = parts.try_emplace(m.s, SuperPoly(Ring::KLR, p_.d, b));
      it->second.add_term(Mono{m.e, 0}, c);
    }
    for (auto& [S, g] : parts) out.add(b, mul_truncated(to_hecke(g, b), omega_prod_.at({b, S}), n));
  }
  return out;
}

Trunc BKRIso::gamma_T(int r, const Trunc& v) const {
  if (r < 1 || r >= p_.d) fail(ErrorKind::IndexOutOfRange, "T_" + std::to_string(r));
  Trunc out = klr_.zero(v.N);
  bool first = true;
  for (auto& [i, f] : v.comps) {
    const GammaEntry& e = gamma_.entries[r - 1].at(i);
    Trunc vi = klr_.project(i, v);
    Trunc t = multiply_klr({{i, e.ka}}, vi) + multiply_klr({{e.target, e.kb}}, klr_.tau(r, vi));
    if (first) {
      out = t;
      first = false;
    } else {
      out += t;
    }
  }
  return out;
}

Trunc BKRIso::gamma_inv_tau(int r, const Trunc& v) const {
  if (r < 1 || r >= p_.d) fail(ErrorKind::IndexOutOfRange, "tau_" + std::to_string(r));
  Trunc out = hecke_.zero(v.N);
  bool first = true;
  for (auto& [i, f] : v.comps) {
    const GammaEntry& e = gamma_.entries[r - 1].at(i);
    Trunc vi = hecke_.project(i, v);
    Trunc w = hecke_.project(e.target, hecke_.T(r, vi) - base_ * vi);
    Trunc t = multiply_hecke({{e.target, e.f}}, w);
    if (first) {
      out = t;
      first = false;
    } else {
      out += t;
    }
  }
  return out;
}

HeckeWord BKRIso::flatten(const HeckeWord& w) const {
  HeckeWord out;
  for (auto& l : w) {
    if (l.kind == HLetter::Xi) {
      auto x = alg_.xi_word(l.r);
      out.insert(out.end(), x.begin(), x.end());
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Trunc BKRIso::gamma(const HLetter& l, const Trunc& v) const {
  if (v.side != Side::KLR || v.d != p_.d) fail(ErrorKind::RingMismatch, "gamma acts on the KLR side");
  switch (l.kind) {
    case HLetter::Poly: return klr_.mul(alpha_prime(hecke_.poly(l.poly, alpha_.N)), v);
    case HLetter::T: return gamma_T(l.r, v);
    case HLetter::InvT:
      if (p_.variant != Variant::Q) fail(ErrorKind::VariantMismatch, "T^-1 is only a letter of the q-variant");
      return divide(1, p_.q) * (gamma_T(l.r, v) - (p_.q - 1) * v);
    case HLetter::Theta: return klr_.mul(alpha_.theta[0], v);
    case HLetter::Xi: return gamma(alg_.xi_word(l.r), v);
  }
  fail(ErrorKind::InternalError, "bad letter");
}

Trunc BKRIso::gamma(const HeckeWord& w, const Trunc& v) const {
  Trunc g = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) g = gamma(*it, g);
  return g;
}

Trunc BKRIso::gamma(const HeckeElement& h, const Trunc& v) const {
  alg_.check_element(h);
  Trunc out = klr_.zero(v.N);
  bool first = true;
  for (auto& [k, c] : h.terms()) {
    Trunc t = c * gamma(alg_.key_word(k), v);
    if (first) {
      out = t;
      first = false;
    } else {
      out += t;
    }
  }
  return out;
}

Trunc BKRIso::gamma_inverse(const KLRLetter& l, const Trunc& v) const {
  if (v.side != Side::Hecke || v.d != p_.d) fail(ErrorKind::RingMismatch, "gamma^-1 acts on the Hecke side");
  switch (l.kind) {
    case KLRLetter::Tau: return gamma_inv_tau(l.r, v);
    case KLRLetter::Dot: {
      if (l.r < 1 || l.r > p_.d) fail(ErrorKind::IndexOutOfRange, "Y_" + std::to_string(l.r));
      std::map<Label, SuperPoly> m;
      for (auto& b : hecke_.points()) m[b] = to_hecke(SuperPoly::var(Ring::KLR, p_.d, l.r, b), b);
      return multiply_hecke(m, v);
    }
    case KLRLetter::Float: return hecke_.mul(alpha_.omega[0], v);
  }
  fail(ErrorKind::InternalError, "bad letter");
}

Trunc BKRIso::gamma_inverse(const KLRWord& w, const Trunc& v) const {
  Trunc g = hecke_.project(w.source, v);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) g = gamma_inverse(*it, g);
  return g;
}

Trunc BKRIso::d_gamma(const HeckeWord& w, const Trunc& v) const {
  HeckeWord flat = flatten(w);
  Trunc out = klr_.zero(v.N);
  bool first = true;
  int odd = 0;
  for (size_t k = 0; k < flat.size(); ++k) {
    if (flat[k].kind != HLetter::Theta) continue;
    HeckeWord left(flat.begin(), flat.begin() + static_cast<long>(k));
    HeckeWord right(flat.begin() + static_cast<long>(k) + 1, flat.end());
    Trunc t = gamma(left, multiply_klr(d_theta_, gamma(right, v)));
    if (odd % 2) t *= -1;
    ++odd;
    if (first) {
      out = t;
      first = false;
    } else {
      out += t;
    }
  }
  return out;
}

// --- verification ---

namespace {

std::string letter_id(const HLetter& l) {
  switch (l.kind) {
    case HLetter::Poly: return "P(" + l.poly.str() + ")";
    case HLetter::T: return "T" + std::to_string(l.r);
    case HLetter::InvT: return "Tinv" + std::to_string(l.r);
    case HLetter::Theta: return "theta";
    case HLetter::Xi: return "xi" + std::to_string(l.r);
  }
  return "?";
}

Trunc random_hecke(const CompletedHecke& m, int N, std::mt19937& rng) {
  const int d = m.d();
  Trunc t = m.zero(N);
  for (auto& b : m.points()) {
    SuperPoly f = random_poly(Ring::HeckeP, d, 2, 3, false, rng);
    for (int k = 0; k < 2; ++k) {
      Mono mo;
      mo.s = static_cast<std::uint16_t>(1 + rng() % ((1u << d) - 1));
      mo.e[rng() % d] = static_cast<std::int16_t>(rng() % 2);
      f.add_term(mo, 1 + static_cast<int>(rng() % 3));
    }
    t.add(b, f);
  }
  return t;
}

Trunc random_klr(const CompletedKLR& m, int N, std::mt19937& rng) {
  const int d = m.d();
  Trunc t = m.zero(N);
  for (auto& i : m.points()) {
    SuperPoly f = random_poly(Ring::KLR, d, 2, 3, false, rng, i);
    for (int k = 0; k < 2; ++k) {
      Mono mo;
      mo.s = static_cast<std::uint16_t>(1 + rng() % ((1u << d) - 1));
      mo.e[rng() % d] = static_cast<std::int16_t>(rng() % 2);
      f.add_term(mo, 1 + static_cast<int>(rng() % 3));
    }
    t.add(i, f);
  }
  return t;
}

// nullopt if a and b agree below N and both are known that far
std::optional<std::string> compare(const Trunc& a, const Trunc& b, int N, const std::string& what) {
  if (a.N < N || b.N < N)
    return what + ": only exact below order " + std::to_string(std::min(a.N, b.N)) + ", need " + std::to_string(N);
  if (same_below(a.at_order(N), b.at_order(N))) return std::nullopt;
  return what + ": " + a.at_order(N).str() + " vs " + b.at_order(N).str();
}

std::vector<HeckeWord> dg_words(const HeckeAlgebra& alg) {
  const int d = alg.d();
  auto th = HLetter::theta();
  auto T = HLetter::t;
  std::vector<HeckeWord> out{{th}, {HLetter::P(alg.x(1)), th}};
  if (d >= 2) {
    out.push_back({T(1), th});
    out.push_back({th, T(1), th});
    out.push_back({th, T(1), th, T(1)});
    out.push_back({HLetter::xi(2)});
    out.push_back({HLetter::xi(1), HLetter::P(alg.x(2)), HLetter::xi(2)});
  }
  if (d >= 3) {
    out.push_back({HLetter::xi(3)});
    out.push_back({th, T(2), T(1), th});
  }
  return out;
}

std::string word_id(const HeckeWord& w) {
  std::string s;
  for (auto& l : w) s += (s.empty() ? "" : ".") + letter_id(l);
  return s;
}

}  // namespace

Report verify_bkr(const ParamSet& p, int N, int samples, unsigned seed) {
  validate(p);
  if (N < 1) fail(ErrorKind::InvalidParam, "truncation order must be positive");
  const int d = p.d;
  HeckeAlgebra alg = HeckeAlgebra::from_params(p);
  const bool qv = p.variant == Variant::Q;

  auto rels = hecke_defining_relations(alg);
  auto words = dg_words(alg);
  // each crossing may cost an order on equal labels
  int loss = 2 * (d - 1) + 1;
  for (auto& r : rels)
    for (auto& [c, w] : r.terms) loss = std::max(loss, count_T(w));
  for (auto& w : words) {
    HeckeWord f;
    for (auto& l : w) {
      if (l.kind == HLetter::Xi) {
        auto x = alg.xi_word(l.r);
        f.insert(f.end(), x.begin(), x.end());
      } else {
        f.push_back(l);
      }
    }
    loss = std::max(loss, count_T(f) + 2 * (d - 1));
  }
  const int top = N + loss;

  Report rep;
  const std::string pre = std::string("bkr.") + variant_name(p.variant) + ".d" + std::to_string(d) + ".N" +
                          std::to_string(N) + ".";
  std::unique_ptr<BKRIso> iso;
  rep.run(pre + "0.build", [&]() -> std::optional<std::string> {
    iso = std::make_unique<BKRIso>(p, top);
    if (iso->order() < top) return "tables only exact below order " + std::to_string(iso->order());
    return std::nullopt;
  });
  if (!iso) return rep;
  const BKRIso& B = *iso;
  const auto& H = B.hecke();
  const auto& K = B.klr();
  std::mt19937 rng(seed);

  // (1) symmetric group invariance on the theta images
  for (int k = 1; k < d; ++k)
    for (int r = 1; r <= d; ++r)
      rep.run(pre + "1.sd-invariance.s" + std::to_string(k) + ".theta" + std::to_string(r), [&] {
        Trunc lhs = K.s(k, B.alpha_table().theta[r - 1]);
        Trunc rhs = B.alpha(H.s(k, H.theta(r, B.order())));
        return compare(lhs, rhs, N, "s_k alpha(theta_r) vs alpha(s_k theta_r)");
      });

  // (2) intertwining on generators, both directions
  std::vector<HLetter> gens;
  for (int r = 1; r <= d; ++r) {
    gens.push_back(HLetter::P(alg.x(r)));
    if (qv) {
      Mono m;
      m.e[r - 1] = -1;
      gens.push_back(HLetter::P(SuperPoly::monomial(alg.ring(), d, m)));
    }
  }
  for (int r = 1; r < d; ++r) {
    gens.push_back(HLetter::t(r));
    if (qv) gens.push_back(HLetter::inv_t(r));
  }
  gens.push_back(HLetter::theta());
  for (int r = 2; r <= d; ++r) gens.push_back(HLetter::xi(r));
  std::vector<Trunc> hs, ks;
  for (int s = 0; s < samples; ++s) {
    hs.push_back(random_hecke(H, top, rng));
    ks.push_back(random_klr(K, top, rng));
  }
  for (auto& l : gens)
    rep.run(pre + "2.intertwine." + letter_id(l), [&]() -> std::optional<std::string> {
      for (auto& f : hs) {
        auto w = compare(B.alpha(H.act_letter(l, f)), B.gamma(l, B.alpha(f)), N, "alpha(h f) vs gamma(h) alpha(f)");
        if (w) return w;
      }
      return std::nullopt;
    });
  std::vector<KLRLetter> kgens{KLRLetter::fdot()};
  for (int r = 1; r <= d; ++r) kgens.push_back(KLRLetter::dot(r));
  for (int r = 1; r < d; ++r) kgens.push_back(KLRLetter::tau(r));
  for (auto& l : kgens)
    rep.run(pre + "2.intertwine-inverse." + l.str(), [&]() -> std::optional<std::string> {
      for (auto& g : ks) {
        auto w = compare(B.alpha_inverse(K.act_letter(l, g)), B.gamma_inverse(l, B.alpha_inverse(g)), N,
                         "alpha^-1(u g) vs gamma^-1(u) alpha^-1(g)");
        if (w) return w;
      }
      return std::nullopt;
    });
  // gamma(gamma^-1(tau_r)) = tau_r: the f multipliers undo the b multipliers
  for (int r = 1; r < d; ++r)
    rep.run(pre + "2.roundtrip.tau" + std::to_string(r), [&]() -> std::optional<std::string> {
      for (auto& g : ks) {
        Trunc out = K.zero(g.N);
        for (auto& [i, f] : g.comps) {
          const GammaEntry& e = B.gamma_table().entries[r - 1].at(i);
          Trunc gi = K.project(i, g);
          Scalar base = qv ? p.q : Scalar(1);
          Trunc w = K.project(e.target, B.gamma(HLetter::t(r), gi) - base * gi);
          Trunc fm = B.alpha_prime([&] {
            Trunc t = H.zero(B.order());
            t.add(e.target, e.f);
            return t;
          }());
          out += K.mul(fm, w);
        }
        auto w = compare(out, K.act_letter(KLRLetter::tau(r), g), N, "gamma(gamma^-1(tau)) vs tau");
        if (w) return w;
      }
      return std::nullopt;
    });

  // (3) the Hecke relations hold for the gamma images, the KLR relations for the gamma^-1 images
  for (auto& rel : rels)
    rep.run(pre + "3.homomorphism." + rel.id, [&]() -> std::optional<std::string> {
      int l = 0;
      for (auto& [c, w] : rel.terms) l = std::max(l, count_T(B.flatten(w)));
      for (auto& pr : K.probes(1, N + l)) {
        Trunc acc = K.zero(pr.N);
        bool first = true;
        for (auto& [c, w] : rel.terms) {
          Trunc t = c * B.gamma(w, pr);
          if (first) {
            acc = t;
            first = false;
          } else {
            acc += t;
          }
        }
        if (acc.N < N) return "order dropped to " + std::to_string(acc.N);
        if (!acc.at_order(N).is_zero()) return "gamma(" + rel.id + ") on " + pr.str() + " = " + acc.at_order(N).str();
      }
      return std::nullopt;
    });
  for (auto& src : K.points())
    for (auto& rel : klr_relations(K.algebra(), src))
      rep.run(pre + "3.homomorphism-inverse." + label_str(src) + "." + rel.id, [&]() -> std::optional<std::string> {
        int l = 0;
        for (auto& [w, c] : rel.lhs.terms())
          l = std::max(l, static_cast<int>(std::count_if(w.letters.begin(), w.letters.end(), [](const KLRLetter& x) {
                         return x.kind == KLRLetter::Tau;
                       })));
        for (auto& pr : H.probes(1, N + l)) {
          if (!pr.comps.count(src)) continue;
          Trunc acc = H.zero(pr.N);
          bool first = true;
          for (auto& [w, c] : rel.lhs.terms()) {
            Trunc t = c * B.gamma_inverse(w, pr);
            if (first) {
              acc = t;
              first = false;
            } else {
              acc += t;
            }
          }
          if (acc.N < N) return "order dropped to " + std::to_string(acc.N);
          if (!acc.at_order(N).is_zero())
            return "gamma^-1(" + rel.id + ") on " + pr.str() + " = " + acc.at_order(N).str();
        }
        return std::nullopt;
      });

  // (4) gamma(d_Q h) = d_Lambda(gamma(h))
  SuperPoly P = alg.cyclotomic_poly(p.Q);
  for (auto& w : words)
    rep.run(pre + "4.dg." + word_id(w), [&]() -> std::optional<std::string> {
      HeckeElement dh = alg.differential_word(w, P);
      int l = count_T(B.flatten(w)) + 2 * (d - 1);
      for (auto& pr : K.probes(1, N + l)) {
        auto res = compare(B.gamma(dh, pr), B.d_gamma(w, pr), N, "on " + pr.str() + ": gamma(dh) vs d(gamma h)");
        if (res) return res;
      }
      return std::nullopt;
    });

  // (5) triangular shape with invertible leading coefficients, and alpha^-1 alpha = id
  for (int r = 1; r <= d; ++r)
    rep.run(pre + "5.triangular.theta" + std::to_string(r), [&]() -> std::optional<std::string> {
      for (auto& b : H.points()) {
        auto it = B.alpha_table().theta[r - 1].comps.find(b);
        if (it == B.alpha_table().theta[r - 1].comps.end()) return "alpha(theta_r 1_b) vanishes at " + label_str(b);
        for (auto& [m, c] : it->second.terms())
          if (m.odd_degree() != 1 || m.s >= (1u << r))
            return "term outside sum_{t<=r} P_t Omega_t at " + label_str(b) + ": " + it->second.str();
        SuperPoly lead = it->second.odd_component(static_cast<std::uint16_t>(1u << (r - 1)));
        if (lead.coeff(Mono{}) == 0) return "leading coefficient not invertible at " + label_str(b) + ": " + lead.str();
      }
      return std::nullopt;
    });
  rep.run(pre + "5.alpha-roundtrip", [&]() -> std::optional<std::string> {
    for (int s = 0; s < std::max(samples, 1); ++s) {
      auto w = compare(B.alpha_inverse(B.alpha(hs[s % hs.size()])), hs[s % hs.size()], N, "alpha^-1 alpha");
      if (w) return w;
      w = compare(B.alpha(B.alpha_inverse(ks[s % ks.size()])), ks[s % ks.size()], N, "alpha alpha^-1");
      if (w) return w;
    }
    return std::nullopt;
  });

  // the DG check must notice a wrong sign in alpha(theta_1)
  rep.run(pre + "selftest.flipped-sign-detected", [&]() -> std::optional<std::string> {
    BKRIso bad(p, N + 1, true);
    auto pr = bad.klr().one(N + 1);
    HeckeWord w{HLetter::theta()};
    if (compare(bad.gamma(alg.differential_word(w, P), pr), bad.d_gamma(w, pr), N, "")) return std::nullopt;
    return "flipping the sign of alpha(theta_1) went unnoticed";
  });
  return rep;
}

}  // namespace dgh
