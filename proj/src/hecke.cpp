#include "dgh/hecke.hpp"

namespace dgh {

int HKey::x_degree() const {
  int t = 0;
  for (auto v : a) t += v;
  return t;
}

Scalar HeckeElement::coeff(const HKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void HeckeElement::add_term(const HKey& k, const Scalar& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void HeckeElement::check(const HeckeElement& o) const {
  if (variant_ != o.variant_ || d_ != o.d_) fail(ErrorKind::VariantMismatch, "Hecke elements from different algebras");
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  check(o);
  for (auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  check(o);
  for (auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

HeckeElement& HeckeElement::operator*=(const Scalar& c) {
  if (c == 0) terms_.clear();
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

bool HeckeElement::operator==(const HeckeElement& o) const {
  return variant_ == o.variant_ && d_ == o.d_ && terms_ == o.terms_;
}

HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
HeckeElement operator*(const Scalar& c, HeckeElement a) { return a *= c; }

std::string HeckeElement::str() const {
  if (terms_.empty()) return "0";
  const SymGroup& g = SymGroup::get(d_);
  std::string out;
  bool first = true;
  for (auto& [k, c] : terms_) {
    std::string body;
    for (int i = 0; i < d_; ++i) {
      if (!k.a[i]) continue;
      if (!body.empty()) body += "·";
      body += "X" + std::to_string(i + 1);
      if (k.a[i] != 1) body += "^" + std::to_string(k.a[i]);
    }
    if (g.length(k.w)) {
      if (!body.empty()) body += "·";
      for (int r : g.word(k.w)) body += "T" + std::to_string(r);
    }
    if (k.b) {
      if (!body.empty()) body += "·";
      for (int i = 0; i < d_; ++i)
        if (k.b >> i & 1) body += "ξ" + std::to_string(i + 1);
    }
    Scalar a = c;
    if (!first) {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    } else if (a < 0 && !body.empty()) {
      out += "-";
      a = -a;
    }
    first = false;
    if (body.empty())
      out += to_string(a);
    else
      out += (a == 1 ? "" : to_string(a) + "·") + body;
  }
  return out;
}

std::string HLetter::str() const {
  switch (kind) {
    case Poly: return "(" + poly.str() + ")";
    case T: return "T" + std::to_string(r);
    case Theta: return "θ";
    case Xi: return "ξ" + std::to_string(r);
    case InvT: return "T" + std::to_string(r) + "^-1";
  }
  return "?";
}

std::string word_str(const HeckeWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "·" : "") + w[i].str();
  return s;
}

HeckeAlgebra::HeckeAlgebra(Variant v, int d, const Scalar& q) : variant_(v), d_(d), q_(q), group_(&SymGroup::get(d)) {
  if (v == Variant::Q && (q == 0 || q == 1)) fail(ErrorKind::InvalidParam, "q must differ from 0 and 1");
}

void HeckeAlgebra::check_element(const HeckeElement& h) const {
  if (h.variant() != variant_ || h.d() != d_) fail(ErrorKind::VariantMismatch, "element does not belong to this algebra");
}

HeckeElement HeckeAlgebra::key(const HKey& k, const Scalar& c) const {
  HeckeElement h = zero();
  h.add_term(k, c);
  return h;
}

HeckeElement HeckeAlgebra::poly(const SuperPoly& p) const {
  if (!p.exterior_free()) fail(ErrorKind::RingMismatch, "polynomial letters may not contain odd generators");
  if (p.d() != d_) fail(ErrorKind::RingMismatch, "polynomial in the wrong number of variables");
  if (variant_ == Variant::Degenerate && p.min_exponent() < 0)
    fail(ErrorKind::RingMismatch, "Laurent monomial in the degenerate algebra");
  HeckeElement h = zero();
  for (auto& [m, c] : p.terms()) {
    HKey k;
    k.a = m.e;
    k.w = group_->identity();
    h.add_term(k, c);
  }
  return h;
}

HeckeElement HeckeAlgebra::t(int r) const {
  if (r < 1 || r >= d_) fail(ErrorKind::IndexOutOfRange, "T_" + std::to_string(r) + " with d = " + std::to_string(d_));
  HKey k;
  k.w = group_->lmul(r, group_->identity());
  return key(k);
}

HeckeElement HeckeAlgebra::xi(int r) const {
  if (r < 1 || r > d_) fail(ErrorKind::IndexOutOfRange, "xi_" + std::to_string(r) + " with d = " + std::to_string(d_));
  HKey k;
  k.b = static_cast<std::uint16_t>(1u << (r - 1));
  return key(k);
}

// ---- action ----

SuperPoly HeckeAlgebra::act_T(int r, const SuperPoly& f) const {
  if (r < 1 || r >= d_) fail(ErrorKind::IndexOutOfRange, "T_" + std::to_string(r));
  if (f.ring() != ring()) fail(ErrorKind::RingMismatch, "Hecke generator applied outside its polynomial ring");
  SuperPoly s = twisted_swap(r, f);
  SuperPoly dd = demazure_hecke(r, f);
  if (variant_ == Variant::Degenerate) return s - dd;
  Mono xr1;
  xr1.e[r] = 1;
  return q_ * s - mul_mono(dd, xr1, q_ - 1);
}

SuperPoly HeckeAlgebra::act_invT(int r, const SuperPoly& f) const {
  if (variant_ != Variant::Q) fail(ErrorKind::VariantMismatch, "T^-1 is only a letter of the q-variant");
  SuperPoly g = act_T(r, f) - (q_ - 1) * f;
  return divide(1, q_) * g;
}

SuperPoly HeckeAlgebra::act_xi(int r, const SuperPoly& f) const {
  if (r < 1 || r > d_) fail(ErrorKind::IndexOutOfRange, "xi_" + std::to_string(r));
  if (r == 1) return SuperPoly::odd(ring(), d_, 1) * f;
  SuperPoly g = variant_ == Variant::Degenerate ? act_T(r - 1, f) : act_invT(r - 1, f);
  return act_T(r - 1, act_xi(r - 1, g));
}

SuperPoly HeckeAlgebra::act_letter(const HLetter& l, const SuperPoly& f) const {
  switch (l.kind) {
    case HLetter::Poly: return l.poly * f;
    case HLetter::T: return act_T(l.r, f);
    case HLetter::Theta: return SuperPoly::odd(ring(), d_, 1) * f;
    case HLetter::Xi: return act_xi(l.r, f);
    case HLetter::InvT: return act_invT(l.r, f);
  }
  fail(ErrorKind::InternalError, "bad letter");
}

SuperPoly HeckeAlgebra::act(const HeckeWord& w, const SuperPoly& f) const {
  SuperPoly g = f;
  for (auto it = w.rbegin(); it != w.rend(); ++it) g = act_letter(*it, g);
  return g;
}

SuperPoly HeckeAlgebra::act(const HeckeElement& h, const SuperPoly& f) const {
  check_element(h);
  SuperPoly out(ring(), d_);
  for (auto& [k, c] : h.terms()) {
    SuperPoly g = f;
    for (int j = d_; j >= 1; --j)
      if (k.b >> (j - 1) & 1) g = act_xi(j, g);
    const auto& word = group_->word(k.w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) g = act_T(*it, g);
    Mono m;
    m.e = k.a;
    out += mul_mono(g, m, c);
  }
  return out;
}

// ---- straightening ----

HeckeElement HeckeAlgebra::T_times_key(int r, const HKey& k, const Scalar& c) const {
  HeckeElement out = zero();
  int sw = group_->lmul(r, k.w);
  bool up = group_->length(sw) > group_->length(k.w);
  HKey moved = k;
  std::swap(moved.a[r - 1], moved.a[r]);
  if (up || variant_ == Variant::Degenerate) {
    HKey n = moved;
    n.w = sw;
    out.add_term(n, c);
  } else {
    HKey n = moved;
    out.add_term(n, c * (q_ - 1));
    n.w = sw;
    out.add_term(n, c * q_);
  }
  // correction from moving T_r past X^a
  SuperPoly::Terms corr;
  divided_difference_mono(r, k.a, 1, 0, corr);
  for (auto& [m, v] : corr) {
    HKey n = k;
    n.a = m.e;
    if (variant_ == Variant::Degenerate) {
      out.add_term(n, -c * v);
    } else {
      ++n.a[r];
      out.add_term(n, -c * v * (q_ - 1));
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::lmul_poly(const SuperPoly& p, const HeckeElement& h) const {
  check_element(h);
  HeckeElement hp = poly(p);
  HeckeElement out = zero();
  for (auto& [pk, pc] : hp.terms())
    for (auto& [k, c] : h.terms()) {
      HKey n = k;
      for (int i = 0; i < d_; ++i) n.a[i] = static_cast<std::int16_t>(n.a[i] + pk.a[i]);
      out.add_term(n, pc * c);
    }
  return out;
}

HeckeElement HeckeAlgebra::lmul_T(int r, const HeckeElement& h) const {
  check_element(h);
  if (r < 1 || r >= d_) fail(ErrorKind::IndexOutOfRange, "T_" + std::to_string(r));
  HeckeElement out = zero();
  for (auto& [k, c] : h.terms()) out += T_times_key(r, k, c);
  return out;
}

HeckeElement HeckeAlgebra::lmul_invT(int r, const HeckeElement& h) const {
  if (variant_ != Variant::Q) fail(ErrorKind::VariantMismatch, "T^-1 is only a letter of the q-variant");
  HeckeElement out = lmul_T(r, h) - (q_ - 1) * h;
  return divide(1, q_) * out;
}

const HeckeElement& HeckeAlgebra::xi_times_T(int l, int w) const {
  auto found = xi_T_.find({l, w});
  if (found != xi_T_.end()) return found->second;
  HeckeElement res = zero();
  if (group_->length(w) == 0) {
    HKey k;
    k.w = w;
    k.b = static_cast<std::uint16_t>(1u << (l - 1));
    res.add_term(k, 1);
  } else {
    int r = group_->word(w).front();
    int rest = group_->lmul(r, w);
    if (variant_ == Variant::Degenerate) {
      int sl = l == r ? r + 1 : (l == r + 1 ? r : l);
      res = lmul_T(r, xi_times_T(sl, rest));
    } else if (l != r) {
      int sl = l == r + 1 ? r : l;
      res = lmul_T(r, xi_times_T(sl, rest));
    } else {
      // xi_r T_r = T_r xi_{r+1} - (q-1) xi_{r+1} + (q-1) xi_r
      HeckeElement a = xi_times_T(r + 1, rest);
      HeckeElement b = xi_times_T(r, rest);
      res = lmul_T(r, a) - (q_ - 1) * a + (q_ - 1) * b;
    }
  }
  return xi_T_.emplace(std::make_pair(l, w), std::move(res)).first->second;
}

HeckeElement HeckeAlgebra::lmul_theta(const HeckeElement& h) const {
  check_element(h);
  HeckeElement out = zero();
  for (auto& [k, c] : h.terms()) {
    const HeckeElement& e = xi_times_T(1, k.w);
    for (auto& [ek, ec] : e.terms()) {
      int sg = exterior_sign(ek.b, k.b);
      if (!sg) continue;
      HKey n;
      n.a = k.a;
      n.w = ek.w;
      n.b = ek.b | k.b;
      out.add_term(n, sg * ec * c);
    }
  }
  return out;
}

HeckeWord HeckeAlgebra::xi_word(int r) const {
  if (r < 1 || r > d_) fail(ErrorKind::IndexOutOfRange, "xi_" + std::to_string(r));
  HeckeWord w;
  for (int j = r - 1; j >= 1; --j) w.push_back(HLetter::t(j));
  w.push_back(HLetter::theta());
  for (int j = 1; j < r; ++j) w.push_back(variant_ == Variant::Degenerate ? HLetter::t(j) : HLetter::inv_t(j));
  return w;
}

HeckeElement HeckeAlgebra::lmul_xi(int r, const HeckeElement& h) const {
  HeckeWord w = xi_word(r);
  HeckeElement out = h;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = lmul_letter(*it, out);
  return out;
}

HeckeElement HeckeAlgebra::lmul_letter(const HLetter& l, const HeckeElement& h) const {
  switch (l.kind) {
    case HLetter::Poly: return lmul_poly(l.poly, h);
    case HLetter::T: return lmul_T(l.r, h);
    case HLetter::Theta: return lmul_theta(h);
    case HLetter::Xi: return lmul_xi(l.r, h);
    case HLetter::InvT: return lmul_invT(l.r, h);
  }
  fail(ErrorKind::InternalError, "bad letter");
}

HeckeElement HeckeAlgebra::straighten(const HeckeWord& w) const {
  HeckeElement h = one();
  for (auto it = w.rbegin(); it != w.rend(); ++it) h = lmul_letter(*it, h);
  return h;
}

HeckeWord HeckeAlgebra::key_word(const HKey& k) const {
  HeckeWord w;
  Mono m;
  m.e = k.a;
  w.push_back(HLetter::P(SuperPoly::monomial(ring(), d_, m)));
  for (int r : group_->word(k.w)) w.push_back(HLetter::t(r));
  for (int j = 1; j <= d_; ++j)
    if (k.b >> (j - 1) & 1) w.push_back(HLetter::xi(j));
  return w;
}

HeckeElement HeckeAlgebra::multiply(const HeckeElement& a, const HeckeElement& b) const {
  check_element(a);
  check_element(b);
  HeckeElement out = zero();
  for (auto& [k, c] : a.terms()) {
    HeckeElement y = b;
    for (int j = d_; j >= 1; --j)
      if (k.b >> (j - 1) & 1) y = lmul_xi(j, y);
    const auto& word = group_->word(k.w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) y = lmul_T(*it, y);
    for (auto& [yk, yc] : y.terms()) {
      HKey n = yk;
      for (int i = 0; i < d_; ++i) n.a[i] = static_cast<std::int16_t>(n.a[i] + k.a[i]);
      out.add_term(n, yc * c);
    }
  }
  return out;
}

// ---- differential ----

SuperPoly HeckeAlgebra::cyclotomic_poly(const std::vector<Scalar>& Q) const {
  if (Q.empty()) fail(ErrorKind::InvalidParam, "Q must have at least one entry");
  SuperPoly p = constant(1);
  for (auto& qr : Q) {
    if (variant_ == Variant::Q && qr == 0) fail(ErrorKind::InvalidParam, "the q-variant needs nonzero Q_r");
    p = p * (x(1) - constant(qr));
  }
  return p;
}

HeckeElement HeckeAlgebra::differential_word(const HeckeWord& w, const SuperPoly& P) const {
  HeckeWord flat;
  for (auto& l : w) {
    if (l.kind == HLetter::Xi) {
      auto e = xi_word(l.r);
      flat.insert(flat.end(), e.begin(), e.end());
    } else {
      flat.push_back(l);
    }
  }
  HeckeElement out = zero();
  int odd_before = 0;
  for (size_t t = 0; t < flat.size(); ++t) {
    if (flat[t].kind != HLetter::Theta) continue;
    HeckeWord v = flat;
    v[t] = HLetter::P(P);
    HeckeElement s = straighten(v);
    out += (odd_before % 2 ? Scalar(-1) : Scalar(1)) * s;
    ++odd_before;
  }
  return out;
}

HeckeElement HeckeAlgebra::differential_P(const HeckeElement& h, const SuperPoly& P) const {
  check_element(h);
  if (!P.exterior_free()) fail(ErrorKind::InvalidParam, "d_P needs an even P");
  std::vector<HeckeElement> dxi(d_ + 1);
  std::vector<bool> have(d_ + 1, false);
  HeckeElement out = zero();
  for (auto& [k, c] : h.terms()) {
    std::vector<int> js;
    for (int j = 1; j <= d_; ++j)
      if (k.b >> (j - 1) & 1) js.push_back(j);
    for (size_t t = 0; t < js.size(); ++t) {
      int j = js[t];
      if (!have[j]) {
        dxi[j] = differential_word(HeckeWord{HLetter::xi(j)}, P);
        have[j] = true;
      }
      std::uint16_t prefix = 0, suffix = 0;
      for (size_t u = 0; u < t; ++u) prefix |= static_cast<std::uint16_t>(1u << (js[u] - 1));
      for (size_t u = t + 1; u < js.size(); ++u) suffix |= static_cast<std::uint16_t>(1u << (js[u] - 1));
      HeckeElement right = zero();
      for (auto& [dk, dc] : dxi[j].terms()) {
        if (dk.b) fail(ErrorKind::InternalError, "d(xi) has odd part");
        HKey n = dk;
        n.b = suffix;
        right.add_term(n, dc);
      }
      HKey left = k;
      left.b = prefix;
      Scalar sign = (t % 2) ? Scalar(-c) : c;
      out += sign * multiply(key(left), right);
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::differential_Q(const HeckeElement& h, const std::vector<Scalar>& Q) const {
  return differential_P(h, cyclotomic_poly(Q));
}

}  // namespace dgh
