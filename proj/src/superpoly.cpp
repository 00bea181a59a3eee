#include "dgh/superpoly.hpp"

#include <algorithm>

namespace dgh {

const char* ring_name(Ring r) {
  switch (r) {
    case Ring::HeckeP: return "P";
    case Ring::HeckePl: return "Pl";
    case Ring::KLR: return "PR";
  }
  return "?";
}

int Mono::degree() const {
  int t = 0;
  for (auto x : e) t += x;
  return t;
}

int exterior_sign(std::uint16_t a, std::uint16_t b) {
  if (a & b) return 0;
  int inv = 0;
  while (b) {
    int j = __builtin_ctz(b);
    b &= b - 1;
    inv += __builtin_popcount(a >> (j + 1));
  }
  return (inv & 1) ? -1 : 1;
}

namespace {

void accumulate(SuperPoly::Terms& t, const Mono& m, const Scalar& c) {
  if (c == 0) return;
  auto [it, fresh] = t.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

void check_index(int r, int hi, const char* what) {
  if (r < 1 || r > hi) fail(ErrorKind::IndexOutOfRange, std::string(what) + " index " + std::to_string(r) + " out of range");
}

}  // namespace

SuperPoly::SuperPoly(Ring ring, int d, Label label) : ring_(ring), d_(d), label_(std::move(label)) {
  if (d < 1 || d > kMaxStrands) fail(ErrorKind::InvalidParam, "unsupported number of variables");
  if (ring == Ring::KLR && static_cast<int>(label_.size()) != d)
    fail(ErrorKind::LabelMismatch, "KLR polynomial needs a label of length d");
}

SuperPoly SuperPoly::constant(Ring ring, int d, const Scalar& c, Label label) {
  SuperPoly f(ring, d, std::move(label));
  f.add_term(Mono{}, c);
  return f;
}

SuperPoly SuperPoly::var(Ring ring, int d, int r, Label label) {
  check_index(r, d, "variable");
  SuperPoly f(ring, d, std::move(label));
  Mono m;
  m.e[r - 1] = 1;
  f.add_term(m, 1);
  return f;
}

SuperPoly SuperPoly::odd(Ring ring, int d, int r, Label label) {
  check_index(r, d, "odd generator");
  SuperPoly f(ring, d, std::move(label));
  Mono m;
  m.s = static_cast<std::uint16_t>(1u << (r - 1));
  f.add_term(m, 1);
  return f;
}

SuperPoly SuperPoly::monomial(Ring ring, int d, const Mono& m, const Scalar& c, Label label) {
  SuperPoly f(ring, d, std::move(label));
  f.add_term(m, c);
  return f;
}

Scalar SuperPoly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int SuperPoly::max_degree() const {
  int best = 0;
  bool first = true;
  for (auto& [m, c] : terms_) {
    int k = m.degree();
    if (first || k > best) best = k;
    first = false;
  }
  return best;
}

int SuperPoly::min_exponent() const {
  int best = 0;
  for (auto& [m, c] : terms_)
    for (int i = 0; i < d_; ++i) best = std::min<int>(best, m.e[i]);
  return best;
}

bool SuperPoly::exterior_free() const {
  for (auto& [m, c] : terms_)
    if (m.s) return false;
  return true;
}

void SuperPoly::add_term(const Mono& m, const Scalar& c) {
  if (ring_ != Ring::HeckePl)
    for (int i = 0; i < d_; ++i)
      if (m.e[i] < 0) fail(ErrorKind::RingMismatch, "negative exponent outside the Laurent ring");
  for (int i = d_; i < kMaxStrands; ++i)
    if (m.e[i] != 0) fail(ErrorKind::IndexOutOfRange, "exponent beyond d");
  if (m.s >> d_) fail(ErrorKind::IndexOutOfRange, "odd generator beyond d");
  accumulate(terms_, m, c);
}

void SuperPoly::check_compatible(const SuperPoly& o) const {
  if (ring_ != o.ring_ || d_ != o.d_)
    fail(ErrorKind::RingMismatch, std::string("cannot combine ") + ring_name(ring_) + " and " + ring_name(o.ring_));
  if (ring_ == Ring::KLR && label_ != o.label_)
    fail(ErrorKind::LabelMismatch, "idempotents " + label_str(label_) + " and " + label_str(o.label_) + " differ");
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& o) {
  check_compatible(o);
  for (auto& [m, c] : o.terms_) accumulate(terms_, m, c);
  return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o) {
  check_compatible(o);
  for (auto& [m, c] : o.terms_) accumulate(terms_, m, -c);
  return *this;
}

SuperPoly& SuperPoly::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SuperPoly SuperPoly::operator-() const {
  SuperPoly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

SuperPoly SuperPoly::odd_component(std::uint16_t s) const {
  SuperPoly r(ring_, d_, label_);
  for (auto& [m, c] : terms_)
    if (m.s == s) {
      Mono k = m;
      k.s = 0;
      r.terms_.emplace(k, c);
    }
  return r;
}

SuperPoly SuperPoly::with_label(Label l) const {
  SuperPoly r = *this;
  if (ring_ == Ring::KLR && static_cast<int>(l.size()) != d_) fail(ErrorKind::LabelMismatch, "label length differs from d");
  r.label_ = std::move(l);
  return r;
}

SuperPoly SuperPoly::with_ring(Ring ring) const {
  SuperPoly r(ring, d_, ring == Ring::KLR ? label_ : Label{});
  for (auto& [m, c] : terms_) r.add_term(m, c);
  return r;
}

bool SuperPoly::operator==(const SuperPoly& o) const {
  return ring_ == o.ring_ && d_ == o.d_ && (ring_ != Ring::KLR || label_ == o.label_) && terms_ == o.terms_;
}

std::string SuperPoly::str() const {
  if (terms_.empty()) return "0";
  const char* xv = ring_ == Ring::KLR ? "Y" : "X";
  const char* ov = ring_ == Ring::KLR ? "Ω" : "θ";
  std::string out;
  bool first = true;
  for (auto& [m, c] : terms_) {
    Scalar a = c;
    if (!first) {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    } else if (a < 0 && (m.degree() != 0 || m.s != 0)) {
      out += "-";
      a = -a;
    }
    first = false;
    std::string body;
    for (int i = 0; i < d_; ++i) {
      if (m.e[i] == 0) continue;
      if (!body.empty()) body += "·";
      body += xv + std::to_string(i + 1);
      if (m.e[i] != 1) body += "^" + std::to_string(m.e[i]);
    }
    if (m.s) {
      if (!body.empty()) body += "·";
      for (int i = 0; i < d_; ++i)
        if (m.s >> i & 1) body += ov + std::to_string(i + 1);
    }
    if (body.empty()) {
      out += to_string(a);
    } else {
      if (a != 1) out += to_string(a) + "·";
      out += body;
    }
  }
  if (ring_ == Ring::KLR) out = "(" + out + ")·1" + label_str(label_);
  return out;
}

SuperPoly operator+(SuperPoly f, const SuperPoly& g) { return f += g; }
SuperPoly operator-(SuperPoly f, const SuperPoly& g) { return f -= g; }
SuperPoly operator*(const Scalar& c, SuperPoly f) { return f *= c; }

SuperPoly operator*(const SuperPoly& f, const SuperPoly& g) {
  f.check_compatible(g);
  SuperPoly r(f.ring_, f.d_, f.label_);
  for (auto& [a, ca] : f.terms_)
    for (auto& [b, cb] : g.terms_) {
      int sg = exterior_sign(a.s, b.s);
      if (!sg) continue;
      Mono m;
      for (int i = 0; i < kMaxStrands; ++i) m.e[i] = static_cast<std::int16_t>(a.e[i] + b.e[i]);
      m.s = a.s | b.s;
      Scalar c = ca * cb;
      if (sg < 0) c = -c;
      accumulate(r.terms_, m, c);
    }
  return r;
}

SuperPoly mul_mono(const SuperPoly& f, const Mono& m, const Scalar& c) {
  SuperPoly g = SuperPoly::monomial(f.ring(), f.d(), m, c, f.label());
  return f * g;
}

void divided_difference_mono(int r, const Exps& e, const Scalar& c, std::uint16_t s, SuperPoly::Terms& out) {
  int a = e[r - 1], b = e[r];
  if (a == b) return;
  Scalar coef = c;
  if (a < b) {
    std::swap(a, b);
    coef = -coef;
  }
  // X_r^b X_{r+1}^b * sum_{k} X_r^k X_{r+1}^{a-b-1-k}
  Mono m;
  m.e = e;
  m.s = s;
  for (int k = 0; k < a - b; ++k) {
    m.e[r - 1] = static_cast<std::int16_t>(b + k);
    m.e[r] = static_cast<std::int16_t>(a - 1 - k);
    accumulate(out, m, coef);
  }
}

SuperPoly twisted_swap(int r, const SuperPoly& f, const Scalar& c) {
  check_index(r, f.d() - 1, "reflection");
  SuperPoly out(f.ring(), f.d(), f.label());
  const std::uint16_t br = static_cast<std::uint16_t>(1u << (r - 1));
  const std::uint16_t br1 = static_cast<std::uint16_t>(1u << r);
  SuperPoly::Terms t;
  for (auto& [m, v] : f.terms()) {
    Mono k = m;
    std::swap(k.e[r - 1], k.e[r]);
    accumulate(t, k, v);
    if ((m.s & br) && !(m.s & br1)) {
      // theta_r -> (c + X_r - X_{r+1}) theta_{r+1}; adjacent indices, so no reordering sign
      Mono k2 = k;
      k2.s = static_cast<std::uint16_t>((m.s & ~br) | br1);
      accumulate(t, k2, v * c);
      Mono k3 = k2;
      ++k3.e[r - 1];
      accumulate(t, k3, v);
      Mono k4 = k2;
      ++k4.e[r];
      accumulate(t, k4, -v);
    }
  }
  for (auto& [m, v] : t) out.add_term(m, v);
  return out;
}

SuperPoly sym_act_hecke(const Permutation& w, const SuperPoly& f) {
  if (f.ring() == Ring::KLR) fail(ErrorKind::RingMismatch, "Hecke action on a KLR polynomial");
  if (w.d() != f.d()) fail(ErrorKind::IndexOutOfRange, "permutation degree differs from d");
  SuperPoly g = f;
  auto word = w.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = twisted_swap(*it, g);
  return g;
}

SuperPoly demazure_hecke(int r, const SuperPoly& f) {
  if (f.ring() == Ring::KLR) fail(ErrorKind::RingMismatch, "Hecke Demazure operator on a KLR polynomial");
  check_index(r, f.d() - 1, "Demazure");
  const std::uint16_t br = static_cast<std::uint16_t>(1u << (r - 1));
  const std::uint16_t br1 = static_cast<std::uint16_t>(1u << r);
  SuperPoly::Terms t;
  for (auto& [m, v] : f.terms()) {
    divided_difference_mono(r, m.e, v, m.s, t);
    if ((m.s & br) && !(m.s & br1)) {
      Mono k = m;
      std::swap(k.e[r - 1], k.e[r]);
      k.s = static_cast<std::uint16_t>((m.s & ~br) | br1);
      accumulate(t, k, -v);
    }
  }
  SuperPoly out(f.ring(), f.d(), f.label());
  for (auto& [m, v] : t) out.add_term(m, v);
  return out;
}

SuperPoly sym_act_klr(int k, const SuperPoly& f) {
  if (f.ring() != Ring::KLR) fail(ErrorKind::RingMismatch, "KLR action on a Hecke polynomial");
  check_index(k, f.d() - 1, "reflection");
  const Label& l = f.label();
  if (l[k - 1] == l[k]) return twisted_swap(k, f);
  const std::uint16_t bk = static_cast<std::uint16_t>(1u << (k - 1));
  const std::uint16_t bk1 = static_cast<std::uint16_t>(1u << k);
  SuperPoly out(Ring::KLR, f.d(), swap_label(l, k));
  for (auto& [m, v] : f.terms()) {
    Mono n = m;
    std::swap(n.e[k - 1], n.e[k]);
    bool hk = m.s & bk, hk1 = m.s & bk1;
    n.s = static_cast<std::uint16_t>((m.s & ~(bk | bk1)) | (hk ? bk1 : 0) | (hk1 ? bk : 0));
    out.add_term(n, (hk && hk1) ? Scalar(-v) : v);
  }
  return out;
}

SuperPoly demazure_klr(int r, const SuperPoly& f) {
  if (f.ring() != Ring::KLR) fail(ErrorKind::RingMismatch, "KLR Demazure operator on a Hecke polynomial");
  check_index(r, f.d() - 1, "Demazure");
  if (f.label()[r - 1] != f.label()[r])
    fail(ErrorKind::LabelMismatch, "divided difference needs equal labels at positions " + std::to_string(r) + "," +
                                       std::to_string(r + 1));
  const std::uint16_t br = static_cast<std::uint16_t>(1u << (r - 1));
  const std::uint16_t br1 = static_cast<std::uint16_t>(1u << r);
  SuperPoly::Terms t;
  for (auto& [m, v] : f.terms()) {
    divided_difference_mono(r, m.e, v, m.s, t);
    if ((m.s & br) && !(m.s & br1)) {
      Mono k = m;
      std::swap(k.e[r - 1], k.e[r]);
      k.s = static_cast<std::uint16_t>((m.s & ~br) | br1);
      accumulate(t, k, -v);
    }
  }
  SuperPoly out(Ring::KLR, f.d(), f.label());
  for (auto& [m, v] : t) out.add_term(m, v);
  return out;
}

}  // namespace dgh

namespace dgh {

namespace {

void exps_rec(int d, int i, int budget, int lo, Exps& cur, std::vector<Exps>& out) {
  if (i == d) {
    out.push_back(cur);
    return;
  }
  for (int v = lo; v <= budget; ++v) {
    int cost = v < 0 ? -v : v;
    if (cost > budget) continue;
    cur[i] = static_cast<std::int16_t>(v);
    exps_rec(d, i + 1, budget - cost, lo, cur, out);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<Exps> exponent_vectors(int d, int deg, int lo) {
  std::vector<Exps> out;
  Exps cur{};
  exps_rec(d, 0, deg, lo, cur, out);
  return out;
}

SuperPoly random_poly(Ring ring, int d, int max_deg, int n_terms, bool laurent, std::mt19937& rng, Label label) {
  SuperPoly f(ring, d, label);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> var(0, d - 1);
  std::uniform_int_distribution<int> deg(0, max_deg);
  for (int t = 0; t < n_terms; ++t) {
    Mono m;
    int k = deg(rng);
    for (int j = 0; j < k; ++j) ++m.e[var(rng)];
    if (laurent && (rng() % 3 == 0)) --m.e[var(rng)];
    int c = coef(rng);
    if (c == 0) c = 1;
    f.add_term(m, c);
  }
  return f;
}

}  // namespace dgh
