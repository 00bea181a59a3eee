#include "dgh/klr.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "dgh/linalg.hpp"

namespace dgh {

namespace {

// padding of the probe degree over the coefficient bound
constexpr int kProbePad = 2;

}  // namespace

std::string KLRLetter::str() const {
  switch (kind) {
    case Tau: return "t" + std::to_string(r);
    case Dot: return "y" + std::to_string(r);
    case Float: return "w";
  }
  return "?";
}

int KLRWord::float_count() const {
  return static_cast<int>(std::count_if(letters.begin(), letters.end(),
                                        [](const KLRLetter& x) { return x.kind == KLRLetter::Float; }));
}

std::string KLRWord::str() const {
  std::string s;
  for (auto& x : letters) s += x.str() + "·";
  return s + "1" + label_str(source);
}

void KLRElement::add(const KLRWord& w, const Scalar& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

KLRElement& KLRElement::operator+=(const KLRElement& o) {
  for (auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

KLRElement& KLRElement::operator-=(const KLRElement& o) {
  for (auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

KLRElement& KLRElement::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

std::string KLRElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += to_string(c) + "*" + w.str();
  }
  return s;
}

KLRElement operator+(KLRElement a, const KLRElement& b) { return a += b; }
KLRElement operator-(KLRElement a, const KLRElement& b) { return a -= b; }
KLRElement operator*(const Scalar& c, KLRElement a) { return a *= c; }

KLRElement compose(const KLRElement& a, const KLRElement& b, const KLRAlgebra& alg) {
  KLRElement out;
  for (auto& [wb, cb] : b.terms()) {
    Label mid = alg.target(wb);
    for (auto& [wa, ca] : a.terms()) {
      if (wa.source != mid) continue;
      KLRWord w{wb.source, wa.letters};
      w.letters.insert(w.letters.end(), wb.letters.begin(), wb.letters.end());
      out.add(w, ca * cb);
    }
  }
  return out;
}

bool KLRBasisKey::operator<(const KLRBasisKey& o) const {
  if (source != o.source) return source < o.source;
  if (w != o.w) return w < o.w;
  if (odd != o.odd) return odd < o.odd;
  return n < o.n;
}

std::string KLRBasisKey::str() const {
  int d = static_cast<int>(source.size());
  std::string s = "tau" + SymGroup::get(d).perm(w).str() + "{";
  bool first = true;
  for (int r = 1; r <= d; ++r)
    if (odd & (1u << (r - 1))) {
      s += (first ? "" : ",") + std::to_string(r);
      first = false;
    }
  s += "}y(";
  for (int r = 0; r < d; ++r) s += (r ? "," : "") + std::to_string(n[r]);
  return s + ")1" + label_str(source);
}

std::string expansion_str(const KLRExpansion& e) {
  if (e.empty()) return "0";
  std::string s;
  for (auto& [k, c] : e) {
    if (!s.empty()) s += " + ";
    s += to_string(c) + "*" + k.str();
  }
  return s;
}

KLRAlgebra::KLRAlgebra(Quiver quiver, Multiplicity nu) : quiver_(std::move(quiver)) {
  Label base;
  for (auto& [i, m] : nu) {
    if (m < 0) fail(ErrorKind::InvalidParam, "negative multiplicity");
    if (m == 0) continue;
    if (!quiver_.contains(i)) fail(ErrorKind::InvalidParam, "label " + to_string(i) + " is not a vertex");
    nu_[i] = m;
    for (int t = 0; t < m; ++t) base.push_back(i);
  }
  d_ = static_cast<int>(base.size());
  if (d_ < 1 || d_ > kMaxStrands) fail(ErrorKind::InvalidParam, "|nu| must be between 1 and 8");
  do {
    seq_index_[base] = static_cast<int>(seqs_.size());
    seqs_.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  maxh_ = quiver_.edges.empty() ? 0 : 1;
}

KLRAlgebra KLRAlgebra::from_params(const ParamSet& p) {
  validate(p);
  return KLRAlgebra(p.quiver(), p.nu());
}

void KLRAlgebra::check_source(const Label& l) const {
  if (!seq_index_.count(l)) fail(ErrorKind::LabelMismatch, "idempotent " + label_str(l) + " is not in Seq(nu)");
}

int KLRAlgebra::seq_index(const Label& l) const {
  auto it = seq_index_.find(l);
  if (it == seq_index_.end()) fail(ErrorKind::LabelMismatch, "idempotent " + label_str(l) + " is not in Seq(nu)");
  return it->second;
}

SuperPoly KLRAlgebra::P(const Scalar& i, const Scalar& j, int r, const Label& l) const {
  SuperPoly out = one(l);
  for (int t = 0; t < quiver_.h(i, j); ++t) out = out * (y(r, l) - y(r + 1, l));
  return out;
}

SuperPoly KLRAlgebra::Qpoly(const Scalar& i, const Scalar& j, const SuperPoly& u, const SuperPoly& v) const {
  // the crossing action puts P_{j,i} on the second crossing, so tau^2 1_ij = P_ji(u,v) P_ij(v,u)
  SuperPoly out = one(u.label());
  for (int t = 0; t < quiver_.h(j, i); ++t) out = out * (u - v);
  for (int t = 0; t < quiver_.h(i, j); ++t) out = out * (v - u);
  return out;
}

Label KLRAlgebra::target(const KLRWord& w) const {
  if (static_cast<int>(w.source.size()) != d_) fail(ErrorKind::LabelMismatch, "word source has the wrong length");
  Label l = w.source;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (it->kind == KLRLetter::Tau) {
      if (it->r < 1 || it->r >= d_) fail(ErrorKind::IndexOutOfRange, "crossing index " + std::to_string(it->r));
      std::swap(l[it->r - 1], l[it->r]);
    } else if (it->kind == KLRLetter::Dot) {
      if (it->r < 1 || it->r > d_) fail(ErrorKind::IndexOutOfRange, "dot index " + std::to_string(it->r));
    }
  }
  return l;
}

SuperPoly KLRAlgebra::act_letter(const KLRLetter& x, const SuperPoly& f) const {
  const Label& l = f.label();
  switch (x.kind) {
    case KLRLetter::Dot: return y(x.r, l) * f;
    case KLRLetter::Float: return omega(1, l) * f;
    case KLRLetter::Tau: {
      if (x.r < 1 || x.r >= d_) fail(ErrorKind::IndexOutOfRange, "crossing index " + std::to_string(x.r));
      if (l[x.r - 1] == l[x.r]) return demazure_klr(x.r, f);
      SuperPoly g = sym_act_klr(x.r, f);
      if (!quiver_.h(l[x.r - 1], l[x.r])) return g;
      return P(l[x.r - 1], l[x.r], x.r, g.label()) * g;
    }
  }
  fail(ErrorKind::InternalError, "unknown letter");
}

SuperPoly KLRAlgebra::act(const KLRWord& w, const SuperPoly& f) const {
  if (f.ring() != Ring::KLR) fail(ErrorKind::RingMismatch, "KLR word acting on a Hecke polynomial");
  if (f.label() != w.source)
    fail(ErrorKind::LabelMismatch, "word with source " + label_str(w.source) + " on " + label_str(f.label()));
  SuperPoly g = f;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    g = act_letter(*it, g);
    if (g.is_zero()) return SuperPoly(Ring::KLR, d_, target(w));
  }
  return g;
}

KLRVec KLRAlgebra::act(const KLRElement& e, const SuperPoly& f) const {
  KLRVec out;
  for (auto& [w, c] : e.terms()) {
    if (w.source != f.label()) continue;
    SuperPoly g = act(w, f);
    if (g.is_zero()) continue;
    g *= c;
    auto it = out.find(g.label());
    if (it == out.end())
      out.emplace(g.label(), std::move(g));
    else
      it->second += g;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

KLRWord KLRAlgebra::basis_word(const KLRBasisKey& k) const {
  if (!seq_index_.count(k.source)) fail(ErrorKind::InvalidBasisKey, "source " + label_str(k.source) + " not in Seq(nu)");
  const SymGroup& g = SymGroup::get(d_);
  if (k.w < 0 || k.w >= g.size()) fail(ErrorKind::InvalidBasisKey, "permutation index out of range");
  if (k.odd >> d_) fail(ErrorKind::InvalidBasisKey, "floating dot set out of range");
  for (int r = 0; r < kMaxStrands; ++r)
    if (k.n[r] < 0 || (r >= d_ && k.n[r] != 0)) fail(ErrorKind::InvalidBasisKey, "bad dot exponents");

  const auto& W = g.left_adjusted(k.w);
  const int len = static_cast<int>(W.size());
  // slot j = after the first j crossings (counted from the right); value = strand position there
  std::vector<std::vector<int>> at(len + 1);
  for (int r = 1; r <= d_; ++r) {
    if (!(k.odd & (1u << (r - 1)))) continue;
    int p = r, best = r, m = 0;
    for (int j = 1; j <= len; ++j) {
      int s = W[len - j];
      if (p == s)
        p = s + 1;
      else if (p == s + 1)
        p = s;
      if (p < best) {
        best = p;
        m = j;
      }
    }
    at[m].push_back(best);
  }
  std::vector<KLRLetter> rl;  // right to left
  for (int r = d_; r >= 1; --r)
    for (int t = 0; t < k.n[r - 1]; ++t) rl.push_back(KLRLetter::dot(r));
  for (int j = 0; j <= len; ++j) {
    for (int p : at[j]) {
      for (int t = p - 1; t >= 1; --t) rl.push_back(KLRLetter::tau(t));
      rl.push_back(KLRLetter::fdot());
      for (int t = 1; t <= p - 1; ++t) rl.push_back(KLRLetter::tau(t));
    }
    if (j < len) rl.push_back(KLRLetter::tau(W[len - 1 - j]));
  }
  std::reverse(rl.begin(), rl.end());
  return KLRWord{k.source, rl};
}

KLRElement KLRAlgebra::from_basis(const KLRExpansion& e) const {
  KLRElement out;
  for (auto& [k, c] : e) out.add(basis_word(k), c);
  return out;
}

int KLRAlgebra::growth(const KLRWord& w) const {
  int g = 0;
  for (auto& x : w.letters) {
    if (x.kind == KLRLetter::Tau) g += maxh_;
    if (x.kind == KLRLetter::Dot) g += 1;
  }
  return g;
}

int KLRAlgebra::degree(const KLRWord& w) const {
  Label l = w.source;
  int deg = 0;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    switch (it->kind) {
      case KLRLetter::Dot: deg += 2; break;
      case KLRLetter::Float: deg -= 2; break;
      case KLRLetter::Tau: {
        const Scalar &a = l[it->r - 1], &b = l[it->r];
        deg += a == b ? -2 : quiver_.h(a, b) + quiver_.h(b, a);
        std::swap(l[it->r - 1], l[it->r]);
      }
    }
  }
  return deg;
}

KLRElement KLRAlgebra::poly_element(const SuperPoly& f) const {
  if (f.ring() != Ring::KLR || !f.exterior_free()) fail(ErrorKind::RingMismatch, "need an even KLR polynomial");
  KLRElement out;
  for (auto& [m, c] : f.terms()) {
    KLRWord w{f.label(), {}};
    for (int r = 1; r <= d_; ++r) {
      if (m.e[r - 1] < 0) fail(ErrorKind::RingMismatch, "negative exponent in a KLR polynomial");
      for (int t = 0; t < m.e[r - 1]; ++t) w.letters.push_back(KLRLetter::dot(r));
    }
    out.add(w, c);
  }
  return out;
}

std::vector<SuperPoly> KLRAlgebra::probes(const Label& src, int deg, bool odd) const {
  check_source(src);
  std::vector<SuperPoly> out;
  auto exps = exponent_vectors(d_, deg);
  const unsigned top = odd ? (1u << d_) : 1u;
  for (unsigned s = 0; s < top; ++s)
    for (auto& e : exps) out.push_back(SuperPoly::monomial(Ring::KLR, d_, Mono{e, static_cast<std::uint16_t>(s)}, 1, src));
  return out;
}

std::vector<KLRBasisKey> basis_keys(const KLRAlgebra& alg, const Label& src, int max_n, bool odd) {
  alg.check_source(src);
  const int d = alg.d();
  std::vector<KLRBasisKey> out;
  auto exps = exponent_vectors(d, max_n);
  const unsigned top = odd ? (1u << d) : 1u;
  for (int w = 0; w < SymGroup::get(d).size(); ++w)
    for (unsigned s = 0; s < top; ++s)
      for (auto& e : exps) out.push_back(KLRBasisKey{w, static_cast<std::uint16_t>(s), e, src});
  return out;
}

namespace {

struct RowKey {
  int probe;
  int label;
  Mono m;
  bool operator==(const RowKey& o) const { return probe == o.probe && label == o.label && m == o.m; }
};

struct RowHash {
  size_t operator()(const RowKey& k) const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t x) { h = (h ^ x) * 1099511628211ull; };
    mix(static_cast<std::uint64_t>(k.probe));
    mix(static_cast<std::uint64_t>(k.label));
    mix(k.m.s);
    for (auto e : k.m.e) mix(static_cast<std::uint16_t>(e));
    return static_cast<size_t>(h);
  }
};

}  // namespace

struct KLRAlgebra::Table {
  std::vector<KLRBasisKey> keys;
  std::vector<Mono> probes;
  std::unordered_map<RowKey, int, RowHash> rows;
  std::vector<int> row_probe;
  Echelon ech{true};
  int rank = 0;
  // (w, I) -> its word and the actions already computed, kept while the table is built
  std::map<std::pair<int, std::uint16_t>, std::pair<KLRWord, std::map<Mono, SuperPoly>>> memo;
};

void KLRAlgebra::fill_table(Table& t, const Label& src) const {
  // tau_w(I) Y^n on a probe is tau_w(I) on a shifted monomial; share those
  auto& memo = t.memo;
  for (int id = 0; id < static_cast<int>(t.keys.size()); ++id) {
    const KLRBasisKey& k = t.keys[id];
    auto mit = memo.find({k.w, k.odd});
    if (mit == memo.end()) {
      KLRBasisKey k0 = k;
      k0.n = Exps{};
      mit = memo.emplace(std::make_pair(k.w, k.odd), std::make_pair(basis_word(k0), std::map<Mono, SuperPoly>{})).first;
    }
    const KLRWord& w0 = mit->second.first;
    auto& cache = mit->second.second;
    std::map<int, Scalar> col;
    for (int pi = 0; pi < static_cast<int>(t.probes.size()); ++pi) {
      Mono m = t.probes[pi];
      for (int r = 0; r < d_; ++r) m.e[r] = static_cast<std::int16_t>(m.e[r] + k.n[r]);
      auto it = cache.find(m);
      if (it == cache.end()) it = cache.emplace(m, act(w0, SuperPoly::monomial(Ring::KLR, d_, m, 1, src))).first;
      const SuperPoly& v = it->second;
      if (v.is_zero()) continue;
      int li = seq_index(v.label());
      for (auto& [mm, c] : v.terms()) {
        auto [rit, fresh] = t.rows.try_emplace(RowKey{pi, li, mm}, static_cast<int>(t.rows.size()));
        if (fresh) t.row_probe.push_back(pi);
        col[rit->second] += c;
      }
    }
    if (t.ech.insert(sparse_from_map(col), id)) ++t.rank;
  }
}

// keys tau_w(I) Y^n 1_src of degree deg with |I| = lam, acting on probes of Y-degree <= max|n| + pad
std::shared_ptr<const KLRAlgebra::Table> KLRAlgebra::table(const Label& src, int deg, int lam, int nlimit) const {
  auto key = std::make_tuple(src, deg, lam, nlimit);
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->tables.find(key);
    if (it != cache_->tables.end()) return it->second;
  }
  auto t = std::make_shared<Table>();
  const SymGroup& g = SymGroup::get(d_);
  int nmax = 0;
  for (int w = 0; w < g.size(); ++w)
    for (unsigned s = 0; s < (1u << d_); ++s) {
      if (__builtin_popcount(s) != lam) continue;
      KLRBasisKey k{w, static_cast<std::uint16_t>(s), {}, src};
      int rest = deg - degree(k);
      if (rest < 0 || rest % 2) continue;
      int N = rest / 2;
      if (nlimit >= 0 && N > nlimit) continue;
      for (auto& n : exponent_vectors(d_, N)) {
        int tot = 0;
        for (int r = 0; r < d_; ++r) tot += n[r];
        if (tot != N) continue;
        k.n = n;
        t->keys.push_back(k);
      }
      nmax = std::max(nmax, N);
    }
  // smallest probe sets first: pure polynomials of growing degree, then exterior probes
  std::vector<std::pair<int, bool>> tries;
  for (int pad = 0; pad <= kProbePad; ++pad) tries.push_back({pad, false});
  if (lam > 0) tries.push_back({kProbePad, true});
  for (auto [pad, odd] : tries) {
    t->probes.clear();
    t->rows.clear();
    t->row_probe.clear();
    t->ech = Echelon(true);
    t->rank = 0;
    for (auto& p : probes(src, nmax + pad, odd)) t->probes.push_back(p.terms().begin()->first);
    fill_table(*t, src);
    if (t->rank == static_cast<int>(t->keys.size())) break;
  }
  t->memo.clear();
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->tables.emplace(key, t).first->second;
}

std::pair<int, int> KLRAlgebra::table_rank(const Label& src, int B, bool odd) const {
  // degrees of keys with |n| <= B
  std::set<std::pair<int, int>> blocks;
  for (auto& k : basis_keys(*this, src, B, odd)) blocks.insert({degree(k), k.lambda_degree()});
  int rank = 0, cols = 0;
  for (auto& [deg, lam] : blocks) {
    auto t = table(src, deg, lam, B);
    rank += t->rank;
    cols += static_cast<int>(t->keys.size());
  }
  return {rank, cols};
}

KLRExpansion KLRAlgebra::to_basis(const KLRElement& e, int deg_bound) const {
  std::map<std::tuple<Label, int, int>, KLRElement> blocks;
  for (auto& [w, c] : e.terms()) {
    check_source(w.source);
    target(w);
    blocks[std::make_tuple(w.source, degree(w), w.float_count())].add(w, c);
  }
  KLRExpansion out;
  for (auto& [bk, elem] : blocks) {
    const auto& [src, deg, lam] = bk;
    auto t = table(src, deg, lam, deg_bound);
    if (t->rank != static_cast<int>(t->keys.size()))
      fail(ErrorKind::SingularTable, "basis operators are dependent on the probes of " + label_str(src));
    std::map<int, Scalar> v;
    for (int pi = 0; pi < static_cast<int>(t->probes.size()); ++pi) {
      auto probe = SuperPoly::monomial(Ring::KLR, d_, t->probes[pi], 1, src);
      for (auto& [lab, f] : act(elem, probe)) {
        int li = seq_index(lab);
        for (auto& [m, c] : f.terms()) {
          auto it = t->rows.find(RowKey{pi, li, m});
          if (it == t->rows.end())
            fail(ErrorKind::DegreeBoundExceeded,
                 "on probe " + probe.str() + " the element leaves the span of the basis operators tried");
          v[it->second] += c;
        }
      }
    }
    SparseVec expr;
    SparseVec rem = t->ech.reduce(sparse_from_map(v), &expr);
    if (!rem.empty()) {
      auto probe = SuperPoly::monomial(Ring::KLR, d_, t->probes[t->row_probe[rem.front().first]], 1, src);
      fail(ErrorKind::DegreeBoundExceeded,
           "on probe " + probe.str() + " the element is not matched by the basis operators tried");
    }
    for (auto& [id, c] : expr) {
      auto [it, fresh] = out.try_emplace(t->keys[id], c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

KLRExpansion KLRAlgebra::d_lambda(const KLRElement& e, const Multiplicity& Lambda) const {
  KLRElement out;
  for (auto& [w, c] : e.terms()) {
    const int L = static_cast<int>(w.letters.size());
    std::vector<Label> lab(L);
    Label cur = w.source;
    for (int t = L - 1; t >= 0; --t) {
      lab[t] = cur;
      if (w.letters[t].kind == KLRLetter::Tau) std::swap(cur[w.letters[t].r - 1], cur[w.letters[t].r]);
    }
    int seen = 0;
    for (int t = 0; t < L; ++t) {
      if (w.letters[t].kind != KLRLetter::Float) continue;
      auto it = Lambda.find(lab[t][0]);
      int lam = it == Lambda.end() ? 0 : it->second;
      KLRWord nw{w.source, {}};
      nw.letters.insert(nw.letters.end(), w.letters.begin(), w.letters.begin() + t);
      for (int s = 0; s < lam; ++s) nw.letters.push_back(KLRLetter::dot(1));
      nw.letters.insert(nw.letters.end(), w.letters.begin() + t + 1, w.letters.end());
      out.add(nw, ((seen + lam) % 2) ? Scalar(-c) : c);
      ++seen;
    }
  }
  return to_basis(out);
}

KLRExpansion KLRAlgebra::d_lambda(const KLRExpansion& e, const Multiplicity& Lambda) const {
  return d_lambda(from_basis(e), Lambda);
}

namespace {

int lambda_at(const Multiplicity& Lambda, const Scalar& i) {
  auto it = Lambda.find(i);
  return it == Lambda.end() ? 0 : it->second;
}

std::pair<int, std::vector<KLRBasisKey>> cyclotomic_at(const KLRAlgebra& alg, const Multiplicity& Lambda, int cap,
                                                       std::map<int, int>* by_degree) {
  const int d = alg.d();
  const SymGroup& g = SymGroup::get(d);
  std::vector<KLRBasisKey> keys;
  std::map<KLRBasisKey, int> index;
  for (auto& src : alg.sequences())
    for (int w = 0; w < g.size(); ++w) {
      int base = alg.degree(KLRBasisKey{w, 0, {}, src});
      if (cap < base) continue;
      for (auto& n : exponent_vectors(d, (cap - base) / 2)) {
        KLRBasisKey k{w, 0, n, src};
        index[k] = static_cast<int>(keys.size());
        keys.push_back(k);
      }
    }
  // the ideal is spanned by tau_u Y_1^Lambda 1_j tau_v Y^p 1_i
  std::vector<KLRWord> gens;
  for (auto& src : alg.sequences())
    for (int v = 0; v < g.size(); ++v) {
      Label j = permute_label(g.perm(v), src);
      int lam = lambda_at(Lambda, j[0]);
      int dv = alg.degree(KLRBasisKey{v, 0, {}, src});
      for (int u = 0; u < g.size(); ++u) {
        int rest = cap - dv - alg.degree(KLRBasisKey{u, 0, {}, j}) - 2 * lam;
        if (rest < 0) continue;
        KLRWord left = alg.basis_word(KLRBasisKey{u, 0, {}, j});
        for (auto& p : exponent_vectors(d, rest / 2)) {
          KLRWord right = alg.basis_word(KLRBasisKey{v, 0, p, src});
          KLRWord w{src, left.letters};
          for (int t = 0; t < lam; ++t) w.letters.push_back(KLRLetter::dot(1));
          w.letters.insert(w.letters.end(), right.letters.begin(), right.letters.end());
          gens.push_back(std::move(w));
        }
      }
    }
  Echelon ech;
  for (auto& w : gens) {
    std::map<int, Scalar> v;
    for (auto& [k, c] : alg.to_basis(KLRElement(w))) {
      auto it = index.find(k);
      if (it == index.end()) fail(ErrorKind::InternalError, "ideal element outside the degree window: " + k.str());
      v[it->second] = c;
    }
    ech.insert(sparse_from_map(v));
  }
  auto piv = ech.pivots();
  std::vector<char> is_piv(keys.size(), 0);
  for (int p : piv) is_piv[p] = 1;
  std::vector<KLRBasisKey> surv;
  for (size_t i = 0; i < keys.size(); ++i)
    if (!is_piv[i]) {
      surv.push_back(keys[i]);
      if (by_degree) ++(*by_degree)[alg.degree(keys[i])];
    }
  return {static_cast<int>(surv.size()), surv};
}

}  // namespace

CyclotomicDim cyclotomic_dim_klr(const KLRAlgebra& alg, const Multiplicity& Lambda, int cap) {
  CyclotomicDim out;
  auto [dim, surv] = cyclotomic_at(alg, Lambda, cap, &out.by_degree);
  // degrees can jump by two, so look two steps ahead
  auto next = cyclotomic_at(alg, Lambda, cap + 2, nullptr);
  if (next.first != dim)
    fail(ErrorKind::NotStabilized, "quotient dimension " + std::to_string(dim) + " at degree cap " +
                                       std::to_string(cap) + " but " + std::to_string(next.first) + " at " +
                                       std::to_string(cap + 2));
  out.dim = dim;
  out.survivors = std::move(surv);
  return out;
}

int default_cyclotomic_cap(const KLRAlgebra& alg, const Multiplicity& Lambda) {
  // top degree of R^Lambda(nu) is 2(Lambda,nu) - (nu,nu)
  int ln = 0, nn = 0;
  for (auto& [i, m] : alg.nu()) {
    ln += lambda_at(Lambda, i) * m;
    for (auto& [j, mj] : alg.nu())
      nn += m * mj * (i == j ? 2 : -(alg.quiver().h(i, j) + alg.quiver().h(j, i)));
  }
  return std::max(0, 2 * ln - nn) + 2;
}

}  // namespace dgh
