#include "dgh/homology.hpp"

#include <algorithm>
#include <functional>

#include "dgh/completion.hpp"

namespace dgh {

namespace {

int deg_of(const Exps& e, int d) {
  int s = 0;
  for (int r = 0; r < d; ++r) s += e[r];
  return s;
}

std::string exps_str(const Exps& e, int d) {
  std::string s = "x^(";
  for (int r = 0; r < d; ++r) s += (r ? "," : "") + std::to_string(e[r]);
  return s + ")";
}

// all products of n elements of gens, with repetition
void products(const std::vector<SuperPoly>& gens, int n, size_t from, const SuperPoly& acc, std::vector<SuperPoly>& out) {
  if (n == 0) {
    out.push_back(acc);
    return;
  }
  for (size_t i = from; i < gens.size(); ++i) products(gens, n - 1, i, acc * gens[i], out);
}

SuperPoly elementary(Ring ring, int d, int k, const std::vector<SuperPoly>& x) {
  // e_k by the recursion on subsets
  SuperPoly out(ring, d);
  for (unsigned m = 0; m < (1u << d); ++m) {
    if (__builtin_popcount(m) != k) continue;
    SuperPoly t = SuperPoly::constant(ring, d, 1);
    for (int r = 0; r < d; ++r)
      if (m & (1u << r)) t = t * x[r];
    out += t;
  }
  return out;
}

Scalar elementary_value(const Label& b, int k) {
  const int d = static_cast<int>(b.size());
  Scalar out = 0;
  for (unsigned m = 0; m < (1u << d); ++m) {
    if (__builtin_popcount(m) != k) continue;
    Scalar t = 1;
    for (int r = 0; r < d; ++r)
      if (m & (1u << r)) t *= b[r];
    out += t;
  }
  return out;
}

std::string bits_str(unsigned s, int d) {
  std::string out;
  for (int r = 0; r < d; ++r) out += (s & (1u << r)) ? '1' : '0';
  return out;
}

}  // namespace

LocalQuotient::LocalQuotient(int d, std::vector<SuperPoly> gens, int N) : d_(d), N_(N) {
  if (N < 1) fail(ErrorKind::InvalidParam, "quotient power must be at least 1");
  for (auto& g : gens) {
    if (!g.exterior_free() || g.coeff(Mono{}) != 0)
      fail(ErrorKind::InvalidParam, "ideal generators must be even and vanish at the point");
    g = g.with_ring(Ring::HeckeP);
  }
  std::vector<SuperPoly> gen_pows;
  products(gens, N, 0, SuperPoly::constant(Ring::HeckeP, d, 1), gen_pows);

  for (int M = N; M <= 6 * N + 8; ++M) {
    monos_.clear();
    index_.clear();
    ideal_ = Echelon();
    for (int k = M - 1; k >= 0; --k)
      for (auto& e : exponent_vectors(d, k, 0))
        if (deg_of(e, d) == k) {
          index_[e] = static_cast<int>(monos_.size());
          monos_.push_back(e);
        }
    auto vec = [&](const SuperPoly& f) {
      std::map<int, Scalar> m;
      for (auto& [mono, c] : f.terms()) {
        if (mono.degree() >= M) continue;
        m[index_.at(mono.e)] += c;
      }
      return sparse_from_map(m);
    };
    for (auto& g : gen_pows)
      for (auto& e : monos_) {
        auto t = truncated(mul_mono(g, Mono{e, 0}), M);
        if (!t.is_zero()) ideal_.insert(vec(t));
      }
    // Nakayama: m^{M-1} inside J + m^M forces m^{M-1} inside J
    bool ok = true;
    for (auto& e : monos_) {
      if (deg_of(e, d) != M - 1) continue;
      if (!ideal_.in_span({{index_.at(e), Scalar(1)}})) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    M_ = M;
    auto piv = ideal_.pivots();
    std::sort(piv.begin(), piv.end());
    standard_.clear();
    std_index_.clear();
    // low degrees first in the standard list
    for (int i = static_cast<int>(monos_.size()) - 1; i >= 0; --i)
      if (!std::binary_search(piv.begin(), piv.end(), i)) {
        std_index_[i] = static_cast<int>(standard_.size());
        standard_.push_back(monos_[i]);
      }
    return;
  }
  fail(ErrorKind::NotStabilized, "ideal power does not contain a power of the maximal ideal within the search range");
}

SparseVec LocalQuotient::reduce(const SuperPoly& f) const {
  std::map<int, Scalar> m;
  for (auto& [mono, c] : f.terms()) {
    if (mono.s) fail(ErrorKind::InvalidParam, "local quotient takes exterior-free polynomials");
    for (int r = 0; r < d_; ++r)
      if (mono.e[r] < 0) fail(ErrorKind::InvalidParam, "negative exponent in the local quotient");
    if (mono.degree() >= M_) continue;
    m[index_.at(mono.e)] += c;
  }
  auto rem = ideal_.reduce(sparse_from_map(m));
  std::map<int, Scalar> out;
  for (auto& [i, c] : rem) out[std_index_.at(i)] += c;
  return sparse_from_map(out);
}

int FiniteComplex::total_dim() const {
  int s = 0;
  for (auto& n : names) s += static_cast<int>(n.size());
  return s;
}

bool FiniteComplex::is_complex(std::string* witness) const {
  for (int k = 2; k <= top(); ++k)
    for (int j = 0; j < dim(k); ++j) {
      std::map<int, Scalar> acc;
      for (auto& [i, c] : d[k][j])
        for (auto& [t, e] : d[k - 1][i]) acc[t] += c * e;
      if (!sparse_from_map(acc).empty()) {
        if (witness) *witness = "d^2 of " + names[k][j] + " is nonzero";
        return false;
      }
    }
  return true;
}

FiniteComplex build_filtration_complex(const ParamSet& p, int D) {
  validate(p);
  if (p.variant != Variant::Degenerate) fail(ErrorKind::InvalidParam, "the filtration route needs the degenerate variant");
  if (D < 0) fail(ErrorKind::InvalidParam, "filtration bound must be nonnegative");
  HeckeAlgebra alg = HeckeAlgebra::from_params(p);
  const int d = p.d, ell = p.ell();
  const SymGroup& g = alg.group();

  FiniteComplex c;
  c.names.assign(d + 1, {});
  c.d.assign(d + 1, {});
  std::vector<std::vector<HKey>> keys(d + 1);
  std::map<HKey, int> where;
  for (unsigned b = 0; b < (1u << d); ++b) {
    int k = __builtin_popcount(b);
    if (ell * k > D) continue;
    for (int w = 0; w < g.size(); ++w)
      for (auto& a : exponent_vectors(d, D - ell * k, 0)) {
        HKey key{a, w, static_cast<std::uint16_t>(b)};
        where[key] = static_cast<int>(keys[k].size());
        keys[k].push_back(key);
        c.names[k].push_back(alg.key(key).str());
      }
  }
  for (int k = 0; k <= d; ++k) {
    c.d[k].resize(keys[k].size());
    if (k == 0) continue;
    for (size_t j = 0; j < keys[k].size(); ++j) {
      auto img = alg.differential_Q(alg.key(keys[k][j]), p.Q);
      std::map<int, Scalar> col;
      for (auto& [key, coef] : img.terms()) {
        auto it = where.find(key);
        if (it == where.end() || __builtin_popcount(key.b) != k - 1)
          fail(ErrorKind::FiltrationLeak, "the differential of " + c.names[k][j] + " leaves filtration " +
                                              std::to_string(D) + " at " + alg.key(key).str());
        col[it->second] += coef;
      }
      c.d[k][j] = sparse_from_map(col);
    }
  }
  return c;
}

namespace {

// shared assembly of the tower complexes: one local ring per cell, cell differentials as
// polynomial matrices in the shifted variables
struct CellData {
  std::string name;
  int degree = 0;
  std::shared_ptr<const LocalQuotient> ring;
  std::vector<std::pair<int, SuperPoly>> image;  // (target cell, coefficient polynomial)
};

FiniteComplex assemble(const std::vector<CellData>& cells, int top) {
  FiniteComplex c;
  c.names.assign(top + 1, {});
  c.d.assign(top + 1, {});
  c.cell.assign(top + 1, {});
  c.mono.assign(top + 1, {});
  std::vector<int> offset(cells.size(), 0);
  for (size_t i = 0; i < cells.size(); ++i) {
    const auto& cd = cells[i];
    c.cell_ring.push_back(cd.ring);
    offset[i] = c.dim(cd.degree);
    for (auto& e : cd.ring->standard()) {
      c.names[cd.degree].push_back(exps_str(e, cd.ring->d()) + "*" + cd.name);
      c.cell[cd.degree].push_back(static_cast<int>(i));
      c.mono[cd.degree].push_back(e);
    }
  }
  for (size_t i = 0; i < cells.size(); ++i) {
    const auto& cd = cells[i];
    for (auto& e : cd.ring->standard()) {
      std::map<int, Scalar> col;
      for (auto& [t, poly] : cd.image) {
        auto red = cells[t].ring->reduce(truncated(mul_mono(poly, Mono{e, 0}), cells[t].ring->cutoff()));
        for (auto& [pos, coef] : red) col[offset[t] + pos] += coef;
      }
      c.d[cd.degree].push_back(cd.degree == 0 ? SparseVec{} : sparse_from_map(col));
    }
  }
  return c;
}

}  // namespace

FiniteComplex build_quotient_complex(const ParamSet& p, int N) {
  validate(p);
  HeckeAlgebra alg = HeckeAlgebra::from_params(p);
  const int d = p.d;
  const SymGroup& g = alg.group();
  std::vector<SuperPoly> xs;
  for (int r = 1; r <= d; ++r) xs.push_back(alg.x(r));

  std::vector<CellData> cells;
  std::map<std::tuple<Label, int, unsigned>, int> cell_index;
  for (auto& b : orbit(p.a)) {
    std::vector<SuperPoly> gens;
    for (int k = 1; k <= d; ++k)
      gens.push_back(shift_to(elementary(alg.ring(), d, k, xs) - alg.constant(elementary_value(p.a, k)), b, d + 1));
    auto ring = std::make_shared<const LocalQuotient>(d, gens, N);
    for (int w = 0; w < g.size(); ++w)
      for (unsigned s = 0; s < (1u << d); ++s) {
        CellData cd;
        cd.degree = __builtin_popcount(s);
        cd.ring = ring;
        cd.name = "T" + std::to_string(w) + "*xi" + bits_str(s, d) + "*1_" + label_str(b);
        cell_index[{b, w, s}] = static_cast<int>(cells.size());
        cells.push_back(std::move(cd));
      }
  }
  for (auto& b : orbit(p.a))
    for (int w = 0; w < g.size(); ++w)
      for (unsigned s = 0; s < (1u << d); ++s) {
        auto& cd = cells[cell_index.at({b, w, s})];
        if (cd.degree == 0) continue;
        auto img = alg.differential_Q(alg.key(HKey{{}, w, static_cast<std::uint16_t>(s)}), p.Q);
        std::map<std::pair<int, unsigned>, SuperPoly> grouped;
        for (auto& [key, coef] : img.terms()) {
          auto [it, fresh] = grouped.try_emplace({key.w, key.b}, alg.ring(), d);
          it->second.add_term(Mono{key.a, 0}, coef);
        }
        for (auto& [wb, poly] : grouped) {
          int t = cell_index.at({b, wb.first, wb.second});
          cd.image.emplace_back(t, shift_to(poly, b, cells[t].ring->cutoff()));
        }
      }
  return assemble(cells, d);
}

FiniteComplex build_klr_quotient_complex(const ParamSet& p, int N) {
  validate(p);
  KLRAlgebra alg = KLRAlgebra::from_params(p);
  const auto Lambda = p.lambda();
  const int d = alg.d();
  const SymGroup& g = SymGroup::get(d);
  std::vector<SuperPoly> xs;
  for (int r = 1; r <= d; ++r) xs.push_back(SuperPoly::var(Ring::HeckeP, d, r));
  std::vector<SuperPoly> gens;
  for (int k = 1; k <= d; ++k) gens.push_back(elementary(Ring::HeckeP, d, k, xs));
  auto ring = std::make_shared<const LocalQuotient>(d, gens, N);

  std::vector<CellData> cells;
  std::map<std::tuple<Label, int, unsigned>, int> cell_index;
  for (auto& i : alg.sequences())
    for (int w = 0; w < g.size(); ++w)
      for (unsigned s = 0; s < (1u << d); ++s) {
        CellData cd;
        cd.degree = __builtin_popcount(s);
        cd.ring = ring;
        cd.name = KLRBasisKey{w, static_cast<std::uint16_t>(s), Exps{}, i}.str();
        cell_index[{i, w, s}] = static_cast<int>(cells.size());
        cells.push_back(std::move(cd));
      }
  for (auto& i : alg.sequences())
    for (int w = 0; w < g.size(); ++w)
      for (unsigned s = 0; s < (1u << d); ++s) {
        auto& cd = cells[cell_index.at({i, w, s})];
        if (cd.degree == 0) continue;
        // dots sit rightmost in basis words, so d(b Y^n) = d(b) Y^n shifts n
        KLRExpansion one{{KLRBasisKey{w, static_cast<std::uint16_t>(s), Exps{}, i}, Scalar(1)}};
        std::map<int, SuperPoly> grouped;
        for (auto& [key, coef] : alg.d_lambda(one, Lambda)) {
          if (key.source != i) fail(ErrorKind::InternalError, "d_Lambda changed the source idempotent");
          int t = cell_index.at({i, key.w, key.odd});
          auto [it, fresh] = grouped.try_emplace(t, Ring::HeckeP, d);
          it->second.add_term(Mono{key.n, 0}, coef);
        }
        for (auto& [t, poly] : grouped) cd.image.emplace_back(t, poly);
      }
  return assemble(cells, d);
}

int HomologyReport::h(int k) const {
  for (auto& x : degrees)
    if (x.k == k) return x.homology;
  return 0;
}

nlohmann::json HomologyReport::to_json() const {
  nlohmann::json j;
  j["degrees"] = nlohmann::json::array();
  for (auto& x : degrees)
    j["degrees"].push_back(
        {{"k", x.k}, {"chains", x.chains}, {"cycles", x.cycles}, {"boundaries", x.boundaries}, {"homology", x.homology}});
  j["transitions"] = nlohmann::json::array();
  for (auto& t : transitions) j["transitions"].push_back({{"from", t.from}, {"to", t.to}, {"k", t.k}, {"rank", t.rank}});
  j["euler_chains"] = euler_chains;
  j["euler_homology"] = euler_homology;
  return j;
}

HomologyReport homology_ranks(const FiniteComplex& c) {
  HomologyReport r;
  std::vector<int> rank(c.top() + 2, 0);
  for (int k = 1; k <= c.top(); ++k) rank[k] = rank_of(c.d[k]);
  for (int k = 0; k <= c.top(); ++k) {
    HomologyDegree h;
    h.k = k;
    h.chains = c.dim(k);
    h.cycles = k == 0 ? h.chains : static_cast<int>(kernel_of(c.d[k]).size());
    h.boundaries = rank[k + 1];
    h.homology = h.cycles - h.boundaries;
    if (h.homology < 0) fail(ErrorKind::InternalError, "negative homology dimension");
    int sign = k % 2 ? -1 : 1;
    r.euler_chains += sign * h.chains;
    r.euler_homology += sign * h.homology;
    r.degrees.push_back(h);
  }
  return r;
}

std::vector<SparseVec> tower_map(const FiniteComplex& src, const FiniteComplex& dst, int k) {
  if (src.cell_ring.size() != dst.cell_ring.size() || src.top() != dst.top())
    fail(ErrorKind::InvalidParam, "tower map between complexes of different shape");
  std::map<int, int> offset;
  for (int j = dst.dim(k) - 1; j >= 0; --j) offset[dst.cell[k][j]] = j;
  std::vector<SparseVec> cols;
  for (int j = 0; j < src.dim(k); ++j) {
    int cell = src.cell[k][j];
    const auto& ring = *dst.cell_ring[cell];
    auto red = ring.reduce(truncated(SuperPoly::monomial(Ring::HeckeP, ring.d(), Mono{src.mono[k][j], 0}), ring.cutoff()));
    SparseVec col;
    for (auto& [pos, coef] : red) col.emplace_back(offset.at(cell) + pos, coef);
    cols.push_back(std::move(col));
  }
  return cols;
}

std::vector<SparseVec> inclusion_map(const FiniteComplex& src, const FiniteComplex& dst, int k) {
  std::map<std::string, int> where;
  for (int j = 0; j < dst.dim(k); ++j) where[dst.names[k][j]] = j;
  std::vector<SparseVec> cols;
  for (int j = 0; j < src.dim(k); ++j) {
    auto it = where.find(src.names[k][j]);
    if (it == where.end()) fail(ErrorKind::InvalidParam, "inclusion misses " + src.names[k][j]);
    cols.push_back({{it->second, Scalar(1)}});
  }
  return cols;
}

int induced_rank(const FiniteComplex& src, const FiniteComplex& dst, const std::vector<SparseVec>& f, int k,
                 std::string* witness) {
  std::vector<SparseVec> cycles;
  if (k == 0) {
    for (int j = 0; j < src.dim(0); ++j) cycles.push_back({{j, Scalar(1)}});
  } else {
    cycles = kernel_of(src.d[k]);
  }
  Echelon e;
  if (k + 1 <= dst.top())
    for (auto& col : dst.d[k + 1]) e.insert(col);
  int base = e.rank();
  for (auto& z : cycles) {
    std::map<int, Scalar> img;
    for (auto& [j, c] : z)
      for (auto& [t, v] : f[j]) img[t] += c * v;
    if (e.insert(sparse_from_map(img)) && witness && witness->empty()) {
      std::string s;
      for (auto& [j, c] : z) {
        if (s.size() > 400) {
          s += " + ...";
          break;
        }
        s += (s.empty() ? "" : " + ") + ("(" + to_string(c) + ")") + src.names[k][j];
      }
      *witness = "class survives: " + s;
    }
  }
  return e.rank() - base;
}

namespace {

using Dense = std::vector<std::vector<Scalar>>;

Dense dense_mul(const Dense& a, const Dense& b) {
  const size_t n = a.size();
  Dense c(n, std::vector<Scalar>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Dense dense_identity(size_t n, const Scalar& c) {
  Dense m(n, std::vector<Scalar>(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = c;
  return m;
}

std::vector<Label> multisets(const std::vector<Scalar>& vals, int d) {
  std::vector<Label> out;
  Label cur;
  std::function<void(size_t)> rec = [&](size_t from) {
    if (static_cast<int>(cur.size()) == d) {
      out.push_back(cur);
      return;
    }
    for (size_t i = from; i < vals.size(); ++i) {
      cur.push_back(vals[i]);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

struct HeckeQuotient {
  int dim = 0;
  std::vector<HKey> keys;
  std::map<HKey, int> index;
  Echelon ideal;
  std::vector<int> survivors;  // key indices
};

HeckeQuotient hecke_quotient(const HeckeAlgebra& alg, const SuperPoly& P, int ell, int cap) {
  const int d = alg.d();
  HeckeQuotient h;
  // high degrees first, so pivots land on them and survivors are low-degree keys
  for (int k = cap; k >= 0; --k)
    for (int w = 0; w < alg.group().size(); ++w)
      for (auto& a : exponent_vectors(d, k, 0))
        if (deg_of(a, d) == k) {
          HKey key{a, w, 0};
          h.index[key] = static_cast<int>(h.keys.size());
          h.keys.push_back(key);
        }
  const int n = alg.group().size();
  std::vector<HeckeElement> right;
  for (int w = 0; w < n; ++w) {
    auto tp = alg.multiply(alg.key(HKey{{}, w, 0}), alg.poly(P));
    for (int v = 0; v < n; ++v) right.push_back(alg.multiply(tp, alg.key(HKey{{}, v, 0})));
  }
  for (int k = 0; k + ell <= cap; ++k)
    for (auto& a : exponent_vectors(d, k, 0)) {
      if (deg_of(a, d) != k) continue;
      auto xa = SuperPoly::monomial(alg.ring(), d, Mono{a, 0});
      for (auto& r : right) {
        auto el = alg.lmul_poly(xa, r);
        std::map<int, Scalar> v;
        for (auto& [key, c] : el.terms()) {
          auto it = h.index.find(key);
          if (it == h.index.end()) fail(ErrorKind::InternalError, "ideal element above the degree cap");
          v[it->second] += c;
        }
        h.ideal.insert(sparse_from_map(v));
      }
    }
  auto piv = h.ideal.pivots();
  std::sort(piv.begin(), piv.end());
  for (int i = static_cast<int>(h.keys.size()) - 1; i >= 0; --i)
    if (!std::binary_search(piv.begin(), piv.end(), i)) h.survivors.push_back(i);
  h.dim = static_cast<int>(h.survivors.size());
  return h;
}

}  // namespace

int default_hecke_cap(const ParamSet& p) { return p.d * p.ell() + 2; }

CyclotomicHecke cyclotomic_dim_hecke(const ParamSet& p, int cap) {
  validate(p);
  HeckeAlgebra alg = HeckeAlgebra::from_params(p);
  const int d = p.d, ell = p.ell();
  const SuperPoly P = alg.cyclotomic_poly(p.Q);
  auto h = hecke_quotient(alg, P, ell, cap);
  auto next = hecke_quotient(alg, P, ell, cap + 2);
  if (next.dim != h.dim)
    fail(ErrorKind::NotStabilized, "cyclotomic Hecke dimension " + std::to_string(h.dim) + " at cap " +
                                       std::to_string(cap) + " but " + std::to_string(next.dim) + " at " +
                                       std::to_string(cap + 2));
  CyclotomicHecke out;
  out.dim = h.dim;
  std::map<int, int> pos;
  for (int i : h.survivors) {
    if (deg_of(h.keys[i].a, d) >= cap)
      fail(ErrorKind::NotStabilized, "a surviving key reaches the degree cap " + std::to_string(cap));
    pos[i] = static_cast<int>(out.survivors.size());
    out.survivors.push_back(h.keys[i]);
  }
  const size_t n = out.survivors.size();
  if (n == 0) return out;

  // left multiplication by X_r on the quotient
  std::vector<Dense> L;
  for (int r = 1; r <= d; ++r) {
    Dense m(n, std::vector<Scalar>(n, 0));
    for (size_t j = 0; j < n; ++j) {
      auto el = alg.lmul_poly(alg.x(r), alg.key(out.survivors[j]));
      std::map<int, Scalar> v;
      for (auto& [key, c] : el.terms()) v[h.index.at(key)] += c;
      for (auto& [i, c] : h.ideal.reduce(sparse_from_map(v))) m[pos.at(i)][j] = c;
    }
    L.push_back(std::move(m));
  }
  std::vector<Dense> E;  // elementary symmetric functions of the X_r
  for (int k = 1; k <= d; ++k) {
    Dense acc(n, std::vector<Scalar>(n, 0));
    for (unsigned m = 0; m < (1u << d); ++m) {
      if (__builtin_popcount(m) != k) continue;
      Dense t = dense_identity(n, 1);
      for (int r = 0; r < d; ++r)
        if (m & (1u << r)) t = dense_mul(t, L[r]);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) acc[i][j] += t[i][j];
    }
    E.push_back(std::move(acc));
  }

  // eigenvalues of X_1 are the Q_s; the other X_r differ by shifts of at most d-1 steps
  std::vector<Scalar> vals;
  for (auto& Qs : p.Q)
    for (int m = -(d - 1); m <= d - 1; ++m) {
      Scalar v = Qs;
      if (p.variant == Variant::Degenerate)
        v += m;
      else
        for (int t = 0; t < std::abs(m); ++t) v = m > 0 ? Scalar(v * p.q) : Scalar(v / p.q);
      vals.push_back(v);
    }
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());

  int total = 0;
  for (auto& b : multisets(vals, d)) {
    std::vector<SparseVec> cols(n);
    for (int k = 1; k <= d; ++k) {
      Dense shifted = E[k - 1];
      Scalar ev = elementary_value(b, k);
      for (size_t i = 0; i < n; ++i) shifted[i][i] -= ev;
      Dense pw = dense_identity(n, 1);
      for (size_t t = 0; t < n; ++t) pw = dense_mul(pw, shifted);
      for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i)
          if (pw[i][j] != 0) cols[j].emplace_back(static_cast<int>((k - 1) * n + i), pw[i][j]);
    }
    int dim = static_cast<int>(kernel_of(cols).size());
    if (dim > 0) {
      out.blocks[b] = dim;
      total += dim;
    }
  }
  if (total != out.dim)
    fail(ErrorKind::InternalError, "block dimensions add up to " + std::to_string(total) + ", not " +
                                       std::to_string(out.dim));
  return out;
}

int hecke_block_dim(const CyclotomicHecke& c, const Label& a) {
  Label s = a;
  std::sort(s.begin(), s.end());
  auto it = c.blocks.find(s);
  return it == c.blocks.end() ? 0 : it->second;
}

namespace {

std::string ints_str(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

void complex_checks(Report& rep, const std::string& id, const FiniteComplex& c, const HomologyReport& h) {
  rep.run(id + ".d-squared", [&]() -> std::optional<std::string> {
    std::string w;
    if (!c.is_complex(&w)) return w;
    return std::nullopt;
  });
  rep.run(id + ".euler", [&]() -> std::optional<std::string> {
    if (h.euler_chains != h.euler_homology)
      return "chains give " + std::to_string(h.euler_chains) + ", homology " + std::to_string(h.euler_homology);
    return std::nullopt;
  });
}

void tower_route(Report& rep, const ParamSet& p, const std::string& side, std::vector<int> Ns, int lag, int oracle,
                 std::vector<std::pair<std::string, HomologyReport>>* reports) {
  std::vector<FiniteComplex> cs;
  std::vector<HomologyReport> hs;
  for (int N : Ns) {
    std::string id = "homology.tower." + side + ".N" + std::to_string(N);
    cs.push_back(side == "hecke" ? build_quotient_complex(p, N) : build_klr_quotient_complex(p, N));
    hs.push_back(homology_ranks(cs.back()));
    complex_checks(rep, id, cs.back(), hs.back());
  }
  // a class at level N' must die at every level N <= N' - lag; the lag is the degree of the cyclotomic polynomial
  bool paired = false;
  for (size_t t = 0; t < Ns.size(); ++t) {
    int s = -1;
    for (size_t u = 0; u < t; ++u)
      if (Ns[t] - Ns[u] >= lag) s = static_cast<int>(u);
    if (s < 0) continue;
    paired = true;
    for (int k = 1; k <= cs[t].top(); ++k) {
      std::string id = "homology.tower." + side + ".N" + std::to_string(Ns[t]) + "-to-N" + std::to_string(Ns[s]) +
                       ".H" + std::to_string(k) + "-vanishes";
      rep.run(id, [&]() -> std::optional<std::string> {
        std::string w;
        int r = induced_rank(cs[t], cs[s], tower_map(cs[t], cs[s], k), k, &w);
        hs[t].transitions.push_back({Ns[t], Ns[s], k, r});
        if (r != 0) return "rank " + std::to_string(r) + "; " + w;
        return std::nullopt;
      });
    }
  }
  if (!paired)
    rep.fail_with("homology.tower." + side + ".levels",
                  "no two levels in N = " + ints_str(Ns) + " are at least " + std::to_string(lag) + " apart");
  rep.run("homology.tower." + side + ".H0-stable", [&]() -> std::optional<std::string> {
    std::vector<int> h0;
    for (auto& h : hs) h0.push_back(h.h(0));
    size_t from = hs.size() >= 2 ? hs.size() - 2 : 0;
    for (size_t t = from; t < hs.size(); ++t)
      if (h0[t] != oracle)
        return "H0 dims " + ints_str(h0) + " over N = " + ints_str(Ns) + ", oracle " + std::to_string(oracle);
    return std::nullopt;
  });
  if (reports)
    for (size_t t = 0; t < Ns.size(); ++t) reports->emplace_back(side + ".N" + std::to_string(Ns[t]), hs[t]);
}

}  // namespace

Report verify_quasi_iso(const ParamSet& p, Route route, const std::vector<int>& bounds,
                        std::vector<std::pair<std::string, HomologyReport>>* reports) {
  validate(p);
  Report rep;
  std::vector<int> bs = bounds;
  std::sort(bs.begin(), bs.end());
  bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
  if (bs.empty()) fail(ErrorKind::InvalidParam, "no bounds given");
  const int ell = p.ell();

  std::optional<CyclotomicHecke> cyc;
  rep.run("homology.oracle.hecke", [&]() -> std::optional<std::string> {
    cyc = cyclotomic_dim_hecke(p, default_hecke_cap(p));
    return std::nullopt;
  });
  if (!cyc) return rep;

  if (route == Route::Filtration) {
    if (p.variant != Variant::Degenerate) fail(ErrorKind::InvalidParam, "the filtration route needs the degenerate variant");
    if (bs.front() < ell) fail(ErrorKind::InvalidParam, "filtration bounds must be at least ell");
    std::map<int, FiniteComplex> cs;
    std::map<int, HomologyReport> hs;
    auto get = [&](int D) -> const FiniteComplex& {
      auto it = cs.find(D);
      if (it == cs.end()) {
        it = cs.emplace(D, build_filtration_complex(p, D)).first;
        hs[D] = homology_ranks(it->second);
      }
      return it->second;
    };
    for (int D : bs) {
      std::string id = "homology.filtration.D" + std::to_string(D);
      const auto& hi = get(D);
      const auto& lo = get(D - ell);
      complex_checks(rep, id, hi, hs[D]);
      for (int k = 1; k <= hi.top(); ++k) {
        rep.run(id + ".H" + std::to_string(k) + "-dies", [&]() -> std::optional<std::string> {
          std::string w;
          int r = induced_rank(lo, hi, inclusion_map(lo, hi, k), k, &w);
          hs[D].transitions.push_back({D - ell, D, k, r});
          if (r != 0) return "rank " + std::to_string(r) + " from filtration " + std::to_string(D - ell) + "; " + w;
          return std::nullopt;
        });
      }
    }
    rep.run("homology.filtration.H0-stable", [&]() -> std::optional<std::string> {
      std::vector<int> h0;
      for (int D : bs) h0.push_back(hs[D].h(0));
      size_t from = bs.size() >= 3 ? bs.size() - 3 : 0;
      for (size_t t = from; t < bs.size(); ++t)
        if (h0[t] != cyc->dim)
          return "H0 dims " + ints_str(h0) + " over D = " + ints_str(bs) + ", oracle " + std::to_string(cyc->dim);
      return std::nullopt;
    });
    if (reports)
      for (int D : bs) reports->emplace_back("filtration.D" + std::to_string(D), hs[D]);
    return rep;
  }

  int block = hecke_block_dim(*cyc, p.a);
  tower_route(rep, p, "hecke", bs, ell, block, reports);
  KLRAlgebra klr = KLRAlgebra::from_params(p);
  std::optional<int> kdim;
  rep.run("homology.oracle.klr", [&]() -> std::optional<std::string> {
    kdim = cyclotomic_dim_klr(klr, p.lambda(), default_cyclotomic_cap(klr, p.lambda())).dim;
    return std::nullopt;
  });
  if (!kdim) return rep;
  rep.run("homology.oracle.agreement", [&]() -> std::optional<std::string> {
    if (block != *kdim)
      return "Hecke block " + std::to_string(block) + " vs cyclotomic KLR " + std::to_string(*kdim);
    return std::nullopt;
  });
  tower_route(rep, p, "klr", bs, ell, *kdim, reports);
  return rep;
}

}  // namespace dgh
