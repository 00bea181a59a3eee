#include <cstdio>
#include <set>

#include "dgh/klr.hpp"

namespace dgh {

namespace {

KLRElement word(const Label& src, std::vector<KLRLetter> ls) { return KLRElement(KLRWord{src, std::move(ls)}); }

std::string pattern(const Label& l, int from, int count) {
  return label_str(Label(l.begin() + from, l.begin() + from + count));
}

Scalar binom(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Scalar(r);
}

// (Q_ij(y3,y2) - Q_ij(y1,y2)) / (y3 - y1) in Y_r, Y_{r+1}, Y_{r+2}, with Q as in KLRAlgebra::Qpoly
SuperPoly braid_defect(const KLRAlgebra& alg, const Scalar& i, const Scalar& j, int r, const Label& l) {
  const int hij = alg.quiver().h(i, j), hji = alg.quiver().h(j, i), H = hij + hji;
  SuperPoly out(Ring::KLR, alg.d(), l);
  auto y1 = alg.y(r, l), y2 = alg.y(r + 1, l), y3 = alg.y(r + 2, l);
  for (int a = 1; a <= H; ++a) {
    // Q(u,v) = (-1)^{h_ij} sum_a C(H,a) u^a (-v)^{H-a}
    Scalar c = binom(H, a) * (((hij + H - a) % 2) ? -1 : 1);
    SuperPoly h(Ring::KLR, alg.d(), l);
    for (int s = 0; s < a; ++s) {
      SuperPoly t = alg.one(l);
      for (int k = 0; k < s; ++k) t = t * y3;
      for (int k = 0; k < a - 1 - s; ++k) t = t * y1;
      h += t;
    }
    for (int k = 0; k < H - a; ++k) h = h * y2;
    out += c * h;
  }
  return out;
}

}  // namespace

std::vector<KLRRelation> klr_relations(const KLRAlgebra& alg, const Label& src) {
  alg.check_source(src);
  const int d = alg.d();
  const auto F = KLRLetter::fdot();
  auto t = [](int r) { return KLRLetter::tau(r); };
  auto y = [](int r) { return KLRLetter::dot(r); };
  std::vector<KLRRelation> out;
  out.push_back({"ExtR2", pattern(src, 0, 1), src, word(src, {F, F})});
  if (d >= 2) out.push_back({"extrarel", pattern(src, 0, 2), src, word(src, {F, t(1), F, t(1)}) + word(src, {t(1), F, t(1), F})});
  for (int r = 1; r < d; ++r) {
    const Scalar &i = src[r - 1], &j = src[r];
    const std::string at = ".r" + std::to_string(r);
    const std::string pat = pattern(src, r - 1, 2);
    if (i == j) {
      out.push_back({"R2" + at, pat, src, word(src, {t(r), t(r)})});
      out.push_back({"nh1-a" + at, pat, src, word(src, {y(r), t(r)}) - word(src, {t(r), y(r + 1)}) - word(src, {})});
      out.push_back({"nh1-b" + at, pat, src, word(src, {t(r), y(r)}) - word(src, {y(r + 1), t(r)}) - word(src, {})});
    } else {
      auto Q = alg.Qpoly(i, j, alg.y(r, src), alg.y(r + 1, src));
      out.push_back({"R2" + at, pat, src, word(src, {t(r), t(r)}) - alg.poly_element(Q)});
      out.push_back({"dot-slide-a" + at, pat, src, word(src, {t(r), y(r + 1)}) - word(src, {y(r), t(r)})});
      out.push_back({"dot-slide-b" + at, pat, src, word(src, {t(r), y(r)}) - word(src, {y(r + 1), t(r)})});
    }
  }
  for (int r = 1; r + 1 < d; ++r) {
    const Scalar &i = src[r - 1], &j = src[r], &k = src[r + 1];
    const std::string at = ".r" + std::to_string(r);
    KLRElement diff = word(src, {t(r), t(r + 1), t(r)}) - word(src, {t(r + 1), t(r), t(r + 1)});
    if (i == k && i != j) {
      out.push_back({"R3_2" + at, pattern(src, r - 1, 3), src, diff - alg.poly_element(braid_defect(alg, i, j, r, src))});
    } else {
      out.push_back({"R3_1" + at, pattern(src, r - 1, 3), src, diff});
    }
  }
  return out;
}

KLRRelation perturbed_klr_relation(const KLRAlgebra& alg, const Label& src) {
  alg.check_source(src);
  if (alg.d() < 2) fail(ErrorKind::InvalidParam, "the perturbed relation needs two strands");
  const auto F = KLRLetter::fdot(), t1 = KLRLetter::tau(1);
  return {"extrarel-perturbed", pattern(src, 0, 2), src, word(src, {F, t1, F, t1}) - word(src, {t1, F, t1, F})};
}

std::optional<std::string> check_klr_relation(const KLRAlgebra& alg, const KLRRelation& rel,
                                              const std::vector<SuperPoly>& probes) {
  for (auto& p : probes) {
    if (p.label() != rel.source) continue;
    auto v = alg.act(rel.lhs, p);
    if (!v.empty()) return "on probe " + p.str() + " the relation acts as " + v.begin()->second.str();
  }
  return std::nullopt;
}

Report verify_klr_relations(const KLRAlgebra& alg, int max_deg) {
  Report rep;
  const std::string pre = "klr.d" + std::to_string(alg.d()) + ".";
  std::set<std::string> seen;
  for (auto& src : alg.sequences()) {
    std::vector<SuperPoly> probes;
    for (auto& rel : klr_relations(alg, src)) {
      if (!seen.insert(rel.id + rel.pattern).second) continue;
      if (probes.empty()) probes = alg.probes(src, max_deg, true);
      rep.run(pre + rel.id + "." + rel.pattern, [&] { return check_klr_relation(alg, rel, probes); });
    }
  }
  if (alg.d() >= 2) {
    rep.run(pre + "selftest.perturbed-detected", [&]() -> std::optional<std::string> {
      for (auto& src : alg.sequences())
        if (check_klr_relation(alg, perturbed_klr_relation(alg, src), alg.probes(src, 1, true))) return std::nullopt;
      return "perturbed relation was not detected";
    });
  }
  return rep;
}

namespace {

KLRWord random_word(const KLRAlgebra& alg, int max_letters, std::mt19937& rng) {
  const int d = alg.d();
  KLRWord w{alg.sequences()[rng() % alg.sequences().size()], {}};
  int n = 1 + static_cast<int>(rng() % max_letters);
  for (int i = 0; i < n; ++i) {
    int k = static_cast<int>(rng() % 3);
    if (k == 0 && d >= 2)
      w.letters.push_back(KLRLetter::tau(1 + static_cast<int>(rng() % (d - 1))));
    else if (k == 1)
      w.letters.push_back(KLRLetter::fdot());
    else
      w.letters.push_back(KLRLetter::dot(1 + static_cast<int>(rng() % d)));
  }
  return w;
}

std::string num(int i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%03d", i);
  return buf;
}

}  // namespace

Report verify_klr_differential(const KLRAlgebra& alg, const Multiplicity& Lambda, int max_n, int n_random,
                               unsigned seed) {
  Report rep;
  const std::string pre = "klr.d" + std::to_string(alg.d()) + ".dlambda.";
  rep.run(pre + "squared-zero.basis-keys", [&]() -> std::optional<std::string> {
    for (auto& src : alg.sequences())
      for (auto& k : basis_keys(alg, src, max_n, true)) {
        if (k.odd == 0) continue;
        auto once = alg.d_lambda(KLRExpansion{{k, 1}}, Lambda);
        for (auto& [kk, c] : once)
          if (kk.lambda_degree() != k.lambda_degree() - 1)
            return "d_Lambda of " + k.str() + " has a term of the wrong lambda-degree: " + kk.str();
        auto twice = alg.d_lambda(once, Lambda);
        if (!twice.empty()) return "d_Lambda^2 of " + k.str() + " = " + expansion_str(twice);
      }
    return std::nullopt;
  });
  std::mt19937 rng(seed);
  for (int i = 0; i < n_random; ++i) {
    KLRWord w = random_word(alg, 6, rng);
    rep.run(pre + "squared-zero.random" + num(i), [&]() -> std::optional<std::string> {
      auto twice = alg.d_lambda(alg.d_lambda(KLRElement(w), Lambda), Lambda);
      if (!twice.empty()) return "d_Lambda^2 of " + w.str() + " = " + expansion_str(twice);
      return std::nullopt;
    });
  }
  std::set<std::string> seen;
  for (auto& src : alg.sequences())
    for (auto& rel : klr_relations(alg, src)) {
      if (!seen.insert(rel.id + rel.pattern).second) continue;
      rep.run(pre + "respects." + rel.id + "." + rel.pattern, [&]() -> std::optional<std::string> {
        auto v = alg.d_lambda(rel.lhs, Lambda);
        if (!v.empty()) return "d_Lambda of a relation is " + expansion_str(v);
        return std::nullopt;
      });
    }
  return rep;
}

Report verify_klr_basis(const KLRAlgebra& alg, int n_keys, int max_n, unsigned seed) {
  Report rep;
  const std::string pre = "klr.d" + std::to_string(alg.d()) + ".basis.";
  for (auto& src : alg.sequences())
    rep.run(pre + "full-rank." + label_str(src), [&]() -> std::optional<std::string> {
      auto [rank, cols] = alg.table_rank(src, max_n, true);
      if (rank != cols) return "rank " + std::to_string(rank) + " of " + std::to_string(cols) + " columns";
      return std::nullopt;
    });
  std::mt19937 rng(seed);
  const int d = alg.d();
  const int G = SymGroup::get(d).size();
  for (int i = 0; i < n_keys; ++i) {
    KLRBasisKey k;
    k.source = alg.sequences()[rng() % alg.sequences().size()];
    k.w = static_cast<int>(rng() % G);
    k.odd = static_cast<std::uint16_t>(rng() % (1u << d));
    int budget = static_cast<int>(rng() % (max_n + 1));
    for (int t = 0; t < budget; ++t) ++k.n[rng() % d];
    rep.run(pre + "round-trip" + num(i), [&]() -> std::optional<std::string> {
      auto e = alg.to_basis(KLRElement(alg.basis_word(k)));
      if (e.size() == 1 && e.begin()->first == k && e.begin()->second == 1) return std::nullopt;
      return k.str() + " expands as " + expansion_str(e);
    });
  }
  return rep;
}

}  // namespace dgh
