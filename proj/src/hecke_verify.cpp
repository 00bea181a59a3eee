#include <sstream>

#include "dgh/hecke.hpp"

namespace dgh {

namespace {

using W = HeckeWord;

HLetter X(const HeckeAlgebra& alg, int r, int power = 1) {
  Mono m;
  m.e[r - 1] = static_cast<std::int16_t>(power);
  return HLetter::P(SuperPoly::monomial(alg.ring(), alg.d(), m));
}

HeckeRelation rel(std::string id, std::vector<std::pair<Scalar, HeckeWord>> terms) {
  return HeckeRelation{std::move(id), std::move(terms)};
}

std::string idx(int a) { return std::to_string(a); }
std::string idx(int a, int b) { return std::to_string(a) + "," + std::to_string(b); }

}  // namespace

std::vector<HeckeRelation> hecke_defining_relations(const HeckeAlgebra& alg) {
  const int d = alg.d();
  const bool deg = alg.variant() == Variant::Degenerate;
  const Scalar q = alg.q();
  auto T = HLetter::t;
  auto th = HLetter::theta();
  std::vector<HeckeRelation> out;
  for (int i = 1; i < d; ++i) {
    if (deg)
      out.push_back(rel("T^2=1[" + idx(i) + "]", {{1, W{T(i), T(i)}}, {-1, W{}}}));
    else
      out.push_back(rel("(T-q)(T+1)=0[" + idx(i) + "]", {{1, W{T(i), T(i)}}, {-(q - 1), W{T(i)}}, {-q, W{}}}));
    for (int j = i + 2; j < d; ++j)
      out.push_back(rel("TT=TT[" + idx(i, j) + "]", {{1, W{T(i), T(j)}}, {-1, W{T(j), T(i)}}}));
    if (i + 1 < d)
      out.push_back(rel("braid[" + idx(i) + "]", {{1, W{T(i), T(i + 1), T(i)}}, {-1, W{T(i + 1), T(i), T(i + 1)}}}));
  }
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      out.push_back(rel("XX=XX[" + idx(i, j) + "]", {{1, W{X(alg, i), X(alg, j)}}, {-1, W{X(alg, j), X(alg, i)}}}));
      if (!deg) {
        out.push_back(rel("X^-1X^-1=X^-1X^-1[" + idx(i, j) + "]",
                          {{1, W{X(alg, i, -1), X(alg, j, -1)}}, {-1, W{X(alg, j, -1), X(alg, i, -1)}}}));
        out.push_back(rel("XX^-1=X^-1X[" + idx(i, j) + "]",
                          {{1, W{X(alg, i), X(alg, j, -1)}}, {-1, W{X(alg, j, -1), X(alg, i)}}}));
      }
    }
  if (!deg)
    for (int r = 1; r <= d; ++r) {
      out.push_back(rel("XX^-1=1[" + idx(r) + "]", {{1, W{X(alg, r), X(alg, r, -1)}}, {-1, W{}}}));
      out.push_back(rel("X^-1X=1[" + idx(r) + "]", {{1, W{X(alg, r, -1), X(alg, r)}}, {-1, W{}}}));
    }
  for (int i = 1; i < d; ++i) {
    if (deg)
      out.push_back(rel("TX-XT=-1[" + idx(i) + "]", {{1, W{T(i), X(alg, i)}}, {-1, W{X(alg, i + 1), T(i)}}, {1, W{}}}));
    else
      out.push_back(rel("TXT=qX[" + idx(i) + "]", {{1, W{T(i), X(alg, i), T(i)}}, {-q, W{X(alg, i + 1)}}}));
    for (int j = 1; j <= d; ++j) {
      if (j == i || j == i + 1) continue;
      out.push_back(rel("TX=XT[" + idx(i, j) + "]", {{1, W{T(i), X(alg, j)}}, {-1, W{X(alg, j), T(i)}}}));
      if (!deg)
        out.push_back(
            rel("TX^-1=X^-1T[" + idx(i, j) + "]", {{1, W{T(i), X(alg, j, -1)}}, {-1, W{X(alg, j, -1), T(i)}}}));
    }
  }
  out.push_back(rel("theta^2=0", {{1, W{th, th}}}));
  for (int r = 1; r <= d; ++r) {
    out.push_back(rel("Xtheta=thetaX[" + idx(r) + "]", {{1, W{X(alg, r), th}}, {-1, W{th, X(alg, r)}}}));
    if (!deg)
      out.push_back(
          rel("X^-1theta=thetaX^-1[" + idx(r) + "]", {{1, W{X(alg, r, -1), th}}, {-1, W{th, X(alg, r, -1)}}}));
  }
  for (int r = 2; r < d; ++r)
    out.push_back(rel("Ttheta=thetaT[" + idx(r) + "]", {{1, W{T(r), th}}, {-1, W{th, T(r)}}}));
  if (d >= 2) {
    std::vector<std::pair<Scalar, HeckeWord>> t{{1, W{T(1), th, T(1), th}}, {1, W{th, T(1), th, T(1)}}};
    if (!deg) t.push_back({-(q - 1), W{th, T(1), th}});
    out.push_back(rel("theta-relation", t));
  }
  return out;
}

HeckeRelation perturbed_theta_relation(const HeckeAlgebra& alg) {
  if (alg.d() < 2) fail(ErrorKind::InvalidParam, "the theta relation needs d >= 2");
  auto T = HLetter::t;
  auto th = HLetter::theta();
  // the sign of the second term flipped
  return rel("perturbed-theta-relation", {{1, W{T(1), th, T(1), th}}, {-1, W{th, T(1), th, T(1)}}});
}

std::vector<HeckeRelation> hecke_xi_relations(const HeckeAlgebra& alg) {
  const int d = alg.d();
  const bool deg = alg.variant() == Variant::Degenerate;
  const Scalar q = alg.q();
  auto T = HLetter::t;
  auto xi = HLetter::xi;
  std::vector<HeckeRelation> out;
  for (int l = 1; l <= d; ++l) {
    out.push_back(rel("xi^2=0[" + idx(l) + "]", {{1, W{xi(l), xi(l)}}}));
    for (int r = l + 1; r <= d; ++r)
      out.push_back(rel("xixi=-xixi[" + idx(l, r) + "]", {{1, W{xi(l), xi(r)}}, {1, W{xi(r), xi(l)}}}));
  }
  for (int r = 1; r < d; ++r) {
    HLetter back = deg ? T(r) : HLetter::inv_t(r);
    out.push_back(rel("xi-recursion[" + idx(r) + "]", {{1, W{xi(r + 1)}}, {-1, W{T(r), xi(r), back}}}));
    for (int l = 1; l <= d; ++l) {
      if (deg) {
        int sl = l == r ? r + 1 : (l == r + 1 ? r : l);
        out.push_back(rel("Txi=xiT[" + idx(r, l) + "]", {{1, W{T(r), xi(l)}}, {-1, W{xi(sl), T(r)}}}));
      } else if (l == r + 1) {
        out.push_back(rel("Txi=xiT[" + idx(r, l) + "]",
                          {{1, W{T(r), xi(l)}}, {-1, W{xi(r), T(r)}}, {-(q - 1), W{xi(r + 1)}}, {q - 1, W{xi(r)}}}));
      } else {
        int sl = l == r ? r + 1 : l;
        out.push_back(rel("Txi=xiT[" + idx(r, l) + "]", {{1, W{T(r), xi(l)}}, {-1, W{xi(sl), T(r)}}}));
      }
    }
  }
  return out;
}

std::vector<SuperPoly> hecke_probes(const HeckeAlgebra& alg, int deg) {
  std::vector<SuperPoly> out;
  int lo = alg.variant() == Variant::Q ? -1 : 0;
  auto exps = exponent_vectors(alg.d(), deg, lo);
  for (std::uint16_t s = 0; s < (1u << alg.d()); ++s)
    for (auto& e : exps) {
      Mono m;
      m.e = e;
      m.s = s;
      out.push_back(SuperPoly::monomial(alg.ring(), alg.d(), m));
    }
  return out;
}

std::optional<std::string> check_relation_action(const HeckeAlgebra& alg, const HeckeRelation& rel,
                                                 const std::vector<SuperPoly>& probes) {
  for (auto& p : probes) {
    SuperPoly acc(alg.ring(), alg.d());
    for (auto& [c, w] : rel.terms) acc += c * alg.act(w, p);
    if (!acc.is_zero()) return "on probe " + p.str() + " the relation acts as " + acc.str();
  }
  return std::nullopt;
}

std::optional<std::string> check_relation_straightened(const HeckeAlgebra& alg, const HeckeRelation& rel) {
  HeckeElement acc = alg.zero();
  for (auto& [c, w] : rel.terms) acc += c * alg.straighten(w);
  if (!acc.is_zero()) return "straightened value " + acc.str();
  return std::nullopt;
}

Report verify_hecke_relations(const HeckeAlgebra& alg, int max_deg) {
  Report rep;
  std::string pre = std::string("hecke.") + variant_name(alg.variant()) + ".d" + std::to_string(alg.d()) + ".";
  auto probes = hecke_probes(alg, max_deg);
  auto rels = hecke_defining_relations(alg);
  auto xis = hecke_xi_relations(alg);
  rels.insert(rels.end(), xis.begin(), xis.end());
  for (auto& r : rels) {
    rep.run(pre + "act." + r.id, [&] { return check_relation_action(alg, r, probes); });
    rep.run(pre + "straighten." + r.id, [&] { return check_relation_straightened(alg, r); });
  }
  if (alg.d() >= 2) {
    // the harness must notice a wrong relation
    rep.run(pre + "selftest.perturbed-detected", [&]() -> std::optional<std::string> {
      auto r = perturbed_theta_relation(alg);
      if (check_relation_action(alg, r, probes) && check_relation_straightened(alg, r)) return std::nullopt;
      return "perturbed relation was not detected";
    });
  }
  return rep;
}

HeckeWord random_hecke_word(const HeckeAlgebra& alg, int max_letters, int max_exp, std::mt19937& rng) {
  const int d = alg.d();
  const bool q = alg.variant() == Variant::Q;
  std::uniform_int_distribution<int> len(1, max_letters);
  std::uniform_int_distribution<int> kind(0, q ? 4 : 3);
  HeckeWord w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    int k = kind(rng);
    if (d == 1 && (k == 1 || k == 4)) k = 0;
    switch (k) {
      case 0: w.push_back(HLetter::P(random_poly(alg.ring(), d, max_exp, 1 + rng() % 2, q, rng))); break;
      case 1: w.push_back(HLetter::t(1 + rng() % (d - 1))); break;
      case 2: w.push_back(HLetter::theta()); break;
      case 3: w.push_back(HLetter::xi(1 + rng() % d)); break;
      default: w.push_back(HLetter::inv_t(1 + rng() % (d - 1))); break;
    }
  }
  return w;
}

Report verify_straightening(const HeckeAlgebra& alg, int n_words, int max_letters, int max_exp, int probe_deg,
                            unsigned seed) {
  Report rep;
  std::string pre = std::string("straighten.") + variant_name(alg.variant()) + ".d" + std::to_string(alg.d()) + ".";
  std::mt19937 rng(seed);
  auto probes = hecke_probes(alg, probe_deg);
  for (int i = 0; i < n_words; ++i) {
    HeckeWord w = random_hecke_word(alg, max_letters, max_exp, rng);
    char id[16];
    std::snprintf(id, sizeof id, "%03d", i);
    rep.run(pre + "word" + id, [&]() -> std::optional<std::string> {
      HeckeElement h = alg.straighten(w);
      for (auto& p : probes) {
        SuperPoly a = alg.act(w, p), b = alg.act(h, p);
        if (a != b) return "word " + word_str(w) + " on " + p.str() + ": " + a.str() + " vs normal form " + b.str();
      }
      return std::nullopt;
    });
  }
  return rep;
}

Report verify_hecke_differential(const HeckeAlgebra& alg, const std::vector<Scalar>& Q, int max_a, int random_P,
                                 unsigned seed) {
  Report rep;
  std::string pre = std::string("differential.") + variant_name(alg.variant()) + ".d" + std::to_string(alg.d()) +
                    ".l" + std::to_string(Q.size()) + ".";
  const SymGroup& g = alg.group();
  SuperPoly P = alg.cyclotomic_poly(Q);
  rep.run(pre + "d^2=0", [&]() -> std::optional<std::string> {
    for (auto& a : exponent_vectors(alg.d(), max_a))
      for (int w = 0; w < g.size(); ++w)
        for (std::uint16_t b = 0; b < (1u << alg.d()); ++b) {
          HKey k;
          k.a = a;
          k.w = w;
          k.b = b;
          HeckeElement h = alg.key(k);
          HeckeElement dd = alg.differential_P(alg.differential_P(h, P), P);
          if (!dd.is_zero()) return "d^2(" + h.str() + ") = " + dd.str();
        }
    return std::nullopt;
  });
  rep.run(pre + "relations-respected", [&]() -> std::optional<std::string> {
    for (auto& r : hecke_defining_relations(alg)) {
      HeckeElement acc = alg.zero();
      for (auto& [c, w] : r.terms) acc += c * alg.differential_word(w, P);
      if (!acc.is_zero()) return "d applied to " + r.id + " gives " + acc.str();
    }
    return std::nullopt;
  });
  if (alg.d() >= 2) {
    std::mt19937 rng(seed);
    for (int i = 0; i < random_P; ++i) {
      SuperPoly Pi = random_poly(alg.ring(), alg.d(), 3, 3, false, rng);
      rep.run(pre + "theta-relation-random-P" + std::to_string(i), [&]() -> std::optional<std::string> {
        for (auto& r : hecke_defining_relations(alg)) {
          if (r.id != "theta-relation") continue;
          HeckeElement acc = alg.zero();
          for (auto& [c, w] : r.terms) acc += c * alg.differential_word(w, Pi);
          if (!acc.is_zero()) return "P = " + Pi.str() + ": " + acc.str();
        }
        return std::nullopt;
      });
    }
  }
  return rep;
}

}  // namespace dgh
