#include "dgh/klr.hpp"
#include "doctest.h"

using namespace dgh;

namespace {

Quiver chain() { return build_quiver_degenerate({0, 1, 2}); }

KLRAlgebra alg(Multiplicity nu) { return KLRAlgebra(chain(), std::move(nu)); }

KLRElement word(const Label& src, std::vector<KLRLetter> ls) { return KLRElement(KLRWord{src, std::move(ls)}); }

KLRBasisKey key(const Label& src, int w, std::uint16_t odd, std::initializer_list<int> n) {
  KLRBasisKey k;
  k.source = src;
  k.w = w;
  k.odd = odd;
  int r = 0;
  for (int x : n) k.n[r++] = static_cast<std::int16_t>(x);
  return k;
}

const auto F = KLRLetter::fdot();
KLRLetter t(int r) { return KLRLetter::tau(r); }
KLRLetter y(int r) { return KLRLetter::dot(r); }

void require_pass(const Report& r) {
  for (auto& c : r.checks()) {
    INFO(c.check_id << ": " << c.witness);
    CHECK(c.status == "pass");
  }
}

}  // namespace

TEST_CASE("action examples") {
  auto a = alg({{0, 2}});
  Label ii{0, 0};
  CHECK(a.act(KLRWord{ii, {t(1)}}, a.one(ii)).is_zero());
  CHECK(a.act(KLRWord{ii, {t(1)}}, a.y(1, ii)) == a.one(ii));

  auto b = alg({{0, 1}, {1, 1}});
  Label ij{0, 1}, ji{1, 0};
  // the degenerate builder has the arrow 1 -> 0
  CHECK(b.act(KLRWord{ji, {t(1)}}, b.one(ji)) == b.y(1, ij) - b.y(2, ij));
  CHECK(b.act(KLRWord{ij, {t(1)}}, b.one(ij)) == b.one(ji));
  CHECK(b.target(KLRWord{ij, {t(1)}}) == ji);
  CHECK(b.act(KLRWord{ij, {F}}, b.y(2, ij)) == b.omega(1, ij) * b.y(2, ij));

  // no arrows either way
  auto c = KLRAlgebra(build_quiver_degenerate({0, 2}), {{0, 1}, {2, 1}});
  CHECK(c.act(KLRWord{Label{0, 2}, {t(1)}}, c.one(Label{0, 2})) == c.one(Label{2, 0}));

  CHECK_THROWS_AS(b.act(KLRWord{ij, {t(2)}}, b.one(ij)), Error);
  CHECK_THROWS_AS(b.act(KLRWord{ij, {t(1)}}, b.one(ji)), Error);
}

TEST_CASE("basis words") {
  auto a = alg({{0, 2}});
  Label ii{0, 0};
  CHECK(a.basis_word(key(ii, 0, 1, {})).letters == std::vector<KLRLetter>{F});
  CHECK(a.basis_word(key(ii, 0, 2, {})).letters == std::vector<KLRLetter>{t(1), F, t(1)});
  CHECK(a.basis_word(key(ii, 1, 0, {1, 0})).letters == std::vector<KLRLetter>{t(1), y(1)});
  CHECK_THROWS_AS(a.basis_word(key(ii, 2, 0, {})), Error);
  CHECK_THROWS_AS(a.basis_word(key(ii, 0, 4, {})), Error);
  try {
    a.basis_word(key(ii, 0, 4, {}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidBasisKey);
  }
}

TEST_CASE("to_basis examples") {
  auto a = alg({{0, 2}});
  Label ii{0, 0};
  CHECK(a.to_basis(word(ii, {t(1), t(1)})).empty());
  CHECK(a.to_basis(word(ii, {F, F})).empty());
  // the dot-crossing relation, read off the action: tau Y_2 - Y_1 tau = -1 on 1_ii
  auto nh = a.to_basis(word(ii, {t(1), y(2)}) - word(ii, {y(1), t(1)}));
  CHECK(nh == KLRExpansion{{key(ii, 0, 0, {}), -1}});

  auto b = alg({{0, 1}, {1, 1}});
  Label ij{0, 1};
  // tau tau 1_01 acts as Y_1 - Y_2: only the crossing back from 10 carries a factor
  auto e = b.to_basis(word(ij, {t(1), t(1)}));
  CHECK(e == KLRExpansion{{key(ij, 0, 0, {1, 0}), 1}, {key(ij, 0, 0, {0, 1}), -1}});
  CHECK(e == b.to_basis(b.poly_element(b.Qpoly(0, 1, b.y(1, ij), b.y(2, ij)))));

  auto dotted = b.to_basis(word(ij, {y(2), y(1), F, y(1)}));
  CHECK(dotted == KLRExpansion{{key(ij, 0, 1, {2, 1}), 1}});
}

TEST_CASE("to_basis output has the floating-dot count as lambda-degree") {
  auto a = alg({{0, 2}, {1, 1}});
  std::mt19937 rng(3);
  for (int i = 0; i < 20; ++i) {
    KLRWord w{a.sequences()[rng() % a.sequences().size()], {}};
    int floats = 0;
    for (int k = 0; k < 4; ++k) {
      int c = static_cast<int>(rng() % 3);
      if (c == 0) {
        w.letters.push_back(F);
        ++floats;
      } else if (c == 1) {
        w.letters.push_back(t(1 + static_cast<int>(rng() % 2)));
      } else {
        w.letters.push_back(y(1 + static_cast<int>(rng() % 3)));
      }
    }
    for (auto& [k, c] : a.to_basis(KLRElement(w))) CHECK(k.lambda_degree() == floats);
  }
}

TEST_CASE("d_Lambda examples") {
  auto a = alg({{0, 2}});
  Label ii{0, 0};
  Multiplicity L2{{0, 2}}, L1{{0, 1}};
  CHECK(a.d_lambda(word(ii, {F}), L2) == KLRExpansion{{key(ii, 0, 0, {2, 0}), 1}});
  CHECK(a.d_lambda(word(ii, {F}), L1) == KLRExpansion{{key(ii, 0, 0, {1, 0}), -1}});
  CHECK(a.d_lambda(word(ii, {F}), {}) == KLRExpansion{{key(ii, 0, 0, {}), 1}});
  CHECK(a.d_lambda(word(ii, {t(1)}), L2).empty());
  CHECK(a.d_lambda(word(ii, {y(1), y(2)}), L2).empty());
  // Leibniz: the floating dot sits under the crossing
  auto b = alg({{0, 1}, {1, 1}});
  Label ij{0, 1}, ji{1, 0};
  Multiplicity L{{0, 1}, {1, 1}};
  auto lhs = b.d_lambda(word(ij, {t(1), F}), L);
  CHECK(lhs == b.to_basis(Scalar(-1) * word(ij, {t(1), y(1)})));
  CHECK(b.d_lambda(word(ji, {F, t(1)}), L) == b.to_basis(Scalar(-1) * word(ji, {y(1), t(1)})));
}

TEST_CASE("relation suites") {
  require_pass(verify_klr_relations(alg({{0, 2}}), 3));
  require_pass(verify_klr_relations(alg({{0, 1}, {1, 1}}), 3));
  require_pass(verify_klr_relations(alg({{0, 2}, {1, 1}}), 2));
  require_pass(verify_klr_relations(alg({{0, 1}, {1, 1}, {2, 1}}), 2));
}

TEST_CASE("perturbed relation is detected") {
  auto a = alg({{0, 2}});
  auto r = perturbed_klr_relation(a, Label{0, 0});
  auto w = check_klr_relation(a, r, a.probes(Label{0, 0}, 1, true));
  REQUIRE(w.has_value());
  CHECK(w->find("probe") != std::string::npos);
}

TEST_CASE("basis round trip and independence") {
  require_pass(verify_klr_basis(alg({{0, 2}}), 30, 2, 7));
  require_pass(verify_klr_basis(alg({{0, 1}, {1, 1}}), 30, 2, 8));
  require_pass(verify_klr_basis(alg({{0, 2}, {1, 1}}), 30, 2, 9));
}

TEST_CASE("differential squares to zero, small cases") {
  require_pass(verify_klr_differential(alg({{0, 2}}), {{0, 2}}, 2, 5, 1));
  require_pass(verify_klr_differential(alg({{0, 1}, {1, 1}}), {{0, 1}, {1, 1}}, 2, 5, 2));
  require_pass(verify_klr_differential(alg({{0, 1}, {1, 1}, {2, 1}}), {{0, 1}}, 1, 5, 3));
}

TEST_CASE("cyclotomic dimensions") {
  for (int l = 0; l <= 3; ++l) {
    auto a = alg({{1, 1}});
    Multiplicity L{{1, l}};
    CHECK(cyclotomic_dim_klr(a, L, default_cyclotomic_cap(a, L)).dim == l);
  }
  auto b = alg({{0, 1}, {1, 1}});
  CHECK(cyclotomic_dim_klr(b, {}, default_cyclotomic_cap(b, {})).dim == 0);
  // level one: a single standard tableau of shape (2)
  Multiplicity L0{{0, 1}};
  auto cd = cyclotomic_dim_klr(b, L0, default_cyclotomic_cap(b, L0));
  CHECK(cd.dim == 1);
  CHECK(cd.survivors.size() == 1);
  // nil-Hecke NH_2 with Y_1^2: matrices of size 2
  auto c = alg({{0, 2}});
  Multiplicity L2{{0, 2}};
  CHECK(cyclotomic_dim_klr(c, L2, default_cyclotomic_cap(c, L2)).dim == 4);
  // three strands 0,1,2 at level one: the row (3)
  auto d = alg({{0, 1}, {1, 1}, {2, 1}});
  CHECK(cyclotomic_dim_klr(d, L0, default_cyclotomic_cap(d, L0)).dim == 1);
  CHECK_THROWS_AS(cyclotomic_dim_klr(c, L2, 0), Error);
}
