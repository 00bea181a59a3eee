#include "dgh/completion.hpp"
#include "doctest.h"

using namespace dgh;

namespace {

SuperPoly X(int d, int r) { return SuperPoly::var(Ring::HeckeP, d, r); }
SuperPoly C(int d, const Scalar& c) { return SuperPoly::constant(Ring::HeckeP, d, c); }

ParamSet params(Variant v, int d, Scalar q, std::vector<Scalar> a, std::vector<Scalar> Q, std::vector<Scalar> I) {
  ParamSet p;
  p.variant = v;
  p.d = d;
  p.q = q;
  p.a = std::move(a);
  p.Q = std::move(Q);
  p.I = std::move(I);
  return p;
}

void require_pass(const Report& r) {
  CHECK(!r.checks().empty());
  for (auto& c : r.checks()) {
    INFO(c.check_id << ": " << c.witness);
    CHECK(c.status == "pass");
  }
}

}  // namespace

TEST_CASE("orbits") {
  CHECK(orbit({0, 1}) == std::vector<Label>{{0, 1}, {1, 0}});
  CHECK(orbit({0, 0}) == std::vector<Label>{{0, 0}});
  CHECK(orbit({1, 0, 0}) == std::vector<Label>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
}

TEST_CASE("shift and truncate examples") {
  Label b{3};
  CHECK(shift_to(X(1, 1), b, 2) == C(1, 3) + X(1, 1));
  CHECK(shift_to(X(1, 1), b, 1) == C(1, 3));
  auto sq = (X(1, 1) - C(1, 3)) * (X(1, 1) - C(1, 3));
  CHECK(shift_to(sq, b, 2).is_zero());
  CHECK(shift_to(sq, b, 3) == X(1, 1) * X(1, 1));
  // X^-1 at 2: 1/2 - x/4 + x^2/8
  auto inv = SuperPoly::monomial(Ring::HeckePl, 1, Mono{{-1}, 0});
  auto s = shift_to(inv, Label{2}, 3);
  CHECK(s == C(1, Scalar(1, 2)) - Scalar(1, 4) * X(1, 1) + Scalar(1, 8) * X(1, 1) * X(1, 1));
  CHECK_THROWS_AS(shift_to(inv, Label{0}, 3), Error);
}

TEST_CASE("truncation is a ring map") {
  std::mt19937 rng(11);
  Label b{1, -2};
  for (int i = 0; i < 20; ++i) {
    auto f = random_poly(Ring::HeckeP, 2, 3, 3, false, rng);
    auto g = random_poly(Ring::HeckeP, 2, 3, 3, false, rng);
    for (int N = 1; N <= 4; ++N) CHECK(shift_to(f * g, b, N) == mul_truncated(shift_to(f, b, N), shift_to(g, b, N), N));
  }
}

TEST_CASE("series inversion") {
  auto f = X(2, 1) - X(2, 2) + C(2, 1);
  CHECK(invert_series(f, 2) == C(2, 1) - X(2, 1) + X(2, 2));
  CHECK(invert_series(C(2, 5), 3) == C(2, Scalar(1, 5)));
  try {
    invert_series(X(1, 1), 3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInvertible);
  }
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    auto g = random_poly(Ring::HeckeP, 2, 2, 3, false, rng) + C(2, 1 + static_cast<int>(i % 3));
    g += SuperPoly::odd(Ring::HeckeP, 2, 1 + i % 2) * X(2, 1);
    if (g.coeff(Mono{}) == 0) continue;
    for (int N = 1; N <= 4; ++N) CHECK(mul_truncated(invert_series(g, N), g, N) == C(2, 1));
  }
}

TEST_CASE("completed action examples") {
  CompletedHecke m(Variant::Degenerate, 1, 0, Label{3});
  auto v = m.act({HLetter::P(X(1, 1))}, m.unit(Label{3}, 2));
  Trunc want = m.zero(2);
  want.add(Label{3}, C(1, 3) + X(1, 1));
  CHECK(same_below(v, want));
  CHECK(v.N == 2);

  CompletedHecke m2(Variant::Degenerate, 2, 0, Label{0, 1});
  auto all = m2.poly(X(2, 1) * X(2, 2) + C(2, 2), 3);
  auto p = m2.project(Label{1, 0}, all);
  CHECK(p.comps.size() == 1);
  CHECK(p.comps.at(Label{1, 0}) == shift_to(X(2, 1) * X(2, 2) + C(2, 2), Label{1, 0}, 3));
  CHECK_THROWS_AS(m2.unit(Label{1, 1}, 3), Error);
  // T_1 on 1_(0,1) moves to (1,0) and keeps a Demazure correction on (0,1)
  auto t = m2.T(1, m2.unit(Label{0, 1}, 3));
  CHECK(t.comps.count(Label{1, 0}) == 1);
  CHECK(t.comps.count(Label{0, 1}) == 1);
}

TEST_CASE("completed action agrees with the polynomial action") {
  for (auto v : {Variant::Degenerate, Variant::Q}) {
    Scalar q = v == Variant::Q ? 2 : 0;
    Label a = v == Variant::Q ? Label{1, 2} : Label{0, 1};
    for (Label aa : {a, Label{a[0], a[0]}}) {
      CompletedHecke m(v, 2, q, aa);
      HeckeAlgebra alg(v, 2, q);
      std::mt19937 rng(7);
      for (int i = 0; i < 10; ++i) {
        auto f = random_poly(alg.ring(), 2, 2, 3, false, rng);
        f += SuperPoly::odd(alg.ring(), 2, 1) * alg.x(2);
        HeckeWord w = random_hecke_word(alg, 3, 1, rng);
        auto lhs = m.act(w, m.poly(f, 6));
        auto rhs = m.poly(alg.act(w, f), 6);
        INFO(word_str(w) << " on " << f.str());
        CHECK(lhs.N >= 3);
        CHECK(same_below(lhs, rhs));
      }
    }
  }
}

TEST_CASE("symmetric group permutes components") {
  CompletedHecke m(Variant::Degenerate, 2, 0, Label{0, 1});
  std::mt19937 rng(9);
  for (int i = 0; i < 10; ++i) {
    auto f = random_poly(Ring::HeckeP, 2, 3, 3, false, rng) + SuperPoly::odd(Ring::HeckeP, 2, 1) * X(2, 2);
    CHECK(same_below(m.s(1, m.poly(f, 4)), m.poly(twisted_swap(1, f), 4)));
    auto sv = m.s(1, m.unit(Label{0, 1}, 4));
    CHECK(sv.comps.size() == 1);
    CHECK(sv.comps.count(Label{1, 0}) == 1);
  }
}

TEST_CASE("the differential is linear over central elements") {
  // z = (X_1 + X_2 - 1)^2 lies in the square of the maximal ideal at the orbit of (0,1)
  HeckeAlgebra alg(Variant::Degenerate, 2);
  auto e1 = alg.x(1) + alg.x(2) - alg.constant(1);
  auto z = alg.poly(e1 * e1);
  std::vector<Scalar> Q{0, 1};
  std::mt19937 rng(21);
  for (int i = 0; i < 20; ++i) {
    auto h = alg.straighten(random_hecke_word(alg, 3, 1, rng));
    auto zh = alg.multiply(z, h);
    auto dz = alg.differential_Q(zh, Q);
    CHECK(dz == alg.multiply(z, alg.differential_Q(h, Q)));
  }
}

TEST_CASE("completed basis certificates") {
  require_pass(completed_basis_check(params(Variant::Degenerate, 1, 0, {0}, {0}, {0}), 2));
  require_pass(completed_basis_check(params(Variant::Degenerate, 2, 0, {0, 1}, {0}, {0, 1}), 2));
  require_pass(completed_basis_check(params(Variant::Q, 2, 2, {1, 2}, {1}, {1, 2}), 2));
  auto r = completed_basis_check(params(Variant::Degenerate, 2, 0, {0, 1}, {0}, {0, 1}), 2);
  CHECK(r.checks().size() == 2);
}
