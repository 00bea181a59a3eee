#include <functional>

#include "dgh/superpoly.hpp"
#include "doctest.h"

using namespace dgh;

namespace {

SuperPoly X(int d, int r) { return SuperPoly::var(Ring::HeckeP, d, r); }
SuperPoly TH(int d, int r) { return SuperPoly::odd(Ring::HeckeP, d, r); }
SuperPoly C(int d, long c) { return SuperPoly::constant(Ring::HeckeP, d, c); }

std::vector<SuperPoly> all_monomials(Ring ring, int d, int deg, Label label = {}) {
  std::vector<SuperPoly> out;
  for (std::uint16_t s = 0; s < (1u << d); ++s)
    for (auto& e : exponent_vectors(d, deg)) {
      Mono m;
      m.e = e;
      m.s = s;
      out.push_back(SuperPoly::monomial(ring, d, m, 1, label));
    }
  return out;
}

// brute force: every word of length l(w) whose product is w
std::vector<std::vector<int>> all_reduced_words(const Permutation& w) {
  int d = w.d(), len = w.length();
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == len) {
      if (Permutation::from_word(d, cur) == w) out.push_back(cur);
      return;
    }
    for (int r = 1; r < d; ++r) {
      cur.push_back(r);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

}  // namespace

TEST_CASE("permutation conventions") {
  Permutation w = Permutation::from_word(3, {2, 1});
  CHECK(w.img == std::vector<int>{3, 1, 2});
  CHECK(w.reduced_word() == std::vector<int>{2, 1});
  CHECK(left_adjusted_word(w) == std::vector<int>{2, 1});
  Permutation w0 = Permutation::from_word(3, {1, 2, 1});
  CHECK(w0.img == std::vector<int>{3, 2, 1});
  CHECK(left_adjusted_word(w0) == std::vector<int>{1, 2, 1});
  CHECK(left_adjusted_word(Permutation::simple(3, 1)) == std::vector<int>{1});
  CHECK(permute_label(Permutation::simple(2, 1), Label{0, 1}) == Label{1, 0});
}

TEST_CASE("canonical and left-adjusted words agree with exhaustive search") {
  for (int d = 1; d <= 4; ++d) {
    const SymGroup& g = SymGroup::get(d);
    for (int k = 0; k < g.size(); ++k) {
      const Permutation& w = g.perm(k);
      auto words = all_reduced_words(w);
      REQUIRE(!words.empty());
      CHECK(static_cast<int>(words.front().size()) == w.length());
      auto lex = *std::min_element(words.begin(), words.end());
      CHECK(w.reduced_word() == lex);
      auto key = [](const std::vector<int>& v) {
        int s = 0;
        for (int x : v) s += x;
        return std::make_pair(s, v);
      };
      auto best = words.front();
      for (auto& v : words)
        if (key(v) < key(best)) best = v;
      CHECK(g.left_adjusted(k) == best);
      for (int r = 1; r < d; ++r) CHECK(g.perm(g.lmul(r, k)) == Permutation::simple(d, r) * w);
    }
  }
}

TEST_CASE("supercommutative products") {
  const int d = 3;
  CHECK(TH(d, 1) * TH(d, 2) == SuperPoly::monomial(Ring::HeckeP, d, Mono{{}, 3}));
  CHECK(TH(d, 2) * TH(d, 1) == -(TH(d, 1) * TH(d, 2)));
  CHECK((TH(d, 1) * TH(d, 1)).is_zero());
  CHECK((X(d, 1) + X(d, 2)) * (X(d, 1) - X(d, 2)) == X(d, 1) * X(d, 1) - X(d, 2) * X(d, 2));
  CHECK(TH(d, 3) * TH(d, 1) * TH(d, 2) == TH(d, 1) * TH(d, 2) * TH(d, 3));
  CHECK_THROWS_AS(X(d, 1) * SuperPoly::var(Ring::HeckePl, d, 1), Error);
  CHECK(((C(d, 2) * X(d, 1)) * TH(d, 2)).str() == "2·X1·θ2");
}

TEST_CASE("Hecke symmetric group action") {
  const int d = 2;
  auto s1 = Permutation::simple(d, 1);
  CHECK(sym_act_hecke(s1, TH(d, 1)) == TH(d, 1) + (X(d, 1) - X(d, 2)) * TH(d, 2));
  CHECK(sym_act_hecke(s1, TH(d, 2)) == TH(d, 2));
  CHECK(sym_act_hecke(s1, X(d, 1) * X(d, 2)) == X(d, 1) * X(d, 2));
}

TEST_CASE("Demazure examples") {
  const int d = 2;
  CHECK(demazure_hecke(1, X(d, 1)) == C(d, 1));
  CHECK(demazure_hecke(1, C(d, 1)).is_zero());
  CHECK(demazure_hecke(1, TH(d, 1)) == -TH(d, 2));
  Label l{7, 7};
  auto Y = [&](int r) { return SuperPoly::var(Ring::KLR, d, r, l); };
  auto one = SuperPoly::constant(Ring::KLR, d, 1, l);
  CHECK(demazure_klr(1, one).is_zero());
  CHECK(demazure_klr(1, Y(1)) == one);
  CHECK(demazure_klr(1, Y(2)) == -one);
  CHECK_THROWS_AS(demazure_klr(1, SuperPoly::constant(Ring::KLR, d, 1, Label{1, 2})), Error);
}

TEST_CASE("Demazure of a Laurent monomial is exact") {
  const int d = 2;
  Mono m;
  m.e[0] = -2;
  m.e[1] = 1;
  auto f = SuperPoly::monomial(Ring::HeckePl, d, m);
  auto g = demazure_hecke(1, f);
  auto x1 = SuperPoly::var(Ring::HeckePl, d, 1), x2 = SuperPoly::var(Ring::HeckePl, d, 2);
  CHECK((x1 - x2) * g == f - sym_act_hecke(Permutation::simple(d, 1), f));
}

TEST_CASE("KLR symmetric group action") {
  Label ii{3, 3}, ij{3, 4};
  auto Om = [](int r, Label l) { return SuperPoly::odd(Ring::KLR, 2, r, l); };
  auto Y = [](int r, Label l) { return SuperPoly::var(Ring::KLR, 2, r, l); };
  CHECK(sym_act_klr(1, Om(1, ii)) == Om(1, ii) + (Y(1, ii) - Y(2, ii)) * Om(2, ii));
  CHECK(sym_act_klr(1, Om(1, ij)) == Om(2, Label{4, 3}));
  CHECK(sym_act_klr(1, Y(1, ij)) == Y(2, Label{4, 3}));
  CHECK(sym_act_klr(1, Om(1, ij) * Om(2, ij)) == -(Om(1, Label{4, 3}) * Om(2, Label{4, 3})));
}

TEST_CASE("Demazure operator identities on all monomials of degree <= 4") {
  for (int d = 2; d <= 4; ++d) {
    auto mons = all_monomials(Ring::HeckeP, d, 4);
    for (auto& f : mons) {
      for (int r = 1; r < d; ++r) {
        auto dr = [&](const SuperPoly& g) { return demazure_hecke(r, g); };
        auto sr = [&](const SuperPoly& g) { return twisted_swap(r, g); };
        CHECK(dr(dr(f)).is_zero());
        CHECK(sr(dr(f)) == dr(f));
        CHECK(dr(sr(f)) == -dr(f));
        CHECK(sr(sr(f)) == f);
        CHECK(X(d, r) * dr(f) - dr(X(d, r + 1) * f) == f);
        CHECK(dr(X(d, r) * f) - X(d, r + 1) * dr(f) == f);
        for (int k = 1; k <= d; ++k)
          if (k != r) CHECK(dr(TH(d, k) * f) == TH(d, k) * dr(f));
        auto eta = TH(d, r) - X(d, r + 1) * TH(d, r + 1);
        CHECK(dr(eta * f) == eta * dr(f));
        if (r + 1 < d) {
          auto ds = [&](const SuperPoly& g) { return demazure_hecke(r + 1, g); };
          auto ss = [&](const SuperPoly& g) { return twisted_swap(r + 1, g); };
          CHECK(dr(ds(dr(f))) == ds(dr(ds(f))));
          CHECK(sr(ss(sr(f))) == ss(sr(ss(f))));
        }
        for (int s = r + 2; s < d; ++s) {
          CHECK(dr(demazure_hecke(s, f)) == demazure_hecke(s, dr(f)));
          CHECK(sr(twisted_swap(s, f)) == twisted_swap(s, sr(f)));
        }
      }
    }
  }
}

TEST_CASE("Leibniz rule on random pairs") {
  std::mt19937 rng(11);
  for (int d = 2; d <= 4; ++d)
    for (int t = 0; t < 40; ++t) {
      auto f = random_poly(Ring::HeckeP, d, 4, 3, false, rng);
      auto g = random_poly(Ring::HeckeP, d, 4, 3, false, rng);
      f += TH(d, 1 + rng() % d) * random_poly(Ring::HeckeP, d, 2, 2, false, rng);
      g += TH(d, 1 + rng() % d) * random_poly(Ring::HeckeP, d, 2, 2, false, rng);
      for (int r = 1; r < d; ++r)
        CHECK(demazure_hecke(r, f * g) == demazure_hecke(r, f) * g + twisted_swap(r, f) * demazure_hecke(r, g));
    }
}

TEST_CASE("KLR action satisfies the symmetric group relations") {
  std::mt19937 rng(5);
  for (Label l : {Label{0, 0, 0}, Label{0, 1, 0}, Label{0, 1, 2}, Label{1, 1, 2}}) {
    for (int t = 0; t < 10; ++t) {
      auto f = random_poly(Ring::KLR, 3, 3, 3, false, rng, l);
      f += SuperPoly::odd(Ring::KLR, 3, 1 + rng() % 3, l) * random_poly(Ring::KLR, 3, 2, 2, false, rng, l);
      f += SuperPoly::odd(Ring::KLR, 3, 1, l) * SuperPoly::odd(Ring::KLR, 3, 2 + rng() % 2, l);
      CHECK(sym_act_klr(1, sym_act_klr(1, f)) == f);
      CHECK(sym_act_klr(2, sym_act_klr(2, f)) == f);
      CHECK(sym_act_klr(1, sym_act_klr(2, sym_act_klr(1, f))) == sym_act_klr(2, sym_act_klr(1, sym_act_klr(2, f))));
    }
  }
}

TEST_CASE("Hecke group action is well defined on random elements") {
  std::mt19937 rng(9);
  const int d = 4;
  for (int t = 0; t < 20; ++t) {
    auto f = random_poly(Ring::HeckeP, d, 3, 3, false, rng) * (TH(d, 1 + rng() % d) + TH(d, 1 + rng() % d));
    for (int k = 0; k < SymGroup::get(d).size(); k += 5) {
      const Permutation& w = SymGroup::get(d).perm(k);
      // any reduced word gives the same result
      SuperPoly g = f;
      auto word = left_adjusted_word(w);
      for (auto it = word.rbegin(); it != word.rend(); ++it) g = twisted_swap(*it, g);
      CHECK(g == sym_act_hecke(w, f));
    }
  }
}
