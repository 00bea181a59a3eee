#include <algorithm>

#include "dgh/params.hpp"
#include "doctest.h"

using namespace dgh;

namespace {

std::vector<Scalar> S(std::initializer_list<long> xs) {
  std::vector<Scalar> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("scalar parsing and printing") {
  CHECK(parse_scalar("3") == 3);
  CHECK(parse_scalar(" -4/6 ") == Scalar(-2, 3));
  CHECK(to_string(parse_scalar("10/4")) == "5/2");
  CHECK(to_string(Scalar(-7)) == "-7");
  CHECK_THROWS_AS(parse_scalar("1/0"), Error);
  CHECK_THROWS_AS(parse_scalar("x"), Error);
  CHECK_THROWS_AS(parse_scalar("1/-2"), Error);
  CHECK(parse_scalar_list("0,1,2") == S({0, 1, 2}));
  CHECK(parse_scalar_list("").empty());
}

TEST_CASE("exact division reports zero denominators") {
  CHECK(divide(1, 3) * 3 == 1);
  try {
    divide(1, 0);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
  CHECK(power(Scalar(2), -3) == Scalar(1, 8));
  CHECK(power(Scalar(-3), 3) == -27);
}

TEST_CASE("degenerate quiver") {
  auto g = build_quiver_degenerate(S({0, 1, 2}));
  CHECK(g.edges.size() == 2);
  CHECK(g.h(1, 0) == 1);
  CHECK(g.h(2, 1) == 1);
  CHECK(g.h(0, 1) == 0);
  CHECK(build_quiver_degenerate(S({0})).edges.empty());
  CHECK(build_quiver_degenerate(S({0, 5})).edges.empty());
}

TEST_CASE("q quiver") {
  auto g = build_quiver_q(S({1, 2, 4}), 2);
  CHECK(g.edges.size() == 2);
  CHECK(g.h(2, 1) == 1);
  CHECK(g.h(4, 2) == 1);
  CHECK(build_quiver_q(S({1}), 2).edges.empty());
  auto g3 = build_quiver_q(S({1, 3}), 3);
  CHECK(g3.edges.size() == 1);
  CHECK(g3.h(3, 1) == 1);
  CHECK_THROWS_AS(build_quiver_q(S({1}), 1), Error);
  CHECK_THROWS_AS(build_quiver_q(S({1}), 0), Error);
  CHECK_THROWS_AS(build_quiver_q(S({0, 1}), 2), Error);
}

TEST_CASE("quivers are loop free and simply laced") {
  for (auto I : {S({0, 1, 2, 3}), S({-1, 0, 7}), S({1, 2, 4, 8})}) {
    auto g = build_quiver_degenerate(I);
    for (auto& i : g.vertices) CHECK(g.h(i, i) == 0);
    bool nonzero = std::none_of(I.begin(), I.end(), [](const Scalar& x) { return x == 0; });
    if (nonzero) {
      auto h = build_quiver_q(I, 2);
      for (auto& i : h.vertices) CHECK(h.h(i, i) == 0);
    }
  }
}

TEST_CASE("multiplicities") {
  auto m = derive_multiplicities(S({0, 0, 1}), S({0}), S({0, 1}));
  CHECK(m.nu[0] == 2);
  CHECK(m.nu[1] == 1);
  CHECK(m.lambda[0] == 1);
  CHECK(m.lambda[1] == 0);
  auto m2 = derive_multiplicities(S({5}), S({5}), S({5}));
  CHECK(m2.nu[5] == 1);
  CHECK(m2.lambda[5] == 1);
  auto m3 = derive_multiplicities(S({1, 2, 1, 2}), S({2, 2}), S({1, 2}));
  CHECK(m3.nu[1] == 2);
  CHECK(m3.nu[2] == 2);
  CHECK(m3.lambda[1] == 0);
  CHECK(m3.lambda[2] == 2);
  CHECK_THROWS_AS(derive_multiplicities(S({3}), S({0}), S({0, 1})), Error);
}

TEST_CASE("multiplicities ignore the order of a and Q") {
  auto a = S({2, 0, 1, 0});
  auto Q = S({1, 0, 1});
  auto base = derive_multiplicities(a, Q, S({0, 1, 2}));
  std::sort(a.begin(), a.end());
  do {
    auto m = derive_multiplicities(a, Q, S({0, 1, 2}));
    CHECK(m.nu == base.nu);
    CHECK(m.lambda == base.lambda);
  } while (std::next_permutation(a.begin(), a.end()));
  std::reverse(Q.begin(), Q.end());
  CHECK(derive_multiplicities(a, Q, S({0, 1, 2})).lambda == base.lambda);
}

TEST_CASE("validate") {
  ParamSet p;
  p.d = 2;
  p.Q = S({0});
  p.a = S({0, 1});
  p.I = S({0, 1});
  CHECK_NOTHROW(validate(p));
  ParamSet bad = p;
  bad.a = S({0, 3});
  CHECK_THROWS_AS(validate(bad), Error);
  ParamSet qp;
  qp.variant = Variant::Q;
  qp.d = 1;
  qp.q = 1;
  qp.Q = S({1});
  qp.a = S({1});
  qp.I = S({1});
  try {
    validate(qp);
    FAIL("q = 1 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidParam);
  }
  qp.q = 2;
  CHECK_NOTHROW(validate(qp));
  qp.I = S({0, 1});
  CHECK_THROWS_AS(validate(qp), Error);
}

TEST_CASE("parameter JSON round trip") {
  auto j = nlohmann::json::parse(R"({"variant":"q","d":2,"q":"2","Q":["1"],"a":["1","2"],"I":["2","1"]})");
  ParamSet p = params_from_json(j);
  CHECK(p.variant == Variant::Q);
  CHECK(p.q == 2);
  CHECK(p.I == S({1, 2}));
  CHECK(p.nu()[2] == 1);
  auto back = params_to_json(p);
  CHECK(back["a"][1] == "2");
  CHECK(params_from_json(back).a == p.a);
  auto half = nlohmann::json::parse(R"({"variant":"degenerate","d":1,"Q":["1/2"],"a":["1/2"],"I":["1/2"]})");
  CHECK(params_to_json(params_from_json(half))["Q"][0] == "1/2");
  CHECK_THROWS_AS(params_from_json(nlohmann::json::parse(R"({"variant":"x"})")), Error);
}
