#include <sstream>

#include "dgh/cli.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace dgh;

namespace {

struct Run {
  int code;
  nlohmann::json report;
  std::string err;
};

Run run(const std::string& line) {
  std::vector<std::string> args;
  std::istringstream in(line);
  for (std::string w; in >> w;) args.push_back(w);
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  nlohmann::json j;
  if (!out.str().empty() && out.str()[0] == '{') j = nlohmann::json::parse(out.str());
  return {code, j, err.str()};
}

int h0(const nlohmann::json& j, const std::string& name) {
  return j["results"]["homology"][name]["degrees"][0]["homology"].get<int>();
}

}  // namespace

TEST_CASE("verify-relations exit codes") {
  CHECK(run("verify-relations --variant degenerate --d 3 --max-deg 3").code == 0);
  CHECK(run("verify-relations --variant q --d 2 --q 1").code == 2);
  CHECK(run("verify-relations --variant q --d 2 --q 0").code == 2);
  auto r = run("verify-relations --variant q --d 2 --q 2 --max-deg 2");
  CHECK(r.code == 0);
  CHECK(r.report["tool_version"].is_string());
  CHECK(r.report["checks"].size() > 10);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("verify-bkr --variant q --a 1,2 --Q 1 --I 1,2 --trunc 3").code == 2);
  CHECK(run("verify-bkr --variant degenerate --a 0,1 --Q 0 --I 1 --trunc 3").code == 2);
  CHECK(run("verify-bkr --variant degenerate --a 0,1 --d 3 --Q 0").code == 2);
  CHECK(run("homology --variant degenerate --d 1 --Q 0 --route sideways").code == 2);
  CHECK(run("dims --variant purple --d 1").code == 2);
  CHECK(run("verify-relations --variant degenerate --d 1/2").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("verify-bkr examples") {
  auto r = run("verify-bkr --variant degenerate --a 0,1 --Q 0 --I 0,1 --trunc 3");
  CHECK(r.code == 0);
  CHECK(run("verify-bkr --variant q --q 2 --a 1,2 --Q 1 --I 1,2 --trunc 3").code == 0);
  // sorted by check id
  auto& cs = r.report["checks"];
  for (size_t i = 1; i < cs.size(); ++i) CHECK(cs[i - 1]["check_id"] < cs[i]["check_id"]);
  CHECK(cs[0].contains("ms"));
}

TEST_CASE("homology examples") {
  auto a = run("homology --variant degenerate --d 1 --Q 0,0 --route filtration --Dmax 8");
  CHECK(a.code == 0);
  CHECK(h0(a.report, "filtration.D8") == 2);
  CHECK(run("homology --variant q --q 2 --d 1 --Q 2 --a 2 --route tower --Nmax 4").code == 0);
  auto b = run("homology --variant degenerate --d 2 --Q 0 --route filtration --Dmax 8");
  CHECK(b.code == 0);
  CHECK(h0(b.report, "filtration.D8") == 2);
  // one level is not enough for the tower criterion
  CHECK(run("homology --variant q --q 2 --d 1 --Q 2 --a 2 --route tower --Nmax 2").code == 1);
  CHECK(run("homology --variant q --q 2 --d 1 --Q 2 --a 2 --route filtration").code == 2);
}

TEST_CASE("dims") {
  auto r = run("dims --variant degenerate --a 0,1 --Q 0,1");
  CHECK(r.code == 0);
  CHECK(r.report["results"]["hecke_dim"] == 8);
  CHECK(r.report["results"]["hecke_block_at_a"] == r.report["results"]["klr_dim"]);
}

TEST_CASE("reports are reproducible") {
  auto a = run("verify-bkr --variant q --q 2 --a 1,2 --Q 1 --I 1,2 --trunc 2 --seed 7");
  auto b = run("verify-bkr --variant q --q 2 --a 1,2 --Q 1 --I 1,2 --trunc 2 --seed 7");
  CHECK(a.report["canonical_hash"] == b.report["canonical_hash"]);
  auto c = run("homology --variant degenerate --d 1 --Q 0 --Dmax 4");
  auto d = run("homology --variant degenerate --d 1 --Q 0 --Dmax 4");
  CHECK(c.report["canonical_hash"] == d.report["canonical_hash"]);
  auto e = run("homology --variant degenerate --d 1 --Q 1 --Dmax 4");
  CHECK(c.report["canonical_hash"] != e.report["canonical_hash"]);
}
