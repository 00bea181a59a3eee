#include "dgh/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "dgh/bkr.hpp"
#include "dgh/completion.hpp"
#include "dgh/hecke.hpp"
#include "dgh/homology.hpp"
#include "dgh/klr.hpp"
#include "dgh/params.hpp"
#include "dgh/report.hpp"

namespace dgh {

namespace {

struct Common {
  std::string variant, q, Q, a, I, out;
  int d = 0;
  unsigned seed = 1;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--variant", c.variant, "degenerate or q")->required();
  sub->add_option("--d", c.d, "number of strands (defaults to the length of --a)");
  sub->add_option("--q", c.q, "deformation parameter, integer or p/q (q-variant only)");
  sub->add_option("--Q", c.Q, "cyclotomic parameters, comma separated");
  sub->add_option("--a", c.a, "orbit point, comma separated");
  sub->add_option("--I", c.I, "vertex set, comma separated (defaults to the values of a and Q)");
  sub->add_option("--out", c.out, "write the JSON report here instead of stdout");
  sub->add_option("--seed", c.seed, "seed for the random samples");
}

// Missing a defaults to a path Q_1, Q_1 + 1, ... (resp. Q_1, Q_1 q, ...), so the KLR side sees several labels.
ParamSet make_params(const Common& c) {
  ParamSet p;
  p.variant = parse_variant(c.variant);
  if (p.variant == Variant::Q) {
    if (c.q.empty()) fail(ErrorKind::InvalidParam, "the q-variant needs --q");
    p.q = parse_scalar(c.q);
  } else if (!c.q.empty()) {
    fail(ErrorKind::InvalidParam, "--q is only meaningful for the q-variant");
  }
  p.Q = c.Q.empty() ? std::vector<Scalar>{p.variant == Variant::Q ? Scalar(1) : Scalar(0)} : parse_scalar_list(c.Q);
  if (!c.a.empty()) {
    p.a = parse_scalar_list(c.a);
    p.d = static_cast<int>(p.a.size());
    if (c.d && c.d != p.d) fail(ErrorKind::InvalidParam, "--d disagrees with the length of --a");
  } else {
    if (c.d < 1) fail(ErrorKind::InvalidParam, "give --d or --a");
    if (c.d > kMaxStrands) fail(ErrorKind::InvalidParam, "d exceeds the supported maximum");
    p.d = c.d;
    Scalar v = p.Q.front();
    for (int r = 0; r < p.d; ++r) {
      p.a.push_back(v);
      v = p.variant == Variant::Q ? Scalar(v * p.q) : Scalar(v + 1);
    }
  }
  if (!c.I.empty()) {
    p.I = parse_scalar_list(c.I);
  } else {
    p.I = p.a;
    p.I.insert(p.I.end(), p.Q.begin(), p.Q.end());
    std::sort(p.I.begin(), p.I.end());
    p.I.erase(std::unique(p.I.begin(), p.I.end()), p.I.end());
  }
  validate(p);
  return p;
}

int exit_code(const Report& r) {
  if (r.count("error")) return kExitInternal;
  if (r.count("fail")) return kExitCheckFailed;
  return kExitPass;
}

int emit(const Report& r, const ParamSet& p, const nlohmann::json& results, const Common& c, std::ostream& out,
         std::ostream& err) {
  auto j = r.to_json(params_to_json(p), results);
  if (c.out.empty()) {
    out << j.dump(2) << "\n";
  } else {
    std::ofstream f(c.out);
    if (!f) {
      err << "cannot write " << c.out << "\n";
      return kExitUsage;
    }
    f << j.dump(2) << "\n";
  }
  err << r.checks().size() << " checks: " << r.count("pass") << " pass, " << r.count("fail") << " fail, "
      << r.count("error") << " error\n";
  return exit_code(r);
}

std::vector<int> bounds_up_to(int first, int step, int last) {
  std::vector<int> v;
  for (int x = first; x <= last; x += step) v.push_back(x);
  return v;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact checks for DG-enhanced affine Hecke and KLR algebras", "dgh"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Common c;
  int max_deg = -1, random_P = 5, trunc = 3, samples = 3, dmax = -1, nmax = 4, cap = -1;
  std::string route;

  auto* rel = app.add_subcommand("verify-relations", "defining relations of the Hecke and KLR algebras");
  add_common(rel, c);
  rel->add_option("--max-deg", max_deg, "probe degree (default 3)");

  auto* dif = app.add_subcommand("verify-differential", "d^2 = 0 and compatibility with the relations");
  add_common(dif, c);
  dif->add_option("--max-deg", max_deg, "polynomial degree of the basis keys (default 2)");
  dif->add_option("--random-P", random_P, "random polynomials for the theta relation check");

  auto* bkr = app.add_subcommand("verify-bkr", "the completed isomorphism at a truncation order");
  add_common(bkr, c);
  bkr->add_option("--trunc", trunc, "truncation order N");
  bkr->add_option("--samples", samples, "random elements per intertwining check");

  auto* hom = app.add_subcommand("homology", "homology of the DG-algebras against the cyclotomic quotients");
  add_common(hom, c);
  hom->add_option("--route", route, "filtration or tower")->check(CLI::IsMember({"filtration", "tower"}));
  hom->add_option("--Dmax", dmax, "largest filtration bound (default 8 ell)");
  hom->add_option("--Nmax", nmax, "largest truncation order of the tower");

  auto* dims = app.add_subcommand("dims", "cyclotomic quotient dimensions on both sides");
  add_common(dims, c);
  dims->add_option("--cap", cap, "degree cap of the Hecke row reduction");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    ParamSet p = make_params(c);
    Report r;
    nlohmann::json results;
    if (rel->parsed()) {
      int m = max_deg < 0 ? 3 : max_deg;
      HeckeAlgebra alg = HeckeAlgebra::from_params(p);
      r.merge(verify_hecke_relations(alg, m), "hecke.");
      r.merge(verify_klr_relations(KLRAlgebra::from_params(p), m), "klr.");
    } else if (dif->parsed()) {
      int m = max_deg < 0 ? 2 : max_deg;
      HeckeAlgebra alg = HeckeAlgebra::from_params(p);
      r.merge(verify_hecke_differential(alg, p.Q, m, random_P, c.seed), "hecke.");
      r.merge(verify_klr_differential(KLRAlgebra::from_params(p), p.lambda(), m, 20, c.seed), "klr.");
    } else if (bkr->parsed()) {
      if (trunc < 1) fail(ErrorKind::InvalidParam, "--trunc must be at least 1");
      r = verify_bkr(p, trunc, samples, c.seed);
    } else if (hom->parsed()) {
      Route rt = route.empty() ? (p.variant == Variant::Degenerate ? Route::Filtration : Route::Tower)
                               : (route == "filtration" ? Route::Filtration : Route::Tower);
      std::vector<int> bounds;
      if (rt == Route::Filtration) {
        int ell = p.ell();
        bounds = bounds_up_to(2 * ell, 2 * ell, dmax < 0 ? 8 * ell : dmax);
      } else {
        bounds = bounds_up_to(2, 1, nmax);
      }
      if (bounds.empty()) fail(ErrorKind::InvalidParam, "the bound leaves no levels to compute");
      std::vector<std::pair<std::string, HomologyReport>> reps;
      r = verify_quasi_iso(p, rt, bounds, &reps);
      results["route"] = rt == Route::Filtration ? "filtration" : "tower";
      results["bounds"] = bounds;
      for (auto& [name, h] : reps) results["homology"][name] = h.to_json();
    } else if (dims->parsed()) {
      int hc = cap < 0 ? default_hecke_cap(p) : cap;
      std::optional<CyclotomicHecke> hk;
      std::optional<int> kd;
      KLRAlgebra klr = KLRAlgebra::from_params(p);
      r.run("dims.hecke", [&]() -> std::optional<std::string> {
        hk = cyclotomic_dim_hecke(p, hc);
        return std::nullopt;
      });
      r.run("dims.klr", [&]() -> std::optional<std::string> {
        kd = cyclotomic_dim_klr(klr, p.lambda(), default_cyclotomic_cap(klr, p.lambda())).dim;
        return std::nullopt;
      });
      if (hk && kd) {
        int block = hecke_block_dim(*hk, p.a);
        r.run("dims.agreement", [&]() -> std::optional<std::string> {
          if (block != *kd) return "Hecke block " + std::to_string(block) + " vs KLR " + std::to_string(*kd);
          return std::nullopt;
        });
        results["hecke_dim"] = hk->dim;
        results["hecke_block_at_a"] = block;
        for (auto& [b, n] : hk->blocks) results["hecke_blocks"][label_str(b)] = n;
        results["klr_dim"] = *kd;
      }
    }
    return emit(r, p, results, c, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidParam ? kExitUsage : kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace dgh
