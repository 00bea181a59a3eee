#include "dgh/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "dgh/scalar.hpp"

namespace dgh {

void Report::run(const std::string& id, const std::function<std::optional<std::string>()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  CheckRecord r{id, "pass", "", 0};
  try {
    auto w = fn();
    if (w) {
      r.status = "fail";
      r.witness = *w;
    }
  } catch (const Error& e) {
    r.status = "error";
    r.witness = e.what();
  }
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  checks_.push_back(std::move(r));
}

void Report::merge(const Report& o, const std::string& prefix) {
  for (auto r : o.checks_) {
    r.check_id = prefix + r.check_id;
    checks_.push_back(std::move(r));
  }
}

std::vector<CheckRecord> Report::sorted() const {
  auto v = checks_;
  std::stable_sort(v.begin(), v.end(), [](const CheckRecord& a, const CheckRecord& b) { return a.check_id < b.check_id; });
  return v;
}

bool Report::all_pass() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckRecord& r) { return r.status == "pass"; });
}

int Report::count(const std::string& status) const {
  return static_cast<int>(std::count_if(checks_.begin(), checks_.end(), [&](const CheckRecord& r) { return r.status == status; }));
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

nlohmann::json Report::to_json(const nlohmann::json& params, const nlohmann::json& results) const {
  nlohmann::json canon;
  canon["tool_version"] = kToolVersion;
  canon["params"] = params;
  canon["checks"] = nlohmann::json::array();
  auto recs = sorted();
  for (auto& r : recs) canon["checks"].push_back({{"check_id", r.check_id}, {"status", r.status}, {"witness", r.witness}});
  if (!results.is_null()) canon["results"] = results;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(canon.dump())));
  nlohmann::json out = canon;
  for (size_t i = 0; i < recs.size(); ++i) out["checks"][i]["ms"] = recs[i].ms;
  out["canonical_hash"] = buf;
  return out;
}

}  // namespace dgh
