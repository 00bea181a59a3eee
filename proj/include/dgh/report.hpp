#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace dgh {

struct CheckRecord {
  std::string check_id;
  std::string status;  // pass | fail | error
  std::string witness;
  double ms = 0;
};

class Report {
 public:
  void add(CheckRecord r) { checks_.push_back(std::move(r)); }
  void pass(const std::string& id) { add({id, "pass", "", 0}); }
  void fail_with(const std::string& id, const std::string& witness) { add({id, "fail", witness, 0}); }
  // Runs fn; an empty optional means pass, a string is the failure witness.
  // Library errors become "error" records.
  void run(const std::string& id, const std::function<std::optional<std::string>()>& fn);
  void merge(const Report& o, const std::string& prefix = "");

  const std::vector<CheckRecord>& checks() const { return checks_; }
  std::vector<CheckRecord> sorted() const;
  bool all_pass() const;
  int count(const std::string& status) const;

  // results, when given, is part of the canonical (hashed) content
  nlohmann::json to_json(const nlohmann::json& params, const nlohmann::json& results = nullptr) const;

 private:
  std::vector<CheckRecord> checks_;
};

constexpr const char* kToolVersion = "0.3.0";

std::uint64_t fnv1a64(const std::string& s);

}  // namespace dgh
