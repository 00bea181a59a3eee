#include "dgh/params.hpp"

#include <algorithm>

namespace dgh {

const char* variant_name(Variant v) { return v == Variant::Degenerate ? "degenerate" : "q"; }

Variant parse_variant(const std::string& s) {
  if (s == "degenerate") return Variant::Degenerate;
  if (s == "q") return Variant::Q;
  fail(ErrorKind::InvalidParam, "unknown variant '" + s + "' (expected degenerate or q)");
}

std::string label_str(const Label& l) {
  std::string s = "(";
  for (size_t i = 0; i < l.size(); ++i) {
    if (i) s += ",";
    s += to_string(l[i]);
  }
  return s + ")";
}

bool Quiver::contains(const Scalar& i) const {
  return std::binary_search(vertices.begin(), vertices.end(), i);
}

namespace {

std::vector<Scalar> normalized(std::vector<Scalar> I) {
  if (I.empty()) fail(ErrorKind::InvalidParam, "vertex set I is empty");
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  return I;
}

}  // namespace

Quiver build_quiver_degenerate(const std::vector<Scalar>& I) {
  Quiver g;
  g.vertices = normalized(I);
  for (const auto& i : g.vertices)
    for (const auto& j : g.vertices)
      if (j + 1 == i) g.edges.insert({i, j});
  return g;
}

Quiver build_quiver_q(const std::vector<Scalar>& I, const Scalar& q) {
  if (q == 0 || q == 1) fail(ErrorKind::InvalidParam, "q must differ from 0 and 1");
  Quiver g;
  g.vertices = normalized(I);
  if (g.contains(Scalar(0))) fail(ErrorKind::InvalidParam, "0 may not be a vertex in the q-variant");
  for (const auto& i : g.vertices)
    for (const auto& j : g.vertices)
      if (q * j == i) g.edges.insert({i, j});
  return g;
}

Multiplicities derive_multiplicities(const std::vector<Scalar>& a, const std::vector<Scalar>& Q,
                                     const std::vector<Scalar>& I) {
  Multiplicities m;
  for (const auto& i : I) {
    m.nu[i] = 0;
    m.lambda[i] = 0;
  }
  for (const auto& x : a) {
    auto it = m.nu.find(x);
    if (it == m.nu.end()) fail(ErrorKind::InvalidParam, "entry " + to_string(x) + " of a is not in I");
    ++it->second;
  }
  for (const auto& x : Q) {
    auto it = m.lambda.find(x);
    if (it == m.lambda.end()) fail(ErrorKind::InvalidParam, "entry " + to_string(x) + " of Q is not in I");
    ++it->second;
  }
  return m;
}

Multiplicity ParamSet::nu() const { return derive_multiplicities(a, Q, I).nu; }
Multiplicity ParamSet::lambda() const { return derive_multiplicities(a, Q, I).lambda; }

Quiver ParamSet::quiver() const {
  return variant == Variant::Degenerate ? build_quiver_degenerate(I) : build_quiver_q(I, q);
}

void validate(const ParamSet& p) {
  if (p.d < 1) fail(ErrorKind::InvalidParam, "d must be at least 1");
  if (p.d > kMaxStrands)
    fail(ErrorKind::InvalidParam, "d = " + std::to_string(p.d) + " exceeds the supported maximum " +
                                      std::to_string(kMaxStrands));
  if (p.Q.empty()) fail(ErrorKind::InvalidParam, "Q must have at least one entry");
  if (static_cast<int>(p.a.size()) != p.d)
    fail(ErrorKind::InvalidParam, "a must have exactly d entries");
  if (p.I.empty()) fail(ErrorKind::InvalidParam, "vertex set I is empty");
  if (p.variant == Variant::Q) {
    if (p.q == 0 || p.q == 1) fail(ErrorKind::InvalidParam, "q must differ from 0 and 1");
    for (const auto& i : p.I)
      if (i == 0) fail(ErrorKind::InvalidParam, "0 may not lie in I for the q-variant");
  }
  auto m = derive_multiplicities(p.a, p.Q, p.I);
  int sn = 0, sl = 0;
  for (auto& [k, v] : m.nu) sn += v;
  for (auto& [k, v] : m.lambda) sl += v;
  if (sn != p.d || sl != p.ell()) fail(ErrorKind::InternalError, "multiplicities do not add up");
}

namespace {

Scalar scalar_from_json(const nlohmann::json& v) {
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(v.get<long>());
  fail(ErrorKind::InvalidParam, "scalar must be a string \"p/q\" or an integer");
}

std::vector<Scalar> list_from_json(const nlohmann::json& v) {
  if (!v.is_array()) fail(ErrorKind::InvalidParam, "expected an array of scalars");
  std::vector<Scalar> out;
  for (const auto& x : v) out.push_back(scalar_from_json(x));
  return out;
}

nlohmann::json list_to_json(const std::vector<Scalar>& xs) {
  auto out = nlohmann::json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

}  // namespace

ParamSet params_from_json(const nlohmann::json& j) {
  ParamSet p;
  try {
    p.variant = parse_variant(j.at("variant").get<std::string>());
    p.d = j.at("d").get<int>();
    if (j.contains("q")) p.q = scalar_from_json(j.at("q"));
    p.Q = list_from_json(j.at("Q"));
    p.a = list_from_json(j.at("a"));
    p.I = list_from_json(j.at("I"));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidParam, std::string("malformed parameter document: ") + e.what());
  }
  std::sort(p.I.begin(), p.I.end());
  p.I.erase(std::unique(p.I.begin(), p.I.end()), p.I.end());
  validate(p);
  return p;
}

nlohmann::json params_to_json(const ParamSet& p) {
  nlohmann::json j;
  j["variant"] = variant_name(p.variant);
  j["d"] = p.d;
  if (p.variant == Variant::Q) j["q"] = to_string(p.q);
  j["Q"] = list_to_json(p.Q);
  j["a"] = list_to_json(p.a);
  j["I"] = list_to_json(p.I);
  return j;
}

}  // namespace dgh
