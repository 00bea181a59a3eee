#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dgh/scalar.hpp"
#include "json.hpp"

namespace dgh {

enum class Variant { Degenerate, Q };

const char* variant_name(Variant v);
Variant parse_variant(const std::string& s);

// A sequence of vertex labels; also used for orbit points b and idempotents 1_i.
using Label = std::vector<Scalar>;
std::string label_str(const Label& l);

using Multiplicity = std::map<Scalar, int>;

struct Quiver {
  std::vector<Scalar> vertices;  // sorted, distinct
  std::set<std::pair<Scalar, Scalar>> edges;

  int h(const Scalar& i, const Scalar& j) const { return edges.count({i, j}) ? 1 : 0; }
  bool contains(const Scalar& i) const;
};

Quiver build_quiver_degenerate(const std::vector<Scalar>& I);
Quiver build_quiver_q(const std::vector<Scalar>& I, const Scalar& q);

struct Multiplicities {
  Multiplicity nu;
  Multiplicity lambda;
};

Multiplicities derive_multiplicities(const std::vector<Scalar>& a, const std::vector<Scalar>& Q,
                                     const std::vector<Scalar>& I);

struct ParamSet {
  Variant variant = Variant::Degenerate;
  int d = 1;
  Scalar q = 0;  // only meaningful for the q-variant
  std::vector<Scalar> Q;
  std::vector<Scalar> a;
  std::vector<Scalar> I;

  int ell() const { return static_cast<int>(Q.size()); }
  Multiplicity nu() const;
  Multiplicity lambda() const;
  Quiver quiver() const;
};

// Largest strand count the fixed-width monomial keys can hold.
constexpr int kMaxStrands = 8;

void validate(const ParamSet& p);

ParamSet params_from_json(const nlohmann::json& j);
nlohmann::json params_to_json(const ParamSet& p);

}  // namespace dgh
