#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dgh/params.hpp"
#include "dgh/perm.hpp"
#include "dgh/report.hpp"
#include "dgh/superpoly.hpp"

namespace dgh {

// Basis monomial X^a T_w xi^b; w is an index into SymGroup::get(d).
struct HKey {
  Exps a{};
  int w = 0;
  std::uint16_t b = 0;

  bool operator<(const HKey& o) const {
    if (w != o.w) return w < o.w;
    if (b != o.b) return b < o.b;
    return a < o.a;
  }
  bool operator==(const HKey& o) const { return w == o.w && b == o.b && a == o.a; }
  int x_degree() const;
};

class HeckeElement {
 public:
  using Terms = std::map<HKey, Scalar>;

  HeckeElement() = default;
  HeckeElement(Variant v, int d) : variant_(v), d_(d) {}

  Variant variant() const { return variant_; }
  int d() const { return d_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const HKey& k) const;

  void add_term(const HKey& k, const Scalar& c);
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement& operator*=(const Scalar& c);

  bool operator==(const HeckeElement& o) const;
  bool operator!=(const HeckeElement& o) const { return !(*this == o); }
  std::string str() const;

 private:
  void check(const HeckeElement& o) const;
  Variant variant_ = Variant::Degenerate;
  int d_ = 1;
  Terms terms_;
};

HeckeElement operator+(HeckeElement a, const HeckeElement& b);
HeckeElement operator-(HeckeElement a, const HeckeElement& b);
HeckeElement operator*(const Scalar& c, HeckeElement a);

struct HLetter {
  enum Kind { Poly, T, Theta, Xi, InvT } kind;
  int r = 0;
  SuperPoly poly;

  static HLetter P(SuperPoly p) { return {Poly, 0, std::move(p)}; }
  static HLetter t(int r) { return {T, r, {}}; }
  static HLetter theta() { return {Theta, 0, {}}; }
  static HLetter xi(int r) { return {Xi, r, {}}; }
  static HLetter inv_t(int r) { return {InvT, r, {}}; }
  std::string str() const;
};

using HeckeWord = std::vector<HLetter>;
std::string word_str(const HeckeWord& w);

// The algebra for fixed (variant, d, q), holding straightening caches.
class HeckeAlgebra {
 public:
  HeckeAlgebra(Variant v, int d, const Scalar& q = 0);
  static HeckeAlgebra from_params(const ParamSet& p) { return HeckeAlgebra(p.variant, p.d, p.q); }

  Variant variant() const { return variant_; }
  int d() const { return d_; }
  const Scalar& q() const { return q_; }
  Ring ring() const { return variant_ == Variant::Degenerate ? Ring::HeckeP : Ring::HeckePl; }
  const SymGroup& group() const { return *group_; }

  HeckeElement zero() const { return HeckeElement(variant_, d_); }
  HeckeElement one() const { return key(HKey{}); }
  HeckeElement key(const HKey& k, const Scalar& c = 1) const;
  HeckeElement poly(const SuperPoly& p) const;
  HeckeElement t(int r) const;
  HeckeElement xi(int r) const;
  HeckeElement theta() const { return xi(1); }
  SuperPoly x(int r) const { return SuperPoly::var(ring(), d_, r); }
  SuperPoly constant(const Scalar& c) const { return SuperPoly::constant(ring(), d_, c); }

  // operator action on P_d / Pl_d
  SuperPoly act_T(int r, const SuperPoly& f) const;
  SuperPoly act_invT(int r, const SuperPoly& f) const;
  SuperPoly act_xi(int r, const SuperPoly& f) const;
  SuperPoly act_letter(const HLetter& l, const SuperPoly& f) const;
  SuperPoly act(const HeckeWord& w, const SuperPoly& f) const;
  SuperPoly act(const HeckeElement& h, const SuperPoly& f) const;

  // left multiplication of a normal form by one generator
  HeckeElement lmul_poly(const SuperPoly& p, const HeckeElement& h) const;
  HeckeElement lmul_T(int r, const HeckeElement& h) const;
  HeckeElement lmul_invT(int r, const HeckeElement& h) const;
  HeckeElement lmul_theta(const HeckeElement& h) const;
  HeckeElement lmul_xi(int r, const HeckeElement& h) const;
  HeckeElement lmul_letter(const HLetter& l, const HeckeElement& h) const;

  HeckeElement straighten(const HeckeWord& w) const;
  HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) const;
  HeckeWord key_word(const HKey& k) const;
  // xi_r written through T's and theta
  HeckeWord xi_word(int r) const;

  // d_P on the enhanced algebra; differential_Q uses P = prod (X_1 - Q_r).
  HeckeElement differential_P(const HeckeElement& h, const SuperPoly& P) const;
  HeckeElement differential_Q(const HeckeElement& h, const std::vector<Scalar>& Q) const;
  SuperPoly cyclotomic_poly(const std::vector<Scalar>& Q) const;
  // d_P applied letter-wise to a word, straightened
  HeckeElement differential_word(const HeckeWord& w, const SuperPoly& P) const;

  void check_element(const HeckeElement& h) const;

 private:
  const HeckeElement& xi_times_T(int l, int w) const;  // xi_l T_w in normal form (a = 0)
  HeckeElement T_times_key(int r, const HKey& k, const Scalar& c) const;

  Variant variant_;
  int d_;
  Scalar q_;
  const SymGroup* group_;
  mutable std::map<std::pair<int, int>, HeckeElement> xi_T_;
};

// A relation is a signed sum of words that should vanish.
struct HeckeRelation {
  std::string id;
  std::vector<std::pair<Scalar, HeckeWord>> terms;
};

std::vector<HeckeRelation> hecke_defining_relations(const HeckeAlgebra& alg);
// relations among the xi elements, including xi_{r+1} = T_r xi_r T_r^{+-1}
std::vector<HeckeRelation> hecke_xi_relations(const HeckeAlgebra& alg);
HeckeRelation perturbed_theta_relation(const HeckeAlgebra& alg);

// nullopt if the relation holds on every probe; otherwise the witness
std::optional<std::string> check_relation_action(const HeckeAlgebra& alg, const HeckeRelation& rel,
                                                 const std::vector<SuperPoly>& probes);
std::optional<std::string> check_relation_straightened(const HeckeAlgebra& alg, const HeckeRelation& rel);

// Defining relations as operator identities on probes X^e theta^S, |e| <= max_deg,
// and as straightened identities, plus a harness sensitivity check.
Report verify_hecke_relations(const HeckeAlgebra& alg, int max_deg);
// act(word) == act(straighten(word)) for random words
Report verify_straightening(const HeckeAlgebra& alg, int n_words, int max_letters, int max_exp, int probe_deg,
                            unsigned seed);
// d^2 = 0 on basis keys with |a| <= max_a, relation compatibility, random-P theta relation check
Report verify_hecke_differential(const HeckeAlgebra& alg, const std::vector<Scalar>& Q, int max_a, int random_P,
                                 unsigned seed);

// probe monomials X^e theta^S with |e| <= deg; in the Laurent ring also exponents down to -1
std::vector<SuperPoly> hecke_probes(const HeckeAlgebra& alg, int deg);
HeckeWord random_hecke_word(const HeckeAlgebra& alg, int max_letters, int max_exp, std::mt19937& rng);

}  // namespace dgh
