#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "dgh/params.hpp"
#include "dgh/perm.hpp"
#include "dgh/report.hpp"
#include "dgh/superpoly.hpp"

namespace dgh {

struct KLRLetter {
  enum Kind { Tau, Dot, Float } kind;
  int r = 0;  // unused for Float

  static KLRLetter tau(int r) { return {Tau, r}; }
  static KLRLetter dot(int r) { return {Dot, r}; }
  static KLRLetter fdot() { return {Float, 0}; }
  bool operator<(const KLRLetter& o) const { return kind != o.kind ? kind < o.kind : r < o.r; }
  bool operator==(const KLRLetter& o) const { return kind == o.kind && r == o.r; }
  std::string str() const;
};

// Letters in written order: the rightmost letter acts first on 1_source.
struct KLRWord {
  Label source;
  std::vector<KLRLetter> letters;

  int float_count() const;
  bool operator<(const KLRWord& o) const {
    return source != o.source ? source < o.source : letters < o.letters;
  }
  bool operator==(const KLRWord& o) const { return source == o.source && letters == o.letters; }
  std::string str() const;
};

class KLRElement {
 public:
  using Terms = std::map<KLRWord, Scalar>;

  KLRElement() = default;
  explicit KLRElement(const KLRWord& w, const Scalar& c = 1) { add(w, c); }

  void add(const KLRWord& w, const Scalar& c);
  KLRElement& operator+=(const KLRElement& o);
  KLRElement& operator-=(const KLRElement& o);
  KLRElement& operator*=(const Scalar& c);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::string str() const;

 private:
  Terms terms_;
};

KLRElement operator+(KLRElement a, const KLRElement& b);
KLRElement operator-(KLRElement a, const KLRElement& b);
KLRElement operator*(const Scalar& c, KLRElement a);
// concatenation, zero when the idempotents do not match
KLRElement compose(const KLRElement& a, const KLRElement& b, const class KLRAlgebra& alg);

// tau_w(I) Y^n 1_source; w indexes SymGroup::get(d)
struct KLRBasisKey {
  int w = 0;
  std::uint16_t odd = 0;
  Exps n{};
  Label source;

  bool operator<(const KLRBasisKey& o) const;
  bool operator==(const KLRBasisKey& o) const {
    return w == o.w && odd == o.odd && n == o.n && source == o.source;
  }
  int lambda_degree() const { return __builtin_popcount(odd); }
  std::string str() const;
};

using KLRExpansion = std::map<KLRBasisKey, Scalar>;
// an element of PR_nu, one component per idempotent
using KLRVec = std::map<Label, SuperPoly>;
std::string expansion_str(const KLRExpansion& e);

class KLRAlgebra {
 public:
  KLRAlgebra(Quiver quiver, Multiplicity nu);
  static KLRAlgebra from_params(const ParamSet& p);

  int d() const { return d_; }
  const Quiver& quiver() const { return quiver_; }
  const Multiplicity& nu() const { return nu_; }
  // Seq(nu) in lexicographic order
  const std::vector<Label>& sequences() const { return seqs_; }

  SuperPoly one(const Label& l) const { return SuperPoly::constant(Ring::KLR, d_, 1, l); }
  SuperPoly y(int r, const Label& l) const { return SuperPoly::var(Ring::KLR, d_, r, l); }
  SuperPoly omega(int r, const Label& l) const { return SuperPoly::odd(Ring::KLR, d_, r, l); }

  // (u - v)^{h_ij} in the variables Y_r, Y_{r+1} of label l
  SuperPoly P(const Scalar& i, const Scalar& j, int r, const Label& l) const;
  // double crossing tau_r^2 1_ij as the action realizes it: (u-v)^{h_ji} (v-u)^{h_ij}
  SuperPoly Qpoly(const Scalar& i, const Scalar& j, const SuperPoly& u, const SuperPoly& v) const;

  Label target(const KLRWord& w) const;
  SuperPoly act_letter(const KLRLetter& x, const SuperPoly& f) const;
  SuperPoly act(const KLRWord& w, const SuperPoly& f) const;
  // words whose source differs from the label of f act as zero
  KLRVec act(const KLRElement& e, const SuperPoly& f) const;

  KLRWord basis_word(const KLRBasisKey& k) const;
  KLRElement from_basis(const KLRExpansion& e) const;
  // Y-degree growth bound of a word, letter by letter
  int growth(const KLRWord& w) const;
  // dots 2, crossings -a_ij (standard KLR), floating dots -2; every word is homogeneous
  int degree(const KLRWord& w) const;
  int degree(const KLRBasisKey& k) const { return degree(basis_word(k)); }
  // multiplication by a polynomial in Y on 1_l, as a combination of dot words
  KLRElement poly_element(const SuperPoly& f) const;

  // Exact expansion over the tau_w(I) Y^n basis, one graded block at a time.
  // deg_bound >= 0 caps |n| of the keys tried.
  KLRExpansion to_basis(const KLRElement& e, int deg_bound = -1) const;
  KLRExpansion d_lambda(const KLRElement& e, const Multiplicity& Lambda) const;
  KLRExpansion d_lambda(const KLRExpansion& e, const Multiplicity& Lambda) const;

  std::vector<SuperPoly> probes(const Label& src, int deg, bool odd) const;
  // rank and column count of the operator tables for source src, |n| <= B, summed over graded blocks
  std::pair<int, int> table_rank(const Label& src, int B, bool odd) const;

  void check_source(const Label& l) const;
  int seq_index(const Label& l) const;

 private:
  struct Table;
  std::shared_ptr<const Table> table(const Label& src, int deg, int lam, int nlimit) const;
  void fill_table(Table& t, const Label& src) const;

  Quiver quiver_;
  Multiplicity nu_;
  int d_ = 0;
  int maxh_ = 0;
  std::vector<Label> seqs_;
  std::map<Label, int> seq_index_;
  struct Cache {
    std::mutex mu;
    std::map<std::tuple<Label, int, int, int>, std::shared_ptr<const Table>> tables;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

std::vector<KLRBasisKey> basis_keys(const KLRAlgebra& alg, const Label& src, int max_n, bool odd);

struct KLRRelation {
  std::string id;
  std::string pattern;  // the local labels the relation depends on
  Label source;
  KLRElement lhs;  // must act as zero
};

std::vector<KLRRelation> klr_relations(const KLRAlgebra& alg, const Label& src);
// (extrarel) with the sign flipped; must be caught
KLRRelation perturbed_klr_relation(const KLRAlgebra& alg, const Label& src);
std::optional<std::string> check_klr_relation(const KLRAlgebra& alg, const KLRRelation& rel,
                                              const std::vector<SuperPoly>& probes);
Report verify_klr_relations(const KLRAlgebra& alg, int max_deg);

// d_Lambda^2 = 0 on basis keys and the to_basis round trip on random keys
Report verify_klr_differential(const KLRAlgebra& alg, const Multiplicity& Lambda, int max_n, int n_random,
                               unsigned seed);
Report verify_klr_basis(const KLRAlgebra& alg, int n_keys, int max_n, unsigned seed);

struct CyclotomicDim {
  int dim = 0;
  std::vector<KLRBasisKey> survivors;  // certificate
  std::map<int, int> by_degree;
};

// dim R^Lambda(nu) counted over graded degrees <= cap; throws NotStabilized if cap and cap+2 disagree
CyclotomicDim cyclotomic_dim_klr(const KLRAlgebra& alg, const Multiplicity& Lambda, int cap);
int default_cyclotomic_cap(const KLRAlgebra& alg, const Multiplicity& Lambda);

}  // namespace dgh
