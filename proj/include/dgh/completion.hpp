#pragma once

#include <map>
#include <string>
#include <vector>

#include "dgh/hecke.hpp"
#include "dgh/klr.hpp"
#include "dgh/params.hpp"
#include "dgh/report.hpp"
#include "dgh/superpoly.hpp"

namespace dgh {

// all distinct permutations of a, lexicographic
std::vector<Label> orbit(const Label& a);

// drop monomials of total degree >= N
SuperPoly truncated(const SuperPoly& f, int N);
SuperPoly mul_truncated(const SuperPoly& f, const SuperPoly& g, int N);
// f(X) rewritten in x_r = X_r - b_r (ring HeckeP), degree < N; negative powers need b_r != 0
SuperPoly shift_to(const SuperPoly& f, const Label& b, int N);
// g with f g = 1 below degree N; NotInvertible if the even constant term vanishes
SuperPoly invert_series(const SuperPoly& f, int N);

enum class Side { Hecke, KLR };

// An element of the orbit-summed completed module, known exactly below total degree N.
// Hecke components are in the shifted variables X_r - b_r, KLR components in Y_r.
struct Trunc {
  Side side = Side::Hecke;
  int d = 0;
  int N = 0;
  std::map<Label, SuperPoly> comps;

  void add(const Label& b, const SuperPoly& f);
  Trunc& operator+=(const Trunc& o);
  Trunc& operator-=(const Trunc& o);
  Trunc& operator*=(const Scalar& c);
  Trunc at_order(int n) const;
  bool is_zero() const;
  std::string str() const;
};

Trunc operator+(Trunc a, const Trunc& b);
Trunc operator-(Trunc a, const Trunc& b);
Trunc operator*(const Scalar& c, Trunc a);
// equality below the smaller of the two orders
bool same_below(const Trunc& a, const Trunc& b);

class CompletedHecke {
 public:
  CompletedHecke(Variant v, int d, const Scalar& q, const Label& a);
  static CompletedHecke from_params(const ParamSet& p);

  Variant variant() const { return variant_; }
  int d() const { return d_; }
  const Scalar& q() const { return q_; }
  const std::vector<Label>& points() const { return points_; }
  void check_point(const Label& b) const;

  Trunc zero(int N) const;
  Trunc unit(const Label& b, int N) const;  // 1_b
  Trunc one(int N) const;
  // the same polynomial f(X) at every point
  Trunc poly(const SuperPoly& f, int N) const;
  Trunc x(int r, int N) const;
  Trunc theta(int r, int N) const;

  // componentwise product; m multiplies from the left
  Trunc mul(const Trunc& m, const Trunc& v) const;
  Trunc project(const Label& b, const Trunc& v) const;
  // s_r, moving 1_b to 1_{s_r b}, theta twisted
  Trunc s(int r, const Trunc& v) const;
  // (1 - s_r)/(X_r - X_{r+1}); loses one order where b_r = b_{r+1}
  Trunc demazure(int r, const Trunc& v) const;
  Trunc T(int r, const Trunc& v) const;
  Trunc Tinv(int r, const Trunc& v) const;
  Trunc act_letter(const HLetter& l, const Trunc& v) const;
  Trunc act(const HeckeWord& w, const Trunc& v) const;

  // x^e theta^S 1_b with |e| <= deg
  std::vector<Trunc> probes(int deg, int N) const;

 private:
  HeckeAlgebra alg_;
  Variant variant_;
  int d_;
  Scalar q_;
  std::vector<Label> points_;
};

class CompletedKLR {
 public:
  explicit CompletedKLR(KLRAlgebra alg);

  const KLRAlgebra& algebra() const { return alg_; }
  int d() const { return alg_.d(); }
  const std::vector<Label>& points() const { return alg_.sequences(); }

  Trunc zero(int N) const;
  Trunc unit(const Label& i, int N) const;
  Trunc one(int N) const;
  Trunc y(int r, int N) const;
  Trunc omega(int r, int N) const;

  Trunc mul(const Trunc& m, const Trunc& v) const;
  Trunc project(const Label& i, const Trunc& v) const;
  // the symmetric group action on PR_nu (label-aware)
  Trunc s(int r, const Trunc& v) const;
  // tau_r; loses one order on components with i_r = i_{r+1}
  Trunc tau(int r, const Trunc& v) const;
  Trunc act_letter(const KLRLetter& l, const Trunc& v) const;
  Trunc act(const KLRWord& w, const Trunc& v) const;

  std::vector<Trunc> probes(int deg, int N) const;

 private:
  KLRAlgebra alg_;
};

// act, then truncate; division-based letters track their order loss
Trunc completed_act(const CompletedHecke& m, const HeckeElement& h, const Trunc& v);
Trunc completed_act(const CompletedKLR& m, const KLRElement& e, const Trunc& v);

// T_w xi^c 1_b on probes, reduced at the closed point, must have full column rank
Report completed_basis_check(const ParamSet& p, int N);

}  // namespace dgh
