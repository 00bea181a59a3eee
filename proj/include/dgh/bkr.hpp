#pragma once

#include <map>
#include <vector>

#include "dgh/completion.hpp"
#include "dgh/hecke.hpp"
#include "dgh/klr.hpp"
#include "dgh/params.hpp"
#include "dgh/report.hpp"

namespace dgh {

// Images of theta_r 1_i on the KLR side and of Omega_r 1_i on the Hecke side.
// theta[r-1] is a KLR Trunc with one component per idempotent, each of the form sum_{t<=r} P_t Omega_t.
struct AlphaTable {
  int N = 0;  // every entry is exact below this order
  std::vector<Trunc> theta;
  std::vector<Trunc> omega;  // alpha^{-1}(Omega_r), Hecke side
};

// gamma(T_r) 1_i = a 1_i + b tau_r 1_i and gamma^{-1}(tau_r) 1_i = f 1_t (T_r - base) 1_i,
// t the target of tau_r. Multipliers are Hecke-side series; a sits on i, b and f on t.
struct GammaEntry {
  enum Case { Equal, NoArrow, Arrow } kind = Equal;
  Label source, target;
  SuperPoly a, b, f;
  SuperPoly ka, kb;  // a and b moved to the KLR side
};

struct GammaTable {
  // entries[r-1][i]
  std::vector<std::map<Label, GammaEntry>> entries;
};

class BKRIso {
 public:
  // order: the internal truncation order of the tables; flip_sign negates alpha(theta_1) (harness self-test)
  BKRIso(const ParamSet& p, int order, bool flip_sign = false);

  const ParamSet& params() const { return p_; }
  const CompletedHecke& hecke() const { return hecke_; }
  const CompletedKLR& klr() const { return klr_; }
  const AlphaTable& alpha_table() const { return alpha_; }
  const GammaTable& gamma_table() const { return gamma_; }
  int order() const { return alpha_.N; }

  // X_r 1_i -> (Y_r + i_r) 1_i, resp. i_r (Y_r + 1) 1_i; exterior-free input only
  Trunc alpha_prime(const Trunc& v) const;
  Trunc alpha_prime_inverse(const Trunc& v) const;
  Trunc alpha(const Trunc& v) const;
  Trunc alpha_inverse(const Trunc& v) const;

  // gamma of a Hecke letter, word or element, acting on the completed KLR module
  Trunc gamma(const HLetter& l, const Trunc& v) const;
  Trunc gamma(const HeckeWord& w, const Trunc& v) const;
  Trunc gamma(const HeckeElement& h, const Trunc& v) const;
  // gamma^{-1} of a KLR letter or word, acting on the completed Hecke module
  Trunc gamma_inverse(const KLRLetter& l, const Trunc& v) const;
  Trunc gamma_inverse(const KLRWord& w, const Trunc& v) const;
  // d_Lambda(gamma(w)) acting on v, by the Leibniz rule over the letters of w
  Trunc d_gamma(const HeckeWord& w, const Trunc& v) const;

  // letters of w with xi_r spelled out
  HeckeWord flatten(const HeckeWord& w) const;

 private:
  SuperPoly to_klr(const SuperPoly& f, const Label& b) const;
  SuperPoly to_hecke(const SuperPoly& f, const Label& b) const;
  Trunc multiply_klr(const std::map<Label, SuperPoly>& m, const Trunc& v) const;
  Trunc multiply_hecke(const std::map<Label, SuperPoly>& m, const Trunc& v) const;
  Trunc gamma_T(int r, const Trunc& v) const;
  Trunc gamma_inv_tau(int r, const Trunc& v) const;
  void build_alpha(bool flip_sign);
  void build_gamma();

  ParamSet p_;
  HeckeAlgebra alg_;
  CompletedHecke hecke_;
  CompletedKLR klr_;
  Scalar base_;
  AlphaTable alpha_;
  GammaTable gamma_;
  // alpha(theta^S 1_b) and alpha^{-1}(Omega^S 1_b)
  std::map<std::pair<Label, std::uint16_t>, SuperPoly> theta_prod_, omega_prod_;
  std::map<Label, SuperPoly> d_theta_;  // d_Lambda(gamma(theta)) per component
};

// The five checks at truncation order N, plus the round trips and a sign-flip self-test.
Report verify_bkr(const ParamSet& p, int N, int samples, unsigned seed = 1);

}  // namespace dgh
