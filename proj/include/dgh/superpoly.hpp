#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "dgh/params.hpp"
#include "dgh/perm.hpp"
#include "dgh/scalar.hpp"

namespace dgh {

enum class Ring { HeckeP, HeckePl, KLR };

const char* ring_name(Ring r);

using Exps = std::array<std::int16_t, kMaxStrands>;

// X^e (or Y^e) times the ordered exterior monomial whose indices are the set bits of s
// (bit r-1 stands for theta_r / Omega_r).
struct Mono {
  Exps e{};
  std::uint16_t s = 0;

  int degree() const;
  int odd_degree() const { return __builtin_popcount(s); }
  bool operator<(const Mono& o) const {
    if (s != o.s) return s < o.s;
    return e < o.e;
  }
  bool operator==(const Mono& o) const { return s == o.s && e == o.e; }
};

// sign of theta^a * theta^b rewritten as theta^(a|b); 0 if they overlap
int exterior_sign(std::uint16_t a, std::uint16_t b);

class SuperPoly {
 public:
  using Terms = std::map<Mono, Scalar>;

  SuperPoly() = default;
  SuperPoly(Ring ring, int d, Label label = {});

  static SuperPoly constant(Ring ring, int d, const Scalar& c, Label label = {});
  static SuperPoly var(Ring ring, int d, int r, Label label = {});
  static SuperPoly odd(Ring ring, int d, int r, Label label = {});
  static SuperPoly monomial(Ring ring, int d, const Mono& m, const Scalar& c = 1, Label label = {});

  Ring ring() const { return ring_; }
  int d() const { return d_; }
  const Label& label() const { return label_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  Scalar coeff(const Mono& m) const;
  // largest total polynomial degree over stored monomials (-inf guard: 0 for zero)
  int max_degree() const;
  int min_exponent() const;
  bool exterior_free() const;

  void add_term(const Mono& m, const Scalar& c);
  SuperPoly& operator+=(const SuperPoly& o);
  SuperPoly& operator-=(const SuperPoly& o);
  SuperPoly& operator*=(const Scalar& c);
  SuperPoly operator-() const;

  // the polynomial coefficient of theta^S, exterior-free
  SuperPoly odd_component(std::uint16_t s) const;
  SuperPoly with_label(Label l) const;
  SuperPoly with_ring(Ring r) const;

  std::string str() const;

  bool operator==(const SuperPoly& o) const;
  bool operator!=(const SuperPoly& o) const { return !(*this == o); }

 private:
  void check_compatible(const SuperPoly& o) const;

  Ring ring_ = Ring::HeckeP;
  int d_ = 0;
  Label label_;
  Terms terms_;

  friend SuperPoly operator*(const SuperPoly& f, const SuperPoly& g);
};

SuperPoly operator+(SuperPoly f, const SuperPoly& g);
SuperPoly operator-(SuperPoly f, const SuperPoly& g);
SuperPoly operator*(const SuperPoly& f, const SuperPoly& g);
SuperPoly operator*(const Scalar& c, SuperPoly f);
// multiply by a single monomial with coefficient
SuperPoly mul_mono(const SuperPoly& f, const Mono& m, const Scalar& c = 1);

// s_r with theta_r -> theta_r + (c + X_r - X_{r+1}) theta_{r+1}; c = 0 is the plain action.
SuperPoly twisted_swap(int r, const SuperPoly& f, const Scalar& c = 0);
SuperPoly sym_act_hecke(const Permutation& w, const SuperPoly& f);
SuperPoly demazure_hecke(int r, const SuperPoly& f);

// Label-aware action on the KLR ring: output carries s_k i.
SuperPoly sym_act_klr(int k, const SuperPoly& f);
SuperPoly demazure_klr(int r, const SuperPoly& f);

// (X^e - X^{s_r e}) / (X_r - X_{r+1}) as a sum of monomials, sign included.
void divided_difference_mono(int r, const Exps& e, const Scalar& c, std::uint16_t s, SuperPoly::Terms& out);

// all exponent vectors in d variables with sum |e_i| <= deg and entries >= lo
std::vector<Exps> exponent_vectors(int d, int deg, int lo = 0);
// random element with n_terms monomials of degree <= max_deg and small integer coefficients
SuperPoly random_poly(Ring ring, int d, int max_deg, int n_terms, bool laurent, std::mt19937& rng, Label label = {});

}  // namespace dgh
