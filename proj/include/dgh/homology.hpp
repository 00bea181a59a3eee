#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dgh/hecke.hpp"
#include "dgh/klr.hpp"
#include "dgh/linalg.hpp"
#include "dgh/params.hpp"
#include "dgh/report.hpp"
#include "json.hpp"

namespace dgh {

// k[x]/J for an ideal J of finite colength in the local ring at 0; J is given
// by generators and contains the N-th power of the ideal they generate.
class LocalQuotient {
 public:
  // gens: exterior-free polynomials in d variables vanishing at 0; J = (gens)^N
  LocalQuotient(int d, std::vector<SuperPoly> gens, int N);

  int d() const { return d_; }
  int power() const { return N_; }
  // every monomial of degree >= cutoff lies in J
  int cutoff() const { return M_; }
  const std::vector<Exps>& standard() const { return standard_; }
  int dim() const { return static_cast<int>(standard_.size()); }
  // coordinates over standard() of f mod J (f in the shifted variables)
  SparseVec reduce(const SuperPoly& f) const;

 private:
  int d_, N_, M_ = 0;
  std::vector<Exps> monos_;  // degree < M_, high degrees first
  std::map<Exps, int> index_;
  Echelon ideal_;
  std::vector<Exps> standard_;
  std::map<int, int> std_index_;  // monomial index -> position in standard_
};

// A bounded complex with differential lowering the exterior degree by one.
// Basis element j of degree k is cells[cell[k][j]] tensored with a polynomial
// monomial mono[k][j] (quotient complexes) or just a named key (filtration complexes).
struct FiniteComplex {
  std::vector<std::vector<std::string>> names;
  // d[k][j] = image of basis element j of degree k, over the degree k-1 basis
  std::vector<std::vector<SparseVec>> d;

  // tower data: per basis element its cell and standard monomial, per cell its local quotient
  std::vector<std::vector<int>> cell;
  std::vector<std::vector<Exps>> mono;
  std::vector<std::shared_ptr<const LocalQuotient>> cell_ring;

  int top() const { return static_cast<int>(names.size()) - 1; }
  int dim(int k) const { return k < 0 || k > top() ? 0 : static_cast<int>(names[k].size()); }
  int total_dim() const;
  // d o d = 0, checked exactly
  bool is_complex(std::string* witness = nullptr) const;
};

// span{X^a T_w xi^b : |a| + ell |b| <= D}; FiltrationLeak if the differential leaves it
FiniteComplex build_filtration_complex(const ParamSet& p, int D);
// the completed Hecke algebra modulo the N-th power of the central maximal ideal at orbit(a)
FiniteComplex build_quotient_complex(const ParamSet& p, int N);
// the same for R(nu) with d_Lambda, at the graded maximal ideal of the centre
FiniteComplex build_klr_quotient_complex(const ParamSet& p, int N);

struct HomologyDegree {
  int k = 0;
  int chains = 0;
  int cycles = 0;
  int boundaries = 0;  // image of the differential from degree k+1
  int homology = 0;
};

struct TransitionRank {
  int from = 0, to = 0;  // bounds of the source and target complexes
  int k = 0;
  int rank = 0;  // rank of the induced map on H^k
};

struct HomologyReport {
  std::vector<HomologyDegree> degrees;
  std::vector<TransitionRank> transitions;
  int euler_chains = 0, euler_homology = 0;

  int h(int k) const;
  nlohmann::json to_json() const;
};

HomologyReport homology_ranks(const FiniteComplex& c);

// columns: images of the basis of src in degree k under the tower projection / the inclusion
std::vector<SparseVec> tower_map(const FiniteComplex& src, const FiniteComplex& dst, int k);
std::vector<SparseVec> inclusion_map(const FiniteComplex& src, const FiniteComplex& dst, int k);
// rank of the map induced on H^k by f (columns over dst's degree-k basis); witness names a surviving class
int induced_rank(const FiniteComplex& src, const FiniteComplex& dst, const std::vector<SparseVec>& f, int k,
                 std::string* witness = nullptr);

struct CyclotomicHecke {
  int dim = 0;
  std::vector<HKey> survivors;  // certificate
  // generalized eigenspaces of the symmetric functions in X, keyed by the sorted eigenvalue multiset
  std::map<Label, int> blocks;
};

// dim of the (non-enhanced) cyclotomic Hecke algebra by row reduction of the two-sided ideal
// generated by prod (X_1 - Q_r), keys with |a| <= cap; NotStabilized if cap and cap + 2 disagree
CyclotomicHecke cyclotomic_dim_hecke(const ParamSet& p, int cap);
int default_hecke_cap(const ParamSet& p);
// dimension of the block at orbit(a)
int hecke_block_dim(const CyclotomicHecke& c, const Label& a);

enum class Route { Filtration, Tower };

// Filtration route (degenerate): bounds are the D values; tower route: the N values,
// run on both the Hecke and the KLR side; tower classes must die across a gap of ell levels.
Report verify_quasi_iso(const ParamSet& p, Route route, const std::vector<int>& bounds,
                        std::vector<std::pair<std::string, HomologyReport>>* reports = nullptr);

}  // namespace dgh
