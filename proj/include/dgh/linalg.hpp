#pragma once

#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dgh/scalar.hpp"

namespace dgh {

// sorted by index, no zero entries
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec sparse_from_map(const std::map<int, Scalar>& m);
void axpy(SparseVec& y, const Scalar& a, const SparseVec& x);  // y += a x
bool sparse_is_zero(const SparseVec& v);

// Incremental exact row echelon over Q. Each stored row remembers how it was
// built from the inserted vectors (by caller id) when tracking is on.
class Echelon {
 public:
  explicit Echelon(bool track = false) : track_(track) {}

  // Returns true if v was independent of everything inserted so far. When it was
  // dependent and tracking is on, *kernel receives c with sum_id c[id] * v_id = 0.
  bool insert(const SparseVec& v, int id = -1, SparseVec* kernel = nullptr);

  // v = remainder + sum_id expr[id] * v_id; returns the remainder.
  SparseVec reduce(const SparseVec& v, SparseVec* expr = nullptr) const;
  bool in_span(const SparseVec& v) const { return reduce(v).empty(); }

  int rank() const { return static_cast<int>(rows_.size()); }
  std::vector<int> pivots() const;

 private:
  struct Row {
    SparseVec v;  // leading entry is 1
    SparseVec combo;
  };
  void reduce_in_place(std::map<int, Scalar>& w, std::map<int, Scalar>* expr) const;

  bool track_;
  std::unordered_map<int, Row> rows_;
};

// Dense-ish helpers on column lists.
int rank_of(const std::vector<SparseVec>& vecs);
// basis of {c : sum_j c_j cols[j] = 0}
std::vector<SparseVec> kernel_of(const std::vector<SparseVec>& cols);

}  // namespace dgh
