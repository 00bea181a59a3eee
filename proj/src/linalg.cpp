#include "dgh/linalg.hpp"

#include <algorithm>

namespace dgh {

SparseVec sparse_from_map(const std::map<int, Scalar>& m) {
  SparseVec v;
  v.reserve(m.size());
  for (auto& [k, c] : m)
    if (c != 0) v.emplace_back(k, c);
  return v;
}

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
  if (a == 0 || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      Scalar s = y[i].second + a * x[j].second;
      if (s != 0) out.emplace_back(y[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

bool sparse_is_zero(const SparseVec& v) { return v.empty(); }

namespace {

void add_into(std::map<int, Scalar>& w, const Scalar& a, const SparseVec& x) {
  for (auto& [k, c] : x) {
    auto [it, fresh] = w.try_emplace(k, a * c);
    if (!fresh) {
      it->second += a * c;
      if (it->second == 0) w.erase(it);
    }
  }
}

}  // namespace

void Echelon::reduce_in_place(std::map<int, Scalar>& w, std::map<int, Scalar>* expr) const {
  auto it = w.begin();
  while (it != w.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    int pivot = it->first;
    Scalar c = it->second;
    add_into(w, -c, row->second.v);
    if (expr) add_into(*expr, c, row->second.combo);
    it = w.upper_bound(pivot);
  }
}

SparseVec Echelon::reduce(const SparseVec& v, SparseVec* expr) const {
  std::map<int, Scalar> w(v.begin(), v.end());
  std::map<int, Scalar> e;
  reduce_in_place(w, expr ? &e : nullptr);
  if (expr) *expr = sparse_from_map(e);
  return sparse_from_map(w);
}

bool Echelon::insert(const SparseVec& v, int id, SparseVec* kernel) {
  std::map<int, Scalar> w(v.begin(), v.end());
  std::map<int, Scalar> e;
  reduce_in_place(w, track_ ? &e : nullptr);
  if (w.empty()) {
    if (track_ && kernel) {
      std::map<int, Scalar> k;
      for (auto& [i, c] : e) k[i] = -c;
      k[id] += 1;
      *kernel = sparse_from_map(k);
    }
    return false;
  }
  Row row;
  int pivot = w.begin()->first;
  Scalar inv = 1 / w.begin()->second;
  row.v.reserve(w.size());
  for (auto& [i, c] : w) row.v.emplace_back(i, c * inv);
  if (track_) {
    std::map<int, Scalar> k;
    for (auto& [i, c] : e) k[i] = -c * inv;
    k[id] += inv;
    row.combo = sparse_from_map(k);
  }
  rows_.emplace(pivot, std::move(row));
  return true;
}

std::vector<int> Echelon::pivots() const {
  std::vector<int> p;
  for (auto& [k, r] : rows_) p.push_back(k);
  std::sort(p.begin(), p.end());
  return p;
}

int rank_of(const std::vector<SparseVec>& vecs) {
  Echelon e;
  for (auto& v : vecs) e.insert(v);
  return e.rank();
}

std::vector<SparseVec> kernel_of(const std::vector<SparseVec>& cols) {
  Echelon e(true);
  std::vector<SparseVec> ker;
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    SparseVec k;
    if (!e.insert(cols[j], j, &k)) ker.push_back(std::move(k));
  }
  return ker;
}

}  // namespace dgh
