#include "dgh/perm.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace dgh {

Permutation Permutation::identity(int d) {
  Permutation w;
  w.img.resize(d);
  std::iota(w.img.begin(), w.img.end(), 1);
  return w;
}

Permutation Permutation::simple(int d, int r) {
  if (r < 1 || r >= d) fail(ErrorKind::IndexOutOfRange, "s_" + std::to_string(r) + " with d = " + std::to_string(d));
  Permutation w = identity(d);
  std::swap(w.img[r - 1], w.img[r]);
  return w;
}

Permutation Permutation::from_word(int d, const std::vector<int>& word) {
  Permutation w = identity(d);
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = simple(d, *it) * w;
  return w;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  if (u.d() != v.d()) fail(ErrorKind::IndexOutOfRange, "permutations of different degree");
  Permutation w;
  w.img.resize(u.d());
  for (int i = 1; i <= u.d(); ++i) w.img[i - 1] = u(v(i));
  return w;
}

Permutation Permutation::inverse() const {
  Permutation w;
  w.img.resize(d());
  for (int i = 1; i <= d(); ++i) w.img[img[i - 1] - 1] = i;
  return w;
}

int Permutation::length() const {
  int n = 0;
  for (int i = 0; i < d(); ++i)
    for (int j = i + 1; j < d(); ++j)
      if (img[i] > img[j]) ++n;
  return n;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < d(); ++i)
    if (img[i] != i + 1) return false;
  return true;
}

bool Permutation::left_descent(int r) const {
  // positions of the values r and r+1
  int pr = 0, pr1 = 0;
  for (int i = 0; i < d(); ++i) {
    if (img[i] == r) pr = i;
    if (img[i] == r + 1) pr1 = i;
  }
  return pr > pr1;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> word;
  Permutation w = *this;
  while (!w.is_identity()) {
    for (int r = 1; r < d(); ++r) {
      if (w.left_descent(r)) {
        word.push_back(r);
        w = simple(d(), r) * w;
        break;
      }
    }
  }
  return word;
}

std::string Permutation::str() const {
  std::string s = "[";
  for (int i = 0; i < d(); ++i) {
    if (i) s += ",";
    s += std::to_string(img[i]);
  }
  return s + "]";
}

Label permute_label(const Permutation& w, const Label& l) {
  if (static_cast<int>(l.size()) != w.d()) fail(ErrorKind::LabelMismatch, "label length differs from d");
  Label out(l.size());
  for (int p = 1; p <= w.d(); ++p) out[w(p) - 1] = l[p - 1];
  return out;
}

Label swap_label(const Label& l, int r) {
  if (r < 1 || r >= static_cast<int>(l.size())) fail(ErrorKind::IndexOutOfRange, "swap position out of range");
  Label out = l;
  std::swap(out[r - 1], out[r]);
  return out;
}

std::vector<int> left_adjusted_word(const Permutation& w) {
  const SymGroup& g = SymGroup::get(w.d());
  return g.left_adjusted(g.index(w));
}

std::uint32_t SymGroup::code(const Permutation& w) {
  std::uint32_t c = 0;
  for (int v : w.img) c = (c << 3) | static_cast<std::uint32_t>(v - 1);
  return c;
}

SymGroup::SymGroup(int d) : d_(d) {
  Permutation w = Permutation::identity(d);
  do {
    index_[code(w)] = static_cast<int>(perms_.size());
    perms_.push_back(w);
  } while (std::next_permutation(w.img.begin(), w.img.end()));
  id_ = 0;
  int n = size();
  int stride = d > 1 ? d - 1 : 1;
  lengths_.resize(n);
  words_.resize(n);
  adjusted_.resize(n);
  lmul_.assign(static_cast<size_t>(n) * stride, 0);
  for (int k = 0; k < n; ++k) {
    lengths_[k] = perms_[k].length();
    words_[k] = perms_[k].reduced_word();
    for (int r = 1; r < d; ++r) lmul_[k * stride + r - 1] = index(Permutation::simple(d, r) * perms_[k]);
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return lengths_[a] < lengths_[b]; });
  std::vector<int> sums(n, 0);
  for (int k : order) {
    if (lengths_[k] == 0) continue;
    bool have = false;
    for (int r = 1; r < d; ++r) {
      if (!perms_[k].left_descent(r)) continue;
      int rest = lmul(r, k);
      int s = r + sums[rest];
      std::vector<int> cand{r};
      cand.insert(cand.end(), adjusted_[rest].begin(), adjusted_[rest].end());
      if (!have || s < sums[k] || (s == sums[k] && cand < adjusted_[k])) {
        sums[k] = s;
        adjusted_[k] = std::move(cand);
        have = true;
      }
    }
  }
}

const SymGroup& SymGroup::get(int d) {
  static std::mutex mu;
  static std::unique_ptr<SymGroup> cache[kMaxStrands + 1];
  if (d < 1 || d > kMaxStrands) fail(ErrorKind::InvalidParam, "unsupported strand count " + std::to_string(d));
  std::lock_guard<std::mutex> lock(mu);
  if (!cache[d]) cache[d].reset(new SymGroup(d));
  return *cache[d];
}

int SymGroup::index(const Permutation& w) const {
  auto it = index_.find(code(w));
  if (it == index_.end() || w.d() != d_) fail(ErrorKind::IndexOutOfRange, "permutation " + w.str() + " not in S_d");
  return it->second;
}

}  // namespace dgh
