#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "dgh/params.hpp"

namespace dgh {

// Permutations of {1..d} as image arrays: img[i-1] = w(i). Products act on the
// left, (uv)(i) = u(v(i)), so the word s_{i1}...s_{ik} applies s_{ik} first.
struct Permutation {
  std::vector<int> img;

  static Permutation identity(int d);
  static Permutation simple(int d, int r);
  static Permutation from_word(int d, const std::vector<int>& word);

  int d() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[i - 1]; }
  Permutation inverse() const;
  int length() const;
  bool is_identity() const;
  bool operator==(const Permutation& o) const { return img == o.img; }
  bool operator<(const Permutation& o) const { return img < o.img; }

  // True iff l(s_r w) < l(w).
  bool left_descent(int r) const;
  // Lexicographically smallest reduced word.
  std::vector<int> reduced_word() const;
  std::string str() const;
};

Permutation operator*(const Permutation& u, const Permutation& v);

// (w i)_{w(p)} = i_p
Label permute_label(const Permutation& w, const Label& l);
Label swap_label(const Label& l, int r);

// Reduced word minimizing the index sum; ties go to the lexicographically smallest.
std::vector<int> left_adjusted_word(const Permutation& w);

// All of S_d, enumerated in lexicographic order of image arrays, with lookups.
class SymGroup {
 public:
  static const SymGroup& get(int d);

  int d() const { return d_; }
  int size() const { return static_cast<int>(perms_.size()); }
  const Permutation& perm(int idx) const { return perms_[idx]; }
  int index(const Permutation& w) const;
  int length(int idx) const { return lengths_[idx]; }
  const std::vector<int>& word(int idx) const { return words_[idx]; }
  const std::vector<int>& left_adjusted(int idx) const { return adjusted_[idx]; }
  int identity() const { return id_; }
  // index of s_r * w
  int lmul(int r, int idx) const { return lmul_[idx * (d_ > 1 ? d_ - 1 : 1) + (r - 1)]; }

 private:
  explicit SymGroup(int d);
  static std::uint32_t code(const Permutation& w);

  int d_;
  int id_ = 0;
  std::vector<Permutation> perms_;
  std::vector<int> lengths_;
  std::vector<std::vector<int>> words_;
  std::vector<std::vector<int>> adjusted_;
  std::vector<int> lmul_;
  std::unordered_map<std::uint32_t, int> index_;
};

}  // namespace dgh
