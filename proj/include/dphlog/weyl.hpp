#pragma once

#include "dphlog/incidence.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace dphlog {

/// perm[i] is the image of line i. Line counts never exceed 240.
using Permutation = std::vector<std::uint8_t>;
using PermView = std::span<const std::uint8_t>;

/// (g o h)[i] = g[h[i]]: apply h first.
Permutation compose(PermView g, PermView h);
Permutation inverse(PermView g);
Permutation identity_permutation(int n);
Permutation power(PermView g, int k);
bool is_bijection(PermView g);

struct WeylElement {
  Permutation perm;
  int sign = 1;
  /// Generator indices 1..r; s_{w[0]} s_{w[1]} ... (rightmost acts first).
  std::vector<int> word;
};

/// |W(E_r)| for r = 3..8.
std::uint64_t group_order(int r);

/// The fundamental reflections s_1..s_r acting on the line table.
std::vector<WeylElement> generators(int r, const LineTable& lt);

/// Product of generators along a word of 1-based indices.
WeylElement element_from_word(const std::vector<WeylElement>& gens, const std::vector<int>& word);

/// Matrix of the element on Pic(X_r) in the basis (h, l_1, ..., l_r),
/// recovered from where it sends the lines l_1..l_r and h - l_1 - l_2.
Matrix<long long> pic_matrix(PermView g, const LineTable& lt);
long long pic_determinant(PermView g, const LineTable& lt);

/// Permutation of conic classes induced by a line permutation.
class ConicAction {
 public:
  ConicAction(const LineTable& lt, const std::vector<ConicFibration>& conics);

  /// Conic class whose fibre is the line pair {a, b}, or -1.
  [[nodiscard]] int conic_of(int a, int b) const { return table_[a * n_ + b]; }
  [[nodiscard]] int image(PermView g, int conic) const;
  [[nodiscard]] std::vector<int> permutation(PermView g) const;
  [[nodiscard]] int fixed_count(PermView g) const;

 private:
  int n_;
  std::vector<int> table_;
  std::vector<LinePair> first_fiber_;
};

/// All elements of W(E_r), r <= 7, found by breadth-first search from the
/// identity with right multiplication by generators. Storage is flat: one
/// permutation per element plus its BFS parent, so words can be rebuilt.
class WeylGroup {
 public:
  /// Throws GroupTooLarge for r = 8.
  static WeylGroup enumerate(int r, const LineTable& lt);

  [[nodiscard]] int rank() const { return r_; }
  [[nodiscard]] int degree() const { return n_; }
  [[nodiscard]] std::size_t size() const { return parent_.size(); }
  [[nodiscard]] PermView perm(std::size_t i) const {
    return {perms_.data() + i * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
  }
  [[nodiscard]] int sign(std::size_t i) const { return depth_parity_[i] ? -1 : 1; }
  [[nodiscard]] std::vector<int> word(std::size_t i) const;
  [[nodiscard]] WeylElement element(std::size_t i) const;
  /// Index of a permutation, or size() when absent.
  [[nodiscard]] std::size_t find(PermView g) const;
  [[nodiscard]] const std::vector<WeylElement>& gens() const { return gens_; }

 private:
  WeylGroup() = default;
  void insert_slot(std::uint32_t idx);
  [[nodiscard]] std::uint64_t hash(PermView g) const;

  int r_ = 0;
  int n_ = 0;
  std::vector<WeylElement> gens_;
  std::vector<std::uint8_t> perms_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> via_;
  std::vector<std::uint8_t> depth_parity_;
  std::vector<std::uint32_t> slots_;
};

/// Number of group elements fixing a line or conic class (r <= 7).
std::uint64_t stabilizer_order(const WeylGroup& group, const LineTable& lt,
                               const std::vector<ConicFibration>& conics, const DivisorClass& target);
std::uint64_t stabilizer_order(int r, const DivisorClass& target);

/// Orbit of an arbitrary class under the fundamental reflections.
std::vector<DivisorClass> class_orbit(const DivisorClass& target);

/// Representatives of the 18 conjugacy classes of W(D_5) for r = 5, listed in
/// the column order of the embedded character table. GAP's generators
/// zeta_1..zeta_5 of CoxeterGroup("D",5) are s_4, s_5, s_3, s_2, s_1.
std::vector<WeylElement> d5_class_representatives(const LineTable& lt);

/// The 18 GAP words behind d5_class_representatives, in zeta indices.
const std::vector<std::vector<int>>& d5_gap_words();

}  // namespace dphlog
