#pragma once

#include "dphlog/types.hpp"

#include <array>
#include <string>
#include <vector>

namespace dphlog {

/// Character table of W(D_5): rows are irreducible characters labelled by
/// bipartitions [a.b], columns are conjugacy classes labelled (a.b).
struct D5CharacterTable {
  static constexpr int kSize = 18;
  static constexpr long long kOrder = 1920;

  std::array<std::string, kSize> row_labels;
  std::array<std::string, kSize> class_labels;
  std::array<std::array<int, kSize>, kSize> values;
  /// Derived from column orthogonality: |C(g)| = 1920 / |C_G(g)|.
  std::array<long long, kSize> class_sizes;

  static const D5CharacterTable& get();

  /// Weighted inner product (1/1920) sum_c |c| a(c) b(c).
  [[nodiscard]] Rational inner(const std::array<Rational, kSize>& a,
                               const std::array<Rational, kSize>& b) const;
  /// FNV-1a-64 over the row-major entries, for transcription checks.
  [[nodiscard]] std::uint64_t checksum() const;
};

/// Multiplicity of each irreducible in a class function given by its 18
/// values in table column order; throws NotACharacter on a fractional result.
std::array<long long, D5CharacterTable::kSize> d5_decompose(const std::array<long long, 18>& values);

/// Inverse of d5_decompose.
std::array<long long, D5CharacterTable::kSize> d5_compose(const std::array<long long, 18>& mult);

/// Formats a decomposition as "[.5]+[1.4]+2[2.3]".
std::string d5_format(const std::array<long long, D5CharacterTable::kSize>& mult);

}  // namespace dphlog
