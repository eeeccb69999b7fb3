#pragma once

#include "dphlog/picard.hpp"

#include <array>
#include <functional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dphlog {

/// Number of lines and of conic classes on X_r, r = 3..8.
int line_count(int r);
int conic_count(int r);

/// The lines of X_r in canonical (lexicographic) order.
struct LineTable {
  int r = 0;
  std::vector<DivisorClass> lines;
  std::unordered_map<DivisorClass, int, DivisorClassHash> index;
  /// Machine-integer copy of `lines` (line coefficients are bounded by 6).
  std::vector<std::array<int, 9>> packed;

  [[nodiscard]] int size() const { return static_cast<int>(lines.size()); }
  /// Position of a class, or -1 when it is not a line.
  [[nodiscard]] int find(const DivisorClass& d) const;
  [[nodiscard]] bool is_exceptional(int i) const;
};

using LinePair = std::pair<int, int>;

struct ConicFibration {
  DivisorClass cls;
  /// r - 1 reducible fibres, each {i, j} with i < j, sorted.
  std::vector<LinePair> fibers;
};

/// Breadth-first closure of `seeds` under the given maps, sorted ascending.
std::vector<DivisorClass> orbit_closure(
    const std::vector<DivisorClass>& seeds,
    const std::vector<std::function<DivisorClass(const DivisorClass&)>>& generators);

LineTable enumerate_lines(int r);

/// Conic classes (orbit of h - l_1) in canonical order, fibres filled in.
std::vector<ConicFibration> enumerate_conics(int r, const LineTable& lt);
std::vector<ConicFibration> enumerate_conics(int r);

/// All unordered line pairs summing to c; throws FiberCountViolation unless
/// there are exactly r - 1.
std::vector<LinePair> reducible_fibers(const DivisorClass& c, const LineTable& lt);

/// Position of a conic class in `conics`, or -1.
int find_conic(const std::vector<ConicFibration>& conics, const DivisorClass& c);

}  // namespace dphlog
