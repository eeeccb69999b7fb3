#pragma once

#include "dphlog/d5_table.hpp"
#include "dphlog/weyl.hpp"

#include <array>
#include <string>
#include <vector>

namespace dphlog {

/// Lines fixed by g^power: total length of the cycles whose length divides power.
long long fixed_points(PermView g, int power);

/// (chi(g), chi(g^2), ..., chi(g^m)) for the permutation character, from one
/// cycle decomposition.
std::vector<long long> power_sums(PermView g, int m);

/// Character of the m-th exterior power from power sums p_1..p_m, via
/// m e_m = sum_k (-1)^(k-1) p_k e_(m-k). Throws InternalError on a
/// non-integral intermediate.
long long exterior_power_value(const std::vector<long long>& powersums, int m);

/// Trace of g on Pic(X_r) minus one, i.e. the character of the root space.
long long reflection_character_value(PermView g, const LineTable& lt);

enum class Action { Lines, Conics, Reflection, Exterior, Sign, Trivial };

/// A class function sampled on every element of an enumerated group, indexed
/// like the group itself.
struct ClassFunction {
  int r = 0;
  Action action = Action::Lines;
  int degree_param = 0;  // m for Exterior
  std::vector<long long> values;
};

struct CharacterContext {
  const WeylGroup& group;
  const LineTable& lt;
  const std::vector<ConicFibration>& conics;
  int threads = 1;
};

ClassFunction line_character(const CharacterContext& ctx);
ClassFunction conic_character(const CharacterContext& ctx);
ClassFunction reflection_character(const CharacterContext& ctx);
ClassFunction exterior_character(const CharacterContext& ctx, int m);
ClassFunction sign_character(const CharacterContext& ctx);
ClassFunction trivial_character(const CharacterContext& ctx);

/// (1/|W|) sum_g chi(g) psi(g). The characters here are real, so no
/// conjugation is needed. Throws RankMismatch on differing samples.
Rational inner_product(const ClassFunction& chi, const ClassFunction& psi);

/// Every projection used by the character route, from one pass over the group.
struct CharacterSummary {
  int r = 0;
  std::uint64_t order = 0;
  Rational line_trivial;       // <chi, 1>
  Rational line_reflection;    // <chi, refl>
  Rational line_norm;          // <chi, chi>
  Rational conic_norm;         // <conic, conic>
  Rational conic_line;         // <conic, chi>
  Rational conic_trivial;      // <conic, 1>
  Rational reflection_norm;    // <refl, refl>
  Rational signature;          // <wedge^(r-2) chi, sign>
  long long wedge_degree = 0;  // wedge^(r-2) chi at the identity
};

CharacterSummary summarize_characters(const CharacterContext& ctx);

/// (1/|W|) sum_g sign(g) wedge^(r-2) chi(g); GroupTooLarge for r = 8.
Rational signature_multiplicity(const CharacterContext& ctx);
long long signature_multiplicity(int r, int threads = 1);

/// The r = 5 computation against the embedded W(D_5) table.
struct D5Report {
  std::array<long long, 18> chi{};
  std::array<long long, 18> wedge3{};
  std::array<long long, 18> conic{};
  std::array<long long, 18> chi_mult{};
  std::array<long long, 18> wedge3_mult{};
  std::array<long long, 18> conic_mult{};
  long long signature_mult = 0;
  /// Sizes of the conjugacy classes of the representatives measured inside
  /// the enumerated W(D_5); empty when no group was supplied.
  std::vector<long long> measured_class_sizes;
  /// True when the conjugacy classes of the 18 representatives are pairwise
  /// disjoint and cover the group.
  bool classes_partition_group = false;
};

D5Report d5_report(const LineTable& lt, const std::vector<ConicFibration>& conics,
                   const WeylGroup* group = nullptr);

}  // namespace dphlog
