#pragma once

#include "dphlog/planar_web.hpp"
#include "dphlog/symbols.hpp"

#include <complex>
#include <functional>
#include <optional>
#include <vector>

namespace dphlog {

using Complex = std::complex<double>;

/// Branch points b_1..b_s; infinity is implicit. Letter k is dz/(z - b_k).
struct LogFormBasis {
  std::vector<Complex> branch;
};

struct TransportOptions {
  /// Accept when step doubling changes every value by at most tol * max(1, |values|).
  double tol = 1e-12;
  /// Minimum clearance between the path and any branch point.
  double delta = 1e-3;
  int initial_steps = 4;
  int max_doublings = 16;
};

/// Values of all words of length <= max_weight, ordered by length and then
/// lexicographically; words[i] names values[i].
struct PathEvaluation {
  Complex base, end;
  int letters = 0;
  int max_weight = 0;
  std::vector<Word> words;
  std::vector<Complex> values;
  double error = 0;
  int steps = 0;

  [[nodiscard]] Complex value(const Word& w) const;
  [[nodiscard]] Complex value(const WordCombination& c) const;
};

/// Fills f[k] with the coefficient of letter k along the path: eta_k = f[k](t) dt, t in [0, 1].
using FormSampler = std::function<void(double t, std::vector<Complex>& f)>;

/// Solves dL_w = f_{w_1} L_{w'} (first letter outermost), L_empty = 1, all
/// other values 0 at t = 0, with 5-stage Gauss-Legendre collocation and step
/// doubling. Throws QuadratureFailure when the tolerance cannot be met.
PathEvaluation transport_words(int letters, int max_weight, const FormSampler& forms, const TransportOptions& opts = {});

/// Iterated integrals along the straight segment base -> end. Throws
/// PathTooClose when the segment passes within delta of a branch point.
PathEvaluation evaluate_words(const LogFormBasis& basis, Complex base, Complex end, int max_weight,
                              const TransportOptions& opts = {});

/// Antisymmetrized value (1/s!) sum sign(sigma) L_{sigma(letters)}.
Complex antisymmetric_value(const PathEvaluation& ev, const Word& letters);

/// Weight-3 antisymmetric integral rebuilt from logarithms and weight-2
/// antisymmetric integrals; equals antisymmetric_value(ev, {0,1,2}).
Complex ai3_from_lower_weight(const PathEvaluation& ev);

struct NumericSample {
  std::array<Complex, 2> point{};
  double residual = 0;  // |sum eps_i AI_i|
  double scale = 0;     // max |AI_i|
  double error_budget = 0;
};

struct NumericReport {
  int r = 0;
  std::array<double, 2> base{};
  std::vector<int> epsilon;
  std::vector<NumericSample> samples;
  double max_relative_residual = 0;
  double tol = 0;
  bool pass = false;
};

/// Evaluates sum_i eps_i AI_i(U_i) at random endpoints near a base point by
/// pulling the forms back along planar segments, so every term follows one
/// coherent path. `drop` removes one term to show the check is not vacuous.
NumericReport verify_identity_numeric(const PlanarWeb& web, const std::vector<int>& eps, int samples, double tol,
                                      std::uint64_t seed, const TransportOptions& opts = {},
                                      std::optional<int> drop = std::nullopt);

}  // namespace dphlog
