#pragma once

#include "dphlog/dual.hpp"
#include "dphlog/symbols.hpp"
#include "dphlog/wedge.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

namespace dphlog {

template <typename T>
T scalar_cast(const Rational& q) {
  if constexpr (std::is_same_v<T, Rational>) {
    return q;
  } else if constexpr (std::is_same_v<T, Dual<Rational>>) {
    return T(q);
  } else if constexpr (std::is_same_v<T, std::complex<double>>) {
    return T(q.convert_to<double>(), 0.0);
  } else if constexpr (std::is_same_v<T, Dual<std::complex<double>>>) {
    return T(std::complex<double>(q.convert_to<double>(), 0.0));
  } else {
    return T(q.convert_to<double>());
  }
}

/// Polynomial of degree <= 2 in x, y: c0 + c1 x + c2 y + c3 x^2 + c4 xy + c5 y^2.
struct Poly2 {
  std::array<Rational, 6> c{};
  int degree = 1;

  template <typename T>
  T eval(const T& x, const T& y) const {
    T out = scalar_cast<T>(c[0]);
    out = out + scalar_cast<T>(c[1]) * x + scalar_cast<T>(c[2]) * y;
    if (degree == 2) out = out + scalar_cast<T>(c[3]) * x * x + scalar_cast<T>(c[4]) * x * y + scalar_cast<T>(c[5]) * y * y;
    return out;
  }
  /// Value of the homogenization at [X:Y:Z].
  [[nodiscard]] Rational eval_projective(const std::array<Rational, 3>& p) const;
};

enum class WebModel { Abel, DP4 };

/// A planar model of the conic web on X_r: blown-up points, the affine
/// factors whose closures are the non-exceptional lines other than the line
/// at infinity, the first integrals U_i with their finite spectra, and the
/// residue vectors d log(U_i - c) = sum_j R_{i,c,j} d log(factor_j).
struct PlanarWeb {
  WebModel model = WebModel::Abel;
  int r = 4;
  Rational gamma, pi;
  std::vector<std::array<Rational, 3>> points;
  std::vector<Poly2> factors;
  std::vector<std::vector<Rational>> spectra;
  std::vector<std::vector<std::vector<int>>> residues;

  [[nodiscard]] int size() const { return static_cast<int>(spectra.size()); }
};

/// Five first integrals of Abel's relation on X_4.
PlanarWeb abel_web();

/// pi gamma (pi - 1)(gamma - 1)(pi - gamma) != 0.
bool dp4_admissible(const Rational& gamma, const Rational& pi);

/// The ten first integrals on the quartic del Pezzo surface; throws
/// DegenerateParameters when the points are not in general position.
PlanarWeb dp4_web(const Rational& gamma, const Rational& pi);

/// Random admissible (gamma, pi) with small numerators and denominators.
std::pair<Rational, Rational> random_admissible(std::uint64_t seed);

template <typename T>
T eval_first_integral(const PlanarWeb& web, int i, const T& x, const T& y) {
  const T one = scalar_cast<T>(Rational(1));
  if (web.model == WebModel::Abel) {
    switch (i) {
      case 0: return x;
      case 1: return y;
      case 2: return x / y;
      case 3: return (one - x) / (one - y);
      case 4: return x * (one - y) / (y * (one - x));
      default: break;
    }
  } else {
    const T g = scalar_cast<T>(web.gamma);
    const T p = scalar_cast<T>(web.pi);
    switch (i) {
      case 0: return x;
      case 1: return one / y;
      case 2: return y / x;
      case 3: return (x - y) / (x - one);
      case 4: return g * (p - x) / (p * y - g * x);
      case 5: return ((one - x) * g + x + (p - one) * y - p) / ((x - one) * (y - g));
      case 6: return (x - y) * (y - g) / (y * (p * y - g * x - p + g + x - y));
      case 7: return -(x * (x * (g - one) + (one - y) * p - g + y)) / ((x - y) * (x - p));
      case 8: return y * (x - p) / (x * (y - g));
      case 9: return x * (y - one) / (y * (x - one));
      default: break;
    }
  }
  throw Error(ErrorCode::IndexError, "first integral " + std::to_string(i));
}

struct ResidueReport {
  bool ok = true;
  int checks = 0;
  int resamples = 0;
  std::string failure;
};

/// Checks every residue vector as an identity of rational functions at
/// `trials` random rational points, comparing both partial derivatives
/// exactly. Throws ResidueMismatch when `strict` and a check fails.
ResidueReport residue_check(const PlanarWeb& web, int trials, std::uint64_t seed, bool strict = true);

/// sum_i eps_i Asym(R_{i,1} (x) ... (x) R_{i,r-2}) over the factor basis.
/// `eps` empty means all +1; `drop` omits one term.
WordCombination symbolic_sum(const PlanarWeb& web, const std::vector<int>& eps = {},
                             std::optional<int> drop = std::nullopt);

/// Throws SymbolicIdentityViolation unless symbolic_sum(web, eps) is zero.
void require_symbolic_identity(const PlanarWeb& web, const std::vector<int>& eps = {});

/// The conic fibration of each U_i read off from its residues: the fibres
/// over the finite spectral points in order, then the fibre at infinity.
struct WebFibration {
  int conic = -1;
  std::vector<LinePair> fibers;
};

std::vector<WebFibration> web_fibrations(const PlanarWeb& web, const LineTable& lt,
                                         const std::vector<ConicFibration>& conics);

/// Signs for sum_i eps_i AI(U_i) = 0 obtained from a kernel certificate by
/// comparing each U_i's wedge (fibres in spectral order, infinity as base)
/// with the certificate's vector for the same conic.
std::vector<int> translate_signs(const PlanarWeb& web, const HlogCertificate& cert);

}  // namespace dphlog
