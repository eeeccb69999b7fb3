#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dphlog {

// Expression templates are off so the numbers behave as plain values inside
// Eigen expressions.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

enum class ErrorCode {
  RankMismatch,
  NotARoot,
  UnsupportedRank,
  FiberCountViolation,
  GroupTooLarge,
  InternalError,
  NotACharacter,
  IndexError,
  KernelDimensionViolation,
  SignViolation,
  ResidueMismatch,
  SymbolicIdentityViolation,
  PathTooClose,
  QuadratureFailure,
  ParseError,
  DegenerateParameters,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parses "p/q" or "p" into an exact rational; throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q = 1).
std::string format_rational(const Rational& q);

/// Supported surface ranks, r = 3..8.
inline void require_rank(int r, int lo = 3, int hi = 8) {
  if (r < lo || r > hi)
    throw Error(ErrorCode::UnsupportedRank,
                "rank " + std::to_string(r) + " outside [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "]");
}

}  // namespace dphlog
