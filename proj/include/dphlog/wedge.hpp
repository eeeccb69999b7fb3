#pragma once

#include "dphlog/incidence.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace dphlog {

/// Rows C^s = (fibre s) - (fibre base), s != base, as dense integer vectors
/// over the line set, together with their combined support.
struct FiberDifferenceMatrix {
  int conic = 0;
  std::vector<std::vector<int>> rows;
  std::vector<int> support;
};

FiberDifferenceMatrix fiber_differences(const ConicFibration& f, int n_lines, int base, int conic_index = 0);

/// Sorted (r-2)-tuple of line indices, padded with 0xff.
using TupleKey = std::array<std::uint8_t, 6>;

struct WedgeVector {
  int arity = 0;
  std::map<TupleKey, BigInt> entries;

  [[nodiscard]] bool is_zero() const { return entries.empty(); }
};

/// All nonzero maximal minors of the matrix, keyed by column tuple.
WedgeVector wedge_vector(const FiberDifferenceMatrix& m);

/// Drops the coordinates at the exceptional lines l_1..l_r.
std::vector<int> quotient_by_exceptional(const std::vector<int>& v, const LineTable& lt);

struct KernelOptions {
  /// Shuffle each conic's fibre list and pick a random base fibre.
  bool randomize = false;
  std::uint64_t seed = 0;
  bool quotient = false;
  int threads = 1;
  /// Allow r = 8; uses a randomized modular kernel verified exactly.
  bool stretch = false;
};

struct HlogCertificate {
  int r = 0;
  std::vector<DivisorClass> conics;
  /// Fibre order used for each conic, and the index of its base fibre.
  std::vector<std::vector<LinePair>> fiber_orders;
  std::vector<int> bases;
  std::vector<int> epsilon;
  int kernel_dimension = 0;
  bool quotient = false;
  std::string method;
  std::uint64_t content_hash = 0;
};

/// Builds every wedge vector, computes the kernel of k -> varpi_k and checks
/// that it is a line spanned by a +-1 vector. Throws KernelDimensionViolation
/// or SignViolation otherwise.
HlogCertificate kernel_signs(int r, const KernelOptions& opts = {});
HlogCertificate kernel_signs(const LineTable& lt, const std::vector<ConicFibration>& conics,
                             const KernelOptions& opts = {});

/// The wedge vectors for given fibre orders and bases.
std::vector<WedgeVector> certificate_vectors(const LineTable& lt, const std::vector<std::vector<LinePair>>& orders,
                                             const std::vector<int>& bases, bool quotient);

/// True when sum_k eps_k varpi_k = 0 exactly.
bool combination_vanishes(const std::vector<WedgeVector>& vectors, const std::vector<int>& epsilon);

/// Exact nullspace basis of the columns, via modular row selection and
/// fraction-free Gauss-Jordan on the selected rows. Each basis vector is
/// primitive with first nonzero entry positive.
std::vector<std::vector<BigInt>> exact_column_kernel(const std::vector<WedgeVector>& columns);

nlohmann::ordered_json to_json(const HlogCertificate& cert);
HlogCertificate certificate_from_json(const nlohmann::ordered_json& j);
std::uint64_t certificate_hash(const HlogCertificate& cert);

struct ReplayResult {
  bool classes_match = false;
  bool fibers_valid = false;
  bool signs_valid = false;
  bool vanishes = false;
  bool hash_matches = false;
  [[nodiscard]] bool ok() const { return classes_match && fibers_valid && signs_valid && vanishes && hash_matches; }
};

ReplayResult replay_certificate(const HlogCertificate& cert);

/// FNV-1a-64.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace dphlog
