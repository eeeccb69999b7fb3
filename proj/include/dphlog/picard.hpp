#pragma once

#include "dphlog/types.hpp"

#include <json.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace dphlog {

/// A class in Pic(X_r) = Z h + Z l_1 + ... + Z l_r, stored in the basis
/// (h, l_1, ..., l_r). The pairing has signature (1, r).
class DivisorClass {
 public:
  using Coeffs = Vector<BigInt>;

  DivisorClass() = default;
  explicit DivisorClass(Coeffs coeffs);
  DivisorClass(int r, std::initializer_list<long> coeffs);

  static DivisorClass zero(int r);
  static DivisorClass hyperplane(int r);
  /// l_i with i in 1..r.
  static DivisorClass exceptional(int r, int i);
  static DivisorClass canonical(int r);

  [[nodiscard]] int rank() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const Coeffs& coeffs() const { return coeffs_; }
  [[nodiscard]] const BigInt& operator[](int i) const { return coeffs_[i]; }

  /// Coefficients as machine integers; throws InternalError if one overflows.
  [[nodiscard]] std::vector<long long> to_ints() const;

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator-(const DivisorClass& a);
  friend DivisorClass operator*(const BigInt& k, const DivisorClass& a);

  friend bool operator==(const DivisorClass& a, const DivisorClass& b);
  /// Lexicographic on (h, l_1, ..., l_r); ranks must agree.
  friend std::strong_ordering operator<=>(const DivisorClass& a, const DivisorClass& b);

 private:
  Coeffs coeffs_;
};

struct DivisorClassHash {
  std::size_t operator()(const DivisorClass& d) const noexcept;
};

/// Intersection pairing a0 b0 - sum a_i b_i; throws RankMismatch.
BigInt pair(const DivisorClass& a, const DivisorClass& b);

/// s_rho(d) = d + (d, rho) rho; throws NotARoot unless rho^2 = -2 and (rho, K) = 0.
DivisorClass reflect(const DivisorClass& rho, const DivisorClass& d);

bool is_line(const DivisorClass& d);

/// c^2 = 0 and (K, c) = -2. The literal condition (K, c) = 0 contradicts every
/// tabulated conic class (h - l_1 already has (K, h - l_1) = -2).
bool is_conic_class(const DivisorClass& d);

bool is_root(const DivisorClass& d);

/// Pic(X_r) together with its canonical class and fundamental roots
///   rho_i = l_i - l_{i+1} (i < r),  rho_r = h - l_1 - l_2 - l_3.
struct DelPezzoLattice {
  int r = 0;
  int d = 0;
  DivisorClass canonical;
  std::vector<DivisorClass> roots;

  static DelPezzoLattice make(int r);

  /// Cartan matrix -(rho_i, rho_j).
  [[nodiscard]] Matrix<long long> cartan() const;
};

/// Edges (i, j), 0-based, of the Dynkin diagram E_r for this root ordering.
std::vector<std::pair<int, int>> dynkin_edges(int r);

// JSON form: array of r+1 decimal integer strings.
nlohmann::ordered_json to_json(const DivisorClass& d);
DivisorClass divisor_from_json(const nlohmann::ordered_json& j);

}  // namespace dphlog
