#include "dphlog/picard.hpp"

#include <boost/functional/hash.hpp>

#include <charconv>
#include <limits>

namespace dphlog {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::UnsupportedRank: return "UnsupportedRank";
    case ErrorCode::FiberCountViolation: return "FiberCountViolation";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::InternalError: return "InternalError";
    case ErrorCode::NotACharacter: return "NotACharacter";
    case ErrorCode::IndexError: return "IndexError";
    case ErrorCode::KernelDimensionViolation: return "KernelDimensionViolation";
    case ErrorCode::SignViolation: return "SignViolation";
    case ErrorCode::ResidueMismatch: return "ResidueMismatch";
    case ErrorCode::SymbolicIdentityViolation: return "SymbolicIdentityViolation";
    case ErrorCode::PathTooClose: return "PathTooClose";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DegenerateParameters: return "DegenerateParameters";
  }
  return "Unknown";
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty integer in '" + std::string(text) + "'");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw Error(ErrorCode::ParseError, "bad integer '" + std::string(s) + "'");
    for (std::size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9')
        throw Error(ErrorCode::ParseError, "bad integer '" + std::string(s) + "'");
    return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& q) {
  const BigInt num = numerator(q);
  const BigInt den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

DivisorClass::DivisorClass(Coeffs coeffs) : coeffs_(std::move(coeffs)) {}

DivisorClass::DivisorClass(int r, std::initializer_list<long> coeffs) : coeffs_(r + 1) {
  if (static_cast<int>(coeffs.size()) != r + 1)
    throw Error(ErrorCode::RankMismatch, "expected " + std::to_string(r + 1) + " coefficients");
  int i = 0;
  for (long c : coeffs) coeffs_[i++] = c;
}

DivisorClass DivisorClass::zero(int r) {
  Coeffs c(r + 1);
  for (int i = 0; i <= r; ++i) c[i] = 0;
  return DivisorClass(std::move(c));
}

DivisorClass DivisorClass::hyperplane(int r) {
  auto d = zero(r);
  d.coeffs_[0] = 1;
  return d;
}

DivisorClass DivisorClass::exceptional(int r, int i) {
  if (i < 1 || i > r) throw Error(ErrorCode::IndexError, "exceptional index " + std::to_string(i));
  auto d = zero(r);
  d.coeffs_[i] = 1;
  return d;
}

DivisorClass DivisorClass::canonical(int r) {
  Coeffs c(r + 1);
  c[0] = -3;
  for (int i = 1; i <= r; ++i) c[i] = 1;
  return DivisorClass(std::move(c));
}

std::vector<long long> DivisorClass::to_ints() const {
  std::vector<long long> out(coeffs_.size());
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i) {
    if (abs(coeffs_[i]) > BigInt(std::numeric_limits<long long>::max()))
      throw Error(ErrorCode::InternalError, "coefficient does not fit in 64 bits");
    out[i] = coeffs_[i].convert_to<long long>();
  }
  return out;
}

static void require_same_rank(const DivisorClass& a, const DivisorClass& b) {
  if (a.rank() != b.rank())
    throw Error(ErrorCode::RankMismatch,
                "ranks " + std::to_string(a.rank()) + " and " + std::to_string(b.rank()));
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  require_same_rank(*this, other);
  coeffs_ += other.coeffs_;
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  require_same_rank(*this, other);
  coeffs_ -= other.coeffs_;
  return *this;
}

DivisorClass operator-(const DivisorClass& a) { return DivisorClass(Vector<BigInt>(-a.coeffs_)); }

DivisorClass operator*(const BigInt& k, const DivisorClass& a) {
  return DivisorClass(Vector<BigInt>(a.coeffs_ * k));
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
  return a.rank() == b.rank() && a.coeffs_ == b.coeffs_;
}

std::strong_ordering operator<=>(const DivisorClass& a, const DivisorClass& b) {
  require_same_rank(a, b);
  for (Eigen::Index i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] < b.coeffs_[i]) return std::strong_ordering::less;
    if (a.coeffs_[i] > b.coeffs_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t DivisorClassHash::operator()(const DivisorClass& d) const noexcept {
  std::size_t seed = static_cast<std::size_t>(d.rank());
  for (Eigen::Index i = 0; i < d.coeffs().size(); ++i)
    boost::hash_combine(seed, static_cast<long>(mpz_get_si(d.coeffs()[i].backend().data())));
  return seed;
}

BigInt pair(const DivisorClass& a, const DivisorClass& b) {
  require_same_rank(a, b);
  BigInt s = a[0] * b[0];
  for (int i = 1; i <= a.rank(); ++i) s -= a[i] * b[i];
  return s;
}

bool is_root(const DivisorClass& d) {
  return pair(d, d) == -2 && pair(d, DivisorClass::canonical(d.rank())) == 0;
}

DivisorClass reflect(const DivisorClass& rho, const DivisorClass& d) {
  require_same_rank(rho, d);
  if (!is_root(rho)) throw Error(ErrorCode::NotARoot, "reflection vector is not a root");
  return d + pair(d, rho) * rho;
}

bool is_line(const DivisorClass& d) {
  return pair(d, d) == -1 && pair(DivisorClass::canonical(d.rank()), d) == -1;
}

bool is_conic_class(const DivisorClass& d) {
  return pair(d, d) == 0 && pair(DivisorClass::canonical(d.rank()), d) == -2;
}

DelPezzoLattice DelPezzoLattice::make(int r) {
  require_rank(r);
  DelPezzoLattice lat;
  lat.r = r;
  lat.d = 9 - r;
  lat.canonical = DivisorClass::canonical(r);
  for (int i = 1; i < r; ++i)
    lat.roots.push_back(DivisorClass::exceptional(r, i) - DivisorClass::exceptional(r, i + 1));
  lat.roots.push_back(DivisorClass::hyperplane(r) - DivisorClass::exceptional(r, 1) -
                      DivisorClass::exceptional(r, 2) - DivisorClass::exceptional(r, 3));
  return lat;
}

Matrix<long long> DelPezzoLattice::cartan() const {
  Matrix<long long> c(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) c(i, j) = (-pair(roots[i], roots[j])).convert_to<long long>();
  return c;
}

std::vector<std::pair<int, int>> dynkin_edges(int r) {
  require_rank(r);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 2 < r; ++i) edges.emplace_back(i, i + 1);
  // rho_r hangs off rho_3; for r = 3 it is isolated (A2 x A1).
  if (r >= 4) edges.emplace_back(2, r - 1);
  return edges;
}

nlohmann::ordered_json to_json(const DivisorClass& d) {
  auto arr = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < d.coeffs().size(); ++i) arr.push_back(d.coeffs()[i].str());
  return arr;
}

DivisorClass divisor_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_array() || j.size() < 4 || j.size() > 9)
    throw Error(ErrorCode::ParseError, "divisor class must be an array of 4..9 integers");
  Vector<BigInt> c(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].is_string()) {
      const Rational q = parse_rational(j[i].get<std::string>());
      if (denominator(q) != 1) throw Error(ErrorCode::ParseError, "non-integer coefficient");
      c[static_cast<Eigen::Index>(i)] = numerator(q);
    } else if (j[i].is_number_integer()) {
      c[static_cast<Eigen::Index>(i)] = j[i].get<long long>();
    } else {
      throw Error(ErrorCode::ParseError, "coefficient must be an integer or decimal string");
    }
  }
  return DivisorClass(std::move(c));
}

}  // namespace dphlog
