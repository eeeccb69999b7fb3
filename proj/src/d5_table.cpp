#include "dphlog/d5_table.hpp"

namespace dphlog {

namespace {

D5CharacterTable build() {
  D5CharacterTable t;
  t.row_labels = {"[1^2.1^3]", "[1.1^4]", "[.1^5]", "[1^3.2]", "[1^2.21]", "[1.21^2]",
                  "[.21^3]",   "[1.2^2]", "[2.21]", "[.2^21]", "[1^2.3]",  "[1.31]",
                  "[.31^2]",   "[2.3]",   "[.32]",  "[1.4]",   "[.41]",    "[.5]"};
  t.class_labels = {"(1^5.)", "(1^3.1^2)", "(1.1^4)", "(21^3.)", "(1^2.21)", "(21.1^2)",
                    "(.21^3)", "(221.)",   "(1.22)",  "(2.21)",  "(311.)",   "(1.31)",
                    "(3.11)", "(32.)",     "(.32)",   "(41.)",   "(.41)",    "(5.)"};
  t.values = {{
      {10, -2, 2, -4, 2, 0, -2, 2, -2, 0, 1, -1, 1, -1, 1, 0, 0, 0},
      {5, 1, -3, -3, -1, 1, 3, 1, 1, -1, 2, 0, -2, 0, 0, -1, 1, 0},
      {1, 1, 1, -1, -1, -1, -1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, 1},
      {10, -2, 2, -2, 0, 2, -4, -2, 2, 0, 1, -1, 1, 1, -1, 0, 0, 0},
      {20, -4, 4, -2, 2, -2, 2, 0, 0, 0, -1, 1, -1, 1, -1, 0, 0, 0},
      {15, 3, -9, -3, -1, 1, 3, -1, -1, 1, 0, 0, 0, 0, 0, 1, -1, 0},
      {4, 4, 4, -2, -2, -2, -2, 0, 0, 0, 1, 1, 1, 1, 1, 0, 0, -1},
      {10, 2, -6, 0, 0, 0, 0, 2, 2, -2, -2, 0, 2, 0, 0, 0, 0, 0},
      {20, -4, 4, 2, -2, 2, -2, 0, 0, 0, -1, 1, -1, -1, 1, 0, 0, 0},
      {5, 5, 5, -1, -1, -1, -1, 1, 1, 1, -1, -1, -1, -1, -1, 1, 1, 0},
      {10, -2, 2, 2, 0, -2, 4, -2, 2, 0, 1, -1, 1, -1, 1, 0, 0, 0},
      {15, 3, -9, 3, 1, -1, -3, -1, -1, 1, 0, 0, 0, 0, 0, -1, 1, 0},
      {6, 6, 6, 0, 0, 0, 0, -2, -2, -2, 0, 0, 0, 0, 0, 0, 0, 1},
      {10, -2, 2, 4, -2, 0, 2, 2, -2, 0, 1, -1, 1, 1, -1, 0, 0, 0},
      {5, 5, 5, 1, 1, 1, 1, 1, 1, 1, -1, -1, -1, 1, 1, -1, -1, 0},
      {5, 1, -3, 3, 1, -1, -3, 1, 1, -1, 2, 0, -2, 0, 0, 1, -1, 0},
      {4, 4, 4, 2, 2, 2, 2, 0, 0, 0, 1, 1, 1, -1, -1, 0, 0, -1},
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
  }};
  for (int c = 0; c < D5CharacterTable::kSize; ++c) {
    long long centralizer = 0;
    for (int i = 0; i < D5CharacterTable::kSize; ++i)
      centralizer += static_cast<long long>(t.values[i][c]) * t.values[i][c];
    if (D5CharacterTable::kOrder % centralizer != 0)
      throw Error(ErrorCode::InternalError, "D5 column norm does not divide the group order");
    t.class_sizes[c] = D5CharacterTable::kOrder / centralizer;
  }
  return t;
}

}  // namespace

const D5CharacterTable& D5CharacterTable::get() {
  static const D5CharacterTable table = build();
  return table;
}

Rational D5CharacterTable::inner(const std::array<Rational, kSize>& a,
                                 const std::array<Rational, kSize>& b) const {
  Rational sum = 0;
  for (int c = 0; c < kSize; ++c) sum += Rational(class_sizes[c]) * a[c] * b[c];
  return sum / kOrder;
}

std::uint64_t D5CharacterTable::checksum() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& row : values)
    for (int v : row) {
      const auto u = static_cast<std::uint32_t>(v);
      for (int k = 0; k < 4; ++k) h = (h ^ ((u >> (8 * k)) & 0xffU)) * 1099511628211ULL;
    }
  return h;
}

std::array<long long, 18> d5_decompose(const std::array<long long, 18>& values) {
  const auto& t = D5CharacterTable::get();
  std::array<Rational, 18> v;
  for (int c = 0; c < 18; ++c) v[c] = values[c];
  std::array<long long, 18> out{};
  for (int i = 0; i < 18; ++i) {
    std::array<Rational, 18> row;
    for (int c = 0; c < 18; ++c) row[c] = t.values[i][c];
    const Rational m = t.inner(v, row);
    if (denominator(m) != 1)
      throw Error(ErrorCode::NotACharacter,
                  "multiplicity of " + t.row_labels[i] + " is " + format_rational(m));
    out[i] = static_cast<long long>(numerator(m));
  }
  return out;
}

std::array<long long, 18> d5_compose(const std::array<long long, 18>& mult) {
  const auto& t = D5CharacterTable::get();
  std::array<long long, 18> out{};
  for (int i = 0; i < 18; ++i)
    for (int c = 0; c < 18; ++c) out[c] += mult[i] * t.values[i][c];
  return out;
}

std::string d5_format(const std::array<long long, 18>& mult) {
  const auto& t = D5CharacterTable::get();
  std::string out;
  // List from the trivial character upward, matching the usual reading order.
  for (int i = 17; i >= 0; --i) {
    if (mult[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (mult[i] != 1) out += std::to_string(mult[i]);
    out += t.row_labels[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace dphlog
