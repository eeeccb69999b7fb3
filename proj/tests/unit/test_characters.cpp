#include "dphlog/characters.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

using namespace dphlog;

namespace {

int sign_of(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

// Oracle: trace on the m-th exterior power is the signed count of invariant
// m-subsets, the sign being that of g restricted to the subset.
long long exterior_by_subsets(PermView g, int m) {
  const int n = static_cast<int>(g.size());
  long long total = 0;
  std::vector<int> idx(static_cast<std::size_t>(m));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == m) {
      std::vector<int> image;
      for (int i : idx) image.push_back(g[i]);
      std::vector<int> pos;
      for (int v : image) {
        auto it = std::find(idx.begin(), idx.end(), v);
        if (it == idx.end()) return;
        pos.push_back(static_cast<int>(it - idx.begin()));
      }
      total += sign_of(pos);
      return;
    }
    for (int i = start; i < n; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return total;
}

}  // namespace

TEST_CASE("exterior powers from power sums match invariant subsets") {
  const auto lt = enumerate_lines(5);
  const auto group = WeylGroup::enumerate(5, lt);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = group.perm(rng() % group.size());
    const auto p = power_sums(g, 3);
    for (int m = 1; m <= 3; ++m) CHECK(exterior_power_value(p, m) == exterior_by_subsets(g, m));
    CHECK(p[0] == fixed_points(g, 1));
  }
}

TEST_CASE("class function inner products") {
  const auto lt = enumerate_lines(4);
  const auto conics = enumerate_conics(4, lt);
  const auto group = WeylGroup::enumerate(4, lt);
  const CharacterContext ctx{group, lt, conics, 2};
  const auto chi = line_character(ctx);
  const auto one = trivial_character(ctx);
  const auto refl = reflection_character(ctx);
  const auto sgn = sign_character(ctx);
  const auto w2 = exterior_character(ctx, 2);
  CHECK(inner_product(one, one) == 1);
  CHECK(inner_product(sgn, sgn) == 1);
  CHECK(inner_product(one, sgn) == 0);
  CHECK(inner_product(refl, refl) == 1);
  CHECK(refl.values[0] == 4);
  CHECK(w2.values[0] == 45);

  const auto s = summarize_characters(ctx);
  CHECK(s.line_trivial == inner_product(chi, one));
  CHECK(s.line_reflection == inner_product(chi, refl));
  CHECK(s.line_norm == inner_product(chi, chi));
  CHECK(s.conic_norm == inner_product(conic_character(ctx), conic_character(ctx)));
  CHECK(s.signature == inner_product(w2, sgn));
  CHECK(s.signature == signature_multiplicity(ctx));
  CHECK(signature_multiplicity(4, 1) == 0);

  ClassFunction other = chi;
  other.values.pop_back();
  CHECK_THROWS_AS(inner_product(chi, other), Error);
}

TEST_CASE("W(D5) table is orthonormal with the derived class sizes") {
  const auto& t = D5CharacterTable::get();
  long long total = 0;
  for (auto c : t.class_sizes) total += c;
  CHECK(total == 1920);
  for (int a = 0; a < 18; ++a)
    for (int b = 0; b < 18; ++b) {
      long long s = 0;
      for (int c = 0; c < 18; ++c) s += t.class_sizes[c] * t.values[a][c] * t.values[b][c];
      CHECK(s == (a == b ? 1920 : 0));
    }
  // Every irreducible decomposes as itself.
  for (int a = 0; a < 18; ++a) {
    std::array<long long, 18> row{};
    for (int c = 0; c < 18; ++c) row[c] = t.values[a][c];
    const auto mult = d5_decompose(row);
    for (int b = 0; b < 18; ++b) CHECK(mult[b] == (a == b ? 1 : 0));
    CHECK(d5_compose(mult) == row);
  }
  std::array<long long, 18> bad{};
  bad[0] = 1;
  CHECK_THROWS_AS(d5_decompose(bad), Error);
}

TEST_CASE("D5 report is internally consistent") {
  const auto lt = enumerate_lines(5);
  const auto conics = enumerate_conics(5, lt);
  const auto group = WeylGroup::enumerate(5, lt);
  const auto rep = d5_report(lt, conics, &group);
  CHECK(rep.classes_partition_group);
  const auto& t = D5CharacterTable::get();
  for (int c = 0; c < 18; ++c) CHECK(rep.measured_class_sizes[c] == t.class_sizes[c]);
  CHECK(d5_compose(rep.chi_mult) == rep.chi);
  CHECK(d5_compose(rep.wedge3_mult) == rep.wedge3);
  CHECK(d5_compose(rep.conic_mult) == rep.conic);
  CHECK(rep.chi[0] == 16);
  CHECK(rep.conic[0] == 10);
}
