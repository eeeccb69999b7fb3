#include "dphlog/incidence.hpp"

#include <doctest.h>

#include <functional>
#include <set>

using namespace dphlog;

namespace {

// Brute force over a box of coefficients: h-degree 0..3, l-coefficients -2..1.
std::pair<int, int> brute_force_counts(int r) {
  int lines = 0;
  int conics = 0;
  std::vector<long> c(static_cast<std::size_t>(r + 1));
  std::function<void(int)> rec = [&](int i) {
    if (i > r) {
      long self = c[0] * c[0];
      long k = -3 * c[0];
      for (int j = 1; j <= r; ++j) {
        self -= c[j] * c[j];
        k -= c[j];
      }
      if (self == -1 && k == -1) ++lines;
      if (self == 0 && k == -2) ++conics;
      return;
    }
    const long lo = i == 0 ? 0 : -2;
    const long hi = i == 0 ? 3 : 1;
    for (long v = lo; v <= hi; ++v) {
      c[static_cast<std::size_t>(i)] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return {lines, conics};
}

}  // namespace

TEST_CASE("counts match a brute-force search for r <= 6") {
  for (int r = 3; r <= 6; ++r) {
    const auto [lines, conics] = brute_force_counts(r);
    CHECK(enumerate_lines(r).size() == lines);
    CHECK(static_cast<int>(enumerate_conics(r).size()) == conics);
  }
}

TEST_CASE("published counts") {
  const int lines[] = {6, 10, 16, 27, 56, 240};
  const int conics[] = {3, 5, 10, 27, 126, 2160};
  for (int r = 3; r <= 8; ++r) {
    CHECK(line_count(r) == lines[r - 3]);
    CHECK(conic_count(r) == conics[r - 3]);
  }
}

TEST_CASE("every fibration has r - 1 transverse line pairs") {
  for (int r = 3; r <= 7; ++r) {
    const auto lt = enumerate_lines(r);
    const auto conics = enumerate_conics(r, lt);
    std::set<int> seen;
    for (const auto& f : conics) {
      CHECK(is_conic_class(f.cls));
      REQUIRE(static_cast<int>(f.fibers.size()) == r - 1);
      for (auto [a, b] : f.fibers) {
        CHECK(a < b);
        CHECK(pair(lt.lines[a], lt.lines[b]) == 1);
        CHECK(lt.lines[a] + lt.lines[b] == f.cls);
        seen.insert(a);
        seen.insert(b);
      }
      // Distinct fibres of one pencil are disjoint.
      for (std::size_t i = 0; i < f.fibers.size(); ++i)
        for (std::size_t j = i + 1; j < f.fibers.size(); ++j) {
          const auto [a, b] = f.fibers[i];
          const auto [c, d] = f.fibers[j];
          CHECK(pair(lt.lines[a] + lt.lines[b], lt.lines[c]) == 0);
          CHECK(pair(lt.lines[a] + lt.lines[b], lt.lines[d]) == 0);
        }
    }
    CHECK(static_cast<int>(seen.size()) == lt.size());
  }
}

TEST_CASE("canonical order and lookup") {
  const auto lt = enumerate_lines(6);
  for (int i = 0; i + 1 < lt.size(); ++i) CHECK(lt.lines[i] < lt.lines[i + 1]);
  for (int i = 0; i < lt.size(); ++i) CHECK(lt.find(lt.lines[i]) == i);
  CHECK(lt.find(DivisorClass::hyperplane(6)) == -1);
  int exceptional = 0;
  for (int i = 0; i < lt.size(); ++i) exceptional += lt.is_exceptional(i);
  CHECK(exceptional == 6);
  const auto conics = enumerate_conics(6, lt);
  CHECK(find_conic(conics, DivisorClass::hyperplane(6) - DivisorClass::exceptional(6, 3)) >= 0);
  CHECK(find_conic(conics, DivisorClass::hyperplane(6)) == -1);
}

TEST_CASE("reducible_fibers rejects non-conics") {
  const auto lt = enumerate_lines(5);
  CHECK_THROWS_AS(reducible_fibers(DivisorClass::hyperplane(5), lt), Error);
}
