#include "dphlog/wedge.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace dphlog;

namespace {

// Oracle: dense rational Gauss-Jordan nullspace of the matrix whose columns
// are the wedge vectors.
std::vector<std::vector<Rational>> rational_nullspace(const std::vector<WedgeVector>& cols) {
  std::map<TupleKey, int> rows;
  for (const auto& c : cols)
    for (const auto& [k, v] : c.entries) rows.emplace(k, 0);
  int idx = 0;
  for (auto& [k, v] : rows) v = idx++;
  const int m = idx;
  const int n = static_cast<int>(cols.size());
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int j = 0; j < n; ++j)
    for (const auto& [k, v] : cols[j].entries) a[rows[k]][j] = Rational(v);
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int p = row;
    while (p < m && a[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (int i = 0; i < m; ++i)
      if (i != row && a[i][col] != 0) {
        const Rational f = a[i][col];
        for (int j = 0; j < n; ++j) a[i][j] -= f * a[row][j];
      }
    pivots.push_back(col);
    ++row;
  }
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rational> v(static_cast<std::size_t>(n));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
    basis.push_back(v);
  }
  return basis;
}

long long leibniz_det(const std::vector<std::vector<int>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  long long total = 0;
  do {
    int sign = 1;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[i] > p[j]) sign = -sign;
    long long prod = sign;
    for (int i = 0; i < n; ++i) prod *= m[i][p[i]];
    total += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace

TEST_CASE("kernel agrees with a dense rational nullspace for r = 4, 5") {
  for (int r = 4; r <= 5; ++r) {
    const auto cert = kernel_signs(r);
    const auto lt = enumerate_lines(r);
    const auto cols = certificate_vectors(lt, cert.fiber_orders, cert.bases, false);
    const auto basis = rational_nullspace(cols);
    REQUIRE(basis.size() == 1);
    CHECK(cert.kernel_dimension == 1);
    const Rational scale = basis[0][0];
    REQUIRE(scale != 0);
    for (std::size_t k = 0; k < cols.size(); ++k) CHECK(basis[0][k] / scale == cert.epsilon[k]);
  }
}

TEST_CASE("wedge vector entries are maximal minors") {
  const auto lt = enumerate_lines(5);
  const auto conics = enumerate_conics(5, lt);
  const auto m = fiber_differences(conics[3], lt.size(), 0, 3);
  REQUIRE(m.rows.size() == 3);
  const auto w = wedge_vector(m);
  CHECK(w.arity == 3);
  std::size_t nonzero = 0;
  const auto& s = m.support;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      for (std::size_t c = b + 1; c < s.size(); ++c) {
        std::vector<std::vector<int>> minor(3, std::vector<int>(3));
        for (int i = 0; i < 3; ++i) minor[i] = {m.rows[i][s[a]], m.rows[i][s[b]], m.rows[i][s[c]]};
        const long long d = leibniz_det(minor);
        if (d == 0) continue;
        ++nonzero;
        TupleKey key;
        key.fill(0xff);
        key[0] = static_cast<std::uint8_t>(s[a]);
        key[1] = static_cast<std::uint8_t>(s[b]);
        key[2] = static_cast<std::uint8_t>(s[c]);
        REQUIRE(w.entries.count(key) == 1);
        CHECK(w.entries.at(key) == d);
      }
  CHECK(nonzero == w.entries.size());
}

TEST_CASE("randomized and quotient certificates agree up to sign") {
  for (int r = 4; r <= 6; ++r) {
    const auto base = kernel_signs(r);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      KernelOptions opts;
      opts.randomize = true;
      opts.seed = seed;
      opts.quotient = seed == 2;
      const auto cert = kernel_signs(r, opts);
      CHECK(cert.kernel_dimension == 1);
      for (int e : cert.epsilon) CHECK((e == 1 || e == -1));
      // Reordering fibres or moving the base can flip whole columns; the
      // kernel line itself must still replay.
      CHECK(replay_certificate(cert).ok());
    }
    CHECK(base.epsilon[0] == 1);
  }
}

TEST_CASE("certificate json round trip and tamper detection") {
  const auto cert = kernel_signs(5);
  const auto j = to_json(cert);
  const auto back = certificate_from_json(j);
  CHECK(back.epsilon == cert.epsilon);
  CHECK(back.content_hash == cert.content_hash);
  CHECK(certificate_hash(back) == cert.content_hash);
  CHECK(replay_certificate(back).ok());
  CHECK(to_json(back).dump() == j.dump());

  auto flipped = back;
  flipped.epsilon[2] = -flipped.epsilon[2];
  const auto rep = replay_certificate(flipped);
  CHECK_FALSE(rep.vanishes);
  CHECK_FALSE(rep.hash_matches);
  CHECK_FALSE(combination_vanishes(certificate_vectors(enumerate_lines(5), back.fiber_orders, back.bases, false),
                                   flipped.epsilon));
}

TEST_CASE("rank guards") {
  CHECK_THROWS_AS(kernel_signs(3), Error);
  CHECK_THROWS_AS(kernel_signs(8), Error);
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}
