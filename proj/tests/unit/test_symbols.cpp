#include "dphlog/symbols.hpp"

#include <doctest.h>

#include <random>

using namespace dphlog;

namespace {

Rational binom(int n, int k) {
  Rational b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

TEST_CASE("shuffle of small words") {
  const auto s = shuffle(Word{0}, Word{1});
  CHECK(s.size() == 2);
  CHECK(s.coefficient({0, 1}) == 1);
  CHECK(s.coefficient({1, 0}) == 1);
  const auto t = shuffle(Word{0}, Word{0});
  CHECK(t.coefficient({0, 0}) == 2);
  CHECK(shuffle(Word{}, Word{2, 1}) == WordCombination(Word{2, 1}));
}

TEST_CASE("shuffle is commutative, associative and has binomial mass") {
  std::mt19937_64 rng(5);
  auto word = [&] {
    Word w(rng() % 4);
    for (auto& l : w) l = static_cast<int>(rng() % 3);
    return w;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const Word u = word(), v = word(), w = word();
    CHECK(shuffle(u, v) == shuffle(v, u));
    CHECK(shuffle(shuffle(u, v), WordCombination(w)) == shuffle(WordCombination(u), shuffle(v, w)));
    CHECK(shuffle(u, v).mass() == binom(static_cast<int>(u.size() + v.size()), static_cast<int>(u.size())));
  }
}

TEST_CASE("constant forms give a shuffle character") {
  const auto check = shuffle_homomorphism_check(150, 4, 9);
  CHECK(check.pairs == 150);
  CHECK(check.failures == 0);
  CHECK(constant_form_integral({0, 1}, {Rational(2), Rational(3)}) == 3);
}

TEST_CASE("asym and sym") {
  const auto a = asym(Word{0, 1});
  CHECK(a.coefficient({0, 1}) == Rational(1, 2));
  CHECK(a.coefficient({1, 0}) == Rational(-1, 2));
  CHECK(asym(Word{0, 0}).is_zero());
  CHECK(sym(Word{0, 1, 2}).size() == 6);
  CHECK(asym(asym(Word{0, 1, 2})) == asym(Word{0, 1, 2}));
  // Relabelling by a transposition flips the sign of an antisymmetrization.
  CHECK(asym(Word{0, 1, 2}).relabel({1, 0, 2}) == Rational(-1) * asym(Word{0, 1, 2}));
}

TEST_CASE("the three Asym-versus-shuffle identities hold exactly") {
  const auto ids = verify_asym_shuffle_identities();
  REQUIRE(ids.size() == 3);
  for (const auto& id : ids) {
    INFO(id.name);
    CHECK(id.holds);
    CHECK(id.difference.is_zero());
  }
}

TEST_CASE("asym_tensor expands multilinearly") {
  const FormVector e0 = {1, 0, 0}, e1 = {0, 1, 0}, e2 = {0, 0, 1};
  CHECK(asym_tensor({e0, e1, e2}) == asym(Word{0, 1, 2}));
  const FormVector v = {1, 1, 0};
  CHECK(asym_tensor({v, e1}) == asym(Word{0, 1}));
  CHECK(asym_tensor({v, v}).is_zero());
}
