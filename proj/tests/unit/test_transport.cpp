#include "dphlog/transport.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace dphlog;

namespace {

// Composite 10-point Gauss-Legendre on [a, b] with `panels` panels.
template <typename F>
Complex gauss(F&& f, double a, double b, int panels) {
  static const double x[] = {0.1488743389816312, 0.4333953941292472, 0.6794095682990244, 0.8650633666889845,
                             0.9739065285171717};
  static const double w[] = {0.2955242247147529, 0.2692667193099963, 0.2190863625159820, 0.1494513491505806,
                             0.0666713443086881};
  Complex total = 0;
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    for (int k = 0; k < 5; ++k) {
      total += w[k] * (f(mid - 0.5 * h * x[k]) + f(mid + 0.5 * h * x[k]));
    }
  }
  return 0.5 * h * total;
}

}  // namespace

TEST_CASE("word (01) against nested Gauss-Legendre") {
  const Complex b0(0.0, 0.0), b1(1.0, 0.0);
  const Complex z0(0.3, 0.4), z1(1.7, -0.6);
  const LogFormBasis basis{{b0, b1}};
  const auto ev = evaluate_words(basis, z0, z1, 2);
  const Complex dz = z1 - z0;
  auto f = [&](const Complex& b, double t) { return dz / (z0 + t * dz - b); };
  // L_(01) = int_0^1 f_0(t) int_0^t f_1(s) ds dt: the first letter is outermost.
  const Complex oracle = gauss([&](double t) { return f(b0, t) * gauss([&](double s) { return f(b1, s); }, 0, t, 64); },
                               0, 1, 64);
  CHECK(std::abs(ev.value(Word{0, 1}) - oracle) < 1e-11);
  CHECK(std::abs(ev.value(Word{0}) - std::log((z1 - b0) / (z0 - b0))) < 1e-13);
  CHECK(std::abs(ev.value(Word{}) - 1.0) == 0);
  // Shuffle: L_0 L_1 = L_01 + L_10.
  CHECK(std::abs(ev.value(Word{0}) * ev.value(Word{1}) - ev.value(shuffle(Word{0}, Word{1}))) < 1e-12);
}

TEST_CASE("weight-3 antisymmetric value from lower weight") {
  const LogFormBasis basis{{Complex(0, 0), Complex(1, 0), Complex(-1, 2)}};
  const auto ev = evaluate_words(basis, Complex(0.4, -0.3), Complex(2.1, 0.9), 3);
  const Complex direct = antisymmetric_value(ev, {0, 1, 2});
  CHECK(std::abs(direct - ai3_from_lower_weight(ev)) < 1e-12 * std::max(1.0, std::abs(direct)));
  CHECK(std::abs(antisymmetric_value(ev, {0, 1, 2}) + antisymmetric_value(ev, {1, 0, 2})) < 1e-14);
}

TEST_CASE("shuffle numeric consistency on random word pairs") {
  std::mt19937_64 rng(21);
  const LogFormBasis basis{{Complex(0, 0), Complex(1, 0), Complex(0.5, 1.5)}};
  const auto ev = evaluate_words(basis, Complex(-0.5, -0.5), Complex(1.5, 0.4), 4);
  for (int trial = 0; trial < 50; ++trial) {
    Word u(1 + rng() % 2), v(1 + rng() % 2);
    for (auto& l : u) l = static_cast<int>(rng() % 3);
    for (auto& l : v) l = static_cast<int>(rng() % 3);
    const Complex lhs = ev.value(u) * ev.value(v);
    const Complex rhs = ev.value(shuffle(u, v));
    CHECK(std::abs(lhs - rhs) <= 100 * ev.error + 1e-13);
  }
}

TEST_CASE("residual shrinks as the tolerance tightens") {
  const LogFormBasis basis{{Complex(0, 0), Complex(1, 0)}};
  const Complex z0(0.2, 0.05), z1(0.9, -0.02);
  const auto ref = evaluate_words(basis, z0, z1, 2, {1e-14, 1e-3, 4, 20});
  double last = 1e300;
  for (double tol : {1e-4, 1e-7, 1e-10}) {
    TransportOptions o;
    o.tol = tol;
    o.initial_steps = 1;
    const auto ev = evaluate_words(basis, z0, z1, 2, o);
    const double err = std::abs(ev.value(Word{0, 1}) - ref.value(Word{0, 1}));
    CHECK(err <= last * 1.01 + 1e-15);
    CHECK(err < 50 * tol);
    last = err;
  }
}

TEST_CASE("paths near a branch point are refused") {
  const LogFormBasis basis{{Complex(0, 0), Complex(1, 0)}};
  CHECK_THROWS_AS(evaluate_words(basis, Complex(-1, 0), Complex(0.5, 0), 2), Error);
  CHECK_NOTHROW(evaluate_words(basis, Complex(-1, 0.1), Complex(0.5, 0.1), 2));
}

TEST_CASE("Abel's identity numerically and a dropped term") {
  const auto web = abel_web();
  const auto eps = translate_signs(web, kernel_signs(4));
  const auto rep = verify_identity_numeric(web, eps, 5, 1e-8, 3);
  CHECK(rep.pass);
  CHECK(rep.samples.size() == 5);
  for (const auto& s : rep.samples) CHECK(s.error_budget > 0);
  const auto dropped = verify_identity_numeric(web, eps, 3, 1e-8, 3, {}, 2);
  CHECK_FALSE(dropped.pass);
  const auto same = verify_identity_numeric(web, eps, 5, 1e-8, 3);
  CHECK(same.max_relative_residual == rep.max_relative_residual);
}
