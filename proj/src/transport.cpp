#include "dphlog/transport.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace dphlog {

namespace {

constexpr int kStages = 5;

struct Tableau {
  std::array<double, kStages> c{};
  std::array<double, kStages> b{};
  std::array<std::array<double, kStages>, kStages> a{};
};

/// Gauss-Legendre collocation coefficients on [0, 1]; a_ij integrates the
/// j-th Lagrange basis polynomial from 0 to c_i.
const Tableau& gauss_legendre5() {
  static const Tableau t = [] {
    Tableau out;
    const std::array<double, kStages> x = {-0.9061798459386639927976269, -0.5384693101056830910363144, 0.0,
                                           0.5384693101056830910363144, 0.9061798459386639927976269};
    const std::array<double, kStages> w = {0.2369268850561890875142640, 0.4786286704993664680412915,
                                           0.5688888888888888888888889, 0.4786286704993664680412915,
                                           0.2369268850561890875142640};
    for (int i = 0; i < kStages; ++i) {
      out.c[i] = 0.5 * (1.0 + x[i]);
      out.b[i] = 0.5 * w[i];
    }
    // Monomial coefficients of each Lagrange polynomial from the Vandermonde system.
    Eigen::Matrix<long double, kStages, kStages> V;
    for (int i = 0; i < kStages; ++i)
      for (int k = 0; k < kStages; ++k) V(i, k) = std::pow(static_cast<long double>(out.c[i]), k);
    const Eigen::Matrix<long double, kStages, kStages> coeffs = V.inverse();  // column j: basis j
    for (int i = 0; i < kStages; ++i)
      for (int j = 0; j < kStages; ++j) {
        long double s = 0;
        for (int k = 0; k < kStages; ++k)
          s += coeffs(k, j) * std::pow(static_cast<long double>(out.c[i]), k + 1) / (k + 1);
        out.a[i][j] = static_cast<double>(s);
      }
    return out;
  }();
  return t;
}

struct WordIndex {
  int letters;
  int max_weight;
  std::vector<Word> words;
  std::vector<int> parent;
  std::vector<int> first;
  std::vector<std::size_t> offset;

  WordIndex(int s, int w) : letters(s), max_weight(w) {
    std::size_t count = 1;
    offset.push_back(0);
    for (int len = 1; len <= w; ++len) {
      offset.push_back(offset.back() + count);
      count *= static_cast<std::size_t>(s);
    }
    offset.push_back(offset.back() + count);
    words.emplace_back();
    parent.push_back(-1);
    first.push_back(-1);
    for (int len = 1; len <= w; ++len) {
      const std::size_t begin = offset[len - 1];
      const std::size_t end = offset[len];
      // Words of length len in lexicographic order: first letter, then tail.
      for (int a = 0; a < s; ++a)
        for (std::size_t t = begin; t < end; ++t) {
          Word word{a};
          word.insert(word.end(), words[t].begin(), words[t].end());
          words.push_back(std::move(word));
          parent.push_back(static_cast<int>(t));
          first.push_back(a);
        }
    }
  }

  [[nodiscard]] std::size_t index(const Word& w) const {
    if (static_cast<int>(w.size()) > max_weight) throw Error(ErrorCode::IndexError, "word longer than max weight");
    std::size_t idx = 0;
    for (int l : w) {
      if (l < 0 || l >= letters) throw Error(ErrorCode::IndexError, "letter out of range");
      idx = idx * static_cast<std::size_t>(letters) + static_cast<std::size_t>(l);
    }
    return offset[w.size()] + idx;
  }
};

std::vector<Complex> integrate(const WordIndex& wi, const FormSampler& forms, int steps) {
  const auto& tab = gauss_legendre5();
  const std::size_t n = wi.words.size();
  std::vector<Complex> y(n, Complex(0));
  y[0] = 1;
  std::array<std::vector<Complex>, kStages> f, Y, K;
  for (int i = 0; i < kStages; ++i) {
    f[i].resize(static_cast<std::size_t>(wi.letters));
    Y[i].resize(n);
    K[i].resize(n);
  }
  const double h = 1.0 / steps;
  auto rhs = [&](int i) {
    K[i][0] = 0;
    for (std::size_t w = 1; w < n; ++w) K[i][w] = f[i][wi.first[w]] * Y[i][wi.parent[w]];
  };
  for (int step = 0; step < steps; ++step) {
    const double t0 = step * h;
    for (int i = 0; i < kStages; ++i) {
      forms(t0 + tab.c[i] * h, f[i]);
      Y[i] = y;
    }
    // The system is nilpotent in word length: max_weight + 1 sweeps solve the
    // collocation equations exactly.
    for (int it = 0; it <= wi.max_weight; ++it) {
      for (int i = 0; i < kStages; ++i) rhs(i);
      for (int i = 0; i < kStages; ++i)
        for (std::size_t w = 0; w < n; ++w) {
          Complex acc = 0;
          for (int j = 0; j < kStages; ++j) acc += tab.a[i][j] * K[j][w];
          Y[i][w] = y[w] + h * acc;
        }
    }
    for (int i = 0; i < kStages; ++i) rhs(i);
    for (std::size_t w = 0; w < n; ++w) {
      Complex acc = 0;
      for (int j = 0; j < kStages; ++j) acc += tab.b[j] * K[j][w];
      y[w] += h * acc;
    }
  }
  return y;
}

int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

}  // namespace

Complex PathEvaluation::value(const Word& w) const {
  const WordIndex wi(letters, max_weight);
  return values.at(wi.index(w));
}

Complex PathEvaluation::value(const WordCombination& c) const {
  const WordIndex wi(letters, max_weight);
  Complex s = 0;
  for (const auto& [w, q] : c.terms()) s += q.convert_to<double>() * values.at(wi.index(w));
  return s;
}

PathEvaluation transport_words(int letters, int max_weight, const FormSampler& forms, const TransportOptions& opts) {
  if (letters < 1 || max_weight < 0 || max_weight > 6)
    throw Error(ErrorCode::IndexError, "unsupported word system size");
  const WordIndex wi(letters, max_weight);
  int steps = std::max(1, opts.initial_steps);
  auto coarse = integrate(wi, forms, steps);
  for (int d = 0; d < opts.max_doublings; ++d) {
    auto fine = integrate(wi, forms, 2 * steps);
    double diff = 0;
    double scale = 1;
    for (std::size_t i = 0; i < fine.size(); ++i) {
      diff = std::max(diff, std::abs(fine[i] - coarse[i]));
      scale = std::max(scale, std::abs(fine[i]));
    }
    // Roundoff grows with the number of steps; never ask for less than that.
    const double floor = 1e-15 * scale * std::sqrt(static_cast<double>(2 * steps)) * 8;
    if (diff <= std::max(opts.tol * scale, floor)) {
      PathEvaluation ev;
      ev.letters = letters;
      ev.max_weight = max_weight;
      ev.words = wi.words;
      ev.values = std::move(fine);
      ev.error = std::max(diff, floor);
      ev.steps = 2 * steps;
      return ev;
    }
    coarse = std::move(fine);
    steps *= 2;
  }
  throw Error(ErrorCode::QuadratureFailure, "no convergence after " + std::to_string(steps) + " steps");
}

PathEvaluation evaluate_words(const LogFormBasis& basis, Complex base, Complex end, int max_weight,
                              const TransportOptions& opts) {
  const Complex dir = end - base;
  for (const auto& b : basis.branch) {
    // Distance from b to the segment.
    double t = 0;
    if (std::norm(dir) > 0) t = std::clamp(std::real((b - base) * std::conj(dir)) / std::norm(dir), 0.0, 1.0);
    if (std::abs(base + t * dir - b) < opts.delta)
      throw Error(ErrorCode::PathTooClose, "segment passes within " + std::to_string(opts.delta) + " of a branch point");
  }
  auto ev = transport_words(
      static_cast<int>(basis.branch.size()), max_weight,
      [&](double t, std::vector<Complex>& f) {
        const Complex z = base + t * dir;
        for (std::size_t k = 0; k < basis.branch.size(); ++k) f[k] = dir / (z - basis.branch[k]);
      },
      opts);
  ev.base = base;
  ev.end = end;
  return ev;
}

Complex antisymmetric_value(const PathEvaluation& ev, const Word& letters) {
  std::vector<int> p(letters.size());
  std::iota(p.begin(), p.end(), 0);
  Complex s = 0;
  double count = 0;
  do {
    Word w(letters.size());
    for (std::size_t i = 0; i < letters.size(); ++i) w[i] = letters[p[i]];
    s += static_cast<double>(permutation_sign(p)) * ev.value(w);
    count += 1;
  } while (std::next_permutation(p.begin(), p.end()));
  return s / count;
}

Complex ai3_from_lower_weight(const PathEvaluation& ev) {
  const Complex a = ev.value(Word{0}) * antisymmetric_value(ev, Word{1, 2});
  const Complex b = ev.value(Word{1}) * antisymmetric_value(ev, Word{0, 2});
  const Complex c = ev.value(Word{2}) * antisymmetric_value(ev, Word{0, 1});
  return (a - b + c) / 3.0;
}

NumericReport verify_identity_numeric(const PlanarWeb& web, const std::vector<int>& eps, int samples, double tol,
                                      std::uint64_t seed, const TransportOptions& opts, std::optional<int> drop) {
  if (static_cast<int>(eps.size()) != web.size()) throw Error(ErrorCode::IndexError, "sign vector length mismatch");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const int s = web.r - 2;
  using D = Dual<Complex>;

  auto spectra = [&](int i) {
    std::vector<Complex> out;
    for (const auto& c : web.spectra[i]) out.emplace_back(c.convert_to<double>(), 0.0);
    return out;
  };

  // Base point with the best clearance from the arrangement and from every
  // fibre over the spectra, among a fixed pool of candidates.
  auto clearance = [&](double x, double y) {
    double worst = 1.0;
    for (const auto& f : web.factors) worst = std::min(worst, std::abs(f.eval(Complex(x), Complex(y))));
    for (int i = 0; i < web.size(); ++i) {
      const Complex u = eval_first_integral(web, i, Complex(x), Complex(y));
      if (!std::isfinite(std::abs(u))) return 0.0;
      worst = std::min(worst, 1.0 / std::max(1.0, std::abs(u)));
      for (const auto& c : spectra(i)) worst = std::min(worst, std::abs(u - c) / std::max(1.0, std::abs(c)));
    }
    return worst;
  };
  std::array<double, 2> base{};
  double best = -1;
  for (int n = 0; n < 4000; ++n) {
    const double x = 3 * unit(rng), y = 3 * unit(rng);
    if (const double c = clearance(x, y); c > best) {
      best = c;
      base = {x, y};
    }
  }
  if (best < 1e-2) throw Error(ErrorCode::PathTooClose, "no base point with clearance found");

  NumericReport rep;
  rep.r = web.r;
  rep.base = base;
  rep.epsilon = eps;
  rep.tol = tol;
  Word letters(static_cast<std::size_t>(s));
  std::iota(letters.begin(), letters.end(), 0);

  for (int n = 0; n < samples; ++n) {
    for (int attempt = 0;; ++attempt) {
      const double radius = std::min(0.2, best);
      const std::array<Complex, 2> dir = {Complex(radius * unit(rng), radius * unit(rng)),
                                          Complex(radius * unit(rng), radius * unit(rng))};
      try {
        NumericSample sample;
        sample.point = {Complex(base[0]) + dir[0], Complex(base[1]) + dir[1]};
        Complex total = 0;
        for (int i = 0; i < web.size(); ++i) {
          const auto bs = spectra(i);
          auto ev = transport_words(
              s, s,
              [&](double t, std::vector<Complex>& f) {
                const D x(Complex(base[0]) + t * dir[0], dir[0]);
                const D y(Complex(base[1]) + t * dir[1], dir[1]);
                const D u = eval_first_integral(web, i, x, y);
                if (!std::isfinite(std::abs(u.v)) || std::abs(u.v) > 1.0 / opts.delta)
                  throw Error(ErrorCode::PathTooClose, "path meets a pole of a first integral");
                for (int k = 0; k < s; ++k) {
                  if (std::abs(u.v - bs[k]) < opts.delta)
                    throw Error(ErrorCode::PathTooClose, "image path meets a spectral point");
                  f[k] = u.d / (u.v - bs[k]);
                }
              },
              opts);
          const Complex ai = antisymmetric_value(ev, letters);
          sample.scale = std::max(sample.scale, std::abs(ai));
          sample.error_budget += ev.error;
          if (!drop || *drop != i) total += static_cast<double>(eps[i]) * ai;
        }
        sample.residual = std::abs(total);
        rep.samples.push_back(sample);
        break;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::PathTooClose || attempt > 200) throw;
      }
    }
  }
  for (const auto& smp : rep.samples)
    rep.max_relative_residual = std::max(rep.max_relative_residual, smp.residual / std::max(smp.scale, 1e-300));
  rep.pass = rep.max_relative_residual < tol;
  return rep;
}

}  // namespace dphlog
