#include "dphlog/planar_web.hpp"

#include <algorithm>
#include <random>

namespace dphlog {

namespace {

Poly2 linear(const Rational& c0, const Rational& cx, const Rational& cy) {
  Poly2 p;
  p.c = {c0, cx, cy, 0, 0, 0};
  p.degree = 1;
  return p;
}

/// Signed 1-based factor indices to a dense coefficient vector.
std::vector<int> h(std::initializer_list<int> signed_indices, int n) {
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  for (int s : signed_indices) v[std::abs(s) - 1] += s > 0 ? 1 : -1;
  return v;
}

Rational random_rational(std::mt19937_64& rng, int num_bound, int den_bound) {
  const long long num = static_cast<long long>(rng() % (2 * num_bound + 1)) - num_bound;
  const long long den = 1 + static_cast<long long>(rng() % den_bound);
  return Rational(num) / Rational(den);
}

}  // namespace

Rational Poly2::eval_projective(const std::array<Rational, 3>& p) const {
  const Rational& X = p[0];
  const Rational& Y = p[1];
  const Rational& Z = p[2];
  if (degree == 1) return c[0] * Z + c[1] * X + c[2] * Y;
  return c[0] * Z * Z + c[1] * X * Z + c[2] * Y * Z + c[3] * X * X + c[4] * X * Y + c[5] * Y * Y;
}

PlanarWeb abel_web() {
  PlanarWeb w;
  w.model = WebModel::Abel;
  w.r = 4;
  w.points = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  // x, y, x - 1, y - 1, x - y
  w.factors = {linear(0, 1, 0), linear(0, 0, 1), linear(-1, 1, 0), linear(-1, 0, 1), linear(0, 1, -1)};
  w.spectra.assign(5, {Rational(0), Rational(1)});
  const int n = 5;
  w.residues = {
      {h({1}, n), h({3}, n)},
      {h({2}, n), h({4}, n)},
      {h({1, -2}, n), h({5, -2}, n)},
      {h({3, -4}, n), h({5, -4}, n)},
      {h({1, 4, -2, -3}, n), h({5, -2, -3}, n)},
  };
  return w;
}

bool dp4_admissible(const Rational& gamma, const Rational& pi) {
  return pi * gamma * (pi - 1) * (gamma - 1) * (pi - gamma) != 0;
}

PlanarWeb dp4_web(const Rational& g, const Rational& p) {
  if (!dp4_admissible(g, p))
    throw Error(ErrorCode::DegenerateParameters,
                "gamma = " + format_rational(g) + ", pi = " + format_rational(p) + " put three points on a line");
  PlanarWeb w;
  w.model = WebModel::DP4;
  w.r = 5;
  w.gamma = g;
  w.pi = p;
  w.points = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {p, g, 1}};
  Poly2 conic;
  conic.degree = 2;
  conic.c = {0, g * p - g, p - g * p, 0, g - p, 0};
  w.factors = {linear(0, 1, 0),      linear(0, 0, 1),           linear(-g, 0, 1), linear(-1, 1, 0),
               linear(-p, 1, 0),     linear(0, 1, -1),          linear(-1, 0, 1), conic,
               linear(p - g, g - 1, 1 - p), linear(0, g, -p)};
  const std::vector<Rational> rs = {
      p, 1 / g, g / p, (p - g) / (p - 1), g * (p - 1) / (p - g),
      (g - p) / g, 1 / (1 - p), 1 - g, (p - 1) / (g - 1), p * (g - 1) / (g * (p - 1))};
  for (const auto& r : rs) {
    if (r == 0 || r == 1)
      throw Error(ErrorCode::DegenerateParameters, "spectral value " + format_rational(r) + " collides with 0 or 1");
    w.spectra.push_back({Rational(0), Rational(1), r});
  }
  const int n = 10;
  w.residues = {
      {h({1}, n), h({4}, n), h({5}, n)},
      {h({-2}, n), h({7, -2}, n), h({3, -2}, n)},
      {h({-1, 2}, n), h({-1, 6}, n), h({-1, 10}, n)},
      {h({-4, 6}, n), h({7, -4}, n), h({9, -4}, n)},
      {h({-10, 5}, n), h({3, -10}, n), h({9, -10}, n)},
      {h({-3, 9, -4}, n), h({7, -3, -4, 5}, n), h({-3, -4, 8}, n)},
      {h({3, -9, 6, -2}, n), h({7, -9, 10, -2}, n), h({-9, -2, 8}, n)},
      {h({9, 1, -5, -6}, n), h({4, -5, -6, 10}, n), h({-5, -6, 8}, n)},
      {h({-3, -1, 5, 2}, n), h({-3, -1, 10}, n), h({-3, -1, 8}, n)},
      {h({7, 1, -4, -2}, n), h({-4, 6, -2}, n), h({-4, -2, 8}, n)},
  };
  return w;
}

std::pair<Rational, Rational> random_admissible(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  while (true) {
    const Rational g = random_rational(rng, 9, 7);
    const Rational p = random_rational(rng, 9, 7);
    if (!dp4_admissible(g, p)) continue;
    try {
      dp4_web(g, p);
      return {g, p};
    } catch (const Error&) {
      continue;
    }
  }
}

ResidueReport residue_check(const PlanarWeb& web, int trials, std::uint64_t seed, bool strict) {
  ResidueReport rep;
  std::mt19937_64 rng(seed);
  using D = Dual<Rational>;
  const int nf = static_cast<int>(web.factors.size());
  for (int i = 0; i < web.size(); ++i) {
    for (std::size_t s = 0; s < web.spectra[i].size(); ++s) {
      const Rational& c = web.spectra[i][s];
      int done = 0;
      while (done < trials) {
        const Rational x = random_rational(rng, 50, 20);
        const Rational y = random_rational(rng, 50, 20);
        bool off = true;
        for (const auto& f : web.factors) off = off && f.eval(x, y) != 0;
        if (!off) {
          ++rep.resamples;
          continue;
        }
        std::array<Rational, 2> lhs, rhs;
        bool usable = true;
        for (int dir = 0; dir < 2 && usable; ++dir) {
          const D dx(x, dir == 0 ? Rational(1) : Rational(0));
          const D dy(y, dir == 1 ? Rational(1) : Rational(0));
          try {
            const D u = eval_first_integral(web, i, dx, dy);
            if (u.v == c) {
              usable = false;
              break;
            }
            lhs[dir] = u.d / (u.v - c);
          } catch (const std::exception&) {
            usable = false;
            break;
          }
          Rational acc = 0;
          for (int j = 0; j < nf; ++j) {
            const int m = web.residues[i][s][j];
            if (m == 0) continue;
            const D f = web.factors[j].eval(dx, dy);
            acc += Rational(m) * f.d / f.v;
          }
          rhs[dir] = acc;
        }
        if (!usable) {
          ++rep.resamples;
          continue;
        }
        ++rep.checks;
        ++done;
        if (lhs != rhs && rep.ok) {
          rep.ok = false;
          rep.failure = "U_" + std::to_string(i + 1) + " at spectral value " + format_rational(c) + ", point (" +
                        format_rational(x) + ", " + format_rational(y) + ")";
        }
      }
    }
  }
  if (!rep.ok && strict) throw Error(ErrorCode::ResidueMismatch, rep.failure);
  return rep;
}

WordCombination symbolic_sum(const PlanarWeb& web, const std::vector<int>& eps, std::optional<int> drop) {
  WordCombination total;
  for (int i = 0; i < web.size(); ++i) {
    if (drop && *drop == i) continue;
    std::vector<FormVector> factors;
    for (const auto& res : web.residues[i]) {
      FormVector v(res.size());
      for (std::size_t j = 0; j < res.size(); ++j) v[j] = res[j];
      factors.push_back(std::move(v));
    }
    const int sign = eps.empty() ? 1 : eps.at(static_cast<std::size_t>(i));
    total += Rational(sign) * asym_tensor(factors);
  }
  return total;
}

void require_symbolic_identity(const PlanarWeb& web, const std::vector<int>& eps) {
  const auto sum = symbolic_sum(web, eps);
  if (!sum.is_zero())
    throw Error(ErrorCode::SymbolicIdentityViolation, std::to_string(sum.size()) + " nonzero tensor coefficients");
}

std::vector<WebFibration> web_fibrations(const PlanarWeb& web, const LineTable& lt,
                                         const std::vector<ConicFibration>& conics) {
  const int r = web.r;
  if (lt.r != r) throw Error(ErrorCode::RankMismatch, "line table rank differs from the web");
  const int nf = static_cast<int>(web.factors.size());
  // Curves: strict transforms of the factors, the line at infinity, the
  // exceptional lines.
  const int n_curves = nf + 1 + r;
  std::vector<std::vector<int>> through(static_cast<std::size_t>(nf));
  std::vector<int> at_infinity;
  for (int k = 0; k < r; ++k)
    if (web.points[k][2] == 0) at_infinity.push_back(k);
  std::vector<int> curve_line(static_cast<std::size_t>(n_curves));
  for (int j = 0; j < nf; ++j) {
    DivisorClass cls = BigInt(web.factors[j].degree) * DivisorClass::hyperplane(r);
    for (int k = 0; k < r; ++k)
      if (web.factors[j].eval_projective(web.points[k]) == 0) {
        through[j].push_back(k);
        cls -= DivisorClass::exceptional(r, k + 1);
      }
    curve_line[j] = lt.find(cls);
  }
  {
    DivisorClass cls = DivisorClass::hyperplane(r);
    for (int k : at_infinity) cls -= DivisorClass::exceptional(r, k + 1);
    curve_line[nf] = lt.find(cls);
  }
  for (int k = 0; k < r; ++k) curve_line[nf + 1 + k] = lt.find(DivisorClass::exceptional(r, k + 1));
  for (int c = 0; c < n_curves; ++c)
    if (curve_line[c] < 0) throw Error(ErrorCode::InternalError, "a boundary curve of the planar model is not a line");

  auto pair_of = [&](const std::vector<int>& coef, int sign) {
    std::vector<int> picked;
    for (int c = 0; c < n_curves; ++c) {
      if (coef[c] * sign > 0) {
        if (coef[c] * sign != 1) throw Error(ErrorCode::ResidueMismatch, "non-reduced fibre");
        picked.push_back(curve_line[c]);
      }
    }
    if (picked.size() != 2) throw Error(ErrorCode::ResidueMismatch, "fibre is not a pair of lines");
    return LinePair{std::min(picked[0], picked[1]), std::max(picked[0], picked[1])};
  };

  std::vector<WebFibration> out;
  for (int i = 0; i < web.size(); ++i) {
    WebFibration wf;
    std::optional<LinePair> infinity;
    for (const auto& res : web.residues[i]) {
      std::vector<int> coef(static_cast<std::size_t>(n_curves), 0);
      for (int j = 0; j < nf; ++j) {
        const int m = res[j];
        if (m == 0) continue;
        coef[j] += m;
        for (int k : through[j]) coef[nf + 1 + k] += m;
        coef[nf] -= m * web.factors[j].degree;
        for (int k : at_infinity) coef[nf + 1 + k] -= m * web.factors[j].degree;
      }
      wf.fibers.push_back(pair_of(coef, 1));
      const LinePair inf = pair_of(coef, -1);
      if (infinity && *infinity != inf) throw Error(ErrorCode::ResidueMismatch, "inconsistent polar fibre");
      infinity = inf;
    }
    wf.fibers.push_back(*infinity);
    const DivisorClass cls = lt.lines[wf.fibers[0].first] + lt.lines[wf.fibers[0].second];
    for (const auto& [a, b] : wf.fibers)
      if (lt.lines[a] + lt.lines[b] != cls) throw Error(ErrorCode::ResidueMismatch, "fibres of different classes");
    wf.conic = find_conic(conics, cls);
    if (wf.conic < 0) throw Error(ErrorCode::ResidueMismatch, "fibre class is not a conic class");
    out.push_back(std::move(wf));
  }
  return out;
}

std::vector<int> translate_signs(const PlanarWeb& web, const HlogCertificate& cert) {
  if (cert.r != web.r) throw Error(ErrorCode::RankMismatch, "certificate rank differs from the web");
  const auto lt = enumerate_lines(web.r);
  const auto conics = enumerate_conics(web.r, lt);
  const auto fibrations = web_fibrations(web, lt, conics);
  std::vector<int> eps;
  std::vector<bool> used(conics.size(), false);
  for (const auto& wf : fibrations) {
    const auto k = static_cast<std::size_t>(wf.conic);
    if (used[k]) throw Error(ErrorCode::InternalError, "two first integrals share a conic class");
    used[k] = true;
    const int base = static_cast<int>(wf.fibers.size()) - 1;
    const auto vecs = certificate_vectors(lt, {wf.fibers, cert.fiber_orders[k]}, {base, cert.bases[k]}, cert.quotient);
    const auto& omega = vecs[0].entries;
    const auto& varpi = vecs[1].entries;
    if (omega.size() != varpi.size() || omega.empty())
      throw Error(ErrorCode::InternalError, "wedge supports differ");
    int lambda = 0;
    for (auto it = omega.begin(), jt = varpi.begin(); it != omega.end(); ++it, ++jt) {
      if (it->first != jt->first) throw Error(ErrorCode::InternalError, "wedge supports differ");
      const int ratio = it->second == jt->second ? 1 : (it->second == -jt->second ? -1 : 0);
      if (ratio == 0 || (lambda != 0 && ratio != lambda))
        throw Error(ErrorCode::InternalError, "wedges are not proportional by a sign");
      lambda = ratio;
    }
    eps.push_back(cert.epsilon[k] * lambda);
  }
  return eps;
}

}  // namespace dphlog
