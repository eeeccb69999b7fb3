#include "dphlog/characters.hpp"

#include "dphlog/parallel.hpp"

#include <array>

namespace dphlog {

namespace {

std::vector<int> cycle_lengths(PermView g) {
  std::vector<int> lengths;
  std::vector<bool> seen(g.size(), false);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = g[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

ClassFunction sample(const CharacterContext& ctx, Action action, int m,
                     const std::function<long long(std::size_t)>& value) {
  ClassFunction f;
  f.r = ctx.group.rank();
  f.action = action;
  f.degree_param = m;
  f.values.resize(ctx.group.size());
  parallel_chunks(ctx.group.size(), ctx.threads, [&](std::size_t b, std::size_t e, int) {
    for (std::size_t i = b; i < e; ++i) f.values[i] = value(i);
  });
  return f;
}

void require_enumerable(const CharacterContext& ctx) {
  if (ctx.group.size() == 0) throw Error(ErrorCode::InternalError, "empty group");
}

BigInt to_bigint(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  const BigInt high(static_cast<unsigned long long>(u >> 64));
  const BigInt low(static_cast<unsigned long long>(u));
  BigInt out = (high << 64) + low;
  return negative ? BigInt(-out) : out;
}

}  // namespace

long long fixed_points(PermView g, int power) {
  if (power < 1) throw Error(ErrorCode::IndexError, "power must be positive");
  long long total = 0;
  for (int len : cycle_lengths(g))
    if (power % len == 0) total += len;
  return total;
}

std::vector<long long> power_sums(PermView g, int m) {
  std::vector<long long> p(static_cast<std::size_t>(m), 0);
  for (int len : cycle_lengths(g))
    for (int k = len; k <= m; k += len) p[k - 1] += len;
  return p;
}

long long exterior_power_value(const std::vector<long long>& powersums, int m) {
  if (m < 0 || static_cast<std::size_t>(m) > powersums.size())
    throw Error(ErrorCode::IndexError, "need power sums up to " + std::to_string(m));
  std::vector<__int128> e(static_cast<std::size_t>(m) + 1, 0);
  e[0] = 1;
  for (int n = 1; n <= m; ++n) {
    __int128 acc = 0;
    for (int k = 1; k <= n; ++k) {
      const __int128 term = static_cast<__int128>(powersums[k - 1]) * e[n - k];
      acc += (k % 2 == 1) ? term : -term;
    }
    if (acc % n != 0) throw Error(ErrorCode::InternalError, "exterior power value is not integral");
    e[n] = acc / n;
  }
  return static_cast<long long>(e[m]);
}

long long reflection_character_value(PermView g, const LineTable& lt) {
  return pic_matrix(g, lt).trace() - 1;
}

ClassFunction line_character(const CharacterContext& ctx) {
  return sample(ctx, Action::Lines, 1, [&](std::size_t i) { return fixed_points(ctx.group.perm(i), 1); });
}

ClassFunction conic_character(const CharacterContext& ctx) {
  const ConicAction action(ctx.lt, ctx.conics);
  return sample(ctx, Action::Conics, 1,
                [&](std::size_t i) { return static_cast<long long>(action.fixed_count(ctx.group.perm(i))); });
}

ClassFunction reflection_character(const CharacterContext& ctx) {
  return sample(ctx, Action::Reflection, 1,
                [&](std::size_t i) { return reflection_character_value(ctx.group.perm(i), ctx.lt); });
}

ClassFunction exterior_character(const CharacterContext& ctx, int m) {
  return sample(ctx, Action::Exterior, m, [&](std::size_t i) {
    return exterior_power_value(power_sums(ctx.group.perm(i), m), m);
  });
}

ClassFunction sign_character(const CharacterContext& ctx) {
  return sample(ctx, Action::Sign, 1, [&](std::size_t i) { return static_cast<long long>(ctx.group.sign(i)); });
}

ClassFunction trivial_character(const CharacterContext& ctx) {
  return sample(ctx, Action::Trivial, 1, [](std::size_t) { return 1LL; });
}

Rational inner_product(const ClassFunction& chi, const ClassFunction& psi) {
  if (chi.r != psi.r || chi.values.size() != psi.values.size())
    throw Error(ErrorCode::RankMismatch, "class functions sampled on different groups");
  if (chi.values.empty()) throw Error(ErrorCode::InternalError, "empty class function");
  __int128 acc = 0;
  for (std::size_t i = 0; i < chi.values.size(); ++i)
    acc += static_cast<__int128>(chi.values[i]) * psi.values[i];
  const BigInt sum = to_bigint(acc);
  return Rational(sum) / Rational(static_cast<long long>(chi.values.size()));
}

CharacterSummary summarize_characters(const CharacterContext& ctx) {
  require_enumerable(ctx);
  const int r = ctx.group.rank();
  const int m = r - 2;
  const ConicAction action(ctx.lt, ctx.conics);
  enum { kTriv, kRefl, kNorm, kConicNorm, kConicLine, kConicTriv, kReflNorm, kSig, kCount };
  const int workers = std::max(1, ctx.threads);
  std::vector<std::array<long long, kCount>> partial(static_cast<std::size_t>(workers));
  for (auto& p : partial) p.fill(0);
  parallel_chunks(ctx.group.size(), workers, [&](std::size_t b, std::size_t e, int w) {
    auto& acc = partial[static_cast<std::size_t>(w)];
    for (std::size_t i = b; i < e; ++i) {
      const auto g = ctx.group.perm(i);
      const auto p = power_sums(g, std::max(m, 1));
      const long long chi = p[0];
      const long long refl = reflection_character_value(g, ctx.lt);
      const long long conic = action.fixed_count(g);
      acc[kTriv] += chi;
      acc[kRefl] += chi * refl;
      acc[kNorm] += chi * chi;
      acc[kConicNorm] += conic * conic;
      acc[kConicLine] += conic * chi;
      acc[kConicTriv] += conic;
      acc[kReflNorm] += refl * refl;
      acc[kSig] += ctx.group.sign(i) * exterior_power_value(p, m);
    }
  });
  std::array<BigInt, kCount> total;
  for (auto& t : total) t = 0;
  for (const auto& p : partial)
    for (int k = 0; k < kCount; ++k) total[k] += p[k];
  const Rational order(static_cast<long long>(ctx.group.size()));
  CharacterSummary s;
  s.r = r;
  s.order = ctx.group.size();
  s.line_trivial = Rational(total[kTriv]) / order;
  s.line_reflection = Rational(total[kRefl]) / order;
  s.line_norm = Rational(total[kNorm]) / order;
  s.conic_norm = Rational(total[kConicNorm]) / order;
  s.conic_line = Rational(total[kConicLine]) / order;
  s.conic_trivial = Rational(total[kConicTriv]) / order;
  s.reflection_norm = Rational(total[kReflNorm]) / order;
  s.signature = Rational(total[kSig]) / order;
  std::vector<long long> identity(static_cast<std::size_t>(std::max(m, 1)), ctx.lt.size());
  s.wedge_degree = exterior_power_value(identity, m);
  return s;
}

Rational signature_multiplicity(const CharacterContext& ctx) {
  require_enumerable(ctx);
  const int m = ctx.group.rank() - 2;
  const int workers = std::max(1, ctx.threads);
  std::vector<long long> partial(static_cast<std::size_t>(workers), 0);
  parallel_chunks(ctx.group.size(), workers, [&](std::size_t b, std::size_t e, int w) {
    long long acc = 0;
    for (std::size_t i = b; i < e; ++i)
      acc += ctx.group.sign(i) * exterior_power_value(power_sums(ctx.group.perm(i), m), m);
    partial[static_cast<std::size_t>(w)] = acc;
  });
  BigInt total = 0;
  for (long long p : partial) total += p;
  return Rational(total) / Rational(static_cast<long long>(ctx.group.size()));
}

long long signature_multiplicity(int r, int threads) {
  require_rank(r, 4, 8);
  if (r == 8) throw Error(ErrorCode::GroupTooLarge, "W(E8) summation refused");
  const auto lt = enumerate_lines(r);
  const auto conics = enumerate_conics(r, lt);
  const auto group = WeylGroup::enumerate(r, lt);
  const Rational m = signature_multiplicity(CharacterContext{group, lt, conics, threads});
  if (denominator(m) != 1) throw Error(ErrorCode::NotACharacter, "fractional signature multiplicity");
  return static_cast<long long>(numerator(m));
}

D5Report d5_report(const LineTable& lt, const std::vector<ConicFibration>& conics, const WeylGroup* group) {
  if (lt.r != 5) throw Error(ErrorCode::UnsupportedRank, "the D5 table applies to r = 5");
  const auto reps = d5_class_representatives(lt);
  const ConicAction action(lt, conics);
  D5Report out;
  for (int c = 0; c < 18; ++c) {
    const auto p = power_sums(reps[c].perm, 3);
    out.chi[c] = p[0];
    out.wedge3[c] = exterior_power_value(p, 3);
    out.conic[c] = action.fixed_count(reps[c].perm);
  }
  out.chi_mult = d5_decompose(out.chi);
  out.wedge3_mult = d5_decompose(out.wedge3);
  out.conic_mult = d5_decompose(out.conic);
  // The signature character is the row [.1^5].
  out.signature_mult = out.wedge3_mult[2];

  if (group != nullptr) {
    std::vector<int> owner(group->size(), -1);
    bool disjoint = true;
    for (int c = 0; c < 18; ++c) {
      long long size = 0;
      for (std::size_t h = 0; h < group->size(); ++h) {
        const auto hp = group->perm(h);
        const auto conj = compose(hp, compose(reps[c].perm, inverse(hp)));
        const std::size_t idx = group->find(conj);
        if (idx == group->size()) throw Error(ErrorCode::InternalError, "conjugate outside the group");
        if (owner[idx] == -1) {
          owner[idx] = c;
          ++size;
        } else if (owner[idx] != c) {
          disjoint = false;
        }
      }
      out.measured_class_sizes.push_back(size);
    }
    bool covered = true;
    for (int o : owner) covered = covered && o >= 0;
    out.classes_partition_group = disjoint && covered;
  }
  return out;
}

}  // namespace dphlog
