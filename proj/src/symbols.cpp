#include "dphlog/symbols.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace dphlog {

namespace {

int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

WordCombination symmetrize(const Word& w, bool signed_sum) {
  WordCombination out;
  std::vector<int> p(w.size());
  std::iota(p.begin(), p.end(), 0);
  const Rational scale = Rational(1) / factorial(static_cast<int>(w.size()));
  do {
    Word permuted(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) permuted[i] = w[p[i]];
    out.add(permuted, signed_sum ? Rational(permutation_sign(p)) * scale : scale);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void shuffle_into(const Word& u, std::size_t i, const Word& v, std::size_t j, Word& prefix,
                  WordCombination& out, const Rational& c) {
  if (i == u.size() && j == v.size()) {
    out.add(prefix, c);
    return;
  }
  if (i < u.size()) {
    prefix.push_back(u[i]);
    shuffle_into(u, i + 1, v, j, prefix, out, c);
    prefix.pop_back();
  }
  if (j < v.size()) {
    prefix.push_back(v[j]);
    shuffle_into(u, i, v, j + 1, prefix, out, c);
    prefix.pop_back();
  }
}

WordCombination R(int a, int b) { return asym(Word{a, b}); }
WordCombination letter(int a) { return WordCombination(Word{a}); }

}  // namespace

void WordCombination::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational WordCombination::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational WordCombination::mass() const {
  Rational s = 0;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

WordCombination& WordCombination::operator+=(const WordCombination& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

WordCombination& WordCombination::operator-=(const WordCombination& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

WordCombination& WordCombination::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

WordCombination WordCombination::relabel(const std::vector<int>& map) const {
  WordCombination out;
  for (const auto& [w, c] : terms_) {
    Word m(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) m[i] = map.at(static_cast<std::size_t>(w[i]));
    out.add(m, c);
  }
  return out;
}

std::string WordCombination::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + format_rational(c) + ")";
    for (int l : w) out += " " + std::to_string(l);
  }
  return out;
}

WordCombination shuffle(const Word& u, const Word& v) {
  WordCombination out;
  Word prefix;
  prefix.reserve(u.size() + v.size());
  shuffle_into(u, 0, v, 0, prefix, out, 1);
  return out;
}

WordCombination shuffle(const WordCombination& a, const WordCombination& b) {
  WordCombination out;
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) {
      Word prefix;
      shuffle_into(u, 0, v, 0, prefix, out, cu * cv);
    }
  return out;
}

WordCombination asym(const Word& w) { return symmetrize(w, true); }
WordCombination sym(const Word& w) { return symmetrize(w, false); }

WordCombination asym(const WordCombination& c) {
  WordCombination out;
  for (const auto& [w, v] : c.terms()) out += v * asym(w);
  return out;
}

std::vector<IdentityCheck> verify_asym_shuffle_identities() {
  std::vector<IdentityCheck> out;

  {
    WordCombination rhs = shuffle(letter(0), R(1, 2)) - shuffle(letter(1), R(0, 2)) + shuffle(letter(2), R(0, 1));
    rhs *= Rational(1, 3);
    auto diff = asym(Word{0, 1, 2}) - rhs;
    out.push_back({"weight-3", diff.is_zero(), diff});
  }
  {
    WordCombination rhs = shuffle(R(0, 1), R(2, 3)) - shuffle(R(0, 2), R(1, 3)) + shuffle(R(0, 3), R(1, 2));
    rhs *= Rational(1, 6);
    auto diff = asym(Word{0, 1, 2, 3}) - rhs;
    out.push_back({"weight-4", diff.is_zero(), diff});
  }
  {
    WordCombination rhs = Rational(1, 5) * shuffle(letter(0), asym(Word{1, 2, 3, 4}));
    WordCombination fixed_sum;
    std::vector<int> tail{1, 2, 3, 4};
    do {
      std::vector<int> sigma{0, tail[0], tail[1], tail[2], tail[3]};
      WordCombination term = shuffle(Word{sigma[0], sigma[1]}, Word{sigma[2], sigma[3], sigma[4]});
      fixed_sum += Rational(permutation_sign(sigma)) * term;
    } while (std::next_permutation(tail.begin(), tail.end()));
    rhs += Rational(2, 120) * fixed_sum;
    auto diff = asym(Word{0, 1, 2, 3, 4}) - rhs;
    out.push_back({"weight-5", diff.is_zero(), diff});
  }
  return out;
}

WordCombination asym_tensor(const std::vector<FormVector>& factors) {
  // Expand the tensor product multilinearly, then antisymmetrize each word.
  WordCombination expanded(Word{}, 1);
  for (const auto& f : factors) {
    WordCombination next;
    for (const auto& [w, c] : expanded.terms())
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (f[j] == 0) continue;
        Word longer = w;
        longer.push_back(static_cast<int>(j));
        next.add(longer, c * f[j]);
      }
    expanded = std::move(next);
  }
  return asym(expanded);
}

Rational constant_form_integral(const Word& w, const std::vector<Rational>& a) {
  Rational out = 1;
  for (int l : w) out *= a.at(static_cast<std::size_t>(l));
  return out / factorial(static_cast<int>(w.size()));
}

ShuffleCheck shuffle_homomorphism_check(int pairs, int letters, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&](std::uint64_t bound) { return static_cast<int>(rng() % bound); };
  auto random_word = [&] {
    Word w(static_cast<std::size_t>(draw(5)));
    for (auto& l : w) l = draw(static_cast<std::uint64_t>(letters));
    return w;
  };
  ShuffleCheck out;
  for (int n = 0; n < pairs; ++n) {
    const Word u = random_word();
    const Word v = random_word();
    std::vector<Rational> a(static_cast<std::size_t>(letters));
    for (auto& x : a) x = Rational(draw(19) - 9, 1 + draw(6));
    const auto uv = shuffle(u, v);
    Rational lhs = 0;
    for (const auto& [w, c] : uv.terms()) lhs += c * constant_form_integral(w, a);
    const bool ok = uv == shuffle(v, u) &&
                    uv.mass() * factorial(static_cast<int>(u.size())) * factorial(static_cast<int>(v.size())) ==
                        factorial(static_cast<int>(u.size() + v.size())) &&
                    lhs == constant_form_integral(u, a) * constant_form_integral(v, a);
    ++out.pairs;
    if (!ok) ++out.failures;
  }
  return out;
}

}  // namespace dphlog
