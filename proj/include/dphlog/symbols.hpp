#pragma once

#include "dphlog/types.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dphlog {

/// A word over an alphabet of 1-form indices 0..s-1.
using Word = std::vector<int>;

/// Finite rational combination of words. Zero coefficients are never stored.
class WordCombination {
 public:
  WordCombination() = default;
  explicit WordCombination(const Word& w, const Rational& c = 1) { add(w, c); }

  void add(const Word& w, const Rational& c);
  [[nodiscard]] const std::map<Word, Rational>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] Rational coefficient(const Word& w) const;
  /// Sum of all coefficients.
  [[nodiscard]] Rational mass() const;

  WordCombination& operator+=(const WordCombination& o);
  WordCombination& operator-=(const WordCombination& o);
  WordCombination& operator*=(const Rational& c);
  friend WordCombination operator+(WordCombination a, const WordCombination& b) { return a += b; }
  friend WordCombination operator-(WordCombination a, const WordCombination& b) { return a -= b; }
  friend WordCombination operator*(const Rational& c, WordCombination a) { return a *= c; }
  friend bool operator==(const WordCombination& a, const WordCombination& b) { return a.terms_ == b.terms_; }

  /// Relabels letters: letter i becomes map[i].
  [[nodiscard]] WordCombination relabel(const std::vector<int>& map) const;
  [[nodiscard]] std::string to_string() const;

 private:
  std::map<Word, Rational> terms_;
};

WordCombination shuffle(const Word& u, const Word& v);
WordCombination shuffle(const WordCombination& a, const WordCombination& b);

/// (1/s!) sum over permutations of the letter positions, signed for asym.
WordCombination asym(const Word& w);
WordCombination sym(const Word& w);
WordCombination asym(const WordCombination& c);

struct IdentityCheck {
  std::string name;
  bool holds = false;
  WordCombination difference;
};

/// The three antisymmetrization-versus-shuffle identities in weights 3, 4, 5
/// on the letters a_1..a_5 (indices 0..4).
std::vector<IdentityCheck> verify_asym_shuffle_identities();

/// Tensors over a fixed basis of 1-forms: each "letter" is itself a vector
/// of integer coordinates, and a tensor word expands multilinearly.
using FormVector = std::vector<Rational>;

/// Expands Asym(v_1 (x) ... (x) v_s) with v_i given in coordinates.
WordCombination asym_tensor(const std::vector<FormVector>& factors);

/// Iterated integral of the constant forms a_k dt over [0, 1]:
/// prod a_{w_i} / |w|!. It is a shuffle character, so it gives an exact
/// test of the shuffle product.
Rational constant_form_integral(const Word& w, const std::vector<Rational>& a);

struct ShuffleCheck {
  int pairs = 0;
  int failures = 0;
  [[nodiscard]] bool ok() const { return pairs > 0 && failures == 0; }
};

/// Random word pairs over `letters` letters, length up to 4 each: checks
/// commutativity, the coefficient mass binom(|u|+|v|, |u|) and
/// multiplicativity of constant_form_integral.
ShuffleCheck shuffle_homomorphism_check(int pairs, int letters, std::uint64_t seed);

}  // namespace dphlog
