#include "dphlog/weyl.hpp"

#include "dphlog/linalg.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

namespace dphlog {

Permutation compose(PermView g, PermView h) {
  Permutation out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) out[i] = g[h[i]];
  return out;
}

Permutation inverse(PermView g) {
  Permutation out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[g[i]] = static_cast<std::uint8_t>(i);
  return out;
}

Permutation identity_permutation(int n) {
  Permutation out(static_cast<std::size_t>(n));
  std::iota(out.begin(), out.end(), std::uint8_t{0});
  return out;
}

Permutation power(PermView g, int k) {
  Permutation out = identity_permutation(static_cast<int>(g.size()));
  for (int i = 0; i < k; ++i) out = compose(g, out);
  return out;
}

bool is_bijection(PermView g) {
  std::vector<bool> hit(g.size(), false);
  for (auto v : g) {
    if (v >= g.size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

std::uint64_t group_order(int r) {
  require_rank(r);
  static constexpr std::uint64_t kOrders[] = {12, 120, 1920, 51840, 2903040, 696729600};
  return kOrders[r - 3];
}

std::vector<WeylElement> generators(int r, const LineTable& lt) {
  require_rank(r);
  if (lt.r != r) throw Error(ErrorCode::RankMismatch, "line table rank differs");
  const auto lat = DelPezzoLattice::make(r);
  std::vector<WeylElement> gens;
  for (int k = 0; k < r; ++k) {
    WeylElement g;
    g.perm.resize(static_cast<std::size_t>(lt.size()));
    for (int i = 0; i < lt.size(); ++i) {
      const int j = lt.find(reflect(lat.roots[k], lt.lines[i]));
      if (j < 0) throw Error(ErrorCode::InternalError, "reflection does not preserve the line set");
      g.perm[i] = static_cast<std::uint8_t>(j);
    }
    g.sign = -1;
    g.word = {k + 1};
    gens.push_back(std::move(g));
  }
  return gens;
}

WeylElement element_from_word(const std::vector<WeylElement>& gens, const std::vector<int>& word) {
  if (gens.empty()) throw Error(ErrorCode::IndexError, "no generators");
  WeylElement out{identity_permutation(static_cast<int>(gens[0].perm.size())), 1, word};
  for (int w : word) {
    if (w < 1 || w > static_cast<int>(gens.size()))
      throw Error(ErrorCode::IndexError, "generator index " + std::to_string(w));
    out.perm = compose(out.perm, gens[w - 1].perm);
    out.sign = -out.sign;
  }
  return out;
}

Matrix<long long> pic_matrix(PermView g, const LineTable& lt) {
  const int r = lt.r;
  // Basis b_0 = h - l_1 - l_2, b_i = l_i. A class (a_0, ..., a_r) has basis
  // coordinates (a_0, a_0 + a_1, a_0 + a_2, a_3, ..., a_r).
  std::vector<int> basis_lines(static_cast<std::size_t>(r + 1));
  basis_lines[0] = lt.find(DivisorClass::hyperplane(r) - DivisorClass::exceptional(r, 1) -
                           DivisorClass::exceptional(r, 2));
  for (int i = 1; i <= r; ++i) basis_lines[i] = lt.find(DivisorClass::exceptional(r, i));
  Matrix<long long> images(r + 1, r + 1);
  for (int c = 0; c <= r; ++c) {
    const auto& img = lt.packed[g[basis_lines[c]]];
    for (int k = 0; k <= r; ++k) images(k, c) = img[k];
  }
  Matrix<long long> to_basis = Matrix<long long>::Identity(r + 1, r + 1);
  to_basis(1, 0) = 1;
  to_basis(2, 0) = 1;
  return images * to_basis;
}

long long pic_determinant(PermView g, const LineTable& lt) {
  return bareiss_determinant(pic_matrix(g, lt));
}

ConicAction::ConicAction(const LineTable& lt, const std::vector<ConicFibration>& conics)
    : n_(lt.size()), table_(static_cast<std::size_t>(n_ * n_), -1) {
  for (std::size_t k = 0; k < conics.size(); ++k) {
    for (const auto& [a, b] : conics[k].fibers) {
      table_[a * n_ + b] = static_cast<int>(k);
      table_[b * n_ + a] = static_cast<int>(k);
    }
    first_fiber_.push_back(conics[k].fibers.front());
  }
}

int ConicAction::image(PermView g, int conic) const {
  const auto [a, b] = first_fiber_[static_cast<std::size_t>(conic)];
  return conic_of(g[a], g[b]);
}

std::vector<int> ConicAction::permutation(PermView g) const {
  std::vector<int> out(first_fiber_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = image(g, static_cast<int>(k));
  return out;
}

int ConicAction::fixed_count(PermView g) const {
  int fixed = 0;
  for (std::size_t k = 0; k < first_fiber_.size(); ++k) {
    const auto [a, b] = first_fiber_[k];
    if (conic_of(g[a], g[b]) == static_cast<int>(k)) ++fixed;
  }
  return fixed;
}

std::uint64_t WeylGroup::hash(PermView g) const {
  // FNV-1a over the permutation bytes, then a final avalanche.
  std::uint64_t h = 1469598103934665603ULL;
  for (auto b : g) h = (h ^ b) * 1099511628211ULL;
  h ^= h >> 29;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 32;
  return h;
}

std::size_t WeylGroup::find(PermView g) const {
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t s = hash(g) & mask;; s = (s + 1) & mask) {
    const std::uint32_t idx = slots_[s];
    if (idx == UINT32_MAX) return size();
    if (std::memcmp(perm(idx).data(), g.data(), g.size()) == 0) return idx;
  }
}

void WeylGroup::insert_slot(std::uint32_t idx) {
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = hash(perm(idx)) & mask;
  while (slots_[s] != UINT32_MAX) s = (s + 1) & mask;
  slots_[s] = idx;
}

WeylGroup WeylGroup::enumerate(int r, const LineTable& lt) {
  require_rank(r);
  if (r == 8)
    throw Error(ErrorCode::GroupTooLarge, "W(E8) has 696729600 elements; enumeration refused");
  WeylGroup g;
  g.r_ = r;
  g.n_ = lt.size();
  g.gens_ = generators(r, lt);
  const std::uint64_t expected = group_order(r);
  std::size_t cap = 1;
  while (cap < 2 * expected) cap <<= 1;
  g.slots_.assign(cap, UINT32_MAX);
  g.perms_.reserve(expected * static_cast<std::size_t>(g.n_));
  g.parent_.reserve(expected);
  g.via_.reserve(expected);
  g.depth_parity_.reserve(expected);

  const auto id = identity_permutation(g.n_);
  g.perms_.insert(g.perms_.end(), id.begin(), id.end());
  g.parent_.push_back(0);
  g.via_.push_back(0);
  g.depth_parity_.push_back(0);
  g.insert_slot(0);

  Permutation next(static_cast<std::size_t>(g.n_));
  for (std::size_t head = 0; head < g.size(); ++head) {
    for (int k = 0; k < r; ++k) {
      const auto& s = g.gens_[k].perm;
      const std::uint8_t* cur = g.perms_.data() + head * static_cast<std::size_t>(g.n_);
      for (int i = 0; i < g.n_; ++i) next[i] = cur[s[i]];
      if (g.find(next) != g.size()) continue;
      if (g.size() >= expected)
        throw Error(ErrorCode::InternalError, "group closure exceeds the expected order");
      g.perms_.insert(g.perms_.end(), next.begin(), next.end());
      g.parent_.push_back(static_cast<std::uint32_t>(head));
      g.via_.push_back(static_cast<std::uint8_t>(k + 1));
      g.depth_parity_.push_back(static_cast<std::uint8_t>(g.depth_parity_[head] ^ 1));
      g.insert_slot(static_cast<std::uint32_t>(g.size() - 1));
    }
  }
  return g;
}

std::vector<int> WeylGroup::word(std::size_t i) const {
  std::vector<int> w;
  while (i != 0) {
    w.push_back(via_[i]);
    i = parent_[i];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

WeylElement WeylGroup::element(std::size_t i) const {
  auto p = perm(i);
  return {Permutation(p.begin(), p.end()), sign(i), word(i)};
}

std::uint64_t stabilizer_order(const WeylGroup& group, const LineTable& lt,
                               const std::vector<ConicFibration>& conics, const DivisorClass& target) {
  if (const int line = lt.find(target); line >= 0) {
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < group.size(); ++i)
      if (group.perm(i)[line] == line) ++count;
    return count;
  }
  if (const int conic = find_conic(conics, target); conic >= 0) {
    const ConicAction action(lt, conics);
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < group.size(); ++i)
      if (action.image(group.perm(i), conic) == conic) ++count;
    return count;
  }
  throw Error(ErrorCode::IndexError, "target is neither a line nor a conic class");
}

std::uint64_t stabilizer_order(int r, const DivisorClass& target) {
  require_rank(r);
  if (r == 8) throw Error(ErrorCode::GroupTooLarge, "W(E8) enumeration refused");
  const auto lt = enumerate_lines(r);
  const auto conics = enumerate_conics(r, lt);
  return stabilizer_order(WeylGroup::enumerate(r, lt), lt, conics, target);
}

std::vector<DivisorClass> class_orbit(const DivisorClass& target) {
  const auto lat = DelPezzoLattice::make(target.rank());
  std::vector<std::function<DivisorClass(const DivisorClass&)>> gens;
  for (const auto& rho : lat.roots)
    gens.emplace_back([rho](const DivisorClass& d) { return reflect(rho, d); });
  return orbit_closure({target}, gens);
}

const std::vector<std::vector<int>>& d5_gap_words() {
  static const std::vector<std::vector<int>> kWords = {
      {},
      {1, 2},
      {1, 2, 3, 1, 2, 3, 4, 3, 1, 2, 3, 4},
      {1},
      {1, 2, 3},
      {1, 2, 4},
      {1, 2, 3, 1, 2, 3, 4, 3, 1, 2, 3, 4, 5},
      {1, 4},
      {1, 3, 1, 2, 3, 4},
      {1, 2, 3, 5},
      {1, 3},
      {1, 2, 3, 4},
      {1, 2, 4, 5},
      {1, 3, 5},
      {1, 3, 1, 2, 3, 4, 5},
      {1, 4, 3},
      {1, 2, 3, 4, 5},
      {1, 4, 3, 5},
  };
  return kWords;
}

std::vector<WeylElement> d5_class_representatives(const LineTable& lt) {
  if (lt.r != 5) throw Error(ErrorCode::UnsupportedRank, "W(D5) representatives need r = 5");
  static constexpr int kZetaToS[] = {0, 4, 5, 3, 2, 1};
  const auto gens = generators(5, lt);
  std::vector<WeylElement> reps;
  for (const auto& gap_word : d5_gap_words()) {
    std::vector<int> word;
    for (int z : gap_word) word.push_back(kZetaToS[z]);
    reps.push_back(element_from_word(gens, word));
  }
  return reps;
}

}  // namespace dphlog
