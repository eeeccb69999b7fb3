#include "dphlog/incidence.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace dphlog {

namespace {

constexpr int kLines[] = {6, 10, 16, 27, 56, 240};
constexpr int kConics[] = {3, 5, 10, 27, 126, 2160};

std::vector<std::function<DivisorClass(const DivisorClass&)>> reflections(int r) {
  const auto lat = DelPezzoLattice::make(r);
  std::vector<std::function<DivisorClass(const DivisorClass&)>> gens;
  for (const auto& rho : lat.roots)
    gens.emplace_back([rho](const DivisorClass& d) { return reflect(rho, d); });
  return gens;
}

std::array<int, 9> pack(const DivisorClass& d) {
  std::array<int, 9> out{};
  const auto ints = d.to_ints();
  for (std::size_t i = 0; i < ints.size(); ++i) out[i] = static_cast<int>(ints[i]);
  return out;
}

}  // namespace

int line_count(int r) {
  require_rank(r);
  return kLines[r - 3];
}

int conic_count(int r) {
  require_rank(r);
  return kConics[r - 3];
}

int LineTable::find(const DivisorClass& d) const {
  auto it = index.find(d);
  return it == index.end() ? -1 : it->second;
}

bool LineTable::is_exceptional(int i) const {
  const auto& c = lines.at(static_cast<std::size_t>(i));
  if (c[0] != 0) return false;
  int ones = 0;
  for (int k = 1; k <= r; ++k) {
    if (c[k] == 1) ++ones;
    else if (c[k] != 0) return false;
  }
  return ones == 1;
}

std::vector<DivisorClass> orbit_closure(
    const std::vector<DivisorClass>& seeds,
    const std::vector<std::function<DivisorClass(const DivisorClass&)>>& generators) {
  std::unordered_set<DivisorClass, DivisorClassHash> seen(seeds.begin(), seeds.end());
  std::deque<DivisorClass> frontier(seeds.begin(), seeds.end());
  while (!frontier.empty()) {
    DivisorClass cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      DivisorClass next = g(cur);
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  std::vector<DivisorClass> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

LineTable enumerate_lines(int r) {
  require_rank(r);
  LineTable lt;
  lt.r = r;
  lt.lines = orbit_closure({DivisorClass::exceptional(r, r)}, reflections(r));
  if (lt.size() != line_count(r))
    throw Error(ErrorCode::InternalError, "line orbit has " + std::to_string(lt.size()) +
                                              " elements, expected " + std::to_string(line_count(r)));
  for (int i = 0; i < lt.size(); ++i) {
    if (!is_line(lt.lines[i])) throw Error(ErrorCode::InternalError, "orbit element is not a line");
    lt.index.emplace(lt.lines[i], i);
    lt.packed.push_back(pack(lt.lines[i]));
  }
  return lt;
}

std::vector<LinePair> reducible_fibers(const DivisorClass& c, const LineTable& lt) {
  if (c.rank() != lt.r) throw Error(ErrorCode::RankMismatch, "conic and line table ranks differ");
  const auto target = pack(c);
  const int width = lt.r + 1;
  std::vector<LinePair> out;
  for (int i = 0; i < lt.size(); ++i) {
    const auto& a = lt.packed[i];
    for (int j = i + 1; j < lt.size(); ++j) {
      const auto& b = lt.packed[j];
      int k = 0;
      while (k < width && a[k] + b[k] == target[k]) ++k;
      if (k == width) out.emplace_back(i, j);
    }
  }
  if (static_cast<int>(out.size()) != lt.r - 1)
    throw Error(ErrorCode::FiberCountViolation,
                "found " + std::to_string(out.size()) + " reducible fibres, expected " +
                    std::to_string(lt.r - 1));
  return out;
}

std::vector<ConicFibration> enumerate_conics(int r, const LineTable& lt) {
  require_rank(r);
  const DivisorClass seed = DivisorClass::hyperplane(r) - DivisorClass::exceptional(r, 1);
  const auto classes = orbit_closure({seed}, reflections(r));
  if (static_cast<int>(classes.size()) != conic_count(r))
    throw Error(ErrorCode::InternalError, "conic orbit has " + std::to_string(classes.size()) +
                                              " elements, expected " +
                                              std::to_string(conic_count(r)));
  std::vector<ConicFibration> out;
  out.reserve(classes.size());
  for (const auto& c : classes) {
    if (!is_conic_class(c)) throw Error(ErrorCode::InternalError, "orbit element is not a conic class");
    out.push_back({c, reducible_fibers(c, lt)});
  }
  return out;
}

std::vector<ConicFibration> enumerate_conics(int r) { return enumerate_conics(r, enumerate_lines(r)); }

int find_conic(const std::vector<ConicFibration>& conics, const DivisorClass& c) {
  auto it = std::lower_bound(conics.begin(), conics.end(), c,
                             [](const ConicFibration& f, const DivisorClass& d) { return f.cls < d; });
  if (it == conics.end() || it->cls != c) return -1;
  return static_cast<int>(it - conics.begin());
}

}  // namespace dphlog
