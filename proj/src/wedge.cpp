#include "dphlog/wedge.hpp"

#include "dphlog/parallel.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <random>

namespace dphlog {

namespace {

constexpr std::uint64_t kPrime = 2147483647ULL;  // 2^31 - 1

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  b %= kPrime;
  while (e) {
    if (e & 1) r = r * b % kPrime;
    b = b * b % kPrime;
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a) { return mod_pow(a, kPrime - 2); }

std::uint64_t to_mod(long long v) {
  const long long m = v % static_cast<long long>(kPrime);
  return static_cast<std::uint64_t>(m < 0 ? m + static_cast<long long>(kPrime) : m);
}

long long symmetric_lift(std::uint64_t v) {
  return v > kPrime / 2 ? static_cast<long long>(v) - static_cast<long long>(kPrime) : static_cast<long long>(v);
}

/// Determinant of a small integer matrix (n <= 6), fraction-free.
long long small_det(std::array<long long, 36> m, int n) {
  long long sign = 1;
  long long prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      int p = k + 1;
      while (p < n && m[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
      m[i * n + k] = 0;
    }
    prev = m[k * n + k];
  }
  return sign * m[(n - 1) * n + (n - 1)];
}

template <typename Fn>
void for_each_minor(const FiberDifferenceMatrix& m, Fn&& emit) {
  const int k = static_cast<int>(m.rows.size());
  const int n = static_cast<int>(m.support.size());
  if (k == 0 || k > 6 || n < k) return;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  std::array<long long, 36> sub{};
  while (true) {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub[i * k + j] = m.rows[i][m.support[pick[j]]];
    const long long det = small_det(sub, k);
    if (det != 0) {
      TupleKey key;
      key.fill(0xff);
      for (int j = 0; j < k; ++j) key[j] = static_cast<std::uint8_t>(m.support[pick[j]]);
      emit(key, det);
    }
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

struct Entry {
  TupleKey key;
  std::uint16_t conic;
  std::int16_t value;
};

/// Rows of the tuple-by-conic matrix, sparse.
struct SparseRows {
  std::vector<TupleKey> keys;
  std::vector<std::vector<std::pair<int, long long>>> rows;
};

SparseRows rows_from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.key != b.key ? a.key < b.key : a.conic < b.conic;
  });
  SparseRows out;
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    std::vector<std::pair<int, long long>> row;
    while (j < entries.size() && entries[j].key == entries[i].key) {
      if (!row.empty() && row.back().first == entries[j].conic)
        row.back().second += entries[j].value;
      else
        row.emplace_back(entries[j].conic, entries[j].value);
      ++j;
    }
    std::erase_if(row, [](const auto& e) { return e.second == 0; });
    if (!row.empty()) {
      out.keys.push_back(entries[i].key);
      out.rows.push_back(std::move(row));
    }
    i = j;
  }
  return out;
}

SparseRows rows_from_vectors(const std::vector<WedgeVector>& columns) {
  std::map<TupleKey, std::vector<std::pair<int, long long>>> grouped;
  for (std::size_t k = 0; k < columns.size(); ++k)
    for (const auto& [key, v] : columns[k].entries)
      grouped[key].emplace_back(static_cast<int>(k), static_cast<long long>(v));
  SparseRows out;
  for (auto& [key, row] : grouped) {
    out.keys.push_back(key);
    out.rows.push_back(std::move(row));
  }
  return out;
}

/// Incremental row echelon form mod p over n columns. Pivot rows have their
/// leading 1 at the pivot column and zeros before it.
class ModEchelon {
 public:
  explicit ModEchelon(int n) : n_(n), pivot_of_(static_cast<std::size_t>(n), -1) {}

  bool add(std::vector<std::uint64_t> v) {
    for (int c = 0; c < n_; ++c) {
      if (v[c] == 0) continue;
      const int p = pivot_of_[c];
      if (p < 0) {
        const std::uint64_t inv = mod_inv(v[c]);
        for (int j = c; j < n_; ++j) v[j] = v[j] * inv % kPrime;
        pivot_of_[c] = static_cast<int>(pivots_.size());
        pivots_.push_back(std::move(v));
        cols_.push_back(c);
        return true;
      }
      const std::uint64_t f = kPrime - v[c];
      const auto& row = pivots_[p];
      for (int j = c; j < n_; ++j)
        if (row[j]) v[j] = (v[j] + f * row[j]) % kPrime;
    }
    return false;
  }

  [[nodiscard]] int rank() const { return static_cast<int>(pivots_.size()); }

  /// Kernel vectors of the accumulated rows (one per free column).
  [[nodiscard]] std::vector<std::vector<std::uint64_t>> kernel() const {
    // Back-substitute into reduced form first.
    auto rows = pivots_;
    std::vector<int> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return cols_[a] > cols_[b]; });
    for (int a : order) {
      for (int b = 0; b < static_cast<int>(rows.size()); ++b) {
        if (b == a) continue;
        const std::uint64_t f = rows[b][cols_[a]];
        if (f == 0) continue;
        for (int j = 0; j < n_; ++j)
          if (rows[a][j]) rows[b][j] = (rows[b][j] + (kPrime - f) * rows[a][j]) % kPrime;
      }
    }
    std::vector<std::vector<std::uint64_t>> out;
    for (int f = 0; f < n_; ++f) {
      if (pivot_of_[f] >= 0) continue;
      std::vector<std::uint64_t> x(static_cast<std::size_t>(n_), 0);
      x[f] = 1;
      for (std::size_t i = 0; i < rows.size(); ++i) x[cols_[i]] = (kPrime - rows[i][f]) % kPrime;
      out.push_back(std::move(x));
    }
    return out;
  }

 private:
  int n_;
  std::vector<int> pivot_of_;
  std::vector<std::vector<std::uint64_t>> pivots_;
  std::vector<int> cols_;
};

std::vector<std::uint64_t> dense_mod(const std::vector<std::pair<int, long long>>& row, int n) {
  std::vector<std::uint64_t> v(static_cast<std::size_t>(n), 0);
  for (const auto& [c, x] : row) v[c] = to_mod(x);
  return v;
}

/// Fraction-free Gauss-Jordan on dense integer rows; returns a primitive
/// integer basis of the right kernel.
std::vector<std::vector<BigInt>> bareiss_kernel(std::vector<std::vector<BigInt>> a, int n) {
  const int m = static_cast<int>(a.size());
  BigInt prev = 1;
  std::vector<int> pivot_cols;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int p = row;
    while (p < m && a[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    const BigInt pivot = a[row][col];
    for (int i = 0; i < m; ++i) {
      if (i == row) continue;
      const BigInt factor = a[i][col];
      for (int j = 0; j < n; ++j) {
        if (j == col) continue;
        a[i][j] = (pivot * a[i][j] - factor * a[row][j]) / prev;
      }
      a[i][col] = 0;
    }
    prev = pivot;
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<BigInt>> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<BigInt> x(static_cast<std::size_t>(n), BigInt(0));
    x[f] = prev;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = -a[i][f];
    BigInt g = 0;
    for (const auto& v : x) g = gcd(g, v);
    int lead = 0;
    while (x[lead] == 0) ++lead;
    if (x[lead] < 0) g = -g;
    for (auto& v : x) v /= g;
    basis.push_back(std::move(x));
  }
  return basis;
}

BigInt dot(const std::vector<std::pair<int, long long>>& row, const std::vector<BigInt>& x) {
  BigInt s = 0;
  for (const auto& [c, v] : row) s += BigInt(v) * x[c];
  return s;
}

std::vector<std::vector<BigInt>> kernel_of_rows(const SparseRows& rows, int n) {
  // Shortest rows first; ties keep tuple order so the choice is reproducible.
  std::vector<std::size_t> order(rows.rows.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rows.rows[a].size() < rows.rows[b].size(); });

  ModEchelon ech(n);
  std::vector<std::size_t> selected;
  std::size_t cursor = 0;
  auto select_more = [&](int target_rank) {
    while (cursor < order.size() && ech.rank() < target_rank) {
      const std::size_t idx = order[cursor++];
      if (ech.add(dense_mod(rows.rows[idx], n))) selected.push_back(idx);
    }
  };
  select_more(n - 1);

  while (true) {
    std::vector<std::vector<BigInt>> dense;
    for (std::size_t idx : selected) {
      std::vector<BigInt> v(static_cast<std::size_t>(n), BigInt(0));
      for (const auto& [c, x] : rows.rows[idx]) v[c] = x;
      dense.push_back(std::move(v));
    }
    auto basis = bareiss_kernel(std::move(dense), n);
    // Any row not annihilated by the candidate kernel is independent of the
    // selected rows over Q; add it and recompute.
    std::size_t failing = rows.rows.size();
    for (const auto& x : basis) {
      for (std::size_t i = 0; i < rows.rows.size() && failing == rows.rows.size(); ++i)
        if (dot(rows.rows[i], x) != 0) failing = i;
      if (failing != rows.rows.size()) break;
    }
    if (failing == rows.rows.size()) return basis;
    selected.push_back(failing);
  }
}

std::uint64_t next_index(std::mt19937_64& rng, std::size_t bound) {
  return rng() % static_cast<std::uint64_t>(bound);
}

std::vector<Entry> build_entries(const LineTable& lt, const std::vector<std::vector<LinePair>>& orders,
                                 const std::vector<int>& bases, bool quotient, int threads) {
  const std::size_t kappa = orders.size();
  std::vector<std::vector<Entry>> per(kappa);
  parallel_chunks(kappa, threads, [&](std::size_t b, std::size_t e, int) {
    for (std::size_t k = b; k < e; ++k) {
      ConicFibration f{DivisorClass::zero(lt.r), orders[k]};
      auto m = fiber_differences(f, lt.size(), bases[k], static_cast<int>(k));
      if (quotient) {
        for (auto& row : m.rows) {
          for (int i = 0; i < lt.size(); ++i)
            if (lt.is_exceptional(i)) row[i] = 0;
        }
        std::erase_if(m.support, [&](int c) { return lt.is_exceptional(c); });
      }
      for_each_minor(m, [&](const TupleKey& key, long long det) {
        per[k].push_back({key, static_cast<std::uint16_t>(k), static_cast<std::int16_t>(det)});
      });
    }
  });
  std::vector<Entry> all;
  for (auto& p : per) all.insert(all.end(), p.begin(), p.end());
  return all;
}

bool entries_vanish(std::vector<Entry> entries, const std::vector<int>& eps) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.key < b.key; });
  for (std::size_t i = 0; i < entries.size();) {
    long long sum = 0;  // |minor| <= 2^6 and at most 2160 conics: no overflow
    std::size_t j = i;
    while (j < entries.size() && entries[j].key == entries[i].key) {
      sum += static_cast<long long>(eps[entries[j].conic]) * entries[j].value;
      ++j;
    }
    if (sum != 0) return false;
    i = j;
  }
  return true;
}

/// Randomized modular kernel for large ranks: rows are folded into a few more
/// than kappa random combinations, eliminated mod p, and the lifted kernel is
/// later checked exactly against every row.
std::optional<std::vector<long long>> compressed_kernel(const SparseRows& rows, int n, std::uint64_t seed) {
  const int m = n + 8;
  std::vector<std::vector<std::uint64_t>> dense(static_cast<std::size_t>(m),
                                                std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (const auto& row : rows.rows) {
    for (int t = 0; t < 3; ++t) {
      auto& target = dense[next_index(rng, static_cast<std::size_t>(m))];
      const std::uint64_t coef = 1 + next_index(rng, kPrime - 1);
      for (const auto& [c, v] : row) target[c] = (target[c] + coef * to_mod(v)) % kPrime;
    }
  }
  ModEchelon ech(n);
  for (auto& v : dense) ech.add(std::move(v));
  if (ech.rank() != n - 1) return std::nullopt;
  const auto kern = ech.kernel();
  std::vector<long long> x(kern[0].size());
  const std::uint64_t inv = mod_inv(kern[0][0] == 0 ? 1 : kern[0][0]);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = symmetric_lift(kern[0][i] * inv % kPrime);
  return x;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

nlohmann::ordered_json certificate_body(const HlogCertificate& cert) {
  nlohmann::ordered_json j;
  j["r"] = cert.r;
  j["method"] = cert.method;
  j["quotient"] = cert.quotient;
  j["kernel_dimension"] = cert.kernel_dimension;
  auto conics = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < cert.conics.size(); ++k) {
    nlohmann::ordered_json c;
    c["class"] = to_json(cert.conics[k]);
    auto fibers = nlohmann::ordered_json::array();
    for (const auto& [a, b] : cert.fiber_orders[k]) fibers.push_back({a, b});
    c["fibers"] = fibers;
    c["base"] = cert.bases[k];
    c["epsilon"] = cert.epsilon.empty() ? 0 : cert.epsilon[k];
    conics.push_back(c);
  }
  j["conics"] = conics;
  return j;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) h = (h ^ c) * 1099511628211ULL;
  return h;
}

FiberDifferenceMatrix fiber_differences(const ConicFibration& f, int n_lines, int base, int conic_index) {
  const int count = static_cast<int>(f.fibers.size());
  if (base < 0 || base >= count)
    throw Error(ErrorCode::IndexError, "base fibre " + std::to_string(base) + " out of range");
  FiberDifferenceMatrix m;
  m.conic = conic_index;
  const auto [b0, b1] = f.fibers[base];
  std::vector<bool> used(static_cast<std::size_t>(n_lines), false);
  for (int s = 0; s < count; ++s) {
    if (s == base) continue;
    std::vector<int> row(static_cast<std::size_t>(n_lines), 0);
    const auto [a0, a1] = f.fibers[s];
    row[a0] += 1;
    row[a1] += 1;
    row[b0] -= 1;
    row[b1] -= 1;
    for (int c : {a0, a1, b0, b1}) used[c] = true;
    m.rows.push_back(std::move(row));
  }
  for (int c = 0; c < n_lines; ++c)
    if (used[c]) m.support.push_back(c);
  return m;
}

WedgeVector wedge_vector(const FiberDifferenceMatrix& m) {
  WedgeVector w;
  w.arity = static_cast<int>(m.rows.size());
  for_each_minor(m, [&](const TupleKey& key, long long det) { w.entries.emplace(key, BigInt(det)); });
  return w;
}

std::vector<int> quotient_by_exceptional(const std::vector<int>& v, const LineTable& lt) {
  if (static_cast<int>(v.size()) != lt.size()) throw Error(ErrorCode::IndexError, "vector length differs from line count");
  std::vector<int> out;
  out.reserve(v.size());
  for (int i = 0; i < lt.size(); ++i)
    if (!lt.is_exceptional(i)) out.push_back(v[i]);
  return out;
}

std::vector<WedgeVector> certificate_vectors(const LineTable& lt, const std::vector<std::vector<LinePair>>& orders,
                                             const std::vector<int>& bases, bool quotient) {
  std::vector<WedgeVector> out(orders.size());
  for (const auto& e : build_entries(lt, orders, bases, quotient, 1)) {
    out[e.conic].arity = lt.r - 2;
    out[e.conic].entries.emplace(e.key, BigInt(e.value));
  }
  for (auto& w : out) w.arity = lt.r - 2;
  return out;
}

bool combination_vanishes(const std::vector<WedgeVector>& vectors, const std::vector<int>& epsilon) {
  if (vectors.size() != epsilon.size()) throw Error(ErrorCode::IndexError, "sign vector length mismatch");
  std::map<TupleKey, BigInt> sum;
  for (std::size_t k = 0; k < vectors.size(); ++k)
    for (const auto& [key, v] : vectors[k].entries) sum[key] += BigInt(epsilon[k]) * v;
  return std::all_of(sum.begin(), sum.end(), [](const auto& kv) { return kv.second == 0; });
}

std::vector<std::vector<BigInt>> exact_column_kernel(const std::vector<WedgeVector>& columns) {
  return kernel_of_rows(rows_from_vectors(columns), static_cast<int>(columns.size()));
}

HlogCertificate kernel_signs(int r, const KernelOptions& opts) {
  require_rank(r, 4, 8);
  const auto lt = enumerate_lines(r);
  return kernel_signs(lt, enumerate_conics(r, lt), opts);
}

HlogCertificate kernel_signs(const LineTable& lt, const std::vector<ConicFibration>& conics, const KernelOptions& opts) {
  const int r = lt.r;
  require_rank(r, 4, 8);
  if (r == 8 && !opts.stretch)
    throw Error(ErrorCode::GroupTooLarge, "r = 8 is a stretch computation; pass the stretch flag");
  HlogCertificate cert;
  cert.r = r;
  cert.quotient = opts.quotient;
  std::mt19937_64 rng(opts.seed);
  for (const auto& c : conics) {
    cert.conics.push_back(c.cls);
    auto fibers = c.fibers;
    int base = static_cast<int>(fibers.size()) - 1;
    if (opts.randomize) {
      for (std::size_t i = fibers.size() - 1; i > 0; --i) std::swap(fibers[i], fibers[next_index(rng, i + 1)]);
      base = static_cast<int>(next_index(rng, fibers.size()));
    }
    cert.fiber_orders.push_back(std::move(fibers));
    cert.bases.push_back(base);
  }
  const int kappa = static_cast<int>(conics.size());
  auto entries = build_entries(lt, cert.fiber_orders, cert.bases, opts.quotient, opts.threads);

  std::vector<int> eps;
  if (r == 8) {
    cert.method = "randomized-modular-verified";
    const auto rows = rows_from_entries(entries);
    const auto lifted = compressed_kernel(rows, kappa, opts.seed);
    if (!lifted) throw Error(ErrorCode::KernelDimensionViolation, "modular rank of the compressed matrix is not kappa - 1");
    for (long long v : *lifted) {
      if (v != 1 && v != -1) throw Error(ErrorCode::SignViolation, "lifted kernel entry " + std::to_string(v));
      eps.push_back(static_cast<int>(v));
    }
    if (!entries_vanish(entries, eps))
      throw Error(ErrorCode::KernelDimensionViolation, "lifted kernel vector does not annihilate every row");
    cert.kernel_dimension = 1;
  } else {
    cert.method = "bareiss-exact";
    const auto basis = kernel_of_rows(rows_from_entries(entries), kappa);
    cert.kernel_dimension = static_cast<int>(basis.size());
    if (basis.size() != 1)
      throw Error(ErrorCode::KernelDimensionViolation, "kernel dimension " + std::to_string(basis.size()));
    const BigInt first = basis[0][0];
    for (const auto& v : basis[0]) {
      if (v != 1 && v != -1) throw Error(ErrorCode::SignViolation, "kernel entry " + v.str());
      eps.push_back(static_cast<int>(v * first));
    }
    if (!entries_vanish(entries, eps)) throw Error(ErrorCode::InternalError, "kernel vector failed verification");
  }
  if (eps[0] != 1) for (auto& e : eps) e = -e;
  cert.epsilon = std::move(eps);
  cert.content_hash = certificate_hash(cert);
  return cert;
}

std::uint64_t certificate_hash(const HlogCertificate& cert) { return fnv1a64(certificate_body(cert).dump()); }

nlohmann::ordered_json to_json(const HlogCertificate& cert) {
  auto j = certificate_body(cert);
  j["content_hash"] = hex64(cert.content_hash);
  return j;
}

HlogCertificate certificate_from_json(const nlohmann::ordered_json& j) {
  try {
    HlogCertificate cert;
    cert.r = j.at("r").get<int>();
    require_rank(cert.r, 4, 8);
    cert.method = j.at("method").get<std::string>();
    cert.quotient = j.at("quotient").get<bool>();
    cert.kernel_dimension = j.at("kernel_dimension").get<int>();
    for (const auto& c : j.at("conics")) {
      cert.conics.push_back(divisor_from_json(c.at("class")));
      std::vector<LinePair> fibers;
      for (const auto& f : c.at("fibers")) fibers.emplace_back(f.at(0).get<int>(), f.at(1).get<int>());
      cert.fiber_orders.push_back(std::move(fibers));
      cert.bases.push_back(c.at("base").get<int>());
      cert.epsilon.push_back(c.at("epsilon").get<int>());
    }
    cert.content_hash = std::stoull(j.at("content_hash").get<std::string>(), nullptr, 16);
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  } catch (const std::logic_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

ReplayResult replay_certificate(const HlogCertificate& cert) {
  ReplayResult res;
  const auto lt = enumerate_lines(cert.r);
  const auto conics = enumerate_conics(cert.r, lt);
  res.classes_match = cert.conics.size() == conics.size();
  for (std::size_t k = 0; res.classes_match && k < conics.size(); ++k)
    res.classes_match = cert.conics[k] == conics[k].cls;
  if (!res.classes_match) return res;

  res.fibers_valid = cert.fiber_orders.size() == conics.size() && cert.bases.size() == conics.size();
  for (std::size_t k = 0; res.fibers_valid && k < conics.size(); ++k) {
    auto given = cert.fiber_orders[k];
    for (auto& [a, b] : given) {
      if (a < 0 || b < 0 || a >= lt.size() || b >= lt.size()) {
        res.fibers_valid = false;
        break;
      }
      if (a > b) std::swap(a, b);
    }
    if (!res.fibers_valid) break;
    std::sort(given.begin(), given.end());
    res.fibers_valid = given == conics[k].fibers && cert.bases[k] >= 0 &&
                       cert.bases[k] < static_cast<int>(given.size());
  }
  if (!res.fibers_valid) return res;

  res.signs_valid = cert.epsilon.size() == conics.size() &&
                    std::all_of(cert.epsilon.begin(), cert.epsilon.end(), [](int e) { return e == 1 || e == -1; });
  if (!res.signs_valid) return res;
  res.vanishes = entries_vanish(build_entries(lt, cert.fiber_orders, cert.bases, cert.quotient, 1), cert.epsilon);
  res.hash_matches = certificate_hash(cert) == cert.content_hash;
  return res;
}

}  // namespace dphlog
