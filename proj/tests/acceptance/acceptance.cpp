// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fail.

#include "dphlog/characters.hpp"
#include "dphlog/parallel.hpp"
#include "dphlog/planar_web.hpp"
#include "dphlog/symbols.hpp"
#include "dphlog/transport.hpp"
#include "dphlog/wedge.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>

using namespace dphlog;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

long peak_rss_kb() {
  std::ifstream in("/proc/self/status");
  std::string line;
  while (std::getline(in, line))
    if (line.rfind("VmHWM:", 0) == 0) return std::stol(line.substr(6));
  return -1;
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void report(int id, const std::string& name, Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << name << " -" << o.detail.str()
            << std::endl;
  if (!o.pass) ++failures;
}

template <typename Fn>
void criterion(int id, const std::string& name, Fn&& fn) {
  Outcome o;
  try {
    fn(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  report(id, name, o);
}

bool all_unit(const std::vector<int>& eps) {
  for (int e : eps)
    if (e != 1 && e != -1) return false;
  return !eps.empty();
}

struct Surface {
  LineTable lt;
  std::vector<ConicFibration> conics;
};

std::map<int, Surface> surfaces;
std::map<int, std::unique_ptr<WeylGroup>> groups;

const Surface& surface(int r) {
  auto it = surfaces.find(r);
  if (it == surfaces.end()) {
    Surface s;
    s.lt = enumerate_lines(r);
    s.conics = enumerate_conics(r, s.lt);
    it = surfaces.emplace(r, std::move(s)).first;
  }
  return it->second;
}

int run_cli(const std::string& args, const std::string& out) {
  const std::string cmd = std::string(DP_HLOG_BINARY) + " " + args + " --out " + out + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  const int lines_expected[] = {6, 10, 16, 27, 56, 240};
  const int conics_expected[] = {3, 5, 10, 27, 126, 2160};

  criterion(1, "line and conic counts for r = 3..8 in under 5 s", [&](Outcome& o) {
    const auto t0 = Clock::now();
    for (int r = 3; r <= 8; ++r) {
      const auto& s = surface(r);
      o.require(s.lt.size() == lines_expected[r - 3], "lines r=" + std::to_string(r));
      o.require(static_cast<int>(s.conics.size()) == conics_expected[r - 3], "conics r=" + std::to_string(r));
      o.detail << " r" << r << "=" << s.lt.size() << "/" << s.conics.size();
    }
    const double t = seconds_since(t0);
    o.detail << " (" << t << " s)";
    o.require(t < 5, "runtime");
  });

  criterion(2, "r - 1 transverse reducible fibres per conic, every line covered", [&](Outcome& o) {
    const auto t0 = Clock::now();
    long pairs = 0;
    for (int r = 3; r <= 8; ++r) {
      const auto& s = surface(r);
      std::set<int> covered;
      for (const auto& f : s.conics) {
        // Recompute the fibres from scratch rather than trusting the stored ones.
        const auto fibers = reducible_fibers(f.cls, s.lt);
        o.require(static_cast<int>(fibers.size()) == r - 1, "fibre count");
        o.require(fibers == f.fibers, "stored fibres");
        for (auto [a, b] : fibers) {
          o.require(pair(s.lt.lines[a], s.lt.lines[b]) == 1, "transversality");
          covered.insert(a);
          covered.insert(b);
          ++pairs;
        }
      }
      o.require(static_cast<int>(covered.size()) == s.lt.size(), "coverage r=" + std::to_string(r));
    }
    const double t = seconds_since(t0);
    o.detail << " " << pairs << " fibres (" << t << " s)";
    o.require(t < 30, "runtime");
  });

  criterion(3, "kernel line spanned by a +-1 vector for r = 4..7", [&](Outcome& o) {
    const double limits[] = {5, 5, 60, 900};
    for (int r = 4; r <= 7; ++r) {
      const auto t0 = Clock::now();
      const auto& s = surface(r);
      const auto cert = kernel_signs(s.lt, s.conics);
      const double t = seconds_since(t0);
      o.require(cert.kernel_dimension == 1 && all_unit(cert.epsilon), "r=" + std::to_string(r));
      o.require(replay_certificate(cert).ok(), "replay r=" + std::to_string(r));
      o.require(t < limits[r - 4], "runtime r=" + std::to_string(r));
      o.detail << " r" << r << ": dim " << cert.kernel_dimension << " (" << t << " s)";
    }
    // Stretch run, reported only.
    try {
      const auto t0 = Clock::now();
      KernelOptions opts;
      opts.stretch = true;
      const auto& s = surface(8);
      const auto cert = kernel_signs(s.lt, s.conics, opts);
      o.detail << "; r8 stretch: dim " << cert.kernel_dimension << ", +-1 " << (all_unit(cert.epsilon) ? "yes" : "no")
               << " (" << seconds_since(t0) << " s)";
    } catch (const std::exception& e) {
      o.detail << "; r8 stretch not certified: " << e.what();
    }
  });

  criterion(4, "randomized fibre orders and base fibres, 5 seeds", [&](Outcome& o) {
    int runs = 0;
    for (int r = 4; r <= 7; ++r)
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        KernelOptions opts;
        opts.randomize = true;
        opts.seed = seed * 7919 + static_cast<std::uint64_t>(r);
        const auto& s = surface(r);
        const auto cert = kernel_signs(s.lt, s.conics, opts);
        o.require(cert.kernel_dimension == 1 && all_unit(cert.epsilon),
                  "r=" + std::to_string(r) + " seed=" + std::to_string(seed));
        ++runs;
      }
    o.detail << " " << runs << " randomized certificates";
  });

  criterion(5, "enumerated group orders for r = 3..7", [&](Outcome& o) {
    const std::uint64_t omega[] = {12, 120, 1920, 51840, 2903040};
    for (int r = 3; r <= 7; ++r) {
      const auto t0 = Clock::now();
      groups[r] = std::make_unique<WeylGroup>(WeylGroup::enumerate(r, surface(r).lt));
      const double t = seconds_since(t0);
      o.require(groups[r]->size() == omega[r - 3], "order r=" + std::to_string(r));
      o.detail << " r" << r << "=" << groups[r]->size();
      if (r == 7) {
        o.detail << " (r7 " << t << " s)";
        o.require(t < 600, "runtime r=7");
      }
    }
    const long rss = peak_rss_kb();
    o.detail << ", peak RSS " << rss / 1024 << " MB";
    o.require(rss > 0 && rss < 1024 * 1024, "memory");
  });

  criterion(6, "W(D5) character values and decompositions for r = 5", [&](Outcome& o) {
    const std::array<long long, 18> chi = {16, 0, 0, 8, 0, 0, 0, 4, 0, 0, 4, 0, 0, 2, 0, 2, 0, 1};
    const std::array<long long, 18> wedge3 = {560, 0, 0, 24, 0, 0, 0, -20, 0, 0, 8, 0, 0, 0, 0, -2, 0, 0};
    const std::array<long long, 18> mult = {1, 1, 0, 4, 5, 4, 1, 1, 6, 0, 5, 6, 3, 3, 1, 2, 2, 0};
    const auto& s = surface(5);
    const auto rep = d5_report(s.lt, s.conics, groups.count(5) ? groups[5].get() : nullptr);
    o.require(rep.chi == chi, "chi_5");
    o.require(rep.wedge3 == wedge3, "wedge^3 chi_5");
    o.require(d5_format(rep.chi_mult) == "[.5]+[1.4]+[2.3]", "decomposition of chi_5");
    o.require(rep.wedge3_mult == mult, "multiplicities of wedge^3 chi_5");
    o.require(rep.classes_partition_group, "representatives cover the classes");
    o.detail << " chi_5 = " << d5_format(rep.chi_mult) << ", signature multiplicity " << rep.signature_mult;
  });

  std::map<int, CharacterSummary> summaries;
  criterion(7, "signature multiplicity 0 for r = 4..7 by full-group sums", [&](Outcome& o) {
    for (int r = 4; r <= 7; ++r) {
      const auto t0 = Clock::now();
      if (!groups.count(r)) groups[r] = std::make_unique<WeylGroup>(WeylGroup::enumerate(r, surface(r).lt));
      const CharacterContext ctx{*groups[r], surface(r).lt, surface(r).conics, resolve_threads()};
      summaries[r] = summarize_characters(ctx);
      const double t = seconds_since(t0);
      o.require(summaries[r].signature == 0, "r=" + std::to_string(r));
      o.detail << " r" << r << "=" << format_rational(summaries[r].signature);
      if (r == 7) {
        o.detail << " (r7 " << t << " s)";
        o.require(t < 900, "runtime r=7");
      }
    }
  });

  criterion(8, "projections onto trivial and reflection, character norms", [&](Outcome& o) {
    const int norms[] = {3, 3, 3, 4};
    const int conic_norms[] = {2, 3, 3, 5};
    for (int r = 4; r <= 7; ++r) {
      if (!summaries.count(r)) {
        o.require(false, "no summary for r=" + std::to_string(r));
        continue;
      }
      const auto& s = summaries[r];
      o.require(s.line_trivial == 1 && s.line_reflection == 1, "projections r=" + std::to_string(r));
      o.require(s.line_norm == norms[r - 4], "line norm r=" + std::to_string(r));
      o.require(s.conic_norm == conic_norms[r - 4], "conic norm r=" + std::to_string(r));
      o.detail << " r" << r << ": " << format_rational(s.line_norm) << "/" << format_rational(s.conic_norm);
    }
  });

  criterion(9, "Asym-versus-shuffle identities and shuffle homomorphism", [&](Outcome& o) {
    for (const auto& id : verify_asym_shuffle_identities()) {
      o.require(id.holds && id.difference.is_zero(), id.name);
      o.detail << " " << id.name << " ok";
    }
    const auto sh = shuffle_homomorphism_check(200, 5, 2024);
    o.require(sh.ok(), "shuffle homomorphism");
    o.detail << ", " << sh.pairs << " shuffle pairs";
  });

  criterion(10, "dP4 residues and exact symbolic identity, 5 random parameter pairs", [&](Outcome& o) {
    for (std::uint64_t seed = 101; seed <= 105; ++seed) {
      const auto [g, p] = random_admissible(seed);
      const auto web = dp4_web(g, p);
      const auto rc = residue_check(web, 20, seed, false);
      o.require(rc.ok, "residues at (" + format_rational(g) + ", " + format_rational(p) + ")");
      const auto eps = translate_signs(web, kernel_signs(5));
      o.require(symbolic_sum(web, eps).is_zero(), "symbolic zero");
      for (int d = 0; d < web.size(); ++d) o.require(!symbolic_sum(web, eps, d).is_zero(), "drop term");
      o.detail << " (" << format_rational(g) << "," << format_rational(p) << ")";
    }
  });

  criterion(11, "numeric identities along planar paths and shuffle consistency", [&](Outcome& o) {
    const auto abel = abel_web();
    const auto abel_rep = verify_identity_numeric(abel, translate_signs(abel, kernel_signs(4)), 20, 1e-8, 11);
    o.require(abel_rep.pass, "Abel");
    o.detail << " Abel max rel " << abel_rep.max_relative_residual;
    const auto eps5 = kernel_signs(5);
    double worst = 0;
    for (std::uint64_t seed = 201; seed <= 203; ++seed) {
      const auto [g, p] = random_admissible(seed);
      const auto web = dp4_web(g, p);
      const auto rep = verify_identity_numeric(web, translate_signs(web, eps5), 10, 1e-6, seed);
      o.require(rep.pass, "dP4 at (" + format_rational(g) + ", " + format_rational(p) + ")");
      worst = std::max(worst, rep.max_relative_residual);
    }
    o.detail << "; dP4 max rel " << worst;
    // Shuffle consistency of numerically transported words.
    std::mt19937_64 rng(77);
    const LogFormBasis basis{{Complex(0, 0), Complex(1, 0), Complex(-0.5, 1.25)}};
    const auto ev = evaluate_words(basis, Complex(0.35, -0.6), Complex(1.8, 0.7), 4);
    int bad = 0;
    for (int n = 0; n < 50; ++n) {
      Word u(1 + rng() % 2), v(1 + rng() % 2);
      for (auto& l : u) l = static_cast<int>(rng() % 3);
      for (auto& l : v) l = static_cast<int>(rng() % 3);
      const double diff = std::abs(ev.value(u) * ev.value(v) - ev.value(shuffle(u, v)));
      if (diff > 100 * ev.error) ++bad;
    }
    o.require(bad == 0, "shuffle consistency");
    o.detail << "; 50 shuffle pairs, error budget " << ev.error;
  });

  criterion(12, "byte-identical CLI artifacts across two runs", [&](Outcome& o) {
    const std::vector<std::string> commands = {
        "enumerate --rank 6",
        "group --rank 5 --orbit [1,-1,0,0,0,0]",
        "certify --rank 6 --randomize --seed 7",
        "characters --rank 5 --d5-full",
        "symbols --check-asym --seed 3",
        "numeric --rank 5 --gamma 2/7 --pi -3/4 --samples 4 --seed 5",
        "all --rank 4 --seed 9",
    };
    for (std::size_t i = 0; i < commands.size(); ++i) {
      const std::string a = "acceptance_det_" + std::to_string(i) + "_a.json";
      const std::string b = "acceptance_det_" + std::to_string(i) + "_b.json";
      const int ca = run_cli(commands[i], a);
      const int cb = run_cli(commands[i], b);
      const std::string ta = slurp(a), tb = slurp(b);
      o.require(ca == 0 && cb == 0, "exit status of '" + commands[i] + "'");
      o.require(!ta.empty() && ta == tb, "bytes of '" + commands[i] + "'");
      std::remove(a.c_str());
      std::remove(b.c_str());
    }
    o.detail << " " << commands.size() << " commands";
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
