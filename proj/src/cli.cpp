#include "dphlog/cli.hpp"

#include "dphlog/characters.hpp"
#include "dphlog/incidence.hpp"
#include "dphlog/parallel.hpp"
#include "dphlog/planar_web.hpp"
#include "dphlog/symbols.hpp"
#include "dphlog/transport.hpp"
#include "dphlog/wedge.hpp"
#include "dphlog/weyl.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace dphlog {

using nlohmann::ordered_json;

int exit_status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedRank:
    case ErrorCode::ParseError:
    case ErrorCode::DegenerateParameters:
    case ErrorCode::GroupTooLarge:
      return kExitUsage;
    case ErrorCode::RankMismatch:
    case ErrorCode::NotARoot:
    case ErrorCode::FiberCountViolation:
      return kExitEnumeration;
    case ErrorCode::KernelDimensionViolation:
    case ErrorCode::SignViolation:
      return kExitKernel;
    case ErrorCode::NotACharacter:
      return kExitCharacter;
    case ErrorCode::ResidueMismatch:
    case ErrorCode::SymbolicIdentityViolation:
    case ErrorCode::PathTooClose:
    case ErrorCode::QuadratureFailure:
      return kExitNumeric;
    case ErrorCode::InternalError:
    case ErrorCode::IndexError:
      break;
  }
  return kExitInternal;
}

namespace {

ordered_json ints_json(const DivisorClass& d) { return d.to_ints(); }

std::string q(const Rational& x) { return format_rational(x); }

template <std::size_t N>
ordered_json array_json(const std::array<long long, N>& a) {
  return ordered_json(std::vector<long long>(a.begin(), a.end()));
}

ordered_json complex_json(const Complex& z) { return ordered_json::array({z.real(), z.imag()}); }

RunResult run_enumerate(const RunConfig& c, bool full) {
  require_rank(c.rank);
  const int r = c.rank;
  const auto lt = enumerate_lines(r);
  const auto conics = enumerate_conics(r, lt);

  bool fibers_ok = true;
  std::set<int> covered;
  for (const auto& f : conics) {
    fibers_ok = fibers_ok && static_cast<int>(f.fibers.size()) == r - 1;
    for (const auto& [a, b] : f.fibers) {
      fibers_ok = fibers_ok && pair(lt.lines[a], lt.lines[b]) == 1 && lt.lines[a] + lt.lines[b] == f.cls;
      covered.insert(a);
      covered.insert(b);
    }
  }
  const bool counts_ok = lt.size() == line_count(r) && static_cast<int>(conics.size()) == conic_count(r);
  const bool cover_ok = static_cast<int>(covered.size()) == lt.size();

  RunResult res;
  auto& j = res.artifact;
  j["r"] = r;
  j["line_count"] = lt.size();
  j["conic_count"] = conics.size();
  j["checks"] = {{"counts", counts_ok}, {"fibers_transverse_pairs", fibers_ok}, {"lines_covered", cover_ok}};
  if (full) {
    ordered_json lines = ordered_json::array();
    for (const auto& l : lt.lines) lines.push_back(ints_json(l));
    ordered_json cs = ordered_json::array();
    for (const auto& f : conics) {
      ordered_json fibers = ordered_json::array();
      for (const auto& [a, b] : f.fibers) fibers.push_back({a, b});
      cs.push_back({{"class", ints_json(f.cls)}, {"fibers", fibers}});
    }
    j["lines"] = lines;
    j["conics"] = cs;
  }
  res.status = counts_ok && fibers_ok && cover_ok ? kExitOk : kExitEnumeration;
  return res;
}

DivisorClass parse_class(const std::string& text, int r) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("class JSON: ") + e.what());
  }
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "class must be a JSON array");
  ordered_json strings = ordered_json::array();
  for (const auto& x : j) strings.push_back(x.is_string() ? x.get<std::string>() : x.dump());
  auto d = divisor_from_json(strings);
  if (d.rank() != r)
    throw Error(ErrorCode::RankMismatch,
                "class has " + std::to_string(d.rank() + 1) + " coefficients, rank " + std::to_string(r) + " needs " +
                    std::to_string(r + 1));
  return d;
}

RunResult run_group(const RunConfig& c) {
  require_rank(c.rank);
  const int r = c.rank;
  RunResult res;
  auto& j = res.artifact;
  j["r"] = r;
  const std::uint64_t expected = group_order(r);
  if (!c.orbit.empty()) {
    const auto target = parse_class(c.orbit, r);
    const auto orbit = class_orbit(target);
    j["class"] = ints_json(target);
    j["orbit_size"] = orbit.size();
    j["group_order"] = expected;
    const bool divides = expected % orbit.size() == 0;
    j["stabilizer_order"] = divides ? expected / orbit.size() : 0;
    bool ok = divides;
    // Count the stabilizer directly when the group is small enough.
    if (r <= 7 && (is_line(target) || is_conic_class(target))) {
      const auto counted = stabilizer_order(r, target);
      j["stabilizer_counted"] = counted;
      ok = ok && counted * orbit.size() == expected;
    }
    res.status = ok ? kExitOk : kExitEnumeration;
    return res;
  }
  if (c.count_only && r == 8) {
    j["order"] = expected;
    j["enumerated"] = false;
    return res;
  }
  const auto lt = enumerate_lines(r);
  const auto group = WeylGroup::enumerate(r, lt);
  j["order"] = group.size();
  j["enumerated"] = true;
  j["expected"] = expected;
  if (!c.count_only) {
    long long even = 0;
    for (std::size_t i = 0; i < group.size(); ++i) even += group.sign(i) > 0;
    j["degree"] = group.degree();
    j["generators"] = group.gens().size();
    j["even_elements"] = even;
  }
  res.status = group.size() == expected ? kExitOk : kExitEnumeration;
  return res;
}

RunResult run_certify(const RunConfig& c) {
  KernelOptions opts;
  opts.randomize = c.randomize;
  opts.seed = c.seed;
  opts.quotient = c.quotient;
  opts.threads = resolve_threads(c.threads);
  opts.stretch = c.stretch;
  const auto cert = kernel_signs(c.rank, opts);
  RunResult res;
  res.artifact = to_json(cert);
  return res;
}

RunResult run_replay(const RunConfig& c) {
  std::ifstream in(c.input);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + c.input);
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const ordered_json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("certificate JSON: ") + e.what());
  }
  const auto cert = certificate_from_json(j);
  const auto rep = replay_certificate(cert);
  RunResult res;
  res.artifact = {{"r", cert.r},
                  {"classes_match", rep.classes_match},
                  {"fibers_valid", rep.fibers_valid},
                  {"signs_valid", rep.signs_valid},
                  {"vanishes", rep.vanishes},
                  {"hash_matches", rep.hash_matches},
                  {"ok", rep.ok()}};
  res.status = rep.ok() ? kExitOk : kExitKernel;
  return res;
}

RunResult run_characters(const RunConfig& c) {
  require_rank(c.rank, 3, 7);
  if (c.d5_full && c.rank != 5) throw Error(ErrorCode::UnsupportedRank, "--d5-full needs rank 5");
  const int r = c.rank;
  const auto lt = enumerate_lines(r);
  const auto conics = enumerate_conics(r, lt);
  const auto group = WeylGroup::enumerate(r, lt);
  const CharacterContext ctx{group, lt, conics, resolve_threads(c.threads)};
  const auto s = summarize_characters(ctx);

  RunResult res;
  auto& j = res.artifact;
  j["r"] = r;
  j["order"] = s.order;
  j["line_trivial"] = q(s.line_trivial);
  j["line_reflection"] = q(s.line_reflection);
  j["line_norm"] = q(s.line_norm);
  j["conic_norm"] = q(s.conic_norm);
  j["conic_line"] = q(s.conic_line);
  j["conic_trivial"] = q(s.conic_trivial);
  j["reflection_norm"] = q(s.reflection_norm);
  j["wedge_degree"] = s.wedge_degree;
  j["signature_multiplicity"] = q(s.signature);
  bool ok = s.line_trivial == 1 && s.line_reflection == 1 && s.reflection_norm == 1;
  if (r >= 4) ok = ok && s.signature == 0;

  if (c.d5_full) {
    const auto d5 = d5_report(lt, conics, &group);
    const auto& table = D5CharacterTable::get();
    ordered_json f;
    f["class_labels"] = table.class_labels;
    f["class_sizes"] = array_json(table.class_sizes);
    f["measured_class_sizes"] = d5.measured_class_sizes;
    f["classes_partition_group"] = d5.classes_partition_group;
    f["chi"] = array_json(d5.chi);
    f["wedge3"] = array_json(d5.wedge3);
    f["conic"] = array_json(d5.conic);
    f["chi_decomposition"] = d5_format(d5.chi_mult);
    f["wedge3_decomposition"] = d5_format(d5.wedge3_mult);
    f["conic_decomposition"] = d5_format(d5.conic_mult);
    f["wedge3_multiplicities"] = array_json(d5.wedge3_mult);
    f["signature_multiplicity"] = d5.signature_mult;
    j["d5"] = f;
    ok = ok && d5.classes_partition_group && d5.signature_mult == 0;
  }
  res.status = ok ? kExitOk : kExitCharacter;
  return res;
}

RunResult run_symbols(const RunConfig& c) {
  RunResult res;
  auto& j = res.artifact;
  bool ok = true;
  if (c.check_asym) {
    ordered_json ids = ordered_json::array();
    for (const auto& id : verify_asym_shuffle_identities()) {
      ids.push_back({{"name", id.name}, {"holds", id.holds}, {"difference_terms", id.difference.size()}});
      ok = ok && id.holds;
    }
    j["asym_identities"] = ids;
  }
  const auto sh = shuffle_homomorphism_check(100, 4, c.seed);
  j["shuffle_pairs"] = sh.pairs;
  j["shuffle_failures"] = sh.failures;
  ok = ok && sh.ok();
  res.status = ok ? kExitOk : kExitNumeric;
  return res;
}

RunResult run_numeric(const RunConfig& c) {
  require_rank(c.rank, 4, 5);
  const PlanarWeb web = c.rank == 4 ? abel_web() : dp4_web(parse_rational(c.gamma), parse_rational(c.pi));
  KernelOptions kopts;
  kopts.threads = resolve_threads(c.threads);
  const auto eps = translate_signs(web, kernel_signs(c.rank, kopts));
  const auto residues = residue_check(web, 20, c.seed);
  const auto sum = symbolic_sum(web, eps);
  const auto rep = verify_identity_numeric(web, eps, c.samples, c.tolerance, c.seed);

  RunResult res;
  auto& j = res.artifact;
  j["r"] = c.rank;
  j["model"] = web.model == WebModel::Abel ? "abel" : "dp4";
  if (web.model == WebModel::DP4) {
    j["gamma"] = q(web.gamma);
    j["pi"] = q(web.pi);
  }
  j["seed"] = c.seed;
  j["epsilon"] = eps;
  j["residue_checks"] = residues.checks;
  j["symbolic_zero"] = sum.is_zero();
  j["base"] = rep.base;
  j["tol"] = rep.tol;
  ordered_json samples = ordered_json::array();
  for (const auto& s : rep.samples)
    samples.push_back({{"point", {complex_json(s.point[0]), complex_json(s.point[1])}},
                       {"residual", s.residual},
                       {"scale", s.scale},
                       {"relative", s.residual / std::max(s.scale, 1e-300)},
                       {"error_budget", s.error_budget}});
  j["samples"] = samples;
  j["max_relative_residual"] = rep.max_relative_residual;
  j["pass"] = rep.pass;
  res.status = rep.pass && residues.ok && sum.is_zero() ? kExitOk : kExitNumeric;
  return res;
}

RunResult guarded(const std::function<RunResult()>& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    RunResult res;
    res.status = exit_status_for(e.code());
    res.artifact = {{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
    return res;
  }
}

RunResult run_all(const RunConfig& c) {
  require_rank(c.rank);
  const int r = c.rank;
  RunResult res;
  auto& j = res.artifact;
  j["r"] = r;
  ordered_json routes;
  auto add = [&](const std::string& name, const std::function<RunResult()>& fn) {
    const auto sub = guarded(fn);
    routes[name] = {{"status", sub.status}, {"result", sub.artifact}};
    if (res.status == kExitOk) res.status = sub.status;
  };
  add("enumerate", [&] { return run_enumerate(c, false); });
  if (r <= 7) {
    RunConfig g = c;
    g.count_only = true;
    g.orbit.clear();
    add("group", [&] { return run_group(g); });
  }
  if (r >= 4 && (r <= 7 || c.stretch)) {
    add("certify", [&] {
      auto sub = run_certify(c);
      const auto cert = certificate_from_json(sub.artifact);
      sub.artifact = {{"method", cert.method},
                      {"kernel_dimension", cert.kernel_dimension},
                      {"epsilon", cert.epsilon},
                      {"replay_ok", replay_certificate(cert).ok()}};
      return sub;
    });
  }
  if (r <= 7) {
    RunConfig ch = c;
    ch.d5_full = r == 5;
    add("characters", [&] { return run_characters(ch); });
  }
  RunConfig sy = c;
  sy.check_asym = true;
  add("symbols", [&] { return run_symbols(sy); });
  if (r == 4 || r == 5) {
    add("numeric", [&] {
      auto sub = run_numeric(c);
      sub.artifact.erase("samples");
      return sub;
    });
  }
  j["routes"] = routes;
  j["ok"] = res.status == kExitOk;
  return res;
}

}  // namespace

RunResult run(const RunConfig& config) {
  const auto& s = config.subcommand;
  if (s == "enumerate") return run_enumerate(config, true);
  if (s == "group") return run_group(config);
  if (s == "certify") return run_certify(config);
  if (s == "replay") return run_replay(config);
  if (s == "characters") return run_characters(config);
  if (s == "symbols") return run_symbols(config);
  if (s == "numeric") return run_numeric(config);
  if (s == "all") return run_all(config);
  throw Error(ErrorCode::ParseError, "unknown subcommand '" + s + "'");
}

namespace {

void emit(const RunConfig& c, const ordered_json& artifact) {
  const std::string text = artifact.dump(2) + "\n";
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + c.output);
  out << text;
}

}  // namespace

int main_entry(int argc, char** argv) {
  CLI::App app{"Conic-web hyperlogarithm identities on del Pezzo surfaces", "dp-hlog"};
  app.require_subcommand(1);
  RunConfig c;
  app.add_option("--threads", c.threads, "worker threads (default: DP_HLOG_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);

  auto rank = [&](CLI::App* sub) { sub->add_option("--rank,-r", c.rank, "number of blown-up points")->required(); };
  auto out = [&](CLI::App* sub) { sub->add_option("--out,-o", c.output, "write the JSON artifact here"); };

  auto* en = app.add_subcommand("enumerate", "lines, conic classes and their reducible fibres");
  rank(en);
  out(en);

  auto* gr = app.add_subcommand("group", "order of W(E_r), or orbit and stabilizer of a class");
  rank(gr);
  out(gr);
  gr->add_flag("--count-only", c.count_only, "only report the group order");
  gr->add_option("--orbit", c.orbit, "class as a JSON array of r+1 integers");

  auto* ce = app.add_subcommand("certify", "kernel certificate for the conic-web identity");
  rank(ce);
  out(ce);
  ce->add_flag("--stretch", c.stretch, "allow r = 8");
  ce->add_option("--seed", c.seed, "seed for randomized choices");
  ce->add_flag("--randomize", c.randomize, "shuffle fibre orders and base fibres");
  ce->add_flag("--quotient", c.quotient, "drop the exceptional-line coordinates");

  auto* re = app.add_subcommand("replay", "re-verify a certificate");
  re->add_option("certificate", c.input, "certificate JSON")->required();
  out(re);

  auto* ch = app.add_subcommand("characters", "permutation characters and their projections");
  rank(ch);
  out(ch);
  ch->add_flag("--d5-full", c.d5_full, "r = 5 values and decompositions against the W(D5) table");

  auto* sy = app.add_subcommand("symbols", "shuffle algebra checks");
  out(sy);
  sy->add_flag("--check-asym", c.check_asym, "verify the Asym-versus-shuffle identities");
  sy->add_option("--seed", c.seed, "seed for the random word pairs");

  auto* nu = app.add_subcommand("numeric", "evaluate the identity along planar paths");
  rank(nu);
  out(nu);
  nu->add_option("--gamma", c.gamma, "first dP4 parameter, p/q");
  nu->add_option("--pi", c.pi, "second dP4 parameter, p/q");
  nu->add_option("--samples", c.samples, "number of endpoints")->check(CLI::PositiveNumber);
  nu->add_option("--tol", c.tolerance, "relative residual bound")->check(CLI::PositiveNumber);
  nu->add_option("--seed", c.seed, "seed for base and sample points");

  auto* al = app.add_subcommand("all", "every applicable route, aggregated");
  rank(al);
  out(al);
  al->add_option("--seed", c.seed, "seed for randomized choices");
  al->add_flag("--stretch", c.stretch, "include the r = 8 certificate");
  al->add_option("--samples", c.samples, "numeric endpoints")->check(CLI::PositiveNumber);
  al->add_option("--tol", c.tolerance, "numeric residual bound")->check(CLI::PositiveNumber);
  al->add_option("--gamma", c.gamma, "first dP4 parameter, p/q");
  al->add_option("--pi", c.pi, "second dP4 parameter, p/q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  c.subcommand = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  RunResult res;
  try {
    res = run(c);
  } catch (const Error& e) {
    std::cerr << "dp-hlog: " << e.what() << "\n";
    res.status = exit_status_for(e.code());
    res.artifact = {{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
  } catch (const std::exception& e) {
    std::cerr << "dp-hlog: " << e.what() << "\n";
    res.status = kExitInternal;
    res.artifact = {{"error", "InternalError"}, {"message", e.what()}};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  try {
    emit(c, res.artifact);
  } catch (const Error& e) {
    std::cerr << "dp-hlog: " << e.what() << "\n";
    return kExitUsage;
  }
  std::ostringstream msg;
  msg << "dp-hlog " << c.subcommand << ": exit " << res.status << ", runtime " << secs << " s\n";
  std::cerr << msg.str();
  return res.status;
}

}  // namespace dphlog
