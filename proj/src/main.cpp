// unicov — covering and universality invariants of finite abelian groups.
//
// Single batch binary, subcommand style.  Every run embeds its configuration
// (command, seed, version) in the JSON report so results can be replayed.
// Exit codes: 0 success / no failures, 1 check failures, 2 usage errors,
// 3 infeasible or indeterminate.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "unicov/io.hpp"
#include "unicov/verify.hpp"

namespace {

using unicov::Json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailures = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

void emit(const Json& report) { std::cout << report.dump(2) << "\n"; }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

// ---------------------------------------------------------------------------
// compute
// ---------------------------------------------------------------------------

struct ComputeArgs {
  std::string what;
  std::string group;
  std::string set;
  std::string universe;  // optional restriction for cov
  std::uint64_t n = 2;
  double eps = 0.1;
  std::uint64_t seed = 0;
};

int cmd_compute(const ComputeArgs& args) {
  const unicov::Group g = unicov::parse_group(args.group);
  const unicov::GroupSet a = unicov::parse_set_literal(g, args.set);
  Json report;
  report["run"] = unicov::run_config_json("compute " + args.what, args.seed);
  report["group"] = unicov::group_to_string(g);
  report["set"] = unicov::set_to_json(a);

  if (args.what == "cov") {
    if (args.universe.empty()) {
      report["result"] = unicov::cover_to_json(unicov::cov_exact(a));
    } else {
      const unicov::GroupSet e = unicov::parse_set_literal(g, args.universe);
      report["universe"] = unicov::set_to_json(e);
      report["result"] = unicov::cover_to_json(unicov::cov_exact(a, e));
    }
  } else if (args.what == "un") {
    report["result"] = unicov::universality_to_json(unicov::un_exact(a));
  } else if (args.what == "u_n") {
    report["n"] = args.n;
    report["result"] = unicov::frac_to_json(unicov::u_n(a, args.n));
  } else if (args.what == "cov-mult") {
    const unicov::MultCover mc = unicov::cov_mult(a);
    report["result"] = unicov::cover_to_json(mc.cover);
    report["mult_context"] = unicov::mult_context_to_json(mc.ctx);
  } else if (args.what == "un-mult") {
    const unicov::MultUniversality mu = unicov::un_mult(a);
    report["result"] = unicov::universality_to_json(mu.report);
    report["mult_context"] = unicov::mult_context_to_json(mu.ctx);
  } else if (args.what == "ek") {
    report["k"] = args.n;
    report["result"] =
        Json{{"energy", unicov::higher_energy(a, args.n).str()},
             {"ek_norm_balanced",
              unicov::ek_norm(unicov::balanced_function(a), args.n)}};
  } else if (args.what == "wiener") {
    report["result"] =
        Json{{"wiener_norm", unicov::wiener_norm(unicov::indicator(a))}};
  } else if (args.what == "spectrum") {
    report["eps"] = args.eps;
    report["result"] =
        unicov::spectrum_to_json(unicov::spectrum(a, args.eps));
  }
  emit(report);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// construct
// ---------------------------------------------------------------------------

struct ConstructArgs {
  std::string family;
  std::string group;
  std::uint64_t p = 7;
  std::uint64_t n = 4;
  std::uint64_t k = 2;
  std::uint64_t big_n = 4096;
  std::uint64_t start = 0;
  std::uint64_t step = 1;
  std::uint64_t length = 1;
  double density = 0.5;
  double eps = 0.5;
  std::string style = "contiguous";
  std::string gamma;  // character list for bohr
  bool certify = false;
  std::uint64_t seed = 0;
};

Json describe_set(const unicov::GroupSet& s) {
  return Json{{"group", unicov::group_to_string(s.group())},
              {"size", s.size()},
              {"elements", unicov::set_to_json(s).dump()}};
}

int cmd_construct(const ConstructArgs& args) {
  Json report;
  report["run"] =
      unicov::run_config_json("construct " + args.family, args.seed);
  int exit_code = kExitOk;

  if (args.family == "ap") {
    const unicov::Group g = unicov::parse_group(args.group);
    report["result"] =
        describe_set(unicov::ap(g, args.start, args.step, args.length));
  } else if (args.family == "random") {
    const unicov::Group g = unicov::parse_group(args.group);
    const unicov::RandomSetResult r =
        unicov::random_set(g, args.density, args.seed);
    report["result"] = describe_set(r.set);
    report["result"]["realized_density"] = r.realized_density;
  } else if (args.family == "qr") {
    report["result"] = describe_set(unicov::quadratic_residues(args.p));
  } else if (args.family == "interval") {
    report["result"] = describe_set(unicov::interval_middle_third(args.p));
  } else if (args.family == "subspace-union") {
    const unicov::BlockStyle style = args.style == "round-robin"
                                         ? unicov::BlockStyle::kRoundRobin
                                         : unicov::BlockStyle::kContiguous;
    const unicov::GroupSet u =
        unicov::subspace_union_universal(args.n, args.k, style);
    report["result"] = describe_set(u);
    report["result"]["k_requested"] = args.k;
    if (args.certify || args.n <= 12) {
      const unicov::UniversalityReport ur = unicov::un_exact(u);
      report["result"]["un"] = unicov::universality_to_json(ur);
    }
  } else if (args.family == "universal-sumset") {
    const unicov::SumsetConstruction s =
        unicov::universal_sumset(args.big_n, args.k, args.seed);
    report["result"] = unicov::sumset_construction_to_json(s);
    report["result"]["u_summary"] =
        Json{{"size", s.u.size()},
             {"complement_size", s.u.group().order - s.u.size()}};
    if (s.cert.k_achieved < s.cert.k_requested) {
      report["result"]["status"] =
          "DOWNGRADED: certified only k = " +
          std::to_string(s.cert.k_achieved);
      exit_code = kExitInfeasible;
    }
  } else if (args.family == "bohr") {
    const unicov::Group g = unicov::parse_group(args.group);
    std::vector<unicov::Elem> gamma;
    if (!args.gamma.empty()) {
      const unicov::GroupSet gs = unicov::parse_set_literal(g, args.gamma);
      gamma = gs.ranks();
    }
    report["gamma"] = gamma;
    report["eps"] = args.eps;
    report["result"] = describe_set(unicov::bohr_set(g, gamma, args.eps));
  }
  emit(report);
  return exit_code;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::string exhaustive;  // group spec for the core suite
  std::vector<std::string> checks;
  std::uint64_t trials = 100;
  unsigned parallelism = 1;
  std::string out;
  std::uint64_t seed = 0;
};

int cmd_verify(const VerifyArgs& args) {
  unicov::CampaignReport rep;
  if (args.suite == "core") {
    if (args.exhaustive.empty()) {
      throw std::invalid_argument(
          "verify --suite core needs --exhaustive <group>");
    }
    rep = unicov::run_exhaustive_core(unicov::parse_group(args.exhaustive));
  } else if (args.suite == "all") {
    const std::vector<std::string> ids =
        args.checks.empty() ? unicov::all_check_ids() : args.checks;
    rep = unicov::run_campaign(ids, args.trials, args.seed, args.parallelism);
  } else {
    throw std::invalid_argument("verify: unknown suite " + args.suite);
  }
  Json report = unicov::campaign_to_json(rep);
  report["run"] = unicov::run_config_json("verify " + args.suite, args.seed);
  if (!args.out.empty()) write_file(args.out, report.dump(2) + "\n");
  emit(report);
  return rep.failed == 0 ? kExitOk : kExitCheckFailures;
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

struct TableArgs {
  std::vector<std::uint64_t> ps;
  std::vector<std::string> families;
  std::string out;
  std::uint64_t seed = 0;
};

int cmd_table(const TableArgs& args) {
  const unicov::TableReport rep =
      unicov::table_experiment(args.ps, args.families, args.seed);
  Json report = unicov::table_to_json(rep);
  report["run"] = unicov::run_config_json("table", args.seed);
  if (!args.out.empty()) write_file(args.out, unicov::table_to_csv(rep));
  emit(report);
  return rep.all_asserted_hold ? kExitOk : kExitCheckFailures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "unicov: covering numbers, universality and related invariants of "
      "finite abelian groups"};
  app.require_subcommand(1);

  ComputeArgs cargs;
  CLI::App* compute = app.add_subcommand(
      "compute", "evaluate one invariant of one explicit set");
  compute
      ->add_option("what", cargs.what, "invariant to compute")
      ->required()
      ->check(CLI::IsMember({"cov", "un", "u_n", "cov-mult", "un-mult", "ek",
                             "wiener", "spectrum"}));
  compute->add_option("--group", cargs.group, "group spec, e.g. Z12 or Z2^4")
      ->required();
  compute->add_option("--set", cargs.set, "set literal, e.g. [1,2,3]")
      ->required();
  compute->add_option("--universe", cargs.universe,
                      "restrict covering to this set (cov only)");
  compute->add_option("--n", cargs.n, "tuple length for u_n / ek");
  compute->add_option("--eps", cargs.eps, "threshold for spectrum");
  compute->add_option("--seed", cargs.seed, "report seed (provenance only)");

  ConstructArgs bargs;
  CLI::App* construct =
      app.add_subcommand("construct", "build a named family instance");
  construct->add_option("family", bargs.family, "family name")
      ->required()
      ->check(CLI::IsMember({"ap", "random", "qr", "interval",
                             "subspace-union", "universal-sumset", "bohr"}));
  construct->add_option("--group", bargs.group, "group spec");
  construct->add_option("--p", bargs.p, "prime field order");
  construct->add_option("--n", bargs.n, "dimension / term count");
  construct->add_option("--k", bargs.k, "universality target");
  construct->add_option("--N", bargs.big_n, "cyclic group order");
  construct->add_option("--start", bargs.start, "first element of the ap");
  construct->add_option("--step", bargs.step, "common difference of the ap");
  construct->add_option("--length", bargs.length, "length of the ap");
  construct->add_option("--density", bargs.density, "sampling density");
  construct->add_option("--eps", bargs.eps, "bohr radius");
  construct->add_option("--style", bargs.style, "subspace-union block layout")
      ->check(CLI::IsMember({"contiguous", "round-robin"}));
  construct->add_option("--gamma", bargs.gamma,
                        "character list for bohr, e.g. [1,3]");
  construct->add_flag("--certify", bargs.certify,
                      "run the exact solver on the result");
  construct->add_option("--seed", bargs.seed, "randomness seed");

  VerifyArgs vargs;
  CLI::App* verify =
      app.add_subcommand("verify", "run relation-check campaigns");
  verify->add_option("--suite", vargs.suite, "core or all")
      ->check(CLI::IsMember({"core", "all"}));
  verify->add_option("--exhaustive", vargs.exhaustive,
                     "group spec for the exhaustive core suite");
  verify->add_option("--checks", vargs.checks,
                     "subset of check ids (default: all)")
      ->delimiter(',');
  verify->add_option("--trials", vargs.trials, "instances per check");
  verify->add_option("--parallelism", vargs.parallelism, "worker threads");
  verify->add_option("--out", vargs.out, "write the JSON report here too");
  verify->add_option("--seed", vargs.seed, "campaign seed");

  TableArgs targs;
  CLI::App* table = app.add_subcommand(
      "table", "prime-field covering table for derived set families");
  table->add_option("--p", targs.ps, "primes, e.g. 11,31,101")
      ->required()
      ->delimiter(',');
  table->add_option("--families", targs.families,
                    "families: random, qr, interval")
      ->required()
      ->delimiter(',');
  table->add_option("--out", targs.out, "write CSV here");
  table->add_option("--seed", targs.seed, "randomness seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(cargs);
    if (*construct) return cmd_construct(bargs);
    if (*verify) return cmd_verify(vargs);
    if (*table) return cmd_table(targs);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  }
  return kExitUsage;
}
