#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cli.hpp"
#include "weyltrunc/errors.hpp"
#include "weyltrunc/kernels.hpp"

using namespace weyltrunc;

namespace {

constexpr const char* kFooter =
    "The dot action follows Jantzen's convention, w.y = w(y + rho) - rho, with rho the half sum of\n"
    "positive roots; weights are integer vectors in fundamental-weight coordinates, Bourbaki order.\n"
    "Exit codes: 0 all checks pass, 1 verification failure, 2 usage or configuration error,\n"
    "3 resource cap exceeded. WEYLTRUNC_CAP overrides the default box-volume cap.";

std::uint64_t default_cap() {
  Caps caps;
  if (const char* env = std::getenv("WEYLTRUNC_CAP")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw ConfigError(std::string("WEYLTRUNC_CAP must be a positive integer, got '") + env + "'");
    return v;
  }
  return caps.max_box_volume;
}

int fail(int code, const std::string& message) {
  std::cerr << "weyltrunc: " << message << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root-system, Weyl group and truncation-poset engine", "weyltrunc"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Flat key=value file whose keys mirror the long flag names");

  std::string type = "A";
  int rank = 1;
  std::string p_text;
  std::string m_text = "1";
  std::string order_text;
  std::string emit_text = "json";
  std::string set_text = "lambda";
  std::string out_path;
  std::uint64_t cap = 0;
  int max_rank = kDefaultRankCap;
  std::size_t max_counterexamples = Caps{}.max_counterexamples;
  std::size_t max_hasse_nodes = Caps{}.max_hasse_nodes;
  int threads = 0;
  bool allow_small_p = false;
  bool timing = false;
  bool cross_orbit = false;
  bool strict = false;

  app.add_option("--type", type, "Cartan type letter A-G")->capture_default_str();
  app.add_option("--rank", rank, "Rank")->capture_default_str();
  app.add_option("--p", p_text, "Prime p > h; explore also takes a list 5,7 or a range 5..13");
  app.add_option("--m", m_text, "Truncation level m >= 1, or a range a..b for verify/explore")->capture_default_str();
  app.add_option("--order", order_text, "dominance | excellent | antipodal-excellent | strong-linkage");
  app.add_option("--emit", emit_text, "json | dot | csv")->capture_default_str();
  app.add_option("--set", set_text, "poset: lambda | lambda-pY | gamma")->capture_default_str();
  app.add_option("--out", out_path, "Write output here instead of stdout");
  app.add_option("--cap", cap, "Maximum enumeration box volume");
  app.add_option("--max-rank", max_rank, "Rank cap (default 4, at most 6)")->capture_default_str();
  app.add_option("--max-counterexamples", max_counterexamples, "Counterexamples kept per check")->capture_default_str();
  app.add_option("--max-hasse-nodes", max_hasse_nodes, "Largest poset drawn as a Hasse diagram")->capture_default_str();
  app.add_option("--threads", threads, "OpenMP worker count (0 keeps the runtime default)");
  app.add_flag("--allow-small-p", allow_small_p, "explore: admit h < p <= 2h-2");
  app.add_flag("--timing", timing, "Record elapsed_ms in reports (output is then not reproducible)");
  app.add_flag("--strict", strict, "verify: also assert the checks only claimed for p > 2h-2");
  app.add_flag("--cross-orbit", cross_orbit, "poset: apply the Bruhat clause of the excellent order across orbits");

  auto* describe = app.add_subcommand("describe", "Cartan matrix, positive roots, rho, alpha0, h, |W|");
  auto* truncate = app.add_subcommand("truncate", "Lambda_m, Lambda_m ∩ pY, Gamma_m and their pairing");
  auto* verify = app.add_subcommand("verify", "Run every truncation check for each m in the range");
  auto* poset = app.add_subcommand("poset", "Hasse diagram of one truncation set under an order");
  auto* explore = app.add_subcommand("explore", "Sweep (p, m) and record where the p > 2h-2 statements hold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  cli::Outcome outcome;
  try {
    cli::RunConfig cfg;
    if (describe->parsed()) cfg.command = cli::Command::Describe;
    else if (truncate->parsed()) cfg.command = cli::Command::Truncate;
    else if (verify->parsed()) cfg.command = cli::Command::Verify;
    else if (poset->parsed()) cfg.command = cli::Command::Poset;
    else if (explore->parsed()) cfg.command = cli::Command::Explore;

    if (allow_small_p && cfg.command != cli::Command::Explore)
      throw ConfigError("--allow-small-p is only accepted by explore");
    if (strict && cfg.command != cli::Command::Verify) throw ConfigError("--strict is only accepted by verify");
    if (cross_orbit && cfg.command != cli::Command::Poset)
      throw ConfigError("--cross-orbit is only accepted by poset");

    cfg.spec = cli::parse_type(type, rank);
    if (max_rank < 1 || max_rank > kHardRankCap)
      throw ConfigError("--max-rank must lie in 1.." + std::to_string(kHardRankCap));
    cfg.max_rank = max_rank;
    cfg.p_text = p_text;
    cfg.m = cli::parse_int_range(m_text, "m");
    if (!order_text.empty()) cfg.order = parse_order_tag(order_text);
    cfg.reading = cross_orbit ? ExcellentReading::CrossOrbit : ExcellentReading::SameOrbit;
    cfg.emit = cli::parse_emit(emit_text);
    cfg.set = cli::parse_set(set_text);
    cfg.allow_small_p = allow_small_p;
    cfg.strict = strict;
    cfg.timing = timing;
    cfg.caps.max_box_volume = cap ? cap : default_cap();
    cfg.caps.max_counterexamples = max_counterexamples;
    cfg.caps.max_hasse_nodes = max_hasse_nodes;
    if (threads > 0) kernels::set_worker_count(threads);
    if (cfg.command != cli::Command::Describe && p_text.empty()) throw ConfigError("--p is required");

    outcome = cli::run(cfg);
  } catch (const ConfigError& e) {
    return fail(cli::kExitUsage, e.what());
  } catch (const PreconditionError& e) {
    return fail(cli::kExitUsage, e.what());
  } catch (const ResourceError& e) {
    return fail(cli::kExitResource, e.what());
  } catch (const OverflowError& e) {
    return fail(cli::kExitResource, std::string("arithmetic overflow: ") + e.what());
  } catch (const std::exception& e) {
    return fail(cli::kExitFailed, e.what());
  }

  for (const auto& w : outcome.warnings) std::cerr << "weyltrunc: warning: " << w << "\n";
  if (out_path.empty()) {
    std::cout << outcome.output;
    std::cout.flush();
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!(f << outcome.output)) return fail(cli::kExitUsage, "cannot write " + out_path);
  }
  return outcome.exit_code;
}
