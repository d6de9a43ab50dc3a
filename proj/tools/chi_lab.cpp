// chi_lab: exact graph invariants, chromatic upper bounds and conjecture
// scans over graph6 files or exhaustive labeled enumerations.

#include <cstdint>
#include <exception>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chilab/chilab.hpp"
#include "chilab/harness/records.hpp"
#include "chilab/harness/scan.hpp"
#include "chilab/harness/source.hpp"
#include "chilab/harness/verify.hpp"

namespace {

using namespace chilab;
using namespace chilab::harness;

enum ExitCode : int { kPass = 0, kUsageOrIo = 1, kBoundViolation = 2, kNotable = 3 };

struct SourceArgs {
  std::string file;
  int enumerate = 0;
  int enumerate_guard = kDefaultEnumerationGuard;

  void attach(CLI::App* cmd, bool allow_enumerate) {
    cmd->add_option("file", file, "graph6 input, one graph per line");
    if (allow_enumerate) {
      cmd->add_option("--enumerate", enumerate, "use all labeled graphs on N vertices instead of a file");
      cmd->add_option("--enumerate-guard", enumerate_guard, "largest N accepted by --enumerate")
          ->capture_default_str();
    }
  }

  std::unique_ptr<GraphSource> open() const {
    if (enumerate > 0 && !file.empty()) throw CLI::ValidationError("give either a file or --enumerate, not both");
    if (enumerate > 0) return std::make_unique<EnumerationSource>(enumerate, enumerate_guard);
    if (file.empty()) throw CLI::ValidationError("an input file (or --enumerate N) is required");
    return StreamSource::open(file);
  }
};

struct OutputArgs {
  std::string format = "jsonl";
  std::string out;

  void attach(CLI::App* cmd, const std::string& default_out) {
    out = default_out;
    cmd->add_option("--format", format, "record format")->check(CLI::IsMember({"jsonl", "csv"}))->capture_default_str();
    cmd->add_option("--out", out, "record output path ('-' for stdout)");
  }

  std::unique_ptr<RecordWriter> open() const {
    if (out.empty()) return nullptr;
    return std::make_unique<RecordWriter>(out, parse_format(format));
  }

  /// Human-readable summaries go to stderr when records occupy stdout.
  std::ostream& summary_stream() const { return out == "-" ? std::cerr : std::cout; }
};

struct GuardArgs {
  int max_n = 0;
  bool abort_oversize = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-n", max_n, "solver size guard (default 12 with excess, 16 without)");
    cmd->add_flag("--abort-oversize", abort_oversize, "fail instead of skipping graphs above the guard");
  }
};

std::string fmt_seconds(std::chrono::duration<double> d) { return format_double(d.count()) + "s"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chi_lab: exact chromatic-bound laboratory"};
  app.require_subcommand(1);

  // invariants
  auto* inv = app.add_subcommand("invariants", "exact invariants of each graph");
  SourceArgs inv_src;
  OutputArgs inv_out;
  GuardArgs inv_guard;
  bool inv_excess = false;
  inv_src.attach(inv, true);
  inv_out.attach(inv, "-");
  inv_guard.attach(inv);
  inv->add_flag("--with-excess", inv_excess, "also compute the chromatic excess");

  // bounds
  auto* bnd = app.add_subcommand("bounds", "evaluate every proven bound on each graph");
  SourceArgs bnd_src;
  OutputArgs bnd_out;
  GuardArgs bnd_guard;
  bool bnd_excess = false;
  std::string bnd_strategy = "heuristic";
  bnd_src.attach(bnd, true);
  bnd_out.attach(bnd, "-");
  bnd_guard.attach(bnd);
  bnd->add_flag("--with-excess", bnd_excess, "include the excess-based bounds");
  bnd->add_option("--strategy", bnd_strategy, "choice of H and K")
      ->check(CLI::IsMember({"exhaustive", "heuristic"}))
      ->capture_default_str();

  // verify
  auto* ver = app.add_subcommand("verify", "check all proven bounds, identities and lemmas");
  SourceArgs ver_src;
  OutputArgs ver_out;
  GuardArgs ver_guard;
  bool ver_excess = false;
  bool ver_fail_fast = false;
  std::string ver_strategy = "heuristic";
  ver_src.attach(ver, true);
  ver_out.attach(ver, "");
  ver_guard.attach(ver);
  ver->add_flag("--with-excess", ver_excess, "include the excess-based bounds and lemmas");
  ver->add_option("--strategy", ver_strategy, "choice of H and K")
      ->check(CLI::IsMember({"exhaustive", "heuristic"}))
      ->capture_default_str();
  ver->add_flag("--fail-fast", ver_fail_fast, "stop at the first violating graph");

  // scan-reed
  auto* sr = app.add_subcommand("scan-reed", "look for graphs above ceil((omega + Delta + 1) / 2)");
  SourceArgs sr_src;
  OutputArgs sr_out;
  GuardArgs sr_guard;
  sr_src.attach(sr, true);
  sr_out.attach(sr, "");
  sr_guard.attach(sr);

  // scan-eps
  auto* se = app.add_subcommand("scan-eps", "check the eps-bound / complement-connectivity dichotomy");
  SourceArgs se_src;
  OutputArgs se_out;
  GuardArgs se_guard;
  std::string se_eps;
  se_src.attach(se, true);
  se_out.attach(se, "");
  se_guard.attach(se);
  se->add_option("--epsilon", se_eps, "comma-separated positive rationals, e.g. 1/10,1/4,1/2")->required();

  // gen
  auto* gen = app.add_subcommand("gen", "emit G(n, p) graphs as graph6");
  int gen_n = 0;
  std::string gen_p;
  std::uint64_t gen_count = 1;
  std::uint64_t gen_seed = 0;
  gen->add_option("--n", gen_n, "vertex count")->required()->check(CLI::Range(1, kMaxVertices));
  gen->add_option("--p", gen_p, "edge probability as a rational")->required();
  gen->add_option("--count", gen_count, "number of graphs")->capture_default_str();
  gen->add_option("--seed", gen_seed, "SplitMix64 seed")->capture_default_str();

  // enumerate
  auto* en = app.add_subcommand("enumerate", "emit every labeled graph on n vertices as graph6");
  int en_n = 0;
  int en_guard = kDefaultEnumerationGuard;
  en->add_option("--n", en_n, "vertex count")->required();
  en->add_option("--guard", en_guard, "largest n accepted")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsageOrIo;
  }

  try {
    if (inv->parsed() || bnd->parsed()) {
      const bool is_inv = inv->parsed();
      const SourceArgs& src_args = is_inv ? inv_src : bnd_src;
      const OutputArgs& out_args = is_inv ? inv_out : bnd_out;
      const GuardArgs& guard = is_inv ? inv_guard : bnd_guard;
      auto source = src_args.open();
      auto writer = out_args.open();
      ScanOptions opts;
      opts.with_excess = is_inv ? inv_excess : bnd_excess;
      opts.strategy = parse_strategy(bnd_strategy);
      opts.max_n = guard.max_n;
      opts.abort_on_oversize = guard.abort_oversize;
      opts.records = writer.get();
      const RecordRunSummary summary = is_inv ? run_invariants(*source, opts) : run_bounds(*source, opts);
      if (writer) writer->close();
      std::ostream& log = out_args.summary_stream();
      log << "graphs: " << summary.graphs_processed << " (skipped " << summary.graphs_skipped << ")\n";
      if (!is_inv) {
        log << "unsound proven-bound evaluations: " << summary.unsound << "\n";
        if (summary.unsound > 0) return kBoundViolation;
      }
      return kPass;
    }

    if (ver->parsed()) {
      auto source = ver_src.open();
      auto writer = ver_out.open();
      VerifyOptions opts;
      opts.with_excess = ver_excess;
      opts.strategy = parse_strategy(ver_strategy);
      opts.fail_fast = ver_fail_fast;
      opts.max_n = ver_guard.max_n;
      opts.abort_on_oversize = ver_guard.abort_oversize;
      opts.records = writer.get();
      const VerificationSummary summary = verify_all(*source, opts);
      if (writer) writer->close();
      std::ostream& log = ver_out.summary_stream();
      log << "graphs processed: " << summary.graphs_processed << " (skipped " << summary.graphs_skipped << ")\n"
          << "checks: " << summary.bound_checks << "\n"
          << "excess upper lemma unchecked (alpha < 3): " << summary.lemma_upper_unchecked << "\n"
          << "violations: " << summary.violations.size() << "\n"
          << "elapsed: " << fmt_seconds(summary.elapsed) << "\n";
      for (const auto& v : summary.violations)
        std::cerr << "VIOLATION " << v.check << " graph6=" << v.graph6 << " params=" << v.params
                  << " value=" << v.value << " chi=" << v.chi << "\n";
      log << (summary.passed() ? "PASS" : "FAIL") << "\n";
      return summary.passed() ? kPass : kBoundViolation;
    }

    if (sr->parsed()) {
      auto source = sr_src.open();
      auto writer = sr_out.open();
      ScanOptions opts;
      opts.max_n = sr_guard.max_n;
      opts.abort_on_oversize = sr_guard.abort_oversize;
      opts.records = writer.get();
      const ReedScanSummary summary = scan_reed(*source, opts);
      if (writer) writer->close();
      std::ostream& log = sr_out.summary_stream();
      log << "graphs processed: " << summary.graphs_processed << " (skipped " << summary.graphs_skipped << ")\n"
          << "elapsed: " << fmt_seconds(summary.elapsed) << "\n";
      for (const auto& v : summary.violators)
        std::cerr << "VIOLATOR graph6=" << v.graph6 << " chi=" << v.chromatic << " reed=" << v.reed
                  << " kappa_log_ratio=" << (v.kappa_log_ratio ? format_double(*v.kappa_log_ratio) : "n/a") << "\n";
      if (exit_status(summary) == kPass) {
        log << "no violators\n";
        return kPass;
      }
      log << "violators: " << summary.violators.size() << "\n"
          << "min kappa_bar/log2(n) over violators: "
          << (summary.min_violator_ratio ? format_double(*summary.min_violator_ratio) : "undefined") << "\n";
      return exit_status(summary);
    }

    if (se->parsed()) {
      const std::vector<Rational> eps_list = parse_rational_list(se_eps);
      auto source = se_src.open();
      auto writer = se_out.open();
      ScanOptions opts;
      opts.max_n = se_guard.max_n;
      opts.abort_on_oversize = se_guard.abort_oversize;
      opts.records = writer.get();
      const EpsScanSummary summary = scan_eps(*source, eps_list, opts);
      if (writer) writer->close();
      std::ostream& log = se_out.summary_stream();
      log << "graphs processed: " << summary.graphs_processed << " (skipped " << summary.graphs_skipped << ")\n";
      for (const auto& t : summary.tallies)
        log << "eps=" << to_string(t.eps) << " bound holds: " << t.bound_holds
            << " threshold consulted: " << t.threshold_consulted << "\n";
      for (const auto& f : summary.failures)
        std::cerr << "DICHOTOMY_FAILURE kind=" << f.kind << " eps=" << to_string(f.eps) << " graph6=" << f.graph6
                  << "\n";
      log << "dichotomy failures: " << summary.failures.size() << "\n"
          << "elapsed: " << fmt_seconds(summary.elapsed) << "\n"
          << (summary.passed() ? "PASS" : "FAIL") << "\n";
      return summary.passed() ? kPass : kBoundViolation;
    }

    if (gen->parsed()) {
      const Rational p = parse_rational(gen_p);
      SplitMix64 seeds(gen_seed);
      for (std::uint64_t i = 0; i < gen_count; ++i) std::cout << encode_graph6(gen_gnp(gen_n, p, seeds())) << '\n';
      return kPass;
    }

    if (en->parsed()) {
      LabeledEnumeration enumeration(en_n, en_guard);
      enumeration.for_each([](const Graph& g) { std::cout << encode_graph6(g) << '\n'; });
      return kPass;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageOrIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageOrIo;
  }
  return kUsageOrIo;
}
