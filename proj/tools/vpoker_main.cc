#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <random>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "vpoker/canonical.h"
#include "vpoker/distribution.h"
#include "vpoker/expect.h"
#include "vpoker/pay_table.h"
#include "vpoker/solve_csv.h"
#include "vpoker/strategy.h"

namespace {

using namespace vpoker;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct SolveArgs {
  std::string paytable = "job96";
  std::string backend = "fast";
  std::size_t sample = 0;
  unsigned seed = 1;
  unsigned workers = 0;
  std::string output;
};

struct AdviseArgs {
  std::string hand;
  std::string paytable = "job96";
  std::string table = "job-optimal";
};

struct StatsArgs {
  std::string paytable = "job96";
  std::string distribution;
  unsigned workers = 0;
};

struct VerifyArgs {
  std::string table;
  std::string paytable = "job96";
  unsigned workers = 0;
  std::size_t max_lines = 50;
};

// Classes to solve: all of them, or `sample` drawn uniformly without
// replacement and kept in enumeration order.
std::vector<EquivClass> pick_classes(std::size_t sample, unsigned seed) {
  auto classes = enumerate_classes();
  if (sample == 0 || sample >= classes.size()) return classes;
  std::vector<EquivClass> picked;
  picked.reserve(sample);
  std::sample(classes.begin(), classes.end(), std::back_inserter(picked), sample,
              std::mt19937_64(seed));
  return picked;
}

int run_solve(const SolveArgs& a) {
  const PayTable table = resolve_pay_table(a.paytable);
  SolveOptions options;
  options.workers = a.workers;
  if (a.backend == "naive") {
    options.backend = Backend::kNaive;
  } else if (a.backend != "fast") {
    throw ConfigError("backend must be fast or naive, not '" + a.backend + "'");
  }
  const auto classes = pick_classes(a.sample, a.seed);
  const auto results = solve_all(classes, table, options);
  const std::string csv = solve_csv(results);
  if (a.output.empty() || a.output == "-") {
    std::cout << csv;
    return 0;
  }
  std::ofstream out(a.output, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + a.output + "'");
  out << csv;
  if (!out) throw ConfigError("error writing '" + a.output + "'");
  return 0;
}

int run_advise(const AdviseArgs& a) {
  const Hand hand = parse_hand(a.hand);
  const PayTable table = resolve_pay_table(a.paytable);
  const RankTable ranks = resolve_rank_table(a.table);
  const auto canon = canonicalize_with_source(hand);
  const CompletionMemo memo(table);
  const auto ce = ce_all_fast(std::span<const Card, kHandSize>(canon.canonical.cards), memo);

  // Canonical mask bit i is hand card source[i].
  std::array<ScaledCE, kNumMasks> by_hand{};
  std::array<unsigned, kNumMasks> to_hand{};
  for (unsigned m = 0; m < kNumMasks; ++m) {
    unsigned h = 0;
    for (int i = 0; i < kHandSize; ++i) {
      if (m & (1u << i)) h |= 1u << canon.source[static_cast<std::size_t>(i)];
    }
    to_hand[m] = h;
    by_hand[h] = ce[m];
  }
  EquivClass cls{canon.canonical, orbit_size(canon.canonical), 0, shape_of(std::span<const Card>(hand.cards()))};
  const HoldResult best = make_result(cls, ce);
  const unsigned best_hand_mask = to_hand[best.best_mask.bits];

  std::vector<unsigned> order(kNumMasks);
  for (unsigned m = 0; m < kNumMasks; ++m) order[m] = m;
  std::stable_sort(order.begin(), order.end(),
                   [&](unsigned x, unsigned y) { return by_hand[x] > by_hand[y]; });

  const auto& cards = hand.cards();
  std::cout << "hand " << to_string(hand) << " under " << table.name() << "\n";
  for (unsigned m : order) {
    std::string held;
    for (int i = 0; i < kHandSize; ++i) {
      held += (m & (1u << i)) ? to_string(cards[static_cast<std::size_t>(i)]) : "--";
      if (i + 1 < kHandSize) held += ' ';
    }
    std::cout << (m == best_hand_mask ? "* " : "  ") << held << "  " << std::setw(11)
              << by_hand[m] << "  " << scaled_to_decimal(by_hand[m]) << "\n";
  }
  std::cout << (best.unique ? "optimal hold is unique\n" : "optimal hold is not unique\n");
  const Classification c = classify(hand, ranks);
  if (c.rank == 0) {
    std::cout << ranks.name << ": no row fires\n";
  } else {
    std::cout << ranks.name << ": row " << c.rank << " (" << ranks.row(c.rank).label()
              << ") fires, CE " << scaled_to_decimal(by_hand[c.mask.bits])
              << (by_hand[c.mask.bits] == best.best() ? "" : " (not optimal)") << "\n";
  }
  return 0;
}

int run_stats(const StatsArgs& a) {
  const PayTable table = resolve_pay_table(a.paytable);
  SolveOptions options;
  options.workers = a.workers;
  const auto results = solve_all(table, options);
  const auto dist = build_distribution(results);
  const auto er = expected_return(dist);
  const auto median = median_report(dist);
  const auto garbage = garbage_probability(results);
  std::cout << "pay table                 " << table.name() << "\n"
            << "distinct optimal CEs      " << dist.size() << "\n"
            << "  with cards held         " << dist.held_values() << "\n"
            << "  drawing five            " << dist.garbage_values() << "\n"
            << "expected return           " << er.str() << " = " << er.to_decimal(6) << "\n"
            << "weighted scaled sum       " << weighted_sum(dist).str() << "\n"
            << "median CE                 " << median.median.str() << " = "
            << median.median.to_decimal(6) << " (CE number " << median.ce_number
            << ", cumulative hands " << median.weight_before << ".." << median.weight_through
            << " of " << dist.total_weight() << ", next value "
            << scaled_to_decimal(median.next_value) << ")\n"
            << "garbage probability       " << garbage.str() << " = "
            << garbage.to_decimal(7) << "\n";
  if (a.distribution == "text") {
    std::cout << "\n" << distribution_text(dist);
  } else if (a.distribution == "csv") {
    std::cout << "\n" << distribution_csv(dist);
  } else if (!a.distribution.empty()) {
    throw ConfigError("--distribution takes text or csv");
  }
  return 0;
}

int run_verify(const VerifyArgs& a) {
  const RankTable ranks = resolve_rank_table(a.table);
  const PayTable table = resolve_pay_table(a.paytable);
  SolveOptions options;
  options.workers = a.workers;
  const auto results = solve_all(table, options);
  const auto report = verify_table(ranks, results, a.workers);
  std::cout << ranks.name << " under " << table.name() << ": " << report.describe(a.max_lines);
  return report.ok() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact video poker solver"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve every equivalence class and write CSV");
  s->add_option("-p,--paytable", solve.paytable, "Pay table file or builtin name");
  s->add_option("-b,--backend", solve.backend, "fast or naive")
      ->check(CLI::IsMember({"fast", "naive"}));
  s->add_option("--sample", solve.sample, "Solve only N classes drawn uniformly");
  s->add_option("--seed", solve.seed, "Seed for --sample");
  s->add_option("-j,--workers", solve.workers, "Worker threads (0 = all cores)");
  s->add_option("-o,--output", solve.output, "Output CSV path (default stdout)");

  AdviseArgs advise;
  auto* ad = app.add_subcommand("advise", "Show every hold of one hand");
  ad->add_option("hand", advise.hand, "Five cards, e.g. \"8c Tc Jc Qc Kc\"")->required();
  ad->add_option("-p,--paytable", advise.paytable, "Pay table file or builtin name");
  ad->add_option("-t,--table", advise.table, "Rank table file or builtin name");

  StatsArgs stats;
  auto* st = app.add_subcommand("stats", "Summary statistics of a game");
  st->add_option("-p,--paytable", stats.paytable, "Pay table file or builtin name");
  st->add_option("--distribution", stats.distribution, "Also print the CE distribution")
      ->check(CLI::IsMember({"text", "csv"}));
  st->add_option("-j,--workers", stats.workers, "Worker threads (0 = all cores)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a rank table against the optimal holds");
  v->add_option("table", verify.table, "Rank table file or builtin name")->required();
  v->add_option("-p,--paytable", verify.paytable, "Pay table file or builtin name");
  v->add_option("-j,--workers", verify.workers, "Worker threads (0 = all cores)");
  v->add_option("--max-lines", verify.max_lines, "Violations to print");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (s->parsed()) return run_solve(solve);
    if (ad->parsed()) return run_advise(advise);
    if (st->parsed()) return run_stats(stats);
    return run_verify(verify);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    std::cerr << "arithmetic overflow: " << e.what() << "\n";
    std::abort();
  }
}
