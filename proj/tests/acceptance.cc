// Acceptance suite: one PASS/FAIL line per criterion. Criteria listed with
// --known-failures are still evaluated and reported as FAIL; the exit status
// is zero only when the failing set equals the known set exactly.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sicache/analytics.h"
#include "sicache/errors.h"
#include "sicache/experiment.h"
#include "sicache/optimizer.h"
#include "sicache/simulator.h"

namespace sicache {
namespace {

// Pinned tolerances.
constexpr long kTrials = 100000;
constexpr std::uint64_t kSeed = 20240601;
constexpr double kQ1Tolerance = 0.01;
constexpr double kQ1SecondsPerPoint = 60.0;
constexpr double kPowerIdentityTolerance = 1e-12;
constexpr double kFotTolerance = 0.02;
constexpr double kCoincidenceTolerance = 1e-12;
constexpr double kContinuityTolerance = 1e-12;
constexpr double kConcavitySlack = 1e-15;
constexpr double kObjectiveTolerance = 1e-12;
constexpr double kSweepSeconds = 300.0;
constexpr double kUpperBoundGap = 0.02;
constexpr double kRoundingRatio = 0.99;
constexpr double kAerRatio = 0.99;
constexpr double kRateRelativeTolerance = 0.02;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buffer[256];
  std::snprintf(buffer, sizeof buffer, format, a, b, c);
  return buffer;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<ChannelModel> channel_grid() {
  std::vector<ChannelModel> grid;
  for (double alpha : {2.5, 3.0, 4.0, 5.0, 6.0}) {
    for (double tau : {0.01, 0.1, 1.0, 10.0}) grid.emplace_back(alpha, tau);
  }
  return grid;
}

PlacementProblem make_problem(int files, int n, int cache, double gamma, double tau,
                              Objective objective = Objective::kAfot) {
  return PlacementProblem{ChannelModel(4.0, tau), CodingConfig(n, cache),
                          PopularityProfile::zipf(files, gamma), objective};
}

struct SmallPoint {
  int files, n, cache;
  double gamma, tau;
};

std::vector<SmallPoint> small_sweep(int min_n, int max_n, std::vector<double> taus) {
  std::vector<SmallPoint> points;
  for (int files = 2; files <= 5; ++files)
    for (int n = min_n; n <= max_n; ++n)
      for (int cache = 1; cache < files; ++cache)
        for (double gamma : {0.0, 0.6, 1.2})
          for (double tau : taus) points.push_back({files, n, cache, gamma, tau});
  return points;
}

// Every optimizer output produced by the suite, for the ordering criterion.
std::vector<CachingVector>& produced() {
  static std::vector<CachingVector> vectors;
  return vectors;
}

PlacementSolution record(PlacementSolution solution) {
  produced().push_back(solution.placement);
  return solution;
}

const SicEnsemble& reference_ensemble() {
  static const SicEnsemble ensemble = [] {
    SimConfig cfg;
    cfg.lambda_b = 100.0;
    cfg.region_side = 4.0;
    cfg.trials = kTrials;
    cfg.master_seed = kSeed;
    cfg.alpha = 4.0;
    cfg.max_layers = 16;
    return SicEnsemble::simulate(cfg);
  }();
  return ensemble;
}

double ensemble_seconds = 0.0;

Outcome criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  const SicEnsemble& ensemble = reference_ensemble();
  ensemble_seconds = seconds_since(start);
  Outcome out;
  double worst = 0.0;
  for (double tau_db : {-10.0, 0.0, 10.0}) {
    const double tau = convert_db(tau_db);
    const auto point_start = std::chrono::steady_clock::now();
    const LayerSuccessEstimate e = estimate_layer_success(ensemble, tau, 1);
    const double point_seconds = ensemble_seconds + seconds_since(point_start);
    const double diff = std::abs(e.conditional[0]->value - layer_success_prob(ChannelModel(4.0, tau), 1));
    worst = std::fmax(worst, diff);
    out.pass = out.pass && diff <= kQ1Tolerance && point_seconds < kQ1SecondsPerPoint;
    out.detail += fmt("%+.0f dB: |diff|=%.4f ", tau_db, diff);
  }
  out.detail += fmt("(tol %.2f; %.1f s per point incl. sampling)", kQ1Tolerance, ensemble_seconds);
  return out;
}

Outcome criterion_2() {
  double worst = 0.0;
  for (const ChannelModel& channel : channel_grid()) {
    const LayerModel layers(channel);
    const double q1 = layers.layer_success(1);
    for (int k = 1; k <= 10; ++k) {
      worst = std::fmax(worst, std::abs(layers.layer_success(k) - std::pow(q1, k)));
    }
  }
  return {worst <= kPowerIdentityTolerance,
          fmt("max |q_k - q_1^k| = %.2e over 20 pairs, k<=10 (tol %.0e)", worst,
              kPowerIdentityTolerance)};
}

Outcome criterion_3() {
  const SicEnsemble& ensemble = reference_ensemble();
  double worst = 0.0;
  for (double tau : {0.1, 1.0}) {
    const LayerModel layers(4.0, tau);
    for (int m = 1; m <= 16; ++m) {
      worst = std::fmax(worst, std::abs(estimate_fot(ensemble, tau, 16, m).value -
                                        layers.fot(16, m)));
    }
  }
  return {worst <= kFotTolerance,
          fmt("max |L_hat - L[m]| = %.4f over n=16, m=1..16, tau in {0.1, 1} (tol %.2f)",
              worst, kFotTolerance)};
}

Outcome criterion_4() {
  const LayerModel layers(4.0, 0.1);
  const DifferenceTable t8 = difference_table(layers, 8);
  const DifferenceTable t16 = difference_table(layers, 16);
  const DifferenceTable t32 = difference_table(layers, 32);
  const std::vector<std::string> expected = {"d_8", "d_{4,8}", "d_{3,4}", "d_{2,3}",
                                             "d_2", "d_2",     "d_2",     "d_2"};
  bool labels = true;
  for (int m = 1; m <= 8; ++m) labels = labels && t8.label(m).to_string() == expected[m - 1];
  // d_{1,2} is delta(32) and d_{2,3} is delta(16) at n = 32.
  const double c12 = std::abs(t32.delta(32) - within_region_delta(layers, 32, 2));
  const double c23 = std::abs(t32.delta(16) - within_region_delta(layers, 32, 3));
  const bool counts = t8.distinct_count == 5 && t16.distinct_count == 8 &&
                      t32.distinct_count == 12;
  Outcome out;
  out.pass = labels && counts && c12 <= kCoincidenceTolerance && c23 <= kCoincidenceTolerance;
  out.detail = "N = " + std::to_string(t8.distinct_count) + ", " +
               std::to_string(t16.distinct_count) + ", " + std::to_string(t32.distinct_count) +
               (labels ? "; n=8 labels match" : "; n=8 labels differ") +
               fmt("; |d12-d2|=%.1e |d23-d3|=%.1e", c12, c23);
  return out;
}

Outcome criterion_5() {
  long violations = 0;
  double worst_continuity = 0.0;
  for (const ChannelModel& channel : channel_grid()) {
    const LayerModel layers(channel);
    for (int n = 1; n <= 64; ++n) {
      const DifferenceTable t = difference_table(layers, n);
      for (int m = 1; m <= n; ++m) {
        // Differences below one ulp of L vanish in L[m] - L[m-1]; the table
        // stores the differences themselves.
        if (!(t.delta(m) > 0.0)) ++violations;
        if (m >= 2 && t.delta(m) > t.delta(m - 1) + kConcavitySlack) ++violations;
        worst_continuity = std::fmax(
            worst_continuity, std::abs(t.fot_values[m] - layers.fot_continuous(double(m) / n)));
      }
    }
  }
  return {violations == 0 && worst_continuity <= kContinuityTolerance,
          fmt("%.0f monotonicity/concavity violations; max |L[m]-L(m/n)| = %.1e (tol %.0e)",
              violations, worst_continuity, kContinuityTolerance)};
}

Outcome criterion_6() {
  const auto start = std::chrono::steady_clock::now();
  long mismatches = 0, count = 0;
  double worst = 0.0;
  for (const auto& pt : small_sweep(1, 4, {0.1, 1.0})) {
    const auto problem = make_problem(pt.files, pt.n, pt.cache, pt.gamma, pt.tau);
    const PlacementSolution greedy = record(solve_afot_greedy(problem));
    const PlacementSolution exhaustive = record(solve_exhaustive(problem));
    const double diff = std::abs(greedy.objective_value - exhaustive.objective_value);
    worst = std::fmax(worst, diff);
    if (diff > kObjectiveTolerance || greedy.placement != exhaustive.placement) ++mismatches;
    ++count;
  }
  const double seconds = seconds_since(start);
  return {mismatches == 0 && seconds < kSweepSeconds,
          fmt("%.0f instances, %.0f mismatches, max |diff| = %.1e", count, mismatches, worst) +
              fmt(", %.2f s", seconds)};
}

Outcome criterion_7() {
  bool bounded = true;
  double gap8 = 0.0;
  for (int n : {1, 2, 4, 8, 16}) {
    const auto problem = make_problem(100, n, 20, 0.6, convert_db(-10.0));
    const double upper = solve_afot_continuous(problem).objective_value;
    const double greedy = record(solve_afot_greedy(problem)).objective_value;
    bounded = bounded && upper >= greedy;
    if (n == 8) gap8 = (upper - greedy) / upper;
  }
  return {bounded && gap8 < kUpperBoundGap,
          std::string(bounded ? "UB >= greedy" : "UB below greedy") +
              fmt(" for n in {1,2,4,8,16}; gap at n=8 = %.3f%% (tol %.0f%%)", 100 * gap8,
                  100 * kUpperBoundGap)};
}

Outcome criterion_8() {
  const auto problem = make_problem(100, 8, 20, 0.6, convert_db(-10.0));
  const bool same = record(solve_afot_rounding(problem)).placement ==
                    record(solve_afot_greedy(problem)).placement;
  double worst = 1.0;
  for (const auto& pt : small_sweep(1, 4, {0.1, 1.0})) {
    const auto p = make_problem(pt.files, pt.n, pt.cache, pt.gamma, pt.tau);
    const double ratio = record(solve_afot_rounding(p)).objective_value /
                         solve_afot_greedy(p).objective_value;
    worst = std::fmin(worst, ratio);
  }
  return {same && worst >= kRoundingRatio,
          std::string(same ? "reference vector identical" : "reference vector differs") +
              fmt("; min AFOT ratio on sweep = %.5f (tol %.2f)", worst, kRoundingRatio)};
}

Outcome criterion_9() {
  int holds = 0, fails = 0, bad = 0;
  // Degenerate instances: raise skew or threshold until the condition holds.
  for (double gamma : {1.6, 2.0, 2.4, 2.8, 3.2}) {
    for (double tau_db : {10.0, 20.0}) {
      const auto problem = make_problem(30, 4, 5, gamma, convert_db(tau_db));
      if (!mpc_degeneracy_holds(problem.channel, 4, problem.popularity, 5)) {
        ++bad;
        continue;
      }
      ++holds;
      const PlacementSolution greedy = record(solve_afot_greedy(problem));
      if (greedy.placement != solve_mpc(problem).placement || greedy.updates != 0) ++bad;
    }
  }
  for (double gamma : {0.0, 0.4, 0.8, 1.2}) {
    for (int n : {2, 4, 8}) {
      if (fails == 10) break;
      const auto problem = make_problem(30, n, 5, gamma, convert_db(-10.0));
      if (mpc_degeneracy_holds(problem.channel, n, problem.popularity, 5)) {
        ++bad;
        continue;
      }
      ++fails;
      if (!(record(solve_afot_greedy(problem)).objective_value >
            solve_mpc(problem).objective_value)) {
        ++bad;
      }
    }
  }
  return {holds == 10 && fails == 10 && bad == 0,
          fmt("%.0f degenerate instances return MPC with 0 updates, %.0f non-degenerate beat MPC, "
              "%.0f violations",
              holds, fails, bad)};
}

Outcome criterion_11() {
  double worst = 1.0;
  long instances = 0;
  for (const auto& pt : small_sweep(2, 4, {1.0})) {
    const auto problem =
        make_problem(pt.files, pt.n, pt.cache, pt.gamma, pt.tau, Objective::kAer);
    const double ratio = record(solve_aer_heuristic(problem)).objective_value /
                         record(solve_exhaustive(problem)).objective_value;
    worst = std::fmin(worst, ratio);
    ++instances;
  }
  const auto uniform = make_problem(4, 4, 2, 0.0, 1.0, Objective::kAer);
  const double coded = record(solve_aer_heuristic(uniform)).objective_value;
  const double mpc = solve_mpc(uniform).objective_value;
  const auto skewed = make_problem(10, 4, 3, 0.6, 1.0, Objective::kAer);
  const bool collapses =
      record(solve_aer_heuristic(skewed)).placement == solve_mpc(skewed).placement;
  return {worst >= kAerRatio && coded > mpc && collapses,
          fmt("min AER ratio = %.5f over %.0f instances (tol %.2f)", worst, instances,
              kAerRatio) +
              fmt("; gamma=0 coded %.4f vs MPC %.4f", coded, mpc) +
              (collapses ? "; gamma=0.6 F=10 collapses to MPC" : "; gamma=0.6 F=10 differs from MPC")};
}

Outcome criterion_10() {
  long unordered = 0;
  for (const CachingVector& v : produced()) {
    if (!v.is_non_increasing()) ++unordered;
  }
  return {unordered == 0 && !produced().empty(),
          fmt("%.0f optimizer outputs checked, %.0f not non-increasing",
              static_cast<double>(produced().size()), unordered)};
}

std::string csv_body(const CsvTable& table) {
  const std::string text = table.to_string();
  return text.substr(text.find('\n') + 1);
}

Outcome criterion_12() {
  const RunConfig config = parse_run_config(R"({"name": "determinism", "experiments": [
      {"name": "fot", "kind": "ValidateFot", "channel": {"alpha": 4}, "coding": {"n": 8},
       "sweep": {"axis": "tau_db", "values": [-10, 0, 10]},
       "simulation": {"lambda_b": 100, "region_side": 4, "trials": 20000}}]})");
  const std::string one = csv_body(run_experiment(config.experiments[0], kSeed, 1));
  const std::string eight = csv_body(run_experiment(config.experiments[0], kSeed, 8));
  return {one == eight && !one.empty(),
          std::string(one == eight ? "identical" : "different") + " CSV data rows (" +
              std::to_string(one.size()) + " bytes) with 1 and 8 workers"};
}

Outcome criterion_13() {
  const SicEnsemble& ensemble = reference_ensemble();
  Outcome out;
  for (int m : {4, 2, 1}) {
    const double analytic = ergodic_rate(4.0, 4, m);
    const Estimate sim = estimate_ergodic_rate(ensemble, 4, m);
    const double rel = std::abs(sim.value - analytic) / analytic;
    out.pass = out.pass && rel <= kRateRelativeTolerance;
    out.detail += fmt("m=%.0f: analytic %.4f sim %.4f", m, analytic, sim.value) +
                  fmt(" (%.2f%%); ", 100 * rel);
  }
  out.detail += fmt("tol %.0f%%", 100 * kRateRelativeTolerance);
  return out;
}

}  // namespace
}  // namespace sicache

int main(int argc, char** argv) {
  std::set<int> known;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    const std::string prefix = "--known-failures=";
    if (arg.rfind(prefix, 0) != 0) {
      std::fprintf(stderr, "usage: %s [--known-failures=N,M,...]\n", argv[0]);
      return 2;
    }
    std::stringstream list(arg.substr(prefix.size()));
    for (std::string item; std::getline(list, item, ',');) {
      if (!item.empty()) known.insert(std::stoi(item));
    }
  }

  using sicache::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"q1 analytic vs Monte Carlo", sicache::criterion_1},
      {"q_k power identity", sicache::criterion_2},
      {"FOT analytic vs simulated", sicache::criterion_3},
      {"difference-table counts and labels", sicache::criterion_4},
      {"FOT monotone and concave", sicache::criterion_5},
      {"greedy equals exhaustive", sicache::criterion_6},
      {"continuous upper bound", sicache::criterion_7},
      {"rounding parity", sicache::criterion_8},
      {"MPC degeneracy", sicache::criterion_9},
      {"AER heuristic quality", sicache::criterion_11},
      {"non-increasing placements", sicache::criterion_10},
      {"simulator determinism", sicache::criterion_12},
      {"ergodic rate cross-check", sicache::criterion_13},
  };
  // Criterion 10 aggregates the vectors produced by the others, so it runs
  // after criterion 11; numbering follows the criterion list.
  const int numbers[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 10, 12, 13};
  std::set<int> failed;
  std::vector<std::string> lines(14);
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int number = numbers[i];
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) failed.insert(number);
    char head[96];
    std::snprintf(head, sizeof head, "%s criterion %2d %-36s ", outcome.pass ? "PASS" : "FAIL",
                  number, criteria[i].first);
    lines[number] = head + outcome.detail +
                    (!outcome.pass && known.contains(number) ? " [known]" : "");
  }
  for (int n = 1; n <= 13; ++n) std::printf("%s\n", lines[n].c_str());
  std::printf("%zu/13 criteria pass\n", 13 - failed.size());
  if (failed != known) {
    std::printf("failing set differs from the declared known failures\n");
    return 1;
  }
  return 0;
}
