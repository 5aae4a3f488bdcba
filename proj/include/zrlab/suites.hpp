// Verification suites: deterministic sweeps over the library's inequality
// checks, protocol simulators, streaming reductions, and code experiments.
// Each suite produces CheckRow records (CSV + JSON summaries); rows are
// byte-stable for a fixed config and seed, independent of thread count.
#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zrlab/hypermatching_comm.hpp"
#include "zrlab/inequalities.hpp"
#include "zrlab/ldc.hpp"
#include "zrlab/matfourier.hpp"
#include "zrlab/report.hpp"
#include "zrlab/rng.hpp"
#include "zrlab/streaming_ug.hpp"
#include "zrlab/zr_core.hpp"

namespace zrlab {

struct SuiteConfig {
  std::string suite = "all";  // inequalities | hh | ug | ldc | all
  std::uint64_t seed = 1;
  long trials = 200;
  double tol = 1e-9;
  std::string out_dir = ".";
  int threads = 1;
  nlohmann::json params;  // optional size overrides, echoed into summaries
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckRow> rows;
  int hard_failures = 0;
};

namespace detail {

/// Equality-anchored row: passes iff |lhs - rhs| <= tol.
inline CheckRow equality_row(const std::string& anchor, double lhs, double rhs, double tol, const std::string& kind,
                             std::map<std::string, double> params = {}) {
  CheckRow row;
  row.anchor = anchor;
  row.lhs = lhs;
  row.rhs = rhs;
  row.slack = -std::fabs(lhs - rhs);
  row.pass = std::fabs(lhs - rhs) <= tol;
  row.kind = kind;
  row.params = std::move(params);
  return row;
}

/// Bound-anchored row: passes iff lhs <= rhs + tol.
inline CheckRow bound_row(const std::string& anchor, double lhs, double rhs, double tol, const std::string& kind,
                          std::map<std::string, double> params = {}) {
  CheckRow row;
  row.anchor = anchor;
  row.lhs = lhs;
  row.rhs = rhs;
  row.slack = rhs - lhs;
  row.pass = lhs <= rhs + tol;
  row.kind = kind;
  row.params = std::move(params);
  return row;
}

inline long param_long(const nlohmann::json& params, const std::string& key, long fallback) {
  if (params.is_object() && params.contains(key)) return params.at(key).get<long>();
  return fallback;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Inequalities suite.
// ---------------------------------------------------------------------------

inline SuiteResult run_inequalities_suite(const SuiteConfig& cfg) {
  SuiteResult res;
  res.suite = "inequalities";
  const long reps = std::max(1L, cfg.trials / 100);
  const int m = static_cast<int>(detail::param_long(cfg.params, "m", 3));
  const std::vector<int> r_values{2, 3, 4, 5};
  const std::vector<double> p_values{1.0, 1.25, 1.5, 1.75, 2.0};

  // Structural values of the convexity constant.
  for (int r : r_values) {
    res.rows.push_back(detail::equality_row("convexity-constant/value-at-two", zeta(2.0, r), 1.0, cfg.tol, "hard",
                                            {{"r", static_cast<double>(r)}}));
    res.rows.push_back(detail::equality_row("convexity-constant/value-at-one", zeta(1.0, r), 0.0, cfg.tol, "hard",
                                            {{"r", static_cast<double>(r)}}));
    const double p = 1.5;
    res.rows.push_back(detail::bound_row("convexity-constant/floor", (p - 1.0) / (r - 1.0), zeta(p, r), cfg.tol,
                                         "hard", {{"r", static_cast<double>(r)}, {"p", p}}));
  }

  // Uniform convexity over random matrix families, both forms plus the weak
  // form and an orthogonal pair; sweep indexed deterministically so thread
  // count cannot reorder rows.
  struct SweepCase {
    int r;
    double p;
    long rep;
  };
  std::vector<SweepCase> cases;
  for (int r : r_values) {
    for (double p : p_values) {
      for (long rep = 0; rep < reps; ++rep) cases.push_back({r, p, rep});
    }
  }
  std::vector<std::vector<CheckRow>> slots(cases.size());
  parallel_for(cases.size(), cfg.threads, [&](std::size_t ci) {
    const auto [r, p, rep] = cases[ci];
    Rng rng(split_seed(cfg.seed, 1000 + ci));
    std::vector<ComplexMatrix> family;
    for (int j = 0; j < r; ++j) family.push_back(random_complex_matrix(m, rng));
    family = normalize_family(family);
    auto& rows = slots[ci];
    rows.push_back(to_check_row(check_bcl(family, p, cfg.tol)));
    rows.push_back(to_check_row(check_weak_bcl(family, p, cfg.tol)));
    if (p > 1.0) {
      const ComplexMatrix Z = random_complex_matrix(m, rng);
      const ComplexMatrix W = project_orthogonal_w(Z, random_complex_matrix(m, rng), p);
      if (W.norm() > 1e-9) rows.push_back(to_check_row(check_orthogonal_convexity(Z, W, p, cfg.tol)));
    }
  });
  for (auto& rows : slots) {
    for (auto& row : rows) res.rows.push_back(std::move(row));
  }

  // Hypercontractivity at the critical noise rate.
  for (int r : {2, 3}) {
    for (double p : {1.5, 2.0}) {
      Rng rng(split_seed(cfg.seed, 2000 + 10 * static_cast<std::uint64_t>(r) + static_cast<std::uint64_t>(10 * p)));
      const int n = 2, side = 2;
      const long long points = power_checked(r, n);
      std::vector<ComplexMatrix> values;
      for (long long i = 0; i < points; ++i) values.push_back(random_complex_matrix(side, rng));
      const auto f = normalize_function(make_matrix_function(r, n, std::move(values)));
      res.rows.push_back(to_check_row(check_hypercontractivity(f, p, std::sqrt(zeta(p, r)), cfg.tol)));
    }
  }

  // Fourier-weight bounds: density version and set-indicator version.
  for (int r : {2, 3}) {
    const int n = 2;
    const long long points = power_checked(r, n);
    std::vector<ComplexMatrix> values;
    for (long long i = 0; i < points; ++i) {
      values.push_back(random_density_matrix(2, split_seed(cfg.seed, 3000 + 10 * static_cast<std::uint64_t>(r) + static_cast<std::uint64_t>(i))));
    }
    const auto f = make_matrix_function(r, n, std::move(values));
    for (double frac : {0.0, 0.5, 1.0}) {
      res.rows.push_back(to_check_row(check_density_fourier_bound(f, frac / (r - 1), cfg.tol)));
    }
    Rng rng(split_seed(cfg.seed, 3100 + static_cast<std::uint64_t>(r)));
    std::vector<int> indicator(static_cast<std::size_t>(points), 0);
    for (long long i = 0; i < points; ++i) indicator[static_cast<std::size_t>(i)] = rng.below(2) == 0 ? 1 : 0;
    indicator[0] = 1;  // keep the set nonempty
    for (double frac : {0.0, 0.5, 1.0}) {
      res.rows.push_back(to_check_row(check_kkl(r, n, indicator, frac / r, cfg.tol)));
    }
  }

  // Mixed-norm interchange and diagonal restriction on random matrices.
  {
    Rng rng(split_seed(cfg.seed, 4000));
    const Eigen::MatrixXd values = random_complex_matrix(4, rng).cwiseAbs();
    for (auto [q1, q2] : std::vector<std::pair<double, double>>{{1.0, 2.0}, {1.5, 2.0}, {2.0, 3.0}}) {
      res.rows.push_back(to_check_row(check_minkowski_mixed_norm(values, q1, q2, cfg.tol)));
    }
    for (double p : {1.0, 2.0, 3.0}) {
      res.rows.push_back(to_check_row(check_diagonal_dominance(random_complex_matrix(4, rng), p, false, cfg.tol)));
    }
  }

  res.hard_failures = count_hard_failures(res.rows);
  return res;
}

// ---------------------------------------------------------------------------
// Hidden-hypermatching communication suite.
// ---------------------------------------------------------------------------

inline SuiteResult run_hh_suite(const SuiteConfig& cfg) {
  SuiteResult res;
  res.suite = "hh";
  const long q_trials = std::min(cfg.trials, 200L);

  for (int r : {2, 3, 4, 5}) {
    // One-sided quantum protocol: perfect completeness on matched instances.
    long accepted = 0;
    for (long trial = 0; trial < q_trials; ++trial) {
      const auto inst = sample_hh_instance(
          8, 2, 1.0, r, true, split_seed(cfg.seed, 100 + 1000 * static_cast<std::uint64_t>(r) + static_cast<std::uint64_t>(trial)));
      if (quantum_protocol_run(inst, 3, split_seed(cfg.seed, 7000 + static_cast<std::uint64_t>(trial)))) ++accepted;
    }
    res.rows.push_back(detail::equality_row("quantum-protocol/completeness",
                                            static_cast<double>(accepted) / static_cast<double>(q_trials), 1.0,
                                            cfg.tol, "hard", {{"r", static_cast<double>(r)}}));

    // Closed-form peak of the measurement distribution off the matched value.
    const double peak = measurement_distribution(r, 1, 0, 0).at(1);
    const double want = (r % 2 == 0) ? 0.5 : 0.5 + 0.5 / (static_cast<double>(r) * r);
    res.rows.push_back(detail::equality_row("quantum-protocol/off-instance-peak", peak, want, cfg.tol, "hard",
                                            {{"r", static_cast<double>(r)}}));

    // Exact statevector simulation agrees with the closed form everywhere.
    const auto sim = simulate_measurement_distribution(r, 0, 0, 1);
    const auto closed = measurement_distribution(r, 1, 0, 0);
    double max_diff = 0.0;
    for (int mv = 0; mv < r; ++mv) {
      max_diff = std::max(max_diff, std::fabs(sim[static_cast<std::size_t>(mv)] - closed[static_cast<std::size_t>(mv)]));
    }
    res.rows.push_back(detail::equality_row("quantum-protocol/statevector-vs-closed-form", max_diff, 0.0, 1e-9,
                                            "hard", {{"r", static_cast<double>(r)}}));
  }

  // Character sums of matched linear sketches: direct evaluation against the
  // closed form, exhaustive over patterns.
  {
    const auto inst = sample_hh_instance(4, 2, 1.0, 2, false, split_seed(cfg.seed, 50));
    double max_diff = 0.0;
    const long long patterns = power_checked(2, 4);
    for (long long si = 0; si < patterns; ++si) {
      const ZrString s = index_string(2, 4, si);
      max_diff = std::max(max_diff, std::abs(compute_u(inst.m, inst.w, s) - closed_form_u(inst.m, inst.w, s)));
    }
    res.rows.push_back(detail::equality_row("sketch-character/closed-form", max_diff, 0.0, 1e-12, "hard",
                                            {{"r", 2.0}, {"n", 4.0}}));
  }

  // Pattern-survival probability under a random matching: worked values.
  {
    const double got = static_cast<double>(prob_delta(4, 2, 1.0, {1}));
    res.rows.push_back(detail::equality_row("pattern-survival/worked-value", got, 1.0 / 3.0, 1e-12, "hard",
                                            {{"n", 4.0}, {"t", 2.0}}));
    const double got2 = static_cast<double>(prob_delta(6, 3, 1.0, {1, 1}));
    res.rows.push_back(detail::equality_row("pattern-survival/worked-value", got2, 1.0 / 10.0, 1e-12, "hard",
                                            {{"n", 6.0}, {"t", 3.0}}));
  }

  // Exact message-set bias: the full set carries no signal, a singleton
  // carries the maximum 2 (1 - r^{-E}) of total variation.
  for (int r : {2, 3}) {
    const int E = 2, nv = 4;
    const auto mt = make_hypermatching(nv, 2, {{0, 1}, {2, 3}});
    const long long volume = power_checked(r, E);
    std::vector<ZrString> full;
    for (long long xi = 0; xi < power_checked(r, nv); ++xi) full.push_back(index_string(r, nv, xi));
    const auto bias_full = message_set_bias(full, mt);
    res.rows.push_back(detail::equality_row("message-bias/full-set", bias_full.tvd, 0.0, 1e-15, "hard",
                                            {{"r", static_cast<double>(r)}}));
    const auto bias_single = message_set_bias({zero_string(r, nv)}, mt);
    res.rows.push_back(detail::equality_row("message-bias/singleton", bias_single.tvd,
                                            2.0 * (1.0 - 1.0 / static_cast<double>(volume)), 1e-15, "hard",
                                            {{"r", static_cast<double>(r)}}));
  }

  // Classical protocol with a full budget: always correct on matched
  // instances; on unmatched ones it accepts only when every target happens
  // to agree, i.e. with probability about r^{-E}.
  {
    const int r = 2, n = 8;
    long yes_ok = 0, no_accepts = 0;
    for (long trial = 0; trial < cfg.trials; ++trial) {
      const auto yes = sample_hh_instance(n, 2, 1.0, r, true, split_seed(cfg.seed, 8000 + static_cast<std::uint64_t>(trial)));
      if (classical_protocol_run(yes, n, split_seed(cfg.seed, 8500 + static_cast<std::uint64_t>(trial)))) ++yes_ok;
      const auto no = sample_hh_instance(n, 2, 1.0, r, false, split_seed(cfg.seed, 9000 + static_cast<std::uint64_t>(trial)));
      if (classical_protocol_run(no, n, split_seed(cfg.seed, 9500 + static_cast<std::uint64_t>(trial)))) ++no_accepts;
    }
    res.rows.push_back(detail::equality_row("classical-protocol/full-budget-completeness",
                                            static_cast<double>(yes_ok) / static_cast<double>(cfg.trials), 1.0,
                                            cfg.tol, "hard"));
    const double expect = std::pow(static_cast<double>(r), -4.0);  // E = n/2 = 4 edges
    const double sigma = std::sqrt(expect * (1 - expect) / static_cast<double>(cfg.trials));
    res.rows.push_back(detail::bound_row("classical-protocol/full-budget-soundness",
                                         std::fabs(static_cast<double>(no_accepts) / static_cast<double>(cfg.trials) - expect),
                                         4 * sigma + 0.02, 0.0, "stat"));
  }

  res.hard_failures = count_hard_failures(res.rows);
  return res;
}

// ---------------------------------------------------------------------------
// Streaming suite.
// ---------------------------------------------------------------------------

inline SuiteResult run_ug_suite(const SuiteConfig& cfg) {
  SuiteResult res;
  res.suite = "ug";

  // Trivial streaming estimate stays within [OPT / r, OPT].
  for (int r : {2, 3}) {
    const int n = 8, t = 2, k = 3;
    double min_lower = 1e300, min_upper = 1e300;
    for (long trial = 0; trial < std::min(cfg.trials, 100L); ++trial) {
      const bool yes = trial % 2 == 0;
      const auto inst = sample_ug(yes, n, t, r, k, 1.0,
                                  split_seed(cfg.seed, 200 + 1000 * static_cast<std::uint64_t>(r) + static_cast<std::uint64_t>(trial)));
      const long long opt = ug_opt_bruteforce(inst).first;
      const double approx = trivial_stream_approx(inst);
      min_lower = std::min(min_lower, approx - static_cast<double>(opt) / r);
      min_upper = std::min(min_upper, static_cast<double>(opt) - approx);
    }
    res.rows.push_back(detail::bound_row("stream/trivial-estimate-lower", 0.0, min_lower, cfg.tol, "hard",
                                         {{"r", static_cast<double>(r)}}));
    res.rows.push_back(detail::bound_row("stream/trivial-estimate-upper", 0.0, min_upper, cfg.tol, "hard",
                                         {{"r", static_cast<double>(r)}}));
  }

  // Stage count: decreasing in the accuracy target.
  res.rows.push_back(detail::bound_row("stream/stage-count-monotone",
                                       static_cast<double>(chernoff_stage_count(16, 2, 3, 1.0, 0.2)),
                                       static_cast<double>(chernoff_stage_count(16, 2, 3, 1.0, 0.1)), 0.0, "hard"));

  // Divergence profile of the full-memory algorithm: starts at zero and
  // ends strictly positive, with an informative stage inside [0, k).
  {
    const int n = 4, t = 2, r = 2, k = 3;
    const auto profile = find_informative_index(algorithm_registry().at("full"), n, t, r, 1.0, k,
                                                std::min(cfg.trials, 400L), split_seed(cfg.seed, 300));
    res.rows.push_back(detail::equality_row("stream/profile-starts-at-zero", profile.tvd.front(), 0.0, 1e-15, "hard"));
    res.rows.push_back(detail::bound_row("stream/profile-detects-signal", 0.05, profile.tvd.back(), 0.0, "stat"));
    res.rows.push_back(detail::bound_row("stream/informative-stage-range", 0.0,
                                         static_cast<double>(profile.informative_index), 0.0, "hard",
                                         {{"k", static_cast<double>(k)}}));
  }

  // Reduction: a full-memory streamer distinguishes matched sketches with
  // bias exactly 1 - 1/r at the smallest size; the oblivious counter gets 0.
  for (int r : {2, 3}) {
    const HHParams hp{2, 2, 1.0, r};
    const auto red = run_reduction(algorithm_registry().at("full"), 1, hp, 0, split_seed(cfg.seed, 400));
    res.rows.push_back(detail::equality_row("reduction/full-memory-bias", red.bias, 1.0 - 1.0 / r, 1e-12, "hard",
                                            {{"r", static_cast<double>(r)}}));
    const auto base = run_reduction(algorithm_registry().at("count"), 1, hp, 0, split_seed(cfg.seed, 401));
    res.rows.push_back(detail::equality_row("reduction/oblivious-bias", base.bias, 0.0, 1e-12, "hard",
                                            {{"r", static_cast<double>(r)}}));
  }

  res.hard_failures = count_hard_failures(res.rows);
  return res;
}

// ---------------------------------------------------------------------------
// Code suite.
// ---------------------------------------------------------------------------

inline SuiteResult run_ldc_suite(const SuiteConfig& cfg) {
  SuiteResult res;
  res.suite = "ldc";

  for (int r : {2, 3}) {
    const int n = 3;
    const Code code = hadamard_code(r, n);
    const Decoder dec = hadamard_decoder(r, n);

    // Clean codewords decode perfectly.
    res.rows.push_back(detail::equality_row("pairing-code/clean-advantage", exact_clean_advantage(code, dec),
                                            1.0 - 1.0 / r, cfg.tol, "hard", {{"r", static_cast<double>(r)}}));

    // Random corruption at rate delta costs at most 2 delta in success.
    const double delta = 0.05;
    const auto noise = [delta](const ZrString& clean, std::uint64_t seed) { return corrupt_random(clean, delta, seed); };
    const auto rec = empirical_recovery(code, dec, noise, std::min(cfg.trials, 400L), split_seed(cfg.seed, 500));
    double max_err = 0.0;
    for (double s : rec.stderr_) max_err = std::max(max_err, s);
    res.rows.push_back(detail::bound_row("pairing-code/noisy-recovery", 1.0 - 2.0 * delta - 4.0 * max_err,
                                         rec.min_success, 0.0, "stat",
                                         {{"r", static_cast<double>(r)}, {"delta", delta}}));

    // Smoothing: the pair decoder is already q-smooth, so the transform is
    // the identity and the measured constant stays within the certified one.
    const auto transformed = smooth_transform(code, dec, 0.1);
    const SmoothnessReport& srep = transformed.second;
    res.rows.push_back(detail::bound_row("smooth-decoder/measured-vs-certified", srep.c_measured, srep.c_claimed,
                                         cfg.tol, "hard", {{"r", static_cast<double>(r)}}));
    res.rows.push_back(detail::bound_row("smooth-decoder/constant-at-least-q", static_cast<double>(srep.q),
                                         srep.c_claimed, cfg.tol, "hard", {{"r", static_cast<double>(r)}}));

    // Good query sets: every pair set is good with a full-strength point
    // certificate, the Fourier certificate dominates it, and the greedy
    // disjoint family meets the guaranteed size.
    const auto good = good_set_matching(code, dec, 0, 1.0 - 1.0 / r, srep.c_measured);
    double min_gap = 1e300;
    long good_count = 0;
    for (const auto& gs : good.sets) {
      min_gap = std::min(min_gap, gs.fourier_certificate - gs.point_certificate);
      if (gs.good) ++good_count;
    }
    res.rows.push_back(detail::bound_row("good-sets/fourier-dominates-point", 0.0, min_gap, cfg.tol, "hard",
                                         {{"r", static_cast<double>(r)}}));
    res.rows.push_back(detail::bound_row("good-sets/all-pairs-good", static_cast<double>(good.sets.size()),
                                         static_cast<double>(good_count), 0.0, "hard",
                                         {{"r", static_cast<double>(r)}}));
    res.rows.push_back(detail::bound_row("good-sets/matching-size", good.matching_guarantee,
                                         static_cast<double>(good.matching.size()), cfg.tol, "hard",
                                         {{"r", static_cast<double>(r)}}));
  }

  // Rank-one embedding: the normalized p-th moment is exactly R^{p-1}.
  {
    const Code code = hadamard_code(2, 2);
    const double R = static_cast<double>(embedding_dim(code));
    const ComplexMatrix F = rank1_embedding(code, make_zr_string(2, {1, 0}));
    for (double p : {1.0, 1.5, 2.0}) {
      const double moment = std::pow(schatten_norm(F, p, true), p);
      res.rows.push_back(detail::equality_row("rank-one-embedding/normalized-moment", moment, std::pow(R, p - 1.0),
                                              1e-7, "hard", {{"p", p}}));
    }
    // Diagonal restriction never increases a Schatten norm, in particular on
    // permuted Fourier slices of the embedding.
    const auto slice = embedding_fourier_slice(code, 0, 1);
    const auto good = good_set_matching(code, hadamard_decoder(2, 2), 0, 0.5, 2.0);
    std::vector<std::pair<long long, long long>> pairs;
    for (std::size_t gi : good.matching) {
      const auto& q = good.sets[gi].positions;
      pairs.emplace_back(q.front(), q.back());
    }
    const auto perm = embedding_permutation(code.r, code.N, pairs);
    const auto permuted = apply_row_permutation(perm, slice);
    for (double p : {1.0, 2.0}) {
      res.rows.push_back(to_check_row(check_diagonal_dominance(permuted, p, true, cfg.tol)));
    }
  }

  // Length lower bound: at least 1 and monotone in the message length.
  {
    const double b100 = min_length_bound(100, 2, 0.01, 0.1);
    const double b200 = min_length_bound(200, 2, 0.01, 0.1);
    res.rows.push_back(detail::bound_row("length-bound/at-least-one", 1.0, b100, cfg.tol, "hard"));
    res.rows.push_back(detail::bound_row("length-bound/monotone-in-message-length", b100, b200, cfg.tol, "hard"));
  }

  res.hard_failures = count_hard_failures(res.rows);
  return res;
}

// ---------------------------------------------------------------------------
// Driver.
// ---------------------------------------------------------------------------

inline SuiteResult run_suite(const SuiteConfig& cfg) {
  if (cfg.suite == "inequalities") return run_inequalities_suite(cfg);
  if (cfg.suite == "hh") return run_hh_suite(cfg);
  if (cfg.suite == "ug") return run_ug_suite(cfg);
  if (cfg.suite == "ldc") return run_ldc_suite(cfg);
  if (cfg.suite == "all") {
    SuiteResult all;
    all.suite = "all";
    for (const char* name : {"inequalities", "hh", "ug", "ldc"}) {
      SuiteConfig sub = cfg;
      sub.suite = name;
      SuiteResult r = run_suite(sub);
      all.hard_failures += r.hard_failures;
      for (auto& row : r.rows) all.rows.push_back(std::move(row));
    }
    return all;
  }
  throw std::invalid_argument("run_suite: unknown suite '" + cfg.suite + "'");
}

inline nlohmann::json suite_params_json(const SuiteConfig& cfg) {
  nlohmann::json j{{"seed", cfg.seed}, {"trials", cfg.trials}, {"tol", cfg.tol}, {"threads", cfg.threads}};
  if (cfg.params.is_object() && !cfg.params.empty()) j["overrides"] = cfg.params;
  return j;
}

/// Runs a suite and writes <suite>.csv and <suite>.json under out_dir.
/// Returns the number of hard failures (statistical rows never fail the run).
inline int run_suite_to_files(const SuiteConfig& cfg) {
  const SuiteResult res = run_suite(cfg);
  std::filesystem::create_directories(cfg.out_dir);
  const std::filesystem::path base = std::filesystem::path(cfg.out_dir) / res.suite;
  {
    std::ofstream csv(base.string() + ".csv", std::ios::binary);
    if (!csv) throw std::runtime_error("run_suite_to_files: cannot open " + base.string() + ".csv");
    write_checks_csv(csv, res.rows);
  }
  {
    std::ofstream js(base.string() + ".json", std::ios::binary);
    if (!js) throw std::runtime_error("run_suite_to_files: cannot open " + base.string() + ".json");
    js << checks_summary(res.suite, suite_params_json(cfg), res.rows).dump(2) << "\n";
  }
  return res.hard_failures;
}

}  // namespace zrlab
