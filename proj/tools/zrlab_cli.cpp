// Command-line front end for the Z_r toolkit.
//
// Subcommands:
//   verify     run a verification suite, write <suite>.csv/<suite>.json
//   hh-sim     simulate the hidden-hypermatching one-way protocols
//   ug-stream  sample/run/profile streaming algorithms on staged constraints
//   ldc-lab    experiments on the mod-r pairing code and its decoders
//
// All randomness is seeded; for a fixed subcommand, flags, and seed the
// outputs are byte-identical across runs and thread counts.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zrlab/hypermatching_comm.hpp"
#include "zrlab/ldc.hpp"
#include "zrlab/report.hpp"
#include "zrlab/streaming_ug.hpp"
#include "zrlab/suites.hpp"

namespace {

using nlohmann::json;

void emit(const json& payload, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << payload.dump(2) << "\n";
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file: " + out_path);
  os << payload.dump(2) << "\n";
}

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open config file: " + path);
  json j;
  is >> j;
  if (!j.is_object()) throw std::runtime_error("config file must hold a JSON object");
  return j;
}

// Applies `key` from the config unless the flag was given on the command line.
template <typename T>
void apply_config(const json& cfg, const CLI::Option* opt, const std::string& key, T& value) {
  if (opt != nullptr && opt->count() > 0) return;
  if (cfg.contains(key)) value = cfg.at(key).get<T>();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zrlab: verification and simulation toolkit for Z_r-valued streams, protocols and codes"};
  app.require_subcommand(1);

  // Shared options, registered per subcommand.
  struct Common {
    std::string config;
    std::uint64_t seed = 1;
    long trials = 200;
    double tol = 1e-9;
    std::string out;
    int threads = 1;
    CLI::Option* seed_opt = nullptr;
    CLI::Option* trials_opt = nullptr;
    CLI::Option* tol_opt = nullptr;
    CLI::Option* out_opt = nullptr;
    CLI::Option* threads_opt = nullptr;
  };
  auto add_common = [](CLI::App* cmd, Common& c, const char* out_help) {
    cmd->add_option("--config", c.config, "JSON config file; command-line flags take precedence");
    c.seed_opt = cmd->add_option("--seed", c.seed, "root RNG seed");
    c.trials_opt = cmd->add_option("--trials", c.trials, "Monte Carlo trial count");
    c.tol_opt = cmd->add_option("--tol", c.tol, "numeric tolerance for hard checks");
    c.out_opt = cmd->add_option("--out", c.out, out_help);
    c.threads_opt = cmd->add_option("--threads", c.threads, "worker threads (never changes output bytes)");
  };
  auto finish_common = [](Common& c) {
    const json cfg = load_config(c.config);
    apply_config(cfg, c.seed_opt, "seed", c.seed);
    apply_config(cfg, c.trials_opt, "trials", c.trials);
    apply_config(cfg, c.tol_opt, "tol", c.tol);
    apply_config(cfg, c.out_opt, "out", c.out);
    apply_config(cfg, c.threads_opt, "threads", c.threads);
    return cfg;
  };

  // ---- verify ------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run a verification suite and write CSV/JSON reports");
  Common vc;
  std::string suite = "all";
  auto* suite_opt = verify->add_option("--suite", suite, "inequalities | hh | ug | ldc | all");
  add_common(verify, vc, "output directory for <suite>.csv and <suite>.json");
  verify->callback([&]() {
    const json cfg = finish_common(vc);
    apply_config(cfg, suite_opt, "suite", suite);
    zrlab::SuiteConfig sc;
    sc.suite = suite;
    sc.seed = vc.seed;
    sc.trials = vc.trials;
    sc.tol = vc.tol;
    sc.out_dir = vc.out.empty() ? "." : vc.out;
    sc.threads = vc.threads;
    if (cfg.contains("params")) sc.params = cfg.at("params");
    const int failures = zrlab::run_suite_to_files(sc);
    std::cout << "suite=" << sc.suite << " hard_failures=" << failures << "\n";
    if (failures > 0) throw CLI::RuntimeError(std::min(failures, 100));
  });

  // ---- hh-sim ------------------------------------------------------------
  auto* hh = app.add_subcommand("hh-sim", "hidden-hypermatching protocol simulation");
  Common hc;
  int hh_r = 2, hh_n = 8, hh_t = 2, hh_budget = -1, hh_reps = 3;
  double hh_alpha = 1.0;
  std::string hh_mode = "quantum";
  hh->add_option("--r", hh_r, "alphabet size");
  hh->add_option("--n", hh_n, "input length");
  hh->add_option("--t", hh_t, "edge size (quantum mode requires 2)");
  hh->add_option("--alpha", hh_alpha, "matched fraction of vertices");
  hh->add_option("--mode", hh_mode, "classical | quantum");
  hh->add_option("--budget", hh_budget, "classical mode: revealed entries (default n)");
  hh->add_option("--reps", hh_reps, "quantum mode: repetitions per run");
  add_common(hh, hc, "output JSON file ('-' for stdout)");
  hh->callback([&]() {
    finish_common(hc);
    if (hh_budget < 0) hh_budget = hh_n;
    long yes_ok = 0, no_ok = 0;
    for (long trial = 0; trial < hc.trials; ++trial) {
      for (int label = 0; label < 2; ++label) {
        const bool yes = label == 0;
        const auto inst = zrlab::sample_hh_instance(
            hh_n, hh_t, hh_alpha, hh_r, yes,
            zrlab::split_seed(hc.seed, 2 * static_cast<std::uint64_t>(trial) + static_cast<std::uint64_t>(label)));
        const std::uint64_t run_seed = zrlab::split_seed(hc.seed, 1000000 + 2 * static_cast<std::uint64_t>(trial) + static_cast<std::uint64_t>(label));
        const bool accepted = hh_mode == "quantum" ? zrlab::quantum_protocol_run(inst, hh_reps, run_seed)
                                                   : zrlab::classical_protocol_run(inst, hh_budget, run_seed);
        if (yes && accepted) ++yes_ok;
        if (!yes && accepted) ++no_ok;
      }
    }
    const double yes_rate = static_cast<double>(yes_ok) / static_cast<double>(hc.trials);
    const double no_rate = static_cast<double>(no_ok) / static_cast<double>(hc.trials);
    emit(json{{"mode", hh_mode},
              {"r", hh_r},
              {"n", hh_n},
              {"t", hh_t},
              {"alpha", hh_alpha},
              {"trials", hc.trials},
              {"seed", hc.seed},
              {"budget", hh_mode == "classical" ? json(hh_budget) : json()},
              {"reps", hh_mode == "quantum" ? json(hh_reps) : json()},
              {"yes_accept_rate", yes_rate},
              {"no_accept_rate", no_rate},
              {"gap", yes_rate - no_rate}},
         hc.out);
  });

  // ---- ug-stream ---------------------------------------------------------
  auto* ug = app.add_subcommand("ug-stream", "staged constraint streams and algorithms");
  Common uc;
  std::string ug_action = "run", ug_algorithm = "full", ug_label = "yes", ug_stream_file, ug_emit_file;
  int ug_n = 8, ug_t = 2, ug_r = 2, ug_k = 2, ug_jstar = 1;
  double ug_alpha = 1.0;
  bool ug_force_mc = false;
  ug->add_option("--action", ug_action, "run | emit | profile | reduce");
  ug->add_option("--algorithm", ug_algorithm, "count | constant | full");
  ug->add_option("--label", ug_label, "yes | no (which distribution to sample)");
  ug->add_option("--n", ug_n, "vertex count");
  ug->add_option("--t", ug_t, "edge size");
  ug->add_option("--r", ug_r, "alphabet size");
  ug->add_option("--k", ug_k, "stage count");
  ug->add_option("--alpha", ug_alpha, "matched fraction per stage");
  ug->add_option("--j-star", ug_jstar, "reduce: stages Alice feeds before Bob's constraints");
  ug->add_option("--stream-file", ug_stream_file, "run: read the constraint stream from JSONL instead of sampling");
  ug->add_option("--emit-file", ug_emit_file, "emit: JSONL path for the sampled stream");
  ug->add_flag("--force-monte-carlo", ug_force_mc, "reduce: skip the exact small-case path");
  add_common(ug, uc, "output JSON file ('-' for stdout)");
  ug->callback([&]() {
    finish_common(uc);
    const bool yes = ug_label == "yes";
    if (ug_action == "emit") {
      if (ug_emit_file.empty()) throw CLI::ValidationError("--emit-file is required for --action emit");
      const auto inst = zrlab::sample_ug(yes, ug_n, ug_t, ug_r, ug_k, ug_alpha, uc.seed);
      std::ofstream os(ug_emit_file, std::ios::binary);
      if (!os) throw std::runtime_error("cannot open " + ug_emit_file);
      zrlab::write_stream_jsonl(os, inst);
      std::cout << "wrote " << inst.constraints.size() << " constraints to " << ug_emit_file << "\n";
      return;
    }
    if (ug_action == "run") {
      zrlab::UGInstance inst;
      if (!ug_stream_file.empty()) {
        std::ifstream is(ug_stream_file);
        if (!is) throw std::runtime_error("cannot open " + ug_stream_file);
        inst = zrlab::read_stream_jsonl(is, ug_r, ug_n, ug_t);
      } else {
        inst = zrlab::sample_ug(yes, ug_n, ug_t, ug_r, ug_k, ug_alpha, uc.seed);
      }
      auto alg = zrlab::make_algorithm(ug_algorithm);
      alg->init(ug_r, ug_n, ug_t, zrlab::split_seed(uc.seed, 1));
      for (const auto& c : inst.constraints) alg->update(c);
      const std::string state = alg->state();
      json payload{{"algorithm", ug_algorithm}, {"constraints", inst.constraints.size()},
                   {"estimate", alg->output()},  {"state_bytes", state.size()},
                   {"trivial", zrlab::trivial_stream_approx(inst)}};
      const long long points = zrlab::power_checked(ug_r, ug_n, 1000000);
      if (points <= 100000) payload["opt"] = zrlab::ug_opt_bruteforce(inst).first;
      emit(payload, uc.out);
      return;
    }
    if (ug_action == "profile") {
      const auto profile = zrlab::find_informative_index(zrlab::algorithm_registry().at(ug_algorithm), ug_n, ug_t,
                                                         ug_r, ug_alpha, ug_k, uc.trials, uc.seed);
      emit(json{{"algorithm", ug_algorithm},
                {"tvd", profile.tvd},
                {"informative_index", profile.informative_index},
                {"increment", profile.increment}},
           uc.out);
      return;
    }
    if (ug_action == "reduce") {
      const zrlab::HHParams hp{ug_n, ug_t, ug_alpha, ug_r};
      const auto red = zrlab::run_reduction(zrlab::algorithm_registry().at(ug_algorithm), ug_jstar, hp, uc.trials,
                                            uc.seed, ug_force_mc);
      emit(json{{"algorithm", ug_algorithm},
                {"j_star", ug_jstar},
                {"bias", red.bias},
                {"sigma", red.sigma},
                {"yes_rate", red.yes_rate},
                {"no_rate", red.no_rate},
                {"exact", red.exact}},
           uc.out);
      return;
    }
    throw CLI::ValidationError("unknown --action '" + ug_action + "'");
  });

  // ---- ldc-lab -----------------------------------------------------------
  auto* ldc = app.add_subcommand("ldc-lab", "pairing-code encoding, decoding and length-bound experiments");
  Common lc;
  int ldc_r = 2, ldc_n = 3, ldc_bound_n = 100;
  double ldc_delta = 0.05, ldc_eps = 0.1;
  ldc->add_option("--r", ldc_r, "alphabet size");
  ldc->add_option("--n", ldc_n, "message length (codeword length 2^n)");
  ldc->add_option("--delta", ldc_delta, "corruption rate");
  ldc->add_option("--bound-n", ldc_bound_n, "message length for the lower-bound evaluation");
  ldc->add_option("--eps", ldc_eps, "advantage for the lower-bound evaluation");
  add_common(ldc, lc, "output JSON file ('-' for stdout)");
  ldc->callback([&]() {
    finish_common(lc);
    const zrlab::Code code = zrlab::hadamard_code(ldc_r, ldc_n);
    const zrlab::Decoder dec = zrlab::hadamard_decoder(ldc_r, ldc_n);
    const auto noise = [&](const zrlab::ZrString& clean, std::uint64_t s) {
      return zrlab::corrupt_random(clean, ldc_delta, s);
    };
    const auto rec = zrlab::empirical_recovery(code, dec, noise, lc.trials, zrlab::split_seed(lc.seed, 1));
    const auto transformed = zrlab::smooth_transform(code, dec, ldc_delta);
    const auto& srep = transformed.second;
    const auto good = zrlab::good_set_matching(code, dec, 0, 1.0 - 1.0 / ldc_r, srep.c_measured);
    emit(json{{"r", ldc_r},
              {"n", ldc_n},
              {"N", code.N},
              {"delta", ldc_delta},
              {"trials", lc.trials},
              {"seed", lc.seed},
              {"clean_advantage", zrlab::exact_clean_advantage(code, dec)},
              {"noisy_min_success", rec.min_success},
              {"noisy_min_advantage", rec.min_advantage},
              {"per_index_success", rec.success},
              {"smoothness",
               {{"c_claimed", srep.c_claimed},
                {"c_measured", srep.c_measured},
                {"smooth_ok", srep.smooth_ok},
                {"advantage", srep.advantage},
                {"converse_advantage", srep.converse_advantage}}},
              {"good_sets",
               {{"count", good.sets.size()},
                {"matching_size", good.matching.size()},
                {"matching_guarantee", good.matching_guarantee}}},
              {"min_length_bound", zrlab::min_length_bound(ldc_bound_n, ldc_r, ldc_delta, ldc_eps)}},
         lc.out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 120;
  }
  return 0;
}
