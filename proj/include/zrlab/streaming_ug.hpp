// Streamed linear unique-games instances over Z_r and the communication
// reduction that lower-bounds the memory of streaming approximators.
//
// An instance is an ordered stream of constraints sum_{i in e} x_i = b (mod r)
// on t-subsets e, generated in k stages of alpha-partial t-hypermatchings.
// YES streams are satisfiable by a hidden assignment z; NO streams draw every
// target uniformly.  A streaming algorithm sees the constraints once, in
// order; the reduction converts any algorithm whose memory distinguishes the
// two stream laws into a protocol for the hidden-matching game.
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "zrlab/hypermatching_comm.hpp"
#include "zrlab/zr_core.hpp"

namespace zrlab {

/// One streamed constraint: sum of x over `edge` equals `target` mod r.
struct UGConstraint {
  std::vector<int> edge;
  int target = 0;

  friend bool operator==(const UGConstraint&, const UGConstraint&) = default;
};

/// A full streamed instance.  `z` is the hidden assignment of YES instances.
struct UGInstance {
  int r = 2;
  int n = 0;
  int t = 2;
  std::vector<UGConstraint> constraints;
  bool yes_label = false;
  std::optional<ZrString> z;
};

/// Samples a k-stage instance: each stage is a fresh uniform alpha-partial
/// t-hypermatching; YES targets are the edge sums of a hidden uniform z
/// (drawn once), NO targets are uniform.  Duplicate edges across stages are
/// preserved; constraints appear stage by stage in canonical edge order.
inline UGInstance sample_ug(bool yes, int n, int t, int r, int k, double alpha, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("sample_ug: need at least one stage");
  Rng rng(seed);
  UGInstance inst;
  inst.r = r;
  inst.n = n;
  inst.t = t;
  inst.yes_label = yes;
  if (yes) {
    ZrString z = zero_string(r, n);
    for (auto& e : z.entries) e = rng.below_int(r);
    inst.z = z;
  }
  for (int stage = 0; stage < k; ++stage) {
    const Hypermatching m = sample_hypermatching(n, t, alpha, rng.next_u64());
    for (const auto& edge : m.edges) {
      int target;
      if (yes) {
        long long sum = 0;
        for (int v : edge) sum += inst.z->entries[static_cast<std::size_t>(v)];
        target = static_cast<int>(sum % r);
      } else {
        target = rng.below_int(r);
      }
      inst.constraints.push_back(UGConstraint{edge, target});
    }
  }
  return inst;
}

/// Number of constraints satisfied by assignment x.
inline long long ug_value(const UGInstance& inst, const ZrString& x) {
  if (x.n() != inst.n || x.r != inst.r) throw std::invalid_argument("ug_value: assignment shape mismatch");
  long long sat = 0;
  for (const auto& c : inst.constraints) {
    long long sum = 0;
    for (int v : c.edge) sum += x.entries[static_cast<std::size_t>(v)];
    if (static_cast<int>(sum % inst.r) == c.target) ++sat;
  }
  return sat;
}

/// Exhaustive optimum (value and first maximizing witness in mixed-radix
/// order).  Guarded at r^n <= 1e7 assignments.
inline std::pair<long long, ZrString> ug_opt_bruteforce(const UGInstance& inst) {
  const long long points = power_checked(inst.r, inst.n, 10000000);
  long long best = -1;
  ZrString witness = zero_string(inst.r, inst.n);
  for (long long xi = 0; xi < points; ++xi) {
    const ZrString x = index_string(inst.r, inst.n, xi);
    const long long v = ug_value(inst, x);
    if (v > best) {
      best = v;
      witness = x;
    }
  }
  return {best, witness};
}

/// The streaming-trivial estimate |E| / r.  A uniform random assignment
/// satisfies each constraint with probability 1/r, so OPT >= |E|/r, and
/// trivially OPT <= |E|; hence the estimate sits in [OPT/r, OPT].
inline double trivial_stream_approx(const UGInstance& inst) {
  return static_cast<double>(inst.constraints.size()) / inst.r;
}

/// Stage count k making a NO instance's optimum at most (1+eps) |E| / r with
/// failure probability <= fail: a Chernoff bound per assignment plus a union
/// bound over all r^n assignments gives
///   k >= 3 r t (n ln r + ln(1/fail)) / (eps^2 alpha n).
inline int chernoff_stage_count(int n, int t, int r, double alpha, double eps, double fail = 0.01) {
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("chernoff_stage_count: eps must be in (0, 1]");
  if (!(fail > 0.0 && fail < 1.0)) throw std::invalid_argument("chernoff_stage_count: fail must be in (0, 1)");
  const double k = 3.0 * r * t * (n * std::log(static_cast<double>(r)) + std::log(1.0 / fail)) /
                   (eps * eps * alpha * n);
  return static_cast<int>(std::ceil(k));
}

// ---------------------------------------------------------------------------
// Streaming algorithms.
// ---------------------------------------------------------------------------

/// Single-pass algorithm over a constraint stream.  Implementations must be
/// deterministic given the init seed, and `state()` must serialize the full
/// memory (two runs with equal states are indistinguishable afterwards).
class StreamingAlgorithm {
 public:
  virtual ~StreamingAlgorithm() = default;
  virtual void init(int r, int n, int t, std::uint64_t seed) = 0;
  virtual void update(const UGConstraint& c) = 0;
  virtual double output() const = 0;
  virtual std::string state() const = 0;
};

using AlgorithmFactory = std::function<std::unique_ptr<StreamingAlgorithm>()>;

namespace detail {

inline std::string encode_constraint(const UGConstraint& c) {
  std::string s = "(";
  for (int v : c.edge) {
    s += std::to_string(v);
    s += ' ';
  }
  s += '=';
  s += std::to_string(c.target);
  s += ')';
  return s;
}

}  // namespace detail

/// Remembers only the number of constraints; outputs the trivial |E|/r.
class CountingAlgorithm final : public StreamingAlgorithm {
 public:
  void init(int r, int n, int t, std::uint64_t) override {
    r_ = r;
    n_ = n;
    t_ = t;
    count_ = 0;
  }
  void update(const UGConstraint&) override { ++count_; }
  double output() const override { return static_cast<double>(count_) / r_; }
  std::string state() const override { return std::to_string(count_); }

 private:
  int r_ = 2, n_ = 0, t_ = 2;
  long long count_ = 0;
};

/// Remembers nothing at all.
class ConstantAlgorithm final : public StreamingAlgorithm {
 public:
  void init(int, int, int, std::uint64_t) override {}
  void update(const UGConstraint&) override {}
  double output() const override { return 0.0; }
  std::string state() const override { return std::string(); }
};

/// Remembers the entire stream; outputs the exhaustive optimum when the
/// assignment space is small enough, else the trivial estimate.
class FullMemoryAlgorithm final : public StreamingAlgorithm {
 public:
  void init(int r, int n, int t, std::uint64_t) override {
    r_ = r;
    n_ = n;
    t_ = t;
    stored_.clear();
  }
  void update(const UGConstraint& c) override { stored_.push_back(c); }
  double output() const override {
    UGInstance inst;
    inst.r = r_;
    inst.n = n_;
    inst.t = t_;
    inst.constraints = stored_;
    long long points = 1;
    for (int i = 0; i < n_; ++i) {
      points *= r_;
      if (points > 100000) return trivial_stream_approx(inst);
    }
    return static_cast<double>(ug_opt_bruteforce(inst).first);
  }
  std::string state() const override {
    std::string s;
    for (const auto& c : stored_) s += detail::encode_constraint(c);
    return s;
  }

 private:
  int r_ = 2, n_ = 0, t_ = 2;
  std::vector<UGConstraint> stored_;
};

/// Remembers the first `stage_size` constraints verbatim and counts the rest.
class FirstStageAlgorithm final : public StreamingAlgorithm {
 public:
  explicit FirstStageAlgorithm(int stage_size) : stage_size_(stage_size) {}
  void init(int r, int, int, std::uint64_t) override {
    r_ = r;
    stored_.clear();
    count_ = 0;
  }
  void update(const UGConstraint& c) override {
    if (static_cast<int>(stored_.size()) < stage_size_) stored_.push_back(c);
    ++count_;
  }
  double output() const override { return static_cast<double>(count_) / r_; }
  std::string state() const override {
    std::string s;
    for (const auto& c : stored_) s += detail::encode_constraint(c);
    return s;
  }

 private:
  int stage_size_;
  int r_ = 2;
  std::vector<UGConstraint> stored_;
  long long count_ = 0;
};

/// Name -> factory registry; "count", "constant" and "full" are built in.
inline std::map<std::string, AlgorithmFactory>& algorithm_registry() {
  static std::map<std::string, AlgorithmFactory> reg = {
      {"count", [] { return std::make_unique<CountingAlgorithm>(); }},
      {"constant", [] { return std::make_unique<ConstantAlgorithm>(); }},
      {"full", [] { return std::make_unique<FullMemoryAlgorithm>(); }},
  };
  return reg;
}

inline void register_algorithm(const std::string& name, AlgorithmFactory factory) {
  algorithm_registry()[name] = std::move(factory);
}

inline std::unique_ptr<StreamingAlgorithm> make_algorithm(const std::string& name) {
  const auto& reg = algorithm_registry();
  const auto it = reg.find(name);
  if (it == reg.end()) throw std::invalid_argument("make_algorithm: unknown algorithm '" + name + "'");
  return it->second();
}

// ---------------------------------------------------------------------------
// Memory-distribution divergence across stages.
// ---------------------------------------------------------------------------

/// L1 total variation distance sum_s |p(s) - q(s)| over the union support.
inline double tvd_l1(const std::map<std::string, double>& p, const std::map<std::string, double>& q) {
  double acc = 0.0;
  for (const auto& [k, v] : p) {
    const auto it = q.find(k);
    acc += std::fabs(v - (it == q.end() ? 0.0 : it->second));
  }
  for (const auto& [k, v] : q) {
    if (p.find(k) == p.end()) acc += v;
  }
  return acc;
}

inline double tvd_l1(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) throw std::invalid_argument("tvd_l1: length mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) acc += std::fabs(p[i] - q[i]);
  return acc;
}

/// Divergence profile of an algorithm's memory across stages.
///   tvd[j]   : estimated L1 distance between the memory distribution after
///              j stages under YES vs NO streams (tvd[0] = 0 by pairing).
///   informative_index : the j in [0, k) maximizing tvd[j+1] - tvd[j].
///   increment         : that maximum; always >= (tvd[k] - tvd[0]) / k.
struct TvdProfile {
  std::vector<double> tvd;
  int informative_index = 0;
  double increment = 0.0;
};

/// Estimates the stage profile by Monte Carlo: `trials` YES/NO stream pairs
/// (arms share the algorithm seed, so stage 0 is identical by construction),
/// memory snapshots histogrammed per stage.  Throws std::length_error if the
/// observed state space exceeds 1e6 distinct states.
inline TvdProfile find_informative_index(const AlgorithmFactory& factory, int n, int t, int r, double alpha, int k,
                                         long trials, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("find_informative_index: need at least one stage");
  if (trials < 1) throw std::invalid_argument("find_informative_index: need at least one trial");
  std::vector<std::map<std::string, double>> hist_yes(static_cast<std::size_t>(k + 1));
  std::vector<std::map<std::string, double>> hist_no(static_cast<std::size_t>(k + 1));
  const double wt = 1.0 / static_cast<double>(trials);
  std::size_t distinct = 0;
  for (long trial = 0; trial < trials; ++trial) {
    const std::uint64_t alg_seed = split_seed(seed, static_cast<std::uint64_t>(2 * trial));
    const std::uint64_t stream_seed = split_seed(seed, static_cast<std::uint64_t>(2 * trial + 1));
    for (int label = 0; label < 2; ++label) {
      const bool yes = (label == 0);
      auto alg = factory();
      alg->init(r, n, t, alg_seed);
      const UGInstance inst = sample_ug(yes, n, t, r, k, alpha, split_seed(stream_seed, yes ? 1 : 2));
      auto& hist = yes ? hist_yes : hist_no;
      const int stage_size = static_cast<int>(inst.constraints.size()) / k;
      hist[0][alg->state()] += wt;
      for (int stage = 0; stage < k; ++stage) {
        for (int i = 0; i < stage_size; ++i) {
          alg->update(inst.constraints[static_cast<std::size_t>(stage * stage_size + i)]);
        }
        hist[static_cast<std::size_t>(stage + 1)][alg->state()] += wt;
      }
    }
    distinct = 0;
    for (const auto& h : hist_yes) distinct += h.size();
    for (const auto& h : hist_no) distinct += h.size();
    if (distinct > 1000000) throw std::length_error("find_informative_index: state space exceeds budget");
  }
  TvdProfile profile;
  profile.tvd.resize(static_cast<std::size_t>(k + 1));
  for (int j = 0; j <= k; ++j) {
    profile.tvd[static_cast<std::size_t>(j)] = tvd_l1(hist_yes[static_cast<std::size_t>(j)], hist_no[static_cast<std::size_t>(j)]);
  }
  profile.increment = -1.0;
  for (int j = 0; j < k; ++j) {
    const double inc = profile.tvd[static_cast<std::size_t>(j + 1)] - profile.tvd[static_cast<std::size_t>(j)];
    if (inc > profile.increment) {
      profile.increment = inc;
      profile.informative_index = j;
    }
  }
  return profile;
}

// ---------------------------------------------------------------------------
// Reduction: a streaming algorithm becomes a hidden-matching protocol.
// ---------------------------------------------------------------------------

/// Hidden-matching problem dimensions for the reduction.
struct HHParams {
  int n = 0;
  int t = 2;
  double alpha = 1.0;
  int r = 2;
};

/// Outcome of the reduction experiment.
struct ReductionResult {
  double bias = 0.0;      // Pr[output 1 | YES] - Pr[output 1 | NO]
  double sigma = 0.0;     // standard error (0 when exact)
  double yes_rate = 0.0;
  double no_rate = 0.0;
  bool exact = false;
};

namespace detail {

/// Alice feeds j_star stages generated from her own x as hidden assignment;
/// Bob appends his (M, w) constraints as stage j_star + 1.  Returns the
/// algorithm's final memory.
inline std::string reduction_final_state(const AlgorithmFactory& factory, int j_star, const HHInstance& inst,
                                         std::uint64_t seed) {
  Rng rng(seed);
  auto alg = factory();
  alg->init(inst.r, inst.n, inst.t, rng.next_u64());
  for (int stage = 0; stage < j_star; ++stage) {
    const Hypermatching m = sample_hypermatching(inst.n, inst.t, inst.alpha, rng.next_u64());
    const ZrString targets = apply_matching(m, inst.x);
    for (std::size_t e = 0; e < m.edges.size(); ++e) {
      alg->update(UGConstraint{m.edges[e], targets.entries[e]});
    }
  }
  for (std::size_t e = 0; e < inst.m.edges.size(); ++e) {
    alg->update(UGConstraint{inst.m.edges[e], inst.w.entries[e]});
  }
  return alg->state();
}

/// Exact final-memory distributions under both labels, by enumerating all of
/// the input randomness (x, Alice's stage matchings, Bob's matching, w).
/// Only valid for algorithms that ignore their seed; feasibility must be
/// pre-checked by the caller.
inline std::pair<std::map<std::string, double>, std::map<std::string, double>> reduction_exact_distributions(
    const AlgorithmFactory& factory, int j_star, const HHParams& hp) {
  const auto matchings = enumerate_hypermatchings(hp.n, hp.t, hp.alpha);
  const long long n_match = static_cast<long long>(matchings.size());
  const long long points = power_checked(hp.r, hp.n);
  const int edges = matching_edge_target(hp.n, hp.t, hp.alpha);
  const long long targets = power_checked(hp.r, edges);
  // Alice's matching sequences: indices into `matchings`, j_star long.
  long long seqs = 1;
  for (int s = 0; s < j_star; ++s) seqs *= n_match;
  std::map<std::string, double> dist_yes, dist_no;
  const double w_yes = 1.0 / (static_cast<double>(points) * seqs * n_match);
  const double w_no = w_yes / static_cast<double>(targets);
  for (long long xi = 0; xi < points; ++xi) {
    const ZrString x = index_string(hp.r, hp.n, xi);
    for (long long seq = 0; seq < seqs; ++seq) {
      for (long long bm = 0; bm < n_match; ++bm) {
        const Hypermatching& bob_m = matchings[static_cast<std::size_t>(bm)];
        // Alice's stages are shared by all w draws; replay from the seq code.
        auto run_prefix = [&](StreamingAlgorithm& alg) {
          alg.init(hp.r, hp.n, hp.t, 0);
          long long code = seq;
          for (int s = 0; s < j_star; ++s) {
            const Hypermatching& m = matchings[static_cast<std::size_t>(code % n_match)];
            code /= n_match;
            const ZrString tg = apply_matching(m, x);
            for (std::size_t e = 0; e < m.edges.size(); ++e) alg.update(UGConstraint{m.edges[e], tg.entries[e]});
          }
        };
        // YES: w = Mx.
        {
          auto alg = factory();
          run_prefix(*alg);
          const ZrString w = apply_matching(bob_m, x);
          for (std::size_t e = 0; e < bob_m.edges.size(); ++e) alg->update(UGConstraint{bob_m.edges[e], w.entries[e]});
          dist_yes[alg->state()] += w_yes;
        }
        // NO: every w in Z_r^E.
        for (long long wi = 0; wi < targets; ++wi) {
          auto alg = factory();
          run_prefix(*alg);
          const ZrString w = index_string(hp.r, edges, wi);
          for (std::size_t e = 0; e < bob_m.edges.size(); ++e) alg->update(UGConstraint{bob_m.edges[e], w.entries[e]});
          dist_no[alg->state()] += w_no;
        }
      }
    }
  }
  return {std::move(dist_yes), std::move(dist_no)};
}

/// Enumeration size of the reduction's input randomness, or -1 on overflow.
inline long long reduction_enumeration_size(int j_star, const HHParams& hp) {
  const BigInt n_match = count_hypermatchings(hp.n, hp.t, hp.alpha);
  const int edges = matching_edge_target(hp.n, hp.t, hp.alpha);
  BigInt total = 1;
  for (int i = 0; i < hp.n; ++i) total *= hp.r;
  for (int s = 0; s < j_star; ++s) total *= n_match;
  total *= n_match;
  BigInt t2 = total;
  for (int i = 0; i < edges; ++i) t2 *= hp.r;
  if (t2 > BigInt(1000000000)) return -1;
  return static_cast<long long>(t2);
}

}  // namespace detail

/// Runs the streaming-to-communication reduction: Alice simulates `j_star`
/// stages seeded by her own input (hidden assignment z = x), sends the
/// memory; Bob appends his (M, w) constraints as stage j_star + 1 and
/// outputs 1 iff the final memory is at least as likely under YES as under
/// NO (ties favor 1).  Returns the distinguishing bias
/// Pr[1 | YES] - Pr[1 | NO]; exact (= half the L1 distance between the two
/// final-memory laws) when the input randomness enumerates within 1e4,
/// Monte Carlo with `trials` samples per arm otherwise.
inline ReductionResult run_reduction(const AlgorithmFactory& factory, int j_star, const HHParams& hp, long trials,
                                     std::uint64_t seed, bool force_monte_carlo = false) {
  if (j_star < 0) throw std::invalid_argument("run_reduction: j_star must be >= 0");
  ReductionResult res;
  const long long enum_size = detail::reduction_enumeration_size(j_star, hp);
  if (!force_monte_carlo && enum_size >= 0 && enum_size <= 10000) {
    const auto [dist_yes, dist_no] = detail::reduction_exact_distributions(factory, j_star, hp);
    // States only in dist_no have p = 0 < q, so the rule outputs 0 there and
    // they contribute to neither rate; iterating dist_yes covers everything.
    double rate_yes = 0.0, rate_no = 0.0;
    for (const auto& [s, p] : dist_yes) {
      const auto it = dist_no.find(s);
      const double q = (it == dist_no.end() ? 0.0 : it->second);
      if (p >= q) {
        rate_yes += p;
        rate_no += q;
      }
    }
    res.bias = rate_yes - rate_no;
    res.yes_rate = rate_yes;
    res.no_rate = rate_no;
    res.sigma = 0.0;
    res.exact = true;
    return res;
  }
  if (trials < 1) throw std::invalid_argument("run_reduction: need trials >= 1 for the Monte Carlo path");
  // Reference distributions for the likelihood rule.
  std::map<std::string, double> ref_yes, ref_no;
  const double wt = 1.0 / static_cast<double>(trials);
  for (long i = 0; i < trials; ++i) {
    const HHInstance ys = sample_hh_instance(hp.n, hp.t, hp.alpha, hp.r, true, split_seed(seed, 4 * static_cast<std::uint64_t>(i)));
    const HHInstance ns = sample_hh_instance(hp.n, hp.t, hp.alpha, hp.r, false, split_seed(seed, 4 * static_cast<std::uint64_t>(i) + 1));
    ref_yes[detail::reduction_final_state(factory, j_star, ys, split_seed(seed, 4 * static_cast<std::uint64_t>(i) + 2))] += wt;
    ref_no[detail::reduction_final_state(factory, j_star, ns, split_seed(seed, 4 * static_cast<std::uint64_t>(i) + 3))] += wt;
  }
  auto rule = [&](const std::string& s) {
    const auto py = ref_yes.find(s);
    const auto pn = ref_no.find(s);
    const double p = (py == ref_yes.end() ? 0.0 : py->second);
    const double q = (pn == ref_no.end() ? 0.0 : pn->second);
    return p >= q;
  };
  // Fresh evaluation samples.
  long ones_yes = 0, ones_no = 0;
  const std::uint64_t eval_seed = split_seed(seed, 0xe7a1ULL);
  for (long i = 0; i < trials; ++i) {
    const HHInstance ys = sample_hh_instance(hp.n, hp.t, hp.alpha, hp.r, true, split_seed(eval_seed, 4 * static_cast<std::uint64_t>(i)));
    const HHInstance ns = sample_hh_instance(hp.n, hp.t, hp.alpha, hp.r, false, split_seed(eval_seed, 4 * static_cast<std::uint64_t>(i) + 1));
    if (rule(detail::reduction_final_state(factory, j_star, ys, split_seed(eval_seed, 4 * static_cast<std::uint64_t>(i) + 2)))) ++ones_yes;
    if (rule(detail::reduction_final_state(factory, j_star, ns, split_seed(eval_seed, 4 * static_cast<std::uint64_t>(i) + 3)))) ++ones_no;
  }
  res.yes_rate = static_cast<double>(ones_yes) / static_cast<double>(trials);
  res.no_rate = static_cast<double>(ones_no) / static_cast<double>(trials);
  res.bias = res.yes_rate - res.no_rate;
  res.sigma = std::sqrt(res.yes_rate * (1.0 - res.yes_rate) / trials + res.no_rate * (1.0 - res.no_rate) / trials);
  res.exact = false;
  return res;
}

// ---------------------------------------------------------------------------
// Serialization: JSON-lines streams ({"edge": [...], "target": b} per line)
// and a full-instance JSON object.
// ---------------------------------------------------------------------------

inline void write_stream_jsonl(std::ostream& os, const UGInstance& inst) {
  for (const auto& c : inst.constraints) {
    os << nlohmann::json{{"edge", c.edge}, {"target", c.target}}.dump() << '\n';
  }
}

/// Parses a JSON-lines constraint stream (shape parameters supplied by the
/// caller; blank lines ignored).
inline UGInstance read_stream_jsonl(std::istream& is, int r, int n, int t) {
  UGInstance inst;
  inst.r = r;
  inst.n = n;
  inst.t = t;
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto j = nlohmann::json::parse(line);
    UGConstraint c{j.at("edge").get<std::vector<int>>(), j.at("target").get<int>()};
    if (static_cast<int>(c.edge.size()) != t) throw std::invalid_argument("read_stream_jsonl: edge arity mismatch");
    for (int v : c.edge) {
      if (v < 0 || v >= n) throw std::invalid_argument("read_stream_jsonl: vertex out of range");
    }
    if (c.target < 0 || c.target >= r) throw std::invalid_argument("read_stream_jsonl: target out of range");
    inst.constraints.push_back(std::move(c));
  }
  return inst;
}

inline nlohmann::json ug_instance_to_json(const UGInstance& inst) {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : inst.constraints) cs.push_back(nlohmann::json{{"edge", c.edge}, {"target", c.target}});
  nlohmann::json j{{"r", inst.r}, {"n", inst.n}, {"t", inst.t}, {"constraints", std::move(cs)},
                   {"label", inst.yes_label ? "yes" : "no"}};
  if (inst.z) j["z"] = inst.z->entries;
  return j;
}

inline UGInstance ug_instance_from_json(const nlohmann::json& j) {
  UGInstance inst;
  inst.r = j.at("r").get<int>();
  inst.n = j.at("n").get<int>();
  inst.t = j.at("t").get<int>();
  for (const auto& c : j.at("constraints")) {
    inst.constraints.push_back(UGConstraint{c.at("edge").get<std::vector<int>>(), c.at("target").get<int>()});
  }
  inst.yes_label = j.at("label").get<std::string>() == "yes";
  if (j.contains("z")) inst.z = make_zr_string(inst.r, j.at("z").get<std::vector<int>>());
  return inst;
}

}  // namespace zrlab
