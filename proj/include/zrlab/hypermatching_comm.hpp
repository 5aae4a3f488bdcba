// One-way communication game on hypermatchings: Alice holds x in Z_r^n, Bob
// holds an alpha-partial t-hypermatching M and a target string w, and must
// tell "w = Mx" (YES) from "w uniform" (NO).
//
// This module provides instance sampling, a one-sided classical protocol
// (reveal a budget of entries), an exact statevector simulation of the
// quantum protocol for t = 2, its closed-form measurement distribution, and
// the Fourier-side quantities used to bound any protocol: the correlation
// quantity u(M, w, S), the admissible-pattern set Delta(M) with its exact
// membership probability, and the bias of a message set.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "zrlab/matfourier.hpp"
#include "zrlab/zr_core.hpp"

namespace zrlab {

/// One labeled instance of the distinguishing game.
struct HHInstance {
  int r = 2;
  int n = 0;
  int t = 2;
  double alpha = 1.0;
  ZrString x;        // Alice's input, length n
  Hypermatching m;   // Bob's hypermatching
  ZrString w;        // Bob's targets, length = edge count
  bool yes_label = false;
};

/// Samples a labeled instance: x uniform, M uniform, w = Mx under YES and
/// w uniform under NO.
inline HHInstance sample_hh_instance(int n, int t, double alpha, int r, bool yes, std::uint64_t seed) {
  Rng rng(seed);
  HHInstance inst;
  inst.r = r;
  inst.n = n;
  inst.t = t;
  inst.alpha = alpha;
  inst.x = zero_string(r, n);
  for (auto& e : inst.x.entries) e = rng.below_int(r);
  inst.m = sample_hypermatching(n, t, alpha, rng.next_u64());
  inst.yes_label = yes;
  if (yes) {
    inst.w = apply_matching(inst.m, inst.x);
  } else {
    inst.w = zero_string(r, inst.m.edge_count());
    for (auto& e : inst.w.entries) e = rng.below_int(r);
  }
  return inst;
}

/// One-sided classical protocol: Alice reveals `budget` uniformly chosen
/// distinct entries of x; Bob answers NO only if some fully revealed edge
/// has sum != target.  Never errs on YES instances; budget 0 always accepts.
inline bool classical_protocol_run(const HHInstance& inst, int budget, std::uint64_t seed) {
  if (budget < 0 || budget > inst.n) throw std::invalid_argument("classical_protocol_run: budget outside [0, n]");
  Rng rng(seed);
  std::vector<int> order(static_cast<std::size_t>(inst.n));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<char> revealed(static_cast<std::size_t>(inst.n), 0);
  for (int i = 0; i < budget; ++i) revealed[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = 1;
  for (std::size_t e = 0; e < inst.m.edges.size(); ++e) {
    bool full = true;
    long long sum = 0;
    for (int v : inst.m.edges[e]) {
      if (!revealed[static_cast<std::size_t>(v)]) {
        full = false;
        break;
      }
      sum += inst.x.entries[static_cast<std::size_t>(v)];
    }
    if (full && static_cast<int>(sum % inst.r) != inst.w.entries[e]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Quantum protocol for t = 2 (exact statevector simulation).
//
// Alice's message is (1/sqrt(n)) sum_i |x_i>|i>.  Bob measures the POVM that
// projects the index register onto his matched pairs (retrying on the
// "unmatched" outcome with a fresh copy); on pair (u, v) the residual state
// is (|x_u>|0> + |x_v>|1>)/sqrt(2).  He adjoins an ancilla |0>, Fourier
// transforms it, applies the controlled unitary C_l^k (l = his target for
// the pair), inverse-Fourier-transforms and measures the ancilla.  C_l acts
// on value (x) tensor endpoint (e) as |a, e> -> w^l |l - a, 1 - e>, so YES
// instances make the residual state an eigenvector and the measurement
// returns l with certainty.
// ---------------------------------------------------------------------------

/// Closed-form ancilla measurement distribution for a pair with values
/// x0, x1 and target l.  If l = x0 + x1 (mod r) the outcome is l with
/// probability 1; otherwise
///   Pr[m] = (|sum_{even k < r} w^{k(l-m)}|^2 + |sum_{odd k < r} w^{k(l-m)}|^2) / r^2,
/// independent of x0, x1.  The mode is m = l with
/// Pr[l] = 1/2 (even r) or 1/2 + 1/(2 r^2) (odd r).
inline std::vector<double> measurement_distribution(int r, int ell, int x0, int x1) {
  if (r < 2) throw std::invalid_argument("measurement_distribution: r must be >= 2");
  auto norm_mod = [r](int v) { return ((v % r) + r) % r; };
  ell = norm_mod(ell);
  std::vector<double> dist(static_cast<std::size_t>(r), 0.0);
  if (norm_mod(x0 + x1) == ell) {
    dist[static_cast<std::size_t>(ell)] = 1.0;
    return dist;
  }
  const auto w = root_of_unity_powers(r);
  for (int m = 0; m < r; ++m) {
    std::complex<double> even(0.0, 0.0), odd(0.0, 0.0);
    for (int k = 0; k < r; ++k) {
      const auto ph = w[static_cast<std::size_t>(norm_mod(k * (ell - m)))];
      (k % 2 == 0 ? even : odd) += ph;
    }
    dist[static_cast<std::size_t>(m)] = (std::norm(even) + std::norm(odd)) / (static_cast<double>(r) * r);
  }
  return dist;
}

/// Ancilla measurement distribution computed by running the actual circuit
/// on the 2 r^2-dimensional statevector (value x endpoint x ancilla).
/// Must agree with measurement_distribution to float precision.
inline std::vector<double> simulate_measurement_distribution(int r, int x0, int x1, int ell) {
  if (r < 2) throw std::invalid_argument("simulate_measurement_distribution: r must be >= 2");
  if (x0 < 0 || x0 >= r || x1 < 0 || x1 >= r) throw std::invalid_argument("simulate_measurement_distribution: value out of range");
  auto norm_mod = [r](int v) { return ((v % r) + r) % r; };
  ell = norm_mod(ell);
  const auto w = root_of_unity_powers(r);
  // amp[value][endpoint][anc]
  auto idx = [r](int a, int e, int k) { return (a * 2 + e) * r + k; };
  std::vector<std::complex<double>> amp(static_cast<std::size_t>(2 * r * r), {0.0, 0.0});
  // Residual pair state tensored with the Fourier-transformed ancilla |0>.
  const double base = 1.0 / std::sqrt(2.0 * r);
  for (int k = 0; k < r; ++k) {
    amp[static_cast<std::size_t>(idx(x0, 0, k))] += base;
    amp[static_cast<std::size_t>(idx(x1, 1, k))] += base;
  }
  // Controlled C_l^k on each ancilla slice: |a, e> -> w^l |l - a, 1 - e>,
  // applied k times.
  std::vector<std::complex<double>> next(amp.size(), {0.0, 0.0});
  for (int k = 0; k < r; ++k) {
    for (int a = 0; a < r; ++a) {
      for (int e = 0; e < 2; ++e) {
        std::complex<double> v = amp[static_cast<std::size_t>(idx(a, e, k))];
        if (v == std::complex<double>(0.0, 0.0)) continue;
        int aa = a, ee = e;
        for (int step = 0; step < k; ++step) {
          v *= w[static_cast<std::size_t>(ell)];
          aa = norm_mod(ell - aa);
          ee = 1 - ee;
        }
        next[static_cast<std::size_t>(idx(aa, ee, k))] += v;
      }
    }
  }
  amp.swap(next);
  // Inverse Fourier on the ancilla: |k> -> (1/sqrt r) sum_j w^{-jk} |j>.
  std::fill(next.begin(), next.end(), std::complex<double>(0.0, 0.0));
  const double scale = 1.0 / std::sqrt(static_cast<double>(r));
  for (int a = 0; a < r; ++a) {
    for (int e = 0; e < 2; ++e) {
      for (int k = 0; k < r; ++k) {
        const std::complex<double> v = amp[static_cast<std::size_t>(idx(a, e, k))];
        if (v == std::complex<double>(0.0, 0.0)) continue;
        for (int j = 0; j < r; ++j) {
          next[static_cast<std::size_t>(idx(a, e, j))] += v * scale * std::conj(w[static_cast<std::size_t>(norm_mod(j * k))]);
        }
      }
    }
  }
  amp.swap(next);
  std::vector<double> dist(static_cast<std::size_t>(r), 0.0);
  for (int a = 0; a < r; ++a) {
    for (int e = 0; e < 2; ++e) {
      for (int m = 0; m < r; ++m) {
        dist[static_cast<std::size_t>(m)] += std::norm(amp[static_cast<std::size_t>(idx(a, e, m))]);
      }
    }
  }
  return dist;
}

/// Maximum number of POVM attempts per repetition before the repetition is
/// declared uninformative (counts as accepting, keeping the protocol
/// one-sided on YES instances).
inline int povm_retry_cap(double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("povm_retry_cap: alpha must be positive");
  return static_cast<int>(std::ceil(8.0 / alpha));
}

/// Runs the t = 2 quantum protocol with `repetitions` fresh messages.
/// Returns true for YES.  YES instances are accepted with certainty; NO
/// instances are accepted only if every informative repetition's measurement
/// hits its target.
inline bool quantum_protocol_run(const HHInstance& inst, int repetitions, std::uint64_t seed) {
  if (inst.t != 2) throw std::invalid_argument("quantum_protocol_run: only t = 2 is simulated");
  if (repetitions < 1) throw std::invalid_argument("quantum_protocol_run: need at least one repetition");
  Rng rng(seed);
  const int retry_cap = povm_retry_cap(inst.alpha);
  const int edge_count = inst.m.edge_count();
  for (int rep = 0; rep < repetitions; ++rep) {
    // POVM on the index register: each matched pair has weight 2/n.
    int edge = -1;
    for (int attempt = 0; attempt < retry_cap; ++attempt) {
      const double u = rng.uniform01();
      const double per_edge = 2.0 / inst.n;
      const int bucket = static_cast<int>(u / per_edge);
      if (bucket < edge_count) {
        edge = bucket;
        break;
      }
    }
    if (edge < 0) continue;  // uninformative repetition
    const int u_vtx = inst.m.edges[static_cast<std::size_t>(edge)][0];
    const int v_vtx = inst.m.edges[static_cast<std::size_t>(edge)][1];
    const int ell = inst.w.entries[static_cast<std::size_t>(edge)];
    const auto dist = simulate_measurement_distribution(inst.r, inst.x.entries[static_cast<std::size_t>(u_vtx)],
                                                        inst.x.entries[static_cast<std::size_t>(v_vtx)], ell);
    // Sample the ancilla outcome.
    const double draw = rng.uniform01();
    double acc = 0.0;
    int outcome = inst.r - 1;
    for (int m = 0; m < inst.r; ++m) {
      acc += dist[static_cast<std::size_t>(m)];
      if (draw < acc) {
        outcome = m;
        break;
      }
    }
    if (outcome != ell) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Fourier-side quantities.
// ---------------------------------------------------------------------------

/// Membership in Delta(M): S != 0, S vanishes on unmatched vertices, and S
/// is constant within every edge of M.  Exactly the patterns for which S.x
/// is a function of Mx.
inline bool delta_membership(const ZrString& s, const Hypermatching& m) {
  if (s.n() != m.n) throw std::invalid_argument("delta_membership: length mismatch");
  if (hamming_weight(s) == 0) return false;
  std::vector<char> matched(static_cast<std::size_t>(m.n), 0);
  for (const auto& e : m.edges) {
    const int v0 = s.entries[static_cast<std::size_t>(e.front())];
    for (int v : e) {
      matched[static_cast<std::size_t>(v)] = 1;
      if (s.entries[static_cast<std::size_t>(v)] != v0) return false;
    }
  }
  for (int i = 0; i < m.n; ++i) {
    if (!matched[static_cast<std::size_t>(i)] && s.entries[static_cast<std::size_t>(i)] != 0) return false;
  }
  return true;
}

/// Integer character counts behind u(M, w, S): counts[j] is
///   sum_x [S.x = j] * (r^E * [Mx = w] - 1),
/// so that u = (1/2) p_M r^{-n-E} sum_j counts[j] w^j with p_M the uniform
/// matching probability.  Exhaustive over Z_r^n; guarded at r^n <= 1e7.
inline std::vector<long long> u_character_counts(const Hypermatching& m, const ZrString& w, const ZrString& s) {
  const int r = w.r;
  if (s.r != r) throw std::invalid_argument("u_character_counts: alphabet mismatch");
  if (s.n() != m.n) throw std::invalid_argument("u_character_counts: pattern length mismatch");
  if (w.n() != m.edge_count()) throw std::invalid_argument("u_character_counts: target length mismatch");
  const long long points = power_checked(r, m.n, 10000000);
  const long long re = power_checked(r, m.edge_count());
  std::vector<long long> counts(static_cast<std::size_t>(r), 0);
  for (long long xi = 0; xi < points; ++xi) {
    const ZrString x = index_string(r, m.n, xi);
    const int j = zr_dot(s, x);
    const bool hit = apply_matching(m, x) == w;
    counts[static_cast<std::size_t>(j)] += (hit ? re : 0) - 1;
  }
  return counts;
}

/// u(M, w, S) = (1/2) E_x E_M [ w^{S.x} ([Mx = w] - r^{-E}) ] restricted to
/// the single matching M (the E_M factor contributes p_M = 1/#matchings).
inline std::complex<double> compute_u(const Hypermatching& m, const ZrString& w, const ZrString& s) {
  const auto counts = u_character_counts(m, w, s);
  const int r = w.r;
  const auto omega = root_of_unity_powers(r);
  std::complex<double> acc(0.0, 0.0);
  for (int j = 0; j < r; ++j) acc += static_cast<double>(counts[static_cast<std::size_t>(j)]) * omega[static_cast<std::size_t>(j)];
  const double p_m = 1.0 / static_cast<double>(count_hypermatchings(m.n, m.t, m.alpha()));
  const double scale = 0.5 * p_m / static_cast<double>(power_checked(r, m.n)) / static_cast<double>(power_checked(r, m.edge_count()));
  return scale * acc;
}

/// Closed form: u = 0 unless S lies in Delta(M), where
///   u = (1/2) p_M r^{-E} w^{sum_i s_i w_i}
/// with s_i the constant value of S on edge i.
inline std::complex<double> closed_form_u(const Hypermatching& m, const ZrString& w, const ZrString& s) {
  const int r = w.r;
  if (!delta_membership(s, m)) return {0.0, 0.0};
  long long phase = 0;
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    phase += static_cast<long long>(s.entries[static_cast<std::size_t>(m.edges[i].front())]) * w.entries[i];
  }
  const double p_m = 1.0 / static_cast<double>(count_hypermatchings(m.n, m.t, m.alpha()));
  const double mag = 0.5 * p_m / static_cast<double>(power_checked(r, m.edge_count()));
  return mag * root_of_unity_powers(r)[static_cast<std::size_t>(phase % r)];
}

/// Closed form as integer character counts in the same basis as
/// u_character_counts: r^n at index sum_i s_i w_i for S in Delta(M), the
/// zero vector otherwise.  For prime r, equality of u-values is equality of
/// these vectors up to adding a multiple of the all-ones vector.
inline std::vector<long long> closed_form_u_counts(const Hypermatching& m, const ZrString& w, const ZrString& s) {
  const int r = w.r;
  std::vector<long long> counts(static_cast<std::size_t>(r), 0);
  if (!delta_membership(s, m)) return counts;
  long long phase = 0;
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    phase += static_cast<long long>(s.entries[static_cast<std::size_t>(m.edges[i].front())]) * w.entries[i];
  }
  counts[static_cast<std::size_t>(phase % r)] = power_checked(r, m.n);
  return counts;
}

/// Canonical representative of a character-count vector modulo the all-ones
/// direction (valid basis reduction when r is prime): subtracts the last
/// coordinate from every coordinate.
inline std::vector<long long> canonical_character_counts(std::vector<long long> counts) {
  if (counts.empty()) return counts;
  const long long last = counts.back();
  for (auto& c : counts) c -= last;
  return counts;
}

/// Exact probability that a fixed pattern S lies in Delta(M) for a uniform
/// alpha-partial t-hypermatching M on [n].  `value_weights[j]` is the number
/// of edges k_j that must carry the j-th nonzero value class, so the class
/// occupies k_j * t fixed positions.  With k = sum_j k_j:
///   Pr = binom(E, k) / binom(n, k t) * k!/(k t)! * prod_j (k_j t)! / k_j!
/// (the k covering edges must land exactly on the pattern's support and
/// partition each class); zero if k exceeds the number of edges E or the
/// support exceeds n.
inline BigRational prob_delta(int n, int t, double alpha, const std::vector<long long>& value_weights) {
  const int E = matching_edge_target(n, t, alpha);
  auto factorial = [](long long k) {
    BigInt f = 1;
    for (long long i = 2; i <= k; ++i) f *= i;
    return f;
  };
  auto binom = [&](long long a, long long b) -> BigInt {
    if (b < 0 || b > a) return 0;
    return factorial(a) / (factorial(b) * factorial(a - b));
  };
  long long k = 0;
  for (long long kj : value_weights) {
    if (kj < 0) throw std::invalid_argument("prob_delta: negative weight");
    k += kj;
  }
  if (k * t > n || k > E) return BigRational(0);
  BigRational pr(binom(E, k), binom(n, k * t));
  pr *= BigRational(factorial(k), factorial(k * t));
  for (long long kj : value_weights) {
    if (kj > 0) pr *= BigRational(factorial(kj * t), factorial(kj));
  }
  return pr;
}

/// Bob's view of a message set A: the distribution of Mx over uniform x in A,
/// compared to uniform.  tvd uses the L1 convention sum_z |p(z) - q(z)|; the
/// best distinguishing advantage over 1/2 is tvd / 4.
struct MessageBias {
  double tvd = 0.0;
  double advantage = 0.0;
};

inline MessageBias message_set_bias(const std::vector<ZrString>& a, const Hypermatching& m) {
  if (a.empty()) throw std::invalid_argument("message_set_bias: empty message set");
  const int r = a.front().r;
  const long long targets = power_checked(r, m.edge_count(), 10000000);
  if (static_cast<long long>(a.size()) * targets > 100000000) {
    throw std::length_error("message_set_bias: |A| * r^E exceeds budget");
  }
  std::vector<long long> counts(static_cast<std::size_t>(targets), 0);
  for (const auto& x : a) {
    if (x.r != r || x.n() != m.n) throw std::invalid_argument("message_set_bias: inconsistent message set");
    ++counts[static_cast<std::size_t>(string_index(apply_matching(m, x)))];
  }
  // Exact: sum_z |count_z * r^E - |A|| / (|A| * r^E).
  BigInt num = 0;
  const BigInt asize = static_cast<long long>(a.size());
  for (long long z = 0; z < targets; ++z) {
    BigInt d = BigInt(counts[static_cast<std::size_t>(z)]) * targets - asize;
    if (d < 0) d = -d;
    num += d;
  }
  const BigRational tvd_exact(num, asize * targets);
  MessageBias out;
  out.tvd = static_cast<double>(tvd_exact);
  out.advantage = out.tvd / 4.0;
  return out;
}

/// Lifts a target-side pattern V in Z_r^E to the input side: (M^T V)_i is
/// V_e for i in edge e, 0 for unmatched i.  Satisfies (M^T V).x = V.(Mx).
inline ZrString matching_transpose(const Hypermatching& m, const ZrString& v) {
  if (v.n() != m.edge_count()) throw std::invalid_argument("matching_transpose: length mismatch");
  ZrString s = zero_string(v.r, m.n);
  for (std::size_t e = 0; e < m.edges.size(); ++e) {
    for (int vtx : m.edges[e]) s.entries[static_cast<std::size_t>(vtx)] = v.entries[e];
  }
  return s;
}

// ---------------------------------------------------------------------------
// JSON serialization: {r, n, t, alpha, x, edges, w, label}.
// ---------------------------------------------------------------------------

inline nlohmann::json hh_instance_to_json(const HHInstance& inst) {
  return nlohmann::json{{"r", inst.r},
                        {"n", inst.n},
                        {"t", inst.t},
                        {"alpha", inst.alpha},
                        {"x", inst.x.entries},
                        {"edges", inst.m.edges},
                        {"w", inst.w.entries},
                        {"label", inst.yes_label ? "yes" : "no"}};
}

inline HHInstance hh_instance_from_json(const nlohmann::json& j) {
  HHInstance inst;
  inst.r = j.at("r").get<int>();
  inst.n = j.at("n").get<int>();
  inst.t = j.at("t").get<int>();
  inst.alpha = j.at("alpha").get<double>();
  inst.x = make_zr_string(inst.r, j.at("x").get<std::vector<int>>());
  if (inst.x.n() != inst.n) throw std::invalid_argument("hh_instance_from_json: x has wrong length");
  inst.m = make_hypermatching(inst.n, inst.t, j.at("edges").get<std::vector<std::vector<int>>>());
  inst.w = make_zr_string(inst.r, j.at("w").get<std::vector<int>>());
  if (inst.w.n() != inst.m.edge_count()) throw std::invalid_argument("hh_instance_from_json: w has wrong length");
  const std::string label = j.at("label").get<std::string>();
  if (label != "yes" && label != "no") throw std::invalid_argument("hh_instance_from_json: label must be yes/no");
  inst.yes_label = (label == "yes");
  return inst;
}

}  // namespace zrlab
