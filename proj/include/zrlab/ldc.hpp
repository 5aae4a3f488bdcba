// Locally decodable codes over Z_r: encoders, query-based decoders, noise
// models, smoothness transforms, combinatorial "good set" certificates, and
// the rank-one spectral embedding that turns decodability into Fourier
// weight, yielding a length lower bound.
//
// Decoders are explicit distributions over query sets per message index,
// with per-set output tables, so every success probability and per-position
// query probability can be computed exactly at small sizes.
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zrlab/inequalities.hpp"
#include "zrlab/matfourier.hpp"
#include "zrlab/zr_core.hpp"

namespace zrlab {

// ---------------------------------------------------------------------------
// Codes.
// ---------------------------------------------------------------------------

/// A code Z_r^n -> Z_r^N, either computed (hadamard) or tabulated.
struct Code {
  int r = 2;
  int n = 0;
  long long N = 0;
  std::string type;                // "hadamard" | "table"
  std::vector<ZrString> table;     // for "table": codeword per message index

  ZrString encode(const ZrString& x) const;
};

/// Codeword of x under the mod-r pairing code: one entry <x, y> mod r per
/// binary pattern y in {0,1}^n (y enumerated as bitmasks 0..2^n - 1).
inline ZrString hadamard_encode(const ZrString& x) {
  const int n = x.n();
  if (n < 1 || n > 24) throw std::invalid_argument("hadamard_encode: n must be in [1, 24]");
  const long long big_n = 1LL << n;
  ZrString c = zero_string(x.r, static_cast<int>(big_n));
  // c[y | bit_i] = c[y] + x_i: fill by dynamic programming over bits.
  for (long long y = 1; y < big_n; ++y) {
    const int bit = std::countr_zero(static_cast<unsigned long long>(y));
    const long long prev = y & (y - 1);  // y with its lowest set bit cleared
    c.entries[static_cast<std::size_t>(y)] =
        (c.entries[static_cast<std::size_t>(prev)] + x.entries[static_cast<std::size_t>(bit)]) % x.r;
  }
  return c;
}

inline ZrString Code::encode(const ZrString& x) const {
  if (x.r != r || x.n() != n) throw std::invalid_argument("Code::encode: message shape mismatch");
  if (type == "hadamard") return hadamard_encode(x);
  if (type == "table") return table[static_cast<std::size_t>(string_index(x))];
  throw std::logic_error("Code::encode: unknown code type");
}

inline Code hadamard_code(int r, int n) {
  if (r < 2) throw std::invalid_argument("hadamard_code: r must be >= 2");
  if (n < 1 || n > 24) throw std::invalid_argument("hadamard_code: n must be in [1, 24]");
  return Code{r, n, 1LL << n, "hadamard", {}};
}

inline Code table_code(int r, int n, std::vector<ZrString> table) {
  const long long points = power_checked(r, n, 10000000);
  if (static_cast<long long>(table.size()) != points) throw std::invalid_argument("table_code: need r^n codewords");
  const long long N = table.front().n();
  for (const auto& cw : table) {
    if (cw.r != r || cw.n() != N) throw std::invalid_argument("table_code: inconsistent codeword shapes");
  }
  return Code{r, n, N, "table", std::move(table)};
}

// ---------------------------------------------------------------------------
// Decoders.
// ---------------------------------------------------------------------------

/// One weighted query option: read `positions` (those listed in `masked`,
/// as indices into `positions`, are NOT read - their values are replaced by
/// fresh uniform symbols), then output f_table at the mixed-radix index of
/// the value tuple (digit j = value at positions[j]), or a uniform symbol if
/// `uniform_guess`.
struct QueryOption {
  std::vector<long long> positions;
  double prob = 0.0;
  std::vector<int> f_table;
  bool uniform_guess = false;
  std::vector<int> masked;
};

/// A non-adaptive decoder: for each message index, a distribution over
/// query options with at most `q` positions each.
struct Decoder {
  int r = 2;
  long long N = 0;
  int q = 0;
  std::vector<std::vector<QueryOption>> per_index;
};

namespace detail {

inline void check_decoder(const Decoder& dec) {
  for (const auto& options : dec.per_index) {
    double total = 0.0;
    for (const auto& opt : options) {
      if (static_cast<int>(opt.positions.size()) > dec.q) throw std::invalid_argument("decoder: query set larger than q");
      for (long long p : opt.positions) {
        if (p < 0 || p >= dec.N) throw std::invalid_argument("decoder: query position out of range");
      }
      for (int mi : opt.masked) {
        if (mi < 0 || mi >= static_cast<int>(opt.positions.size())) {
          throw std::invalid_argument("decoder: masked index out of range");
        }
      }
      if (!opt.uniform_guess) {
        const long long want = power_checked(dec.r, static_cast<int>(opt.positions.size()));
        if (static_cast<long long>(opt.f_table.size()) != want) {
          throw std::invalid_argument("decoder: f_table size must be r^{|Q|}");
        }
        for (int v : opt.f_table) {
          if (v < 0 || v >= dec.r) throw std::invalid_argument("decoder: f_table value out of range");
        }
      }
      if (!(opt.prob >= 0.0)) throw std::invalid_argument("decoder: negative option probability");
      total += opt.prob;
    }
    if (std::fabs(total - 1.0) > 1e-9) throw std::invalid_argument("decoder: option probabilities must sum to 1");
  }
}

}  // namespace detail

/// The 2-query pair decoder for the mod-r pairing code: sample a pair
/// (y, y | bit_i) with y_i = 0 (each pair with probability 2/N, covering
/// both orientations of the classic "pick y uniformly" rule) and output
/// (value at bit-set position) - (value at bit-clear position) mod r.
inline Decoder hadamard_decoder(int r, int n) {
  const Code code = hadamard_code(r, n);
  Decoder dec;
  dec.r = r;
  dec.N = code.N;
  dec.q = 2;
  dec.per_index.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const long long bit = 1LL << i;
    auto& options = dec.per_index[static_cast<std::size_t>(i)];
    for (long long y = 0; y < code.N; ++y) {
      if (y & bit) continue;
      QueryOption opt;
      opt.positions = {y, y | bit};
      opt.prob = 2.0 / static_cast<double>(code.N);
      opt.f_table.resize(static_cast<std::size_t>(r) * r);
      for (int v0 = 0; v0 < r; ++v0) {
        for (int v1 = 0; v1 < r; ++v1) {
          opt.f_table[static_cast<std::size_t>(v0 + r * v1)] = ((v1 - v0) % r + r) % r;
        }
      }
      options.push_back(std::move(opt));
    }
  }
  detail::check_decoder(dec);
  return dec;
}

/// Runs one decoding: samples an option, reads the (unmasked) positions,
/// substitutes uniform symbols for masked ones, applies the output rule.
inline int run_decoder(const Decoder& dec, int i, const ZrString& word, Rng& rng) {
  if (word.r != dec.r || word.n() != dec.N) throw std::invalid_argument("run_decoder: word shape mismatch");
  if (i < 0 || i >= static_cast<int>(dec.per_index.size())) throw std::invalid_argument("run_decoder: index out of range");
  const auto& options = dec.per_index[static_cast<std::size_t>(i)];
  const double draw = rng.uniform01();
  double acc = 0.0;
  const QueryOption* chosen = &options.back();
  for (const auto& opt : options) {
    acc += opt.prob;
    if (draw < acc) {
      chosen = &opt;
      break;
    }
  }
  if (chosen->uniform_guess) return rng.below_int(dec.r);
  long long idx = 0, base = 1;
  for (std::size_t jpos = 0; jpos < chosen->positions.size(); ++jpos) {
    const bool is_masked = std::find(chosen->masked.begin(), chosen->masked.end(), static_cast<int>(jpos)) != chosen->masked.end();
    const int v = is_masked ? rng.below_int(dec.r) : word.entries[static_cast<std::size_t>(chosen->positions[jpos])];
    idx += base * v;
    base *= dec.r;
  }
  return chosen->f_table[static_cast<std::size_t>(idx)];
}

/// Direct single-sample form of the pair rule above, without building the
/// option list: picks y uniformly, queries y and y xor bit_i.
inline int hadamard_decode(const ZrString& word, int i, Rng& rng) {
  const long long N = word.n();
  if (N < 2 || (N & (N - 1)) != 0) throw std::invalid_argument("hadamard_decode: word length must be a power of two");
  const long long bit = 1LL << i;
  if (bit >= N) throw std::invalid_argument("hadamard_decode: index out of range");
  const long long y = static_cast<long long>(rng.below(static_cast<std::uint64_t>(N)));
  const int v_set = word.entries[static_cast<std::size_t>(y | bit)];
  const int v_clear = word.entries[static_cast<std::size_t>(y & ~bit)];
  return ((v_set - v_clear) % word.r + word.r) % word.r;
}

// ---------------------------------------------------------------------------
// Noise.
// ---------------------------------------------------------------------------

/// Corrupts exactly floor(delta * N) distinct positions chosen uniformly,
/// each replaced by a uniform symbol different from the old one.
inline ZrString corrupt_random(const ZrString& word, double delta, std::uint64_t seed) {
  if (delta < 0.0 || delta > 1.0) throw std::invalid_argument("corrupt_random: delta outside [0, 1]");
  const long long N = word.n();
  const long long budget = static_cast<long long>(std::floor(delta * static_cast<double>(N)));
  Rng rng(seed);
  std::vector<long long> order(static_cast<std::size_t>(N));
  std::iota(order.begin(), order.end(), 0LL);
  ZrString out = word;
  // Partial Fisher-Yates: the first `budget` entries of the shuffled order.
  for (long long i = 0; i < budget; ++i) {
    const long long j = i + static_cast<long long>(rng.below(static_cast<std::uint64_t>(N - i)));
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
    const long long pos = order[static_cast<std::size_t>(i)];
    const int old = out.entries[static_cast<std::size_t>(pos)];
    const int shift = 1 + rng.below_int(word.r - 1);
    out.entries[static_cast<std::size_t>(pos)] = (old + shift) % word.r;
  }
  return out;
}

/// Adversarial corruption: the callback proposes (position, new value)
/// changes given the clean word; changes are validated (distinct positions,
/// at most floor(delta * N) of them) and applied.
using Adversary = std::function<std::vector<std::pair<long long, int>>(const ZrString& clean)>;

inline ZrString corrupt_adversarial(const ZrString& word, double delta, const Adversary& adversary) {
  if (delta < 0.0 || delta > 1.0) throw std::invalid_argument("corrupt_adversarial: delta outside [0, 1]");
  const long long N = word.n();
  const long long budget = static_cast<long long>(std::floor(delta * static_cast<double>(N)));
  const auto changes = adversary(word);
  if (static_cast<long long>(changes.size()) > budget) {
    throw std::invalid_argument("corrupt_adversarial: adversary exceeds the corruption budget");
  }
  std::vector<char> seen(static_cast<std::size_t>(N), 0);
  ZrString out = word;
  for (const auto& [pos, val] : changes) {
    if (pos < 0 || pos >= N) throw std::invalid_argument("corrupt_adversarial: position out of range");
    if (val < 0 || val >= word.r) throw std::invalid_argument("corrupt_adversarial: value out of range");
    if (seen[static_cast<std::size_t>(pos)]) throw std::invalid_argument("corrupt_adversarial: duplicate position");
    seen[static_cast<std::size_t>(pos)] = 1;
    out.entries[static_cast<std::size_t>(pos)] = val;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Recovery statistics.
// ---------------------------------------------------------------------------

using NoiseModel = std::function<ZrString(const ZrString& clean, std::uint64_t seed)>;

struct RecoveryReport {
  std::vector<double> success;  // per message index
  std::vector<double> stderr_;  // binomial standard error per index
  double min_success = 0.0;
  double min_advantage = 0.0;   // min_i success_i - 1/r
};

/// Monte Carlo recovery rate per index: uniform message, encode, corrupt via
/// the noise model, decode; compares against the true symbol.
inline RecoveryReport empirical_recovery(const Code& code, const Decoder& dec, const NoiseModel& noise, long trials,
                                         std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("empirical_recovery: need at least one trial");
  RecoveryReport rep;
  rep.success.resize(static_cast<std::size_t>(code.n), 0.0);
  rep.stderr_.resize(static_cast<std::size_t>(code.n), 0.0);
  rep.min_success = 1.0;
  for (int i = 0; i < code.n; ++i) {
    long hits = 0;
    for (long trial = 0; trial < trials; ++trial) {
      Rng rng(split_seed(seed, static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(trials) + static_cast<std::uint64_t>(trial)));
      ZrString x = zero_string(code.r, code.n);
      for (auto& e : x.entries) e = rng.below_int(code.r);
      const ZrString noisy = noise(code.encode(x), rng.next_u64());
      if (run_decoder(dec, i, noisy, rng) == x.entries[static_cast<std::size_t>(i)]) ++hits;
    }
    const double p = static_cast<double>(hits) / static_cast<double>(trials);
    rep.success[static_cast<std::size_t>(i)] = p;
    rep.stderr_[static_cast<std::size_t>(i)] = std::sqrt(std::max(p * (1.0 - p), 1.0 / trials) / trials);
    rep.min_success = std::min(rep.min_success, p);
  }
  rep.min_advantage = rep.min_success - 1.0 / code.r;
  return rep;
}

/// Exact success probability of the decoder on the *clean* codeword of x at
/// index i (averaging over option choice and masked-symbol randomness).
inline double exact_success_probability(const Code& code, const Decoder& dec, int i, const ZrString& x) {
  const ZrString cw = code.encode(x);
  const int target = x.entries[static_cast<std::size_t>(i)];
  double total = 0.0;
  for (const auto& opt : dec.per_index[static_cast<std::size_t>(i)]) {
    if (opt.prob == 0.0) continue;
    if (opt.uniform_guess) {
      total += opt.prob / dec.r;
      continue;
    }
    const int mcount = static_cast<int>(opt.masked.size());
    const long long mask_space = power_checked(dec.r, mcount);
    long hits = 0;
    for (long long mi = 0; mi < mask_space; ++mi) {
      long long idx = 0, base = 1, mrest = mi;
      for (std::size_t jpos = 0; jpos < opt.positions.size(); ++jpos) {
        int v;
        if (std::find(opt.masked.begin(), opt.masked.end(), static_cast<int>(jpos)) != opt.masked.end()) {
          v = static_cast<int>(mrest % dec.r);
          mrest /= dec.r;
        } else {
          v = cw.entries[static_cast<std::size_t>(opt.positions[jpos])];
        }
        idx += base * v;
        base *= dec.r;
      }
      if (opt.f_table[static_cast<std::size_t>(idx)] == target) ++hits;
    }
    total += opt.prob * static_cast<double>(hits) / static_cast<double>(mask_space);
  }
  return total;
}

/// Worst-case-over-messages advantage of the decoder on clean codewords:
/// min over (x, i) of Pr[correct] - 1/r.  Exhaustive; guarded at r^n <= 1e6.
inline double exact_clean_advantage(const Code& code, const Decoder& dec) {
  const long long points = power_checked(code.r, code.n, 1000000);
  double worst = 1.0;
  for (int i = 0; i < code.n; ++i) {
    for (long long xi = 0; xi < points; ++xi) {
      worst = std::min(worst, exact_success_probability(code, dec, i, index_string(code.r, code.n, xi)));
    }
  }
  return worst - 1.0 / code.r;
}

// ---------------------------------------------------------------------------
// Smoothness.
// ---------------------------------------------------------------------------

/// Per-position query probability of the decoder for index i (masked
/// positions are not read, hence not counted).
inline std::vector<double> query_probabilities(const Decoder& dec, int i) {
  std::vector<double> prob(static_cast<std::size_t>(dec.N), 0.0);
  for (const auto& opt : dec.per_index[static_cast<std::size_t>(i)]) {
    for (std::size_t jpos = 0; jpos < opt.positions.size(); ++jpos) {
      if (std::find(opt.masked.begin(), opt.masked.end(), static_cast<int>(jpos)) != opt.masked.end()) continue;
      prob[static_cast<std::size_t>(opt.positions[jpos])] += opt.prob;
    }
  }
  return prob;
}

struct SmoothnessReport {
  int q = 0;
  double delta = 0.0;
  std::vector<double> max_query_prob;  // per index, after the transform
  double c_claimed = 0.0;              // q / delta: the certified constant
  double c_measured = 0.0;             // N * max_{i,j} Pr[query j]
  double advantage = 0.0;              // exact clean advantage of the transformed decoder
  bool smooth_ok = false;              // all probabilities <= c_claimed / N
  double converse_delta = 0.0;         // decoding radius recovered from smoothness
  double converse_advantage = 0.0;     // advantage - c_measured * converse_delta
};

/// Smoothing transform: positions queried with probability above q/(delta N)
/// are blacklisted per index and masked (replaced by uniform symbols).  The
/// result is (q, q/delta, eps)-smooth whenever the input decoder tolerated
/// delta-fraction corruption with advantage eps; the converse direction
/// (a smooth decoder is a local decoder with advantage eps - c * delta) is
/// recorded with the measured constant.
inline std::pair<Decoder, SmoothnessReport> smooth_transform(const Code& code, const Decoder& dec, double delta) {
  if (!(delta > 0.0 && delta <= 1.0)) throw std::invalid_argument("smooth_transform: delta must be in (0, 1]");
  detail::check_decoder(dec);
  Decoder out = dec;
  const double threshold = static_cast<double>(dec.q) / (delta * static_cast<double>(dec.N));
  for (std::size_t i = 0; i < dec.per_index.size(); ++i) {
    const auto prob = query_probabilities(dec, static_cast<int>(i));
    for (auto& opt : out.per_index[i]) {
      for (std::size_t jpos = 0; jpos < opt.positions.size(); ++jpos) {
        if (prob[static_cast<std::size_t>(opt.positions[jpos])] > threshold + 1e-15 &&
            std::find(opt.masked.begin(), opt.masked.end(), static_cast<int>(jpos)) == opt.masked.end()) {
          opt.masked.push_back(static_cast<int>(jpos));
        }
      }
    }
  }
  SmoothnessReport rep;
  rep.q = dec.q;
  rep.delta = delta;
  rep.c_claimed = static_cast<double>(dec.q) / delta;
  rep.max_query_prob.resize(out.per_index.size(), 0.0);
  double max_prob = 0.0;
  for (std::size_t i = 0; i < out.per_index.size(); ++i) {
    const auto prob = query_probabilities(out, static_cast<int>(i));
    double mx = 0.0;
    for (double p : prob) mx = std::max(mx, p);
    rep.max_query_prob[i] = mx;
    max_prob = std::max(max_prob, mx);
  }
  rep.c_measured = max_prob * static_cast<double>(dec.N);
  rep.smooth_ok = max_prob <= rep.c_claimed / static_cast<double>(dec.N) + 1e-12;
  rep.advantage = exact_clean_advantage(code, out);
  rep.converse_delta = delta;
  rep.converse_advantage = rep.advantage - rep.c_measured * delta;
  return {std::move(out), rep};
}

// ---------------------------------------------------------------------------
// Good query sets and disjoint matchings.
// ---------------------------------------------------------------------------

struct GoodSet {
  std::vector<long long> positions;
  double weight = 0.0;             // total option probability on this set
  double point_certificate = 0.0;  // sum_{k=1}^{r-1} E_x[w^{k (f_Q - x_i)}]
  double fourier_certificate = 0.0;  // sum_{k>=1} sum_S |E_x[w^{S.C(x)_Q - k x_i}]|
  bool good = false;
};

struct GoodSetReport {
  double eps = 0.0;
  double threshold = 0.0;  // r * eps / 2
  std::vector<GoodSet> sets;
  std::vector<std::size_t> matching;  // indices of the greedy disjoint family of good sets
  double matching_guarantee = 0.0;    // eps * N / (2 c q)
};

/// Exhaustively certifies good query sets for index i.  A set is good when
/// the decoder's success conditioned on it is at least 1/r + eps/2, i.e.
/// its point certificate (= r Pr[correct | Q] - 1) is at least r eps / 2.
/// The report includes the Fourier-side certificate sum (always an upper
/// bound on the point certificate) and a maximal disjoint family of good
/// sets, whose size the smooth-decoding argument lower-bounds by
/// eps N / (2 c q).
inline GoodSetReport good_set_matching(const Code& code, const Decoder& dec, int i, double eps, double c) {
  const long long points = power_checked(code.r, code.n, 100000);
  const auto omega = root_of_unity_powers(code.r);
  GoodSetReport rep;
  rep.eps = eps;
  rep.threshold = code.r * eps / 2.0;
  rep.matching_guarantee = eps * static_cast<double>(dec.N) / (2.0 * c * dec.q);
  // Group options by query set.
  std::map<std::vector<long long>, std::vector<const QueryOption*>> groups;
  for (const auto& opt : dec.per_index[static_cast<std::size_t>(i)]) {
    if (opt.prob == 0.0) continue;
    std::vector<long long> key = opt.positions;
    std::sort(key.begin(), key.end());
    groups[key].push_back(&opt);
  }
  // Precompute codewords.
  std::vector<ZrString> codewords;
  codewords.reserve(static_cast<std::size_t>(points));
  for (long long xi = 0; xi < points; ++xi) codewords.push_back(code.encode(index_string(code.r, code.n, xi)));
  for (const auto& [positions, opts] : groups) {
    GoodSet gs;
    gs.positions = positions;
    // Point certificate: probability-weighted over the group's options,
    // averaging over masked-symbol randomness inside each option.
    double weight = 0.0;
    std::complex<double> point(0.0, 0.0);
    for (const QueryOption* opt : opts) {
      weight += opt->prob;
      for (long long xi = 0; xi < points; ++xi) {
        const ZrString& cw = codewords[static_cast<std::size_t>(xi)];
        const int target = index_string(code.r, code.n, xi).entries[static_cast<std::size_t>(i)];
        if (opt->uniform_guess) continue;  // E[w^{k f}] = 0 for uniform f
        const int mcount = static_cast<int>(opt->masked.size());
        const long long mask_space = power_checked(code.r, mcount);
        for (long long mi = 0; mi < mask_space; ++mi) {
          long long idx = 0, base = 1, mrest = mi;
          for (std::size_t jpos = 0; jpos < opt->positions.size(); ++jpos) {
            int v;
            if (std::find(opt->masked.begin(), opt->masked.end(), static_cast<int>(jpos)) != opt->masked.end()) {
              v = static_cast<int>(mrest % code.r);
              mrest /= code.r;
            } else {
              v = cw.entries[static_cast<std::size_t>(opt->positions[jpos])];
            }
            idx += base * v;
            base *= code.r;
          }
          const int f = opt->f_table[static_cast<std::size_t>(idx)];
          for (int k = 1; k < code.r; ++k) {
            const int phase = ((k * (f - target)) % code.r + code.r) % code.r;
            point += (opt->prob / (static_cast<double>(points) * mask_space)) * omega[static_cast<std::size_t>(phase)];
          }
        }
      }
    }
    gs.weight = weight;
    gs.point_certificate = (weight > 0.0 ? point.real() / weight : 0.0);
    // Fourier certificate: sum over k >= 1 and all patterns S on Q of
    // |E_x[w^{S.C(x)_Q - k x_i}]| (independent of the decoder's f).
    const long long patterns = power_checked(code.r, static_cast<int>(positions.size()));
    double fourier = 0.0;
    for (int k = 1; k < code.r; ++k) {
      for (long long si = 0; si < patterns; ++si) {
        const ZrString s = index_string(code.r, static_cast<int>(positions.size()), static_cast<long long>(si));
        std::complex<double> acc(0.0, 0.0);
        for (long long xi = 0; xi < points; ++xi) {
          const ZrString& cw = codewords[static_cast<std::size_t>(xi)];
          long long phase = 0;
          for (std::size_t jpos = 0; jpos < positions.size(); ++jpos) {
            phase += static_cast<long long>(s.entries[jpos]) * cw.entries[static_cast<std::size_t>(positions[jpos])];
          }
          phase -= static_cast<long long>(k) * index_string(code.r, code.n, xi).entries[static_cast<std::size_t>(i)];
          acc += omega[static_cast<std::size_t>(((phase % code.r) + code.r) % code.r)];
        }
        fourier += std::abs(acc) / static_cast<double>(points);
      }
    }
    gs.fourier_certificate = fourier;
    gs.good = gs.point_certificate >= rep.threshold - 1e-12;
    rep.sets.push_back(std::move(gs));
  }
  // Greedy maximal disjoint family over the good sets (map order =
  // lexicographic by positions, so the result is deterministic).
  std::vector<char> used(static_cast<std::size_t>(dec.N), 0);
  for (std::size_t gi = 0; gi < rep.sets.size(); ++gi) {
    if (!rep.sets[gi].good) continue;
    bool disjoint = true;
    for (long long p : rep.sets[gi].positions) {
      if (used[static_cast<std::size_t>(p)]) {
        disjoint = false;
        break;
      }
    }
    if (!disjoint) continue;
    for (long long p : rep.sets[gi].positions) used[static_cast<std::size_t>(p)] = 1;
    rep.matching.push_back(gi);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Rank-one spectral embedding.
// ---------------------------------------------------------------------------

/// Embedding dimension R = r^2 N, guarded at 4096.
inline long long embedding_dim(const Code& code) {
  const long long R = static_cast<long long>(code.r) * code.r * code.N;
  if (R > 4096) throw std::length_error("embedding_dim: r^2 N exceeds 4096");
  return R;
}

/// The rank-one matrix F(x) = v_x v_x^T (plain transpose, no conjugation)
/// with v_x[N (r j + m) + l] = w^{j C(x)_l} for j, m in Z_r, l in [N].
/// Its only nonzero singular value is R, so ||F(x)||_p^p = R^{p-1} in
/// normalized Schatten norms.
inline ComplexMatrix rank1_embedding(const Code& code, const ZrString& x) {
  const long long R = embedding_dim(code);
  const ZrString cw = code.encode(x);
  const auto omega = root_of_unity_powers(code.r);
  Eigen::VectorXcd v(R);
  for (int j = 0; j < code.r; ++j) {
    for (int m = 0; m < code.r; ++m) {
      for (long long l = 0; l < code.N; ++l) {
        const int phase = (j * cw.entries[static_cast<std::size_t>(l)]) % code.r;
        v(code.N * (static_cast<long long>(code.r) * j + m) + l) = omega[static_cast<std::size_t>(phase)];
      }
    }
  }
  return v * v.transpose();
}

/// Fourier slice at weight-one pattern k e_i:
///   Fhat_i,k = r^{-n} sum_x F(x) w^{-k x_i}.
inline ComplexMatrix embedding_fourier_slice(const Code& code, int i, int k) {
  const long long R = embedding_dim(code);
  const long long points = power_checked(code.r, code.n, 100000);
  const auto omega = root_of_unity_powers(code.r);
  ComplexMatrix acc = ComplexMatrix::Zero(R, R);
  for (long long xi = 0; xi < points; ++xi) {
    const ZrString x = index_string(code.r, code.n, xi);
    const int phase = (k * x.entries[static_cast<std::size_t>(i)]) % code.r;
    acc += std::conj(omega[static_cast<std::size_t>(phase)]) * rank1_embedding(code, x);
  }
  return acc / static_cast<double>(points);
}

/// Row permutation aligning a disjoint family of 1- or 2-element query sets
/// with the diagonal: for each pair (a, b) (a singleton passes a = b) and
/// all (S1, S2) in Z_r^2, row N (r S1 + S2) + a is exchanged with row
/// N (r S2 + S1) + b.  Returns perm with (P M)_{row} = M_{perm[row]}.
inline std::vector<long long> embedding_permutation(int r, long long N,
                                                    const std::vector<std::pair<long long, long long>>& pairs) {
  const long long R = static_cast<long long>(r) * r * N;
  std::vector<long long> perm(static_cast<std::size_t>(R));
  for (long long i = 0; i < R; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::vector<char> touched(static_cast<std::size_t>(N), 0);
  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= N || b < 0 || b >= N) throw std::invalid_argument("embedding_permutation: position out of range");
    if (touched[static_cast<std::size_t>(a)] || (a != b && touched[static_cast<std::size_t>(b)])) {
      throw std::invalid_argument("embedding_permutation: pairs must be disjoint");
    }
    touched[static_cast<std::size_t>(a)] = 1;
    touched[static_cast<std::size_t>(b)] = 1;
    for (int s1 = 0; s1 < r; ++s1) {
      for (int s2 = 0; s2 < r; ++s2) {
        const long long row_a = N * (static_cast<long long>(r) * s1 + s2) + a;
        const long long row_b = N * (static_cast<long long>(r) * s2 + s1) + b;
        perm[static_cast<std::size_t>(row_a)] = row_b;
        perm[static_cast<std::size_t>(row_b)] = row_a;
      }
    }
  }
  return perm;
}

/// Applies the row permutation: out_{i,:} = M_{perm[i],:}.
inline ComplexMatrix apply_row_permutation(const std::vector<long long>& perm, const ComplexMatrix& M) {
  if (static_cast<Eigen::Index>(perm.size()) != M.rows()) throw std::invalid_argument("apply_row_permutation: size mismatch");
  ComplexMatrix out(M.rows(), M.cols());
  for (Eigen::Index i = 0; i < M.rows(); ++i) out.row(i) = M.row(static_cast<Eigen::Index>(perm[static_cast<std::size_t>(i)]));
  return out;
}

/// Diagonal-restriction bound for unitarily-invariant (Schatten) norms:
/// ||diag(A)||_p <= ||A||_p.
inline InequalityReport check_diagonal_dominance(const ComplexMatrix& A, double p, bool normalized = false,
                                                 double tol = 1e-9) {
  if (A.rows() != A.cols()) throw std::invalid_argument("check_diagonal_dominance: matrix must be square");
  ComplexMatrix D = ComplexMatrix::Zero(A.rows(), A.cols());
  D.diagonal() = A.diagonal();
  InequalityReport rep;
  rep.check = "schatten/diagonal-restriction";
  rep.lhs = schatten_norm(D, p, normalized);
  rep.rhs = schatten_norm(A, p, normalized);
  rep.slack = rep.rhs - rep.lhs;
  rep.holds = rep.slack >= -tol;
  rep.params = {{"p", p}, {"m", static_cast<double>(A.rows())}, {"normalized", normalized ? 1.0 : 0.0}};
  return rep;
}

// ---------------------------------------------------------------------------
// Length lower bound.
// ---------------------------------------------------------------------------

/// Smallest code length N consistent with the spectral argument for a
/// 2-query decoder over Z_r with decoding radius delta and advantage eps:
/// finds the least real R >= 2 satisfying
///   (n / log2 R) r^{-4} (delta eps / 4)^{2/p} (eps / 2)^2 <= 4^{log2 R / (1 + log2 R)}
/// at p = 1 + 1/log2 R, and returns max(1, R / r^2).  Monotone
/// nondecreasing in n, nonincreasing in r; 1 when the bound binds nowhere.
inline double min_length_bound(int n, int r, double delta, double eps) {
  if (n < 1 || r < 2) throw std::invalid_argument("min_length_bound: need n >= 1, r >= 2");
  if (!(delta > 0.0 && delta <= 1.0) || !(eps > 0.0 && eps <= 1.0)) {
    throw std::invalid_argument("min_length_bound: delta and eps must be in (0, 1]");
  }
  // Feasibility at log2 R = L (increasing in L): compare in log2 domain.
  const auto feasible = [&](double L) {
    const double two_over_p = 2.0 * L / (L + 1.0);
    const double lhs = std::log2(static_cast<double>(n)) - std::log2(L) - 4.0 * std::log2(static_cast<double>(r)) +
                       two_over_p * std::log2(delta * eps / 4.0) + 2.0 * std::log2(eps / 2.0);
    const double rhs = 2.0 * two_over_p;  // log2(4^{L/(L+1)})
    return lhs <= rhs;
  };
  double lo = 1.0, hi = 1.0;
  if (feasible(lo)) return 1.0;  // vacuous already at R = 2
  while (!feasible(hi)) {
    hi *= 2.0;
    if (hi > 1e6) throw std::runtime_error("min_length_bound: no feasible length found");
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? hi : lo) = mid;
  }
  const double R = std::pow(2.0, hi);
  return std::max(1.0, R / (static_cast<double>(r) * r));
}

// ---------------------------------------------------------------------------
// Serialization.
// ---------------------------------------------------------------------------

inline nlohmann::json code_to_json(const Code& code) {
  nlohmann::json j{{"r", code.r}, {"n", code.n}, {"N", code.N}, {"type", code.type}};
  if (code.type == "table") {
    nlohmann::json table = nlohmann::json::array();
    for (const auto& cw : code.table) table.push_back(cw.entries);
    j["table"] = std::move(table);
  }
  return j;
}

inline Code code_from_json(const nlohmann::json& j) {
  const int r = j.at("r").get<int>();
  const int n = j.at("n").get<int>();
  const std::string type = j.at("type").get<std::string>();
  if (type == "hadamard") {
    Code code = hadamard_code(r, n);
    if (j.contains("N") && j.at("N").get<long long>() != code.N) {
      throw std::invalid_argument("code_from_json: inconsistent N");
    }
    return code;
  }
  if (type == "table") {
    std::vector<ZrString> table;
    for (const auto& cw : j.at("table")) table.push_back(make_zr_string(r, cw.get<std::vector<int>>()));
    return table_code(r, n, std::move(table));
  }
  throw std::invalid_argument("code_from_json: unknown type");
}

inline nlohmann::json decoder_to_json(const Decoder& dec) {
  nlohmann::json queries = nlohmann::json::array();
  for (std::size_t i = 0; i < dec.per_index.size(); ++i) {
    nlohmann::json sets = nlohmann::json::array();
    for (const auto& opt : dec.per_index[i]) {
      nlohmann::json s{{"Q", opt.positions}, {"p", opt.prob}};
      if (opt.uniform_guess) {
        s["uniform"] = true;
      } else {
        s["f_table"] = opt.f_table;
      }
      if (!opt.masked.empty()) s["masked"] = opt.masked;
      sets.push_back(std::move(s));
    }
    queries.push_back(nlohmann::json{{"i", i}, {"sets", std::move(sets)}});
  }
  return nlohmann::json{{"r", dec.r}, {"N", dec.N}, {"q", dec.q}, {"queries", std::move(queries)}};
}

inline Decoder decoder_from_json(const nlohmann::json& j) {
  Decoder dec;
  dec.r = j.at("r").get<int>();
  dec.N = j.at("N").get<long long>();
  dec.q = j.at("q").get<int>();
  std::size_t max_index = 0;
  for (const auto& entry : j.at("queries")) max_index = std::max(max_index, entry.at("i").get<std::size_t>() + 1);
  dec.per_index.resize(max_index);
  for (const auto& entry : j.at("queries")) {
    auto& options = dec.per_index[entry.at("i").get<std::size_t>()];
    for (const auto& s : entry.at("sets")) {
      QueryOption opt;
      opt.positions = s.at("Q").get<std::vector<long long>>();
      opt.prob = s.at("p").get<double>();
      if (s.contains("uniform") && s.at("uniform").get<bool>()) {
        opt.uniform_guess = true;
      } else {
        opt.f_table = s.at("f_table").get<std::vector<int>>();
      }
      if (s.contains("masked")) opt.masked = s.at("masked").get<std::vector<int>>();
      options.push_back(std::move(opt));
    }
  }
  detail::check_decoder(dec);
  return dec;
}

}  // namespace zrlab
