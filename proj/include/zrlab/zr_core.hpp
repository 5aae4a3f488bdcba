// Strings over Z_r and partial t-hypermatchings on [n]: the combinatorial
// ground layer shared by the Fourier, communication, streaming and coding
// modules.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zrlab/rng.hpp"

namespace zrlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// A string x in Z_r^n.  Entries are stored as ints in [0, r).
struct ZrString {
  int r = 2;
  std::vector<int> entries;

  int n() const { return static_cast<int>(entries.size()); }

  friend bool operator==(const ZrString&, const ZrString&) = default;
};

/// Validating constructor for ZrString; throws on out-of-range entries.
inline ZrString make_zr_string(int r, std::vector<int> entries) {
  if (r < 2) throw std::invalid_argument("make_zr_string: alphabet size r must be >= 2");
  for (int e : entries) {
    if (e < 0 || e >= r) throw std::invalid_argument("make_zr_string: entry out of [0, r)");
  }
  return ZrString{r, std::move(entries)};
}

/// All-zero string in Z_r^n.
inline ZrString zero_string(int r, int n) { return ZrString{r, std::vector<int>(static_cast<std::size_t>(n), 0)}; }

/// Number of nonzero entries of x.
inline int hamming_weight(const ZrString& x) {
  return static_cast<int>(std::count_if(x.entries.begin(), x.entries.end(), [](int e) { return e != 0; }));
}

/// Inner product sum_i s_i * x_i mod r.  Lengths and alphabets must agree.
inline int zr_dot(const ZrString& s, const ZrString& x) {
  if (s.r != x.r) throw std::invalid_argument("zr_dot: alphabet mismatch");
  if (s.entries.size() != x.entries.size()) throw std::invalid_argument("zr_dot: length mismatch");
  long long acc = 0;
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    acc += static_cast<long long>(s.entries[i]) * x.entries[i];
  }
  return static_cast<int>(acc % s.r);
}

// ---------------------------------------------------------------------------
// Mixed-radix indexing of Z_r^n (digit 0 is the least significant).
// ---------------------------------------------------------------------------

/// r^n as long long; throws if it overflows the given budget.
inline long long power_checked(int r, int n, long long budget = (1LL << 62)) {
  long long v = 1;
  for (int i = 0; i < n; ++i) {
    if (v > budget / r) throw std::length_error("power_checked: r^n exceeds budget");
    v *= r;
  }
  return v;
}

/// Index of x in the mixed-radix enumeration of Z_r^n.
inline long long string_index(const ZrString& x) {
  long long idx = 0;
  for (int i = x.n() - 1; i >= 0; --i) idx = idx * x.r + x.entries[static_cast<std::size_t>(i)];
  return idx;
}

/// Inverse of string_index.
inline ZrString index_string(int r, int n, long long idx) {
  ZrString x = zero_string(r, n);
  for (int i = 0; i < n; ++i) {
    x.entries[static_cast<std::size_t>(i)] = static_cast<int>(idx % r);
    idx /= r;
  }
  return x;
}

// ---------------------------------------------------------------------------
// Partial t-hypermatchings.
// ---------------------------------------------------------------------------

/// An alpha-partial t-hypermatching on vertex set {0, ..., n-1}: a family of
/// pairwise-disjoint t-subsets ("edges") covering an alpha fraction of the
/// vertices.  Canonical form: vertices sorted inside each edge, edges sorted
/// by their smallest vertex.
struct Hypermatching {
  int n = 0;
  int t = 0;
  std::vector<std::vector<int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  double alpha() const { return n == 0 ? 0.0 : static_cast<double>(t) * edge_count() / n; }

  friend bool operator==(const Hypermatching&, const Hypermatching&) = default;
};

/// Canonicalizes and validates an edge list into a Hypermatching.
/// Throws if edges are malformed, out of range, or not pairwise disjoint.
inline Hypermatching make_hypermatching(int n, int t, std::vector<std::vector<int>> edges) {
  if (n <= 0 || t <= 0) throw std::invalid_argument("make_hypermatching: n and t must be positive");
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (auto& e : edges) {
    if (static_cast<int>(e.size()) != t) throw std::invalid_argument("make_hypermatching: edge arity != t");
    std::sort(e.begin(), e.end());
    for (int v : e) {
      if (v < 0 || v >= n) throw std::invalid_argument("make_hypermatching: vertex out of range");
      if (used[static_cast<std::size_t>(v)]) throw std::invalid_argument("make_hypermatching: edges overlap");
      used[static_cast<std::size_t>(v)] = 1;
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
  return Hypermatching{n, t, std::move(edges)};
}

/// Number of edges an alpha-partial t-hypermatching on [n] must have.
/// Requires t | n and alpha*n/t integral (within fp slop on alpha).
inline int matching_edge_target(int n, int t, double alpha) {
  if (n <= 0 || t <= 0 || t > n) throw std::invalid_argument("matching_edge_target: need 0 < t <= n");
  if (n % t != 0) throw std::invalid_argument("matching_edge_target: t must divide n");
  if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("matching_edge_target: alpha outside [0, 1]");
  const double edges_real = alpha * n / t;
  const long long edges = std::llround(edges_real);
  if (std::fabs(edges_real - static_cast<double>(edges)) > 1e-9 * std::max(1.0, edges_real)) {
    throw std::invalid_argument("matching_edge_target: alpha*n/t is not an integer");
  }
  return static_cast<int>(edges);
}

/// Exact count of alpha-partial t-hypermatchings on [n]:
///   n! / ((t!)^E * E! * (n - E*t)!)  with E = alpha*n/t edges.
inline BigInt count_hypermatchings(int n, int t, double alpha) {
  const int E = matching_edge_target(n, t, alpha);
  auto factorial = [](int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  BigInt denom = factorial(E) * factorial(n - E * t);
  const BigInt tf = factorial(t);
  for (int i = 0; i < E; ++i) denom *= tf;
  return factorial(n) / denom;
}

/// Uniformly random alpha-partial t-hypermatching (canonical form).
/// Deterministic for a fixed seed: shuffles [n], takes the first E blocks
/// of t consecutive vertices, canonicalizes.
inline Hypermatching sample_hypermatching(int n, int t, double alpha, std::uint64_t seed) {
  const int E = matching_edge_target(n, t, alpha);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng(seed);
  rng.shuffle(perm);
  std::vector<std::vector<int>> edges;
  edges.reserve(static_cast<std::size_t>(E));
  for (int e = 0; e < E; ++e) {
    edges.emplace_back(perm.begin() + static_cast<std::ptrdiff_t>(e) * t,
                       perm.begin() + static_cast<std::ptrdiff_t>(e + 1) * t);
  }
  return make_hypermatching(n, t, std::move(edges));
}

namespace detail {

/// Advances `comb` (strictly increasing indices into [0, m)) to the next
/// combination in lexicographic order; returns false after the last one.
inline bool next_combination(std::vector<std::size_t>& comb, std::size_t m) {
  const std::size_t c = comb.size();
  std::size_t k = c;
  while (k > 0) {
    --k;
    if (comb[k] != m - c + k) {
      ++comb[k];
      for (std::size_t j = k + 1; j < c; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline void enumerate_matchings_rec(int n, int t, int edges_left, int skips_left,
                                    std::vector<int>& free_vertices, std::vector<std::vector<int>>& current,
                                    std::vector<Hypermatching>& out) {
  if (edges_left == 0) {
    out.push_back(Hypermatching{n, t, current});  // canonical by construction
    return;
  }
  if (free_vertices.empty()) return;
  // The smallest undecided vertex is either left unmatched or becomes the
  // minimum of the next edge; this discovers each matching exactly once,
  // with edges already in canonical order.
  const int v = free_vertices.front();
  if (skips_left > 0) {
    free_vertices.erase(free_vertices.begin());
    enumerate_matchings_rec(n, t, edges_left, skips_left - 1, free_vertices, current, out);
    free_vertices.insert(free_vertices.begin(), v);
  }
  if (free_vertices.size() < static_cast<std::size_t>(t)) return;
  // v heads a new edge; pick its t-1 partners among the later free vertices.
  const std::vector<int> rest(free_vertices.begin() + 1, free_vertices.end());
  std::vector<std::size_t> comb(static_cast<std::size_t>(t - 1));
  std::iota(comb.begin(), comb.end(), std::size_t{0});
  do {
    std::vector<int> edge{v};
    std::vector<int> remaining;
    remaining.reserve(rest.size() - comb.size());
    std::size_t ci = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (ci < comb.size() && comb[ci] == i) {
        edge.push_back(rest[i]);
        ++ci;
      } else {
        remaining.push_back(rest[i]);
      }
    }
    current.push_back(std::move(edge));
    std::vector<int> saved = std::move(free_vertices);
    free_vertices = std::move(remaining);
    enumerate_matchings_rec(n, t, edges_left - 1, skips_left, free_vertices, current, out);
    free_vertices = std::move(saved);
    current.pop_back();
  } while (next_combination(comb, rest.size()));
}

}  // namespace detail

/// All alpha-partial t-hypermatchings on [n] in canonical form, duplicate-free.
/// Throws std::length_error if the exact count exceeds `cap`.
inline std::vector<Hypermatching> enumerate_hypermatchings(int n, int t, double alpha,
                                                           std::uint64_t cap = 1000000) {
  const int E = matching_edge_target(n, t, alpha);
  const BigInt total = count_hypermatchings(n, t, alpha);
  if (total > BigInt(cap)) throw std::length_error("enumerate_hypermatchings: count exceeds cap");
  std::vector<Hypermatching> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<int> free_vertices(static_cast<std::size_t>(n));
  std::iota(free_vertices.begin(), free_vertices.end(), 0);
  std::vector<std::vector<int>> current;
  detail::enumerate_matchings_rec(n, t, E, n - E * t, free_vertices, current, out);
  return out;
}

/// Applies a hypermatching to x: entry i of the result is the sum of x over
/// the i-th edge, mod r.  Edges must fit inside x.
inline ZrString apply_matching(const Hypermatching& m, const ZrString& x) {
  if (m.n != x.n()) throw std::invalid_argument("apply_matching: vertex count mismatch");
  ZrString out = zero_string(x.r, m.edge_count());
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    long long acc = 0;
    for (int v : m.edges[i]) acc += x.entries[static_cast<std::size_t>(v)];
    out.entries[i] = static_cast<int>(acc % x.r);
  }
  return out;
}

}  // namespace zrlab
