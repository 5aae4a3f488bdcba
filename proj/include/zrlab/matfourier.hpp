// Matrix-valued functions on Z_r^n, their Fourier transforms with respect to
// the characters x -> omega^{S.x}, and Schatten norms.
//
// Conventions: fhat(S) = r^{-n} sum_x f(x) omega^{-S.x} and
// f(x) = sum_S fhat(S) omega^{S.x}, with omega = exp(2*pi*i/r).
// Tables are dense over Z_r^n in mixed-radix order (digit 0 least
// significant); the naive O(r^{2n}) transform is intentional at this scale.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "zrlab/rng.hpp"
#include "zrlab/zr_core.hpp"

namespace zrlab {

using ComplexMatrix = Eigen::MatrixXcd;

/// Size guard for dense tables: r^n * m^2 complex entries at mostBUDGET.
constexpr long long kTableBudget = 100000000;  // 1e8

/// The r-th roots of unity omega^0..omega^{r-1}, each from the exact angle.
inline std::vector<std::complex<double>> root_of_unity_powers(int r) {
  if (r < 1) throw std::invalid_argument("root_of_unity_powers: r must be positive");
  std::vector<std::complex<double>> w(static_cast<std::size_t>(r));
  constexpr double two_pi = 6.283185307179586476925286766559;
  for (int k = 0; k < r; ++k) w[static_cast<std::size_t>(k)] = std::polar(1.0, two_pi * k / r);
  return w;
}

/// A function f : Z_r^n -> C^{m x m}, tabulated densely.
struct MatrixFunction {
  int r = 2;
  int n = 0;
  Eigen::Index m = 1;
  std::vector<ComplexMatrix> table;  // size r^n, mixed-radix order

  const ComplexMatrix& at(const ZrString& x) const { return table[static_cast<std::size_t>(string_index(x))]; }
  ComplexMatrix& at(const ZrString& x) { return table[static_cast<std::size_t>(string_index(x))]; }
};

/// Fourier coefficients fhat : Z_r^n -> C^{m x m}, same dense layout.
struct FourierTable {
  int r = 2;
  int n = 0;
  Eigen::Index m = 1;
  std::vector<ComplexMatrix> table;

  const ComplexMatrix& at(const ZrString& s) const { return table[static_cast<std::size_t>(string_index(s))]; }
  ComplexMatrix& at(const ZrString& s) { return table[static_cast<std::size_t>(string_index(s))]; }
};

namespace detail {

inline void check_table_shape(int r, int n, Eigen::Index m, std::size_t table_size) {
  if (r < 2) throw std::invalid_argument("matrix table: r must be >= 2");
  if (n < 0) throw std::invalid_argument("matrix table: n must be >= 0");
  if (m < 1) throw std::invalid_argument("matrix table: matrix side must be >= 1");
  const long long points = power_checked(r, n);
  if (points * static_cast<long long>(m) * static_cast<long long>(m) > kTableBudget) {
    throw std::length_error("matrix table: r^n * m^2 exceeds the dense-table budget");
  }
  if (table_size != static_cast<std::size_t>(points)) {
    throw std::invalid_argument("matrix table: wrong number of entries");
  }
}

}  // namespace detail

/// Validating constructor: checks the shape and that all entries are m x m.
inline MatrixFunction make_matrix_function(int r, int n, std::vector<ComplexMatrix> table) {
  if (table.empty()) throw std::invalid_argument("make_matrix_function: empty table");
  const Eigen::Index m = table.front().rows();
  detail::check_table_shape(r, n, m, table.size());
  for (const auto& entry : table) {
    if (entry.rows() != m || entry.cols() != m) {
      throw std::invalid_argument("make_matrix_function: entries must all be square of equal side");
    }
  }
  return MatrixFunction{r, n, m, std::move(table)};
}

/// fhat(S) = r^{-n} sum_x f(x) omega^{-S.x}.
inline FourierTable fourier_transform(const MatrixFunction& f) {
  detail::check_table_shape(f.r, f.n, f.m, f.table.size());
  const long long points = power_checked(f.r, f.n);
  const auto w = root_of_unity_powers(f.r);
  // Digits of every point, precomputed once.
  std::vector<std::vector<int>> digits(static_cast<std::size_t>(points));
  for (long long i = 0; i < points; ++i) digits[static_cast<std::size_t>(i)] = index_string(f.r, f.n, i).entries;
  FourierTable out{f.r, f.n, f.m, std::vector<ComplexMatrix>(static_cast<std::size_t>(points))};
  const double scale = 1.0 / static_cast<double>(points);
  for (long long si = 0; si < points; ++si) {
    ComplexMatrix acc = ComplexMatrix::Zero(f.m, f.m);
    const auto& sd = digits[static_cast<std::size_t>(si)];
    for (long long xi = 0; xi < points; ++xi) {
      const auto& xd = digits[static_cast<std::size_t>(xi)];
      long long dot = 0;
      for (int i = 0; i < f.n; ++i) dot += static_cast<long long>(sd[static_cast<std::size_t>(i)]) * xd[static_cast<std::size_t>(i)];
      const int residue = static_cast<int>(dot % f.r);
      // omega^{-S.x} = conj(omega^{S.x}) on the unit circle.
      acc += std::conj(w[static_cast<std::size_t>(residue)]) * f.table[static_cast<std::size_t>(xi)];
    }
    out.table[static_cast<std::size_t>(si)] = scale * acc;
  }
  return out;
}

/// f(x) = sum_S fhat(S) omega^{S.x}; inverse of fourier_transform.
inline MatrixFunction inverse_fourier(const FourierTable& fhat) {
  detail::check_table_shape(fhat.r, fhat.n, fhat.m, fhat.table.size());
  const long long points = power_checked(fhat.r, fhat.n);
  const auto w = root_of_unity_powers(fhat.r);
  std::vector<std::vector<int>> digits(static_cast<std::size_t>(points));
  for (long long i = 0; i < points; ++i) digits[static_cast<std::size_t>(i)] = index_string(fhat.r, fhat.n, i).entries;
  MatrixFunction out{fhat.r, fhat.n, fhat.m, std::vector<ComplexMatrix>(static_cast<std::size_t>(points))};
  for (long long xi = 0; xi < points; ++xi) {
    ComplexMatrix acc = ComplexMatrix::Zero(fhat.m, fhat.m);
    const auto& xd = digits[static_cast<std::size_t>(xi)];
    for (long long si = 0; si < points; ++si) {
      const auto& sd = digits[static_cast<std::size_t>(si)];
      long long dot = 0;
      for (int i = 0; i < fhat.n; ++i) dot += static_cast<long long>(sd[static_cast<std::size_t>(i)]) * xd[static_cast<std::size_t>(i)];
      acc += w[static_cast<std::size_t>(dot % fhat.r)] * fhat.table[static_cast<std::size_t>(si)];
    }
    out.table[static_cast<std::size_t>(xi)] = acc;
  }
  return out;
}

/// Singular values of M (descending).  Uses the divide-and-conquer SVD,
/// which keeps absolute errors near machine epsilon times the largest
/// singular value (forming M^dagger M and taking square roots of its
/// eigenvalues would square the condition number and inflate tiny singular
/// values to ~sqrt(eps)).
inline std::vector<double> singular_values(const ComplexMatrix& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("singular_values: matrix must be square");
  Eigen::BDCSVD<ComplexMatrix> svd(M);
  std::vector<double> sv(static_cast<std::size_t>(M.rows()));
  for (Eigen::Index i = 0; i < M.rows(); ++i) sv[static_cast<std::size_t>(i)] = svd.singularValues()(i);
  std::sort(sv.rbegin(), sv.rend());
  return sv;
}

/// Schatten p-norm: (sum_i sigma_i^p)^{1/p}, or ((1/m) sum_i sigma_i^p)^{1/p}
/// when `normalized`.  Requires p >= 1 and finite entries.
inline double schatten_norm(const ComplexMatrix& M, double p, bool normalized = false) {
  if (!(p >= 1.0)) throw std::invalid_argument("schatten_norm: p must be >= 1");
  if (!M.allFinite()) throw std::invalid_argument("schatten_norm: entries must be finite");
  const auto sv = singular_values(M);
  double acc = 0.0;
  for (double s : sv) acc += std::pow(s, p);
  if (normalized) acc /= static_cast<double>(M.rows());
  return std::pow(acc, 1.0 / p);
}

/// Trace norm shorthand (Schatten p=1).
inline double trace_norm(const ComplexMatrix& M, bool normalized = false) {
  return schatten_norm(M, 1.0, normalized);
}

/// m x m matrix with i.i.d. standard complex gaussian entries.
inline ComplexMatrix random_complex_matrix(Eigen::Index m, Rng& rng) {
  ComplexMatrix G(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      G(i, j) = std::complex<double>(rng.gaussian(), rng.gaussian());
    }
  }
  return G;
}

/// Random density matrix G G^dagger / Tr(G G^dagger): PSD with unit trace.
inline ComplexMatrix random_density_matrix(Eigen::Index m, std::uint64_t seed) {
  Rng rng(seed);
  ComplexMatrix G = random_complex_matrix(m, rng);
  ComplexMatrix rho = G * G.adjoint();
  const double tr = rho.trace().real();
  if (!(tr > 0.0)) throw std::runtime_error("random_density_matrix: degenerate draw");
  return rho / tr;
}

/// Haar-ish random unitary: QR of a complex gaussian with the R diagonal's
/// phases folded into Q (enough for unitary-invariance property checks).
inline ComplexMatrix random_unitary(Eigen::Index m, Rng& rng) {
  ComplexMatrix G = random_complex_matrix(m, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(G);
  ComplexMatrix Q = qr.householderQ();
  ComplexMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < m; ++i) {
    const std::complex<double> d = R(i, i);
    const double a = std::abs(d);
    Q.col(i) *= (a > 0.0 ? d / a : std::complex<double>(1.0, 0.0));
  }
  return Q;
}

// ---------------------------------------------------------------------------
// JSON serialization: {r, n, m, entries: [{x, re, im}, ...]}.
// ---------------------------------------------------------------------------

inline nlohmann::json matrix_to_json_parts(const ComplexMatrix& M) {
  nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    nlohmann::json re_row = nlohmann::json::array(), im_row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      re_row.push_back(M(i, j).real());
      im_row.push_back(M(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return nlohmann::json{{"re", std::move(re)}, {"im", std::move(im)}};
}

inline ComplexMatrix matrix_from_json_parts(const nlohmann::json& j) {
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  const Eigen::Index rows = static_cast<Eigen::Index>(re.size());
  if (rows == 0) throw std::invalid_argument("matrix_from_json_parts: empty matrix");
  const Eigen::Index cols = static_cast<Eigen::Index>(re.at(0).size());
  ComplexMatrix M(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index jj = 0; jj < cols; ++jj) {
      M(i, jj) = std::complex<double>(re.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(jj)).get<double>(),
                                      im.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(jj)).get<double>());
    }
  }
  return M;
}

inline nlohmann::json matrix_function_to_json(const MatrixFunction& f) {
  nlohmann::json entries = nlohmann::json::array();
  const long long points = power_checked(f.r, f.n);
  for (long long i = 0; i < points; ++i) {
    nlohmann::json e = matrix_to_json_parts(f.table[static_cast<std::size_t>(i)]);
    e["x"] = index_string(f.r, f.n, i).entries;
    entries.push_back(std::move(e));
  }
  return nlohmann::json{{"r", f.r}, {"n", f.n}, {"m", f.m}, {"entries", std::move(entries)}};
}

inline MatrixFunction matrix_function_from_json(const nlohmann::json& j) {
  const int r = j.at("r").get<int>();
  const int n = j.at("n").get<int>();
  const long long points = power_checked(r, n);
  std::vector<ComplexMatrix> table(static_cast<std::size_t>(points));
  std::vector<char> seen(static_cast<std::size_t>(points), 0);
  for (const auto& e : j.at("entries")) {
    const ZrString x = make_zr_string(r, e.at("x").get<std::vector<int>>());
    if (x.n() != n) throw std::invalid_argument("matrix_function_from_json: point of wrong length");
    const auto idx = static_cast<std::size_t>(string_index(x));
    if (seen[idx]) throw std::invalid_argument("matrix_function_from_json: duplicate point");
    seen[idx] = 1;
    table[idx] = matrix_from_json_parts(e);
  }
  for (char s : seen) {
    if (!s) throw std::invalid_argument("matrix_function_from_json: missing point");
  }
  return make_matrix_function(r, n, std::move(table));
}

}  // namespace zrlab
