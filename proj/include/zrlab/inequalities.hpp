// Checkable matrix inequalities: uniform-convexity bounds for families of
// matrices twisted by roots of unity, the block-diagonal embedding relating
// the family form to an orthogonality form, hypercontractive bounds for
// matrix-valued functions on Z_r^n, and Fourier-weight bounds for density
// matrices and set indicators.
//
// Every checker returns an InequalityReport with slack oriented so that
// slack >= 0 means the inequality holds; `holds` applies the caller's
// tolerance.  Checkers never rescale their inputs — sweep drivers normalize
// instances to unit scale before calling so that absolute tolerances mean
// the same thing everywhere.
#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "zrlab/matfourier.hpp"
#include "zrlab/report.hpp"

namespace zrlab {

/// Outcome of a single inequality check.
struct InequalityReport {
  std::string check;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // >= 0 means the inequality holds
  bool holds = false;
  std::map<std::string, double> params;
};

inline CheckRow to_check_row(const InequalityReport& rep, const std::string& kind = "hard") {
  return CheckRow{rep.check, rep.lhs, rep.rhs, rep.slack, rep.holds, kind, rep.params};
}

/// Convexity coefficient zeta(p, r) for p in [1, 2], r >= 2, evaluated in the
/// singularity-free polynomial form
///   zeta = (p-1)/(r-1) * sum_{j=0}^{r-2} (p-1)^j,
/// which equals (p-1)(1-(p-1)^{r-1}) / ((r-1)(2-p)) for p < 2 and extends
/// continuously to zeta(2, r) = 1.  At r = 2 it is literally p - 1.
inline double zeta(double p, int r) {
  if (r < 2) throw std::domain_error("zeta: r must be >= 2");
  if (!(p >= 1.0 - 1e-12 && p <= 2.0 + 1e-12)) throw std::domain_error("zeta: p must lie in [1, 2]");
  const double q = p - 1.0;
  double geom = 0.0, term = 1.0;
  for (int j = 0; j <= r - 2; ++j) {
    geom += term;
    term *= q;
  }
  return q * geom / static_cast<double>(r - 1);
}

namespace detail {

inline void check_family(const std::vector<ComplexMatrix>& A, const char* who) {
  if (A.size() < 2) throw std::invalid_argument(std::string(who) + ": need at least two matrices");
  const Eigen::Index m = A.front().rows();
  for (const auto& M : A) {
    if (M.rows() != m || M.cols() != m) throw std::invalid_argument(std::string(who) + ": matrices must share a square shape");
    if (!M.allFinite()) throw std::invalid_argument(std::string(who) + ": entries must be finite");
  }
}

inline void check_p_range(double p, const char* who) {
  if (!(p >= 1.0 && p <= 2.0 + 1e-12)) throw std::domain_error(std::string(who) + ": p must lie in [1, 2]");
}

}  // namespace detail

/// Rescales a family by 1 / max_j ||A_j||_2 so checks run on unit scale.
/// A family of all-zero matrices is returned unchanged.
inline std::vector<ComplexMatrix> normalize_family(std::vector<ComplexMatrix> A) {
  double scale = 0.0;
  for (const auto& M : A) scale = std::max(scale, schatten_norm(M, 2.0));
  if (scale > 0.0) {
    for (auto& M : A) M /= scale;
  }
  return A;
}

/// Rescales a matrix function by 1 / max_x ||f(x)||_2.
inline MatrixFunction normalize_function(MatrixFunction f) {
  double scale = 0.0;
  for (const auto& M : f.table) scale = std::max(scale, schatten_norm(M, 2.0));
  if (scale > 0.0) {
    for (auto& M : f.table) M /= scale;
  }
  return f;
}

/// Uniform-convexity bound for a family A_0..A_{r-1}, checked in both
/// equivalent forms:
///
///   twisted form:  ((1/r) sum_k || sum_j w^{jk} A_j ||_p^p)^{2/p}
///                    >= ||A_0||_p^2 + zeta(p,r) sum_{k>=1} ||A_k||_p^2
///   average form:  ((1/r) sum_j ||A_j||_p^p)^{2/p}
///                    >= ||avg_j A_j||_p^2
///                       + zeta(p,r) sum_{k>=1} ||(1/r) sum_j w^{-jk} A_j||_p^2
///
/// The two are related by the substitution A'_k = (1/r) sum_j w^{-jk} A_j.
/// The report's lhs/rhs/slack describe the twisted form; params carry both
/// slacks and `slack` is their minimum.  `holds` requires both.
inline InequalityReport check_bcl(const std::vector<ComplexMatrix>& A, double p, double tol = 1e-9) {
  detail::check_family(A, "check_bcl");
  detail::check_p_range(p, "check_bcl");
  const int r = static_cast<int>(A.size());
  const double z = zeta(p, r);
  const auto w = root_of_unity_powers(r);
  const Eigen::Index m = A.front().rows();

  // Twisted form.
  double lhs_t_acc = 0.0;
  for (int k = 0; k < r; ++k) {
    ComplexMatrix acc = ComplexMatrix::Zero(m, m);
    for (int j = 0; j < r; ++j) acc += w[static_cast<std::size_t>((j * k) % r)] * A[static_cast<std::size_t>(j)];
    lhs_t_acc += std::pow(schatten_norm(acc, p), p);
  }
  const double lhs_t = std::pow(lhs_t_acc / r, 2.0 / p);
  double rhs_t = std::pow(schatten_norm(A[0], p), 2.0);
  for (int k = 1; k < r; ++k) rhs_t += z * std::pow(schatten_norm(A[static_cast<std::size_t>(k)], p), 2.0);
  const double slack_t = lhs_t - rhs_t;

  // Average form.
  double lhs_a_acc = 0.0;
  for (int j = 0; j < r; ++j) lhs_a_acc += std::pow(schatten_norm(A[static_cast<std::size_t>(j)], p), p);
  const double lhs_a = std::pow(lhs_a_acc / r, 2.0 / p);
  double rhs_a = 0.0;
  for (int k = 0; k < r; ++k) {
    ComplexMatrix acc = ComplexMatrix::Zero(m, m);
    for (int j = 0; j < r; ++j) {
      acc += std::conj(w[static_cast<std::size_t>((j * k) % r)]) * A[static_cast<std::size_t>(j)];
    }
    acc /= static_cast<double>(r);
    const double term = std::pow(schatten_norm(acc, p), 2.0);
    rhs_a += (k == 0) ? term : z * term;
  }
  const double slack_a = lhs_a - rhs_a;

  InequalityReport rep;
  rep.check = "uniform-convexity/twisted-average";
  rep.lhs = lhs_t;
  rep.rhs = rhs_t;
  rep.slack = std::min(slack_t, slack_a);
  rep.holds = rep.slack >= -tol;
  rep.params = {{"p", p},
                {"r", static_cast<double>(r)},
                {"m", static_cast<double>(m)},
                {"zeta", z},
                {"slack_twisted", slack_t},
                {"slack_average", slack_a}};
  return rep;
}

/// Weaker variant of the twisted form with the l_p average replaced by the
/// plain average of squared norms:
///   (1/r) sum_k || sum_j w^{jk} A_j ||_p^2 >= same right-hand side.
/// Implied by check_bcl via power-mean monotonicity (p <= 2).
inline InequalityReport check_weak_bcl(const std::vector<ComplexMatrix>& A, double p, double tol = 1e-9) {
  detail::check_family(A, "check_weak_bcl");
  detail::check_p_range(p, "check_weak_bcl");
  const int r = static_cast<int>(A.size());
  const double z = zeta(p, r);
  const auto w = root_of_unity_powers(r);
  const Eigen::Index m = A.front().rows();
  double lhs = 0.0;
  for (int k = 0; k < r; ++k) {
    ComplexMatrix acc = ComplexMatrix::Zero(m, m);
    for (int j = 0; j < r; ++j) acc += w[static_cast<std::size_t>((j * k) % r)] * A[static_cast<std::size_t>(j)];
    lhs += std::pow(schatten_norm(acc, p), 2.0);
  }
  lhs /= static_cast<double>(r);
  double rhs = std::pow(schatten_norm(A[0], p), 2.0);
  for (int k = 1; k < r; ++k) rhs += z * std::pow(schatten_norm(A[static_cast<std::size_t>(k)], p), 2.0);
  InequalityReport rep;
  rep.check = "uniform-convexity/weak-average";
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.slack = lhs - rhs;
  rep.holds = rep.slack >= -tol;
  rep.params = {{"p", p}, {"r", static_cast<double>(r)}, {"m", static_cast<double>(m)}, {"zeta", z}};
  return rep;
}

/// |Z|^{p-1} = (Z Z^dagger)^{(p-1)/2}, via the Hermitian eigendecomposition
/// with eigenvalues clamped at zero.  Exponent 0 returns the identity.
inline ComplexMatrix left_abs_power(const ComplexMatrix& Z, double exponent) {
  if (Z.rows() != Z.cols()) throw std::invalid_argument("left_abs_power: matrix must be square");
  if (exponent == 0.0) return ComplexMatrix::Identity(Z.rows(), Z.cols());
  ComplexMatrix H = Z * Z.adjoint();
  H = 0.5 * (H + ComplexMatrix(H.adjoint()));  // kill round-off skew
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(H);
  if (es.info() != Eigen::Success) throw std::runtime_error("left_abs_power: eigensolver failed");
  Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
  Eigen::VectorXd powed(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i) powed(i) = std::pow(lam(i), exponent / 2.0);
  return es.eigenvectors() * powed.asDiagonal() * es.eigenvectors().adjoint();
}

/// The norming direction of Z for the Schatten p-norm: with the singular
/// value decomposition Z = U diag(s) V^dagger, returns U diag(s^{p-1})
/// V^dagger (zero singular values stay zero).  This is the gradient
/// direction of ||.||_p^p at Z; at p = 2 it is Z itself and at p = 1 it is
/// the polar part of Z restricted to its support.
inline ComplexMatrix norming_direction(const ComplexMatrix& Z, double p) {
  if (Z.rows() != Z.cols()) throw std::invalid_argument("norming_direction: matrix must be square");
  Eigen::JacobiSVD<ComplexMatrix> svd(Z, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::VectorXd s = svd.singularValues();
  for (Eigen::Index i = 0; i < s.size(); ++i) s(i) = s(i) > 0.0 ? std::pow(s(i), p - 1.0) : 0.0;
  return svd.matrixU() * s.asDiagonal() * svd.matrixV().adjoint();
}

/// The two trace conditions under which the squared-norm convexity bound
///   ||Z + W||_p^2 >= ||Z||_p^2 + (p-1) ||W||_p^2
/// applies: W must be Frobenius-orthogonal to the norming direction D of Z,
///   Tr[D^dagger W] = Tr[W^dagger D] = 0.
/// (The two traces are complex conjugates: one complex constraint.  At p = 2
/// this is plain orthogonality <Z, W>_F = 0, making the bound the
/// parallelogram identity's inequality half; the classic block pair
/// Z = diag(A, A), W = diag(B, -B) satisfies it for every p.)
inline std::pair<std::complex<double>, std::complex<double>> orthogonality_traces(const ComplexMatrix& Z,
                                                                                  const ComplexMatrix& W, double p) {
  const ComplexMatrix D = norming_direction(Z, p);
  return {(D.adjoint() * W).trace(), (W.adjoint() * D).trace()};
}

/// Projects W0 onto the admissible subspace for `check_orthogonal_convexity`
/// at base point Z: the Frobenius-orthogonal complement of Z's norming
/// direction.
inline ComplexMatrix project_orthogonal_w(const ComplexMatrix& Z, const ComplexMatrix& W0, double p) {
  const ComplexMatrix D = norming_direction(Z, p);
  const double dd = D.squaredNorm();
  if (dd < 1e-28) return W0;  // Z (numerically) zero: every W is admissible
  const std::complex<double> coeff = (D.adjoint() * W0).trace() / dd;
  return W0 - coeff * D;
}

/// Checks ||Z + W||_p^2 >= ||Z||_p^2 + (p-1) ||W||_p^2 under the trace
/// orthogonality conditions above.  Throws std::invalid_argument if the
/// conditions are violated beyond 1e-8 (relative to the input scale).
inline InequalityReport check_orthogonal_convexity(const ComplexMatrix& Z, const ComplexMatrix& W, double p,
                                                   double tol = 1e-9) {
  detail::check_p_range(p, "check_orthogonal_convexity");
  if (Z.rows() != Z.cols() || W.rows() != W.cols() || Z.rows() != W.rows()) {
    throw std::invalid_argument("check_orthogonal_convexity: Z and W must be square of equal side");
  }
  const auto [c1, c2] = orthogonality_traces(Z, W, p);
  const double scale = std::max(1.0, norming_direction(Z, p).norm() * W.norm());
  if (std::abs(c1) > 1e-8 * scale || std::abs(c2) > 1e-8 * scale) {
    throw std::invalid_argument("check_orthogonal_convexity: trace orthogonality conditions violated");
  }
  InequalityReport rep;
  rep.check = "uniform-convexity/orthogonal-pair";
  rep.lhs = std::pow(schatten_norm(Z + W, p), 2.0);
  rep.rhs = std::pow(schatten_norm(Z, p), 2.0) + (p - 1.0) * std::pow(schatten_norm(W, p), 2.0);
  rep.slack = rep.lhs - rep.rhs;
  rep.holds = rep.slack >= -tol;
  rep.params = {{"p", p}, {"m", static_cast<double>(Z.rows())}, {"ortho1", std::abs(c1)}, {"ortho2", std::abs(c2)}};
  return rep;
}

/// Block-diagonal embedding of a family A_0..A_{r-1}:
///   Z_j = diag(w^{j*0} A_j, w^{j*1} A_j, ..., w^{j(r-1)} A_j)  (rn x rn).
/// Self-checks two identities (any failure is an implementation bug and
/// throws std::logic_error):
///   Tr|sum_j Z_j|^p = sum_k Tr|sum_j w^{jk} A_j|^p, and
///   ||Z_j||_p^2 = r^{2/p} ||A_j||_p^2.
/// `p` is used only for those self-checks.
inline std::vector<ComplexMatrix> block_embedding(const std::vector<ComplexMatrix>& A, double p = 1.5) {
  detail::check_family(A, "block_embedding");
  detail::check_p_range(p, "block_embedding");
  const int r = static_cast<int>(A.size());
  const Eigen::Index m = A.front().rows();
  const auto w = root_of_unity_powers(r);
  std::vector<ComplexMatrix> Z(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) {
    ComplexMatrix Zj = ComplexMatrix::Zero(r * m, r * m);
    for (int k = 0; k < r; ++k) {
      Zj.block(k * m, k * m, m, m) = w[static_cast<std::size_t>((j * k) % r)] * A[static_cast<std::size_t>(j)];
    }
    Z[static_cast<std::size_t>(j)] = std::move(Zj);
  }
  // Identity 1: the blocks of sum_j Z_j are exactly the twisted sums.
  ComplexMatrix Zsum = ComplexMatrix::Zero(r * m, r * m);
  for (const auto& Zj : Z) Zsum += Zj;
  double direct = std::pow(schatten_norm(Zsum, p), p);
  double blockwise = 0.0;
  for (int k = 0; k < r; ++k) {
    ComplexMatrix acc = ComplexMatrix::Zero(m, m);
    for (int j = 0; j < r; ++j) acc += w[static_cast<std::size_t>((j * k) % r)] * A[static_cast<std::size_t>(j)];
    blockwise += std::pow(schatten_norm(acc, p), p);
  }
  const double scale1 = std::max({1.0, std::fabs(direct), std::fabs(blockwise)});
  if (std::fabs(direct - blockwise) > 1e-8 * scale1) {
    throw std::logic_error("block_embedding: trace identity self-check failed");
  }
  // Identity 2: each Z_j has r copies of A_j's singular values.
  for (int j = 0; j < r; ++j) {
    const double lhs = std::pow(schatten_norm(Z[static_cast<std::size_t>(j)], p), 2.0);
    const double rhs = std::pow(static_cast<double>(r), 2.0 / p) * std::pow(schatten_norm(A[static_cast<std::size_t>(j)], p), 2.0);
    if (std::fabs(lhs - rhs) > 1e-8 * std::max(1.0, std::fabs(rhs))) {
      throw std::logic_error("block_embedding: norm scaling self-check failed");
    }
  }
  return Z;
}

/// Hypercontractive bound for f : Z_r^n -> C^{m x m} at noise rate rho:
///   (sum_S rho^{2|S|} ||fhat(S)||_p^2)^{1/2}
///     <= ((1/r^n) sum_x ||f(x)||_p^p)^{1/p}
/// valid for 0 <= rho <= sqrt(zeta(p, r)).  Norms are unnormalized.
/// Requests with rho beyond sqrt(zeta) + 1e-12 are refused (std::domain_error)
/// rather than reported as failures.
inline InequalityReport check_hypercontractivity(const MatrixFunction& f, double p, double rho, double tol = 1e-9) {
  detail::check_p_range(p, "check_hypercontractivity");
  const double z = zeta(p, f.r);
  if (rho < 0.0) throw std::domain_error("check_hypercontractivity: rho must be >= 0");
  if (rho > std::sqrt(z) + 1e-12) {
    throw std::domain_error("check_hypercontractivity: rho exceeds sqrt(zeta(p, r)); bound not claimed there");
  }
  const FourierTable fhat = fourier_transform(f);
  const long long points = power_checked(f.r, f.n);
  double lhs_sq = 0.0;
  for (long long si = 0; si < points; ++si) {
    const int wt = hamming_weight(index_string(f.r, f.n, si));
    lhs_sq += std::pow(rho, 2.0 * wt) * std::pow(schatten_norm(fhat.table[static_cast<std::size_t>(si)], p), 2.0);
  }
  double rhs_acc = 0.0;
  for (long long xi = 0; xi < points; ++xi) {
    rhs_acc += std::pow(schatten_norm(f.table[static_cast<std::size_t>(xi)], p), p);
  }
  InequalityReport rep;
  rep.check = "hypercontractivity/noise-rate";
  rep.lhs = std::sqrt(lhs_sq);
  rep.rhs = std::pow(rhs_acc / static_cast<double>(points), 1.0 / p);
  rep.slack = rep.rhs - rep.lhs;
  rep.holds = rep.slack >= -tol;
  rep.params = {{"p", p},
                {"r", static_cast<double>(f.r)},
                {"n", static_cast<double>(f.n)},
                {"m", static_cast<double>(f.m)},
                {"rho", rho},
                {"zeta", z}};
  return rep;
}

/// Fourier-weight bound for density-matrix-valued f : Z_r^n -> D(C^{2^mq}):
///   sum_S delta^{|S|} ||fhat(S)||_1^2 <= 2^{2(r-1) delta mq}
/// for delta in [0, 1/(r-1)].  Inputs must be PSD with unit trace and side a
/// power of two; violations throw std::invalid_argument.
inline InequalityReport check_density_fourier_bound(const MatrixFunction& f, double delta, double tol = 1e-9) {
  if (delta < -1e-15 || delta > 1.0 / (f.r - 1) + 1e-12) {
    throw std::invalid_argument("check_density_fourier_bound: delta outside [0, 1/(r-1)]");
  }
  int mq = 0;
  {
    Eigen::Index side = f.m;
    while (side > 1) {
      if (side % 2 != 0) throw std::invalid_argument("check_density_fourier_bound: side must be a power of two");
      side /= 2;
      ++mq;
    }
  }
  for (const auto& rho : f.table) {
    if ((rho - ComplexMatrix(rho.adjoint())).norm() > 1e-9 * std::max(1.0, rho.norm())) {
      throw std::invalid_argument("check_density_fourier_bound: inputs must be Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho);
    if (es.eigenvalues().minCoeff() < -1e-10) {
      throw std::invalid_argument("check_density_fourier_bound: inputs must be PSD");
    }
    if (std::fabs(rho.trace().real() - 1.0) > 1e-9) {
      throw std::invalid_argument("check_density_fourier_bound: inputs must have unit trace");
    }
  }
  const FourierTable fhat = fourier_transform(f);
  const long long points = power_checked(f.r, f.n);
  double lhs = 0.0;
  for (long long si = 0; si < points; ++si) {
    const int wt = hamming_weight(index_string(f.r, f.n, si));
    lhs += std::pow(delta, static_cast<double>(wt)) * std::pow(trace_norm(fhat.table[static_cast<std::size_t>(si)]), 2.0);
  }
  InequalityReport rep;
  rep.check = "fourier-weight/density-trace-bound";
  rep.lhs = lhs;
  rep.rhs = std::pow(2.0, 2.0 * (f.r - 1) * delta * mq);
  rep.slack = rep.rhs - rep.lhs;
  rep.holds = rep.slack >= -tol;
  rep.params = {{"r", static_cast<double>(f.r)},
                {"n", static_cast<double>(f.n)},
                {"qubits", static_cast<double>(mq)},
                {"delta", delta}};
  return rep;
}

/// Fourier-weight bound for a set indicator f = 1_A, A subseteq Z_r^n:
///   sum_S delta^{|S|} |fhat(S)|^2 <= (|A| / r^n)^{2/(1 + r delta)}
/// for delta in [0, 1/r].
inline InequalityReport check_kkl(int r, int n, const std::vector<int>& indicator, double delta, double tol = 1e-9) {
  const long long points = power_checked(r, n);
  if (static_cast<long long>(indicator.size()) != points) {
    throw std::invalid_argument("check_kkl: indicator must have r^n entries");
  }
  for (int v : indicator) {
    if (v != 0 && v != 1) throw std::invalid_argument("check_kkl: indicator entries must be 0/1");
  }
  if (delta < -1e-15 || delta > 1.0 / r + 1e-12) throw std::invalid_argument("check_kkl: delta outside [0, 1/r]");
  const auto w = root_of_unity_powers(r);
  long long size_a = 0;
  for (int v : indicator) size_a += v;
  double lhs = 0.0;
  for (long long si = 0; si < points; ++si) {
    const ZrString S = index_string(r, n, si);
    std::complex<double> coeff(0.0, 0.0);
    for (long long xi = 0; xi < points; ++xi) {
      if (!indicator[static_cast<std::size_t>(xi)]) continue;
      coeff += std::conj(w[static_cast<std::size_t>(zr_dot(S, index_string(r, n, xi)))]);
    }
    coeff /= static_cast<double>(points);
    lhs += std::pow(delta, static_cast<double>(hamming_weight(S))) * std::norm(coeff);
  }
  InequalityReport rep;
  rep.check = "fourier-weight/set-indicator-bound";
  rep.lhs = lhs;
  rep.rhs = std::pow(static_cast<double>(size_a) / static_cast<double>(points), 2.0 / (1.0 + r * delta));
  rep.slack = rep.rhs - rep.lhs;
  rep.holds = rep.slack >= -tol;
  rep.params = {{"r", static_cast<double>(r)},
                {"n", static_cast<double>(n)},
                {"delta", delta},
                {"density", static_cast<double>(size_a) / static_cast<double>(points)}};
  return rep;
}

namespace detail {

/// q-norm of a nonnegative vector, with q = infinity supported.
inline double vector_q_norm(const std::vector<double>& v, double q) {
  if (std::isinf(q)) {
    double mx = 0.0;
    for (double x : v) mx = std::max(mx, x);
    return mx;
  }
  double acc = 0.0;
  for (double x : v) acc += std::pow(x, q);
  return std::pow(acc, 1.0 / q);
}

}  // namespace detail

/// Two-axis norm interchange for a real matrix (entries taken in absolute
/// value) and exponents 1 <= q1 <= q2 <= infinity:
///   || (||column_j||_{q1})_j ||_{q2}  <=  || (||row_i||_{q2})_i ||_{q1}.
/// Equivalently: taking the smaller-exponent norm along an axis first, then
/// collecting with the larger exponent, can only decrease the value.
inline InequalityReport check_minkowski_mixed_norm(const Eigen::MatrixXd& values, double q1, double q2,
                                                   double tol = 1e-9) {
  if (!(q1 >= 1.0) || !(q2 >= q1)) {
    throw std::invalid_argument("check_minkowski_mixed_norm: need 1 <= q1 <= q2");
  }
  const Eigen::MatrixXd a = values.cwiseAbs();
  std::vector<double> col_norms(static_cast<std::size_t>(a.cols()));
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    std::vector<double> col(static_cast<std::size_t>(a.rows()));
    for (Eigen::Index i = 0; i < a.rows(); ++i) col[static_cast<std::size_t>(i)] = a(i, j);
    col_norms[static_cast<std::size_t>(j)] = detail::vector_q_norm(col, q1);
  }
  std::vector<double> row_norms(static_cast<std::size_t>(a.rows()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    std::vector<double> row(static_cast<std::size_t>(a.cols()));
    for (Eigen::Index j = 0; j < a.cols(); ++j) row[static_cast<std::size_t>(j)] = a(i, j);
    row_norms[static_cast<std::size_t>(i)] = detail::vector_q_norm(row, q2);
  }
  InequalityReport rep;
  rep.check = "mixed-norm/interchange";
  rep.lhs = detail::vector_q_norm(col_norms, q2);
  rep.rhs = detail::vector_q_norm(row_norms, q1);
  rep.slack = rep.rhs - rep.lhs;
  rep.holds = rep.slack >= -tol;
  rep.params = {{"q1", q1}, {"q2", q2}, {"rows", static_cast<double>(a.rows())}, {"cols", static_cast<double>(a.cols())}};
  return rep;
}

}  // namespace zrlab
