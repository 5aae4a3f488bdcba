// Tests for the matrix-space inequality checkers: the convexity constant,
// uniform convexity in twisted/average/weak forms, orthogonal pairs, block
// embeddings, hypercontractivity, Fourier-weight bounds, and the mixed-norm
// interchange.
#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

#include "zrlab/inequalities.hpp"

namespace zrlab {
namespace {

std::vector<ComplexMatrix> random_family(int r, Eigen::Index m, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<ComplexMatrix> family;
  for (int j = 0; j < r; ++j) family.push_back(random_complex_matrix(m, rng));
  return normalize_family(family);
}

TEST(Zeta, StructuralValues) {
  for (int r : {2, 3, 4, 5, 7}) {
    EXPECT_DOUBLE_EQ(zeta(2.0, r), 1.0) << r;
    EXPECT_DOUBLE_EQ(zeta(1.0, r), 0.0) << r;
  }
  // Binary alphabet: the constant is exactly p - 1, bit for bit.
  for (double p = 1.0; p <= 2.0 + 1e-12; p += 0.01) EXPECT_EQ(zeta(p, 2), p - 1.0);
  // Worked value: (1/2)(1 + 1/2)/2 = 3/8.
  EXPECT_NEAR(zeta(1.5, 3), 0.375, 1e-15);
  EXPECT_THROW(zeta(0.5, 3), std::domain_error);
  EXPECT_THROW(zeta(2.5, 3), std::domain_error);
  EXPECT_THROW(zeta(1.5, 1), std::domain_error);
}

TEST(Zeta, BoundedBetweenFloorAndOne) {
  for (int r : {2, 3, 4, 6, 9}) {
    for (double p : {1.0, 1.2, 1.5, 1.8, 2.0}) {
      const double z = zeta(p, r);
      EXPECT_GE(z, (p - 1.0) / (r - 1.0) - 1e-15);
      EXPECT_LE(z, 1.0 + 1e-15);
    }
  }
}

TEST(UniformConvexity, HoldsOnRandomNormalizedFamilies) {
  for (int r : {2, 3, 4}) {
    for (double p : {1.0, 1.3, 1.7, 2.0}) {
      for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto family = random_family(r, 3, 100 * static_cast<std::uint64_t>(r) + seed);
        const auto rep = check_bcl(family, p);
        EXPECT_TRUE(rep.holds) << "r=" << r << " p=" << p << " seed=" << seed << " slack=" << rep.slack;
        const auto weak = check_weak_bcl(family, p);
        EXPECT_TRUE(weak.holds) << "r=" << r << " p=" << p << " seed=" << seed;
      }
    }
  }
}

TEST(UniformConvexity, EqualityAtPTwoByParseval) {
  for (int r : {2, 3, 5}) {
    const auto family = random_family(r, 2, 77 + static_cast<std::uint64_t>(r));
    const auto rep = check_bcl(family, 2.0);
    EXPECT_NEAR(rep.params.at("slack_twisted"), 0.0, 1e-10);
    EXPECT_NEAR(rep.params.at("slack_average"), 0.0, 1e-10);
  }
}

TEST(UniformConvexity, BinaryCaseIsTwoPointInequality) {
  // r = 2: ((||A+B||_p^p + ||A-B||_p^p)/2)^{2/p} >= ||A||_p^2 + (p-1)||B||_p^2.
  Rng rng(31);
  for (int rep_i = 0; rep_i < 10; ++rep_i) {
    const ComplexMatrix A = random_complex_matrix(3, rng);
    const ComplexMatrix B = random_complex_matrix(3, rng);
    for (double p : {1.0, 1.5, 2.0}) {
      const auto rep = check_bcl({A, B}, p);
      const double lhs = std::pow(
          (std::pow(schatten_norm(A + B, p), p) + std::pow(schatten_norm(A - B, p), p)) / 2.0, 2.0 / p);
      const double rhs = std::pow(schatten_norm(A, p), 2.0) + (p - 1.0) * std::pow(schatten_norm(B, p), 2.0);
      EXPECT_NEAR(rep.lhs, lhs, 1e-10 * std::max(1.0, lhs));
      EXPECT_NEAR(rep.rhs, rhs, 1e-10 * std::max(1.0, rhs));
      EXPECT_GE(lhs - rhs, -1e-9);
    }
  }
}

TEST(UniformConvexity, RejectsMalformedFamilies) {
  Rng rng(1);
  const ComplexMatrix A = random_complex_matrix(2, rng);
  EXPECT_THROW(check_bcl({A}, 1.5), std::invalid_argument);                           // need r >= 2 blocks
  EXPECT_THROW(check_bcl({A, random_complex_matrix(3, rng)}, 1.5), std::invalid_argument);  // shape mismatch
  EXPECT_THROW(check_bcl({A, A}, 2.5), std::domain_error);                            // p outside [1, 2]
}

TEST(OrthogonalPair, ProjectionEnforcesTraceConditionsAndInequalityHolds) {
  Rng rng(17);
  for (double p : {1.2, 1.5, 1.8, 2.0}) {
    for (int rep_i = 0; rep_i < 10; ++rep_i) {
      const ComplexMatrix Z = random_complex_matrix(3, rng);
      const ComplexMatrix W = project_orthogonal_w(Z, random_complex_matrix(3, rng), p);
      const auto [t1, t2] = orthogonality_traces(Z, W, p);
      EXPECT_LT(std::abs(t1), 1e-9);
      EXPECT_LT(std::abs(t2), 1e-9);
      const auto rep = check_orthogonal_convexity(Z, W, p);
      EXPECT_TRUE(rep.holds) << "p=" << p << " slack=" << rep.slack;
    }
  }
}

TEST(OrthogonalPair, BlockConstructionIsAdmissible) {
  // Z = diag(A, A), W = diag(B, -B) satisfies both trace conditions for any
  // A, B, because the two blocks cancel exactly.
  Rng rng(23);
  const ComplexMatrix A = random_complex_matrix(2, rng);
  const ComplexMatrix B = random_complex_matrix(2, rng);
  ComplexMatrix Z = ComplexMatrix::Zero(4, 4), W = ComplexMatrix::Zero(4, 4);
  Z.block(0, 0, 2, 2) = A;
  Z.block(2, 2, 2, 2) = A;
  W.block(0, 0, 2, 2) = B;
  W.block(2, 2, 2, 2) = -B;
  for (double p : {1.3, 1.8}) {
    const auto [t1, t2] = orthogonality_traces(Z, W, p);
    EXPECT_LT(std::abs(t1), 1e-10);
    EXPECT_LT(std::abs(t2), 1e-10);
    EXPECT_TRUE(check_orthogonal_convexity(Z, W, p).holds);
  }
}

TEST(OrthogonalPair, RejectsNonOrthogonalInput) {
  Rng rng(29);
  const ComplexMatrix Z = random_complex_matrix(3, rng);
  EXPECT_THROW(check_orthogonal_convexity(Z, Z, 1.5), std::invalid_argument);
}

TEST(BlockEmbedding, NormsScaleAndTwistedSumsMatch) {
  // The embedding Z_j = diag(w^{jk} A_j)_k satisfies, by construction,
  //   Tr|sum_j Z_j|^p = sum_k Tr|sum_j w^{jk} A_j|^p  and
  //   ||Z_j||_p^2 = r^{2/p} ||A_j||_p^2;
  // block_embedding checks both internally and throws on violation.
  for (int r : {2, 3, 4}) {
    const auto family = random_family(r, 2, 900 + static_cast<std::uint64_t>(r));
    for (double p : {1.0, 1.5, 2.0}) {
      const auto blocks = block_embedding(family, p);
      ASSERT_EQ(blocks.size(), family.size());
      for (std::size_t j = 0; j < blocks.size(); ++j) {
        EXPECT_EQ(blocks[j].rows(), static_cast<Eigen::Index>(r) * family[j].rows());
        EXPECT_NEAR(std::pow(schatten_norm(blocks[j], p), 2.0),
                    std::pow(static_cast<double>(r), 2.0 / p) * std::pow(schatten_norm(family[j], p), 2.0),
                    1e-8);
      }
    }
  }
}

TEST(Hypercontractivity, HoldsAtCriticalNoiseRateAndRejectsBeyond) {
  for (int r : {2, 3}) {
    for (double p : {1.0, 1.5, 2.0}) {
      Rng rng(500 + 10 * static_cast<std::uint64_t>(r) + static_cast<std::uint64_t>(p * 10));
      const long long points = power_checked(r, 2);
      std::vector<ComplexMatrix> table;
      for (long long i = 0; i < points; ++i) table.push_back(random_complex_matrix(2, rng));
      const auto f = normalize_function(make_matrix_function(r, 2, std::move(table)));
      const double rho = std::sqrt(zeta(p, r));
      const auto rep = check_hypercontractivity(f, p, rho);
      EXPECT_TRUE(rep.holds) << "r=" << r << " p=" << p << " slack=" << rep.slack;
      if (p < 2.0) EXPECT_THROW(check_hypercontractivity(f, p, rho + 1e-3), std::domain_error);
    }
  }
}

TEST(Hypercontractivity, SingleCoordinateCoincidesWithUniformConvexity) {
  // At n = 1 and rho = sqrt(zeta), the two sides squared are exactly the
  // average-form uniform-convexity sides, so the slacks agree.
  for (int r : {2, 3, 4}) {
    for (double p : {1.0, 1.4, 2.0}) {
      const auto family = random_family(r, 3, 4242 + static_cast<std::uint64_t>(r));
      const auto f = make_matrix_function(r, 1, family);
      const auto hyper = check_hypercontractivity(f, p, std::sqrt(zeta(p, r)));
      const auto bcl = check_bcl(family, p);
      const double hyper_gap = hyper.rhs * hyper.rhs - hyper.lhs * hyper.lhs;
      EXPECT_NEAR(hyper_gap, bcl.params.at("slack_average"), 1e-10);
    }
  }
}

TEST(FourierWeight, DensityBoundHoldsAndValidatesInputs) {
  const int r = 3, n = 2;
  const long long points = power_checked(r, n);
  std::vector<ComplexMatrix> table;
  for (long long i = 0; i < points; ++i) table.push_back(random_density_matrix(2, 600 + static_cast<std::uint64_t>(i)));
  const auto f = make_matrix_function(r, n, table);
  for (double delta : {0.0, 0.25, 0.5}) {
    const auto rep = check_density_fourier_bound(f, delta);
    EXPECT_TRUE(rep.holds) << "delta=" << delta << " slack=" << rep.slack;
  }
  EXPECT_THROW(check_density_fourier_bound(f, 0.6), std::invalid_argument);  // delta > 1/(r-1)

  // Non-density input must be rejected.
  auto bad = table;
  bad[0] *= 2.0;  // trace 2
  EXPECT_THROW(check_density_fourier_bound(make_matrix_function(r, n, bad), 0.1), std::invalid_argument);
  // Side 3 is not a power of two.
  std::vector<ComplexMatrix> odd(static_cast<std::size_t>(points), ComplexMatrix::Identity(3, 3) / 3.0);
  EXPECT_THROW(check_density_fourier_bound(make_matrix_function(r, n, odd), 0.1), std::invalid_argument);
}

TEST(FourierWeight, DensityBoundTightAtDeltaZero) {
  // At delta = 0 the left side is ||E f||_1^2 = 1 and the right side is 1.
  const int r = 2, n = 2;
  std::vector<ComplexMatrix> table(4, ComplexMatrix::Identity(2, 2) / 2.0);
  const auto rep = check_density_fourier_bound(make_matrix_function(r, n, table), 0.0);
  EXPECT_NEAR(rep.lhs, 1.0, 1e-12);
  EXPECT_NEAR(rep.rhs, 1.0, 1e-12);
}

TEST(FourierWeight, SetIndicatorBoundHoldsExhaustivelyOnSmallSets) {
  const int r = 2, n = 3;
  const long long points = power_checked(r, n);
  // All 2^8 subsets of Z_2^3.
  for (long long mask = 0; mask < (1LL << points); ++mask) {
    std::vector<int> indicator(static_cast<std::size_t>(points), 0);
    for (long long i = 0; i < points; ++i) indicator[static_cast<std::size_t>(i)] = (mask >> i) & 1;
    for (double delta : {0.0, 0.25, 0.5}) {
      const auto rep = check_kkl(r, n, indicator, delta);
      EXPECT_TRUE(rep.holds) << "mask=" << mask << " delta=" << delta << " slack=" << rep.slack;
    }
  }
  EXPECT_THROW(check_kkl(r, n, std::vector<int>(static_cast<std::size_t>(points), 0), 0.6), std::invalid_argument);
  EXPECT_THROW(check_kkl(r, n, std::vector<int>(3, 0), 0.1), std::invalid_argument);
}

TEST(MixedNorm, KnownValuesAndEquality) {
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(2, 2);
  const auto rep = check_minkowski_mixed_norm(id, 1.0, 2.0);
  EXPECT_NEAR(rep.lhs, std::sqrt(2.0), 1e-12);  // columns in 1-norm, collected in 2-norm
  EXPECT_NEAR(rep.rhs, 2.0, 1e-12);             // rows in 2-norm, collected in 1-norm
  EXPECT_TRUE(rep.holds);

  Eigen::MatrixXd m(2, 2);
  m << 1, 2, 3, 4;
  const auto rep2 = check_minkowski_mixed_norm(m, 1.0, 2.0);
  EXPECT_NEAR(rep2.lhs, std::sqrt(52.0), 1e-12);
  EXPECT_NEAR(rep2.rhs, std::sqrt(5.0) + 5.0, 1e-12);
  EXPECT_TRUE(rep2.holds);

  // q1 = q2 collapses both sides to the entrywise q-norm.
  const auto eq = check_minkowski_mixed_norm(m, 2.0, 2.0);
  EXPECT_NEAR(eq.lhs, eq.rhs, 1e-12);

  EXPECT_THROW(check_minkowski_mixed_norm(m, 2.0, 1.0), std::invalid_argument);
}

TEST(MixedNorm, HoldsOnRandomMatrices) {
  Rng rng(71);
  for (int rep_i = 0; rep_i < 20; ++rep_i) {
    const Eigen::MatrixXd a = random_complex_matrix(4, rng).cwiseAbs();
    for (auto [q1, q2] : std::vector<std::pair<double, double>>{{1.0, 1.5}, {1.0, 3.0}, {2.0, 4.0}}) {
      EXPECT_TRUE(check_minkowski_mixed_norm(a, q1, q2).holds);
    }
  }
}

}  // namespace
}  // namespace zrlab
