#include "ordfact/error.hpp"
#include "ordfact/lie_algebra.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace ordfact;
using ordfact::testing::nested_commutator_rank;
using ordfact::testing::random_hermitian;

namespace {

void expect_orthonormal_and_closed(const LieBasis& b) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    EXPECT_LE(hermiticity_defect(b.elements[i]), 1e-10);
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double expected = i == j ? 1.0 : 0.0;
      EXPECT_NEAR(std::abs(hs_inner(b.elements[i], b.elements[j]) - Complex(expected)), 0.0, 1e-9);
    }
  }
  EXPECT_LE(b.size(), b.dim_hilbert * b.dim_hilbert);
  if (!b.closed) return;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      EXPECT_LE(project(hermitian_commutator(b.elements[i], b.elements[j]), b).residual, 1e-8);
    }
  }
}

}  // namespace

TEST(Closure, AbelianSingleton) {
  const LieBasis b = closure({pauli::x()});
  EXPECT_EQ(b.size(), 1u);
  EXPECT_TRUE(b.closed);
  EXPECT_EQ(b.depth, 0);
  expect_orthonormal_and_closed(b);
}

TEST(Closure, TwoPaulisGenerateSu2) {
  const LieBasis b = closure({pauli::x(), pauli::y()});
  ASSERT_EQ(b.size(), 3u);
  EXPECT_TRUE(b.closed);
  // Third element is the normalized sigma_z direction.
  EXPECT_NEAR(std::abs(hs_inner(b.elements[2], pauli::z() / std::sqrt(2.0))), 1.0, 1e-12);
  ASSERT_TRUE(b.provenance[2].parents.has_value());
  EXPECT_EQ(*b.provenance[2].parents, std::make_pair(std::size_t{0}, std::size_t{1}));
  EXPECT_EQ(b.provenance[0].generator, 0u);
  expect_orthonormal_and_closed(b);
}

TEST(Closure, DependentGeneratorsAreDropped) {
  const LieBasis b = closure({pauli::z(), 2.0 * pauli::z(), pauli::identity()});
  EXPECT_EQ(b.size(), 2u);
  EXPECT_TRUE(b.closed);
}

TEST(Closure, RandomQutritPairMatchesNestedCommutatorRank) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 5; ++trial) {
    const std::vector<Matrix> gens{random_hermitian(rng, 3), random_hermitian(rng, 3)};
    const LieBasis b = closure(gens, 1e-9, 9);
    EXPECT_TRUE(b.closed);
    EXPECT_LE(b.size(), 9u);
    EXPECT_EQ(static_cast<int>(b.size()), nested_commutator_rank(gens, 6, 1e-9));
    expect_orthonormal_and_closed(b);
  }
}

TEST(Closure, TracelessQutritPairGivesSu3) {
  std::mt19937_64 rng(99);
  std::vector<Matrix> gens;
  for (int k = 0; k < 2; ++k) {
    Matrix g = random_hermitian(rng, 3);
    g -= (g.trace() / 3.0) * Matrix::Identity(3, 3);
    gens.push_back(g);
  }
  const LieBasis b = closure(gens);
  EXPECT_EQ(b.size(), 8u);
  EXPECT_EQ(nested_commutator_rank(gens, 6, 1e-9), 8);
}

TEST(Closure, GenericQubitPairIsThreeDimensional) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix a = random_hermitian(rng, 2);
    Matrix b = random_hermitian(rng, 2);
    a -= (a.trace() / 2.0) * Matrix::Identity(2, 2);
    b -= (b.trace() / 2.0) * Matrix::Identity(2, 2);
    EXPECT_EQ(closure({a, b}).size(), 3u);
  }
}

TEST(Closure, MaxDimStopsUnclosed) {
  const LieBasis b = closure({pauli::x(), pauli::y()}, 1e-9, 2);
  EXPECT_FALSE(b.closed);
  EXPECT_EQ(b.size(), 2u);
}

TEST(Closure, RerunReproducesSpan) {
  std::mt19937_64 rng(8);
  const LieBasis first = closure({random_hermitian(rng, 3), random_hermitian(rng, 3)});
  const LieBasis second = closure(first.elements);
  ASSERT_EQ(first.size(), second.size());
  for (const Matrix& e : first.elements) EXPECT_LE(project(e, second).residual, 1e-8);
  for (const Matrix& e : second.elements) EXPECT_LE(project(e, first).residual, 1e-8);
}

TEST(Closure, DeterministicForSameInput) {
  std::mt19937_64 rng(12);
  const std::vector<Matrix> gens{random_hermitian(rng, 3), random_hermitian(rng, 3)};
  const LieBasis a = closure(gens);
  const LieBasis b = closure(gens);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_TRUE(a.elements[k] == b.elements[k]);
    EXPECT_EQ(a.provenance[k], b.provenance[k]);
  }
}

TEST(Closure, Errors) {
  try {
    closure({});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyGeneratorList);
  }
  Matrix bad = pauli::x();
  bad(0, 1) = Complex(0.0, 1.0);
  try {
    closure({bad});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonHermitian);
  }
  try {
    closure({pauli::x(), Matrix::Identity(3, 3)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(Project, BasisElementAndOrthogonalComplement) {
  const LieBasis b = closure({pauli::x(), pauli::y()});
  const Projection p = project(b.elements[2], b);
  EXPECT_NEAR(p.coefficients[2], 1.0, 1e-12);
  EXPECT_NEAR(p.coefficients[0], 0.0, 1e-12);
  EXPECT_LE(p.residual, 1e-12);

  const Projection q = project(pauli::identity(), b);
  for (double c : q.coefficients) EXPECT_NEAR(c, 0.0, 1e-14);
  EXPECT_NEAR(q.residual, pauli::identity().norm(), 1e-14);
}

TEST(Project, RecoversRandomCombination) {
  std::mt19937_64 rng(4);
  const LieBasis b = closure({random_hermitian(rng, 3), random_hermitian(rng, 3)});
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<double> a(b.size());
  Matrix combo = Matrix::Zero(3, 3);
  for (std::size_t k = 0; k < b.size(); ++k) {
    a[k] = u(rng);
    combo += a[k] * b.elements[k];
  }
  const Projection p = project(combo, b);
  for (std::size_t k = 0; k < b.size(); ++k) EXPECT_NEAR(p.coefficients[k], a[k], 1e-9);
  EXPECT_LE(p.residual, 1e-9);
}

TEST(Candidates, LabelsFollowProvenance) {
  const LieBasis b = closure({pauli::x(), pauli::y()});
  const CandidateSet c = candidates_from_basis(b, {"sx", "sy"});
  ASSERT_EQ(c.labels.size(), 3u);
  EXPECT_EQ(c.labels[0], "sx");
  EXPECT_EQ(c.labels[2], "[sx,sy]");
  EXPECT_EQ(candidates_from_generators({pauli::z()}, {}).labels[0], "g0");
}
