#include "ordfact/error.hpp"
#include "ordfact/evolve.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace ordfact;
using ordfact::testing::constant_hamiltonian;
using ordfact::testing::random_hermitian;

namespace {

HamiltonianSpec driven_qubit() {
  HamiltonianSpec spec;
  spec.dim = 2;
  spec.generators = {pauli::z(), pauli::x()};
  spec.coefficients = {coeff::Constant{1.0}, coeff::Sinusoid{1.0, 5.0, 0.0}};
  return spec;
}

double final_gap(const HamiltonianSpec& spec, int k_a, int k_b) {
  return frob_distance(propagate(spec, 1.0, k_a).unitaries.back(), propagate(spec, 1.0, k_b).unitaries.back());
}

}  // namespace

TEST(Coefficients, KindsEvaluate) {
  EXPECT_DOUBLE_EQ(evaluate(coeff::Constant{0.5}, 3.0), 0.5);
  EXPECT_DOUBLE_EQ(evaluate(coeff::Polynomial{{1.0, -2.0, 3.0}}, 2.0), 1.0 - 4.0 + 12.0);
  EXPECT_DOUBLE_EQ(evaluate(coeff::Sinusoid{1.0, 2.0, 0.0}, 0.0), 1.0);
  EXPECT_NEAR(evaluate(coeff::Sinusoid{2.0, 1.0, 0.5}, 1.0), 2.0 * std::cos(1.5), 1e-15);
}

TEST(Coefficients, TableInterpolatesAndRejectsOutside) {
  const coeff::Table tab{{{0.0, 0.0}, {1.0, 2.0}, {3.0, -2.0}}};
  // Two-point line through the bracketing samples.
  auto line = [](double t0, double v0, double t1, double v1, double t) { return v0 + (t - t0) * (v1 - v0) / (t1 - t0); };
  EXPECT_NEAR(evaluate(tab, 0.25), line(0.0, 0.0, 1.0, 2.0, 0.25), 1e-15);
  EXPECT_NEAR(evaluate(tab, 2.5), line(1.0, 2.0, 3.0, -2.0, 2.5), 1e-15);
  EXPECT_DOUBLE_EQ(evaluate(tab, 3.0), -2.0);
  try {
    evaluate(tab, 3.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfTableRange);
  }
  EXPECT_THROW(validate(CoefficientFunction{coeff::Table{{{0.0, 1.0}, {0.0, 2.0}}}}), Error);
}

TEST(HamiltonianAt, Examples) {
  const HamiltonianSpec c = constant_hamiltonian({pauli::z()}, {0.5});
  EXPECT_LE(frob_distance(hamiltonian_at(c, 3.0), 0.5 * pauli::z()), 1e-15);

  HamiltonianSpec s;
  s.dim = 2;
  s.generators = {pauli::x()};
  s.coefficients = {coeff::Sinusoid{1.0, 2.0, 0.0}};
  EXPECT_LE(frob_distance(hamiltonian_at(s, 0.0), pauli::x()), 1e-15);

  HamiltonianSpec t;
  t.dim = 2;
  t.generators = {pauli::y()};
  t.coefficients = {coeff::Table{{{0.0, 0.0}, {1.0, 2.0}}}};
  EXPECT_LE(frob_distance(hamiltonian_at(t, 0.25), 0.5 * pauli::y()), 1e-15);
  EXPECT_THROW(hamiltonian_at(t, 1.5), Error);
}

TEST(Propagate, ConstantHamiltonianIsExact) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix g = random_hermitian(rng, 3);
    const HamiltonianSpec spec = constant_hamiltonian({g}, {1.0});
    for (int k : {1, 7, 64}) {
      const PropagatorTable table = propagate(spec, 1.3, k);
      EXPECT_LE(frob_distance(table.unitaries.back(), herm_expm(g, 1.3)), 1e-10);
    }
  }
}

TEST(Propagate, CommutingFamilyMatchesIntegratedPhase) {
  // Linear coefficients are integrated exactly by the midpoint rule.
  HamiltonianSpec lin;
  lin.dim = 2;
  lin.generators = {pauli::z()};
  lin.coefficients = {coeff::Polynomial{{0.4, 1.2}}};
  EXPECT_LE(frob_distance(propagate(lin, 1.0, 64).unitaries.back(), herm_expm(pauli::z(), 0.4 + 0.6)), 1e-12);

  // f(t) = 0.3 + 1.1 t - 0.9 t^2 + 0.4 t^3, integral over [0, 1] by hand.
  HamiltonianSpec cubic = lin;
  cubic.coefficients = {coeff::Polynomial{{0.3, 1.1, -0.9, 0.4}}};
  const double integral = 0.3 + 1.1 / 2.0 - 0.9 / 3.0 + 0.4 / 4.0;
  EXPECT_LE(frob_distance(propagate(cubic, 1.0, 2048).unitaries.back(), herm_expm(pauli::z(), integral)), 5e-8);
}

TEST(Propagate, RichardsonSelfConsistency) {
  const HamiltonianSpec spec = driven_qubit();
  const double coarse = final_gap(spec, 512, 1024);
  const double fine = final_gap(spec, 1024, 2048);
  EXPECT_GE(coarse / fine, 3.4);
  EXPECT_LE(coarse / fine, 4.5);
}

TEST(Propagate, SecondOrderConvergence) {
  const HamiltonianSpec spec = driven_qubit();
  const Matrix reference = propagate(spec, 1.0, 8192).unitaries.back();
  double previous = -1.0;
  for (int k : {256, 512, 1024}) {
    const double err = frob_distance(propagate(spec, 1.0, k).unitaries.back(), reference);
    if (previous > 0.0) {
      EXPECT_GE(previous / err, 3.4) << "K=" << k;
      EXPECT_LE(previous / err, 4.6) << "K=" << k;
    }
    previous = err;
  }
}

TEST(Propagate, EntriesStayUnitaryAndStartAtIdentity) {
  const PropagatorTable table = propagate(driven_qubit(), 2.0, 300);
  ASSERT_EQ(table.unitaries.size(), 301u);
  EXPECT_TRUE(table.unitaries.front() == Matrix::Identity(2, 2));
  for (const Matrix& u : table.unitaries) EXPECT_LE(unitarity_defect(u), 1e-9);
  EXPECT_GT(table.estimated_error, 0.0);
  EXPECT_LT(table.estimated_error, 1e-4);
}

TEST(Propagate, StoredEntriesReproduceStepping) {
  const HamiltonianSpec spec = driven_qubit();
  const int k_grid = 16;
  const PropagatorTable table = propagate(spec, 1.0, k_grid);
  const double dt = 1.0 / (2 * k_grid);
  for (int k = 0; k < k_grid; ++k) {
    Matrix u = table.unitaries[static_cast<std::size_t>(k)];
    u = midpoint_step(spec, (2 * k) * dt, dt) * u;
    u = midpoint_step(spec, (2 * k + 1) * dt, dt) * u;
    EXPECT_TRUE(u == table.unitaries[static_cast<std::size_t>(k + 1)]) << "k=" << k;
  }
}

TEST(Propagate, Errors) {
  const HamiltonianSpec spec = constant_hamiltonian({pauli::x()}, {1.0});
  try {
    propagate(spec, 1.0, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidStepCount);
  }
  HamiltonianSpec table_spec;
  table_spec.dim = 2;
  table_spec.generators = {pauli::x()};
  table_spec.coefficients = {coeff::Table{{{0.0, 1.0}, {0.5, 1.0}}}};
  try {
    propagate(table_spec, 1.0, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfTableRange);
  }
  HamiltonianSpec mismatched = spec;
  mismatched.coefficients.push_back(coeff::Constant{1.0});
  EXPECT_THROW(propagate(mismatched, 1.0, 4), Error);
}

TEST(TargetAt, SnapsToNearestGridTime) {
  const PropagatorTable table = propagate(constant_hamiltonian({pauli::x()}, {0.7}), 1.0, 4);
  EXPECT_TRUE(*target_at(table, 0.0).unitary == Matrix::Identity(2, 2));
  EXPECT_EQ(target_at(table, 1.0).unitary, &table.unitaries.back());
  const GridSample g = target_at(table, 0.26);
  EXPECT_EQ(g.index, 1);
  EXPECT_DOUBLE_EQ(g.time, 0.25);
  EXPECT_EQ(target_at(table, 1.1).index, 4);
  for (double bad : {-0.2, 1.2}) {
    try {
      target_at(table, bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::OffGrid);
    }
  }
}
