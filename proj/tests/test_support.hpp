#pragma once

#include "ordfact/evolve.hpp"
#include "ordfact/matrix.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace ordfact::testing {

inline Matrix random_hermitian(std::mt19937_64& rng, int d, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  Matrix a(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) a(r, c) = Complex(n(rng), n(rng));
  }
  return 0.5 * (a + a.adjoint());
}

// Haar-ish unitary from the QR of a complex Gaussian matrix.
inline Matrix random_unitary(std::mt19937_64& rng, int d) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix a(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) a(r, c) = Complex(n(rng), n(rng));
  }
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  for (int c = 0; c < d; ++c) {
    const Complex diag = qr.matrixQR()(c, c);
    q.col(c) *= std::abs(diag) > 0 ? diag / std::abs(diag) : Complex(1.0);
  }
  return q;
}

// Entrywise double-loop Frobenius distance.
inline double loop_frobenius(const Matrix& u, const Matrix& v) {
  double acc = 0.0;
  for (Eigen::Index r = 0; r < u.rows(); ++r) {
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
      const double dr = u(r, c).real() - v(r, c).real();
      const double di = u(r, c).imag() - v(r, c).imag();
      acc += dr * dr + di * di;
    }
  }
  return std::sqrt(acc);
}

// Dimension of the Lie algebra generated by `gens`, estimated as the numerical
// rank of the Gram matrix of all right-nested commutators
// [g_i1, [g_i2, ... g_ik]] up to the given depth. Independent of the
// Gram-Schmidt sweep used by closure().
inline int nested_commutator_rank(const std::vector<Matrix>& gens, int depth, double tol) {
  std::vector<Matrix> all;
  std::vector<Matrix> level;
  for (const Matrix& g : gens) {
    all.push_back(g / g.norm());
    level.push_back(g);
  }
  const Complex minus_i(0.0, -1.0);
  for (int k = 2; k <= depth; ++k) {
    std::vector<Matrix> next;
    for (const Matrix& g : gens) {
      for (const Matrix& inner : level) {
        Matrix c = minus_i * (g * inner - inner * g);
        const double n = c.norm();
        if (n < 1e-12) continue;
        c /= n;
        next.push_back(c);
        all.push_back(c);
      }
    }
    level = std::move(next);
  }
  const auto m = static_cast<Eigen::Index>(all.size());
  Eigen::MatrixXd gram(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) gram(i, j) = (all[i].adjoint() * all[j]).trace().real();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
  const double top = eig.eigenvalues().maxCoeff();
  int rank = 0;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (eig.eigenvalues()(i) > tol * top) ++rank;
  }
  return rank;
}

inline HamiltonianSpec constant_hamiltonian(const std::vector<Matrix>& gens, const std::vector<double>& coeffs) {
  HamiltonianSpec spec;
  spec.dim = static_cast<std::size_t>(gens.front().rows());
  spec.generators = gens;
  for (double c : coeffs) spec.coefficients.push_back(coeff::Constant{c});
  return spec;
}

}  // namespace ordfact::testing
