#include "ordfact/matrix.hpp"

#include "ordfact/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ordfact {

std::string_view to_string(MatchMetric metric) {
  return metric == MatchMetric::Frobenius ? "frobenius" : "phase-invariant";
}

MatchMetric parse_metric(std::string_view name) {
  if (name == "frobenius") return MatchMetric::Frobenius;
  if (name == "phase-invariant") return MatchMetric::PhaseInvariant;
  throw Error(ErrorCode::InvalidArgument, "unknown metric '" + std::string(name) + "'");
}

double hermiticity_defect(const Matrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

void require_square(const Matrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() < 1) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " must be a non-empty square matrix, got " +
                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

void require_same_dim(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

void require_hermitian(const Matrix& a, double tol) {
  require_square(a, "generator");
  const double defect = hermiticity_defect(a);
  if (!(defect <= tol)) {
    throw Error(ErrorCode::NonHermitian, "max |G - G^dagger| = " + std::to_string(defect));
  }
}

Matrix herm_expm(const Matrix& g, double theta, double tol_herm) {
  require_hermitian(g, tol_herm);
  if (theta == 0.0 || g.isZero(0.0)) return Matrix::Identity(g.rows(), g.cols());
  // Symmetrize so the eigensolver sees an exactly self-adjoint input.
  const Matrix h = 0.5 * (g + g.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(h);
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  const Matrix& v = eig.eigenvectors();
  Eigen::VectorXcd phases(lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    phases(k) = std::polar(1.0, -theta * lambda(k));
  }
  return v * phases.asDiagonal() * v.adjoint();
}

double frob_distance(const Matrix& u, const Matrix& v) {
  require_same_dim(u, v);
  return (u - v).norm();
}

double score(const Matrix& u, const Matrix& v, MatchMetric metric) {
  require_square(u, "score operand");
  require_same_dim(u, v);
  if (!(unitarity_defect(u) <= kUnitaryTol) || !(unitarity_defect(v) <= kUnitaryTol)) {
    throw Error(ErrorCode::NotUnitary, "score operands must be unitary within 1e-8");
  }
  const double d = static_cast<double>(u.rows());
  double s = 0.0;
  if (metric == MatchMetric::Frobenius) {
    s = 1.0 - frob_distance(u, v) / (2.0 * std::sqrt(d));
  } else {
    s = std::abs((u.adjoint() * v).trace()) / d;
  }
  return std::clamp(s, 0.0, 1.0);
}

double unitarity_defect(const Matrix& u) {
  require_square(u, "matrix");
  return frob_distance(u.adjoint() * u, Matrix::Identity(u.rows(), u.cols()));
}

Complex hs_inner(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  return (a.adjoint() * b).trace();
}

Matrix hermitian_commutator(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  const Complex minus_i(0.0, -1.0);
  return minus_i * (a * b - b * a);
}

namespace pauli {

Matrix identity() { return Matrix::Identity(2, 2); }

Matrix x() {
  Matrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Matrix y() {
  Matrix m(2, 2);
  m << Complex(0.0, 0.0), Complex(0.0, -1.0), Complex(0.0, 1.0), Complex(0.0, 0.0);
  return m;
}

Matrix z() {
  Matrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

}  // namespace pauli

}  // namespace ordfact
