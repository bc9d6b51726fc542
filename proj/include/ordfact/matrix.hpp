#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string_view>

namespace ordfact {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kDefaultHermTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-8;

enum class MatchMetric { Frobenius, PhaseInvariant };

std::string_view to_string(MatchMetric metric);
MatchMetric parse_metric(std::string_view name);

/// Largest entrywise |A - A^dagger|; infinity for non-square input.
double hermiticity_defect(const Matrix& a);

void require_square(const Matrix& a, const char* what);
void require_same_dim(const Matrix& a, const Matrix& b);
void require_hermitian(const Matrix& a, double tol = kDefaultHermTol);

/// exp(-i theta G) through the spectral decomposition of the Hermitian G.
Matrix herm_expm(const Matrix& g, double theta, double tol_herm = kDefaultHermTol);

double frob_distance(const Matrix& u, const Matrix& v);

/// Agreement of two unitaries normalized to [0, 1]. Frobenius maps distance
/// through 1 - d/(2 sqrt(dim)); phase-invariant is |tr(U^dagger V)| / dim.
double score(const Matrix& u, const Matrix& v, MatchMetric metric);

double unitarity_defect(const Matrix& u);

/// Hilbert-Schmidt inner product tr(A^dagger B).
Complex hs_inner(const Matrix& a, const Matrix& b);

/// -i [A, B], which is Hermitian whenever A and B are.
Matrix hermitian_commutator(const Matrix& a, const Matrix& b);

namespace pauli {
Matrix identity();
Matrix x();
Matrix y();
Matrix z();
}  // namespace pauli

}  // namespace ordfact
