#include "ordfact/lie_algebra.hpp"

#include "ordfact/error.hpp"

#include <cmath>

namespace ordfact {

namespace {

// Orthogonalizes `candidate` against `basis` with modified Gram-Schmidt, run
// twice to suppress cancellation. Returns the normalized residual when its
// norm relative to the input exceeds tol_rank.
std::optional<Matrix> orthogonal_residual(const Matrix& candidate, const std::vector<Matrix>& basis,
                                          double tol_rank) {
  const double scale = candidate.norm();
  if (scale == 0.0 || !std::isfinite(scale)) return std::nullopt;
  Matrix r = candidate;
  for (int pass = 0; pass < 2; ++pass) {
    for (const Matrix& e : basis) {
      r -= hs_inner(e, r).real() * e;
    }
  }
  // Re-hermitize: projections keep r Hermitian up to rounding only.
  r = 0.5 * (r + r.adjoint()).eval();
  const double rn = r.norm();
  if (rn / scale <= tol_rank) return std::nullopt;
  return Matrix(r / rn);
}

}  // namespace

LieBasis closure(const std::vector<Matrix>& generators, double tol_rank, std::size_t max_dim) {
  if (generators.empty()) {
    throw Error(ErrorCode::EmptyGeneratorList, "closure needs at least one generator");
  }
  const Matrix& first = generators.front();
  require_square(first, "generator");
  for (const Matrix& g : generators) {
    require_same_dim(first, g);
    require_hermitian(g);
  }
  const auto d = static_cast<std::size_t>(first.rows());
  if (max_dim == 0) max_dim = d * d;
  if (max_dim < generators.size()) {
    throw Error(ErrorCode::InvalidArgument, "max_dim smaller than the generator count");
  }

  LieBasis out;
  out.dim_hilbert = d;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (auto e = orthogonal_residual(generators[i], out.elements, tol_rank)) {
      out.elements.push_back(std::move(*e));
      out.provenance.push_back(Provenance{i, std::nullopt});
    }
  }

  // Pairs (i, j) with both indices below `examined` were handled by an
  // earlier sweep.
  std::size_t examined = 0;
  while (true) {
    const std::size_t n = out.elements.size();
    bool added = false;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (j < examined) continue;
        const Matrix c = hermitian_commutator(out.elements[i], out.elements[j]);
        auto e = orthogonal_residual(c, out.elements, tol_rank);
        if (!e) continue;
        if (out.elements.size() + 1 > max_dim) {
          out.closed = false;
          return out;
        }
        out.elements.push_back(std::move(*e));
        out.provenance.push_back(Provenance{std::nullopt, std::make_pair(i, j)});
        added = true;
      }
    }
    examined = n;
    if (!added) break;
    ++out.depth;
  }
  out.closed = true;
  return out;
}

Projection project(const Matrix& a, const LieBasis& basis) {
  require_hermitian(a);
  if (static_cast<std::size_t>(a.rows()) != basis.dim_hilbert) {
    throw Error(ErrorCode::DimensionMismatch, "operand dimension differs from the basis");
  }
  Projection p;
  Matrix recon = Matrix::Zero(a.rows(), a.cols());
  p.coefficients.reserve(basis.size());
  for (const Matrix& e : basis.elements) {
    const double c = hs_inner(e, a).real();
    p.coefficients.push_back(c);
    recon += c * e;
  }
  p.residual = frob_distance(a, recon);
  return p;
}

CandidateSet candidates_from_basis(const LieBasis& basis, const std::vector<std::string>& generator_labels) {
  CandidateSet set;
  set.elements = basis.elements;
  set.labels.reserve(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Provenance& p = basis.provenance[k];
    if (p.generator) {
      const std::size_t g = *p.generator;
      set.labels.push_back(g < generator_labels.size() ? generator_labels[g] : "g" + std::to_string(g));
    } else {
      set.labels.push_back("[" + set.labels[p.parents->first] + "," + set.labels[p.parents->second] + "]");
    }
  }
  return set;
}

CandidateSet candidates_from_generators(const std::vector<Matrix>& generators,
                                        const std::vector<std::string>& labels) {
  if (generators.empty()) throw Error(ErrorCode::EmptyCandidates, "no generators given");
  CandidateSet set;
  set.elements = generators;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    require_same_dim(generators.front(), generators[k]);
    require_hermitian(generators[k]);
    set.labels.push_back(k < labels.size() ? labels[k] : "g" + std::to_string(k));
  }
  return set;
}

}  // namespace ordfact
