#pragma once

#include "ordfact/matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ordfact {

// Where a basis element came from: either a (Gram-Schmidt reduced) input
// generator, or the Hermitian commutator of two earlier basis elements.
struct Provenance {
  std::optional<std::size_t> generator;
  std::optional<std::pair<std::size_t, std::size_t>> parents;

  bool operator==(const Provenance&) const = default;
};

// Hilbert-Schmidt orthonormal basis of the commutator closure of a set of
// Hermitian generators.
struct LieBasis {
  std::size_t dim_hilbert = 0;
  std::vector<Matrix> elements;
  bool closed = false;
  int depth = 0;
  std::vector<Provenance> provenance;

  std::size_t size() const { return elements.size(); }
};

inline constexpr double kDefaultRankTol = 1e-9;

/// Breadth-first commutator closure. Sweeps add (-i)[e_i, e_j] for every pair
/// not examined before; stops when a sweep adds nothing (closed) or the basis
/// would grow past max_dim (not closed).
LieBasis closure(const std::vector<Matrix>& generators, double tol_rank = kDefaultRankTol,
                 std::size_t max_dim = 0);

struct Projection {
  std::vector<double> coefficients;
  double residual = 0.0;
};

Projection project(const Matrix& a, const LieBasis& basis);

/// Elements of a candidate set for the greedy search. A closure basis and the
/// raw Hamiltonian generators are the two usual sources.
struct CandidateSet {
  std::vector<Matrix> elements;
  std::vector<std::string> labels;

  std::size_t size() const { return elements.size(); }
  std::size_t dim() const { return elements.empty() ? 0 : static_cast<std::size_t>(elements.front().rows()); }
};

/// Labels follow provenance: seeds reuse their generator label, commutators
/// are written "[a,b]".
CandidateSet candidates_from_basis(const LieBasis& basis, const std::vector<std::string>& generator_labels);
CandidateSet candidates_from_generators(const std::vector<Matrix>& generators,
                                        const std::vector<std::string>& labels);

}  // namespace ordfact
