#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "probekit/types.hpp"

namespace probekit::lsq {

// Overconstrained problem: minimize ||Ax - b||_2 with m >= n.
struct LsProblem {
  Matrix A;
  Vector b;
};

struct LsSolution {
  Vector x;
  double residual_norm = 0.0;        // ||b - Ax|| on the original problem
  std::vector<Index> sampled_rows;   // ascending, duplicates kept; empty for exact
  std::optional<std::uint64_t> seed;
};

void validate_problem(const LsProblem& p);

// Pseudoinverse-based exact solve; rank-deficiency error names the numerical
// rank.
LsSolution exact_ls(const LsProblem& p);

// Row leverage probabilities p_i = ||U^{(i)}||^2 / n for the full column
// basis U of A.
Vector row_leverage_probabilities(const Eigen::Ref<const Matrix>& A);

// Samples r rows with replacement by row leverage, rescales each drawn row
// and rhs entry by 1/sqrt(r*p_i), and solves the subproblem exactly.
LsSolution sampled_ls(const LsProblem& p, Index r, std::uint64_t seed);

// Randomized Hadamard preconditioning: pad m to a power of two with zero
// rows, apply a random sign diagonal and the normalized Walsh-Hadamard
// transform, keep r uniformly chosen rows rescaled by sqrt(m_pad/r), solve
// exactly. Row ids in the result refer to the padded, transformed system.
LsSolution srht_ls(const LsProblem& p, Index r, std::uint64_t seed);

// In-place normalized fast Walsh-Hadamard transform; length must be a power
// of two. Orthonormal, hence an isometry.
void fwht_inplace(Eigen::Ref<Vector> v);

Index padded_size(Index m);

}  // namespace probekit::lsq
