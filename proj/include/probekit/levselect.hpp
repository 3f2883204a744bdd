#pragma once

#include <cstdint>
#include <vector>

#include "probekit/matcore.hpp"
#include "probekit/types.hpp"

namespace probekit::levselect {

struct LeverageProfile {
  Vector scores;               // one per row of the basis, each in [0,1], sum = k
  Index k = 0;                 // rank parameter (basis column count)
  std::vector<Index> flagged;  // filled by flag_high_leverage when requested
};

struct ColumnSelection {
  std::vector<Index> indices;  // distinct, ascending
  std::vector<double> scales;  // per index; empty for unscaled selections
  double error_spectral = 0.0;
  double error_frobenius = 0.0;
  std::uint64_t seed = 0;
};

// Squared row norms of a column-orthonormal basis U; equivalently the
// diagonal of the projector U U^T.
LeverageProfile leverage_scores_from_basis(const Eigen::Ref<const Matrix>& U);

// Importance sampling probabilities from a k x n matrix with orthonormal
// rows: squared column norms divided by their total.
Vector sampling_probabilities_from_basis(const Eigen::Ref<const Matrix>& Vkt);

// p_i = ||column i of any top-k right basis||^2 / k. Invariant to the basis
// choice.
Vector column_sampling_probabilities(const Eigen::Ref<const Matrix>& A, Index k);

// Indices with score strictly above factor*k/n_or_m, ordered by descending
// score (ties by ascending index).
std::vector<Index> flag_high_leverage(const LeverageProfile& profile, Index n_or_m,
                                      double factor = 2.0);

// Running sums of the descending-sorted scores.
Vector cumulative_leverage(const LeverageProfile& profile);

// c draws with replacement from the column sampling probabilities; duplicate
// draws collapse to one index with the multiplicity folded into the scale
// 1/sqrt(c*p_i). Deterministic given the seed.
ColumnSelection sample_columns_relative_error(const Eigen::Ref<const Matrix>& A,
                                              Index k, Index c, std::uint64_t seed);

// Default randomized-phase sample count: ceil(2k ln(k+1)) + k.
Index default_sample_count(Index k);

// Two-stage selection: randomized draw of c rescaled columns of the top-k
// right basis (retried on rank loss), then pivoted QR on the sampled basis
// columns to pick exactly k, mapped back to columns of A.
ColumnSelection hybrid_cssp(const Eigen::Ref<const Matrix>& A, Index k, Index c,
                            std::uint64_t seed);

// Globally optimal k-column subset under projection_error, by enumeration.
// Guarded to C(n,k) <= 1e6; ties resolved to the lexicographically first set.
ColumnSelection exhaustive_cssp_oracle(const Eigen::Ref<const Matrix>& A, Index k,
                                       matcore::Norm norm);

}  // namespace probekit::levselect
