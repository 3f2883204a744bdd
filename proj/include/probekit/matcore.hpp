#pragma once

#include <vector>

#include "probekit/errors.hpp"
#include "probekit/types.hpp"

namespace probekit::matcore {

// Relative cutoff below which singular values and QR pivot norms count as zero.
inline constexpr double kRankCutoff = 1e-10;

struct SvdFactors {
  Matrix U;      // m x r, orthonormal columns
  Vector sigma;  // r, non-increasing, >= 0
  Matrix V;      // n x r, orthonormal columns
};

struct QrPivotResult {
  std::vector<Index> pivot_order;  // permutation of all column indices
  Matrix R;                        // upper triangular, columns in pivot order
  Index rank_estimate;
};

enum class Norm { spectral, frobenius };

// Thin SVD. Deterministic for a given input.
SvdFactors svd(const Eigen::Ref<const Matrix>& A);

Index rank_from_singular_values(const Vector& sigma);
Index numerical_rank(const Eigen::Ref<const Matrix>& A);

// Orthonormal basis of the column space, truncated to the numerical rank.
Matrix orthonormal_column_basis(const Eigen::Ref<const Matrix>& A);

// k x n matrix with orthonormal rows spanning the top-k right singular
// subspace of A. Any valid basis may be returned; callers must not depend
// on the particular one.
Matrix top_k_right_basis(const Eigen::Ref<const Matrix>& A, Index k);

// Greedy residual-column-norm pivoting (Businger-Golub), ties broken by the
// lowest column index. Stops at max_steps or when the residual norms fall
// under kRankCutoff times the largest initial column norm.
QrPivotResult pivoted_qr(const Eigen::Ref<const Matrix>& M, Index max_steps = -1);

// First k pivot columns of the factorization above; rank-deficiency error if
// fewer than k numerically independent columns exist.
std::vector<Index> pivoted_qr_select(const Eigen::Ref<const Matrix>& M, Index k);

// Moore-Penrose pseudoinverse via the SVD with the kRankCutoff threshold.
Matrix pseudoinverse(const Eigen::Ref<const Matrix>& A);

double matrix_norm(const Eigen::Ref<const Matrix>& A, Norm norm);

// ||A - C C^+ A|| in the requested norm; zero when col-space(C) covers
// col-space(A).
double projection_error(const Eigen::Ref<const Matrix>& A,
                        const Eigen::Ref<const Matrix>& C, Norm norm);

// Error of the best rank-k approximation: sigma_{k+1} for the spectral norm,
// sqrt of the tail sum of squared singular values for Frobenius.
double best_rank_k_error(const Eigen::Ref<const Matrix>& A, Index k, Norm norm);

}  // namespace probekit::matcore
