#include "probekit/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace probekit::matcore {

namespace {

void check_finite(const Eigen::Ref<const Matrix>& A, const char* what) {
  if (!A.allFinite())
    throw input_error(std::string(what) + ": matrix contains non-finite entries");
}

}  // namespace

SvdFactors svd(const Eigen::Ref<const Matrix>& A) {
  check_finite(A, "svd");
  if (A.rows() < 1 || A.cols() < 1) throw input_error("svd: empty matrix");
  Eigen::JacobiSVD<Matrix> dec(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return SvdFactors{dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

Index rank_from_singular_values(const Vector& sigma) {
  if (sigma.size() == 0) return 0;
  const double cutoff = kRankCutoff * sigma(0);
  Index r = 0;
  while (r < sigma.size() && sigma(r) > cutoff && sigma(r) > 0.0) ++r;
  return r;
}

Index numerical_rank(const Eigen::Ref<const Matrix>& A) {
  return rank_from_singular_values(svd(A).sigma);
}

Matrix orthonormal_column_basis(const Eigen::Ref<const Matrix>& A) {
  const SvdFactors f = svd(A);
  const Index r = rank_from_singular_values(f.sigma);
  return f.U.leftCols(r);
}

Matrix top_k_right_basis(const Eigen::Ref<const Matrix>& A, Index k) {
  if (k < 1) throw input_error("top_k_right_basis: k must be >= 1");
  const SvdFactors f = svd(A);
  const Index r = rank_from_singular_values(f.sigma);
  if (k > r)
    throw numerical_error("top_k_right_basis: k=" + std::to_string(k) +
                          " exceeds numerical rank " + std::to_string(r));
  return f.V.leftCols(k).transpose();
}

QrPivotResult pivoted_qr(const Eigen::Ref<const Matrix>& M, Index max_steps) {
  check_finite(M, "pivoted_qr");
  const Index m = M.rows();
  const Index c = M.cols();
  Index steps = std::min(m, c);
  if (max_steps >= 0) steps = std::min(steps, max_steps);

  Matrix W = M;
  Matrix Q(m, steps);
  Matrix coeff = Matrix::Zero(steps, c);  // coeff(t, j) indexed by original column j
  std::vector<char> used(static_cast<std::size_t>(c), 0);
  std::vector<Index> pivots;
  pivots.reserve(static_cast<std::size_t>(c));

  double init_max_sq = 0.0;
  for (Index j = 0; j < c; ++j) init_max_sq = std::max(init_max_sq, W.col(j).squaredNorm());
  const double cutoff_sq = kRankCutoff * kRankCutoff * init_max_sq;

  Index rank = 0;
  for (Index t = 0; t < steps; ++t) {
    Index best = -1;
    double best_sq = -1.0;
    for (Index j = 0; j < c; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      const double sq = W.col(j).squaredNorm();
      if (sq > best_sq) {  // strict, so ties keep the lowest index
        best_sq = sq;
        best = j;
      }
    }
    if (best < 0 || best_sq <= cutoff_sq) break;

    used[static_cast<std::size_t>(best)] = 1;
    pivots.push_back(best);
    const double norm = std::sqrt(best_sq);
    const Vector q = W.col(best) / norm;
    Q.col(t) = q;
    coeff(t, best) = norm;
    for (Index j = 0; j < c; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      const double proj = q.dot(W.col(j));
      coeff(t, j) = proj;
      W.col(j) -= proj * q;
    }
    ++rank;
  }

  for (Index j = 0; j < c; ++j)
    if (!used[static_cast<std::size_t>(j)]) pivots.push_back(j);

  Matrix R(rank, c);
  for (Index s = 0; s < c; ++s) R.col(s) = coeff.block(0, pivots[static_cast<std::size_t>(s)], rank, 1);
  return QrPivotResult{std::move(pivots), std::move(R), rank};
}

std::vector<Index> pivoted_qr_select(const Eigen::Ref<const Matrix>& M, Index k) {
  if (k < 1) throw input_error("pivoted_qr_select: k must be >= 1");
  if (k > M.cols()) throw input_error("pivoted_qr_select: k exceeds column count");
  const QrPivotResult qr = pivoted_qr(M, k);
  if (qr.rank_estimate < k)
    throw numerical_error("pivoted_qr_select: numerical rank " +
                          std::to_string(qr.rank_estimate) + " is below k=" +
                          std::to_string(k));
  return std::vector<Index>(qr.pivot_order.begin(), qr.pivot_order.begin() + k);
}

Matrix pseudoinverse(const Eigen::Ref<const Matrix>& A) {
  const SvdFactors f = svd(A);
  const Index r = rank_from_singular_values(f.sigma);
  Matrix pinv = Matrix::Zero(A.cols(), A.rows());
  if (r > 0)
    pinv = f.V.leftCols(r) * f.sigma.head(r).cwiseInverse().asDiagonal() *
           f.U.leftCols(r).transpose();
  return pinv;
}

double matrix_norm(const Eigen::Ref<const Matrix>& A, Norm norm) {
  if (A.rows() == 0 || A.cols() == 0) return 0.0;
  if (norm == Norm::frobenius) return A.norm();
  Eigen::JacobiSVD<Matrix> dec(A);
  return dec.singularValues()(0);
}

double projection_error(const Eigen::Ref<const Matrix>& A,
                        const Eigen::Ref<const Matrix>& C, Norm norm) {
  check_finite(A, "projection_error");
  check_finite(C, "projection_error");
  if (C.rows() != A.rows())
    throw input_error("projection_error: row counts differ (" +
                      std::to_string(A.rows()) + " vs " + std::to_string(C.rows()) + ")");
  if (C.cols() == 0) return matrix_norm(A, norm);
  const Matrix Q = orthonormal_column_basis(C);
  if (Q.cols() == 0) return matrix_norm(A, norm);
  const Matrix residual = A - Q * (Q.transpose() * A);
  return matrix_norm(residual, norm);
}

double best_rank_k_error(const Eigen::Ref<const Matrix>& A, Index k, Norm norm) {
  if (k < 0 || k > std::min(A.rows(), A.cols()))
    throw input_error("best_rank_k_error: k out of range");
  const SvdFactors f = svd(A);
  if (norm == Norm::spectral) return k < f.sigma.size() ? f.sigma(k) : 0.0;
  double tail = 0.0;
  for (Index i = k; i < f.sigma.size(); ++i) tail += f.sigma(i) * f.sigma(i);
  return std::sqrt(std::max(0.0, tail));
}

}  // namespace probekit::matcore
