#include "probekit/lsq.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "probekit/errors.hpp"
#include "probekit/matcore.hpp"
#include "probekit/rng.hpp"

namespace probekit::lsq {

namespace {

constexpr int kMaxSampleAttempts = 21;  // initial draw plus 20 retries

Vector pinv_solve(const matcore::SvdFactors& f, Index rank, const Vector& rhs) {
  return f.V.leftCols(rank) *
         (f.sigma.head(rank).cwiseInverse().asDiagonal() *
          (f.U.leftCols(rank).transpose() * rhs));
}

}  // namespace

void validate_problem(const LsProblem& p) {
  if (!p.A.allFinite() || !p.b.allFinite())
    throw input_error("least squares: non-finite entries");
  if (p.A.rows() < p.A.cols() || p.A.cols() < 1)
    throw input_error("least squares: need m >= n >= 1, got " +
                      std::to_string(p.A.rows()) + "x" + std::to_string(p.A.cols()));
  if (p.b.size() != p.A.rows())
    throw input_error("least squares: rhs length " + std::to_string(p.b.size()) +
                      " does not match row count " + std::to_string(p.A.rows()));
}

LsSolution exact_ls(const LsProblem& p) {
  validate_problem(p);
  const matcore::SvdFactors f = matcore::svd(p.A);
  const Index rank = matcore::rank_from_singular_values(f.sigma);
  if (rank < p.A.cols())
    throw numerical_error("exact_ls: matrix is rank deficient (numerical rank " +
                          std::to_string(rank) + " < " + std::to_string(p.A.cols()) + ")");
  LsSolution sol;
  sol.x = pinv_solve(f, rank, p.b);
  sol.residual_norm = (p.b - p.A * sol.x).norm();
  return sol;
}

Vector row_leverage_probabilities(const Eigen::Ref<const Matrix>& A) {
  const Matrix U = matcore::orthonormal_column_basis(A);
  if (U.cols() < A.cols())
    throw numerical_error("row_leverage_probabilities: matrix is rank deficient (numerical rank " +
                          std::to_string(U.cols()) + " < " + std::to_string(A.cols()) + ")");
  Vector scores = U.rowwise().squaredNorm();
  return scores / scores.sum();
}

LsSolution sampled_ls(const LsProblem& p, Index r, std::uint64_t seed) {
  validate_problem(p);
  const Index m = p.A.rows();
  const Index n = p.A.cols();
  if (r < n || r > m)
    throw input_error("sampled_ls: need n <= r <= m, got r=" + std::to_string(r));

  const Vector probs = row_leverage_probabilities(p.A);
  const DiscreteSampler sampler(std::vector<double>(probs.data(), probs.data() + probs.size()));

  Matrix As(r, n);
  Vector bs(r);
  std::vector<Index> rows(static_cast<std::size_t>(r));
  for (int attempt = 0; attempt < kMaxSampleAttempts; ++attempt) {
    Rng rng(seed + static_cast<std::uint64_t>(attempt));
    for (Index t = 0; t < r; ++t) {
      const Index i = sampler.sample(rng);
      rows[static_cast<std::size_t>(t)] = i;
      const double w = 1.0 / std::sqrt(static_cast<double>(r) * probs(i));
      As.row(t) = p.A.row(i) * w;
      bs(t) = p.b(i) * w;
    }
    const matcore::SvdFactors f = matcore::svd(As);
    if (matcore::rank_from_singular_values(f.sigma) == n) {
      LsSolution sol;
      sol.x = pinv_solve(f, n, bs);
      sol.residual_norm = (p.b - p.A * sol.x).norm();
      std::sort(rows.begin(), rows.end());
      sol.sampled_rows = std::move(rows);
      sol.seed = seed;
      return sol;
    }
  }
  throw numerical_error("sampled_ls: sampled rows stayed rank-deficient after " +
                        std::to_string(kMaxSampleAttempts) + " draws (seed=" +
                        std::to_string(seed) + ", r=" + std::to_string(r) + ")");
}

Index padded_size(Index m) {
  return static_cast<Index>(std::bit_ceil(static_cast<std::uint64_t>(m)));
}

void fwht_inplace(Eigen::Ref<Vector> v) {
  const Index len = v.size();
  if (len < 1 || !std::has_single_bit(static_cast<std::uint64_t>(len)))
    throw input_error("fwht_inplace: length must be a power of two");
  for (Index h = 1; h < len; h *= 2) {
    for (Index start = 0; start < len; start += 2 * h) {
      for (Index j = start; j < start + h; ++j) {
        const double a = v(j);
        const double b = v(j + h);
        v(j) = a + b;
        v(j + h) = a - b;
      }
    }
  }
  v /= std::sqrt(static_cast<double>(len));
}

LsSolution srht_ls(const LsProblem& p, Index r, std::uint64_t seed) {
  validate_problem(p);
  const Index m = p.A.rows();
  const Index n = p.A.cols();
  const Index m_pad = padded_size(m);
  if (r < n || r > m_pad)
    throw input_error("srht_ls: need n <= r <= padded row count " +
                      std::to_string(m_pad) + ", got r=" + std::to_string(r));

  const double keep_scale = std::sqrt(static_cast<double>(m_pad) / static_cast<double>(r));
  Matrix As(r, n);
  Vector bs(r);
  std::vector<Index> rows(static_cast<std::size_t>(r));
  for (int attempt = 0; attempt < kMaxSampleAttempts; ++attempt) {
    Rng rng(seed + static_cast<std::uint64_t>(attempt));

    Matrix T = Matrix::Zero(m_pad, n + 1);
    for (Index i = 0; i < m; ++i) {
      const double sign = (rng.bits() & 1u) ? 1.0 : -1.0;
      T.row(i).head(n) = p.A.row(i) * sign;
      T(i, n) = p.b(i) * sign;
    }
    for (Index j = 0; j <= n; ++j) fwht_inplace(T.col(j));

    // r distinct rows, uniform via partial Fisher-Yates
    std::vector<Index> pool(static_cast<std::size_t>(m_pad));
    std::iota(pool.begin(), pool.end(), Index{0});
    for (Index t = 0; t < r; ++t) {
      const Index j = t + static_cast<Index>(rng.uniform_index(
                              static_cast<std::uint64_t>(m_pad - t)));
      std::swap(pool[static_cast<std::size_t>(t)], pool[static_cast<std::size_t>(j)]);
    }
    std::copy(pool.begin(), pool.begin() + r, rows.begin());
    std::sort(rows.begin(), rows.end());

    for (Index t = 0; t < r; ++t) {
      As.row(t) = T.row(rows[static_cast<std::size_t>(t)]).head(n) * keep_scale;
      bs(t) = T(rows[static_cast<std::size_t>(t)], n) * keep_scale;
    }
    const matcore::SvdFactors f = matcore::svd(As);
    if (matcore::rank_from_singular_values(f.sigma) == n) {
      LsSolution sol;
      sol.x = pinv_solve(f, n, bs);
      sol.residual_norm = (p.b - p.A * sol.x).norm();
      sol.sampled_rows = rows;
      sol.seed = seed;
      return sol;
    }
  }
  throw numerical_error("srht_ls: sampled rows stayed rank-deficient after " +
                        std::to_string(kMaxSampleAttempts) + " draws (seed=" +
                        std::to_string(seed) + ", r=" + std::to_string(r) + ")");
}

}  // namespace probekit::lsq
