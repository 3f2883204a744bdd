#include "probekit/levselect.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "probekit/rng.hpp"

namespace probekit::levselect {

namespace {

constexpr int kMaxSampleAttempts = 21;  // initial draw plus 20 retries

void check_orthonormal_columns(const Eigen::Ref<const Matrix>& U, const char* what) {
  const Matrix gram = U.transpose() * U;
  const double dev = (gram - Matrix::Identity(U.cols(), U.cols())).cwiseAbs().maxCoeff();
  if (dev > 1e-8)
    throw input_error(std::string(what) + ": basis columns are not orthonormal (deviation " +
                      std::to_string(dev) + ")");
}

std::pair<double, double> selection_errors(const Eigen::Ref<const Matrix>& A,
                                           const std::vector<Index>& indices) {
  Matrix C(A.rows(), static_cast<Index>(indices.size()));
  for (std::size_t i = 0; i < indices.size(); ++i) C.col(static_cast<Index>(i)) = A.col(indices[i]);
  return {matcore::projection_error(A, C, matcore::Norm::spectral),
          matcore::projection_error(A, C, matcore::Norm::frobenius)};
}

double binomial_guarded(Index n, Index k) {
  double v = 1.0;
  for (Index i = 0; i < k; ++i) {
    v = v * static_cast<double>(n - i) / static_cast<double>(i + 1);
    if (v > 1e15) return v;
  }
  return v;
}

}  // namespace

LeverageProfile leverage_scores_from_basis(const Eigen::Ref<const Matrix>& U) {
  if (!U.allFinite()) throw input_error("leverage_scores_from_basis: non-finite basis");
  if (U.cols() < 1 || U.rows() < U.cols())
    throw input_error("leverage_scores_from_basis: basis must be tall with >= 1 column");
  check_orthonormal_columns(U, "leverage_scores_from_basis");
  LeverageProfile profile;
  profile.k = U.cols();
  profile.scores = U.rowwise().squaredNorm().cwiseMax(0.0).cwiseMin(1.0);
  return profile;
}

Vector sampling_probabilities_from_basis(const Eigen::Ref<const Matrix>& Vkt) {
  check_orthonormal_columns(Vkt.transpose(), "sampling_probabilities_from_basis");
  Vector sq = Vkt.colwise().squaredNorm();
  const double total = sq.sum();
  return sq / total;
}

Vector column_sampling_probabilities(const Eigen::Ref<const Matrix>& A, Index k) {
  return sampling_probabilities_from_basis(matcore::top_k_right_basis(A, k));
}

std::vector<Index> flag_high_leverage(const LeverageProfile& profile, Index n_or_m,
                                      double factor) {
  if (!(factor > 0.0)) throw input_error("flag_high_leverage: factor must be positive");
  if (n_or_m < 1) throw input_error("flag_high_leverage: population count must be >= 1");
  const double threshold =
      factor * static_cast<double>(profile.k) / static_cast<double>(n_or_m);
  std::vector<Index> flagged;
  for (Index i = 0; i < profile.scores.size(); ++i)
    if (profile.scores(i) > threshold) flagged.push_back(i);
  std::sort(flagged.begin(), flagged.end(), [&](Index a, Index b) {
    if (profile.scores(a) != profile.scores(b)) return profile.scores(a) > profile.scores(b);
    return a < b;
  });
  return flagged;
}

Vector cumulative_leverage(const LeverageProfile& profile) {
  std::vector<double> sorted(profile.scores.data(),
                             profile.scores.data() + profile.scores.size());
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  Vector cum(static_cast<Index>(sorted.size()));
  double running = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    running += sorted[i];
    cum(static_cast<Index>(i)) = running;
  }
  return cum;
}

Index default_sample_count(Index k) {
  return static_cast<Index>(
             std::ceil(2.0 * static_cast<double>(k) * std::log(static_cast<double>(k) + 1.0))) +
         k;
}

ColumnSelection sample_columns_relative_error(const Eigen::Ref<const Matrix>& A,
                                              Index k, Index c, std::uint64_t seed) {
  if (c < k) throw input_error("sample_columns_relative_error: c must be >= k");
  const Vector p = column_sampling_probabilities(A, k);
  const DiscreteSampler sampler(std::vector<double>(p.data(), p.data() + p.size()));

  Rng rng(seed);
  std::map<Index, int> multiplicity;
  for (Index t = 0; t < c; ++t) multiplicity[sampler.sample(rng)]++;

  ColumnSelection sel;
  sel.seed = seed;
  for (const auto& [idx, count] : multiplicity) {
    sel.indices.push_back(idx);
    sel.scales.push_back(std::sqrt(static_cast<double>(count) /
                                   (static_cast<double>(c) * p(idx))));
  }
  std::tie(sel.error_spectral, sel.error_frobenius) = selection_errors(A, sel.indices);
  return sel;
}

ColumnSelection hybrid_cssp(const Eigen::Ref<const Matrix>& A, Index k, Index c,
                            std::uint64_t seed) {
  if (c < k) throw input_error("hybrid_cssp: c must be >= k");
  const Matrix Vkt = matcore::top_k_right_basis(A, k);
  const Vector p = sampling_probabilities_from_basis(Vkt);
  const DiscreteSampler sampler(std::vector<double>(p.data(), p.data() + p.size()));

  std::vector<Index> draws(static_cast<std::size_t>(c));
  Matrix sampled(k, c);
  bool full_rank = false;
  for (int attempt = 0; attempt < kMaxSampleAttempts; ++attempt) {
    Rng rng(seed + static_cast<std::uint64_t>(attempt));
    for (Index j = 0; j < c; ++j) {
      const Index idx = sampler.sample(rng);
      draws[static_cast<std::size_t>(j)] = idx;
      sampled.col(j) = Vkt.col(idx) / std::sqrt(static_cast<double>(c) * p(idx));
    }
    if (matcore::numerical_rank(sampled) == k) {
      full_rank = true;
      break;
    }
  }
  if (!full_rank)
    throw numerical_error("hybrid_cssp: sampled basis stayed rank-deficient after " +
                          std::to_string(kMaxSampleAttempts) + " draws (seed=" +
                          std::to_string(seed) + ", k=" + std::to_string(k) +
                          ", c=" + std::to_string(c) + ")");

  const std::vector<Index> picked = matcore::pivoted_qr_select(sampled, k);
  ColumnSelection sel;
  sel.seed = seed;
  for (const Index pos : picked) sel.indices.push_back(draws[static_cast<std::size_t>(pos)]);
  std::sort(sel.indices.begin(), sel.indices.end());
  if (std::adjacent_find(sel.indices.begin(), sel.indices.end()) != sel.indices.end())
    throw numerical_error("hybrid_cssp: QR phase selected a duplicate column");
  std::tie(sel.error_spectral, sel.error_frobenius) = selection_errors(A, sel.indices);
  return sel;
}

ColumnSelection exhaustive_cssp_oracle(const Eigen::Ref<const Matrix>& A, Index k,
                                       matcore::Norm norm) {
  const Index n = A.cols();
  if (k < 1 || k > n) throw input_error("exhaustive_cssp_oracle: k out of range");
  if (binomial_guarded(n, k) > 1e6)
    throw guard_error("exhaustive_cssp_oracle: C(" + std::to_string(n) + "," +
                      std::to_string(k) + ") exceeds the 1e6 enumeration guard");

  std::vector<Index> combo(static_cast<std::size_t>(k));
  std::iota(combo.begin(), combo.end(), Index{0});
  std::vector<Index> best_combo;
  double best_err = 0.0;
  bool have_best = false;

  for (;;) {
    Matrix C(A.rows(), k);
    for (Index i = 0; i < k; ++i) C.col(i) = A.col(combo[static_cast<std::size_t>(i)]);
    const double err = matcore::projection_error(A, C, norm);
    if (!have_best || err < best_err) {  // strict: lexicographically first tie wins
      best_err = err;
      best_combo = combo;
      have_best = true;
    }
    // next combination in lexicographic order
    Index i = k - 1;
    while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++combo[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < k; ++j)
      combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
  }

  ColumnSelection sel;
  sel.indices = best_combo;
  std::tie(sel.error_spectral, sel.error_frobenius) = selection_errors(A, sel.indices);
  return sel;
}

}  // namespace probekit::levselect
