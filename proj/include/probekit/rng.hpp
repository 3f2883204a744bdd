#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "probekit/errors.hpp"

namespace probekit {

// Deterministic random source. mt19937_64 has a standard-specified output
// sequence; every derived draw below avoids std:: distributions, whose
// results are implementation-defined and would break byte-reproducibility
// across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  bool coin(double p) { return uniform() < p; }

  // Uniform in {0, ..., n-1}, rejection sampled so the result is unbiased.
  std::uint64_t uniform_index(std::uint64_t n) {
    if (n == 0) throw input_error("uniform_index: n must be positive");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

  // Standard normal via Box-Muller; second value cached.
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    cached_ = r * std::sin(theta);
    have_cached_ = true;
    return r * std::cos(theta);
  }

  // Number of failures before the first success, P(X >= t) = p_continue^t.
  std::uint64_t geometric(double p_continue) {
    if (!(p_continue >= 0.0 && p_continue < 1.0))
      throw input_error("geometric: continuation probability must lie in [0,1)");
    if (p_continue == 0.0) return 0;
    const double u = uniform();  // in [0,1), so 1-u in (0,1]
    return static_cast<std::uint64_t>(std::floor(std::log1p(-u) / std::log(p_continue)));
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniform_index(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

// Inverse-CDF sampler over a fixed probability vector. Zero-probability
// entries are never drawn.
class DiscreteSampler {
 public:
  explicit DiscreteSampler(const std::vector<double>& probs) {
    if (probs.empty()) throw input_error("DiscreteSampler: empty probability vector");
    cdf_.resize(probs.size());
    double total = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      if (!(probs[i] >= 0.0)) throw input_error("DiscreteSampler: negative probability");
      total += probs[i];
      cdf_[i] = total;
      if (probs[i] > 0.0) last_positive_ = static_cast<int>(i);
    }
    if (!(total > 0.0)) throw input_error("DiscreteSampler: probabilities sum to zero");
    for (auto& c : cdf_) c /= total;
    for (std::size_t i = static_cast<std::size_t>(last_positive_); i < cdf_.size(); ++i)
      cdf_[i] = 1.0;
  }

  int sample(Rng& rng) const {
    const double u = rng.uniform();
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    int idx = static_cast<int>(it - cdf_.begin());
    return std::min(idx, last_positive_);
  }

 private:
  std::vector<double> cdf_;
  int last_positive_ = -1;
};

}  // namespace probekit
