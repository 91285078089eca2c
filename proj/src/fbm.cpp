#include "tradefreq/fbm.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>

#include "tradefreq/errors.hpp"
#include "tradefreq/fft.hpp"

namespace tradefreq {

namespace {

void check_hurst(double hurst) {
  if (!(hurst > 0.0 && hurst < 1.0)) throw DomainError("hurst must lie in (0, 1)");
}

constexpr double kEigenvalueSlack = -1e-9;  // round-off only; anything below is a real failure

}  // namespace

void FbmConfig::validate() const {
  check_hurst(hurst);
  if (!(sigma > 0.0)) throw DomainError("sigma must be > 0");
  if (n_steps < 1) throw DomainError("n_steps must be >= 1");
  if (!(horizon > 0.0)) throw DomainError("horizon must be > 0");
}

double fbm_covariance(double t, double s, double hurst) {
  check_hurst(hurst);
  if (!(t >= 0.0 && s >= 0.0)) throw DomainError("times must be >= 0");
  const double two_h = 2.0 * hurst;
  return 0.5 * (std::pow(t, two_h) + std::pow(s, two_h) - std::pow(std::abs(t - s), two_h));
}

double fgn_autocovariance(std::int64_t lag, double hurst) {
  check_hurst(hurst);
  const double k = static_cast<double>(lag < 0 ? -lag : lag);
  if (k == 0.0) return 1.0;
  const double two_h = 2.0 * hurst;
  return 0.5 * (std::pow(k + 1.0, two_h) - 2.0 * std::pow(k, two_h) + std::pow(k - 1.0, two_h));
}

CholeskyFgnSampler::CholeskyFgnSampler(double hurst, std::int64_t n) : n_(n) {
  check_hurst(hurst);
  if (n < 1) throw DomainError("sampler needs n >= 1");
  if (n > kCholeskyMaxSteps)
    throw DomainError("n = " + std::to_string(n) + " exceeds the dense factorization limit " +
                      std::to_string(kCholeskyMaxSteps) + "; use the circulant method");

  Eigen::MatrixXd cov(n, n);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j <= i; ++j) {
      const double g = fgn_autocovariance(i - j, hurst);
      cov(i, j) = g;
      cov(j, i) = g;
    }
  const Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success)
    throw NumericalError("fGN covariance factorization failed; add jitter or use the circulant method");
  factor_ = llt.matrixL();
}

void CholeskyFgnSampler::sample(GaussianRng& rng, std::vector<double>& out) const {
  Eigen::VectorXd z(n_);
  for (std::int64_t i = 0; i < n_; ++i) z(i) = rng();
  out.resize(static_cast<std::size_t>(n_));
  Eigen::Map<Eigen::VectorXd>(out.data(), n_) = factor_.triangularView<Eigen::Lower>() * z;
}

std::vector<double> circulant_embedding_eigenvalues(double hurst, std::int64_t n) {
  check_hurst(hurst);
  if (n < 1) throw DomainError("sampler needs n >= 1");
  const std::size_t m = detail::next_pow2(static_cast<std::size_t>(2 * n));
  std::vector<std::complex<double>> row(m);
  for (std::size_t j = 0; j <= m / 2; ++j) row[j] = fgn_autocovariance(static_cast<std::int64_t>(j), hurst);
  for (std::size_t j = m / 2 + 1; j < m; ++j) row[j] = row[m - j];
  detail::fft_pow2(row, false);
  std::vector<double> eigenvalues(m);
  for (std::size_t k = 0; k < m; ++k) eigenvalues[k] = row[k].real();
  return eigenvalues;
}

CirculantFgnSampler::CirculantFgnSampler(double hurst, std::int64_t n) : n_(n) {
  auto eigenvalues = circulant_embedding_eigenvalues(hurst, n);
  m_ = eigenvalues.size();
  double most_negative = 0.0;
  for (double ev : eigenvalues)
    if (ev < most_negative) most_negative = ev;
  if (most_negative < kEigenvalueSlack)
    throw NumericalError("circulant embedding is not nonnegative definite (min eigenvalue " +
                         std::to_string(most_negative) + ")");
  amplitude_.resize(m_);
  const double inv_m = 1.0 / static_cast<double>(m_);
  for (std::size_t k = 0; k < m_; ++k)
    amplitude_[k] = std::sqrt(std::max(eigenvalues[k], 0.0) * inv_m);
}

void CirculantFgnSampler::sample(GaussianRng& rng, std::vector<double>& out) const {
  // Hermitian spectral amplitudes: real weights at k = 0 and m/2, complex
  // pairs elsewhere, so that the transform below is (in exact arithmetic)
  // real with covariance equal to the embedded circulant.
  std::vector<std::complex<double>> w(m_);
  w[0] = amplitude_[0] * rng();
  w[m_ / 2] = amplitude_[m_ / 2] * rng();
  const double inv_sqrt2 = 0.70710678118654752440;
  for (std::size_t k = 1; k < m_ / 2; ++k) {
    const double u = rng();
    const double v = rng();
    w[k] = amplitude_[k] * std::complex<double>(u * inv_sqrt2, v * inv_sqrt2);
    w[m_ - k] = std::conj(w[k]);
  }
  detail::fft_pow2(w, false);
  out.resize(static_cast<std::size_t>(n_));
  for (std::int64_t j = 0; j < n_; ++j) out[static_cast<std::size_t>(j)] = w[static_cast<std::size_t>(j)].real();
}

FbmPath sample_path(const FbmConfig& cfg) {
  cfg.validate();
  GaussianRng rng(cfg.seed);
  std::vector<double> noise;
  if (cfg.method == FbmMethod::kCholesky) {
    CholeskyFgnSampler sampler(cfg.hurst, cfg.n_steps);
    sampler.sample(rng, noise);
  } else {
    CirculantFgnSampler sampler(cfg.hurst, cfg.n_steps);
    sampler.sample(rng, noise);
  }

  const double n = static_cast<double>(cfg.n_steps);
  const double scale = cfg.sigma * std::pow(cfg.horizon / n, cfg.hurst);
  FbmPath path;
  path.config = cfg;
  path.times.resize(static_cast<std::size_t>(cfg.n_steps) + 1);
  path.values.resize(static_cast<std::size_t>(cfg.n_steps) + 1);
  path.times[0] = 0.0;
  path.values[0] = 0.0;
  double sum = 0.0;
  for (std::int64_t i = 1; i <= cfg.n_steps; ++i) {
    sum += noise[static_cast<std::size_t>(i - 1)];
    const double t = cfg.horizon * (static_cast<double>(i) / n);
    path.times[static_cast<std::size_t>(i)] = t;
    path.values[static_cast<std::size_t>(i)] = cfg.drift * t + scale * sum;
  }
  return path;
}

}  // namespace tradefreq
