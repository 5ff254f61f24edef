#pragma once

// Growth-rate fitting of counting sequences. This is the only place where
// floating point is used; ratios are formed exactly and extrapolated in
// multi-precision floats before being rounded to double.

#include <gmpxx.h>

#include <cmath>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "invseq/numeric.hpp"

namespace invseq::analysis {

enum class GrowthModel {
  algebraic,  // I_n ~ C n^g mu^n
  stretched,  // I_n ~ C n^g mu^n mu1^(n^sigma)
};

struct GrowthOptions {
  int levels = 6;           // Richardson levels applied to the ratios
  int window = 10;          // trailing estimates compared for the spread
  bool alternate = false;   // use sqrt(I_n / I_{n-2}) to damp parity oscillation
  double sigma = 3.0 / 8.0; // fixed exponent of the stretched term
  std::optional<double> fixed_mu;  // stretched model: hold mu fixed
};

struct StretchedFit {
  double sigma;
  double mu;
  double g;
  double log_mu1;
  double log_c;
};

struct GrowthDiagnostics {
  int terms = 0;
  int levels = 0;
  std::vector<double> mu_by_level;  // final estimate at each level 0..levels
  double mu_spread = 0;             // max deviation of the last `window` estimates
  double g_spread = 0;
  double fit_rms = 0;               // residual of the least-squares fit of log I_n
};

struct GrowthEstimate {
  double mu = 0;
  double g = 0;
  std::optional<double> constant;  // C in I_n ~ C n^g mu^n
  std::optional<StretchedFit> stretched;
  GrowthDiagnostics diagnostics;
};

namespace detail {

inline constexpr mp_bitcnt_t precision_bits = 512;

inline mpf_class to_mpf(const Integer& v) { return mpf_class(v, precision_bits); }

/// Natural log of a positive integer without overflow.
inline double log_integer(const Integer& v) {
  long e = 0;
  const double m = mpz_get_d_2exp(&e, v.get_mpz_t());
  return std::log(m) + static_cast<double>(e) * std::log(2.0);
}

/// Level-k Richardson extrapolation of s_n = s + a_1/n + ... + a_k/n^k at
/// index n, using s_n .. s_{n+k}. `s[i]` holds s at index i + offset.
inline mpf_class richardson(const std::vector<mpf_class>& s, int offset, int n, int k) {
  mpf_class acc(0, precision_bits);
  mpf_class fact_j(1, precision_bits);
  for (int j = 0; j <= k; ++j) {
    if (j > 0) fact_j *= j;
    mpf_class fact_kj(1, precision_bits);
    for (int i = 2; i <= k - j; ++i) fact_kj *= i;
    mpf_class w(1, precision_bits);
    for (int i = 0; i < k; ++i) w *= n + j;
    mpf_class term = w * s[static_cast<std::size_t>(n + j - offset)] / (fact_j * fact_kj);
    if ((k - j) % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

struct Extrapolated {
  double value;
  double spread;
  std::vector<double> by_level;
};

/// Richardson on s over indices [first, last] with the given level.
inline Extrapolated extrapolate(const std::vector<mpf_class>& s, int first, int last, int levels, int window) {
  const int top = last - levels;
  if (top < first) throw Error("too few terms for the requested extrapolation levels");
  Extrapolated out{};
  for (int k = 0; k <= levels; ++k) out.by_level.push_back(richardson(s, first, last - k, k).get_d());
  const double best = richardson(s, first, top, levels).get_d();
  double spread = 0;
  for (int n = std::max(first, top - window); n <= top; ++n)
    spread = std::max(spread, std::abs(richardson(s, first, n, levels).get_d() - best));
  out.value = best;
  out.spread = spread;
  return out;
}

/// Least squares y ~ X beta; returns beta and the rms residual.
inline std::pair<Eigen::VectorXd, double> least_squares(const Eigen::MatrixXd& x, const Eigen::VectorXd& y) {
  // Column scaling keeps the QR well conditioned when n, n^sigma and log n mix.
  Eigen::VectorXd scale = x.colwise().norm().transpose();
  for (Eigen::Index i = 0; i < scale.size(); ++i)
    if (scale[i] == 0) scale[i] = 1;
  const Eigen::MatrixXd xs = x * scale.cwiseInverse().asDiagonal();
  const Eigen::VectorXd b = xs.colPivHouseholderQr().solve(y);
  const Eigen::VectorXd beta = b.cwiseQuotient(scale);
  const double rms = std::sqrt((x * beta - y).squaredNorm() / static_cast<double>(y.size()));
  return {beta, rms};
}

}  // namespace detail

inline constexpr int minimum_terms = 30;

/// Fits the asymptotic form of I_0, I_1, ... . The algebraic model takes mu
/// and g from Richardson-extrapolated ratios and C from a least-squares fit
/// of log I_n; the stretched model fits log I_n against
/// 1, log n, n, n^sigma directly.
inline GrowthEstimate estimate_growth(const std::vector<Integer>& seq, GrowthModel model = GrowthModel::algebraic,
                                      const GrowthOptions& opt = {}) {
  using detail::precision_bits;
  const int size = static_cast<int>(seq.size());
  if (size < minimum_terms) throw Error("growth fits need at least " + std::to_string(minimum_terms) + " terms");
  for (const auto& v : seq)
    if (v <= 0) throw Error("growth fits need positive terms");
  if (opt.levels < 0) throw Error("extrapolation levels must be nonnegative");
  const int last = size - 1;

  GrowthEstimate est;
  est.diagnostics.terms = size;
  est.diagnostics.levels = opt.levels;

  // Log-linear design over the trailing two thirds.
  const int fit_first = std::max(2, size / 3);
  const int rows = last - fit_first + 1;
  Eigen::VectorXd logs(rows);
  for (int n = fit_first; n <= last; ++n) logs[n - fit_first] = detail::log_integer(seq[static_cast<std::size_t>(n)]);

  if (model == GrowthModel::stretched) {
    const bool free_mu = !opt.fixed_mu;
    Eigen::MatrixXd x(rows, free_mu ? 4 : 3);
    Eigen::VectorXd y = logs;
    for (int n = fit_first; n <= last; ++n) {
      const int r = n - fit_first;
      x(r, 0) = 1;
      x(r, 1) = std::log(static_cast<double>(n));
      x(r, 2) = std::pow(static_cast<double>(n), opt.sigma);
      if (free_mu) x(r, 3) = n;
      else y[r] -= n * std::log(*opt.fixed_mu);
    }
    const auto [beta, rms] = detail::least_squares(x, y);
    const double mu = free_mu ? std::exp(beta[3]) : *opt.fixed_mu;
    est.stretched = StretchedFit{opt.sigma, mu, beta[1], beta[2], beta[0]};
    est.mu = mu;
    est.g = beta[1];
    est.constant = std::exp(beta[0]);
    est.diagnostics.fit_rms = rms;
    return est;
  }

  // Ratios r_n = I_n / I_{n-1}, or sqrt(I_n / I_{n-2}).
  const int step = opt.alternate ? 2 : 1;
  const int first = step;
  std::vector<mpf_class> ratio;
  for (int n = first; n <= last; ++n) {
    mpf_class r = detail::to_mpf(seq[static_cast<std::size_t>(n)]) / detail::to_mpf(seq[static_cast<std::size_t>(n - step)]);
    if (opt.alternate) r = sqrt(r);
    ratio.push_back(r);
  }
  const auto mu = detail::extrapolate(ratio, first, last, opt.levels, opt.window);
  est.mu = mu.value;
  est.diagnostics.mu_by_level = mu.by_level;
  est.diagnostics.mu_spread = mu.spread;

  // g_n = n (r_n / mu - 1) -> g; the alternate ratio shifts the centre by 1/2.
  const mpf_class mu_f(mu.value, precision_bits);
  std::vector<mpf_class> gs;
  for (int n = first; n <= last; ++n) {
    const double centre = opt.alternate ? n - 0.5 : n;
    gs.push_back(mpf_class(centre, precision_bits) * (ratio[static_cast<std::size_t>(n - first)] / mu_f - 1));
  }
  const auto g = detail::extrapolate(gs, first, last, std::max(0, opt.levels - 1), opt.window);
  est.g = g.value;
  est.diagnostics.g_spread = g.spread;

  // log C from log I_n - n log mu - g log n = log C + a/n + b/n^2.
  Eigen::MatrixXd x(rows, 3);
  Eigen::VectorXd y(rows);
  for (int n = fit_first; n <= last; ++n) {
    const int r = n - fit_first;
    const double dn = n;
    x(r, 0) = 1;
    x(r, 1) = 1 / dn;
    x(r, 2) = 1 / (dn * dn);
    y[r] = logs[r] - dn * std::log(est.mu) - est.g * std::log(dn);
  }
  const auto [beta, rms] = detail::least_squares(x, y);
  est.constant = std::exp(beta[0]);
  est.diagnostics.fit_rms = rms;
  return est;
}

}  // namespace invseq::analysis
