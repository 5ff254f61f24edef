#pragma once

// Stated asymptotic forms for the fourteen classes and the checks of fitted
// growth rates against them.

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Eigenvalues>

#include "invseq/analysis/growth.hpp"
#include "invseq/gentree/class_id.hpp"
#include "invseq/gentree/count.hpp"
#include "invseq/series/closed_forms.hpp"

namespace invseq::analysis {

struct GrowthTarget {
  gentree::ClassId id;
  GrowthModel model;
  std::string_view form;        // the stated asymptotic form
  std::vector<long> mu_poly;    // ascending coefficients of a polynomial with root mu
  double mu;                    // stated value (the quoted decimal where one is quoted)
  std::optional<double> g;      // stated exponent, if any
  std::optional<double> log_mu1;
  double tolerance;             // relative tolerance for the fitted mu
  int terms;                    // terms used for the fit
  bool gated;                   // false for the rough estimates
};

inline const std::vector<GrowthTarget>& growth_targets() {
  using gentree::ClassId;
  using M = GrowthModel;
  const double r2 = std::sqrt(2.0);
  static const std::vector<GrowthTarget> table = {
      {ClassId::c663A, M::algebraic, "C/sqrt(pi) n^(-3/2) mu^n", {4, -12, 4, -24, 5}, 4.73508, -1.5, {}, 1e-3, 200, true},
      {ClassId::c733, M::algebraic, "C/sqrt(pi) n^(-3/2) mu^n", {1, -14, 7, -6, 1}, 5.16207, -1.5, {}, 1e-3, 200, true},
      {ClassId::c1016, M::algebraic, "1/(4 sqrt(pi)) n^(-1/2) 4^n", {-4, 1}, 4, -0.5, {}, 1e-3, 200, true},
      {ClassId::c1176, M::algebraic, "C/sqrt(pi) n^(-3/2) (2+2 sqrt2)^n", {-4, -4, 1}, 2 + 2 * r2, -1.5, {}, 1e-3, 200,
       true},
      {ClassId::c1253, M::algebraic, "1/(3 sqrt(pi)) n^(-1/2) 4^n", {-4, 1}, 4, -0.5, {}, 1e-3, 200, true},
      {ClassId::c1420, M::algebraic, "sqrt15/(8 sqrt(2 pi)) n^(-3/2) (27/5)^n", {-27, 5}, 5.4, -1.5, {}, 1e-3, 200,
       true},
      {ClassId::c1833A, M::algebraic, "C/sqrt(pi) n^(-3/2) mu^n", {32, 195, 12, 112, -20}, 5.98042, -1.5, {}, 1e-3,
       200, true},
      {ClassId::c214, M::algebraic, "C n^(-3/2) 4^n", {-4, 1}, 4, -1.5, {}, 1e-2, 300, true},
      {ClassId::c830, M::algebraic, "C n^(-3/2) (27/4)^n", {-27, 4}, 6.75, -1.5, {}, 1e-2, 300, true},
      {ClassId::c1509, M::algebraic, "C n^(-3/2) (3+2 sqrt2)^n", {1, -6, 1}, 3 + 2 * r2, -1.5, {}, 1e-2, 300, true},
      {ClassId::c1953A, M::algebraic, "C n^(-3/2) (27/4)^n", {-27, 4}, 6.75, -1.5, {}, 1e-2, 300, true},
      {ClassId::c247, M::stretched, "C n^g 8^n mu1^(n^(3/8))", {-8, 1}, 8, 4.25, -13, 1e-2, 300, false},
      {ClassId::c759, M::stretched, "C n^g 9^n mu1^(n^(3/8))", {-9, 1}, 9, 3.25, -10.4, 1e-2, 300, false},
      {ClassId::c2106, M::algebraic, "C n^g 9^n", {-9, 1}, 9, -5.401, {}, 1e-2, 300, false},
  };
  return table;
}

inline const GrowthTarget& growth_target(gentree::ClassId id) {
  const auto& t = growth_targets();
  return *std::find_if(t.begin(), t.end(), [&](const GrowthTarget& g) { return g.id == id; });
}

/// Real roots of sum c_i x^i, from the companion matrix and polished by Newton.
inline std::vector<double> real_roots(const std::vector<long>& c) {
  std::vector<long> p = c;
  while (!p.empty() && p.back() == 0) p.pop_back();
  const int d = static_cast<int>(p.size()) - 1;
  if (d < 1) return {};
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -static_cast<double>(p[static_cast<std::size_t>(i)]) / static_cast<double>(p.back());
  const Eigen::VectorXcd eig = comp.eigenvalues();
  std::vector<double> out;
  for (Eigen::Index i = 0; i < eig.size(); ++i) {
    if (std::abs(eig[i].imag()) > 1e-7 * std::max(1.0, std::abs(eig[i]))) continue;
    long double x = eig[i].real();
    for (int it = 0; it < 20; ++it) {
      long double f = 0, df = 0;
      for (int k = d; k >= 0; --k) {
        df = df * x + f;
        f = f * x + p[static_cast<std::size_t>(k)];
      }
      if (df == 0) break;
      x -= f / df;
    }
    out.push_back(static_cast<double>(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The growth rate 1/rho for the radical closed forms, rho being the smallest
/// positive zero of the radicand or the denominator.
inline std::optional<double> singularity_growth(gentree::ClassId id) {
  const auto rf = series::radical_form(id);
  if (!rf) return std::nullopt;
  auto coeffs = [](const series::BivariatePolynomial& p) {
    std::vector<long> c;
    for (int i = 0; i <= p.z_degree(); ++i) c.push_back(p.coefficient(i, 0).get_num().get_si());
    return c;
  };
  double rho = INFINITY;
  for (const auto* p : {&rf->r, &rf->d})
    for (double r : real_roots(coeffs(*p)))
      if (r > 1e-12) rho = std::min(rho, r);
  return 1 / rho;
}

struct RootCheck {
  gentree::ClassId id;
  double fitted = 0;
  double stated = 0;
  std::optional<double> root;         // root of the mu polynomial nearest the fit
  std::optional<double> singularity;  // from the closed form, where derivable
  double fit_error = 0;               // |fitted - stated| / stated
  double root_error = 0;              // |fitted - root| / root
  bool ok = false;
};

/// Compares the fitted growth rate with the stated value and with the
/// stated mu polynomial; for radical closed forms also with 1/rho.
inline RootCheck check_root_constants_detail(gentree::ClassId id, std::optional<int> terms = std::nullopt) {
  const auto& t = growth_target(id);
  const auto seq = gentree::count_class(id, terms.value_or(t.terms));
  RootCheck out{id};
  out.stated = t.mu;
  out.fitted = estimate_growth(seq, GrowthModel::algebraic).mu;
  out.fit_error = std::abs(out.fitted - t.mu) / t.mu;
  double best = INFINITY;
  for (double r : real_roots(t.mu_poly))
    if (std::abs(r - out.fitted) < best) {
      best = std::abs(r - out.fitted);
      out.root = r;
    }
  out.ok = out.fit_error < t.tolerance;
  if (out.root) {
    out.root_error = std::abs(out.fitted - *out.root) / *out.root;
    out.ok = out.ok && out.root_error < t.tolerance;
  } else {
    out.ok = false;
  }
  out.singularity = singularity_growth(id);
  if (out.singularity && out.root) out.ok = out.ok && std::abs(*out.singularity - *out.root) < 1e-9 * *out.root;
  return out;
}

inline bool check_root_constants(gentree::ClassId id) { return check_root_constants_detail(id).ok; }

}  // namespace invseq::analysis
