#pragma once

// Power-series roots of kernels K(z, x) by Newton lifting from z = 0.

#include <utility>

#include "invseq/series/polynomial.hpp"
#include "invseq/series/truncated_series.hpp"

namespace invseq::series {

using KernelPolynomial = BivariatePolynomial;

class KernelError : public Error {
 public:
  using Error::Error;
};

/// The power-series root X of K with X(0) = x0, through z^order. x0 must be
/// a simple root of K(0, x). F is the coefficient field (Rational, or a
/// quadratic extension when x0 is irrational).
template <class F>
TruncatedSeries<F> kernel_root(const KernelPolynomial& k, const F& x0, int order) {
  const KernelPolynomial dk = k.derivative();
  if (!(k.evaluate_at_z0(x0) == F(0))) throw KernelError("start value is not a root of the kernel at z = 0");
  if (dk.evaluate_at_z0(x0) == F(0)) throw KernelError("kernel root at z = 0 is not simple");
  TruncatedSeries<F> x = TruncatedSeries<F>::constant(x0, 0);
  // Each Newton step doubles the number of correct coefficients.
  for (int known = 1; known <= order;) {
    known = std::min(2 * known, order + 1);
    x = x.with_order(known - 1);
    x -= k.evaluate(x) / dk.evaluate(x);
  }
  if (!k.evaluate(x).is_zero()) throw KernelError("Newton lifting did not produce a root");
  return x;
}

inline RationalSeries kernel_root(const KernelPolynomial& k, int order) {
  return kernel_root<Rational>(k, Rational(1), order);
}

/// Monic quadratic factor x^2 - s1 x + s2 of K whose z = 0 specialization
/// is x^2 - a x + b. Used when the two roots it carries are not power series
/// individually (or not rational) but their sum s1 and product s2 are.
struct QuadraticFactor {
  RationalSeries sum;      // s1
  RationalSeries product;  // s2
};

namespace detail {

/// Remainder r1 x + r0 of K modulo x^2 - s1 x + s2 along with its partial
/// derivatives in s1 and s2.
struct Remainder {
  RationalSeries r1, r0, r1_s1, r1_s2, r0_s1, r0_s2;
};

inline Remainder reduce_mod_quadratic(const KernelPolynomial& k, const RationalSeries& s1, const RationalSeries& s2) {
  const int n = s1.order();
  // x^j = alpha x + beta modulo the quadratic, with derivatives in s1, s2.
  RationalSeries alpha(n), beta = RationalSeries::constant(1, n);
  RationalSeries a1(n), a2(n), b1(n), b2(n);
  Remainder r{RationalSeries(n), RationalSeries(n), RationalSeries(n),
              RationalSeries(n), RationalSeries(n), RationalSeries(n)};
  for (int j = 0; j <= k.degree(); ++j) {
    const RationalSeries c = k.z_series<Rational>(j, n);
    if (!c.is_zero()) {
      r.r1 += c * alpha;
      r.r0 += c * beta;
      r.r1_s1 += c * a1;
      r.r1_s2 += c * a2;
      r.r0_s1 += c * b1;
      r.r0_s2 += c * b2;
    }
    RationalSeries na = alpha * s1 + beta;
    RationalSeries nb = -(alpha * s2);
    RationalSeries na1 = a1 * s1 + alpha + b1;
    RationalSeries nb1 = -(a1 * s2);
    RationalSeries na2 = a2 * s1 + b2;
    RationalSeries nb2 = -(a2 * s2) - alpha;
    alpha = std::move(na);
    beta = std::move(nb);
    a1 = std::move(na1);
    b1 = std::move(nb1);
    a2 = std::move(na2);
    b2 = std::move(nb2);
  }
  return r;
}

}  // namespace detail

inline QuadraticFactor quadratic_factor(const KernelPolynomial& k, const Rational& a, const Rational& b, int order) {
  RationalSeries s1 = RationalSeries::constant(a, 0), s2 = RationalSeries::constant(b, 0);
  {
    const auto r = detail::reduce_mod_quadratic(k, s1, s2);
    if (!r.r1.is_zero() || !r.r0.is_zero())
      throw KernelError("x^2 - a x + b does not divide the kernel at z = 0");
    if (r.r1_s1[0] * r.r0_s2[0] - r.r1_s2[0] * r.r0_s1[0] == 0)
      throw KernelError("quadratic factor at z = 0 is not coprime to its cofactor");
  }
  for (int known = 1; known <= order;) {
    known = std::min(2 * known, order + 1);
    s1 = s1.with_order(known - 1);
    s2 = s2.with_order(known - 1);
    const auto r = detail::reduce_mod_quadratic(k, s1, s2);
    const RationalSeries det_inv = (r.r1_s1 * r.r0_s2 - r.r1_s2 * r.r0_s1).inverse();
    // Solve J (d1, d2) = (r1, r0) by Cramer's rule.
    const RationalSeries d1 = (r.r1 * r.r0_s2 - r.r1_s2 * r.r0) * det_inv;
    const RationalSeries d2 = (r.r1_s1 * r.r0 - r.r1 * r.r0_s1) * det_inv;
    s1 -= d1;
    s2 -= d2;
  }
  const auto r = detail::reduce_mod_quadratic(k, s1, s2);
  if (!r.r1.is_zero() || !r.r0.is_zero()) throw KernelError("quadratic lifting did not converge");
  return {s1, s2};
}

}  // namespace invseq::series
