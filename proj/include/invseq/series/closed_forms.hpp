#pragma once

// Closed-form generating functions of the seven algebraic classes, expanded
// as exact truncated series.

#include <optional>
#include <string>

#include "invseq/gentree/class_id.hpp"
#include "invseq/series/kernel.hpp"
#include "invseq/series/polynomial.hpp"
#include "invseq/series/quadratic_field.hpp"
#include "invseq/series/truncated_series.hpp"

namespace invseq::series {

class NoClosedForm : public Error {
 public:
  explicit NoClosedForm(gentree::ClassId id)
      : Error("no closed form for class " + std::string(gentree::name(id))) {}
};

inline bool has_closed_form(gentree::ClassId id) { return gentree::is_algebraic(id); }

/// F = (P + Q sqrt(R)) / D with P, Q, R, D polynomials in z.
struct RadicalForm {
  BivariatePolynomial p, q, r, d;
};

/// The radical closed forms (classes 1176, 1253, 1016).
inline std::optional<RadicalForm> radical_form(gentree::ClassId id) {
  using gentree::ClassId;
  auto P = [](const char* s) { return BivariatePolynomial::parse(s); };
  switch (id) {
    case ClassId::c1176:
      return RadicalForm{P("2 + z - 10z^2 + 4z^3"), P("-2 + 3z"), P("1 - 4z - 4z^2"), P("8z - 16z^2 + 8z^3")};
    case ClassId::c1253:
      return RadicalForm{P("2 - 15z + 32z^2 - 16z^3"), P("z - 4z^3"), P("1 - 4z"),
                         P("2") * P("1 - z").pow(2) * P("1 - 2z") * P("1 - 4z")};
    case ClassId::c1016:
      return RadicalForm{P("1 - 4z") * P("1 - 2z") * P("3 - 2z"), P("-1 + 8z - 12z^2 + 2z^3"), P("1 - 4z"),
                         P("2") * P("1 - z").pow(2) * P("1 - 4z")};
    default:
      return std::nullopt;
  }
}

namespace kernels {
inline KernelPolynomial c663A() { return KernelPolynomial::parse("1 - x - z*x + 2*z*x^2 + z^2*x - z^2*x^3"); }
inline KernelPolynomial c1420() { return KernelPolynomial::parse("1 - x + z - z*x + 2*z*x^2 - z^2*x^3"); }
inline KernelPolynomial c1833A() {
  return KernelPolynomial::parse("z^2*x^4 - z^2*x^3 - 2*z*x^3 + 3*z*x^2 + x^2 - 2*z*x - 2*x + 1");
}
inline KernelPolynomial c733() {
  return KernelPolynomial::parse("z^2*x^4 - z^2*x^3 - 2*z*x^3 - z^2*x^2 + 3*z*x^2 + x^2 - z*x - 2*x + 1");
}
}  // namespace kernels

/// How the pair of kernel roots for class 733 is obtained.
enum class ConjugateRoute {
  quadratic_field,  // X1 over Q(sqrt 5); X3 is its conjugate
  symmetric,        // X1 + X3 and X1 X3 lifted directly as rational series
};

namespace detail {

inline RationalSeries poly_series(const BivariatePolynomial& p, int order) { return p.z_series<Rational>(0, order); }

inline RationalSeries expand_radical(const RadicalForm& f, int order) {
  const auto dz = f.d.z_coefficients(0);
  int v = 0;
  while (dz[static_cast<std::size_t>(v)] == 0) ++v;
  const int m = order + v;
  RationalSeries num = poly_series(f.p, m) + poly_series(f.q, m) * poly_series(f.r, m).sqrt();
  return num.shift_down(v) / poly_series(f.d.divide_z_power(v), order);
}

}  // namespace detail

/// First power-series root X1 of the class 733 kernel, over Q(sqrt 5).
inline TruncatedSeries<Sqrt5Number> kernel_root_733(int order) {
  const KernelPolynomial shifted = kernels::c733().substitute_shift(1, 1).divide_z_power(2);
  const auto y = kernel_root<Sqrt5Number>(shifted, Sqrt5Number(Rational(1, 2), Rational(1, 2)), order);
  TruncatedSeries<Sqrt5Number> x1 = TruncatedSeries<Sqrt5Number>::constant(1, order);
  for (int i = 1; i <= order; ++i) x1[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i - 1)];
  return x1;
}

/// X1 + X3 and X1 X3 for class 733 from X1 and its Galois conjugate X3.
inline QuadraticFactor conjugate_pair_733(int order) {
  const auto x1 = kernel_root_733(order);
  QuadraticFactor out{RationalSeries(order), RationalSeries(order)};
  TruncatedSeries<Sqrt5Number> x3(order);
  for (int i = 0; i <= order; ++i) x3[static_cast<std::size_t>(i)] = x1[static_cast<std::size_t>(i)].conjugate();
  const auto sum = x1 + x3;
  const auto product = x1 * x3;
  for (int i = 0; i <= order; ++i) {
    const auto& s = sum[static_cast<std::size_t>(i)];
    const auto& p = product[static_cast<std::size_t>(i)];
    if (!s.is_rational() || !p.is_rational()) throw Error("conjugate roots gave irrational symmetric functions");
    out.sum[static_cast<std::size_t>(i)] = s.rational_part();
    out.product[static_cast<std::size_t>(i)] = p.rational_part();
  }
  return out;
}

/// Sum and product of the two power-series roots of the class 733 kernel.
inline QuadraticFactor symmetric_roots_733(int order, ConjugateRoute route = ConjugateRoute::quadratic_field) {
  if (route == ConjugateRoute::symmetric) return quadratic_factor(kernels::c733(), 2, 1, order);
  return conjugate_pair_733(order);
}

/// Sum and product of the two Puiseux roots of the class 1833A kernel.
inline QuadraticFactor symmetric_roots_1833A(int order) { return quadratic_factor(kernels::c1833A(), 2, 1, order); }

/// Coefficients through z^order of the class's generating function.
inline RationalSeries expand_closed_form(gentree::ClassId id, int order,
                                         ConjugateRoute route = ConjugateRoute::quadratic_field) {
  using gentree::ClassId;
  if (order < 0) throw Error("series order must be nonnegative");
  if (auto rf = radical_form(id)) return detail::expand_radical(*rf, order);
  const int m = order + 1;
  const RationalSeries z = RationalSeries::z(m);
  const RationalSeries one = RationalSeries::constant(1, m);
  switch (id) {
    case ClassId::c663A: {
      const RationalSeries x = kernel_root(kernels::c663A(), m);
      const RationalSeries num = (x - one) * (one - z * x + z * z * x);
      return num.shift_down(1) / x.with_order(order);
    }
    case ClassId::c1420: {
      const RationalSeries x = kernel_root(kernels::c1420(), m);
      const RationalSeries num = (one + z) * (x - one) - z * (one - z) * x * x;
      return num.shift_down(1) / ((one + z) * x).with_order(order);
    }
    case ClassId::c1833A: {
      const auto [s1, s2] = symmetric_roots_1833A(m);
      const RationalSeries num = (s2 - s1 + one) * (z * s2 - one);
      const RationalSeries den = s2 * (z * s2 - z * s1 + z + one);
      return num.shift_down(1) / den.with_order(order);
    }
    case ClassId::c733: {
      const auto [s1, s2] = symmetric_roots_733(order, route);
      const RationalSeries zz = RationalSeries::z(order), o = RationalSeries::constant(1, order);
      return (o - zz * s1) / (o - zz - zz * s1 + zz * zz * s2);
    }
    default:
      throw NoClosedForm(id);
  }
}

}  // namespace invseq::series
