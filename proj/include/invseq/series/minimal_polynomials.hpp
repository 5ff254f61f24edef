#pragma once

// Annihilating polynomials of the algebraic generating functions, and the
// check that a counting series satisfies one.

#include <optional>
#include <string>

#include "invseq/gentree/class_id.hpp"
#include "invseq/gentree/count.hpp"
#include "invseq/series/closed_forms.hpp"
#include "invseq/series/polynomial.hpp"
#include "invseq/series/truncated_series.hpp"

namespace invseq::series {

enum class MinpolySource {
  stated,   // printed alongside the closed form
  derived,  // obtained here by eliminating the radical from the closed form
};

struct MinimalPolynomial {
  BivariatePolynomial poly;  // in z and A
  MinpolySource source;
};

/// D^2 A^2 - 2 D P A + (P^2 - Q^2 R) for A = (P + Q sqrt R)/D, made primitive.
inline BivariatePolynomial eliminate_radical(const RadicalForm& f) {
  const auto a = BivariatePolynomial::variable('A');
  const auto lift = [](const BivariatePolynomial& p) {
    BivariatePolynomial out = BivariatePolynomial::constant(0, 'A');
    for (int i = 0; i <= p.z_degree(); ++i) {
      const Rational c = p.coefficient(i, 0);
      if (c != 0) out.add_term(c, i, 0);
    }
    return out;
  };
  const auto p = lift(f.p), q = lift(f.q), r = lift(f.r), d = lift(f.d);
  return (d * d * a * a - d * p * a * Rational(2) + p * p - q * q * r).primitive();
}

inline std::optional<MinimalPolynomial> minimal_polynomial(gentree::ClassId id) {
  using gentree::ClassId;
  auto P = [](const char* s) { return BivariatePolynomial::parse(s, 'A'); };
  switch (id) {
    case ClassId::c663A:
      return MinimalPolynomial{P("1 - 4A + zA + 4A^2 - 2zA^2 - A^3"), MinpolySource::stated};
    case ClassId::c1420:
      return MinimalPolynomial{P("-zA^3 - A^3 + 4A^2 - 4A + 1"), MinpolySource::stated};
    case ClassId::c1833A:
      return MinimalPolynomial{
          P("3z^3A^6 + zA^6 - 2z^3A^5 - 6z^2A^5 - 3zA^5 - A^5 + 11z^2A^4 + 5zA^4 + 5A^4"
            " - 5z^2A^3 - 7zA^3 - 10A^3 + 6zA^2 + 10A^2 - 2zA - 5A + 1"),
          MinpolySource::stated};
    case ClassId::c733:
      return MinimalPolynomial{
          P("4z^3A^4 - 2z^2A^4 + zA^4 + 2z^3A^3 - 7z^2A^3 + zA^3 - A^3 - z^3A^2 + 10z^2A^2 - 3zA^2"
            " + 3A^2 - z^2A - zA - 3A + 2z + 1"),
          MinpolySource::stated};
    default:
      if (auto rf = radical_form(id)) return MinimalPolynomial{eliminate_radical(*rf), MinpolySource::derived};
      return std::nullopt;
  }
}

/// poly(z, S) through z^order (the order of S).
inline RationalSeries minimal_polynomial_residual(const BivariatePolynomial& poly, const RationalSeries& s) {
  return poly.evaluate(s);
}

/// True iff the polynomial annihilates S modulo z^(order+1).
inline bool annihilates(const BivariatePolynomial& poly, const RationalSeries& s) {
  return minimal_polynomial_residual(poly, s).is_zero();
}

/// Substitutes the generating-tree counts through z^order into the class's
/// annihilating polynomial.
inline bool verify_minimal_polynomial(gentree::ClassId id, int order) {
  const auto mp = minimal_polynomial(id);
  if (!mp) throw Error("no minimal polynomial for class " + std::string(gentree::name(id)));
  return annihilates(mp->poly, from_integers(gentree::count_class(id, order), order));
}

}  // namespace invseq::series
