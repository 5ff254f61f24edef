#pragma once

// Order-by-order solution of the catalytic functional equations for the
// classes whose generating trees carry one catalytic variable x.

#include <map>
#include <string>
#include <vector>

#include "invseq/gentree/class_id.hpp"
#include "invseq/series/truncated_series.hpp"

namespace invseq::series {

/// Polynomial in x, lowest degree first.
using XPolynomial = std::vector<Rational>;

namespace xpoly {

inline void trim(XPolynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline XPolynomial add(XPolynomial a, const XPolynomial& b, const Rational& scale = 1) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += scale * b[i];
  trim(a);
  return a;
}

inline XPolynomial sub(XPolynomial a, const XPolynomial& b) { return add(std::move(a), b, -1); }

inline XPolynomial scale(XPolynomial a, const Rational& s) {
  for (auto& c : a) c *= s;
  trim(a);
  return a;
}

/// x^k p.
inline XPolynomial shift(const XPolynomial& p, int k) {
  if (p.empty()) return p;
  XPolynomial out(static_cast<std::size_t>(k), Rational(0));
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

inline XPolynomial monomial(const Rational& c, int k) { return c == 0 ? XPolynomial{} : shift({c}, k); }

inline Rational at_one(const XPolynomial& p) {
  Rational s = 0;
  for (const auto& c : p) s += c;
  return s;
}

inline XPolynomial derivative(const XPolynomial& p) {
  XPolynomial out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<long>(i));
  trim(out);
  return out;
}

/// p / (1 - x); p(1) must vanish.
inline XPolynomial divide_one_minus_x(const XPolynomial& p) {
  if (at_one(p) != 0) throw Error("divided difference by (1 - x) is not exact");
  XPolynomial q;
  Rational run = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    run += p[i];
    q.push_back(run);
  }
  trim(q);
  return q;
}

}  // namespace xpoly

/// For each z-degree 0..N, a polynomial in x.
class BivariateTruncatedSeries {
 public:
  explicit BivariateTruncatedSeries(int order) : levels_(static_cast<std::size_t>(order) + 1) {}

  int order() const noexcept { return static_cast<int>(levels_.size()) - 1; }
  const XPolynomial& operator[](int n) const { return levels_.at(static_cast<std::size_t>(n)); }
  XPolynomial& operator[](int n) { return levels_.at(static_cast<std::size_t>(n)); }

  /// Largest x-degree at z-degree n (-1 for the zero polynomial).
  int x_degree(int n) const { return static_cast<int>((*this)[n].size()) - 1; }

  /// The specialization x = 1.
  RationalSeries at_x_one() const {
    RationalSeries s(order());
    for (int n = 0; n <= order(); ++n) s[static_cast<std::size_t>(n)] = xpoly::at_one((*this)[n]);
    return s;
  }

 private:
  std::vector<XPolynomial> levels_;
};

struct CatalyticSolution {
  std::map<std::string, BivariateTruncatedSeries> components;
  RationalSeries total;
};

inline bool has_catalytic_system(gentree::ClassId id) {
  using gentree::ClassId;
  return id == ClassId::c1176 || id == ClassId::c1253 || id == ClassId::c1016 || id == ClassId::c663A ||
         id == ClassId::c1420;
}

namespace detail {

/// A, B, C, D shared by the right-grown family.
inline void iterate_right_family(std::map<std::string, BivariateTruncatedSeries>& c, int order) {
  using namespace xpoly;
  BivariateTruncatedSeries A(order), B(order), C(order), D(order);
  A[0] = {1};
  for (int n = 1; n <= order; ++n) {
    const XPolynomial& a = A[n - 1];
    const Rational a1 = at_one(a);
    // A = 1 + z/(1-x) (A(z,x) - x A(zx,1))
    A[n] = divide_one_minus_x(sub(a, monomial(a1, n)));
    // B = zB + z/(1-x) (z A_z - x A_x + x/(1-x) (A(zx,1) - A(z,x)))
    XPolynomial inner = scale(a, n - 1);
    inner = sub(inner, shift(derivative(a), 1));
    inner = add(inner, shift(divide_one_minus_x(sub(monomial(a1, n - 1), a)), 1));
    B[n] = add(B[n - 1], divide_one_minus_x(inner));
    C[n] = B[n - 1];
    D[n] = add(D[n - 1], C[n - 1]);
  }
  c.emplace("A", A);
  c.emplace("B", B);
  c.emplace("C", C);
  c.emplace("D", D);
}

}  // namespace detail

/// Solves the class's system through z^order and returns all components
/// along with the counting series.
inline CatalyticSolution solve_catalytic_system(gentree::ClassId id, int order) {
  using gentree::ClassId;
  using namespace xpoly;
  if (order < 0) throw Error("series order must be nonnegative");
  CatalyticSolution out;
  auto& c = out.components;
  switch (id) {
    case ClassId::c1176: {
      detail::iterate_right_family(c, order);
      const auto &A = c.at("A"), &D = c.at("D");
      BivariateTruncatedSeries E(order);
      for (int n = 1; n <= order; ++n) {
        // E = z/(1-x) (E(1) - E + A(1) - A + D(1) - D)
        XPolynomial num = sub({at_one(E[n - 1])}, E[n - 1]);
        num = add(num, sub({at_one(A[n - 1])}, A[n - 1]));
        num = add(num, sub({at_one(D[n - 1])}, D[n - 1]));
        E[n] = divide_one_minus_x(num);
      }
      out.total = A.at_x_one() + D.at_x_one() + E.at_x_one();
      c.emplace("E", std::move(E));
      break;
    }
    case ClassId::c1253: {
      detail::iterate_right_family(c, order);
      const auto &A = c.at("A"), &B = c.at("B");
      BivariateTruncatedSeries Cd(order), Dd(order), Ed(order);
      for (int n = 1; n <= order; ++n) {
        Cd[n] = add(Cd[n - 1], B[n - 1]);
        Dd[n] = add(scale(Dd[n - 1], 2), Cd[n - 1]);
        Ed[n] = add(Ed[n - 1], divide_one_minus_x(sub({at_one(A[n - 1])}, A[n - 1])));
      }
      out.total = A.at_x_one() + Dd.at_x_one() + Ed.at_x_one();
      c.emplace("C+", std::move(Cd));
      c.emplace("D+", std::move(Dd));
      c.emplace("E+", std::move(Ed));
      break;
    }
    case ClassId::c1016: {
      detail::iterate_right_family(c, order);
      const auto &A = c.at("A"), &D = c.at("D");
      BivariateTruncatedSeries Es(order);
      for (int n = 1; n <= order; ++n) Es[n] = divide_one_minus_x(sub({at_one(A[n - 1])}, A[n - 1]));
      out.total = A.at_x_one() + D.at_x_one() + Es.at_x_one();
      c.emplace("E*", std::move(Es));
      break;
    }
    case ClassId::c663A:
    case ClassId::c1420: {
      const bool is1420 = id == ClassId::c1420;
      BivariateTruncatedSeries A(order), B(order);
      A[0] = {1};
      for (int n = 1; n <= order; ++n) {
        const XPolynomial &a = A[n - 1], &b = B[n - 1];
        const Rational a1 = at_one(a), b1 = at_one(b);
        // x (A(1) - x A) / (1-x)
        XPolynomial an = shift(divide_one_minus_x(sub({a1}, shift(a, 1))), 1);
        // (x A(1) - A) / (1-x)
        XPolynomial bn = divide_one_minus_x(sub(monomial(a1, 1), a));
        if (n == 1) bn = add(bn, {1});
        bn = add(bn, shift(b, 1));
        if (is1420) {
          an = add(an, shift(divide_one_minus_x(sub({b1}, shift(b, 1))), 1));
          bn = add(bn, divide_one_minus_x(sub(monomial(b1, 1), b)));
        } else {
          an = add(an, shift(b, 1));
        }
        A[n] = std::move(an);
        B[n] = std::move(bn);
      }
      out.total = is1420 ? A.at_x_one() + B.at_x_one() : A.at_x_one();
      c.emplace("A", std::move(A));
      c.emplace("B", std::move(B));
      break;
    }
    default:
      throw Error("no catalytic system is iterated for class " + std::string(gentree::name(id)));
  }
  return out;
}

/// The counting series of the class through z^order from its catalytic system.
inline RationalSeries iterate_catalytic_system(gentree::ClassId id, int order) {
  return solve_catalytic_system(id, order).total;
}

}  // namespace invseq::series
