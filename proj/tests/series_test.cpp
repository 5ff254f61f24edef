#include <gtest/gtest.h>

#include <vector>

#include "invseq/gentree.hpp"
#include "invseq/series.hpp"

using namespace invseq;
using namespace invseq::series;
using gentree::ClassId;

namespace {

RationalSeries rs(int order, std::initializer_list<long> v) {
  std::vector<Rational> c;
  for (long x : v) c.emplace_back(x);
  return RationalSeries(order, c);
}

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

constexpr ClassId algebraic[] = {ClassId::c1176, ClassId::c1253, ClassId::c1016, ClassId::c663A,
                                 ClassId::c1420, ClassId::c1833A, ClassId::c733};

}  // namespace

TEST(TruncatedSeries, Arithmetic) {
  EXPECT_EQ(rs(4, {1, 1}) * rs(4, {1, -1}), rs(4, {1, 0, -1}));
  EXPECT_EQ(rs(5, {1}) / rs(5, {1, -1}), rs(5, {1, 1, 1, 1, 1, 1}));
  EXPECT_EQ((rs(6, {1, 2}) * rs(3, {1})).order(), 3);
  EXPECT_THROW(rs(4, {1}) / rs(4, {0, 1}), Error);
  EXPECT_EQ(rs(4, {0, 0, 3, 1}).shift_down(2), rs(2, {3, 1}));
  EXPECT_THROW(rs(4, {0, 1}).shift_down(2), Error);
  EXPECT_EQ(rs(3, {1, 1}).pow(3), rs(3, {1, 3, 3, 1}));
  EXPECT_EQ(rs(3, {1, 1}).pow(-1), rs(3, {1, -1, 1, -1}));
  EXPECT_EQ(rs(3, {5, 1, 2, 3}).derivative(), rs(2, {1, 4, 9}));
}

TEST(TruncatedSeries, Sqrt) {
  EXPECT_EQ(rs(5, {1}).sqrt(), rs(5, {1}));
  EXPECT_EQ(rs(6, {1, -4}).sqrt(), rs(6, {1, -2, -2, -4, -10, -28, -84}));
  const auto a = rs(40, {1, -4, -4});
  const auto r = a.sqrt();
  EXPECT_EQ(r * r, a);
  EXPECT_THROW(rs(3, {4, 1}).sqrt(), Error);
  EXPECT_THROW(rs(3, {0, 1}).sqrt(), Error);
}

TEST(QuadraticField, Arithmetic) {
  const Sqrt5Number phi(Rational(1, 2), Rational(1, 2));
  EXPECT_EQ(phi * phi, phi + Sqrt5Number(1));
  EXPECT_EQ(phi * phi.conjugate(), Sqrt5Number(-1));
  EXPECT_EQ(Sqrt5Number(1) / phi, phi - Sqrt5Number(1));
  EXPECT_THROW(phi / Sqrt5Number(0), Error);
  EXPECT_EQ(Sqrt5Number::root().to_string(), "1*sqrt(5)");
}

TEST(Polynomial, ParseAndPrint) {
  const auto k = KernelPolynomial::parse("1 - x + z - z*x + 2*z*x^2 - z^2*x^3");
  EXPECT_EQ(k.degree(), 3);
  EXPECT_EQ(k.z_degree(), 2);
  EXPECT_EQ(k.coefficient(1, 2), 2);
  EXPECT_EQ(k.coefficient(2, 3), -1);
  EXPECT_EQ(KernelPolynomial::parse(k.to_string()), k);
  EXPECT_EQ(KernelPolynomial::parse("3z^2x - 1/2 x"), KernelPolynomial::parse("3*x*z^2 - 1/2*x"));
  EXPECT_EQ(KernelPolynomial::parse("x - x"), KernelPolynomial());
  EXPECT_THROW(KernelPolynomial::parse(""), Error);
  EXPECT_THROW(KernelPolynomial::parse("1 + y"), Error);
  EXPECT_EQ(BivariatePolynomial::parse("2A^2 + z", 'A').coefficient(0, 2), 2);
}

TEST(Polynomial, ShiftAndDivide) {
  // (x - 1)^2 with x = 1 + z y gives z^2 y^2.
  const auto p = KernelPolynomial::parse("x^2 - 2x + 1").substitute_shift(1, 1);
  EXPECT_EQ(p, KernelPolynomial::parse("z^2 x^2"));
  EXPECT_EQ(p.divide_z_power(2), KernelPolynomial::parse("x^2"));
  EXPECT_THROW(p.divide_z_power(3), Error);
  EXPECT_EQ(KernelPolynomial::parse("2z^2x + 4z^3").primitive(), KernelPolynomial::parse("x + 2z"));
}

TEST(KernelRoot, Class1420Prefix) {
  const auto x = kernel_root(kernels::c1420(), 4);
  EXPECT_EQ(x, rs(4, {1, 2, 5, 17, 64}));
}

TEST(KernelRoot, SatisfiesKernel) {
  for (const auto& k : {kernels::c1420(), kernels::c663A()}) {
    const auto x = kernel_root(k, 50);
    EXPECT_EQ(x[0], 1);
    EXPECT_TRUE(k.evaluate(x).is_zero());
  }
}

TEST(KernelRoot, Trivial) {
  EXPECT_EQ(kernel_root(KernelPolynomial::parse("x - 1"), 10), rs(10, {1}));
}

TEST(KernelRoot, RejectsBadStart) {
  EXPECT_THROW(kernel_root(KernelPolynomial::parse("x - 2"), 5), KernelError);
  // (x-1)^2 at z = 0: a double root.
  EXPECT_THROW(kernel_root(kernels::c733(), 5), KernelError);
}

TEST(KernelRoot, Class733OverQuadraticField) {
  const auto x1 = kernel_root_733(5);
  const std::vector<Sqrt5Number> expect = {
      Sqrt5Number(1), Sqrt5Number(Rational(1, 2), Rational(1, 2)), Sqrt5Number(2, 1),
      Sqrt5Number(7, 3), Sqrt5Number(25, 11), Sqrt5Number(96, 43)};
  for (std::size_t i = 0; i < expect.size(); ++i) EXPECT_EQ(x1[i], expect[i]) << i;
  EXPECT_TRUE(kernels::c733().evaluate(kernel_root_733(30)).is_zero());
}

TEST(KernelRoot, QuadraticFactorRoutesAgree) {
  const auto a = symmetric_roots_733(40, ConjugateRoute::quadratic_field);
  const auto b = symmetric_roots_733(40, ConjugateRoute::symmetric);
  EXPECT_EQ(a.sum, b.sum);
  EXPECT_EQ(a.product, b.product);
  EXPECT_EQ(a.sum[1], 1);  // (1+sqrt5)/2 + (1-sqrt5)/2
}

TEST(KernelRoot, QuadraticFactorDividesKernel) {
  EXPECT_THROW(quadratic_factor(kernels::c1833A(), 3, 1, 5), KernelError);
  const auto f = symmetric_roots_1833A(30);
  EXPECT_EQ(f.sum[0], 2);
  EXPECT_EQ(f.product[0], 1);
}

TEST(ClosedForm, PublishedPrefixes) {
  EXPECT_EQ(to_integers(expand_closed_form(ClassId::c1016, 9)), ints({1, 1, 2, 6, 21, 76, 277, 1016, 3756, 13998}));
  EXPECT_EQ(to_integers(expand_closed_form(ClassId::c663A, 8)), ints({1, 1, 2, 5, 15, 50, 178, 663, 2552}));
  EXPECT_EQ(to_integers(expand_closed_form(ClassId::c733, 10)),
            ints({1, 1, 2, 5, 15, 51, 188, 733, 2979, 12495, 53708}));
  EXPECT_EQ(to_integers(expand_closed_form(ClassId::c1833A, 10)),
            ints({1, 1, 2, 6, 22, 90, 396, 1833, 8801, 43441, 219092}));
  EXPECT_EQ(to_integers(expand_closed_form(ClassId::c1420, 7)).back(), 1420);
  EXPECT_EQ(to_integers(expand_closed_form(ClassId::c1176, 7)).back(), 1176);
  EXPECT_EQ(to_integers(expand_closed_form(ClassId::c1253, 7)).back(), 1253);
}

TEST(ClosedForm, NonAlgebraicClassesThrow) {
  for (auto id : {ClassId::c214, ClassId::c247, ClassId::c759, ClassId::c830, ClassId::c1509, ClassId::c1953A,
                  ClassId::c2106}) {
    EXPECT_FALSE(has_closed_form(id));
    EXPECT_THROW(expand_closed_form(id, 5), NoClosedForm);
  }
}

TEST(ClosedForm, NonnegativeIntegersAndMatchesGentree) {
  for (auto id : algebraic) {
    const auto s = expand_closed_form(id, 50);
    const auto v = to_integers(s);
    for (const auto& c : v) EXPECT_GE(c, 0);
    EXPECT_EQ(v, gentree::count_class(id, 50)) << gentree::name(id);
  }
}

TEST(ClosedForm, ConjugateRoutesAgree) {
  EXPECT_EQ(expand_closed_form(ClassId::c733, 50, ConjugateRoute::quadratic_field),
            expand_closed_form(ClassId::c733, 50, ConjugateRoute::symmetric));
}

TEST(MinimalPolynomial, StatedOnes) {
  EXPECT_TRUE(verify_minimal_polynomial(ClassId::c663A, 60));
  EXPECT_TRUE(verify_minimal_polynomial(ClassId::c1420, 60));
  EXPECT_TRUE(verify_minimal_polynomial(ClassId::c1833A, 60));
  EXPECT_TRUE(verify_minimal_polynomial(ClassId::c733, 60));
}

TEST(MinimalPolynomial, DerivedOnes) {
  for (auto id : {ClassId::c1176, ClassId::c1253, ClassId::c1016}) {
    const auto mp = minimal_polynomial(id);
    ASSERT_TRUE(mp);
    EXPECT_EQ(mp->source, MinpolySource::derived);
    EXPECT_TRUE(verify_minimal_polynomial(id, 60)) << gentree::name(id);
  }
}

TEST(MinimalPolynomial, Degrees) {
  for (auto id : algebraic) {
    const auto mp = minimal_polynomial(id);
    ASSERT_TRUE(mp);
    EXPECT_EQ(mp->poly.degree(), gentree::info(id).algebraic_degree) << gentree::name(id);
  }
  EXPECT_FALSE(minimal_polynomial(ClassId::c830));
  EXPECT_THROW(verify_minimal_polynomial(ClassId::c830, 5), Error);
}

TEST(MinimalPolynomial, PerturbationIsDetected) {
  for (auto id : algebraic) {
    auto s = from_integers(gentree::count_class(id, 30), 30);
    const auto poly = minimal_polynomial(id)->poly;
    ASSERT_TRUE(annihilates(poly, s));
    // The A-derivative of some annihilators vanishes at z = 0, so a change
    // near the truncation order can fall beyond it.
    for (std::size_t i : {std::size_t{0}, std::size_t{7}, std::size_t{20}}) {
      auto t = s;
      t[i] += 1;
      EXPECT_FALSE(annihilates(poly, t)) << gentree::name(id) << " @" << i;
    }
  }
}

TEST(Catalytic, Prefixes) {
  EXPECT_EQ(to_integers(iterate_catalytic_system(ClassId::c1176, 7)).back(), 1176);
  EXPECT_EQ(to_integers(iterate_catalytic_system(ClassId::c1016, 9)),
            ints({1, 1, 2, 6, 21, 76, 277, 1016, 3756, 13998}));
  EXPECT_EQ(to_integers(iterate_catalytic_system(ClassId::c663A, 8)), ints({1, 1, 2, 5, 15, 50, 178, 663, 2552}));
  EXPECT_THROW(iterate_catalytic_system(ClassId::c733, 5), Error);
}

TEST(Catalytic, ThreeWayAgreement) {
  for (auto id : algebraic) {
    if (!has_catalytic_system(id)) continue;
    const auto cat = iterate_catalytic_system(id, 50);
    EXPECT_EQ(cat, expand_closed_form(id, 50)) << gentree::name(id);
    EXPECT_EQ(to_integers(cat), gentree::count_class(id, 50)) << gentree::name(id);
  }
}

TEST(Catalytic, ComponentRelations) {
  const auto sol = solve_catalytic_system(ClassId::c1176, 20);
  const auto &B = sol.components.at("B"), &C = sol.components.at("C");
  for (int n = 1; n <= 20; ++n) EXPECT_EQ(C[n], B[n - 1]);
  for (const auto& [name, comp] : sol.components)
    for (int n = 0; n <= 20; ++n) EXPECT_LE(comp.x_degree(n), n) << name << " @" << n;
}

TEST(Catalytic, DividedDifference) {
  EXPECT_EQ(xpoly::divide_one_minus_x({1, -1}), XPolynomial{1});
  EXPECT_EQ(xpoly::divide_one_minus_x({1, 0, -1}), (XPolynomial{1, 1}));
  EXPECT_THROW(xpoly::divide_one_minus_x({1, 1}), Error);
}
