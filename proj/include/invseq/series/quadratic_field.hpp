#pragma once

#include <string>

#include "invseq/numeric.hpp"

namespace invseq::series {

/// u + v sqrt(D) with exact rational u, v. D must be a positive non-square.
template <long D>
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(long u) : u_(u) {}
  QuadraticNumber(Rational u) : u_(std::move(u)) {}
  QuadraticNumber(Rational u, Rational v) : u_(std::move(u)), v_(std::move(v)) {}

  static QuadraticNumber root() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const noexcept { return u_; }
  const Rational& radical_part() const noexcept { return v_; }
  bool is_rational() const { return v_ == 0; }

  QuadraticNumber conjugate() const { return {u_, -v_}; }
  Rational norm() const { return u_ * u_ - D * v_ * v_; }

  QuadraticNumber& operator+=(const QuadraticNumber& o) {
    u_ += o.u_;
    v_ += o.v_;
    return *this;
  }
  QuadraticNumber& operator-=(const QuadraticNumber& o) {
    u_ -= o.u_;
    v_ -= o.v_;
    return *this;
  }
  QuadraticNumber& operator*=(const QuadraticNumber& o) {
    Rational u = u_ * o.u_ + D * v_ * o.v_;
    Rational v = u_ * o.v_ + v_ * o.u_;
    u_ = std::move(u);
    v_ = std::move(v);
    return *this;
  }
  QuadraticNumber& operator/=(const QuadraticNumber& o) {
    const Rational n = o.norm();
    if (n == 0) throw Error("division by zero in quadratic field");
    *this *= o.conjugate();
    u_ /= n;
    v_ /= n;
    return *this;
  }

  friend QuadraticNumber operator+(QuadraticNumber a, const QuadraticNumber& b) { return a += b; }
  friend QuadraticNumber operator-(QuadraticNumber a, const QuadraticNumber& b) { return a -= b; }
  friend QuadraticNumber operator*(QuadraticNumber a, const QuadraticNumber& b) { return a *= b; }
  friend QuadraticNumber operator/(QuadraticNumber a, const QuadraticNumber& b) { return a /= b; }
  friend QuadraticNumber operator-(const QuadraticNumber& a) { return {-a.u_, -a.v_}; }
  friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
    return a.u_ == b.u_ && a.v_ == b.v_;
  }

  std::string to_string() const {
    if (v_ == 0) return u_.get_str();
    std::string out = u_ == 0 ? "" : u_.get_str() + (v_ > 0 ? "+" : "");
    return out + v_.get_str() + "*sqrt(" + std::to_string(D) + ")";
  }

 private:
  Rational u_{0};
  Rational v_{0};
};

using Sqrt5Number = QuadraticNumber<5>;

}  // namespace invseq::series
