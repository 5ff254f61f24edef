#pragma once

// Power series in z known exactly through a fixed order N. Results of
// binary operations carry the smaller of the two orders.

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "invseq/numeric.hpp"

namespace invseq::series {

template <class F>
class TruncatedSeries {
 public:
  TruncatedSeries() : coeffs_(1, F(0)) {}

  /// The zero series known through z^order.
  explicit TruncatedSeries(int order) : coeffs_(checked(order) + 1, F(0)) {}

  /// Coefficients c_0, c_1, ...; missing ones are zero, extra ones are dropped.
  TruncatedSeries(int order, const std::vector<F>& coeffs) : TruncatedSeries(order) {
    const std::size_t n = std::min(coeffs.size(), coeffs_.size());
    std::copy_n(coeffs.begin(), n, coeffs_.begin());
  }

  TruncatedSeries(int order, std::initializer_list<F> coeffs)
      : TruncatedSeries(order, std::vector<F>(coeffs)) {}

  static TruncatedSeries constant(const F& c, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// The series z (zero when order is 0).
  static TruncatedSeries z(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = F(1);
    return s;
  }

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const F& operator[](std::size_t i) const { return coeffs_[i]; }
  F& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<F>& coefficients() const noexcept { return coeffs_; }

  /// Index of the first nonzero coefficient, or order()+1 for the zero series.
  int valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!(coeffs_[i] == F(0))) return static_cast<int>(i);
    return order() + 1;
  }

  /// Same series known to a different order; extending pads with zeros, so
  /// only do that when the series is known to be a polynomial.
  TruncatedSeries with_order(int order) const { return TruncatedSeries(order, coeffs_); }

  /// Divides by z^k. The first k coefficients must vanish; the order drops by k.
  TruncatedSeries shift_down(int k) const {
    if (k < 0 || k > order()) throw Error("shift exceeds the series order");
    for (int i = 0; i < k; ++i)
      if (!(coeffs_[static_cast<std::size_t>(i)] == F(0)))
        throw Error("series is not divisible by z^" + std::to_string(k));
    return TruncatedSeries(order() - k, std::vector<F>(coeffs_.begin() + k, coeffs_.end()));
  }

  /// Multiplies by z^k, keeping the order.
  TruncatedSeries shift_up(int k) const {
    TruncatedSeries s(order());
    for (int i = 0; i + k <= order(); ++i)
      s.coeffs_[static_cast<std::size_t>(i + k)] = coeffs_[static_cast<std::size_t>(i)];
    return s;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    shrink_to(o.order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    shrink_to(o.order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  TruncatedSeries& operator*=(const F& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator-(TruncatedSeries a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }
  friend TruncatedSeries operator*(TruncatedSeries a, const F& c) { return a *= c; }
  friend TruncatedSeries operator*(const F& c, TruncatedSeries a) { return a *= c; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries out(n);
    const int va = a.valuation(), vb = b.valuation();
    for (int i = va; i <= n; ++i) {
      const F& ai = a.coeffs_[static_cast<std::size_t>(i)];
      if (ai == F(0)) continue;
      for (int j = vb; i + j <= n; ++j)
        out.coeffs_[static_cast<std::size_t>(i + j)] += ai * b.coeffs_[static_cast<std::size_t>(j)];
    }
    return out;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  /// 1/a; the constant term must be nonzero.
  TruncatedSeries inverse() const {
    const F& c0 = coeffs_[0];
    if (c0 == F(0)) throw Error("series with zero constant term has no inverse");
    const int n = order();
    TruncatedSeries out(n);
    const F inv0 = F(1) / c0;
    out.coeffs_[0] = inv0;
    for (int k = 1; k <= n; ++k) {
      F acc(0);
      for (int i = 1; i <= k; ++i)
        acc += coeffs_[static_cast<std::size_t>(i)] * out.coeffs_[static_cast<std::size_t>(k - i)];
      out.coeffs_[static_cast<std::size_t>(k)] = -(acc * inv0);
    }
    return out;
  }

  /// a/b; b must have a nonzero constant term (use shift_down first otherwise).
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (b.coeffs_[0] == F(0))
      throw Error("division by a series with zero constant term; shift the valuation first");
    return a * b.inverse();
  }

  /// The square root with constant term 1; the constant term must be 1.
  TruncatedSeries sqrt() const {
    if (!(coeffs_[0] == F(1))) throw Error("sqrt needs constant term 1");
    const int n = order();
    TruncatedSeries out(n);
    out.coeffs_[0] = F(1);
    const F half = F(1) / F(2);
    for (int k = 1; k <= n; ++k) {
      F acc = coeffs_[static_cast<std::size_t>(k)];
      for (int i = 1; i < k; ++i)
        acc -= out.coeffs_[static_cast<std::size_t>(i)] * out.coeffs_[static_cast<std::size_t>(k - i)];
      out.coeffs_[static_cast<std::size_t>(k)] = acc * half;
    }
    return out;
  }

  TruncatedSeries pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    TruncatedSeries result = constant(F(1), order()), base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  /// Formal derivative d/dz; the order drops by one.
  TruncatedSeries derivative() const {
    if (order() == 0) return TruncatedSeries(0);
    TruncatedSeries out(order() - 1);
    for (int i = 1; i <= order(); ++i)
      out.coeffs_[static_cast<std::size_t>(i - 1)] = coeffs_[static_cast<std::size_t>(i)] * F(i);
    return out;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  bool is_zero() const { return valuation() > order(); }

 private:
  static std::size_t checked(int order) {
    if (order < 0) throw Error("series order must be nonnegative");
    return static_cast<std::size_t>(order);
  }

  void shrink_to(int order) {
    if (order < this->order()) coeffs_.resize(static_cast<std::size_t>(order) + 1);
  }

  std::vector<F> coeffs_;
};

using RationalSeries = TruncatedSeries<Rational>;

/// Coefficients as integers; throws if any is not integral.
inline std::vector<Integer> to_integers(const RationalSeries& s) {
  std::vector<Integer> out;
  out.reserve(s.coefficients().size());
  for (const auto& c : s.coefficients()) {
    if (c.get_den() != 1) throw Error("coefficient " + c.get_str() + " is not an integer");
    out.push_back(c.get_num());
  }
  return out;
}

inline RationalSeries from_integers(const std::vector<Integer>& v, int order) {
  RationalSeries s(order);
  for (int i = 0; i <= order && static_cast<std::size_t>(i) < v.size(); ++i)
    s[static_cast<std::size_t>(i)] = Rational(v[static_cast<std::size_t>(i)]);
  return s;
}

}  // namespace invseq::series
