#pragma once

// Polynomials in z and one more variable (x for kernels, A for minimal
// polynomials) with rational coefficients.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "invseq/numeric.hpp"
#include "invseq/series/truncated_series.hpp"

namespace invseq::series {

class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;

  /// Parses a sum of monomials such as "1 - x - z*x + 2*z*x^2 - z^2*x^3" or
  /// "3z^3A^6 - 1/2 A"; `var` names the second variable.
  static BivariatePolynomial parse(std::string_view text, char var = 'x') {
    BivariatePolynomial p;
    p.var_ = var;
    std::size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&] {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw Error("expected a number in '" + std::string(text) + "'");
      return std::string(text.substr(start, i - start));
    };
    skip();
    if (i == text.size()) throw Error("empty polynomial");
    while (i < text.size()) {
      int sign = 1;
      skip();
      if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        sign = text[i] == '-' ? -1 : 1;
        ++i;
        skip();
      }
      Rational coef(1);
      bool seen = false;
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        std::string num = read_int();
        skip();
        if (i < text.size() && text[i] == '/') {
          ++i;
          skip();
          num += "/" + read_int();
        }
        coef = Rational(num);
        coef.canonicalize();
        seen = true;
      }
      int zd = 0, xd = 0;
      for (;;) {
        skip();
        if (i < text.size() && text[i] == '*') {
          ++i;
          skip();
        }
        if (i >= text.size() || (text[i] != 'z' && text[i] != var)) break;
        const char v = text[i++];
        int e = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
          ++i;
          skip();
          e = std::stoi(read_int());
        }
        (v == 'z' ? zd : xd) += e;
        seen = true;
      }
      if (!seen) throw Error("cannot parse polynomial '" + std::string(text) + "'");
      p.add_term(sign * coef, zd, xd);
      skip();
      if (i < text.size() && text[i] != '+' && text[i] != '-')
        throw Error("unexpected '" + std::string(1, text[i]) + "' in polynomial");
    }
    p.trim();
    return p;
  }

  static BivariatePolynomial constant(const Rational& c, char var = 'x') {
    BivariatePolynomial p;
    p.var_ = var;
    p.add_term(c, 0, 0);
    p.trim();
    return p;
  }

  /// The polynomial consisting of the second variable alone.
  static BivariatePolynomial variable(char var = 'x') {
    BivariatePolynomial p;
    p.var_ = var;
    p.add_term(1, 0, 1);
    return p;
  }

  char variable_name() const noexcept { return var_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }  // in the second variable
  int z_degree() const {
    int d = -1;
    for (const auto& row : c_) d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
  }
  bool is_zero() const noexcept { return c_.empty(); }

  Rational coefficient(int zd, int xd) const {
    if (xd < 0 || xd > degree()) return 0;
    const auto& row = c_[static_cast<std::size_t>(xd)];
    if (zd < 0 || zd >= static_cast<int>(row.size())) return 0;
    return row[static_cast<std::size_t>(zd)];
  }

  /// Coefficient of var^j as a polynomial in z.
  const std::vector<Rational>& z_coefficients(int xd) const { return c_.at(static_cast<std::size_t>(xd)); }

  void add_term(const Rational& c, int zd, int xd) {
    if (zd < 0 || xd < 0) throw Error("negative exponent");
    if (static_cast<int>(c_.size()) <= xd) c_.resize(static_cast<std::size_t>(xd) + 1);
    auto& row = c_[static_cast<std::size_t>(xd)];
    if (static_cast<int>(row.size()) <= zd) row.resize(static_cast<std::size_t>(zd) + 1, Rational(0));
    row[static_cast<std::size_t>(zd)] += c;
  }

  BivariatePolynomial& operator+=(const BivariatePolynomial& o) {
    for (int j = 0; j <= o.degree(); ++j) {
      const auto& row = o.c_[static_cast<std::size_t>(j)];
      for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) add_term(row[i], static_cast<int>(i), j);
    }
    trim();
    return *this;
  }
  BivariatePolynomial& operator-=(const BivariatePolynomial& o) { return *this += o * Rational(-1); }

  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
  friend BivariatePolynomial operator*(BivariatePolynomial a, const Rational& s) {
    for (auto& row : a.c_)
      for (auto& v : row) v *= s;
    a.trim();
    return a;
  }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial out;
    out.var_ = a.var_;
    for (int j = 0; j <= a.degree(); ++j)
      for (int k = 0; k <= b.degree(); ++k) {
        const auto& ra = a.c_[static_cast<std::size_t>(j)];
        const auto& rb = b.c_[static_cast<std::size_t>(k)];
        for (std::size_t i = 0; i < ra.size(); ++i) {
          if (ra[i] == 0) continue;
          for (std::size_t l = 0; l < rb.size(); ++l)
            if (rb[l] != 0) out.add_term(ra[i] * rb[l], static_cast<int>(i + l), j + k);
        }
      }
    out.trim();
    return out;
  }

  BivariatePolynomial pow(int e) const {
    if (e < 0) throw Error("negative power of a polynomial");
    BivariatePolynomial r = constant(1, var_);
    for (int k = 0; k < e; ++k) r = r * *this;
    return r;
  }

  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) { return a.c_ == b.c_; }

  /// d/d(var).
  BivariatePolynomial derivative() const {
    BivariatePolynomial out;
    out.var_ = var_;
    for (int j = 1; j <= degree(); ++j) {
      const auto& row = c_[static_cast<std::size_t>(j)];
      for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) out.add_term(row[i] * j, static_cast<int>(i), j - 1);
    }
    out.trim();
    return out;
  }

  /// Coefficients in var of the z = 0 specialization.
  std::vector<Rational> at_z0() const {
    std::vector<Rational> out(c_.size(), Rational(0));
    for (std::size_t j = 0; j < c_.size(); ++j)
      if (!c_[j].empty()) out[j] = c_[j][0];
    return out;
  }

  /// The polynomial obtained by substituting var = c0 + z^k * var.
  BivariatePolynomial substitute_shift(const Rational& c0, int k) const {
    BivariatePolynomial shifted;
    shifted.var_ = var_;
    BivariatePolynomial base;  // c0 + z^k var
    base.var_ = var_;
    base.add_term(c0, 0, 0);
    base.add_term(1, k, 1);
    BivariatePolynomial power = constant(1, var_);
    for (int j = 0; j <= degree(); ++j) {
      BivariatePolynomial coeff;
      coeff.var_ = var_;
      const auto& row = c_[static_cast<std::size_t>(j)];
      for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) coeff.add_term(row[i], static_cast<int>(i), 0);
      shifted += coeff * power;
      power = power * base;
    }
    return shifted;
  }

  /// Divides by z^k; every term must carry at least that power.
  BivariatePolynomial divide_z_power(int k) const {
    BivariatePolynomial out;
    out.var_ = var_;
    for (int j = 0; j <= degree(); ++j) {
      const auto& row = c_[static_cast<std::size_t>(j)];
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] == 0) continue;
        if (static_cast<int>(i) < k) throw Error("polynomial is not divisible by z^" + std::to_string(k));
        out.add_term(row[i], static_cast<int>(i) - k, j);
      }
    }
    out.trim();
    return out;
  }

  /// Removes the largest power of z dividing every term and scales to
  /// coprime integer coefficients with positive leading coefficient in var.
  BivariatePolynomial primitive() const {
    if (is_zero()) return *this;
    int vz = z_degree();
    for (const auto& row : c_)
      for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) vz = std::min(vz, static_cast<int>(i));
    BivariatePolynomial out = divide_z_power(vz);
    Integer num = 0, den = 1;
    for (const auto& row : out.c_)
      for (const auto& v : row) {
        if (v == 0) continue;
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
      }
    Rational scale(den, num);
    scale.canonicalize();
    const auto& lead = out.c_.back();
    for (auto it = lead.rbegin(); it != lead.rend(); ++it)
      if (*it != 0) {
        if (*it < 0) scale = -scale;
        break;
      }
    return out * scale;
  }

  /// Sum_j c_j(z) S^j for a series S, with the order of S.
  template <class F>
  TruncatedSeries<F> evaluate(const TruncatedSeries<F>& s) const {
    const int n = s.order();
    TruncatedSeries<F> acc(n);
    for (int j = degree(); j >= 0; --j) {
      acc = acc * s;
      acc += z_series<F>(j, n);
    }
    return acc;
  }

  /// The coefficient of var^j as a series of the given order.
  template <class F>
  TruncatedSeries<F> z_series(int j, int order) const {
    TruncatedSeries<F> out(order);
    if (j < 0 || j > degree()) return out;
    const auto& row = c_[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < row.size() && static_cast<int>(i) <= order; ++i) out[i] = F(row[i]);
    return out;
  }

  /// Evaluates the z = 0 specialization at a field element.
  template <class F>
  F evaluate_at_z0(const F& value) const {
    F acc(0);
    const auto c0 = at_z0();
    for (int j = degree(); j >= 0; --j) acc = acc * value + F(c0[static_cast<std::size_t>(j)]);
    return acc;
  }

  std::string to_string() const {
    std::string out;
    for (int j = degree(); j >= 0; --j) {
      const auto& row = c_[static_cast<std::size_t>(j)];
      for (int i = static_cast<int>(row.size()) - 1; i >= 0; --i) {
        const Rational& c = row[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational mag = abs(c);
        out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        std::string mono;
        if (i > 0) mono += i == 1 ? "z" : "z^" + std::to_string(i);
        if (j > 0) mono += (mono.empty() ? "" : "*") + (j == 1 ? std::string(1, var_) : std::string(1, var_) + "^" + std::to_string(j));
        if (mono.empty())
          out += mag.get_str();
        else
          out += (mag == 1 ? "" : mag.get_str() + "*") + mono;
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    for (auto& row : c_)
      while (!row.empty() && row.back() == 0) row.pop_back();
    while (!c_.empty() && c_.back().empty()) c_.pop_back();
  }

  char var_ = 'x';
  std::vector<std::vector<Rational>> c_;  // c_[j][i]: coefficient of z^i var^j
};

}  // namespace invseq::series
