#pragma once

#include <iosfwd>
#include <string>
#include <tuple>
#include <vector>

#include "polybern/rational.hpp"

namespace polybern {

/// Dense univariate polynomial over Rat, lowest degree first.
///
/// Canonical form: no trailing zero coefficients. The zero polynomial has an
/// empty coefficient vector and degree -1.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<Rat> coeffs);
  Poly1(std::initializer_list<Rat> coeffs) : Poly1(std::vector<Rat>(coeffs)) {}

  static Poly1 constant(const Rat& c);
  static Poly1 monomial(const Rat& c, std::size_t degree);
  /// (x + shift)^n expanded.
  static Poly1 binomial_power(const Rat& shift, std::size_t n);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i, zero past the degree.
  Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
  Rat leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

  Rat operator()(const Rat& x) const;

  Poly1 derivative() const;
  /// Antiderivative with zero constant term.
  Poly1 integral() const;
  /// p(scale * x + shift).
  Poly1 compose_affine(const Rat& scale, const Rat& shift) const;

  Poly1& operator+=(const Poly1& rhs);
  Poly1& operator-=(const Poly1& rhs);
  Poly1& operator*=(const Rat& c);

  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator-(Poly1 a) { return a *= Rat(-1); }
  friend Poly1 operator*(Poly1 a, const Rat& c) { return a *= c; }
  friend Poly1 operator*(const Rat& c, Poly1 a) { return a *= c; }
  friend Poly1 operator*(const Poly1& a, const Poly1& b);
  friend bool operator==(const Poly1& a, const Poly1& b) { return a.coeffs_ == b.coeffs_; }

  std::vector<std::string> coeff_strings() const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly1& p);

/// Dense bivariate polynomial over Rat stored as sum_i x^i * row_i(y).
///
/// Canonical form: every row is a canonical Poly1 and there are no trailing
/// zero rows; the zero polynomial has no rows.
class Poly2 {
 public:
  Poly2() = default;
  explicit Poly2(std::vector<Poly1> rows);

  static Poly2 constant(const Rat& c);
  static Poly2 from_x(const Poly1& p);
  static Poly2 from_y(const Poly1& p);

  bool is_zero() const { return rows_.empty(); }
  long x_degree() const { return static_cast<long>(rows_.size()) - 1; }
  long total_degree() const;
  const std::vector<Poly1>& rows() const { return rows_; }
  Rat coeff(std::size_t i, std::size_t j) const {
    return i < rows_.size() ? rows_[i].coeff(j) : Rat(0);
  }

  Rat operator()(const Rat& x, const Rat& y) const;
  /// q(x, y) = p(y, x).
  Poly2 swap_xy() const;

  Poly2& operator+=(const Poly2& rhs);
  Poly2& operator-=(const Poly2& rhs);
  Poly2& operator*=(const Rat& c);

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(Poly2 a, const Rat& c) { return a *= c; }
  friend Poly2 operator*(const Rat& c, Poly2 a) { return a *= c; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.rows_ == b.rows_; }

  /// Nonzero terms as (x-degree, y-degree, coefficient), lexicographic order.
  std::vector<std::tuple<std::size_t, std::size_t, Rat>> terms() const;

 private:
  void trim();
  std::vector<Poly1> rows_;
};

std::ostream& operator<<(std::ostream& os, const Poly2& p);

}  // namespace polybern
