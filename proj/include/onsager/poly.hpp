#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "onsager/rational.hpp"

namespace onsager {

/// Dense univariate polynomial over Q in t. Index i holds the coefficient of t^i;
/// the top coefficient is nonzero, and zero is the empty sequence.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t degree);
  static Poly t() { return monomial(Rational(1), 1); }
  /// (t - 1)^n
  static Poly t_minus_1_pow(std::size_t n);
  /// (-t)^n
  static Poly neg_t_pow(std::size_t n);

  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] bool is_constant() const { return c_.size() <= 1; }
  /// Degree; -1 for the zero polynomial.
  [[nodiscard]] long degree() const { return static_cast<long>(c_.size()) - 1; }
  [[nodiscard]] std::size_t size() const { return c_.size(); }
  [[nodiscard]] std::span<const Rational> coeffs() const { return c_; }
  /// Coefficient of t^i, zero beyond the degree.
  [[nodiscard]] Rational coeff(std::size_t i) const;
  [[nodiscard]] Rational eval(const Rational& at) const;

  [[nodiscard]] Poly times_t_pow(std::size_t k) const;
  /// Exact division by t; requires coeff(0) == 0.
  [[nodiscard]] Poly div_t() const;
  /// Exact division by (t - 1); requires eval(1) == 0.
  [[nodiscard]] Poly div_t_minus_1() const;
  [[nodiscard]] Poly pow(std::size_t n) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Ascending powers, e.g. "2 - 2t + 1/3t^2"; "0" for zero.
  [[nodiscard]] std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

enum class ShiftCenter { t_minus_1, neg_t };

/// Coefficients c_i with p = sum c_i (t-1)^i, or p = sum c_i (-t)^i.
std::vector<Rational> shift_coords(const Poly& p, ShiftCenter center);
/// Inverse of shift_coords.
Poly from_shift_coords(std::span<const Rational> coords, ShiftCenter center);

}  // namespace onsager
