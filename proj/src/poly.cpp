#include "onsager/poly.hpp"

#include <stdexcept>

namespace onsager {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::t_minus_1_pow(std::size_t n) { return Poly({-1, 1}).pow(n); }

Poly Poly::neg_t_pow(std::size_t n) { return monomial(n % 2 == 0 ? Rational(1) : Rational(-1), n); }

Rational Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

Rational Poly::eval(const Rational& at) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::times_t_pow(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Rational> v(k);
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(std::move(v));
}

Poly Poly::div_t() const {
  if (is_zero()) return *this;
  if (!c_.front().is_zero()) throw std::domain_error("Poly::div_t: constant term is nonzero");
  return Poly(std::vector<Rational>(c_.begin() + 1, c_.end()));
}

Poly Poly::div_t_minus_1() const {
  if (is_zero()) return *this;
  // Synthetic division by (t - 1), top down.
  const std::size_t n = c_.size();
  std::vector<Rational> q(n - 1);
  Rational carry;
  for (std::size_t i = n; i-- > 1;) {
    carry += c_[i];
    q[i - 1] = carry;
  }
  if (!(carry + c_[0]).is_zero()) {
    throw std::domain_error("Poly::div_t_minus_1: polynomial does not vanish at 1");
  }
  return Poly(std::move(q));
}

Poly Poly::pow(std::size_t n) const {
  Poly result = constant(1);
  Poly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (i == 0) {
      out += mag.str();
      continue;
    }
    if (!mag.is_one()) out += mag.str();
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::vector<Rational> shift_coords(const Poly& p, ShiftCenter center) {
  std::vector<Rational> out;
  if (center == ShiftCenter::neg_t) {
    out.assign(p.coeffs().begin(), p.coeffs().end());
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return out;
  }
  // Repeated synthetic division by (t - 1): the remainders are the Taylor
  // coefficients at t = 1.
  Poly rest = p;
  while (!rest.is_zero()) {
    const Rational r = rest.eval(Rational(1));
    out.push_back(r);
    rest = (rest - Poly::constant(r)).div_t_minus_1();
  }
  return out;
}

Poly from_shift_coords(std::span<const Rational> coords, ShiftCenter center) {
  Poly acc;
  const Poly step = center == ShiftCenter::t_minus_1 ? Poly({-1, 1}) : Poly({0, -1});
  for (auto it = coords.rbegin(); it != coords.rend(); ++it) acc = acc * step + Poly::constant(*it);
  return acc;
}

}  // namespace onsager
