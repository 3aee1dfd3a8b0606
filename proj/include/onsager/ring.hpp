#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "onsager/poly.hpp"

namespace onsager {

/// Element of the localized ring Q[t, t^-1, (t-1)^-1], stored as
/// num / (t^tpow (t-1)^upow) with the fraction fully reduced:
/// tpow > 0 implies num(0) != 0, upow > 0 implies num(1) != 0, and zero is
/// (0, 0, 0). Equality of canonical forms is equality in the ring.
class RingElem {
 public:
  RingElem() = default;
  RingElem(const Rational& c) : num_(Poly::constant(c)) {}  // NOLINT(google-explicit-constructor)
  RingElem(long c) : RingElem(Rational(c)) {}               // NOLINT(google-explicit-constructor)
  RingElem(int c) : RingElem(Rational(c)) {}                // NOLINT(google-explicit-constructor)
  explicit RingElem(Poly p) : num_(std::move(p)) {}

  /// Canonical form of num / (t^tpow (t-1)^upow).
  static RingElem make(Poly num, unsigned tpow, unsigned upow);
  static RingElem t() { return RingElem(Poly::t()); }
  /// t^k (t-1)^m for arbitrary integer exponents.
  static RingElem unit(long k, long m);
  /// t' = 1 - t^-1 = (t-1)/t
  static RingElem t_prime() { return unit(-1, 1); }
  /// t'' = (1-t)^-1
  static RingElem t_dprime() { return -unit(0, -1); }

  [[nodiscard]] const Poly& num() const { return num_; }
  [[nodiscard]] unsigned tpow() const { return tpow_; }
  [[nodiscard]] unsigned upow() const { return upow_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_polynomial() const { return tpow_ == 0 && upow_ == 0; }
  /// The numerator when the element is a polynomial in t.
  [[nodiscard]] std::optional<Poly> as_poly() const;

  /// Multiplicative inverse; defined exactly for the units c t^k (t-1)^m.
  [[nodiscard]] std::optional<RingElem> inverse() const;
  /// Integer power; negative exponents require a unit. Throws std::domain_error otherwise.
  [[nodiscard]] RingElem pow(long n) const;

  RingElem operator-() const;
  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);
  RingElem& operator*=(const RingElem& o);
  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(RingElem a, const RingElem& b) { return a *= b; }
  friend bool operator==(const RingElem&, const RingElem&) = default;

  /// e.g. "t^2 - 1", "(-1 + t) / t", "1 / t^2 / (t-1)^3".
  [[nodiscard]] std::string str() const;
  /// Inverse of str(). Throws std::invalid_argument on malformed text.
  static RingElem parse(std::string_view text);

 private:
  Poly num_;
  unsigned tpow_ = 0;
  unsigned upow_ = 0;
};

/// The substitution automorphisms: phi t -> (t-1)/t (order 3), phi2 = phi^2
/// t -> 1/(1-t), tauA t -> 1-t (order 2).
enum class RingAut { phi, phi2, tauA };

RingElem apply(RingAut which, const RingElem& a);

enum class RingSubset { poly, t_poly, tm1_poly };

/// Membership in Q[t], tQ[t] or (t-1)Q[t].
bool in_subset(const RingElem& a, RingSubset which);

}  // namespace onsager
