#include "onsager/ring.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace onsager {

RingElem RingElem::make(Poly num, unsigned tpow, unsigned upow) {
  RingElem r;
  if (num.is_zero()) return r;
  while (tpow > 0 && num.coeff(0).is_zero()) {
    num = num.div_t();
    --tpow;
  }
  while (upow > 0 && num.eval(Rational(1)).is_zero()) {
    num = num.div_t_minus_1();
    --upow;
  }
  r.num_ = std::move(num);
  r.tpow_ = tpow;
  r.upow_ = upow;
  return r;
}

RingElem RingElem::unit(long k, long m) {
  Poly num = Poly::constant(1).times_t_pow(static_cast<std::size_t>(std::max(k, 0L)));
  if (m > 0) num = num * Poly::t_minus_1_pow(static_cast<std::size_t>(m));
  return make(std::move(num), static_cast<unsigned>(std::max(-k, 0L)),
              static_cast<unsigned>(std::max(-m, 0L)));
}

std::optional<Poly> RingElem::as_poly() const {
  if (!is_polynomial()) return std::nullopt;
  return num_;
}

std::optional<RingElem> RingElem::inverse() const {
  if (is_zero()) return std::nullopt;
  Poly rest = num_;
  long a = 0;
  long b = 0;
  while (rest.coeff(0).is_zero()) {
    rest = rest.div_t();
    ++a;
  }
  while (rest.eval(Rational(1)).is_zero()) {
    rest = rest.div_t_minus_1();
    ++b;
  }
  if (!rest.is_constant()) return std::nullopt;
  const Rational c = rest.coeff(0);
  return unit(static_cast<long>(tpow_) - a, static_cast<long>(upow_) - b) *
         RingElem(Rational(1) / c);
}

RingElem RingElem::pow(long n) const {
  RingElem base = *this;
  if (n < 0) {
    auto inv = inverse();
    if (!inv) throw std::domain_error("RingElem::pow: negative power of a non-unit");
    base = *inv;
    n = -n;
  }
  RingElem result(1);
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

RingElem RingElem::operator-() const {
  RingElem r = *this;
  r.num_ = -r.num_;
  return r;
}

namespace {

// num scaled onto the common denominator t^T (t-1)^U.
Poly lift(const RingElem& a, unsigned T, unsigned U) {
  Poly p = a.num().times_t_pow(T - a.tpow());
  if (U > a.upow()) p = p * Poly::t_minus_1_pow(U - a.upow());
  return p;
}

}  // namespace

RingElem& RingElem::operator+=(const RingElem& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const unsigned T = std::max(tpow_, o.tpow_);
  const unsigned U = std::max(upow_, o.upow_);
  return *this = make(lift(*this, T, U) + lift(o, T, U), T, U);
}

RingElem& RingElem::operator-=(const RingElem& o) { return *this += -o; }

RingElem& RingElem::operator*=(const RingElem& o) {
  if (is_zero() || o.is_zero()) return *this = RingElem();
  return *this = make(num_ * o.num_, tpow_ + o.tpow_, upow_ + o.upow_);
}

std::string RingElem::str() const {
  if (is_polynomial()) return num_.str();
  const bool multi_term =
      std::count_if(num_.coeffs().begin(), num_.coeffs().end(),
                    [](const Rational& c) { return !c.is_zero(); }) > 1;
  std::string out = multi_term ? "(" + num_.str() + ")" : num_.str();
  if (tpow_ > 0) out += tpow_ == 1 ? " / t" : " / t^" + std::to_string(tpow_);
  if (upow_ > 0) out += upow_ == 1 ? " / (t-1)" : " / (t-1)^" + std::to_string(upow_);
  return out;
}

namespace {

class RingParser {
 public:
  explicit RingParser(std::string_view s) : s_(s) {}

  RingElem run() {
    skip_ws();
    Poly num;
    if (peek() == '(') {
      ++pos_;
      num = poly();
      skip_ws();
      expect(')');
    } else {
      num = poly();
    }
    unsigned tp = 0;
    unsigned up = 0;
    skip_ws();
    while (peek() == '/') {
      ++pos_;
      skip_ws();
      if (peek() == 't') {
        ++pos_;
        tp += exponent();
      } else if (peek() == '(') {
        ++pos_;
        skip_ws();
        expect('t');
        skip_ws();
        expect('-');
        skip_ws();
        expect('1');
        skip_ws();
        expect(')');
        up += exponent();
      } else {
        fail("expected 't' or '(t-1)' after '/'");
      }
      skip_ws();
    }
    if (pos_ != s_.size()) fail("trailing input");
    return RingElem::make(std::move(num), tp, up);
  }

 private:
  Poly poly() {
    Poly acc;
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        break;
      }
      first = false;
      Rational coef(1);
      bool have_coef = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        const std::size_t start = pos_;
        digits();
        if (peek() == '/' && pos_ + 1 < s_.size() &&
            std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
          ++pos_;
          digits();
        }
        coef = Rational::parse(s_.substr(start, pos_ - start));
        have_coef = true;
      }
      std::size_t deg = 0;
      if (peek() == 't') {
        ++pos_;
        deg = exponent();
      } else if (!have_coef) {
        fail("expected a coefficient or 't'");
      }
      acc += Poly::monomial(sign < 0 ? -coef : coef, deg);
    }
    return acc;
  }

  unsigned exponent() {
    if (peek() != '^') return 1;
    ++pos_;
    const std::size_t start = pos_;
    digits();
    return static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
  }

  void digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected digits");
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("RingElem::parse: " + what + " at position " +
                                std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

struct SubstitutionData {
  RingElem image;        // image of t
  RingElem image_inv;    // image of t^-1
  RingElem image_m1_inv; // image of (t-1)^-1
};

SubstitutionData substitution(RingAut which) {
  switch (which) {
    case RingAut::phi:  // t -> (t-1)/t, t - 1 -> -1/t
      return {RingElem::unit(-1, 1), RingElem::unit(1, -1), -RingElem::t()};
    case RingAut::phi2:  // t -> -1/(t-1), t - 1 -> -t/(t-1)
      return {-RingElem::unit(0, -1), -RingElem::unit(0, 1), -RingElem::unit(-1, 1)};
    case RingAut::tauA:  // t -> 1 - t, t - 1 -> -t
      return {RingElem(1) - RingElem::t(), -RingElem::unit(0, -1), -RingElem::unit(-1, 0)};
  }
  throw std::invalid_argument("unknown ring automorphism");
}

}  // namespace

RingElem RingElem::parse(std::string_view text) { return RingParser(text).run(); }

RingElem apply(RingAut which, const RingElem& a) {
  if (a.is_zero()) return a;
  const SubstitutionData sub = substitution(which);
  RingElem acc;
  const auto coeffs = a.num().coeffs();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * sub.image + RingElem(*it);
  return acc * sub.image_inv.pow(a.tpow()) * sub.image_m1_inv.pow(a.upow());
}

bool in_subset(const RingElem& a, RingSubset which) {
  if (!a.is_polynomial()) return false;
  switch (which) {
    case RingSubset::poly:
      return true;
    case RingSubset::t_poly:
      return a.num().coeff(0).is_zero();
    case RingSubset::tm1_poly:
      return a.num().eval(Rational(1)).is_zero();
  }
  return false;
}

}  // namespace onsager
