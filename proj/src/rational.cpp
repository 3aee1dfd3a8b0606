#include "onsager/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace onsager {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!valid_integer(num, true)) {
    throw std::invalid_argument("Rational: malformed numerator '" + std::string(text) + "'");
  }
  std::string num_str(num);
  if (num_str[0] == '+') num_str.erase(0, 1);
  mpz_class n(num_str, 10);
  if (slash == std::string_view::npos) return Rational(n);

  const auto den = text.substr(slash + 1);
  if (!valid_integer(den, false)) {
    throw std::invalid_argument("Rational: malformed denominator '" + std::string(text) + "'");
  }
  mpz_class d{std::string(den), 10};
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  return Rational(mpq_class(n, d));
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace onsager
