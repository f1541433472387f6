#include "realbezout/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace rbz {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(const BigInt& value) { return value.get_str(10); }

BigInt factorial(std::uint64_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt pow(const BigInt& base, std::uint64_t exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow(const Rational& base, std::uint64_t exponent) {
  BigInt n = pow(BigInt(base.get_num()), exponent);
  BigInt d = pow(BigInt(base.get_den()), exponent);
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational ratio(long n, long d) {
  if (d == 0) throw std::invalid_argument("ratio: zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

bool rational_sqrt(const Rational& value, Rational& root) {
  if (value < 0) return false;
  const BigInt& num = value.get_num();
  const BigInt& den = value.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  BigInt rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

Rational simplest_rational_between(const Rational& lo_in, const Rational& hi_in) {
  if (lo_in > hi_in) throw std::invalid_argument("simplest_rational_between: empty interval");
  if (lo_in <= 0 && hi_in >= 0) return Rational(0);
  if (hi_in < 0) return -simplest_rational_between(-hi_in, -lo_in);

  // Stern-Brocot descent via continued fractions, 0 < lo <= hi.
  Rational lo = lo_in, hi = hi_in;
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  // lo and hi share the integer part fl; recurse on reciprocals of fractional parts.
  Rational inner = simplest_rational_between(1 / (hi - fl), 1 / (lo - fl));
  Rational r = Rational(fl) + 1 / inner;
  r.canonicalize();
  return r;
}

}  // namespace rbz
