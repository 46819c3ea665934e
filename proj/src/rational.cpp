#include "nmfo/rational.hpp"

#include <cctype>

#include "nmfo/errors.hpp"

namespace nmfo {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw Error("malformed rational '" + std::string(text) + "'");
  const mpz_class d = to_mpz(den);
  if (d == 0) throw Error("rational with zero denominator '" + std::string(text) + "'");
  return Rational(mpq_class(to_mpz(num), d));
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

mpz_class Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.sign() == 0) throw Error("division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace nmfo
