#include "polyhull/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace polyhull {

namespace {

bool all_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num_text = body.substr(0, slash);
  std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "'");
  }
  Integer num(std::string(num_text), 10);
  Integer den(std::string(den_text), 10);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                "'");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer result;
  mpz_gcd(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return result;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer result;
  mpz_lcm(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return result;
}

}  // namespace polyhull
