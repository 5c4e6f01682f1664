#include "a3kit/rational.hpp"

#include <cctype>
#include <string>

#include "a3kit/error.hpp"

namespace a3kit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::Parse, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view original = text;
  auto fail = [&](const char* why) -> Error {
    return Error(ErrorKind::Parse, "invalid rational \"" + std::string(original) + "\": " + why);
  };
  std::string_view num = text;
  std::string_view den;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den)) throw fail("denominator must be a positive integer");
  }
  std::string_view digits = num;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits)) throw fail("numerator must be an integer");

  Rational r;
  mpz_class n(std::string(num), 10);
  mpz_class d(1);
  if (!den.empty()) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) throw fail("zero denominator");
  }
  r.q_ = mpq_class(n, d);
  r.q_.canonicalize();
  return r;
}

Rational Rational::numerator() const {
  Rational r;
  r.q_ = mpq_class(q_.get_num());
  return r;
}

Rational Rational::denominator() const {
  Rational r;
  r.q_ = mpq_class(q_.get_den());
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::NotInvertible, "division by zero");
  q_ /= o.q_;
  return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  mpq_class t = a.q_ * b.q_;
  q_ += t;
}

void Rational::sub_product(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  mpq_class t = a.q_ * b.q_;
  q_ -= t;
}

}  // namespace a3kit
