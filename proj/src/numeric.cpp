#include "lsrk/numeric.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace lsrk {

namespace {

Rational pow10(long k) {
  boost::multiprecision::mpz_int p = boost::multiprecision::pow(boost::multiprecision::mpz_int(10),
                                                                static_cast<unsigned>(k));
  return Rational(p);
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("not a number: '" + std::string(text) + "'");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Rational parseDecimal(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  long scale = 0;
  bool seenDot = false, any = false;
  std::size_t i = 0;
  for (; i < s.size(); ++i) {
    char ch = s[i];
    if (ch >= '0' && ch <= '9') {
      digits.push_back(ch);
      any = true;
      if (seenDot) ++scale;
    } else if (ch == '.' && !seenDot) {
      seenDot = true;
    } else {
      break;
    }
  }
  if (!any) bad(whole);
  long expo = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') bad(whole);
    auto rest = s.substr(i + 1);
    if (!rest.empty() && rest[0] == '+') rest.remove_prefix(1);
    auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), expo);
    if (ec != std::errc() || p != rest.data() + rest.size()) bad(whole);
  }
  // a leading 0 would make gmp read octal
  auto nz = digits.find_first_not_of('0');
  digits = nz == std::string::npos ? "0" : digits.substr(nz);
  Rational r{boost::multiprecision::mpz_int(digits)};
  long e = expo - scale;
  if (e > 0) r *= pow10(e);
  if (e < 0) r /= pow10(-e);
  return neg ? Rational(-r) : r;
}

}  // namespace

Rational parseRational(std::string_view text) {
  auto s = trim(text);
  if (s.empty()) bad(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return parseDecimal(s, text);
  Rational num = parseDecimal(trim(s.substr(0, slash)), text);
  Rational den = parseDecimal(trim(s.substr(slash + 1)), text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return num / den;
}

std::string formatRational(const Rational& x) { return x.str(); }

std::string formatDouble(double x) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return std::string(buf, p);
}

Scalar Scalar::parse(std::string_view text, bool exact) {
  if (exact) return Scalar(parseRational(text));
  return Scalar(parseAs<double>(text));
}

double Scalar::toDouble() const {
  if (auto* r = std::get_if<Rational>(&v_)) return lsrk::toDouble(*r);
  return std::get<double>(v_);
}

Rational Scalar::toRational() const {
  if (auto* r = std::get_if<Rational>(&v_)) return *r;
  double d = std::get<double>(v_);
  if (!std::isfinite(d)) throw std::domain_error("non-finite value has no rational form");
  return Rational(d);
}

std::string Scalar::str() const {
  if (auto* r = std::get_if<Rational>(&v_)) return formatRational(*r);
  return formatDouble(std::get<double>(v_));
}

namespace {
template <class Op>
Scalar combine(const Scalar& x, const Scalar& y, Op op) {
  if (x.isExact() && y.isExact()) return Scalar(Rational(op(x.toRational(), y.toRational())));
  return Scalar(double(op(x.toDouble(), y.toDouble())));
}
}  // namespace

Scalar operator+(const Scalar& x, const Scalar& y) {
  return combine(x, y, [](const auto& a, const auto& b) { return a + b; });
}
Scalar operator-(const Scalar& x, const Scalar& y) {
  return combine(x, y, [](const auto& a, const auto& b) { return a - b; });
}
Scalar operator*(const Scalar& x, const Scalar& y) {
  return combine(x, y, [](const auto& a, const auto& b) { return a * b; });
}
Scalar operator/(const Scalar& x, const Scalar& y) {
  if (x.isExact() && y.isExact()) {
    if (y.toRational() == 0) throw std::domain_error("division by exact zero");
    return Scalar(Rational(x.toRational() / y.toRational()));
  }
  return Scalar(x.toDouble() / y.toDouble());
}
Scalar Scalar::operator-() const {
  if (isExact()) return Scalar(Rational(-toRational()));
  return Scalar(-toDouble());
}
bool operator==(const Scalar& x, const Scalar& y) {
  if (x.isExact() && y.isExact()) return x.toRational() == y.toRational();
  return x.toDouble() == y.toDouble();
}

}  // namespace lsrk
