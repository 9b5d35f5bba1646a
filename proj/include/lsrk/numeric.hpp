#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

namespace lsrk {

// expression templates off: keeps auto and generic code sane
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

inline double toDouble(double x) { return x; }
inline double toDouble(const Rational& x) { return x.convert_to<double>(); }

inline double absValue(double x) { return std::fabs(x); }
inline Rational absValue(const Rational& x) { return boost::multiprecision::abs(x); }

// parses "p/q", integers and decimals with optional exponent, exactly
Rational parseRational(std::string_view text);
std::string formatRational(const Rational& x);
// shortest string that round-trips
std::string formatDouble(double x);

template <class T>
T parseAs(std::string_view text) {
  if constexpr (is_exact_v<T>) {
    return parseRational(text);
  } else {
    if (text.find('/') != std::string_view::npos)
      return toDouble(parseRational(text));
    return std::stod(std::string(text));
  }
}

template <class T>
std::string format(const T& x) {
  if constexpr (is_exact_v<T>)
    return formatRational(x);
  else
    return formatDouble(x);
}

// tolerance as T; exact conversion of the double
template <class T>
T tolAs(double tol) {
  return T(tol);
}

// Exact rational or IEEE double. Mixed arithmetic demotes to double.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(int x) : v_(Rational(x)) {}
  Scalar(Rational x) : v_(std::move(x)) {}
  Scalar(double x) : v_(x) {}

  // exact=false parses straight to double
  static Scalar parse(std::string_view text, bool exact);

  bool isExact() const { return std::holds_alternative<Rational>(v_); }
  double toDouble() const;
  Rational toRational() const;  // a double converts to its exact binary value
  std::string str() const;

  template <class T>
  T as() const {
    if constexpr (is_exact_v<T>)
      return toRational();
    else
      return toDouble();
  }

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  Scalar operator-() const;
  friend bool operator==(const Scalar& x, const Scalar& y);

 private:
  std::variant<Rational, double> v_;
};

}  // namespace lsrk
