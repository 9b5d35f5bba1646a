#include "lsrk/search.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <cmath>

namespace lsrk {

namespace {

// real roots of x^3 + p2 x^2 + p1 x + p0, ascending
std::vector<double> monicCubicRoots(double p2, double p1, double p0) {
  double sh = p2 / 3;
  double q = p1 - p2 * p2 / 3;  // depressed: t^3 + q t + r
  double r = 2 * p2 * p2 * p2 / 27 - p2 * p1 / 3 + p0;
  std::vector<double> t;
  double disc = r * r / 4 + q * q * q / 27;
  if (disc > 0) {
    double sq = std::sqrt(disc);
    t.push_back(std::cbrt(-r / 2 + sq) + std::cbrt(-r / 2 - sq));
  } else if (q == 0) {
    t.push_back(0);
  } else {
    double m = 2 * std::sqrt(-q / 3);
    double phi = std::acos(std::clamp(3 * r / (q * m), -1.0, 1.0)) / 3;
    for (int k = 0; k < 3; ++k) t.push_back(m * std::cos(phi - 2 * M_PI * k / 3));
  }
  std::vector<double> out;
  for (double x : t) {
    x -= sh;
    for (int it = 0; it < 3; ++it) {
      double f = ((x + p2) * x + p1) * x + p0, df = (3 * x + 2 * p2) * x + p1;
      if (df == 0) break;
      x -= f / df;
    }
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

using Big = boost::multiprecision::cpp_dec_float_50;

Rational toRational(const Big& x) { return parseRational(x.str(48, std::ios_base::scientific)); }

// nodes are assembled in rationals so the mirror symmetry is exact
DForm<Rational> withTwos(std::vector<Rational> c) {
  std::vector<Rational> d(c.size(), Rational(2));
  d.front() = d.back() = 1;
  return DForm<Rational>(std::move(c), std::move(d));
}

const Rational half(1, 2);

}  // namespace

std::vector<double> family64C3(double c2) {
  for (double bad : {0.25, 1.0 / 6, 1.0})
    if (std::fabs(c2 - bad) < 1e-12) throw DegenerateCase("family64C3: c2 = " + std::to_string(c2) + " is a special case");
  // (c2-1/4) c3^3 - (c2-1/4)(c2+1) c3^2 + [(c2-1/4)(c2+5/4) - 1/48]/4 c3 - (c2-1/4)/24 = 0
  double k = c2 - 0.25;
  return monicCubicRoots(-(c2 + 1), ((c2 + 1.25) - 1 / (48 * k)) / 4, -1.0 / 24);
}

DForm<Rational> buildSelfReflected64Exact() {
  using boost::multiprecision::cbrt;
  using boost::multiprecision::sqrt;
  Big s3 = sqrt(Big(3));
  Big p2 = cbrt(6 * s3 + 9), psi2 = p2 - 3 / p2 + 14;
  Big p3 = cbrt(6 * s3 - 9), psi3 = p3 - 3 / p3 + 2;
  Big r2 = sqrt(2 * psi2), r3 = sqrt(2 * psi3);
  Big c2 = Big(1) / 3 + r2 / 24 - sqrt((42 - psi2) / 8 + 19 / r2) / 6;
  Big c3 = Big(1) / 3 + r3 / 24 + sqrt((6 - psi3) / 8 + 1 / r3) / 6;
  Rational x2 = toRational(c2), x3 = toRational(c3);
  return withTwos({0, x2, x3, half, 1 - x3, 1 - x2, 1});
}

DForm<Rational> buildSelfReflected84Exact() {
  using boost::multiprecision::cbrt;
  using boost::multiprecision::sqrt;
  Big r2 = sqrt(Big(2));
  Big c2 = Big(1) / 2 - r2 / 4;
  Big c3 = Big(1) / 2 - cbrt(r2 - Big(4) / 3) / 4;
  Rational x2 = toRational(c2), x3 = toRational(c3);
  return withTwos({0, x2, x3, 1 - x3, half, x3, 1 - x3, 1 - x2, 1});
}

DForm<double> buildSelfReflected64() { return buildSelfReflected64Exact().cast<double>(); }
DForm<double> buildSelfReflected84() { return buildSelfReflected84Exact().cast<double>(); }

}  // namespace lsrk
