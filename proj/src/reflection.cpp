#include "lsrk/reflection.hpp"

#include <algorithm>
#include <cmath>

namespace lsrk {

namespace {

// q2 c3^2 + q1 c3 + q0
struct Quad {
  double q2, q1, q0;
};

Quad curveAt(double c2) { return {1 - c2, c2 * c2 + c2 / 2 - 1, 1.0 / 3 - c2 / 2}; }

double polish(double c2, double x) {
  auto q = curveAt(c2);
  for (int k = 0; k < 3; ++k) {
    double f = (q.q2 * x + q.q1) * x + q.q0;
    double df = 2 * q.q2 * x + q.q1;
    if (df == 0) break;
    x -= f / df;
  }
  return x;
}

}  // namespace

double williamsonResidual(double c2, double c3) {
  auto q = curveAt(c2);
  return (q.q2 * c3 + q.q1) * c3 + q.q0;
}

std::vector<double> williamsonC3(double c2, double maxAbs) {
  auto q = curveAt(c2);
  std::vector<double> roots;
  if (q.q2 == 0) {
    if (q.q1 != 0) roots.push_back(-q.q0 / q.q1);
  } else {
    double disc = q.q1 * q.q1 - 4 * q.q2 * q.q0;
    if (disc >= 0) {
      // the stable pair of formulas
      double t = -0.5 * (q.q1 + std::copysign(std::sqrt(disc), q.q1));
      if (t != 0) {
        roots.push_back(t / q.q2);
        roots.push_back(q.q0 / t);
      } else {
        roots.push_back(0.0);
      }
    }
  }
  std::vector<double> out;
  for (double r : roots) {
    r = polish(c2, r);
    if (std::isfinite(r) && std::fabs(r) <= maxAbs) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

bool exactSqrt(const Rational& x, Rational& root) {
  if (x < 0) return false;
  using boost::multiprecision::mpz_int;
  mpz_int n = numerator(x), d = denominator(x);
  mpz_int rn = sqrt(n), rd = sqrt(d);
  if (rn * rn != n || rd * rd != d) return false;
  root = Rational(rn, rd);
  return true;
}

}  // namespace

std::vector<Rational> williamsonC3(const Rational& c2) {
  Rational q2 = 1 - c2, q1 = c2 * c2 + c2 / 2 - 1, q0 = Rational(1, 3) - c2 / 2;
  if (q2 == 0) {
    if (q1 == 0) throw DegenerateCase("williamson curve: no c3 for this c2");
    return {Rational(-q0 / q1)};
  }
  Rational disc = q1 * q1 - 4 * q2 * q0, root;
  if (disc < 0) return {};
  if (!exactSqrt(disc, root)) throw DegenerateCase("williamson curve: irrational roots at c2 = " + c2.str());
  std::vector<Rational> out{Rational((-q1 - root) / (2 * q2)), Rational((-q1 + root) / (2 * q2))};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<WCurvePoint> wcurveScan(double c2min, double c2max, double step, double maxAbs) {
  if (!(step > 0) || c2max < c2min) throw std::invalid_argument("wcurve: bad range or step");
  std::vector<WCurvePoint> pts;
  long n = std::lround(std::floor((c2max - c2min) / step + 1e-9));
  for (long k = 0; k <= n; ++k) {
    double c2 = c2min + k * step;
    auto roots = williamsonC3(c2, maxAbs);
    for (std::size_t br = 0; br < roots.size(); ++br) {
      double c3 = roots[br];
      double c2r = 1 - c3, c3r = 1 - c2;
      pts.push_back({c2, c3, int(br), c2r, c3r, williamsonResidual(c2, c3),
                     williamsonResidual(c2r, c3r)});
    }
  }
  return pts;
}

}  // namespace lsrk
