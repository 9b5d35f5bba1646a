#pragma once

#include "lsrk/order.hpp"

#include <vector>

namespace lsrk {

// c~_i = 1 - c_{s+2-i}, d~_i = d_{s+2-i}
template <class T>
DForm<T> reflectDForm(const DForm<T>& df) {
  int n = int(df.c.size());
  std::vector<T> c(n), d(n);
  for (int i = 0; i < n; ++i) {
    c[i] = T(1) - df.c[n - 1 - i];
    d[i] = df.d[n - 1 - i];
  }
  return DForm<T>(std::move(c), std::move(d));
}

// matrix route: A~ = antiTranspose(G^{-1} A G) with G^{-1} = D
template <class T>
Matrix<T> reflectMatrix(const Matrix<T>& augmented, const DForm<T>& df) {
  return antiTranspose(buildD(df.d) * augmented * buildG(df.d));
}

template <class T>
TwoNScheme<T> reflectScheme(const TwoNScheme<T>& sch, double tol = defaultTol<T>()) {
  return dFormToTwoN(reflectDForm(twoNToDForm(sch, tol)));
}

template <class T>
TwoNScheme<T> reflectScheme(const ButcherTableau<T>& tab, double tol = defaultTol<T>()) {
  return dFormToTwoN(reflectDForm(butcherToDForm(tab, tol)));
}

template <class T>
double selfReflectionDefect(const DForm<T>& df) {
  auto r = reflectDForm(df);
  T m = maxAbsDiff(r.c, df.c), md = maxAbsDiff(r.d, df.d);
  return toDouble(md > m ? md : m);
}

template <class T>
bool isSelfReflected(const DForm<T>& df, double tol) {
  return selfReflectionDefect(df) <= tol;
}

// What reflection keeps and changes for one scheme.
template <class T>
struct ConservationReport {
  std::vector<T> tallTreesBefore, tallTreesAfter;
  T maxTallTreeDiff;
  std::array<T, 8> residualsBefore, residualsAfter;
};

template <class T>
ConservationReport<T> conservation(const ButcherTableau<T>& tab, const ButcherTableau<T>& refl) {
  ConservationReport<T> r{tallTrees(tab), tallTrees(refl), T(0), orderResiduals(tab),
                          orderResiduals(refl)};
  r.maxTallTreeDiff = maxAbsDiff(r.tallTreesBefore, r.tallTreesAfter);
  return r;
}

// Third-order 3-stage family: c3 roots on the curve for a given c2, ascending.
// c2 = 1 makes the quadratic linear. Roots with |c3| > maxAbs are dropped.
std::vector<double> williamsonC3(double c2, double maxAbs = 10.0);
// exact roots; throws DegenerateCase when they are irrational
std::vector<Rational> williamsonC3(const Rational& c2);
double williamsonResidual(double c2, double c3);

struct WCurvePoint {
  double c2, c3;
  int branch;          // index of the root in ascending order
  double c2r, c3r;     // reflected point, also on the curve
  double residual, reflectedResidual;
};

std::vector<WCurvePoint> wcurveScan(double c2min, double c2max, double step, double maxAbs = 10.0);

}  // namespace lsrk
