#pragma once

#include "lsrk/order.hpp"

#include <complex>
#include <vector>

namespace lsrk {

// R(z) = sum_k coeffs[k] z^k, coeffs[k] = b^T a^{k-1} 1
template <class T>
std::vector<T> stabilityPolynomial(const ButcherTableau<T>& tab) {
  int s = tab.stages();
  std::vector<T> coeffs{T(1)};
  std::vector<T> v(s, T(1));  // a^{k-1} 1
  for (int k = 1; k <= s; ++k) {
    T sum(0);
    for (int i = 0; i < s; ++i) sum += tab.b[i] * v[i];
    coeffs.push_back(sum);
    v = tab.a * v;
  }
  return coeffs;
}

std::complex<double> evalPolynomial(const std::vector<double>& coeffs, std::complex<double> z);

struct Grid {
  double re0 = -6, re1 = 1, im0 = -5, im1 = 5;
  int n = 800;  // points per axis
};

struct StabilityRegion {
  Grid grid;
  std::vector<double> absR;  // row-major, im outer, re inner
  std::vector<std::vector<std::complex<double>>> boundary;  // polylines where |R| = 1
  double re(int i) const { return grid.re0 + (grid.re1 - grid.re0) * i / (grid.n - 1); }
  double im(int j) const { return grid.im0 + (grid.im1 - grid.im0) * j / (grid.n - 1); }
  double at(int i, int j) const { return absR[std::size_t(j) * grid.n + i]; }
  bool inside(int i, int j) const { return at(i, j) <= 1.0; }
};

StabilityRegion stabilityRegion(const std::vector<double>& coeffs, const Grid& g = Grid{});

// how far the region reaches along the negative real axis
double realAxisExtent(const std::vector<double>& coeffs, double reMin = -20);

}  // namespace lsrk
