#pragma once

#include "lsrk/scheme.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lsrk {

// (s+1)x(s+1) tableau with b as the last row
template <class T>
Matrix<T> augment(const ButcherTableau<T>& tab) {
  int s = tab.stages();
  Matrix<T> m(s + 1);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) m(i, j) = tab.a(i, j);
  for (int j = 0; j < s; ++j) m(s, j) = tab.b[j];
  return m;
}

template <class T>
std::vector<T> augmentedNodes(const ButcherTableau<T>& tab) {
  std::vector<T> c(tab.c);
  T sum(0);
  for (const auto& x : tab.b) sum += x;
  c.push_back(sum);
  return c;
}

template <class T>
Matrix<T> buildC(const std::vector<T>& c) {
  Matrix<T> m(int(c.size()));
  for (int i = 0; i < m.rows(); ++i) m(i, i) = c[i];
  return m;
}

template <class T>
Matrix<T> buildF(const std::vector<T>& c) {
  Matrix<T> m(int(c.size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < i; ++j) m(i, j) = c[i] - c[j];
  return m;
}

// D_ij = -d_j prod_{k=j+1}^{i-1} (1 - d_k) d_i below the diagonal
template <class T>
Matrix<T> buildD(const std::vector<T>& d) {
  int n = int(d.size());
  Matrix<T> m(n);
  for (int j = 0; j < n; ++j) {
    m(j, j) = d[j];
    T run = -d[j];
    for (int i = j + 1; i < n; ++i) {
      m(i, j) = run * d[i];
      run *= T(1) - d[i];
    }
  }
  return m;
}

template <class T>
Matrix<T> buildN(const std::vector<T>& d) {
  Matrix<T> m(int(d.size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (d[i] == 0) throw ZeroDenominator(i + 1);
    m(i, i) = T(1) / d[i];
  }
  return m;
}

template <class T>
Matrix<T> buildL(int n) {
  Matrix<T> m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) m(i, j) = T(1);
  return m;
}

// G = L - I + N
template <class T>
Matrix<T> buildG(const std::vector<T>& d) {
  int n = int(d.size());
  return buildL<T>(n) - Matrix<T>::identity(n) + buildN(d);
}

template <class T>
Matrix<T> buildP(int n) {
  Matrix<T> m(n);
  for (int i = 0; i < n; ++i) m(i, n - 1) = T(1);
  return m;
}

template <class T>
Matrix<T> buildQ(int n) {
  Matrix<T> m(n);
  for (int j = 0; j < n; ++j) m(0, j) = T(1);
  return m;
}

template <class T>
Matrix<T> buildT(int n) {
  Matrix<T> m(n);
  for (int i = 0; i < n; ++i) m(i, n - 1 - i) = T(1);
  return m;
}

// transpose about the anti-diagonal, same as T M^T T
template <class T>
Matrix<T> antiTranspose(const Matrix<T>& m) {
  int n = m.rows();
  Matrix<T> r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = m(n - 1 - j, n - 1 - i);
  return r;
}

template <class T>
struct Factorization {
  Matrix<T> F, D, G, A;
};

template <class T>
Factorization<T> factorize(const DForm<T>& df) {
  Factorization<T> f{buildF(df.c), buildD(df.d), buildG(df.d), {}};
  f.A = f.F * f.D;
  return f;
}

// partial row sums of D, closed form
template <class T>
T lemmaS(const std::vector<T>& d, int i, int l) {
  if (l >= i) return i == 1 ? T(1) : T(0);
  T p(-1);
  for (int k = l + 1; k <= i - 1; ++k) p *= T(1) - d[k - 1];
  return p * d[i - 1];
}

// partial column sums of D from row l down, closed form
template <class T>
T lemmaV(const std::vector<T>& d, int l, int j) {
  int n = int(d.size());
  if (l <= j) return j == n ? T(1) : T(0);
  T p = -d[j - 1];
  for (int k = j + 1; k <= l - 1; ++k) p *= T(1) - d[k - 1];
  return p;
}

template <class T>
using Residuals = std::vector<std::pair<std::string, T>>;

// every structural identity as a max-abs residual; all zero in exact arithmetic
template <class T>
Residuals<T> identityResiduals(const DForm<T>& df) {
  const auto& c = df.c;
  const auto& d = df.d;
  int n = int(c.size());
  auto f = factorize(df);
  auto A = augment(dFormToButcher(df));
  auto C = buildC(c);
  auto I = Matrix<T>::identity(n);
  auto P = buildP<T>(n), Q = buildQ<T>(n), Tm = buildT<T>(n);

  Residuals<T> out;
  out.emplace_back("A-FD", (A - f.A).maxAbs());
  out.emplace_back("F-[C,G]", (f.F - commutator(C, f.G)).maxAbs());
  out.emplace_back("F-(CL-LC)", (f.F - commutator(C, buildL<T>(n))).maxAbs());
  out.emplace_back("GD-I", (f.G * f.D - I).maxAbs());
  out.emplace_back("DG-I", (f.D * f.G - I).maxAbs());
  out.emplace_back("GCD-(C-A)", (f.G * C * f.D - (C - A)).maxAbs());
  out.emplace_back("DFD-[D,C]", (f.D * f.F * f.D - commutator(f.D, C)).maxAbs());
  out.emplace_back("DP-QD", (f.D * P - Q * f.D).maxAbs());
  out.emplace_back("antiT-TMtT", (antiTranspose(A) - Tm * A.transpose() * Tm).maxAbs());

  T rows(0), cols(0), ls(0), lv(0);
  for (int i = 1; i <= n; ++i) {
    T partial(0);
    for (int l = 1; l <= n; ++l) {
      partial += f.D(i - 1, l - 1);
      T e = absValue(T(partial - lemmaS(d, i, l)));
      if (e > ls) ls = e;
    }
    T e = absValue(T(partial - T(i == 1 ? 1 : 0)));
    if (e > rows) rows = e;
  }
  for (int j = 1; j <= n; ++j) {
    T partial(0);
    for (int l = n; l >= 1; --l) {
      partial += f.D(l - 1, j - 1);
      T e = absValue(T(partial - lemmaV(d, l, j)));
      if (e > lv) lv = e;
    }
    T e = absValue(T(partial - T(j == n ? 1 : 0)));
    if (e > cols) cols = e;
  }
  out.emplace_back("rowsum(D)", rows);
  out.emplace_back("colsum(D)", cols);
  out.emplace_back("partialrow(D)", ls);
  out.emplace_back("partialcol(D)", lv);
  return out;
}

template <class T>
T maxResidual(const Residuals<T>& r) {
  T m(0);
  for (const auto& [name, v] : r)
    if (v > m) m = v;
  return m;
}

}  // namespace lsrk
