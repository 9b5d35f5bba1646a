#pragma once

#include "lsrk/structure.hpp"

#include <array>
#include <string>

namespace lsrk {

struct OrderCondition {
  const char* label;
  int order;
  Rational target;
};

inline const std::array<OrderCondition, 8>& orderConditions() {
  static const std::array<OrderCondition, 8> table{{
      {"b", 1, Rational(1)},
      {"bc", 2, Rational(1, 2)},
      {"bc2", 3, Rational(1, 3)},
      {"bac", 3, Rational(1, 6)},
      {"bc3", 4, Rational(1, 4)},
      {"bcac", 4, Rational(1, 8)},
      {"bac2", 4, Rational(1, 12)},
      {"ba2c", 4, Rational(1, 24)},
  }};
  return table;
}

template <class T>
T conditionTarget(int k) {
  if constexpr (is_exact_v<T>)
    return orderConditions()[k].target;
  else
    return toDouble(orderConditions()[k].target);
}

// the eight elementary weights, straight sums
template <class T>
std::array<T, 8> elementaryWeights(const ButcherTableau<T>& tab) {
  int s = tab.stages();
  const auto& b = tab.b;
  const auto& c = tab.c;
  std::vector<T> ac(s, T(0)), ac2(s, T(0));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < i; ++j) {
      ac[i] += tab.a(i, j) * c[j];
      ac2[i] += tab.a(i, j) * c[j] * c[j];
    }
  std::vector<T> aac(s, T(0));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < i; ++j) aac[i] += tab.a(i, j) * ac[j];
  std::array<T, 8> w;
  w.fill(T(0));
  for (int i = 0; i < s; ++i) {
    w[0] += b[i];
    w[1] += b[i] * c[i];
    w[2] += b[i] * c[i] * c[i];
    w[3] += b[i] * ac[i];
    w[4] += b[i] * c[i] * c[i] * c[i];
    w[5] += b[i] * c[i] * ac[i];
    w[6] += b[i] * ac2[i];
    w[7] += b[i] * aac[i];
  }
  return w;
}

// same weights as traces of the augmented matrices: Tr[PA], Tr[PAC], ...
template <class T>
std::array<T, 8> traceWeights(const ButcherTableau<T>& tab) {
  auto A = augment(tab);
  auto C = buildC(augmentedNodes(tab));
  auto P = buildP<T>(A.rows());
  auto PA = P * A;
  return {(PA).trace(),
          (PA * C).trace(),
          (PA * C * C).trace(),
          (PA * A * C).trace(),
          (PA * C * C * C).trace(),
          (PA * C * A * C).trace(),
          (PA * A * C * C).trace(),
          (PA * A * A * C).trace()};
}

template <class T>
struct OrderReport {
  std::array<T, 8> residuals;  // weight minus target, in the table order
  int order = 0;
  double tol = 0;
  T fifthBreaking;
};

// sum_i b_i (sum_j a_ij c_j)^2; must be 1/20 at fifth order
template <class T>
T fifthBreaking(const ButcherTableau<T>& tab) {
  int s = tab.stages();
  T sum(0);
  for (int i = 0; i < s; ++i) {
    T ac(0);
    for (int j = 0; j < i; ++j) ac += tab.a(i, j) * tab.c[j];
    sum += tab.b[i] * ac * ac;
  }
  return sum;
}

template <class T>
std::array<T, 8> orderResiduals(const ButcherTableau<T>& tab) {
  auto w = elementaryWeights(tab);
  for (int k = 0; k < 8; ++k) w[k] -= conditionTarget<T>(k);
  return w;
}

template <class T>
OrderReport<T> checkOrder(const ButcherTableau<T>& tab, double tol = is_exact_v<T> ? 0.0 : 1e-9) {
  OrderReport<T> rep{orderResiduals(tab), 0, tol, fifthBreaking(tab)};
  T t = tolAs<T>(tol);
  for (int p = 1; p <= 4; ++p) {
    bool ok = true;
    for (int k = 0; k < 8; ++k)
      if (orderConditions()[k].order == p && absValue(rep.residuals[k]) > t) ok = false;
    if (!ok) break;
    rep.order = p;
  }
  return rep;
}

// Tr[P A^n C], n = 1..s-1
template <class T>
T tallTree(const ButcherTableau<T>& tab, int n) {
  int s = tab.stages();
  if (n < 1 || n > s - 1)
    throw OutOfRange("tall tree index " + std::to_string(n) + " outside 1.." + std::to_string(s - 1));
  auto A = augment(tab);
  auto C = buildC(augmentedNodes(tab));
  return (buildP<T>(s + 1) * power(A, n) * C).trace();
}

template <class T>
std::vector<T> tallTrees(const ButcherTableau<T>& tab) {
  std::vector<T> out;
  for (int n = 1; n < tab.stages(); ++n) out.push_back(tallTree(tab, n));
  return out;
}

}  // namespace lsrk
