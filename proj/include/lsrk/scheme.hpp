#pragma once

#include "lsrk/errors.hpp"
#include "lsrk/matrix.hpp"

#include <string>
#include <vector>

namespace lsrk {

// storage is 0-based; the accessors take 1-based indices

template <class T>
struct ButcherTableau {
  Matrix<T> a;
  std::vector<T> b, c;

  ButcherTableau() = default;
  ButcherTableau(Matrix<T> a_, std::vector<T> b_, std::vector<T> c_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    int s = int(b.size());
    if (s < 1 || a.rows() != s || a.cols() != s || int(c.size()) != s)
      throw WrongStageCount("butcher tableau: inconsistent stage counts");
  }

  int stages() const { return int(b.size()); }
  const T& coeff(int i, int j) const { return a(i - 1, j - 1); }
  const T& weight(int i) const { return b[i - 1]; }
  const T& node(int i) const { return c[i - 1]; }
};

template <class T>
struct TwoNScheme {
  std::vector<T> A, B, c;

  TwoNScheme() = default;
  TwoNScheme(std::vector<T> A_, std::vector<T> B_, std::vector<T> c_)
      : A(std::move(A_)), B(std::move(B_)), c(std::move(c_)) {
    if (A.empty() || A.size() != B.size() || A.size() != c.size())
      throw WrongStageCount("2N scheme: A, B, c lengths differ");
  }

  int stages() const { return int(B.size()); }
  const T& coefA(int i) const { return A[i - 1]; }
  const T& coefB(int i) const { return B[i - 1]; }
  const T& node(int i) const { return c[i - 1]; }
};

// c_1..c_{s+1} with c_1 = 0, c_{s+1} = 1; d_1 = d_{s+1} = 1
template <class T>
struct DForm {
  std::vector<T> c, d;

  DForm() = default;
  DForm(std::vector<T> c_, std::vector<T> d_) : c(std::move(c_)), d(std::move(d_)) {
    if (c.size() < 2 || c.size() != d.size())
      throw WrongStageCount("d-form: c and d must both have s+1 entries");
    if (c.front() != 0 || c.back() != 1 || d.front() != 1 || d.back() != 1)
      throw std::invalid_argument("d-form: need c1 = 0, c_{s+1} = 1, d1 = d_{s+1} = 1");
  }

  // interior nodes c2..cs and ratios d2..ds
  static DForm fromInterior(const std::vector<T>& nodes, const std::vector<T>& ratios) {
    if (nodes.size() != ratios.size()) throw WrongStageCount("d-form: interior lengths differ");
    std::vector<T> c{T(0)}, d{T(1)};
    c.insert(c.end(), nodes.begin(), nodes.end());
    d.insert(d.end(), ratios.begin(), ratios.end());
    c.push_back(T(1));
    d.push_back(T(1));
    return DForm(std::move(c), std::move(d));
  }

  int stages() const { return int(c.size()) - 1; }
  const T& node(int i) const { return c[i - 1]; }
  const T& ratio(int i) const { return d[i - 1]; }

  template <class U>
  DForm<U> cast() const {
    auto conv = [](const std::vector<T>& v) {
      std::vector<U> out;
      for (const auto& x : v) {
        if constexpr (std::is_same_v<U, double>)
          out.push_back(toDouble(x));
        else
          out.push_back(U(x));
      }
      return out;
    };
    return DForm<U>(conv(c), conv(d));
  }
};

// 1e-10 for floats, exact comparison for rationals
template <class T>
double defaultTol() {
  return is_exact_v<T> ? 0.0 : 1e-10;
}

template <class T>
ButcherTableau<T> twoNToButcher(const TwoNScheme<T>& sch) {
  int s = sch.stages();
  Matrix<T> a(s);
  // w holds the Delta-y weights on f_1..f_s, row the y weights
  std::vector<T> w(s, T(0)), row(s, T(0));
  for (int i = 0; i < s; ++i) {
    for (auto& x : w) x *= sch.A[i];
    w[i] += T(1);
    for (int j = 0; j <= i; ++j) row[j] += sch.B[i] * w[j];
    if (i + 1 < s)
      for (int j = 0; j <= i; ++j) a(i + 1, j) = row[j];
  }
  std::vector<T> c(s, T(0));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < i; ++j) c[i] += a(i, j);
  return ButcherTableau<T>(std::move(a), std::move(row), std::move(c));
}

template <class T>
T tableauDistance(const ButcherTableau<T>& x, const ButcherTableau<T>& y) {
  T m = (x.a - y.a).maxAbs();
  T mb = maxAbsDiff(x.b, y.b), mc = maxAbsDiff(x.c, y.c);
  if (mb > m) m = mb;
  if (mc > m) m = mc;
  return m;
}

// Reads B_i off the subdiagonal and A_i off the next one, then insists the
// result regenerates the tableau. RK4 and friends fail the round trip.
template <class T>
TwoNScheme<T> butcherToTwoN(const ButcherTableau<T>& tab, double tol = defaultTol<T>()) {
  int s = tab.stages();
  auto entry = [&](int i, int j) -> const T& {  // augmented, 0-based, row s is b
    return i == s ? tab.b[j] : tab.a(i, j);
  };
  std::vector<T> A(s, T(0)), B(s, T(0));
  // row i+1 minus row i in column i-1 is B_i A_i
  for (int i = 0; i < s; ++i) {
    B[i] = entry(i + 1, i);
    if (i > 0) {
      if (B[i] == 0) throw ZeroDenominator(i + 1);
      A[i] = (entry(i + 1, i - 1) - entry(i, i - 1)) / B[i];
    }
  }
  TwoNScheme<T> sch(A, B, tab.c);
  T r = tableauDistance(twoNToButcher(sch), tab);
  if (r > tolAs<T>(tol)) throw NotTwoNCompatible(toDouble(r));
  return sch;
}

template <class T>
void checkDistinctNodes(const std::vector<T>& c) {
  // c has s entries; c_{s+1} = 1 is implied
  int s = int(c.size());
  for (int i = 0; i < s; ++i) {
    T next = i + 1 < s ? c[i + 1] : T(1);
    if (c[i] == next) throw NoDForm(i + 1);
  }
}

template <class T>
DForm<T> twoNToDForm(const TwoNScheme<T>& sch, double tol = defaultTol<T>()) {
  checkDistinctNodes(sch.c);
  int s = sch.stages();
  std::vector<T> c(sch.c), d(s + 1, T(1));
  c.push_back(T(1));
  for (int j = 1; j < s; ++j) d[j] = sch.B[j] / (c[j + 1] - c[j]);
  // d_1 = B_1 / c_2 and the A_i must come out of d; otherwise weights do not sum to 1
  // or the nodes are inconsistent
  T r = absValue(T(sch.B[0] / c[1] - 1));
  for (int i = 1; i < s; ++i) {
    T Ai = d[i - 1] * (T(1) / d[i] - 1);
    T e = absValue(T(Ai - sch.A[i]));
    if (e > r) r = e;
  }
  if (r > tolAs<T>(tol))
    throw Error("scheme has no d-form: coefficients inconsistent with c_{s+1} = 1 (residual " +
                std::to_string(toDouble(r)) + ")");
  return DForm<T>(std::move(c), std::move(d));
}

template <class T>
DForm<T> butcherToDForm(const ButcherTableau<T>& tab, double tol = defaultTol<T>()) {
  checkDistinctNodes(tab.c);
  return twoNToDForm(butcherToTwoN(tab, tol), tol);
}

template <class T>
TwoNScheme<T> dFormToTwoN(const DForm<T>& df) {
  int s = df.stages();
  std::vector<T> A(s, T(0)), B(s), c(df.c.begin(), df.c.end() - 1);
  for (int i = 0; i < s; ++i) {
    if (df.d[i] == 0) throw ZeroDenominator(i + 1);
    if (i > 0) A[i] = df.d[i - 1] * (T(1) / df.d[i] - 1);
    B[i] = (df.c[i + 1] - df.c[i]) * df.d[i];
  }
  return TwoNScheme<T>(std::move(A), std::move(B), std::move(c));
}

template <class T>
ButcherTableau<T> dFormToButcher(const DForm<T>& df) {
  return twoNToButcher(dFormToTwoN(df));
}

struct ValidationReport {
  bool valid = true;
  bool strictlyLower = true;
  bool firstNodeZero = true;
  double maxRowSumResidual = 0;
  std::vector<std::string> failures;
};

template <class T>
ValidationReport validate(const ButcherTableau<T>& tab, double tol = defaultTol<T>()) {
  ValidationReport rep;
  int s = tab.stages();
  for (int i = 0; i < s; ++i)
    for (int j = i; j < s; ++j)
      if (tab.a(i, j) != 0) {
        rep.strictlyLower = false;
        rep.failures.push_back("a" + std::to_string(i + 1) + std::to_string(j + 1) + " != 0");
      }
  if (tab.c[0] != 0) {
    rep.firstNodeZero = false;
    rep.failures.push_back("c1 != 0");
  }
  T worst(0);
  for (int i = 0; i < s; ++i) {
    T sum(0);
    for (int j = 0; j < s; ++j) sum += tab.a(i, j);
    T r = absValue(T(sum - tab.c[i]));
    if (r > worst) worst = r;
    if (r > tolAs<T>(tol)) rep.failures.push_back("row " + std::to_string(i + 1) + " sum != c");
  }
  rep.maxRowSumResidual = toDouble(worst);
  rep.valid = rep.failures.empty();
  return rep;
}

template <class T>
std::vector<T> castVec(const std::vector<Rational>& v) {
  std::vector<T> out;
  for (const auto& x : v) {
    if constexpr (std::is_same_v<T, double>)
      out.push_back(toDouble(x));
    else
      out.push_back(T(x));
  }
  return out;
}

}  // namespace lsrk
