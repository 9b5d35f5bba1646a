#pragma once

#include "lsrk/scheme.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace lsrk {

template <class State>
bool allFinite(const State& y) {
  if constexpr (std::is_arithmetic_v<State>) {
    return std::isfinite(y);
  } else {
    for (const auto& v : y)
      if (!std::isfinite(v)) return false;
    return true;
  }
}

// One classical step; stores every stage derivative.
template <class State, class F>
State stepClassical(const ButcherTableau<double>& tab, F&& f, double t, const State& y, double h) {
  int s = tab.stages();
  std::vector<State> k;
  k.reserve(s);
  for (int i = 0; i < s; ++i) {
    State yi = y;
    for (int j = 0; j < i; ++j)
      if (tab.a(i, j) != 0) yi = yi + (h * tab.a(i, j)) * k[j];
    k.push_back(f(t + tab.c[i] * h, yi));
  }
  State out = y;
  for (int i = 0; i < s; ++i) out = out + (h * tab.b[i]) * k[i];
  return out;
}

// The two registers a 2N scheme is allowed to keep.
template <class State>
struct TwoNRegisters {
  State dy;
  State y;
};

template <class State, class F>
void step2N(const TwoNScheme<double>& sch, F&& f, double t, TwoNRegisters<State>& reg, double h) {
  for (int i = 0; i < sch.stages(); ++i) {
    reg.dy = sch.A[i] * reg.dy + h * f(t + sch.c[i] * h, reg.y);
    reg.y = reg.y + sch.B[i] * reg.dy;
  }
}

template <class State, class F>
State step2N(const TwoNScheme<double>& sch, F&& f, double t, const State& y, double h) {
  // A_1 = 0 wipes dy, so its initial content is irrelevant
  TwoNRegisters<State> reg{0.0 * y, y};
  step2N(sch, f, t, reg, h);
  return reg.y;
}

struct OdeProblem {
  std::string name;
  std::function<double(double, double)> f;
  double t0 = 0, tEnd = 20, y0 = 1;
  std::function<double(double)> exact;  // may be empty
};

// the three scalar benchmarks on [0, 20]
OdeProblem benchmarkProblem(int id);

using Method = std::variant<ButcherTableau<double>, TwoNScheme<double>>;

struct RunResult {
  double yEnd = 0;
  int steps = 0;
  double tEnd = 0;
};

// fixed step; the last step shrinks to land on tEnd
template <class State, class F, class Step>
State integrateFixed(F&& f, State y, double t0, double tEnd, double h, Step&& step, int* nsteps = nullptr) {
  if (!(h > 0)) throw std::invalid_argument("step size must be positive");
  // count steps up front; accumulating t drifts and can leave a sliver step
  double span = tEnd - t0;
  int total = std::max(1, int(std::ceil(span / h - 1e-9)));
  int n = 0;
  for (int k = 0; k < total; ++k) {
    double t = t0 + k * h;
    double hh = (k == total - 1) ? tEnd - t : h;
    y = step(f, t, y, hh);
    ++n;
    if (!allFinite(y)) throw NonFinite(n);
  }
  if (nsteps) *nsteps = n;
  return y;
}

RunResult solve(const OdeProblem& p, const Method& m, double h);
double errorAtEnd(const OdeProblem& p, const Method& m, double h);

// least-squares slope of log(error) against log(h); errors below floor are dropped
double convergenceOrder(const std::vector<double>& hs, const std::vector<double>& errs, double floor = 1e-13);

}  // namespace lsrk
