#include "lsrk/integrate.hpp"

#include <cmath>

namespace lsrk {

OdeProblem benchmarkProblem(int id) {
  switch (id) {
    case 1:
      return {"y' = y cos x", [](double x, double y) { return y * std::cos(x); }, 0, 20, 1,
              [](double x) { return std::exp(std::sin(x)); }};
    case 2:
      return {"y' = 4 y sin^3 x cos x",
              [](double x, double y) {
                double s = std::sin(x);
                return 4 * y * s * s * s * std::cos(x);
              },
              0, 20, 1,
              [](double x) {
                double s = std::sin(x);
                return std::exp(s * s * s * s);
              }};
    case 3:
      return {"y' = -y^3/2", [](double, double y) { return -0.5 * y * y * y; }, 0, 20, 1,
              [](double x) { return 1 / std::sqrt(1 + x); }};
    default:
      throw std::invalid_argument("benchmark problem must be 1, 2 or 3");
  }
}

RunResult solve(const OdeProblem& p, const Method& m, double h) {
  RunResult r;
  r.tEnd = p.tEnd;
  r.yEnd = std::visit(
      [&](const auto& scheme) {
        auto step = [&](const auto& f, double t, double y, double hh) {
          if constexpr (std::is_same_v<std::decay_t<decltype(scheme)>, TwoNScheme<double>>)
            return step2N(scheme, f, t, y, hh);
          else
            return stepClassical(scheme, f, t, y, hh);
        };
        return integrateFixed(p.f, p.y0, p.t0, p.tEnd, h, step, &r.steps);
      },
      m);
  return r;
}

double errorAtEnd(const OdeProblem& p, const Method& m, double h) {
  if (!p.exact) throw std::invalid_argument("problem has no exact solution");
  return std::fabs(solve(p, m, h).yEnd - p.exact(p.tEnd));
}

double convergenceOrder(const std::vector<double>& hs, const std::vector<double>& errs, double floor) {
  if (hs.size() != errs.size()) throw std::invalid_argument("hs and errs differ in length");
  std::vector<double> x, y;
  for (std::size_t i = 0; i < hs.size(); ++i)
    if (errs[i] >= floor && std::isfinite(errs[i]) && hs[i] > 0) {
      x.push_back(std::log(hs[i]));
      y.push_back(std::log(errs[i]));
    }
  if (x.size() < 3) throw DegenerateFit("fewer than three usable error points");
  double n = double(x.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  double den = n * sxx - sx * sx;
  if (den == 0) throw DegenerateFit("all step sizes equal");
  return (n * sxy - sx * sy) / den;
}

}  // namespace lsrk
