#include "lsrk/search.hpp"

#include "lsrk/catalog.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace lsrk {

void SearchConfig::check() const {
  if (!(tol > 0)) throw std::invalid_argument("search tol must be positive");
  if (!(epsWalk >= 1e-4 && epsWalk <= 10)) throw std::invalid_argument("epsWalk must lie in [1e-4, 10]");
  if (!(backtrack > 0 && backtrack < 1)) throw std::invalid_argument("backtrack factor must lie in (0, 1)");
  if (maxIter < 1) throw std::invalid_argument("maxIter must be positive");
}

double norm(const std::array<double, 7>& r) {
  double s = 0;
  for (double x : r) s += x * x;
  return std::sqrt(s);
}

namespace {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

constexpr double kNodeGap = 1e-14;

void requireDistinct(const double* c, int n) {
  for (int i = 0; i + 1 < n; ++i)
    if (std::fabs(c[i + 1] - c[i]) <= kNodeGap)
      throw SingularPoint("adjacent nodes c" + std::to_string(i + 1) + " and c" + std::to_string(i + 2) +
                          " coincide");
}

template <class F>
Mat jacobian(F&& f, const Vec& x, const Vec& fx) {
  Mat J(fx.size(), x.size());
  for (int k = 0; k < x.size(); ++k) {
    Vec xp = x;
    double h = 1e-7 * std::max(1.0, std::fabs(x[k]));
    xp[k] += h;
    J.col(k) = (f(xp) - fx) / h;
  }
  return J;
}

Vec solveSquare(const Mat& J, const Vec& r) {
  Eigen::FullPivLU<Mat> lu(J);
  if (lu.rank() < J.cols() || lu.rcond() < 1e-15) throw SingularJacobian("jacobian is singular");
  return lu.solve(r);
}

struct NewtonOutcome {
  Vec x;
  double norm;
  int iterations;
};

// damped Newton with Armijo backtracking on |F|^2; maxStep bounds |x - x0|_inf
template <class F>
NewtonOutcome newton(F&& f, Vec x, const SearchConfig& cfg, double maxStep = INFINITY) {
  const Vec x0 = x;
  Vec fx = f(x);
  double n2 = fx.squaredNorm();
  for (int it = 0; it <= cfg.maxIter; ++it) {
    if (std::sqrt(n2) <= cfg.tol) return {x, std::sqrt(n2), it};
    if (it == cfg.maxIter) break;
    Vec dx = solveSquare(jacobian(f, x, fx), -fx);
    double lam = 1;
    bool accepted = false;
    for (int k = 0; k < 40; ++k) {
      Vec xt = x + lam * dx;
      Vec ft;
      try {
        ft = f(xt);
      } catch (const SingularPoint&) {
        lam *= cfg.backtrack;
        continue;
      }
      double t2 = ft.squaredNorm();
      if (std::isfinite(t2) && t2 <= (1 - 2 * cfg.armijo * lam) * n2) {
        x = xt;
        fx = ft;
        n2 = t2;
        accepted = true;
        break;
      }
      lam *= cfg.backtrack;
    }
    if (!accepted) {
      // at the rounding floor the line search cannot improve; accept if close
      if (std::sqrt(n2) <= 10 * cfg.tol) return {x, std::sqrt(n2), it};
      throw NoConvergence("line search stalled", it);
    }
    if ((x - x0).lpNorm<Eigen::Infinity>() > maxStep) throw NoConvergence("newton left the trust region", it);
  }
  throw NoConvergence("newton did not reach tol", cfg.maxIter);
}

Vec toVec(const std::array<double, 7>& r) { return Eigen::Map<const Vec>(r.data(), 7); }

// regularized walk coordinates z = (c2, c3, c4, c5, e2, d3, d4, e5)
Vec regularResiduals(const Vec& z) {
  return toVec(residuals54Regular(z[0], z[1], z[2], z[3], z[4], z[5], z[6], z[7]));
}

Vec toRegular(const DForm<double>& df) {
  const auto& c = df.c;
  const auto& d = df.d;
  Vec z(8);
  z << c[1], c[2], c[3], c[4], c[1] * d[1], d[2], d[3], (1 - c[4]) * d[4];
  return z;
}

// nullopt-like: returns false when the point has no usable d-form
bool fromRegular(const Vec& z, const SearchConfig& cfg, DForm<double>& out) {
  double c[6] = {0, z[0], z[1], z[2], z[3], 1};
  for (int i = 0; i < 5; ++i)
    if (std::fabs(c[i + 1] - c[i]) <= 1e-12) return false;
  if (z[0] == 0 || z[3] == 1) return false;
  std::vector<double> d{1, z[4] / z[0], z[5], z[6], z[7] / (1 - z[3]), 1};
  for (double x : d)
    if (!std::isfinite(x) || std::fabs(x) > cfg.gapD) return false;
  for (int i = 1; i < 5; ++i)
    if (std::fabs(c[i]) > cfg.gapC) return false;
  out = DForm<double>(std::vector<double>(c, c + 6), std::move(d));
  return true;
}

std::array<double, 7> interior(const DForm<double>& df) {
  const auto& c = df.c;
  const auto& d = df.d;
  return {c[2], c[3], c[4], d[1], d[2], d[3], d[4]};
}

}  // namespace

BranchPoint BranchPoint::from(const DForm<double>& df) {
  BranchPoint p;
  p.dform = df;
  p.c2 = df.c[1];
  p.c5 = df.c[4];
  p.residualNorm = norm(dFormResiduals54(df));
  return p;
}

std::array<double, 7> residuals54(const std::array<double, 7>& x, double c2) {
  double c[6] = {0, c2, x[0], x[1], x[2], 1};
  requireDistinct(c, 6);
  return residuals54Regular(c2, x[0], x[1], x[2], c2 * x[3], x[4], x[5], (1 - x[2]) * x[6]);
}

BranchPoint newtonSolve(const std::array<double, 7>& x0, double c2, const SearchConfig& cfg) {
  for (double v : x0)
    if (!std::isfinite(v)) throw std::invalid_argument("newtonSolve: x0 must be finite");
  auto f = [c2](const Vec& x) {
    std::array<double, 7> a;
    for (int k = 0; k < 7; ++k) a[k] = x[k];
    return toVec(residuals54(a, c2));
  };
  auto out = newton(f, toVec(x0), cfg);
  const Vec& x = out.x;
  auto df = DForm<double>::fromInterior({c2, x[0], x[1], x[2]}, {x[3], x[4], x[5], x[6]});
  auto p = BranchPoint::from(df);
  p.iterations = out.iterations;
  return p;
}

std::vector<BranchPoint> branchWalk(const BranchPoint& seed, int direction, const SearchConfig& cfg,
                                    const std::vector<double>& landings) {
  cfg.check();
  if (direction != 1 && direction != -1) throw std::invalid_argument("direction must be +1 or -1");
  const double epsMin = 1e-7;
  const Vec z0 = toRegular(seed.dform);

  // corrector: residuals plus the hyperplane orthogonal to t through the predictor
  auto correct = [&](const Vec& pred, const Vec& t) {
    auto H = [&](const Vec& z) {
      Vec h(8);
      h.head<7>() = regularResiduals(z);
      h[7] = t.dot(z - pred);
      return h;
    };
    return newton(H, pred, cfg, 0.5).x;
  };

  std::vector<BranchPoint> out{seed};
  out.front().gapBefore = false;
  bool pendingGap = false;

  auto emit = [&](const Vec& zPrev, const Vec& z) {
    // d2 or d5 pass through infinity between the two points
    if ((zPrev[0] > 0) != (z[0] > 0) || (zPrev[3] < 1) != (z[3] < 1)) pendingGap = true;
    DForm<double> df;
    if (!fromRegular(z, cfg, df)) {
      pendingGap = true;
      return;
    }
    auto p = BranchPoint::from(df);
    if (p.residualNorm > cfg.tol) {
      try {
        p = newtonSolve(interior(df), p.c2, cfg);
      } catch (const Error&) {
        pendingGap = true;
        return;
      }
    }
    p.gapBefore = pendingGap;
    pendingGap = false;
    if (!p.gapBefore && !landings.empty()) {
      const BranchPoint q = out.back();
      for (double L : landings) {
        if ((q.c2 - L) * (p.c2 - L) > 0 || q.c2 == p.c2) continue;
        double w = (L - q.c2) / (p.c2 - q.c2);
        auto xa = interior(q.dform), xb = interior(p.dform);
        std::array<double, 7> x;
        for (int k = 0; k < 7; ++k) x[k] = xa[k] + w * (xb[k] - xa[k]);
        try {
          out.push_back(newtonSolve(x, L, cfg));
        } catch (const Error&) {
        }
      }
    }
    out.push_back(p);
  };

  // first step: c2 nudged by 1e-4, everything else corrected
  Vec e1 = Vec::Zero(8);
  e1[0] = 1;
  Vec zPrev = z0;
  Vec z = correct(z0 + direction * 1e-4 * e1, e1);
  emit(zPrev, z);

  double eps = cfg.epsWalk;
  for (int step = 0; step < cfg.maxSteps; ++step) {
    Vec t = (z - zPrev).normalized();
    Vec zNext;
    bool ok = false;
    while (eps >= epsMin) {
      try {
        zNext = correct(z + eps * t, t);
        // a corrector that swings back means we skipped onto another sheet
        if ((zNext - z).dot(t) > 0) {
          ok = true;
          break;
        }
      } catch (const Error&) {
      }
      eps *= 0.5;
    }
    if (!ok) break;
    zPrev = z;
    z = zNext;
    emit(zPrev, z);
    eps = std::min(cfg.epsWalk, eps * 2);
    if (z.lpNorm<Eigen::Infinity>() > cfg.gapC) break;
    // back at the seed: the branch is a closed loop
    if (step > 10 && (z - z0).norm() < 0.75 * cfg.epsWalk) break;
  }
  return out;
}

BranchPoint constrainedSearch54(double target, const SearchConfig& cfg, const std::vector<DForm<double>>& seeds) {
  cfg.check();
  std::vector<DForm<double>> starts = seeds;
  if (starts.empty()) {
    // the four published solutions on the branch that carries tallTree(4) = 1/200
    for (const char* n : {"CK54_S1", "CK54_S2", "CK54_S3", "CK54_S4"})
      starts.push_back(asDForm<double>(catalogGet(n).scheme, 1e-9));
  }
  auto tt4 = [](const Vec& y) {
    auto df = DForm<double>::fromInterior({y[0], y[1], y[2], y[3]}, {y[4], y[5], y[6], y[7]});
    return tallTree(dFormToButcher(df), 4);
  };
  auto system = [&](double tau) {
    return [&, tau](const Vec& y) {
      double c[6] = {0, y[0], y[1], y[2], y[3], 1};
      requireDistinct(c, 6);
      Vec h(8);
      h.head<7>() = toVec(residuals54Regular(y[0], y[1], y[2], y[3], y[0] * y[4], y[5], y[6], (1 - y[3]) * y[7]));
      h[7] = tt4(y) - tau;
      return h;
    };
  };

  std::string why;
  for (const auto& s : starts) {
    const auto& c = s.c;
    const auto& d = s.d;
    Vec y(8);
    y << c[1], c[2], c[3], c[4], d[1], d[2], d[3], d[4];
    try {
      double tau = tt4(y);
      y = newton(system(tau), y, cfg, 1e-3).x;
      double h = target - tau;
      int guard = 0;
      while (tau != target) {
        if (++guard > 10000) throw NoConvergence("continuation took too many steps", guard);
        double next = std::fabs(target - tau) <= std::fabs(h) ? target : tau + h;
        try {
          y = newton(system(next), y, cfg, 0.05).x;
          tau = next;
          h *= 2;
        } catch (const Error&) {
          h *= 0.5;
          if (std::fabs(h) < 1e-12) throw NoConvergence("continuation step collapsed near tallTree(4) = " + std::to_string(tau), guard);
        }
      }
      auto df = DForm<double>::fromInterior({y[0], y[1], y[2], y[3]}, {y[4], y[5], y[6], y[7]});
      return BranchPoint::from(df);
    } catch (const Error& e) {
      why = e.what();
    }
  }
  throw NoConvergence("constrained search failed from every seed: " + why, cfg.maxIter);
}

}  // namespace lsrk
