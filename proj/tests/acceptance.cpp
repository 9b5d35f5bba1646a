// one line per criterion; exits 1 if any fails
#include "support.hpp"

#include "lsrk/integrate.hpp"
#include "lsrk/stability.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>

using namespace lsrk;
using namespace lsrk::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void need(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

int failures = 0;

void run(const char* id, const char* title, double budget, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.need(false, std::string("threw: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget > 0) o.need(secs < budget, "took " + formatDouble(secs) + " s");
  failures += !o.ok;
  std::printf("[%s] %s %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs, o.ok ? "" : ": ",
              o.detail.c_str());
  std::fflush(stdout);
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// d columns for the four CK solutions, as printed
const double kCKd[4][6] = {
    {1, 1.927643001997, 2.195292153589, 3.703493152572, 1.923666744634, 1},
    {1, 1.923666744633, 3.703493152563, 2.195292153593, 1.927643001997, 1},
    {1, 1.717889771931, 3.267577233123, 2.081534437517, 3.668865415321, 1},
    {1, 3.668865415371, 2.081534437511, 3.267577233125, 1.717889771932, 1},
};

bool hasDForm(const std::string& n) {
  try {
    catDForm<double>(n);
    return true;
  } catch (const NoDForm&) {
    return false;
  }
}

double maxOrderResidual(const ButcherTableau<double>& tab, int upTo) {
  double m = 0;
  auto r = orderResiduals(tab);
  for (int k = 0; k < 8; ++k)
    if (orderConditions()[k].order <= upTo) m = std::max(m, std::fabs(r[k]));
  return m;
}

}  // namespace

int main() {
  run("AC1", "(4,3)_1 reflects exactly onto (4,3)_2", 1.0, [](Outcome& o) {
    auto r = reflectScheme(cat2N<Rational>("(4,3)_1"));
    auto two = cat2N<Rational>("(4,3)_2");
    o.need(r.A == two.A && r.B == two.B, "2N coefficients differ");
    auto tab = twoNToButcher(r), tab2 = catTab<Rational>("(4,3)_2");
    o.need(tab.a == tab2.a && tab.b == tab2.b && tab.c == tab2.c, "tableau differs");
    auto res = orderResiduals(tab);
    for (int k = 0; k < 8; ++k)
      if (orderConditions()[k].order <= 3) o.need(res[k] == 0, "nonzero order-3 residual");
    o.need(catDForm<Rational>("(4,3)_1").d == vec<Rational>({"1", "9/4", "9/5", "15/4", "1"}), "d of (4,3)_1");
    o.need(twoNToDForm(r).d == vec<Rational>({"1", "15/4", "9/5", "9/4", "1"}), "d of reflected");
  });

  run("AC2", "CK pairs recovered; d against the printed columns", 0, [](Outcome& o) {
    for (auto [a, b] : {std::pair{"CK54_S1", "CK54_S2"}, std::pair{"CK54_S3", "CK54_S4"}}) {
      auto r = reflectScheme(cat2N<double>(a), 1e-9);
      auto t = cat2N<double>(b);
      double e = std::max(maxAbsDiff(r.A, t.A), maxAbsDiff(r.B, t.B));
      auto rt = twoNToButcher(r), tt = twoNToButcher(t);
      e = std::max({e, (rt.a - tt.a).maxAbs(), maxAbsDiff(rt.b, tt.b), maxAbsDiff(rt.c, tt.c)});
      o.need(e <= 1e-9, std::string(a) + " reflected off by " + num(e));
    }
    const char* names[4] = {"CK54_S1", "CK54_S2", "CK54_S3", "CK54_S4"};
    for (int k = 0; k < 4; ++k) {
      auto df = twoNToDForm(cat2N<double>(names[k]), 1e-9);
      double e = 0;
      for (int i = 0; i < 6; ++i) e = std::max(e, std::fabs(df.d[i] - kCKd[k][i]));
      o.need(e <= 1e-11, std::string(names[k]) + " d off by " + num(e));
    }
  });

  run("AC3", "reflected order-4 schemes keep order 4", 0, [](Outcome& o) {
    int n4 = 0;
    for (const auto& n : catalogList()) {
      if (catalogGet(n).claimedOrder != 4 || !hasDForm(n)) continue;
      ++n4;
      double e = maxOrderResidual(twoNToButcher(reflectScheme(cat2N<double>(n), 1e-9)), 4);
      o.need(e <= 1e-10, n + " residual " + num(e));
    }
    o.need(n4 >= 14, "only " + std::to_string(n4) + " schemes checked");
  });

  run("AC4", "tall trees and stability polynomials conserved", 0, [](Outcome& o) {
    for (const auto& n : catalogList()) {
      if (!hasDForm(n)) continue;
      auto orig = catTab<double>(n);
      auto refl = twoNToButcher(reflectScheme(cat2N<double>(n), 1e-9));
      auto c = conservation(orig, refl);
      o.need(c.maxTallTreeDiff <= 1e-11, n + " tall trees off by " + num(c.maxTallTreeDiff));
      double e = maxAbsDiff(stabilityPolynomial(orig), stabilityPolynomial(refl));
      o.need(e <= 1e-11, n + " polynomial off by " + num(e));
    }
  });

  run("AC5", "tall-tree values reproduced", 0, [](Outcome& o) {
    auto tt = [](const char* n, int k) { return tallTree(catTab<Rational>(n), k); };
    o.need(tt("(4,3)_1", 3) == R("1/24") && tt("(4,3)_2", 3) == R("1/24"), "(4,3)");
    o.need(tt("(5,4)_5", 4) == R("1/360"), "(5,4)_5");
    o.need(tt("(6,4)_7", 4) == R("1/72") && tt("(6,4)_7", 5) == R("1/432"), "(6,4)_7");
    o.need(tt("(6,4)_8", 4) == R("1/216") && tt("(6,4)_8", 5) == R("7/7776"), "(6,4)_8");
    for (const char* n : {"(6,4)_4", "(6,4)_5"})
      o.need(tt(n, 4) == R("4/693") && tt(n, 5) == R("1/1386"), n);
    o.need(tt("(6,4)_6", 4) == R("1/192") && tt("(6,4)_6", 5) == R("1/1152"), "(6,4)_6");
    double ck = tallTree(catTab<double>("CK54_S1"), 4);
    o.need(std::fabs(ck - 1.0 / 200) <= 1e-10, "CK54_S1 " + num(ck - 1.0 / 200));
  });

  run("AC6", "factorization identities on random exact d-forms", 10.0, [](Outcome& o) {
    std::mt19937 rng(2024);
    int bad = 0;
    for (int s = 3; s <= 8; ++s)
      for (int k = 0; k < 100; ++k) {
        auto df = randomDForm(rng, s);
        for (const auto& [name, v] : identityResiduals(df))
          if (v != 0) ++bad;
        if (factorize(df).A != augment(dFormToButcher(df))) ++bad;
      }
    o.need(bad == 0, std::to_string(bad) + " nonzero identities");
  });

  run("AC7", "convergence slopes on the h list {0.2, 0.1, 0.05, 0.025}", 30.0, [](Outcome& o) {
    const std::vector<double> hs{0.2, 0.1, 0.05, 0.025};
    for (auto [n, p] : {std::pair{"(4,3)_1", 3}, std::pair{"(5,4)_5", 4}, std::pair{"(6,4)_1", 4},
                        std::pair{"(6,4)_6", 4}})
      for (int id = 1; id <= 3; ++id) {
        auto prob = benchmarkProblem(id);
        std::vector<double> errs;
        for (double h : hs) errs.push_back(errorAtEnd(prob, cat2N<double>(n), h));
        double sl = convergenceOrder(hs, errs);
        o.need(std::fabs(sl - p) <= 0.3, std::string(n) + " problem " + std::to_string(id) + " slope " + num(sl));
      }
  });

  run("AC8", "branch walk from SOLUTION 1 reaches SOLUTION 2", 60.0, [](Outcome& o) {
    const double c2S2 = 0.1028639988105;
    SearchConfig cfg;
    auto pts = branchWalk(BranchPoint::from(catDForm<double>("CK54_S1")), +1, cfg, {c2S2});
    double best = std::numeric_limits<double>::infinity(), worstRes = 0, worstRefl = 0;
    for (const auto& p : pts) {
      worstRes = std::max(worstRes, p.residualNorm);
      worstRefl = std::max(worstRefl, norm(dFormResiduals54(reflectDForm(p.dform))));
      if (std::fabs(p.c2 - c2S2) > 1e-8) continue;
      double e = 0;
      for (int i = 0; i < 6; ++i) e = std::max(e, std::fabs(p.dform.d[i] - kCKd[1][i]));
      best = std::min(best, e);
    }
    o.need(best <= 1e-8, "closest d-form off by " + num(best));
    o.need(worstRes <= 1e-12, "walk residual " + num(worstRes));
    o.need(worstRefl <= 1e-10, "reflected residual " + num(worstRefl));
    o.need(pts.size() > 100, "walk too short");
  });

  run("AC9", "self-reflected constructors", 0, [](Outcome& o) {
    auto df = buildSelfReflected64();
    auto tab = dFormToButcher(df);
    auto sch = dFormToTwoN(df);
    // printed to 4 decimals
    const double a[6][6] = {{0},
                            {0.1342},
                            {-0.3257, 0.9197},
                            {-0.4197, 1.1077, -0.1880},
                            {-0.3257, 0.9197, 0, -0.1880},
                            {0.1342, 0, 0.9197, -1.1077, 0.9197}};
    const double c[6] = {0, 0.1342, 0.5940, 0.5, 0.4060, 0.8658};
    const double b[6] = {0, 0.2683, 0.6513, -0.8393, 0.6513, 0.2683};
    const double A[6] = {0, -0.5, -1, -1, -1, -1};
    const double B[6] = {0.1342, 0.9197, -0.1880, -0.1880, 0.9197, 0.2683};
    double e = 0;
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < i; ++j) e = std::max(e, std::fabs(tab.a(i, j) - a[i][j]));
      e = std::max({e, std::fabs(tab.c[i] - c[i]), std::fabs(tab.b[i] - b[i]), std::fabs(sch.A[i] - A[i]),
                    std::fabs(sch.B[i] - B[i])});
    }
    o.need(e <= 5e-5 + 1e-12, "(6,4) table off by " + num(e));
    double t4 = tallTree(tab, 4), t5 = tallTree(tab, 5);
    o.need(num(t4) == "0.00802" && num(t5) == "0.00108", "tall trees " + num(t4) + ", " + num(t5));
    o.need(isSelfReflected(df, 1e-12), "(6,4) not self-reflected");

    auto d8 = buildSelfReflected84();
    double r8 = maxOrderResidual(dFormToButcher(d8), 4);
    o.need(r8 <= 1e-11, "(8,4) residual " + num(r8));
    auto ex = buildSelfReflected84Exact();
    auto rx = reflectDForm(ex);
    o.need(rx.c == ex.c && rx.d == ex.d, "(8,4) reflection not exact");
  });

  run("AC10", "negative controls", 0, [](Outcome& o) {
    auto throwsNoDForm = [](auto&& f) {
      try {
        f();
      } catch (const NoDForm&) {
        return true;
      }
      return false;
    };
    o.need(throwsNoDForm([] { butcherToDForm(catTab<Rational>("(5,4)_5")); }), "butcherToDForm accepted (5,4)_5");
    o.need(throwsNoDForm([] { reflectScheme(cat2N<Rational>("(5,4)_5")); }), "reflectScheme accepted (5,4)_5");
    bool failed = false;
    try {
      constrainedSearch54(1.0 / 120);
    } catch (const NoConvergence&) {
      failed = true;
    }
    o.need(failed, "1/120 was reached");
    bool not2N = false;
    try {
      butcherToTwoN(rk4<Rational>());
    } catch (const NotTwoNCompatible&) {
      not2N = true;
    }
    o.need(not2N, "RK4 converted to 2N");
    o.need(fifthBreaking(rk4<Rational>()) == R("1/16"), "RK4 fifth-order value");
  });

  run("AC11", "Williamson curve", 0, [](Outcome& o) {
    o.need(williamsonC3(R("1/3")) == vec<Rational>({"1/3", "3/4"}), "roots at 1/3");
    double worst = 0;
    std::size_t count = 0;
    for (auto [lo, hi, step] : {std::tuple{-3.0, 4.0, 1e-3}, std::tuple{0.0, 1.0, 1.0 / 30}})
      for (const auto& p : wcurveScan(lo, hi, step)) {
        worst = std::max({worst, std::fabs(p.residual), std::fabs(p.reflectedResidual)});
        ++count;
      }
    o.need(count > 1000, "scan too small");
    o.need(worst <= 1e-12, "scan residual " + num(worst));
  });

  std::printf("%d failing\n", failures);
  return failures == 0 ? 0 : 1;
}
