#pragma once

#include "lsrk/reflection.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace lsrk {

struct SearchConfig {
  double tol = 1e-12;
  int maxIter = 200;
  double epsWalk = 5e-3;   // predictor step, kept within [1e-4, 10]
  double backtrack = 0.5;
  double armijo = 1e-4;
  std::uint64_t seedRng = 1;
  int maxSteps = 6000;     // walk length cap
  double gapD = 1e6;       // points with |d| or |c| beyond these are not emitted
  double gapC = 1e3;

  void check() const;
};

// (5,4) d-form order conditions minus targets, in the order
// bc, bc2, bac, bc3, bcac, bac2, ba2c.
// Written in e2 = c2 d2 and e5 = (1 - c5) d5, which stay finite where d2 or d5 blow up.
template <class T>
std::array<T, 7> residuals54Regular(const T& c2, const T& c3, const T& c4, const T& c5, const T& e2,
                                    const T& d3, const T& d4, const T& e5) {
  const T one(1);
  auto pw = [](const T& x, int p) {
    T r(1);
    for (int k = 0; k < p; ++k) r *= x;
    return r;
  };
  auto lin = [&](int p) {
    T P2 = pw(c2, p - 1) * e2, q3 = pw(c3, p), q4 = pw(c4, p), q5 = pw(c5, p);
    return (one - c2) * P2 + q3 * (one - c3) * d3 + q4 * (one - c4) * d4 + q5 * e5
           - P2 * (one - c3) * d3 - P2 * (one - c4) * d4 - P2 * e5
           - q3 * (one - c4) * d3 * d4 - q3 * d3 * e5 - q4 * d4 * e5
           + P2 * (one - c4) * d3 * d4 + P2 * d3 * e5 + P2 * d4 * e5 + q3 * d3 * d4 * e5
           - P2 * d3 * d4 * e5;
  };
  auto bac = [&](int p) {
    T P2 = pw(c2, p - 1) * e2, q3 = pw(c3, p), q4 = pw(c4, p);
    return P2 * (c3 - c2) * (one - c3) * d3 + P2 * (c4 - c2) * (one - c4) * d4 + P2 * (c5 - c2) * e5
           + q3 * (c4 - c3) * (one - c4) * d3 * d4 + q3 * (c5 - c3) * d3 * e5 + q4 * (c5 - c4) * d4 * e5
           - P2 * (c4 - c2) * (one - c4) * d3 * d4 - P2 * (c5 - c2) * d3 * e5
           - P2 * (c5 - c2) * d4 * e5 - q3 * (c5 - c3) * d3 * d4 * e5
           + P2 * (c5 - c2) * d3 * d4 * e5;
  };
  T bcac = e2 * c3 * (c3 - c2) * (one - c3) * d3 + e2 * c4 * (c4 - c2) * (one - c4) * d4
           + e2 * c5 * (c5 - c2) * e5
           + c3 * c4 * (c4 - c3) * (one - c4) * d3 * d4 + c3 * c5 * (c5 - c3) * d3 * e5
           + c4 * c5 * (c5 - c4) * d4 * e5
           - e2 * (c3 * (c3 - c2) * (one - c4) + c4 * (c4 - c3) * (one - c4)) * d3 * d4
           - e2 * (c3 * (c3 - c2) + c5 * (c5 - c3)) * d3 * e5
           - e2 * (c4 * (c4 - c2) + c5 * (c5 - c4)) * d4 * e5
           - (c3 * c4 * (c4 - c3) + c3 * c5 * (c5 - c4)) * d3 * d4 * e5
           + e2 * (c3 * (c3 - c2) + c4 * (c4 - c3) + c5 * (c5 - c4)) * d3 * d4 * e5;
  T ba2c = e2 * (c3 - c2) * (c4 - c3) * (one - c4) * d3 * d4 + e2 * (c3 - c2) * (c5 - c3) * d3 * e5
           + e2 * (c5 - c4) * (c4 - c2) * d4 * e5 + c3 * (c4 - c3) * (c5 - c4) * d3 * d4 * e5
           - e2 * ((c3 - c2) * (c5 - c3) + (c5 - c4) * (c4 - c3)) * d3 * d4 * e5;
  return {lin(1) - T(1) / 2,  lin(2) - T(1) / 3, bac(1) - T(1) / 6, lin(3) - T(1) / 4,
          bcac - T(1) / 8,    bac(2) - T(1) / 12, ba2c - T(1) / 24};
}

template <class T>
std::array<T, 7> dFormResiduals54(const DForm<T>& df) {
  if (df.stages() != 5) throw WrongStageCount("(5,4) residuals need s = 5");
  const auto& c = df.c;
  const auto& d = df.d;
  return residuals54Regular(c[1], c[2], c[3], c[4], T(c[1] * d[1]), d[2], d[3],
                            T((T(1) - c[4]) * d[4]));
}

double norm(const std::array<double, 7>& r);

// x = (c3, c4, c5, d2, d3, d4, d5) with c2 held fixed
std::array<double, 7> residuals54(const std::array<double, 7>& x, double c2);

struct BranchPoint {
  DForm<double> dform;
  double c2 = 0, c5 = 0;
  double residualNorm = 0;
  bool gapBefore = false;  // a singular crossing or unreportable stretch precedes this point
  int iterations = 0;

  static BranchPoint from(const DForm<double>& df);
};

BranchPoint newtonSolve(const std::array<double, 7>& x0, double c2, const SearchConfig& cfg = {});

// Walks the one-parameter solution set through seed. direction picks the sign of the
// first c2 perturbation. Stops when the branch closes on itself, after maxSteps, or
// when the corrector fails at the minimum step. Any c2 value in landings that the walk
// steps across gets an extra point solved at exactly that c2.
std::vector<BranchPoint> branchWalk(const BranchPoint& seed, int direction, const SearchConfig& cfg = {},
                                    const std::vector<double>& landings = {});

// residuals54 plus tallTree(4) = target, continued in the target from each seed
BranchPoint constrainedSearch54(double target, const SearchConfig& cfg = {},
                                const std::vector<DForm<double>>& seeds = {});

// c3 roots of the (6,4) one-parameter family for given c2
std::vector<double> family64C3(double c2);

// self-reflected (6,4) and (8,4) schemes with every d_i = 2
DForm<double> buildSelfReflected64();
DForm<double> buildSelfReflected84();
// the same, carried to ~40 digits as exact rationals
DForm<Rational> buildSelfReflected64Exact();
DForm<Rational> buildSelfReflected84Exact();

}  // namespace lsrk
