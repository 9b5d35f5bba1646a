#include "lsrk/stability.hpp"

#include <array>
#include <cmath>
#include <unordered_map>

namespace lsrk {

std::complex<double> evalPolynomial(const std::vector<double>& coeffs, std::complex<double> z) {
  std::complex<double> r(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * z + *it;
  return r;
}

namespace {

// marching squares over f = |R| - 1; segments join through shared grid edges
struct Contour {
  const StabilityRegion& reg;
  int n;
  long H;  // number of horizontal edges

  double f(int i, int j) const { return reg.at(i, j) - 1.0; }
  bool in(int i, int j) const { return f(i, j) <= 0; }

  long hEdge(int i, int j) const { return long(j) * (n - 1) + i; }
  long vEdge(int i, int j) const { return H + long(j) * n + i; }

  std::complex<double> point(long e) const {
    int i0, j0, i1, j1;
    if (e < H) {
      j0 = j1 = int(e / (n - 1));
      i0 = int(e % (n - 1));
      i1 = i0 + 1;
    } else {
      long k = e - H;
      j0 = int(k / n);
      i0 = i1 = int(k % n);
      j1 = j0 + 1;
    }
    double f0 = f(i0, j0), f1 = f(i1, j1);
    double t = f0 == f1 ? 0.5 : f0 / (f0 - f1);
    return {reg.re(i0) + t * (reg.re(i1) - reg.re(i0)), reg.im(j0) + t * (reg.im(j1) - reg.im(j0))};
  }
};

}  // namespace

StabilityRegion stabilityRegion(const std::vector<double>& coeffs, const Grid& g) {
  if (g.n < 2 || !(g.re1 > g.re0) || !(g.im1 > g.im0)) throw std::invalid_argument("bad stability grid");
  StabilityRegion reg;
  reg.grid = g;
  reg.absR.resize(std::size_t(g.n) * g.n);
  for (int j = 0; j < g.n; ++j)
    for (int i = 0; i < g.n; ++i)
      reg.absR[std::size_t(j) * g.n + i] = std::abs(evalPolynomial(coeffs, {reg.re(i), reg.im(j)}));

  Contour ct{reg, g.n, long(g.n) * (g.n - 1)};
  std::unordered_map<long, std::vector<long>> adj;
  auto link = [&](long a, long b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (int j = 0; j + 1 < g.n; ++j)
    for (int i = 0; i + 1 < g.n; ++i) {
      // corners counter-clockwise from bottom-left, edges bottom, right, top, left
      std::array<bool, 4> c{ct.in(i, j), ct.in(i + 1, j), ct.in(i + 1, j + 1), ct.in(i, j + 1)};
      std::array<long, 4> e{ct.hEdge(i, j), ct.vEdge(i + 1, j), ct.hEdge(i, j + 1), ct.vEdge(i, j)};
      std::vector<int> cut;
      for (int k = 0; k < 4; ++k)
        if (c[k] != c[(k + 1) % 4]) cut.push_back(k);
      if (cut.size() == 2) {
        link(e[cut[0]], e[cut[1]]);
      } else if (cut.size() == 4) {
        double centre = ct.f(i, j) + ct.f(i + 1, j) + ct.f(i + 1, j + 1) + ct.f(i, j + 1);
        // saddle: connect so the centre joins the side it agrees with
        if ((centre <= 0) == c[0]) {
          link(e[0], e[1]);
          link(e[2], e[3]);
        } else {
          link(e[3], e[0]);
          link(e[1], e[2]);
        }
      }
    }

  std::unordered_map<long, bool> used;
  auto trace = [&](long start) {
    std::vector<std::complex<double>> line{ct.point(start)};
    used[start] = true;
    long prev = -1, cur = start;
    for (;;) {
      long next = -1;
      for (long nb : adj[cur])
        if (nb != prev && !used[nb]) {
          next = nb;
          break;
        }
      if (next < 0) {
        // closed loop: repeat the first point
        for (long nb : adj[cur])
          if (nb == start && nb != prev && line.size() > 2) line.push_back(line.front());
        break;
      }
      used[next] = true;
      line.push_back(ct.point(next));
      prev = cur;
      cur = next;
    }
    reg.boundary.push_back(std::move(line));
  };
  // open chains first (they end on the grid border), then loops
  for (auto& [e, nbs] : adj)
    if (nbs.size() == 1 && !used[e]) trace(e);
  for (auto& [e, nbs] : adj)
    if (!used[e]) trace(e);
  return reg;
}

double realAxisExtent(const std::vector<double>& coeffs, double reMin) {
  // first crossing of |R(x)| = 1 walking left from 0, then bisection
  double step = 1e-3, x = 0;
  while (x > reMin) {
    double nx = x - step;
    if (std::abs(evalPolynomial(coeffs, nx)) > 1) {
      double lo = nx, hi = x;
      for (int k = 0; k < 60; ++k) {
        double mid = 0.5 * (lo + hi);
        (std::abs(evalPolynomial(coeffs, mid)) > 1 ? lo : hi) = mid;
      }
      return hi;
    }
    x = nx;
  }
  return reMin;
}

}  // namespace lsrk
