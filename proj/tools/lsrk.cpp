// lsrk: command-line front end for the 2N-storage Runge-Kutta toolkit.
#include "lsrk/catalog.hpp"
#include "lsrk/integrate.hpp"
#include "lsrk/search.hpp"
#include "lsrk/stability.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace lsrk;
using json = nlohmann::ordered_json;

namespace {

// exit codes
constexpr int kOk = 0, kInvalid = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool exact = false;
  bool json = false;
};

std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "-" is stdin, then a file, then a catalog name
SchemeDoc loadScheme(const std::string& src) {
  if (src == "-") return parseSchemeJson(slurp(std::cin));
  if (std::filesystem::exists(src)) {
    std::ifstream f(src);
    return parseSchemeJson(slurp(f));
  }
  try {
    return catalogGet(src).scheme;
  } catch (const UnknownScheme&) {
    throw UsageError("'" + src + "' is neither a file nor a catalog scheme");
  }
}

template <class F>
auto dispatch(bool exact, F&& f) {
  if (exact) return f(Rational{});
  return f(0.0);
}

std::ostream& openOut(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  return file;
}

std::vector<double> splitNumbers(const std::string& spec, std::size_t count, const char* what) {
  std::vector<double> v;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ':')) {
    try {
      v.push_back(parseAs<double>(tok));
    } catch (const std::exception&) {
      throw UsageError(std::string("bad ") + what + " '" + spec + "'");
    }
  }
  if (v.size() != count) throw UsageError(std::string(what) + " needs " + std::to_string(count) + " fields");
  return v;
}

template <class T>
json jsonArray(const std::vector<T>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(format(x));
  return a;
}

// ---- verify ---------------------------------------------------------------

int cmdVerify(const Globals& g, const std::string& src, std::optional<double> tolOpt, int tallN) {
  SchemeDoc doc = loadScheme(src);
  bool exact = g.exact || doc.exact;
  return dispatch(exact, [&](auto tag) {
    using T = decltype(tag);
    double tol = tolOpt.value_or(is_exact_v<T> ? 0.0 : 1e-9);
    auto tab = asButcher<T>(doc);
    auto val = validate(tab, is_exact_v<T> ? tol : std::max(tol, 1e-10));
    auto rep = checkOrder(tab, tol);
    std::vector<T> tall;
    for (int n = 1; n <= std::min(tallN, tab.stages() - 1); ++n) tall.push_back(tallTree(tab, n));
    bool ok = val.valid && (!doc.order || rep.order >= *doc.order);
    if (g.json) {
      json j{{"name", doc.name}, {"valid", val.valid}, {"order", rep.order}, {"tol", tol},
             {"fifthBreaking", format(rep.fifthBreaking)}, {"ok", ok}};
      if (doc.order) j["claimedOrder"] = *doc.order;
      json res;
      for (int k = 0; k < 8; ++k) res[orderConditions()[k].label] = format(rep.residuals[k]);
      j["residuals"] = res;
      j["tallTrees"] = jsonArray(tall);
      j["failures"] = val.failures;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << doc.name << ": s = " << tab.stages() << ", order " << rep.order;
      if (doc.order) std::cout << " (claimed " << *doc.order << ")";
      std::cout << (is_exact_v<T> ? ", exact" : ", floating") << "\n";
      for (const auto& f : val.failures) std::cout << "  invalid: " << f << "\n";
      for (int k = 0; k < 8; ++k)
        std::cout << "  " << orderConditions()[k].label << " residual " << format(rep.residuals[k]) << "\n";
      std::cout << "  fifth-order breaking term " << format(rep.fifthBreaking) << " (1/20 needed)\n";
      for (std::size_t n = 0; n < tall.size(); ++n)
        std::cout << "  tallTree(" << n + 1 << ") = " << format(tall[n]) << "\n";
      std::cout << (ok ? "OK" : "FAILED") << "\n";
    }
    return ok ? kOk : kInvalid;
  });
}

// ---- reflect --------------------------------------------------------------

// name of a catalog scheme with the same coefficients, if any
std::string matchCatalog(const TwoNScheme<double>& sch) {
  for (const auto& n : catalogList()) {
    const auto& e = catalogGet(n);
    if (e.scheme.s != sch.stages()) continue;
    try {
      auto other = asTwoN<double>(e.scheme, 1e-9);
      double m = std::max({maxAbsDiff(other.A, sch.A), maxAbsDiff(other.B, sch.B), maxAbsDiff(other.c, sch.c)});
      if (m <= 1e-9) return n;
    } catch (const Error&) {
    }
  }
  return "";
}

int cmdReflect(const Globals& g, const std::string& src, bool checkOrd) {
  SchemeDoc doc = loadScheme(src);
  bool exact = g.exact || doc.exact;
  return dispatch(exact, [&](auto tag) {
    using T = decltype(tag);
    auto tab = asButcher<T>(doc);
    auto df = asDForm<T>(doc, is_exact_v<T> ? 0.0 : 1e-9);
    auto refl = dFormToTwoN(reflectDForm(df));
    auto rtab = twoNToButcher(refl);
    auto cons = conservation(tab, rtab);
    std::vector<double> A, B, c;
    for (const auto& x : refl.A) A.push_back(toDouble(x));
    for (const auto& x : refl.B) B.push_back(toDouble(x));
    for (const auto& x : refl.c) c.push_back(toDouble(x));
    std::string partner = matchCatalog(TwoNScheme<double>(A, B, c));
    if (partner.empty()) partner = "reflect(" + doc.name + ")";

    auto before = checkOrder(tab, is_exact_v<T> ? 0.0 : 1e-9);
    auto after = checkOrder(rtab, is_exact_v<T> ? 0.0 : 1e-9);
    auto outDoc = makeDoc(partner, refl, doc.order, doc.exact);
    json j = json::parse(toJsonString(outDoc));
    json cj{{"tallTreesBefore", jsonArray(cons.tallTreesBefore)},
            {"tallTreesAfter", jsonArray(cons.tallTreesAfter)},
            {"maxTallTreeDiff", format(cons.maxTallTreeDiff)},
            {"orderBefore", before.order},
            {"orderAfter", after.order}};
    json rb, ra;
    for (int k = 0; k < 8; ++k) {
      rb[orderConditions()[k].label] = format(cons.residualsBefore[k]);
      ra[orderConditions()[k].label] = format(cons.residualsAfter[k]);
    }
    cj["residualsBefore"] = rb;
    cj["residualsAfter"] = ra;
    j["conservation"] = cj;
    std::cout << j.dump(2) << "\n";
    if (checkOrd && after.order < before.order) {
      std::cerr << "reflected scheme has order " << after.order << ", original " << before.order << "\n";
      return kInvalid;
    }
    return kOk;
  });
}

// ---- convert / factorize --------------------------------------------------

int cmdConvert(const Globals& g, const std::string& src, const std::string& to) {
  SchemeDoc doc = loadScheme(src);
  bool exact = g.exact || doc.exact;
  Repr target = parseRepr(to);
  return dispatch(exact, [&](auto tag) {
    using T = decltype(tag);
    double tol = is_exact_v<T> ? 0.0 : 1e-9;
    SchemeDoc out;
    switch (target) {
      case Repr::Butcher:
        out = makeDoc(doc.name, asButcher<T>(doc), doc.order, doc.exact);
        break;
      case Repr::TwoN:
        out = makeDoc(doc.name, asTwoN<T>(doc, tol), doc.order, doc.exact);
        break;
      case Repr::DForm:
        out = makeDoc(doc.name, asDForm<T>(doc, tol), doc.order, doc.exact);
        break;
    }
    std::cout << toJsonString(out) << "\n";
    return kOk;
  });
}

template <class T>
json matrixJson(const Matrix<T>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(format(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

template <class T>
void printMatrix(const char* name, const Matrix<T>& m) {
  std::cout << name << " =\n";
  for (int i = 0; i < m.rows(); ++i) {
    std::cout << " ";
    for (int j = 0; j < m.cols(); ++j) std::cout << " " << format(m(i, j));
    std::cout << "\n";
  }
}

int cmdFactorize(const Globals& g, const std::string& src) {
  SchemeDoc doc = loadScheme(src);
  bool exact = g.exact || doc.exact;
  return dispatch(exact, [&](auto tag) {
    using T = decltype(tag);
    double tol = is_exact_v<T> ? 0.0 : 1e-10;
    auto df = asDForm<T>(doc, is_exact_v<T> ? 0.0 : 1e-9);
    auto f = factorize(df);
    auto res = identityResiduals(df);
    bool ok = toDouble(maxResidual(res)) <= tol;
    if (g.json) {
      json r;
      for (const auto& [k, v] : res) r[k] = format(v);
      std::cout << json{{"name", doc.name}, {"F", matrixJson(f.F)}, {"D", matrixJson(f.D)},
                        {"G", matrixJson(f.G)}, {"A", matrixJson(f.A)}, {"identities", r}, {"ok", ok}}
                       .dump(2)
                << "\n";
    } else {
      printMatrix("F", f.F);
      printMatrix("D", f.D);
      printMatrix("G", f.G);
      printMatrix("A = FD", f.A);
      for (const auto& [k, v] : res) std::cout << "  " << k << " residual " << format(v) << "\n";
      std::cout << (ok ? "OK" : "FAILED") << "\n";
    }
    return ok ? kOk : kInvalid;
  });
}

// ---- integrate / stability ------------------------------------------------

Method methodOf(const SchemeDoc& doc) {
  try {
    return asTwoN<double>(doc, 1e-9);
  } catch (const NotTwoNCompatible&) {
    return asButcher<double>(doc);
  } catch (const ZeroDenominator&) {
    return asButcher<double>(doc);
  }
}

int cmdIntegrate(const Globals& g, const std::string& src, int problem, double h, const std::string& sweep,
                 const std::string& outPath) {
  SchemeDoc doc = loadScheme(src);
  auto p = benchmarkProblem(problem);
  auto m = methodOf(doc);
  if (sweep.empty()) {
    if (!(h > 0)) throw UsageError("--h must be positive");
    auto r = solve(p, m, h);
    double exact = p.exact(p.tEnd);
    if (g.json)
      std::cout << json{{"scheme", doc.name}, {"problem", problem}, {"h", h}, {"steps", r.steps},
                        {"yEnd", r.yEnd}, {"exact", exact}, {"error", std::fabs(r.yEnd - exact)}}
                       .dump(2)
                << "\n";
    else
      std::cout << doc.name << " on " << p.name << ", h = " << h << ": y(" << p.tEnd << ") = "
                << formatDouble(r.yEnd) << ", error " << formatDouble(std::fabs(r.yEnd - exact)) << " after "
                << r.steps << " steps\n";
    return kOk;
  }
  auto v = splitNumbers(sweep, 3, "--sweep hmin:hmax:n");
  int n = int(v[2]);
  if (!(v[0] > 0) || v[1] < v[0] || n < 1) throw UsageError("--sweep needs 0 < hmin <= hmax and n >= 1");
  std::vector<double> hs, errs;
  std::ofstream file;
  std::ostream& out = openOut(outPath, file);
  out << "h,steps,yEnd,error\n";
  for (int k = 0; k < n; ++k) {
    double hk = n == 1 ? v[1] : v[1] * std::pow(v[0] / v[1], double(k) / (n - 1));
    auto r = solve(p, m, hk);
    double e = std::fabs(r.yEnd - p.exact(p.tEnd));
    hs.push_back(hk);
    errs.push_back(e);
    out << formatDouble(hk) << "," << r.steps << "," << formatDouble(r.yEnd) << "," << formatDouble(e) << "\n";
  }
  if (&out != &std::cout) {
    try {
      std::cout << "fitted order " << convergenceOrder(hs, errs) << "\n";
    } catch (const DegenerateFit& e) {
      std::cout << "fitted order unavailable: " << e.what() << "\n";
    }
  }
  return kOk;
}

int cmdStability(const Globals& g, const std::string& src, const std::string& gridSpec, const std::string& outPath) {
  SchemeDoc doc = loadScheme(src);
  Grid grid;
  if (!gridSpec.empty()) {
    auto v = splitNumbers(gridSpec, 5, "--grid re0:re1:im0:im1:n");
    grid = {v[0], v[1], v[2], v[3], int(v[4])};
  }
  auto coeffs = dispatch(g.exact || doc.exact, [&](auto tag) {
    using T = decltype(tag);
    std::vector<double> c;
    for (const auto& x : stabilityPolynomial(asButcher<T>(doc))) c.push_back(toDouble(x));
    return c;
  });
  auto reg = stabilityRegion(coeffs, grid);
  std::ofstream file;
  std::ostream& out = openOut(outPath, file);
  out << "re,im,absR,inside\n";
  for (int j = 0; j < grid.n; ++j)
    for (int i = 0; i < grid.n; ++i)
      out << formatDouble(reg.re(i)) << "," << formatDouble(reg.im(j)) << "," << formatDouble(reg.at(i, j)) << ","
          << (reg.inside(i, j) ? 1 : 0) << "\n";
  if (&out != &std::cout) {
    std::size_t pts = 0;
    for (const auto& l : reg.boundary) pts += l.size();
    std::cout << doc.name << ": R(z) coefficients";
    for (double c : coeffs) std::cout << " " << formatDouble(c);
    std::cout << "\n  real-axis extent " << formatDouble(realAxisExtent(coeffs)) << ", boundary "
              << reg.boundary.size() << " polylines / " << pts << " points\n";
  }
  return kOk;
}

// ---- scan / solve54 / wcurve ----------------------------------------------

void writeBranchRow(std::ostream& out, const BranchPoint& p) {
  const auto& c = p.dform.c;
  const auto& d = p.dform.d;
  out << formatDouble(p.c2) << "," << formatDouble(p.c5) << "," << formatDouble(c[2]) << "," << formatDouble(c[3]);
  for (int i = 1; i <= 4; ++i) out << "," << formatDouble(d[i]);
  out << "," << formatDouble(p.residualNorm) << "\n";
}

int cmdScan(const Globals& g, const std::string& seedSrc, const std::string& param, double eps, int direction,
            const std::vector<double>& landings, const std::string& outPath) {
  if (param != "c2") throw UsageError("scan only perturbs c2");
  SearchConfig cfg;
  cfg.epsWalk = eps;
  try {
    cfg.check();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  SchemeDoc doc = loadScheme(seedSrc);
  auto df = asDForm<double>(doc, 1e-9);
  if (df.stages() != 5) throw UsageError("scan needs a 5-stage seed");
  auto seed = BranchPoint::from(df);
  if (seed.residualNorm > cfg.tol)
    seed = newtonSolve({df.c[2], df.c[3], df.c[4], df.d[1], df.d[2], df.d[3], df.d[4]}, df.c[1], cfg);
  std::vector<BranchPoint> pts;
  for (int dir : direction == 0 ? std::vector<int>{1, -1} : std::vector<int>{direction}) {
    auto part = branchWalk(seed, dir, cfg, landings);
    if (pts.empty()) {
      pts = part;
    } else {
      // the second direction runs backwards from the seed; glue it in front
      std::vector<BranchPoint> joined(part.rbegin(), part.rend() - 1);
      joined.back().gapBefore = false;
      for (std::size_t k = 0; k < joined.size(); ++k)
        if (k + 1 < joined.size()) joined[k].gapBefore = joined[k + 1].gapBefore;
      joined.insert(joined.end(), pts.begin(), pts.end());
      pts = joined;
    }
  }
  std::ofstream file;
  std::ostream& out = openOut(outPath, file);
  out << "c2,c5,c3,c4,d2,d3,d4,d5,residual\n";
  std::size_t gaps = 0;
  for (const auto& p : pts) {
    if (p.gapBefore) {
      out << "nan,nan,nan,nan,nan,nan,nan,nan,nan\n";
      ++gaps;
    }
    writeBranchRow(out, p);
  }
  if (&out != &std::cout || g.json)
    std::cerr << pts.size() << " branch points, " << gaps << " gaps\n";
  return kOk;
}

std::array<double, 7> parseX0(const std::string& src) {
  std::string text = src;
  if (std::filesystem::exists(src)) {
    std::ifstream f(src);
    text = slurp(f);
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    // maybe a scheme name
    auto df = asDForm<double>(loadScheme(src), 1e-9);
    return {df.c[2], df.c[3], df.c[4], df.d[1], df.d[2], df.d[3], df.d[4]};
  }
  auto num = [](const json& v) { return v.is_string() ? parseAs<double>(v.get<std::string>()) : v.get<double>(); };
  std::array<double, 7> x;
  if (j.is_array()) {
    if (j.size() != 7) throw UsageError("--x0 array needs 7 entries (c3, c4, c5, d2, d3, d4, d5)");
    for (int k = 0; k < 7; ++k) x[k] = num(j[k]);
    return x;
  }
  if (j.is_object() && j.contains("repr")) {
    auto df = asDForm<double>(parseSchemeJson(text), 1e-9);
    return {df.c[2], df.c[3], df.c[4], df.d[1], df.d[2], df.d[3], df.d[4]};
  }
  const char* keys[7] = {"c3", "c4", "c5", "d2", "d3", "d4", "d5"};
  for (int k = 0; k < 7; ++k) {
    if (!j.contains(keys[k])) throw UsageError(std::string("--x0 missing ") + keys[k]);
    x[k] = num(j.at(keys[k]));
  }
  return x;
}

void printPoint(const Globals& g, const BranchPoint& p) {
  SchemeDoc doc = makeDoc("solve54(c2=" + formatDouble(p.c2) + ")", p.dform, 4, false);
  json j = json::parse(toJsonString(doc));
  j["residualNorm"] = p.residualNorm;
  j["iterations"] = p.iterations;
  (void)g;
  std::cout << j.dump(2) << "\n";
}

int cmdSolve54(const Globals& g, const std::string& fix, const std::string& x0, int starts, std::uint64_t seed) {
  auto eq = fix.find('=');
  if (eq == std::string::npos || fix.substr(0, eq) != "c2") throw UsageError("--fix expects c2=<value>");
  double c2 = parseAs<double>(fix.substr(eq + 1));
  SearchConfig cfg;
  cfg.seedRng = seed;
  if (!x0.empty()) {
    printPoint(g, newtonSolve(parseX0(x0), c2, cfg));
    return kOk;
  }
  // random starts, as in a plain multistart search
  std::mt19937_64 rng(cfg.seedRng);
  std::uniform_real_distribution<double> uc(0, 1), ud(-3, 3);
  std::vector<BranchPoint> found;
  for (int k = 0; k < starts; ++k) {
    std::array<double, 7> x{uc(rng), uc(rng), uc(rng), ud(rng), ud(rng), ud(rng), ud(rng)};
    try {
      auto p = newtonSolve(x, c2, cfg);
      bool dup = false;
      for (const auto& q : found)
        if (maxAbsDiff(q.dform.c, p.dform.c) < 1e-8 && maxAbsDiff(q.dform.d, p.dform.d) < 1e-8) dup = true;
      if (!dup) found.push_back(p);
    } catch (const Error&) {
    }
  }
  if (found.empty()) {
    std::cerr << "no solution from " << starts << " random starts\n";
    return kInvalid;
  }
  for (const auto& p : found) printPoint(g, p);
  return kOk;
}

int cmdWcurve(double lo, double hi, double step, double maxAbs, const std::string& outPath) {
  auto pts = wcurveScan(lo, hi, step, maxAbs);
  std::ofstream file;
  std::ostream& out = openOut(outPath, file);
  out << "c2,c3,branch,c2r,c3r,residual,reflected_residual\n";
  double worst = 0;
  for (const auto& p : pts) {
    out << formatDouble(p.c2) << "," << formatDouble(p.c3) << "," << p.branch << "," << formatDouble(p.c2r) << ","
        << formatDouble(p.c3r) << "," << formatDouble(p.residual) << "," << formatDouble(p.reflectedResidual)
        << "\n";
    worst = std::max({worst, std::fabs(p.residual), std::fabs(p.reflectedResidual)});
  }
  if (&out != &std::cout) std::cout << pts.size() << " points, worst residual " << formatDouble(worst) << "\n";
  return worst <= 1e-12 ? kOk : kInvalid;
}

// ---- catalog --------------------------------------------------------------

int cmdCatalogList(const Globals& g) {
  if (g.json) {
    json a = json::array();
    for (const auto& n : catalogList()) {
      const auto& e = catalogGet(n);
      a.push_back({{"name", n}, {"order", e.claimedOrder}, {"exact", e.exact}, {"notes", e.notes}});
    }
    std::cout << a.dump(2) << "\n";
  } else {
    for (const auto& n : catalogList()) {
      const auto& e = catalogGet(n);
      std::cout << n << "\torder " << e.claimedOrder << "\t" << (e.exact ? "exact" : "decimal");
      if (!e.notes.empty()) std::cout << "\t" << e.notes;
      std::cout << "\n";
    }
  }
  return kOk;
}

int cmdCatalogShow(const std::string& name, const std::string& repr) {
  const CatalogEntry* e;
  try {
    e = &catalogGet(name);
  } catch (const UnknownScheme& ex) {
    throw UsageError(ex.what());
  }
  if (repr.empty()) {
    std::cout << toJsonString(e->scheme) << "\n";
    return kOk;
  }
  return dispatch(e->exact, [&](auto tag) {
    using T = decltype(tag);
    double tol = is_exact_v<T> ? 0.0 : 1e-9;
    SchemeDoc out;
    switch (parseRepr(repr)) {
      case Repr::Butcher:
        out = makeDoc(e->name, asButcher<T>(e->scheme), e->claimedOrder, e->exact);
        break;
      case Repr::TwoN:
        out = makeDoc(e->name, asTwoN<T>(e->scheme, tol), e->claimedOrder, e->exact);
        break;
      case Repr::DForm:
        out = makeDoc(e->name, asDForm<T>(e->scheme, tol), e->claimedOrder, e->exact);
        break;
    }
    std::cout << toJsonString(out) << "\n";
    return kOk;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2N-storage Runge-Kutta schemes: verify, reflect, factorize, integrate, search"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--exact", g.exact, "rational arithmetic where the input allows");
  app.add_flag("--json", g.json, "machine-readable output");
  app.fallthrough();

  std::string scheme, to, sweep, out, grid, seedSrc, param = "c2", fix, x0, name, repr;
  std::optional<double> tol;
  int tallN = 0, problem = 1, direction = 0, starts = 20;
  double h = 0, eps = 5e-3, lo = 0, hi = 1, step = 0.01, maxAbs = 10;
  std::vector<double> landings;
  std::uint64_t rngSeed = 1;
  int code = kOk;

  auto* verify = app.add_subcommand("verify", "check validity, order, tall trees");
  verify->add_option("scheme", scheme, "scheme json, '-' or catalog name")->required();
  verify->add_option("--tol", tol, "residual tolerance");
  verify->add_option("--tall-trees", tallN, "print tallTree(1..N)");

  bool checkOrd = false;
  auto* reflect = app.add_subcommand("reflect", "c-reflect a scheme");
  reflect->add_option("scheme", scheme)->required();
  reflect->add_flag("--check-order", checkOrd, "fail if the reflection loses order");

  auto* convert = app.add_subcommand("convert", "change representation");
  convert->add_option("scheme", scheme)->required();
  convert->add_option("--to", to, "butcher | 2n | dform")->required();

  auto* fact = app.add_subcommand("factorize", "A = F D and the structural identities");
  fact->add_option("scheme", scheme)->required();

  auto* integ = app.add_subcommand("integrate", "run a benchmark problem");
  integ->set_help_flag("--help", "Print this help message and exit");
  integ->add_option("--scheme", scheme)->required();
  integ->add_option("--problem", problem)->check(CLI::Range(1, 3));
  integ->add_option("--h", h, "step size");
  integ->add_option("--sweep", sweep, "hmin:hmax:n");
  integ->add_option("--out", out, "csv path");

  auto* stab = app.add_subcommand("stability", "|R(z)| on a grid");
  stab->add_option("--scheme", scheme)->required();
  stab->add_option("--grid", grid, "re0:re1:im0:im1:n");
  stab->add_option("--out", out, "csv path");

  auto* scan = app.add_subcommand("scan", "walk a (5,4) solution branch");
  scan->add_option("--seed", seedSrc, "seed scheme json or catalog name")->required();
  scan->add_option("--param", param, "perturbed parameter (c2)");
  scan->add_option("--eps", eps, "predictor step");
  scan->add_option("--direction", direction, "+1, -1, or 0 for both")->check(CLI::IsMember({-1, 0, 1}));
  scan->add_option("--land", landings, "c2 values to hit exactly");
  scan->add_option("--out", out, "csv path");

  auto* s54 = app.add_subcommand("solve54", "Newton solve of the (5,4) conditions at fixed c2");
  s54->add_option("--fix", fix, "c2=<value>")->required();
  s54->add_option("--x0", x0, "json: [c3,c4,c5,d2,d3,d4,d5], object, or scheme");
  s54->add_option("--starts", starts, "random starts when no x0");
  s54->add_option("--seed", rngSeed, "rng seed for random starts");

  auto* wc = app.add_subcommand("wcurve", "third-order 3-stage 2N curve");
  wc->add_option("--min", lo)->required();
  wc->add_option("--max", hi)->required();
  wc->add_option("--step", step)->required();
  wc->add_option("--max-abs", maxAbs, "drop roots with |c3| above this");
  wc->add_option("--out", out, "csv path");

  auto* cat = app.add_subcommand("catalog", "bundled schemes");
  cat->require_subcommand(1);
  auto* catList = cat->add_subcommand("list");
  auto* catShow = cat->add_subcommand("show");
  catShow->add_option("name", name)->required();
  catShow->add_option("--repr", repr, "butcher | 2n | dform");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) code = cmdVerify(g, scheme, tol, tallN);
    else if (*reflect) code = cmdReflect(g, scheme, checkOrd);
    else if (*convert) code = cmdConvert(g, scheme, to);
    else if (*fact) code = cmdFactorize(g, scheme);
    else if (*integ) code = cmdIntegrate(g, scheme, problem, h, sweep, out);
    else if (*stab) code = cmdStability(g, scheme, grid, out);
    else if (*scan) code = cmdScan(g, seedSrc, param, eps, direction, landings, out);
    else if (*s54) code = cmdSolve54(g, fix, x0, starts, rngSeed);
    else if (*wc) code = cmdWcurve(lo, hi, step, maxAbs, out);
    else if (*catList) code = cmdCatalogList(g);
    else if (*catShow) code = cmdCatalogShow(name, repr);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const NoDForm& e) {
    std::cerr << "NoDFORM: " << e.what() << "\n";
    return kInvalid;
  } catch (const NotTwoNCompatible& e) {
    std::cerr << "NotTwoNCompatible: " << e.what() << "\n";
    return kInvalid;
  } catch (const lsrk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return code;
}
