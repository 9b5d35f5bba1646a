#include "support.hpp"

#include <doctest.h>

using namespace lsrk;
using namespace lsrk::testing;

TEST_CASE("RK4 is fourth order, not fifth") {
  auto rep = checkOrder(rk4<Rational>());
  CHECK(rep.order == 4);
  for (const auto& r : rep.residuals) CHECK(r == 0);
  CHECK(fifthBreaking(rk4<Rational>()) == R("1/16"));
}

TEST_CASE("(4,3) pair residuals, exactly") {
  auto r1 = orderResiduals(catTab<Rational>("(4,3)_1"));
  auto r2 = orderResiduals(catTab<Rational>("(4,3)_2"));
  std::array<Rational, 8> e1{0, 0, 0, 0, R("13/972"), R("1/108"), R("1/108"), 0};
  std::array<Rational, 8> e2{0, 0, 0, 0, R("-5/972"), R("-1/108"), R("-1/108"), 0};
  CHECK(r1 == e1);
  CHECK(r2 == e2);
  CHECK(checkOrder(catTab<Rational>("(4,3)_1")).order == 3);
}

TEST_CASE("trace forms equal the sums") {
  for (std::string n : {"(4,3)_1", "(5,4)_5", "(6,4)_4", "(6,4)_8"}) {
    CAPTURE(n);
    auto tab = catTab<Rational>(n);
    CHECK(traceWeights(tab) == elementaryWeights(tab));
  }
  CHECK(traceWeights(rk4<Rational>()) == elementaryWeights(rk4<Rational>()));
}

TEST_CASE("exact tall trees") {
  CHECK(tallTree(catTab<Rational>("(4,3)_1"), 3) == R("1/24"));
  CHECK(tallTree(catTab<Rational>("(4,3)_2"), 3) == R("1/24"));
  CHECK(tallTree(catTab<Rational>("(5,4)_5"), 4) == R("1/360"));
  CHECK(tallTrees(catTab<Rational>("(6,4)_4")) == vec<Rational>({"1/2", "1/6", "1/24", "4/693", "1/1386"}));
  CHECK(tallTrees(catTab<Rational>("(6,4)_5")) == vec<Rational>({"1/2", "1/6", "1/24", "4/693", "1/1386"}));
  CHECK(tallTree(catTab<Rational>("(6,4)_6"), 4) == R("1/192"));
  CHECK(tallTree(catTab<Rational>("(6,4)_6"), 5) == R("1/1152"));
  CHECK(tallTree(catTab<Rational>("(6,4)_7"), 4) == R("1/72"));
  CHECK(tallTree(catTab<Rational>("(6,4)_7"), 5) == R("1/432"));
  CHECK(tallTree(catTab<Rational>("(6,4)_8"), 4) == R("1/216"));
  CHECK(tallTree(catTab<Rational>("(6,4)_8"), 5) == R("7/7776"));
}

TEST_CASE("tall trees from decimals") {
  for (std::string n : {"CK54_S1", "CK54_S2", "CK54_S3", "CK54_S4"})
    CHECK(tallTree(catTab<double>(n), 4) == doctest::Approx(1.0 / 200).epsilon(1e-10));
  double t12 = (3 - std::sqrt(3.0)) / 144;
  CHECK(std::fabs(tallTree(catTab<double>("(5,4)_1"), 4) - t12) < 1e-14);
  CHECK(std::fabs(tallTree(catTab<double>("(5,4)_2"), 4) - t12) < 1e-14);
  CHECK(std::fabs(tallTree(catTab<double>("(5,4)_3"), 4) - 1.0 / 72) < 1e-14);
}

TEST_CASE("tall tree index range") {
  auto tab = catTab<Rational>("(4,3)_1");
  CHECK_THROWS_AS(tallTree(tab, 0), OutOfRange);
  CHECK_THROWS_AS(tallTree(tab, 4), OutOfRange);
}

TEST_CASE("every catalog scheme meets its claimed order") {
  for (const auto& n : catalogList()) {
    CAPTURE(n);
    const auto& e = catalogGet(n);
    if (e.exact) {
      auto rep = checkOrder(catTab<Rational>(n));
      CHECK(rep.order == e.claimedOrder);
    } else {
      auto rep = checkOrder(catTab<double>(n), 1e-11);
      CHECK(rep.order == e.claimedOrder);
    }
  }
}

TEST_CASE("(5,4)_5 is not fifth order") {
  CHECK(fifthBreaking(catTab<Rational>("(5,4)_5")) == R("1/18"));
}
