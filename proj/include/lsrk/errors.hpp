#pragma once

#include <stdexcept>
#include <string>

namespace lsrk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// stage indices below are 1-based, as printed
struct ZeroDenominator : Error {
  int stage;
  explicit ZeroDenominator(int i)
      : Error("zero denominator at stage " + std::to_string(i)), stage(i) {}
};

struct NoDForm : Error {
  int stage;
  explicit NoDForm(int i)
      : Error("no d-form: c" + std::to_string(i) + " equals c" + std::to_string(i + 1)), stage(i) {}
};

struct NotTwoNCompatible : Error {
  double residual;
  explicit NotTwoNCompatible(double r)
      : Error("tableau is not 2N-compatible (round-trip residual " + std::to_string(r) + ")"),
        residual(r) {}
};

struct OutOfRange : Error {
  using Error::Error;
};
struct WrongStageCount : Error {
  using Error::Error;
};
struct SingularJacobian : Error {
  using Error::Error;
};
struct SingularPoint : Error {
  using Error::Error;
};
struct DegenerateCase : Error {
  using Error::Error;
};
struct DegenerateFit : Error {
  using Error::Error;
};
struct UnknownScheme : Error {
  using Error::Error;
};

struct NoConvergence : Error {
  int iterations;
  NoConvergence(const std::string& what, int iters) : Error(what), iterations(iters) {}
};

struct NonFinite : Error {
  int step;
  explicit NonFinite(int n) : Error("non-finite state at step " + std::to_string(n)), step(n) {}
};

}  // namespace lsrk
