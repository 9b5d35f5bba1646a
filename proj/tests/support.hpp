#pragma once

#include "lsrk/catalog.hpp"
#include "lsrk/search.hpp"

#include <random>

namespace lsrk::testing {

inline Rational R(const char* s) { return parseRational(s); }

template <class T>
std::vector<T> vec(std::initializer_list<const char*> xs) {
  std::vector<T> v;
  for (const char* x : xs) v.push_back(parseAs<T>(x));
  return v;
}

template <class T>
ButcherTableau<T> rk4() {
  Matrix<T> a(4);
  a(1, 0) = T(1) / 2;
  a(2, 1) = T(1) / 2;
  a(3, 2) = T(1);
  return ButcherTableau<T>(a, {T(1) / 6, T(1) / 3, T(1) / 3, T(1) / 6}, {T(0), T(1) / 2, T(1) / 2, T(1)});
}

template <class T>
TwoNScheme<T> cat2N(const std::string& name) {
  return asTwoN<T>(catalogGet(name).scheme, is_exact_v<T> ? 0.0 : 1e-9);
}

template <class T>
ButcherTableau<T> catTab(const std::string& name) {
  return asButcher<T>(catalogGet(name).scheme);
}

template <class T>
DForm<T> catDForm(const std::string& name) {
  return asDForm<T>(catalogGet(name).scheme, is_exact_v<T> ? 0.0 : 1e-9);
}

// random d-form with small rationals; adjacent nodes distinct, d nonzero
inline DForm<Rational> randomDForm(std::mt19937& rng, int s) {
  std::uniform_int_distribution<int> num(-20, 40), den(1, 13), dn(-30, 30);
  for (;;) {
    std::vector<Rational> c{0}, d{1};
    for (int i = 1; i < s; ++i) {
      c.push_back(Rational(num(rng), den(rng)));
      d.push_back(Rational(dn(rng), den(rng)));
    }
    c.push_back(1);
    d.push_back(1);
    bool ok = true;
    for (int i = 0; i < s; ++i)
      if (c[i] == c[i + 1] || d[i] == 0) ok = false;
    if (ok) return DForm<Rational>(c, d);
  }
}

}  // namespace lsrk::testing
