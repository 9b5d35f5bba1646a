#pragma once

#include "lsrk/scheme.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lsrk {

enum class Repr { Butcher, TwoN, DForm };

std::string reprName(Repr r);
Repr parseRepr(const std::string& s);

// A scheme as it travels through JSON. Decimal strings are kept exactly, so
// 30-digit catalog values survive into rational arithmetic.
struct SchemeDoc {
  std::string name;
  int s = 0;
  std::optional<int> order;
  Repr repr = Repr::TwoN;
  bool exact = false;  // all coefficients are the true values, not roundings
  std::vector<std::vector<Scalar>> a;  // butcher: s rows
  std::vector<Scalar> A, B, b, c, d;   // c, d have s+1 entries for dform
};

SchemeDoc parseSchemeJson(const std::string& text);
std::string toJsonString(const SchemeDoc& doc, int indent = 2);

namespace detail {
template <class T>
std::vector<T> as(const std::vector<Scalar>& v) {
  std::vector<T> out;
  for (const auto& x : v) out.push_back(x.as<T>());
  return out;
}
template <class T>
std::vector<Scalar> from(const std::vector<T>& v) {
  std::vector<Scalar> out;
  for (const auto& x : v) out.emplace_back(x);
  return out;
}
}  // namespace detail

template <class T>
ButcherTableau<T> docButcher(const SchemeDoc& doc) {
  if (doc.repr != Repr::Butcher) throw std::invalid_argument("scheme is not in butcher form");
  int s = doc.s;
  if (int(doc.a.size()) != s) throw WrongStageCount("butcher a must have s rows");
  Matrix<T> a(s);
  for (int i = 0; i < s; ++i) {
    if (int(doc.a[i].size()) > s) throw WrongStageCount("butcher row too long");
    for (int j = 0; j < int(doc.a[i].size()); ++j) a(i, j) = doc.a[i][j].as<T>();
  }
  return ButcherTableau<T>(std::move(a), detail::as<T>(doc.b), detail::as<T>(doc.c));
}

template <class T>
DForm<T> docDForm(const SchemeDoc& doc) {
  if (doc.repr != Repr::DForm) throw std::invalid_argument("scheme is not in d-form");
  return DForm<T>(detail::as<T>(doc.c), detail::as<T>(doc.d));
}

// any representation to 2N; tol is for the butcher round trip
template <class T>
TwoNScheme<T> asTwoN(const SchemeDoc& doc, double tol = defaultTol<T>()) {
  switch (doc.repr) {
    case Repr::TwoN:
      return TwoNScheme<T>(detail::as<T>(doc.A), detail::as<T>(doc.B), detail::as<T>(doc.c));
    case Repr::DForm:
      return dFormToTwoN(docDForm<T>(doc));
    case Repr::Butcher:
      return butcherToTwoN(docButcher<T>(doc), tol);
  }
  throw std::logic_error("unreachable");
}

template <class T>
ButcherTableau<T> asButcher(const SchemeDoc& doc) {
  if (doc.repr == Repr::Butcher) return docButcher<T>(doc);
  return twoNToButcher(asTwoN<T>(doc));
}

template <class T>
DForm<T> asDForm(const SchemeDoc& doc, double tol = defaultTol<T>()) {
  if (doc.repr == Repr::DForm) return docDForm<T>(doc);
  if (doc.repr == Repr::Butcher) return butcherToDForm(docButcher<T>(doc), tol);
  return twoNToDForm(asTwoN<T>(doc), tol);
}

template <class T>
SchemeDoc makeDoc(const std::string& name, const TwoNScheme<T>& sch, std::optional<int> order, bool exact) {
  SchemeDoc d{name, sch.stages(), order, Repr::TwoN, exact, {}, detail::from(sch.A), detail::from(sch.B), {},
              detail::from(sch.c), {}};
  return d;
}

template <class T>
SchemeDoc makeDoc(const std::string& name, const ButcherTableau<T>& tab, std::optional<int> order, bool exact) {
  SchemeDoc d{name, tab.stages(), order, Repr::Butcher, exact, {}, {}, {}, detail::from(tab.b),
              detail::from(tab.c), {}};
  for (int i = 0; i < tab.stages(); ++i) {
    std::vector<Scalar> row;
    for (int j = 0; j < tab.stages(); ++j) row.emplace_back(tab.a(i, j));
    d.a.push_back(std::move(row));
  }
  return d;
}

template <class T>
SchemeDoc makeDoc(const std::string& name, const DForm<T>& df, std::optional<int> order, bool exact) {
  return SchemeDoc{name, df.stages(), order, Repr::DForm, exact, {}, {}, {}, {},
                   detail::from(df.c), detail::from(df.d)};
}

}  // namespace lsrk
