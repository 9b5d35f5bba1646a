#include "lsrk/catalog.hpp"

#include <algorithm>

namespace lsrk {

namespace {

struct Raw {
  const char* name;
  const char* repr;
  std::vector<const char*> A, B, c, d;
  const char* notes;
};

// exact rationals
const Raw kRational[] = {
    {"(4,3)_1", "2n", {"0", "-5/9", "-1", "-33/25"}, {"1/9", "3/4", "2/5", "5/4"}, {"0", "1/9", "4/9", "6/9"}, {}, ""},
    {"(4,3)_2", "2n", {"0", "-11/15", "-5/3", "-1"}, {"1/3", "5/6", "3/5", "1/4"}, {"0", "3/9", "5/9", "8/9"}, {}, ""},
    {"(5,4)_5", "2n", {"0", "-1", "-1", "-11", "1/10"}, {"1/2", "2/3", "-1/2", "-1/10", "1/6"},
     {"0", "1/2", "1/2", "0", "1"}, {}, "no d-form (c2 = c3, c5 = 1)"},
    {"(6,4)_4", "2n", {"0", "-11/32", "-8/7", "-2", "-1/2", "-7/8"}, {"1/8", "4/21", "1", "1/2", "1/6", "4/11"},
     {"0", "1/8", "1/4", "1/2", "3/4", "7/8"}, {}, ""},
    {"(6,4)_5", "2n", {"0", "-21/32", "-8/11", "-2/3", "-3/2", "-11/8"}, {"1/8", "4/11", "1/3", "1/2", "1/2", "4/21"},
     {"0", "1/8", "1/4", "1/2", "3/4", "7/8"}, {}, ""},
    {"(6,4)_6", "2n", {"0", "-1", "-1", "-1/2", "-2", "-1"}, {"1/6", "3/8", "1/3", "2/3", "3/8", "1/6"},
     {"0", "1/6", "1/6", "1/2", "5/6", "5/6"}, {}, "no d-form (c2 = c3)"},
    {"(6,4)_7", "2n", {"0", "-1", "-1", "-1", "-1", "-1"}, {"1/2", "2/3", "-1/2", "-1/12", "1", "1/6"},
     {"0", "1/2", "1/2", "0", "0", "1"}, {}, "no d-form (c2 = c3); a21 = 1/2"},
    {"(6,4)_8", "2n", {"0", "-1", "-1", "-1", "-1", "-1"}, {"1", "-1/36", "-1/2", "2/3", "1/2", "7/36"},
     {"0", "1", "1", "1/2", "1/2", "1"}, {}, "no d-form (c2 = c3)"},
};

// 13-digit decimals of the four (5,4) solutions with tallTree(4) = 1/200
const Raw kDecimal[] = {
    {"CK54_S1", "2n", {"0", "-0.4812317431372", "-1.049562606709", "-1.602529574275", "-1.778267193916"},
     {"0.097618354692056", "0.4122532929155", "0.4402169639311", "1.426311463224", "0.1978760537318"},
     {"0", "0.097618354692056", "0.3114822768438", "0.5120100121666", "0.8971360011895"}, {}, "solution 1"},
    {"CK54_S2", "2n", {"0", "-0.4801594388478", "-1.4042471952", "-2.016477077503", "-1.056444269767"},
     {"0.1028639988105", "0.7408540575767", "0.7426530946684", "0.4694937902358", "0.1881733382888"},
     {"0", "0.1028639988105", "0.487989987833", "0.6885177231562", "0.9023816453077"}, {}, "solution 2"},
    {"CK54_S3", "2n", {"0", "-0.4178904745", "-1.192151694643", "-1.697784692471", "-1.514183444257"},
     {"0.1496590219993", "0.3792103129999", "0.8229550293869", "0.6994504559488", "0.1530572479681"},
     {"0", "0.1496590219993", "0.3704009573644", "0.6222557631345", "0.9582821306748"}, {}, "solution 3"},
    {"CK54_S4", "2n", {"0", "-0.7274361725534", "-1.906288083353", "-1.444507585809", "-1.365489400418"},
     {"0.041717869324523", "1.232835518522", "0.5242444514624", "0.7212913223969", "0.2570977031703"},
     {"0", "0.041717869324523", "0.377744236865", "0.6295990426348", "0.8503409780005"}, {}, "solution 4"},
    {"(6,4)_2", "2n",
     {"0", "-6.031817048888810491391377264767e-01", "-1.363368319594623838259959855767e+00",
      "-2.967773103326277497583509014746e-01", "-6.263264022440050754531253706180e-01",
      "-1.314148538206011636475086658292e+00"},
     {"1.709928027134245603242499940137e-01", "4.823996417074247639531967922484e-01",
      "2.997495407007149877239893157502e-01", "1.592788329289030209205971711461e-01",
      "4.170565624503425105376525782607e-01", "4.309095745334582935148984815673e-01"},
     {"0", "1.709928027134245603242499940137e-01", "3.624178060979794860791199041947e-01", "0.5",
      "6.375821939020205139208800958053e-01", "8.290071972865754396757500059863e-01"},
     {}, "self-reflected, 31 digits"},
    {"(6,4)_3", "2n",
     {"0", "-6.416708334845571026342325707722e-01", "-2.327050967547145814787059991623e+00",
      "-2.279146815287159770076873625409e+00", "-1.342061812908205877178026117183e+00",
      "-3.862002622951114837161553551155e+00"},
     {"3.788384854424563341372856700833e-02", "2.648805722810717308543538775008e-01",
      "2.210064599000365587870662788315e+00", "5.910022949231203114708031548267e-01",
      "5.712583097229739358762356434599e-01", "1.057235974192264216640141659307e-01"},
     {"0", "3.788384854424563341372856700833e-02", "1.327982832358555939494038565940e-01", "0.5",
      "8.672017167641444060505961434060e-01", "9.621161514557543665862714329917e-01"},
     {}, "self-reflected, 31 digits"},
};

const Raw kRadical[] = {
#include "catalog_radicals.inc"
};

std::vector<Scalar> scalars(const std::vector<const char*>& v) {
  std::vector<Scalar> out;
  for (const char* x : v) out.emplace_back(parseRational(x));
  return out;
}

CatalogEntry build(const Raw& r, bool exact, const char* provenance) {
  CatalogEntry e;
  e.name = r.name;
  e.exact = exact;
  e.provenance = provenance;
  e.notes = r.notes;
  e.claimedOrder = std::string(r.name).rfind("(4,3)", 0) == 0 ? 3 : 4;
  SchemeDoc& d = e.scheme;
  d.name = r.name;
  d.repr = parseRepr(r.repr);
  d.exact = exact;
  d.order = e.claimedOrder;
  d.A = scalars(r.A);
  d.B = scalars(r.B);
  d.c = scalars(r.c);
  d.d = scalars(r.d);
  d.s = d.repr == Repr::DForm ? int(d.c.size()) - 1 : int(d.c.size());
  return e;
}

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> all = [] {
    std::vector<CatalogEntry> v;
    for (const auto& r : kRational) v.push_back(build(r, true, "exact rationals"));
    for (const auto& r : kDecimal) v.push_back(build(r, false, "published decimals"));
    for (const auto& r : kRadical) v.push_back(build(r, false, "radical closed form, 36 digits"));
    auto key = [](const std::string& n) {
      // (4,3) < CK54 < (5,4) < (6,4) < (8,4), then by suffix
      if (n.rfind("CK54", 0) == 0) return "(5,3)" + n;
      return n;
    };
    std::sort(v.begin(), v.end(), [&](const auto& x, const auto& y) { return key(x.name) < key(y.name); });
    return v;
  }();
  return all;
}

}  // namespace

std::vector<std::string> catalogList() {
  std::vector<std::string> names;
  for (const auto& e : entries()) names.push_back(e.name);
  return names;
}

const CatalogEntry& catalogGet(const std::string& name) {
  for (const auto& e : entries())
    if (e.name == name) return e;
  throw UnknownScheme("unknown scheme '" + name + "'");
}

std::vector<std::pair<std::string, std::string>> reflectionPairs() {
  return {{"(4,3)_1", "(4,3)_2"}, {"CK54_S1", "CK54_S2"}, {"CK54_S3", "CK54_S4"}, {"(5,4)_1", "(5,4)_2"},
          {"(5,4)_3", "(5,4)_4"}, {"(6,4)_4", "(6,4)_5"}, {"(6,4)_1", "(6,4)_1"}, {"(6,4)_2", "(6,4)_2"},
          {"(6,4)_3", "(6,4)_3"}, {"(8,4)_1", "(8,4)_1"}};
}

}  // namespace lsrk
