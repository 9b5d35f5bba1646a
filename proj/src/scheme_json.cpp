#include "lsrk/scheme_json.hpp"

#include <json.hpp>

namespace lsrk {

using json = nlohmann::ordered_json;

std::string reprName(Repr r) {
  switch (r) {
    case Repr::Butcher:
      return "butcher";
    case Repr::TwoN:
      return "2n";
    case Repr::DForm:
      return "dform";
  }
  return "?";
}

Repr parseRepr(const std::string& s) {
  if (s == "butcher") return Repr::Butcher;
  if (s == "2n" || s == "2N") return Repr::TwoN;
  if (s == "dform") return Repr::DForm;
  throw std::invalid_argument("unknown repr '" + s + "'");
}

namespace {

Scalar scalarOf(const json& v) {
  if (v.is_string()) return Scalar(parseRational(v.get<std::string>()));
  if (v.is_number_integer()) return Scalar(Rational(v.get<long long>()));
  if (v.is_number()) return Scalar(v.get<double>());
  throw std::invalid_argument("expected a number or numeric string, got " + v.dump());
}

std::vector<Scalar> vectorOf(const json& j, const char* key) {
  std::vector<Scalar> out;
  if (!j.contains(key)) return out;
  const auto& arr = j.at(key);
  if (!arr.is_array()) throw std::invalid_argument(std::string("'") + key + "' must be an array");
  for (const auto& v : arr) out.push_back(scalarOf(v));
  return out;
}

// finite decimal expansion when the denominator is 2^a 5^b
std::optional<std::string> decimalString(const Rational& x) {
  using boost::multiprecision::mpz_int;
  mpz_int den = denominator(x);
  unsigned a = 0, b = 0;
  while (den % 2 == 0) den /= 2, ++a;
  while (den % 5 == 0) den /= 5, ++b;
  if (den != 1) return std::nullopt;
  unsigned k = std::max(a, b);
  mpz_int scaled = numerator(x) * boost::multiprecision::pow(mpz_int(10), k) / denominator(x);
  bool neg = scaled < 0;
  std::string digits = (neg ? mpz_int(-scaled) : scaled).str();
  if (k > 0) {
    if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
    digits.insert(digits.size() - k, ".");
  }
  return (neg ? "-" : "") + digits;
}

json toJson(const std::vector<Scalar>& v, bool exact) {
  json arr = json::array();
  for (const auto& x : v) {
    std::optional<std::string> dec;
    if (!exact && x.isExact()) dec = decimalString(x.toRational());
    arr.push_back(dec ? *dec : x.str());
  }
  return arr;
}

void need(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("scheme json: " + what);
}

}  // namespace

SchemeDoc parseSchemeJson(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad json: ") + e.what());
  }
  need(j.is_object(), "top level must be an object");
  SchemeDoc doc;
  doc.name = j.value("name", std::string("unnamed"));
  need(j.contains("repr"), "missing 'repr'");
  doc.repr = parseRepr(j.at("repr").get<std::string>());
  doc.exact = j.value("exact", false);
  if (j.contains("order") && !j.at("order").is_null()) doc.order = j.at("order").get<int>();
  doc.c = vectorOf(j, "c");
  doc.A = vectorOf(j, "A");
  doc.B = vectorOf(j, "B");
  doc.b = vectorOf(j, "b");
  doc.d = vectorOf(j, "d");
  if (j.contains("a")) {
    need(j.at("a").is_array(), "'a' must be an array of rows");
    for (const auto& row : j.at("a")) {
      std::vector<Scalar> r;
      need(row.is_array(), "'a' rows must be arrays");
      for (const auto& v : row) r.push_back(scalarOf(v));
      doc.a.push_back(std::move(r));
    }
  }
  int sFromC = doc.repr == Repr::DForm ? int(doc.c.size()) - 1 : int(doc.c.size());
  doc.s = j.value("s", sFromC);
  need(doc.s >= 1 && doc.s == sFromC, "'s' disagrees with the length of 'c'");
  switch (doc.repr) {
    case Repr::TwoN:
      need(int(doc.A.size()) == doc.s && int(doc.B.size()) == doc.s, "2n needs A and B of length s");
      break;
    case Repr::Butcher:
      need(int(doc.b.size()) == doc.s && int(doc.a.size()) == doc.s, "butcher needs a (s rows) and b");
      break;
    case Repr::DForm:
      need(doc.d.size() == doc.c.size(), "dform needs d with s+1 entries");
      break;
  }
  return doc;
}

std::string toJsonString(const SchemeDoc& doc, int indent) {
  json j;
  j["name"] = doc.name;
  j["s"] = doc.s;
  j["order"] = doc.order ? json(*doc.order) : json(nullptr);
  j["repr"] = reprName(doc.repr);
  if (doc.repr == Repr::Butcher) {
    json rows = json::array();
    for (const auto& r : doc.a) rows.push_back(toJson(r, doc.exact));
    j["a"] = rows;
    j["b"] = toJson(doc.b, doc.exact);
  }
  if (doc.repr == Repr::TwoN) {
    j["A"] = toJson(doc.A, doc.exact);
    j["B"] = toJson(doc.B, doc.exact);
  }
  j["c"] = toJson(doc.c, doc.exact);
  if (doc.repr == Repr::DForm) j["d"] = toJson(doc.d, doc.exact);
  j["exact"] = doc.exact;
  return j.dump(indent);
}

}  // namespace lsrk
