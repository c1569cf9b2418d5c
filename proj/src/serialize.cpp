// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#include "knotforge/serialize.hpp"

#include "knotforge/error.hpp"

namespace knotforge {

namespace {

Int int_from(const Json& j, const char* what) {
  if (!j.is_string()) throw ValidationError(std::string(what) + ": coefficient must be a decimal string");
  const std::string& s = j.get_ref<const std::string&>();
  Int out;
  if (s.empty() || out.set_str(s, 10) != 0)
    throw ValidationError(std::string(what) + ": '" + s + "' is not a decimal integer");
  return out;
}

int exp_from(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ValidationError(std::string(what) + ": exponent must be an integer");
  return j.get<int>();
}

const Json& array_of(const Json& j, const char* what, std::size_t size = 0) {
  if (!j.is_array() || (size && j.size() != size))
    throw ValidationError(std::string(what) + ": expected " +
                          (size ? "an array of length " + std::to_string(size) : "an array"));
  return j;
}

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(std::string(what) + ": missing field '" + key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const LaurentQA& p) {
  Json out = Json::array();
  for (const auto& [qe, ae, c] : p.triples()) out.push_back({qe, ae, c.get_str()});
  return out;
}

LaurentQA laurent_qa_from_json(const Json& j) {
  std::vector<std::tuple<int, int, Int>> triples;
  for (const Json& t : array_of(j, "polynomial")) {
    array_of(t, "polynomial term", 3);
    triples.emplace_back(exp_from(t[0], "polynomial"), exp_from(t[1], "polynomial"),
                         int_from(t[2], "polynomial"));
  }
  return LaurentQA::from_triples(triples);
}

Json to_json(const LaurentQ& p) { return to_json(LaurentQA(p)); }

LaurentQ laurent_q_from_json(const Json& j) {
  const LaurentQA p = laurent_qa_from_json(j);
  if (p.is_zero()) return {};
  if (p.by_a_exponent().size() != 1 || p.by_a_exponent().begin()->first != 0)
    throw ValidationError("polynomial in q: A exponents must be 0");
  return p.by_a_exponent().begin()->second;
}

Json to_json(const CycInt& c) {
  Json out = Json::array();
  for (const Int& x : c.residue()) out.push_back(x.get_str());
  return out;
}

Json to_json(const CycLaurentA& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e, to_json(c)});
  return {{"order", p.order()}, {"terms", terms}};
}

CycLaurentA cyc_laurent_from_json(const Json& j) {
  const Json& order_j = field(j, "order", "cyclotomic polynomial");
  if (!order_j.is_number_integer() || order_j.get<int>() < 1)
    throw ValidationError("cyclotomic polynomial: order must be a positive integer");
  const int order = order_j.get<int>();
  const std::size_t phi = static_cast<std::size_t>(euler_phi(order));
  CycLaurentA out(order);
  for (const Json& t : array_of(field(j, "terms", "cyclotomic polynomial"), "terms")) {
    array_of(t, "cyclotomic term", 2);
    const Json& cs = array_of(t[1], "cyclotomic coefficient", phi);
    IntPoly poly;
    for (const Json& c : cs) poly.push_back(int_from(c, "cyclotomic coefficient"));
    out.add_term(exp_from(t[0], "cyclotomic term"), CycInt::from_poly(order, poly));
  }
  return out;
}

Json to_json(const CycSeries& s) {
  return {{"r", s.r()}, {"precision", s.precision()}, {"value", to_json(s.value())}};
}

Json to_json(const AlexanderPoly& a) {
  Json terms = Json::array();
  for (const auto& [e, c] : a.coeffs()) terms.push_back({e, c.get_str()});
  return {{"terms", terms}};
}

AlexanderPoly alexander_from_json(const Json& j) {
  std::map<int, Int> coeffs;
  for (const Json& t : array_of(field(j, "terms", "alexander polynomial"), "terms")) {
    array_of(t, "alexander term", 2);
    coeffs[exp_from(t[0], "alexander term")] += int_from(t[1], "alexander term");
  }
  return AlexanderPoly(std::move(coeffs));
}

Json to_json(const RecurrencePoly& p) {
  Json terms = Json::array();
  for (const auto& [key, c] : p.terms()) terms.push_back({key.first, key.second, to_json(c)});
  return {{"terms", terms}};
}

RecurrencePoly recurrence_from_json(const Json& j) {
  std::map<RecurrencePoly::Key, LaurentQ> terms;
  for (const Json& t : array_of(field(j, "terms", "recurrence"), "terms")) {
    array_of(t, "recurrence term", 3);
    const int qj = exp_from(t[0], "recurrence term");
    const int ek = exp_from(t[1], "recurrence term");
    if (qj < 0 || ek < 0) throw ValidationError("recurrence term: degrees must be >= 0");
    terms[{qj, ek}] += laurent_q_from_json(t[2]);
  }
  try {
    return RecurrencePoly(std::move(terms));
  } catch (const ArgumentError& e) {
    throw ValidationError(e.what());
  }
}

Json to_json(const RationalSeriesH& s) {
  Json out = Json::array();
  for (const Rational& c : s.coefficients()) out.push_back(c.get_str());
  return out;
}

Json to_json(const FactorizationReport& rep) {
  Json out = {{"r", rep.r}, {"B", rep.bound}, {"m", rep.m}, {"holds", rep.holds}};
  if (!rep.holds) out["witness"] = to_json(rep.witness);
  return out;
}

Json to_json(const ConsistencyReport& rep) {
  return {{"r", rep.r},
          {"n", rep.n},
          {"holds", rep.holds},
          {"ado_value", to_json(rep.ado_value)},
          {"jones_value", to_json(rep.jones_value)}};
}

Json result_json(const ResultMeta& meta, Json value) {
  Json out = {{"knot", meta.knot},
              {"operation", meta.operation},
              {"parameters", meta.parameters},
              {"framing", meta.framing}};
  if (meta.certified_order) out["certified_order"] = *meta.certified_order;
  out["value"] = std::move(value);
  return out;
}

}  // namespace knotforge
