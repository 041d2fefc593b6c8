#include "surfaut/json_io.hpp"

#include "surfaut/error.hpp"

namespace surfaut::json {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) throw InputError(std::string("missing field '") + name + "'");
  return *it;
}

long to_long(const json& j, const char* name) { return to_int64(to_integer(j, name)); }

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kDisabled: return "disabled";
  }
  return "?";
}

const char* audit_status_name(AuditStatus s) {
  switch (s) {
    case AuditStatus::kPass: return "pass";
    case AuditStatus::kFail: return "fail";
    case AuditStatus::kSkipped: return "skipped";
  }
  return "?";
}

const char* claim2_status_name(Claim2Status s) {
  switch (s) {
    case Claim2Status::kHolds: return "holds";
    case Claim2Status::kMinimalityContradiction: return "minimality-contradiction";
    case Claim2Status::kViolation: return "violation";
    case Claim2Status::kNotApplicable: return "not-applicable";
  }
  return "?";
}

}  // namespace

json integer(const Integer& v) {
  if (fits_int64(v)) return to_int64(v);
  return to_string(v);
}

json rational(const Rational& v) { return v.str(); }

Integer to_integer(const json& j, const char* name) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()), 10)
                                  : Integer(std::to_string(j.get<std::int64_t>()), 10);
  }
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw InputError(std::string("field '") + name + "' must be an integer");
}

json approx(const ApproxDefect& d) {
  return {{"value", d.value.to_string(40)},
          {"bits", d.bits},
          {"error_bound", d.error_bound.to_string(6)}};
}

json topology(const Topology& t) {
  return {{"euler", integer(t.euler)}, {"signature", integer(t.signature)},
          {"chi_o", integer(t.chi_o)}};
}

json part1(const Part1Report& r) {
  return {{"p_small", r.p_small},
          {"element_order", r.element_order},
          {"min_fixed_points", integer(r.min_fixed_points)},
          {"defect_per_fixed_point", rational(r.defect_per_fixed_point.value())},
          {"defect_power_fixed_point", rational(r.defect_power_fixed_point.value())},
          {"lhs_coefficient", rational(r.lhs_coefficient)},
          {"required_c1sq", integer(r.required_c1sq)},
          {"miyaoka_yau_cap", integer(r.miyaoka_yau_cap)},
          {"cap_rule", std::string(r.cap_rule)},
          {"contradiction", r.contradiction}};
}

json group(const GroupProfile& g) {
  json j{{"spec", g.canonical()},
         {"order", integer(g.order())},
         {"min_generators", g.min_generators()}};
  if (const auto* e = std::get_if<ElementaryAbelian>(&g.structure())) {
    j["structure"] = "elementary-abelian";
    j["prime"] = integer(e->prime);
    j["rank"] = e->rank;
  } else if (const auto* a = std::get_if<Abelian>(&g.structure())) {
    j["structure"] = "abelian";
    json f = json::array();
    for (const auto& d : a->factors) f.push_back(integer(d));
    j["invariant_factors"] = f;
  } else {
    j["structure"] = "opaque";
  }
  j["exponent"] = g.exponent() ? integer(*g.exponent()) : json(nullptr);
  return j;
}

json covering(const CoveringData& c) {
  return {{"total_genus", integer(c.total_genus)},
          {"quotient_genus", integer(c.quotient_genus)},
          {"group_order", integer(c.group_order)}};
}

json case_report(const CaseReport& r) {
  json j{{"case", case_label(r.governing)},
         {"lhs", rational(r.governing_lhs)},
         {"satisfied", r.satisfied}};
  if (r.base) {
    j["base_case"] = case_label(*r.base);
    j["base_lhs"] = rational(*r.base_lhs);
    j["base_satisfied"] = *r.base_satisfied;
  }
  return j;
}

json claim2(const Claim2Verdict& v) {
  return {{"status", claim2_status_name(v.status)},
          {"c1_dot", integer(v.c1_dot)},
          {"adjunction_genus", v.adjunction_genus ? integer(*v.adjunction_genus) : json(nullptr)},
          {"explanation", v.explanation}};
}

json audit(const AuditReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"check", c.name},
                      {"curve", c.curve ? json(*c.curve) : json(nullptr)},
                      {"status", audit_status_name(c.status)},
                      {"detail", c.detail}});
  }
  return {{"verdict", r.pass ? "pass" : "fail"}, {"checks", checks}};
}

json constraint_report(const ConstraintReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"rule", std::string(rule_name(c.rule))},
                      {"status", check_status_name(c.status)},
                      {"witness", c.witness}});
  }
  return {{"verdict", r.feasible ? "feasible" : "infeasible"}, {"checks", checks}};
}

json census_table(const CensusTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    json surviving = json::array();
    for (const auto& v : r.surviving_c1sq) surviving.push_back(integer(v));
    rows.push_back({{"rank", r.rank},
                    {"group", group(r.group)},
                    {"free_genus_lower", integer(r.free_genus_lower)},
                    {"status", census_status_name(r.status)},
                    {"min_c1sq", integer(r.min_c1sq)},
                    {"modulus", integer(r.modulus)},
                    {"c1sq_cap", r.c1sq_cap ? integer(*r.c1sq_cap) : json(nullptr)},
                    {"surviving_c1sq", surviving},
                    {"witness_c1sq",
                     r.status == CensusStatus::kInfeasible ? json(nullptr) : integer(r.witness_c1sq)},
                    {"reason", r.reason}});
  }
  const auto rank = t.max_feasible_rank();
  const auto order = t.max_feasible_order();
  return {{"case", census_case_name(t.census_case)},
          {"family", family_name(t.family)},
          {"rows", rows},
          {"max_feasible_rank", rank ? json(*rank) : json(nullptr)},
          {"max_feasible_order", order ? integer(*order) : json(nullptr)}};
}

OrbifoldData orbifold_from_json(const json& j) {
  OrbifoldData d;
  d.h_order = to_integer(field(j, "h_order"), "h_order");
  d.quotient_genus = to_long(field(j, "quotient_genus"), "quotient_genus");
  d.degree = to_integer(field(j, "degree"), "degree");
  const json& marked = field(j, "marked");
  if (!marked.is_array()) throw InputError("field 'marked' must be an array");
  for (const auto& p : marked) {
    d.marked.emplace_back(to_long(field(p, "m"), "m"), to_long(field(p, "m1"), "m1"),
                          to_long(field(p, "m2"), "m2"));
  }
  if (d.h_order < 1) throw InputError("h_order must be >= 1");
  if (d.quotient_genus < 0) throw InputError("quotient_genus must be >= 0");
  return d;
}

json orbifold_to_json(const OrbifoldData& d) {
  json marked = json::array();
  for (const auto& p : d.marked) marked.push_back({{"m", p.m()}, {"m1", p.m1()}, {"m2", p.m2()}});
  return {{"h_order", integer(d.h_order)},
          {"quotient_genus", d.quotient_genus},
          {"marked", marked},
          {"degree", integer(d.degree)}};
}

CurveDatum curve_from_json(const json& j) {
  CurveDatum c;
  c.genus = to_integer(field(j, "genus"), "genus");
  c.square = to_integer(field(j, "square"), "square");
  c.multiplicity = to_long(field(j, "multiplicity"), "multiplicity");
  c.stabilizer_order = to_integer(field(j, "stabilizer_order"), "stabilizer_order");
  c.k_dot = to_integer(field(j, "k_dot"), "k_dot");
  if (c.genus < 0 || c.multiplicity < 1 || c.stabilizer_order < 1) {
    throw InputError("curve needs genus >= 0, multiplicity >= 1, stabilizer_order >= 1");
  }
  return c;
}

json curve_to_json(const CurveDatum& c) {
  return {{"genus", integer(c.genus)},
          {"square", integer(c.square)},
          {"multiplicity", c.multiplicity},
          {"stabilizer_order", integer(c.stabilizer_order)},
          {"k_dot", integer(c.k_dot)}};
}

std::vector<CurveDatum> curves_from_json(const json& j) {
  if (!j.is_array()) throw InputError("curve file must hold a JSON array of curves");
  std::vector<CurveDatum> out;
  for (const auto& c : j) out.push_back(curve_from_json(c));
  return out;
}

}  // namespace surfaut::json
