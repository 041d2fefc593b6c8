#pragma once

#include <vector>

#include <json.hpp>

#include "surfaut/constraints.hpp"
#include "surfaut/defect.hpp"
#include "surfaut/equivindex.hpp"
#include "surfaut/gsignature.hpp"

namespace surfaut::json {

using nlohmann::json;

// Integers are JSON numbers when they fit in 64 bits, decimal strings
// otherwise. Rationals are always strings, "a" or "a/b".
json integer(const Integer& v);
json rational(const Rational& v);
Integer to_integer(const json& j, const char* field);

json approx(const ApproxDefect& d);
json topology(const Topology& t);
json part1(const Part1Report& r);
json group(const GroupProfile& g);
json covering(const CoveringData& c);
json case_report(const CaseReport& r);
json claim2(const Claim2Verdict& v);
json audit(const AuditReport& r);
json constraint_report(const ConstraintReport& r);
json census_table(const CensusTable& t);

// Field names follow the C++ types: h_order, quotient_genus, marked[{m, m1,
// m2}], degree; CurveDatum: genus, square, multiplicity, stabilizer_order,
// k_dot.
OrbifoldData orbifold_from_json(const json& j);
json orbifold_to_json(const OrbifoldData& d);
CurveDatum curve_from_json(const json& j);
json curve_to_json(const CurveDatum& c);
std::vector<CurveDatum> curves_from_json(const json& j);

}  // namespace surfaut::json
