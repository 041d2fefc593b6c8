#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "surfaut/defect.hpp"
#include "surfaut/rational.hpp"

namespace surfaut {

// Chern numbers of a surface of general type; both must be positive.
class SurfaceInvariants {
 public:
  SurfaceInvariants(Integer c1sq, Integer c2);

  const Integer& c1sq() const { return c1sq_; }
  const Integer& c2() const { return c2_; }

  // (c1^2 - 2 c2) / 3; throws CongruenceError unless 3 | c1^2 - 2 c2.
  Integer signature() const;
  // (c1^2 + c2) / 12; throws CongruenceError unless 12 | c1^2 + c2.
  Integer chi_o() const;

 private:
  Integer c1sq_;
  Integer c2_;
};

struct Topology {
  Integer euler;
  Integer signature;
  Integer chi_o;
};

Topology chern_to_topology(const SurfaceInvariants& s);

// Rational Betti numbers of a closed oriented 4-manifold, optionally with the
// traces of a periodic self-map on H^1 and H^3.
struct BettiData {
  long b1 = 0;
  long b2 = 0;
  long b3 = 0;
  std::optional<Rational> trace1;
  std::optional<Rational> trace3;
};

// With both traces: the Lefschetz number 2 + b2 - tr1 - tr3 of a map acting
// trivially on H^2, i.e. its fixed-point count. Without traces: the Euler
// characteristic 2 - 2 b1 + b2, which bounds that count from below.
Integer lefschetz_lower_bound(const BettiData& b);

// |G| sign(M/G) - sign(M) - sum def; zero iff the data balance.
Rational g_signature_balance(const Integer& group_order, const Integer& sign_quotient,
                             const Integer& sign_total, std::span<const DefectValue> defects);

// Proof trace for excluding |g| = p^2 (p = 2, 3) on a surface with Euler
// number c2 when g acts trivially on H^2.
struct Part1Report {
  long p_small;
  long element_order;           // p^2
  Integer min_fixed_points;     // |X^g| >= c2 by the Lefschetz bound
  DefectValue defect_per_fixed_point;   // I_{p^2,-1}
  DefectValue defect_power_fixed_point; // I_{p,-1} >= 0 at points fixed by g^p only
  Rational lhs_coefficient;     // (p^2 - 1) / 3 multiplying c1^2 - 2 c2
  Integer required_c1sq;        // c1^2 >= p^2 c2
  Integer miyaoka_yau_cap;      // c1^2 <= 3 c2
  std::string_view cap_rule;
  bool contradiction;
};

Part1Report part1_contradiction(long p_small, const Integer& c2);

}  // namespace surfaut
