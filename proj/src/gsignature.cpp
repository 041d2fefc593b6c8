#include "surfaut/gsignature.hpp"

#include <string>

#include "surfaut/error.hpp"
#include "surfaut/rules.hpp"

namespace surfaut {

namespace {

bool divides(const Integer& d, const Integer& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

}  // namespace

SurfaceInvariants::SurfaceInvariants(Integer c1sq, Integer c2)
    : c1sq_(std::move(c1sq)), c2_(std::move(c2)) {
  if (c1sq_ <= 0 || c2_ <= 0) {
    throw InputError("surface of general type needs c1^2 > 0 and c2 > 0, got c1^2 = " +
                     to_string(c1sq_) + ", c2 = " + to_string(c2_));
  }
}

Integer SurfaceInvariants::signature() const {
  const Integer n = c1sq_ - 2 * c2_;
  if (!divides(Integer(3), n)) {
    throw CongruenceError("3 does not divide c1^2 - 2 c2 = " + to_string(n));
  }
  return Integer(n / 3);
}

Integer SurfaceInvariants::chi_o() const {
  const Integer n = c1sq_ + c2_;
  if (!divides(Integer(12), n)) {
    throw CongruenceError("12 does not divide c1^2 + c2 = " + to_string(n));
  }
  return Integer(n / 12);
}

Topology chern_to_topology(const SurfaceInvariants& s) {
  return Topology{s.c2(), s.signature(), s.chi_o()};
}

Integer lefschetz_lower_bound(const BettiData& b) {
  if (b.b1 < 0 || b.b2 < 0 || b.b3 < 0) throw InputError("Betti numbers must be nonnegative");
  auto check_trace = [](const std::optional<Rational>& t, long betti, const char* name) {
    if (t && abs(t->raw()) > betti) {
      throw InputError(std::string("|") + name + "| = |" + t->str() + "| exceeds b = " +
                       std::to_string(betti));
    }
  };
  check_trace(b.trace1, b.b1, "trace1");
  check_trace(b.trace3, b.b3, "trace3");
  if (b.trace1.has_value() != b.trace3.has_value()) {
    throw InputError("trace1 and trace3 must be given together");
  }

  if (!b.trace1) {
    if (b.b1 != b.b3) {
      throw InputError("Poincare duality requires b1 = b3, got " + std::to_string(b.b1) +
                       " and " + std::to_string(b.b3));
    }
    return Integer(2 - 2 * b.b1 + b.b2);
  }
  const Rational n = Rational(2 + b.b2) - *b.trace1 - *b.trace3;
  if (!n.is_integer()) throw InputError("fixed-point count " + n.str() + " is not an integer");
  return n.numerator();
}

Rational g_signature_balance(const Integer& group_order, const Integer& sign_quotient,
                             const Integer& sign_total, std::span<const DefectValue> defects) {
  if (group_order < 1) throw InputError("group order must be >= 1");
  Rational residual = Rational(Integer(group_order * sign_quotient)) - Rational(sign_total);
  for (const auto& d : defects) residual -= d.value();
  return residual;
}

Part1Report part1_contradiction(long p_small, const Integer& c2) {
  if (p_small != 2 && p_small != 3) {
    throw InputError("part1 expects p in {2, 3}, got " + std::to_string(p_small));
  }
  if (c2 < 1) throw InputError("part1 expects c2 >= 1, got " + to_string(c2));

  const long order = p_small * p_small;
  const DefectValue at_fixed = defect_closed(order, -1);
  if (at_fixed != defect_special_linear(order)) {
    throw std::logic_error("closed defect disagrees with (p-1)(p-2)/3 at p = " +
                           std::to_string(order));
  }
  const DefectValue at_power = defect_closed(p_small, -1);
  if (at_power.value() < Rational(0)) {
    throw std::logic_error("negative defect at q = -1");
  }

  // (|G| - 1) sign(X) = sum of defects >= |X^g| I_{p^2,-1} >= c2 I_{p^2,-1},
  // with sign(X) = (c1^2 - 2 c2) / 3. Solve for c1^2.
  const Rational coeff(Integer(order - 1), Integer(3));
  const Integer min_fixed = c2;
  const Rational required =
      Rational(Integer(2 * c2)) + at_fixed.value() * Rational(min_fixed) / coeff;
  if (!required.is_integer()) throw std::logic_error("non-integral c1^2 bound");

  Part1Report r{p_small,
                order,
                min_fixed,
                at_fixed,
                at_power,
                coeff,
                required.numerator(),
                Integer(3 * c2),
                rule_name(RuleId::kMiyaokaYau),
                false};
  r.contradiction = r.required_c1sq > r.miyaoka_yau_cap;
  return r;
}

}  // namespace surfaut
