#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "surfaut/covering.hpp"
#include "surfaut/gsignature.hpp"
#include "surfaut/rules.hpp"

namespace surfaut {

class RuleTable {
 public:
  // All rules enabled.
  RuleTable();

  bool enabled(RuleId id) const { return enabled_[static_cast<std::size_t>(id)]; }
  RuleTable& set_enabled(RuleId id, bool on) {
    enabled_[static_cast<std::size_t>(id)] = on;
    return *this;
  }
  std::vector<RuleId> enabled_rules() const;

 private:
  std::array<bool, kRuleCount> enabled_;
};

enum class CheckStatus { kPass, kFail, kDisabled };

struct RuleCheck {
  RuleId rule;
  CheckStatus status;
  std::string witness;
};

// `feasible` means the candidate passes every known obstruction; it never
// asserts that a surface with this data exists.
struct ConstraintReport {
  bool feasible;
  std::vector<RuleCheck> checks;  // in kAllRules order
};

// Evaluates the enabled rules in the order given (kAllRules by default).
// The verdict does not depend on that order.
ConstraintReport check_candidate(const SurfaceInvariants& s, const GroupProfile& g,
                                 const RuleTable& rules);
ConstraintReport check_candidate(const SurfaceInvariants& s, const GroupProfile& g,
                                 const RuleTable& rules, const std::vector<RuleId>& order);

enum class CensusCase { kTwoC2, kThreeC2 };

enum class GroupFamily {
  kElementaryAbelian2,  // (Z/2)^rank
  kElementaryAbelian3,  // (Z/3)^rank
  kExponentThree,       // order 3^rank, exponent 3, fewest possible generators
};

std::string census_case_name(CensusCase c);
std::string family_name(GroupFamily f);
std::optional<CensusCase> census_case_from_name(std::string_view name);
std::optional<GroupFamily> family_from_name(std::string_view name);
GroupFamily default_family(CensusCase c);

// Fewest generators of a group of exponent 3 and order 3^log3_order. Every
// such group on r generators is a quotient of the free Burnside group B(r, 3),
// of order 3^(r + C(r,2) + C(r,3)), and p-groups have quotients of every
// intermediate order.
long exponent_three_min_generators(long log3_order);

// The group the census uses for a family at a given rank.
GroupProfile family_group(GroupFamily f, long rank);

enum class CensusStatus { kFeasibleUnbounded, kFeasible, kInfeasible };

std::string census_status_name(CensusStatus s);

struct CensusRow {
  long rank;
  GroupProfile group;
  Integer free_genus_lower;
  CensusStatus status;
  Integer min_c1sq;                 // from thm_c (1 when disabled)
  Integer modulus;                  // every admissible c1^2 is a multiple
  std::optional<Integer> c1sq_cap;  // present iff chi(O) is bounded
  std::vector<Integer> surviving_c1sq;  // all survivors when bounded
  Integer witness_c1sq;             // smallest survivor (feasible rows)
  std::string reason;
};

struct CensusTable {
  CensusCase census_case;
  GroupFamily family;
  std::vector<CensusRow> rows;  // ordered by rank

  std::optional<long> max_feasible_rank() const;
  std::optional<Integer> max_feasible_order() const;
};

// Ranks 1..max_rank. Rows may be evaluated on up to `threads` threads; the
// table is identical for every thread count.
CensusTable census(CensusCase c, GroupFamily family, long max_rank, const RuleTable& rules,
                   unsigned threads = 1);

// Text rendering with aligned columns.
std::string render_census_text(const CensusTable& t);

}  // namespace surfaut
