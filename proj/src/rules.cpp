#include "surfaut/rules.hpp"

namespace surfaut {

namespace {

struct RuleEntry {
  RuleId id;
  std::string_view name;
  std::string_view citation;
};

constexpr std::array<RuleEntry, kRuleCount> kRuleEntries = {{
    {RuleId::kMiyaokaYau, "miyaoka_yau",
     "Miyaoka-Yau inequality: c1^2 <= 3 c2 for surfaces of general type"},
    {RuleId::kPetersDichotomy, "peters_dichotomy",
     "Peters: a nontrivial cohomologically trivial automorphism group forces c1^2 = 2 c2 "
     "with a 2-group or c1^2 = 3 c2 with a 3-group; every element has order 2 or 3, so the "
     "2c2 group is elementary abelian"},
    {RuleId::kNoetherIntegrality, "noether_integrality",
     "Noether formula: chi(O) = (c1^2 + c2) / 12 is an integer"},
    {RuleId::kCaiThreshold, "cai_threshold",
     "Cai: if |K| has no base points or fixed components and chi(O) >= 31 then |G| < 5"},
    {RuleId::kThmBDivisibility, "thm_b_divisibility",
     "c1^2 is divisible by |G| (invariant canonical curves of genus = 1 mod |G|)"},
    {RuleId::kThmCBound, "thm_c_bound",
     "c1^2 >= max(free genus of G - 1, |G|), free genus bounded below by "
     "([(r+1)/2] - 1)|G| + 1"},
}};

}  // namespace

std::string_view rule_name(RuleId id) { return kRuleEntries[static_cast<std::size_t>(id)].name; }

std::string_view rule_citation(RuleId id) {
  return kRuleEntries[static_cast<std::size_t>(id)].citation;
}

std::optional<RuleId> rule_from_name(std::string_view name) {
  for (const auto& e : kRuleEntries) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

}  // namespace surfaut
