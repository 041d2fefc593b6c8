#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace surfaut {

// Every imported or proved constraint the engine applies, with a fixed
// citation string.
enum class RuleId {
  kMiyaokaYau,
  kPetersDichotomy,
  kNoetherIntegrality,
  kCaiThreshold,
  kThmBDivisibility,
  kThmCBound,
};

inline constexpr std::size_t kRuleCount = 6;

inline constexpr std::array<RuleId, kRuleCount> kAllRules = {
    RuleId::kMiyaokaYau,       RuleId::kPetersDichotomy,  RuleId::kNoetherIntegrality,
    RuleId::kCaiThreshold,     RuleId::kThmBDivisibility, RuleId::kThmCBound,
};

std::string_view rule_name(RuleId id);
std::string_view rule_citation(RuleId id);
std::optional<RuleId> rule_from_name(std::string_view name);

// chi(O) at or above which the group order must be below kCaiMaxOrder + 1.
inline constexpr long kCaiChiThreshold = 31;
inline constexpr long kCaiMaxOrder = 4;

}  // namespace surfaut
