#include "surfaut/constraints.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <thread>

#include "surfaut/error.hpp"

namespace surfaut {

namespace {

bool divides(const Integer& d, const Integer& n) {
  return d != 0 && mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

std::string join_factors(const GroupProfile& g) { return g.canonical(); }

RuleCheck evaluate(RuleId id, const SurfaceInvariants& s, const GroupProfile& g) {
  const Integer& c1sq = s.c1sq();
  const Integer& c2 = s.c2();
  switch (id) {
    case RuleId::kMiyaokaYau: {
      const bool ok = c1sq <= 3 * c2;
      return {id, ok ? CheckStatus::kPass : CheckStatus::kFail,
              "c1^2 = " + to_string(c1sq) + (ok ? " <= " : " > ") + "3 c2 = " +
                  to_string(Integer(3 * c2))};
    }
    case RuleId::kPetersDichotomy: {
      Integer prime;
      std::string which;
      if (c1sq == 2 * c2) {
        prime = 2;
        which = "c1^2 = 2 c2";
      } else if (c1sq == 3 * c2) {
        prime = 3;
        which = "c1^2 = 3 c2";
      } else {
        return {id, CheckStatus::kFail,
                "c1^2 = " + to_string(c1sq) + " is neither 2 c2 nor 3 c2 (c2 = " + to_string(c2) +
                    ")"};
      }
      if (!g.is_p_group(prime)) {
        return {id, CheckStatus::kFail,
                which + " needs a " + to_string(prime) + "-group, |G| = " + to_string(g.order())};
      }
      if (g.exponent() && *g.exponent() != prime) {
        return {id, CheckStatus::kFail,
                which + ": " + join_factors(g) + " has an element of order " +
                    to_string(*g.exponent()) + ", but every element must have order " +
                    to_string(prime)};
      }
      std::string w = which + ", " + join_factors(g) + " is a " + to_string(prime) + "-group";
      if (g.exponent()) {
        w += " of exponent " + to_string(prime);
        if (prime == 2) w += " (elementary abelian)";
      } else {
        w += "; exponent not supplied, order condition only";
      }
      return {id, CheckStatus::kPass, w};
    }
    case RuleId::kNoetherIntegrality: {
      const Integer n = c1sq + c2;
      const bool ok = divides(Integer(12), n);
      return {id, ok ? CheckStatus::kPass : CheckStatus::kFail,
              "c1^2 + c2 = " + to_string(n) + (ok ? " = 12 chi, chi = " + to_string(Integer(n / 12))
                                                  : " is not divisible by 12")};
    }
    case RuleId::kCaiThreshold: {
      const Rational chi(Integer(c1sq + c2), Integer(12));
      if (chi < Rational(kCaiChiThreshold)) {
        return {id, CheckStatus::kPass,
                "chi = " + chi.str() + " < " + std::to_string(kCaiChiThreshold) + ", vacuous"};
      }
      const bool ok = g.order() <= kCaiMaxOrder;
      return {id, ok ? CheckStatus::kPass : CheckStatus::kFail,
              "chi = " + chi.str() + " >= " + std::to_string(kCaiChiThreshold) + " needs |G| <= " +
                  std::to_string(kCaiMaxOrder) + ", |G| = " + to_string(g.order())};
    }
    case RuleId::kThmBDivisibility: {
      const bool ok = divides(g.order(), c1sq);
      return {id, ok ? CheckStatus::kPass : CheckStatus::kFail,
              to_string(g.order()) + (ok ? " | " : " does not divide ") + to_string(c1sq)};
    }
    case RuleId::kThmCBound: {
      const FreeGenusBounds b = free_genus_bounds(g);
      const Integer need = std::max(Integer(b.lower - 1), g.order());
      const bool ok = c1sq >= need;
      return {id, ok ? CheckStatus::kPass : CheckStatus::kFail,
              "c1^2 = " + to_string(c1sq) + (ok ? " >= " : " < ") + "max(" +
                  to_string(Integer(b.lower - 1)) + ", " + to_string(g.order()) + ") = " +
                  to_string(need) + " (free genus >= " + to_string(b.lower) + ")"};
    }
  }
  throw std::logic_error("unknown rule");
}

// c1^2 = ratio * c2 and chi(O) = c1^2 / slope in each census case.
long census_ratio(CensusCase c) { return c == CensusCase::kTwoC2 ? 2 : 3; }
long census_slope(CensusCase c) { return c == CensusCase::kTwoC2 ? 8 : 9; }

bool family_fits_case(GroupFamily f, CensusCase c) {
  return c == CensusCase::kTwoC2 ? f == GroupFamily::kElementaryAbelian2
                                 : f != GroupFamily::kElementaryAbelian2;
}

Integer round_up_to_multiple(const Integer& x, const Integer& m) {
  const Integer q = floor_div(Integer(x + m - 1), m);
  return q * m;
}

CensusRow census_row(CensusCase c, GroupFamily family, long rank, const RuleTable& rules) {
  GroupProfile g = family_group(family, rank);
  const FreeGenusBounds fg = free_genus_bounds(g);
  CensusRow row{rank, g, fg.lower, CensusStatus::kInfeasible, 1, 1, std::nullopt, {}, 0, {}};

  if (rules.enabled(RuleId::kPetersDichotomy) && !family_fits_case(family, c)) {
    row.reason = "peters_dichotomy: family " + family_name(family) + " does not fit case " +
                 census_case_name(c);
    return row;
  }

  const Integer slope(census_slope(c));
  row.modulus = census_ratio(c);
  if (rules.enabled(RuleId::kNoetherIntegrality)) row.modulus = lcm(row.modulus, slope);
  if (rules.enabled(RuleId::kThmBDivisibility)) row.modulus = lcm(row.modulus, g.order());
  if (rules.enabled(RuleId::kThmCBound)) row.min_c1sq = std::max(Integer(fg.lower - 1), g.order());

  const Integer first = round_up_to_multiple(row.min_c1sq, row.modulus);
  if (!rules.enabled(RuleId::kCaiThreshold) || g.order() <= kCaiMaxOrder) {
    row.status = CensusStatus::kFeasibleUnbounded;
    row.witness_c1sq = first;
    row.reason = "chi(O) unconstrained; c1^2 in " + to_string(row.modulus) + "Z, >= " +
                 to_string(row.min_c1sq);
    return row;
  }

  // chi(O) < 31, i.e. c1^2 < 31 * slope; with Noether integrality chi <= 30.
  row.c1sq_cap = rules.enabled(RuleId::kNoetherIntegrality)
                     ? Integer(slope * (kCaiChiThreshold - 1))
                     : Integer(slope * kCaiChiThreshold - 1);
  bool any = false;
  for (Integer v = first; v <= *row.c1sq_cap; v += row.modulus) {
    row.surviving_c1sq.push_back(v);
    any = true;
  }
  if (any) {
    row.status = CensusStatus::kFeasible;
    row.witness_c1sq = row.surviving_c1sq.front();
    row.reason = std::to_string(row.surviving_c1sq.size()) + " value(s) survive";
  } else {
    row.reason = "thm_c_bound: c1^2 >= " + to_string(row.min_c1sq) + " exceeds cai cap " +
                 to_string(*row.c1sq_cap);
  }
  return row;
}

}  // namespace

RuleTable::RuleTable() { enabled_.fill(true); }

std::vector<RuleId> RuleTable::enabled_rules() const {
  std::vector<RuleId> out;
  for (RuleId id : kAllRules) {
    if (enabled(id)) out.push_back(id);
  }
  return out;
}

ConstraintReport check_candidate(const SurfaceInvariants& s, const GroupProfile& g,
                                 const RuleTable& rules) {
  return check_candidate(s, g, rules, {kAllRules.begin(), kAllRules.end()});
}

ConstraintReport check_candidate(const SurfaceInvariants& s, const GroupProfile& g,
                                 const RuleTable& rules, const std::vector<RuleId>& order) {
  if (g.is_trivial()) throw InputError("candidate group must be nontrivial");
  std::array<std::optional<RuleCheck>, kRuleCount> slots;
  for (RuleId id : order) {
    auto& slot = slots[static_cast<std::size_t>(id)];
    if (slot) continue;
    slot = rules.enabled(id) ? evaluate(id, s, g)
                             : RuleCheck{id, CheckStatus::kDisabled, "disabled"};
  }
  ConstraintReport report{true, {}};
  for (RuleId id : kAllRules) {
    auto& slot = slots[static_cast<std::size_t>(id)];
    if (!slot) slot = rules.enabled(id) ? evaluate(id, s, g)
                                        : RuleCheck{id, CheckStatus::kDisabled, "disabled"};
    if (slot->status == CheckStatus::kFail) report.feasible = false;
    report.checks.push_back(std::move(*slot));
  }
  return report;
}

std::string census_case_name(CensusCase c) { return c == CensusCase::kTwoC2 ? "2c2" : "3c2"; }

std::string family_name(GroupFamily f) {
  switch (f) {
    case GroupFamily::kElementaryAbelian2: return "elem-abelian-2";
    case GroupFamily::kElementaryAbelian3: return "three-group-elem-abelian";
    case GroupFamily::kExponentThree: return "three-group-exponent-3";
  }
  throw std::logic_error("unknown family");
}

std::optional<CensusCase> census_case_from_name(std::string_view name) {
  if (name == "2c2") return CensusCase::kTwoC2;
  if (name == "3c2") return CensusCase::kThreeC2;
  return std::nullopt;
}

std::optional<GroupFamily> family_from_name(std::string_view name) {
  for (GroupFamily f : {GroupFamily::kElementaryAbelian2, GroupFamily::kElementaryAbelian3,
                        GroupFamily::kExponentThree}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

GroupFamily default_family(CensusCase c) {
  return c == CensusCase::kTwoC2 ? GroupFamily::kElementaryAbelian2 : GroupFamily::kExponentThree;
}

long exponent_three_min_generators(long log3_order) {
  if (log3_order < 0) throw InputError("order exponent must be >= 0");
  long r = 0;
  while (r + r * (r - 1) / 2 + r * (r - 1) * (r - 2) / 6 < log3_order) ++r;
  return r;
}

GroupProfile family_group(GroupFamily f, long rank) {
  if (rank < 1) throw InputError("census rank must be >= 1");
  switch (f) {
    case GroupFamily::kElementaryAbelian2: return GroupProfile::elementary_abelian(2, rank);
    case GroupFamily::kElementaryAbelian3: return GroupProfile::elementary_abelian(3, rank);
    case GroupFamily::kExponentThree: {
      const long r = exponent_three_min_generators(rank);
      if (r == rank) return GroupProfile::elementary_abelian(3, rank);
      return GroupProfile::opaque(pow(Integer(3), static_cast<unsigned long>(rank)), r, Integer(3));
    }
  }
  throw std::logic_error("unknown family");
}

std::string census_status_name(CensusStatus s) {
  switch (s) {
    case CensusStatus::kFeasibleUnbounded: return "feasible-unbounded";
    case CensusStatus::kFeasible: return "feasible";
    case CensusStatus::kInfeasible: return "infeasible";
  }
  throw std::logic_error("unknown status");
}

std::optional<long> CensusTable::max_feasible_rank() const {
  std::optional<long> best;
  for (const auto& r : rows) {
    if (r.status != CensusStatus::kInfeasible) best = r.rank;
  }
  return best;
}

std::optional<Integer> CensusTable::max_feasible_order() const {
  std::optional<Integer> best;
  for (const auto& r : rows) {
    if (r.status != CensusStatus::kInfeasible) best = r.group.order();
  }
  return best;
}

CensusTable census(CensusCase c, GroupFamily family, long max_rank, const RuleTable& rules,
                   unsigned threads) {
  if (max_rank < 1) throw InputError("max rank must be >= 1");
  CensusTable table{c, family, {}};
  const auto n = static_cast<std::size_t>(max_rank);
  std::vector<std::optional<CensusRow>> rows(n);
  auto work = [&](std::size_t start, std::size_t stride) {
    for (std::size_t i = start; i < n; i += stride) {
      rows[i] = census_row(c, family, static_cast<long>(i) + 1, rules);
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, n);
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }
  for (auto& r : rows) table.rows.push_back(std::move(*r));
  return table;
}

std::string render_census_text(const CensusTable& t) {
  std::vector<std::array<std::string, 8>> cells;
  cells.push_back({"rank", "order", "r", "fg_lower", "min_c1sq", "cap", "status", "c1sq"});
  for (const auto& row : t.rows) {
    std::string values;
    if (row.status == CensusStatus::kFeasible) {
      for (std::size_t i = 0; i < row.surviving_c1sq.size(); ++i) {
        if (i) values += ",";
        values += to_string(row.surviving_c1sq[i]);
      }
    } else if (row.status == CensusStatus::kFeasibleUnbounded) {
      values = to_string(row.witness_c1sq) + "+" + to_string(row.modulus) + "k";
    } else {
      values = "-";
    }
    cells.push_back({std::to_string(row.rank), to_string(row.group.order()),
                     std::to_string(row.group.min_generators()), to_string(row.free_genus_lower),
                     to_string(row.min_c1sq), row.c1sq_cap ? to_string(*row.c1sq_cap) : "none",
                     census_status_name(row.status), values});
  }
  std::array<std::size_t, 8> width{};
  for (const auto& r : cells) {
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::ostringstream os;
  os << "census case=" << census_case_name(t.census_case) << " family=" << family_name(t.family)
     << "\n";
  for (const auto& r : cells) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i + 1 == r.size()) {
        os << r[i];
      } else {
        os << std::left << std::setw(static_cast<int>(width[i])) << r[i] << "  ";
      }
    }
    os << "\n";
  }
  const auto rank = t.max_feasible_rank();
  const auto order = t.max_feasible_order();
  os << "max feasible rank: " << (rank ? std::to_string(*rank) : "none")
     << ", max feasible order: " << (order ? to_string(*order) : "none") << "\n";
  return os.str();
}

}  // namespace surfaut
