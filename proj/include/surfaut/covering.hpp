#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "surfaut/rational.hpp"

namespace surfaut {

// Orientation-preserving free action of a group of order `group_order` on a
// genus-m surface with genus-n quotient: m - 1 = |G| (n - 1).
struct CoveringData {
  Integer total_genus;
  Integer quotient_genus;
  Integer group_order;

  friend bool operator==(const CoveringData&, const CoveringData&) = default;
};

enum class KnownGenus { kTotal, kQuotient };

// Completes the covering from one genus. Solving for the quotient requires
// group_order | m - 1.
CoveringData riemann_hurwitz_free(KnownGenus which, const Integer& genus,
                                  const Integer& group_order);

struct ElementaryAbelian {
  Integer prime;
  long rank;
  friend bool operator==(const ElementaryAbelian&, const ElementaryAbelian&) = default;
};

// Invariant factors d1 | d2 | ... | dt, all > 1.
struct Abelian {
  std::vector<Integer> factors;
  friend bool operator==(const Abelian&, const Abelian&) = default;
};

// Only the order and generator count are known; both come from the caller.
struct Opaque {
  friend bool operator==(const Opaque&, const Opaque&) = default;
};

using GroupStructure = std::variant<ElementaryAbelian, Abelian, Opaque>;

class GroupProfile {
 public:
  static GroupProfile elementary_abelian(const Integer& prime, long rank);
  // Normalizes an arbitrary list of cyclic orders to invariant-factor form.
  static GroupProfile from_cyclic_factors(const std::vector<Integer>& cyclic_orders);
  // `exponent`, when known, is the least common multiple of element orders.
  static GroupProfile opaque(const Integer& order, long min_generators,
                             std::optional<Integer> exponent = std::nullopt);

  const Integer& order() const { return order_; }
  long min_generators() const { return min_generators_; }
  const GroupStructure& structure() const { return structure_; }
  const std::optional<Integer>& exponent() const { return exponent_; }

  bool is_trivial() const { return order_ == 1; }
  // True iff the order is a power of `prime` (the trivial group counts).
  bool is_p_group(const Integer& prime) const;
  bool is_abelian() const { return !std::holds_alternative<Opaque>(structure_); }

  // Text in the C-product grammar, e.g. "C2^6" or "C3xC9". Opaque profiles
  // render as "opaque(order=N,r=R[,exponent=E])", which is not parseable.
  std::string canonical() const;

  friend bool operator==(const GroupProfile&, const GroupProfile&) = default;

 private:
  GroupProfile(Integer order, long r, GroupStructure s, std::optional<Integer> exponent)
      : order_(std::move(order)), min_generators_(r), structure_(std::move(s)),
        exponent_(std::move(exponent)) {}

  Integer order_;
  long min_generators_;
  GroupStructure structure_;
  std::optional<Integer> exponent_;
};

// spec := factor ("x" factor)* ; factor := "C" int ("^" int)?
GroupProfile parse_group_spec(std::string_view text);

struct FreeGenusBounds {
  Integer lower;
  Integer upper;
};

// ([(r+1)/2] - 1)|G| + 1 <= free genus <= (r - 1)|G| + 1. Nontrivial groups only.
FreeGenusBounds free_genus_bounds(const GroupProfile& g);

}  // namespace surfaut
