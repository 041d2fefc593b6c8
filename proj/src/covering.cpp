#include "surfaut/covering.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "surfaut/error.hpp"

namespace surfaut {

namespace {

std::vector<std::pair<Integer, long>> factorize(Integer n) {
  std::vector<std::pair<Integer, long>> out;
  for (Integer d = 2; d * d <= n; ++d) {
    long e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

}  // namespace

CoveringData riemann_hurwitz_free(KnownGenus which, const Integer& genus,
                                  const Integer& group_order) {
  if (group_order < 1) throw InputError("group order must be >= 1");
  if (genus < 0) throw InputError("genus must be >= 0");
  if (which == KnownGenus::kQuotient) {
    return CoveringData{group_order * (genus - 1) + 1, genus, group_order};
  }
  const Integer m_minus_1 = genus - 1;
  if (mpz_divisible_p(m_minus_1.get_mpz_t(), group_order.get_mpz_t()) == 0) {
    throw InputError("no free quotient: " + to_string(group_order) + " does not divide m - 1 = " +
                     to_string(m_minus_1));
  }
  const Integer n = m_minus_1 / group_order + 1;
  if (n < 0) throw InputError("quotient genus would be negative");
  return CoveringData{genus, n, group_order};
}

GroupProfile GroupProfile::elementary_abelian(const Integer& prime, long rank) {
  if (!is_prime(prime)) throw InputError(to_string(prime) + " is not prime");
  if (rank < 0) throw InputError("rank must be >= 0");
  return GroupProfile(pow(prime, static_cast<unsigned long>(rank)), rank,
                      ElementaryAbelian{prime, rank},
                      rank == 0 ? Integer(1) : prime);
}

GroupProfile GroupProfile::from_cyclic_factors(const std::vector<Integer>& cyclic_orders) {
  // Elementary divisors per prime, largest first.
  std::map<Integer, std::vector<long>> by_prime;
  for (const auto& n : cyclic_orders) {
    if (n < 1) throw InputError("cyclic order must be positive");
    for (const auto& [prime, e] : factorize(n)) by_prime[prime].push_back(e);
  }
  std::size_t t = 0;
  for (auto& [prime, exps] : by_prime) {
    std::sort(exps.rbegin(), exps.rend());
    t = std::max(t, exps.size());
  }
  // d_t collects the largest power of every prime, d_{t-1} the next, ...
  std::vector<Integer> factors(t, Integer(1));
  for (const auto& [prime, exps] : by_prime) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      factors[t - 1 - i] *= pow(prime, static_cast<unsigned long>(exps[i]));
    }
  }
  Integer order = 1;
  for (const auto& d : factors) order *= d;
  const long r = static_cast<long>(t);
  if (t == 0) return GroupProfile(order, 0, Abelian{}, Integer(1));

  const Integer exponent = factors.back();
  if (factors.front() == factors.back() && is_prime(factors.front())) {
    return GroupProfile(order, r, ElementaryAbelian{factors.front(), r}, exponent);
  }
  return GroupProfile(order, r, Abelian{std::move(factors)}, exponent);
}

GroupProfile GroupProfile::opaque(const Integer& order, long min_generators,
                                  std::optional<Integer> exponent) {
  if (order < 1) throw InputError("group order must be >= 1");
  if (min_generators < 0) throw InputError("generator count must be >= 0");
  if ((order == 1) != (min_generators == 0)) {
    throw InputError("generator count is 0 exactly for the trivial group");
  }
  if (exponent) {
    if (*exponent < 1 || mpz_divisible_p(order.get_mpz_t(), exponent->get_mpz_t()) == 0) {
      throw InputError("exponent must be a positive divisor of the order");
    }
  }
  return GroupProfile(order, min_generators, Opaque{}, std::move(exponent));
}

bool GroupProfile::is_p_group(const Integer& prime) const {
  Integer n = order_;
  while (n > 1 && mpz_divisible_p(n.get_mpz_t(), prime.get_mpz_t()) != 0) n /= prime;
  return n == 1;
}

std::string GroupProfile::canonical() const {
  if (const auto* e = std::get_if<ElementaryAbelian>(&structure_)) {
    if (e->rank == 0) return "C1";
    std::string s = "C" + to_string(e->prime);
    if (e->rank > 1) s += "^" + std::to_string(e->rank);
    return s;
  }
  if (const auto* a = std::get_if<Abelian>(&structure_)) {
    if (a->factors.empty()) return "C1";
    std::string s;
    for (std::size_t i = 0; i < a->factors.size();) {
      std::size_t j = i;
      while (j < a->factors.size() && a->factors[j] == a->factors[i]) ++j;
      if (!s.empty()) s += "x";
      s += "C" + to_string(a->factors[i]);
      if (j - i > 1) s += "^" + std::to_string(j - i);
      i = j;
    }
    return s;
  }
  std::string s = "opaque(order=" + to_string(order_) + ",r=" + std::to_string(min_generators_);
  if (exponent_) s += ",exponent=" + to_string(*exponent_);
  return s + ")";
}

GroupProfile parse_group_spec(std::string_view text) {
  std::size_t pos = 0;
  auto read_int = [&]() -> Integer {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected a positive integer", start);
    const Integer v(std::string(text.substr(start, pos - start)), 10);
    if (v < 1) throw ParseError("expected a positive integer", start);
    return v;
  };

  std::vector<Integer> cyclic;
  while (true) {
    if (pos >= text.size() || text[pos] != 'C') throw ParseError("expected 'C'", pos);
    ++pos;
    const Integer n = read_int();
    Integer repeat = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const std::size_t at = pos;
      repeat = read_int();
      if (repeat > 4096) throw ParseError("repeat count too large", at);
    }
    for (long i = 0; i < repeat.get_si(); ++i) cyclic.push_back(n);
    if (pos == text.size()) break;
    if (text[pos] != 'x') throw ParseError("expected 'x' or end of input", pos);
    ++pos;
  }

  GroupProfile g = GroupProfile::from_cyclic_factors(cyclic);
  if (g.is_trivial()) throw InputError("group spec '" + std::string(text) + "' is the trivial group");
  return g;
}

FreeGenusBounds free_genus_bounds(const GroupProfile& g) {
  if (g.is_trivial()) throw InputError("free genus bounds need a nontrivial group");
  const long r = g.min_generators();
  const Integer lower = Integer((r + 1) / 2 - 1) * g.order() + 1;
  const Integer upper = Integer(r - 1) * g.order() + 1;
  return {lower, upper};
}

}  // namespace surfaut
