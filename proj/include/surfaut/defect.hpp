#pragma once

#include <cstdint>

#include "surfaut/bigfloat.hpp"
#include "surfaut/rational.hpp"

namespace surfaut {

// Isolated fixed point with tangent action (z1, z2) -> (mu^k z1, mu^(kq) z2),
// mu = exp(2 pi i / p). Requires p >= 2, gcd(k, p) = gcd(q, p) = 1.
class LocalRep {
 public:
  LocalRep(std::int64_t p, std::int64_t k, std::int64_t q);

  // The holomorphic-volume-preserving form (mu^k z1, mu^-k z2).
  static LocalRep special_linear(std::int64_t p, std::int64_t k) { return {p, k, -1}; }

  std::int64_t p() const { return p_; }
  std::int64_t k() const { return k_; }
  std::int64_t q() const { return q_; }

 private:
  std::int64_t p_;
  std::int64_t k_;
  std::int64_t q_;
};

// Signature defect of one fixed point; 3 * value is always integral.
class DefectValue {
 public:
  explicit DefectValue(Rational value);

  const Rational& value() const { return value_; }

  friend bool operator==(const DefectValue&, const DefectValue&) = default;

 private:
  Rational value_;
};

// I_{p,q} = -4p s(q, p).
DefectValue defect_closed(std::int64_t p, std::int64_t q);
DefectValue defect(const LocalRep& rep);

// (p-1)(p-2)/3, the value of I_{p,-1}.
DefectValue defect_special_linear(std::int64_t p);

inline constexpr long kDefaultOracleBits = 128;
inline constexpr long kMinOracleBits = 64;
inline constexpr long kOracleToleranceExponent = -40;

struct ApproxDefect {
  BigFloat value;
  long bits;
  // A priori bound on |value - I_{p,q}| from rounding in the summation.
  BigFloat error_bound;
};

// Floating-point evaluation of the root-of-unity sum
//   sum_{k=1}^{p-1} (1 + mu^k)(1 + mu^(kq)) / ((1 - mu^k)(1 - mu^(kq)))
// at `bits` of precision. Verification oracle only; nothing downstream
// consumes it.
ApproxDefect defect_direct(std::int64_t p, std::int64_t q, long bits = kDefaultOracleBits);

}  // namespace surfaut
