#pragma once

#include <cstdint>

#include "surfaut/rational.hpp"

namespace surfaut {

// The pair (q, p) of a Dedekind sum s(q, p). Construction enforces p >= 1 and
// gcd(q, p) = 1; non-coprime pairs are rejected, never reduced.
class DedekindInput {
 public:
  DedekindInput(std::int64_t q, std::int64_t p);

  std::int64_t q() const { return q_; }
  std::int64_t p() const { return p_; }

 private:
  std::int64_t q_;
  std::int64_t p_;
};

// ((x)): x - floor(x) - 1/2 off the integers, 0 on them.
Rational sawtooth(const Rational& x);

// s(q, p) = sum_{k=1}^{p} ((k/p)) ((kq/p)), summed term by term.
Rational dedekind_sum_direct(const DedekindInput& in);

// f_p(q) = sum_{k=1}^{p-1} k * floor(kq/p). Requires p >= 2 and gcd(q, p) = 1.
Integer f_p(std::int64_t q, std::int64_t p);

// s(q, p) from 6p s(q,p) = (p-1)(2pq - q - 3p/2) - 6 f_p(q). Requires p >= 2.
Rational dedekind_sum_closed(const DedekindInput& in);

}  // namespace surfaut
