#include "surfaut/dedekind.hpp"

#include <numeric>
#include <string>

#include "surfaut/error.hpp"

namespace surfaut {

DedekindInput::DedekindInput(std::int64_t q, std::int64_t p) : q_(q), p_(p) {
  if (p < 1) throw InputError("Dedekind modulus p must be >= 1, got " + std::to_string(p));
  if (std::gcd(q, p) != 1) {
    throw NotCoprime("q and p must be coprime: gcd(q, p) = " + std::to_string(std::gcd(q, p)) +
                     " for q = " + std::to_string(q) + ", p = " + std::to_string(p));
  }
}

Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return Rational(0);
  return x - Rational(x.floor()) - Rational(1, 2);
}

Rational dedekind_sum_direct(const DedekindInput& in) {
  const Integer p(static_cast<long>(in.p()));
  const Integer q(static_cast<long>(in.q()));
  Rational sum;
  for (long k = 1; k <= in.p(); ++k) {
    const Integer kk(k);
    sum += sawtooth(Rational(kk, p)) * sawtooth(Rational(kk * q, p));
  }
  return sum;
}

Integer f_p(std::int64_t q, std::int64_t p) {
  if (p < 2) throw InputError("f_p requires p >= 2, got " + std::to_string(p));
  DedekindInput checked(q, p);
  const Integer pp(static_cast<long>(p));
  const Integer qq(static_cast<long>(q));
  Integer sum;
  for (long k = 1; k < p; ++k) {
    const Integer kk(k);
    sum += kk * floor_div(kk * qq, pp);
  }
  return sum;
}

Rational dedekind_sum_closed(const DedekindInput& in) {
  if (in.p() < 2) throw InputError("closed Dedekind form requires p >= 2");
  const Integer p(static_cast<long>(in.p()));
  const Integer q(static_cast<long>(in.q()));
  // (p-1)(2pq - q - 3p/2) - 6 f_p(q), then divide by 6p.
  const Rational bracket = Rational(Integer(2 * p * q - q)) - Rational(Integer(3 * p), Integer(2));
  const Rational six_p_s = Rational(Integer(p - 1)) * bracket - Rational(Integer(6 * f_p(in.q(), in.p())));
  return six_p_s / Rational(Integer(6 * p));
}

}  // namespace surfaut
