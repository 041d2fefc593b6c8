#include "surfaut/defect.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "surfaut/dedekind.hpp"
#include "surfaut/error.hpp"

namespace surfaut {

namespace {

void require_order(std::int64_t p) {
  if (p < 2) throw InputError("isotropy order p must be >= 2, got " + std::to_string(p));
}

void require_unit(std::int64_t x, std::int64_t p, const char* name) {
  if (std::gcd(x, p) != 1) {
    throw NotCoprime(std::string(name) + " = " + std::to_string(x) + " is not a unit mod p = " +
                     std::to_string(p));
  }
}

std::int64_t mod(std::int64_t a, std::int64_t p) {
  const std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

// Complex number on MPFR parts; only what the oracle sum needs.
struct Complex {
  BigFloat re;
  BigFloat im;
  explicit Complex(mpfr_prec_t bits) : re(bits), im(bits) {}
};

void mul(Complex& out, const Complex& a, const Complex& b, BigFloat& t1, BigFloat& t2) {
  mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  BigFloat re(out.re.precision());
  mpfr_sub(re.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(out.im.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_swap(out.re.get(), re.get());
}

}  // namespace

LocalRep::LocalRep(std::int64_t p, std::int64_t k, std::int64_t q) : p_(p), k_(k), q_(q) {
  require_order(p);
  require_unit(k, p, "k");
  require_unit(q, p, "q");
}

DefectValue::DefectValue(Rational value) : value_(std::move(value)) {
  if (!(value_ * Rational(3)).is_integer()) {
    throw InputError("signature defect must lie in (1/3)Z, got " + value_.str());
  }
}

DefectValue defect_closed(std::int64_t p, std::int64_t q) {
  require_order(p);
  require_unit(q, p, "q");
  const Rational s = dedekind_sum_closed(DedekindInput(q, p));
  return DefectValue(Rational(-4 * p) * s);
}

// The exponent k only relabels the generator, so it drops out.
DefectValue defect(const LocalRep& rep) { return defect_closed(rep.p(), rep.q()); }

DefectValue defect_special_linear(std::int64_t p) {
  require_order(p);
  const Integer pp(static_cast<long>(p));
  return DefectValue(Rational((pp - 1) * (pp - 2), Integer(3)));
}

ApproxDefect defect_direct(std::int64_t p, std::int64_t q, long bits) {
  require_order(p);
  require_unit(q, p, "q");
  if (bits < kMinOracleBits) {
    throw InputError("oracle precision must be >= " + std::to_string(kMinOracleBits) +
                     " bits, got " + std::to_string(bits));
  }
  const auto prec = static_cast<mpfr_prec_t>(bits);

  // Table of mu^j = cos(2 pi j / p) + i sin(2 pi j / p), j = 0..p-1.
  BigFloat two_pi(prec);
  mpfr_const_pi(two_pi.get(), MPFR_RNDN);
  mpfr_mul_2ui(two_pi.get(), two_pi.get(), 1, MPFR_RNDN);
  std::vector<Complex> roots;
  roots.reserve(static_cast<std::size_t>(p));
  BigFloat angle(prec);
  for (std::int64_t j = 0; j < p; ++j) {
    Complex z(prec);
    mpfr_mul_si(angle.get(), two_pi.get(), static_cast<long>(j), MPFR_RNDN);
    mpfr_div_si(angle.get(), angle.get(), static_cast<long>(p), MPFR_RNDN);
    mpfr_sin_cos(z.im.get(), z.re.get(), angle.get(), MPFR_RNDN);
    roots.push_back(std::move(z));
  }

  Complex num(prec), den(prec), a(prec), b(prec), term(prec);
  BigFloat t1(prec), t2(prec), norm(prec);
  BigFloat sum(prec);
  // k = p is excluded: mu^p = 1 makes the denominator vanish.
  for (std::int64_t k = 1; k < p; ++k) {
    const Complex& u = roots[static_cast<std::size_t>(k)];
    const Complex& v = roots[static_cast<std::size_t>(mod(k * q, p))];

    mpfr_add_ui(a.re.get(), u.re.get(), 1, MPFR_RNDN);
    mpfr_set(a.im.get(), u.im.get(), MPFR_RNDN);
    mpfr_add_ui(b.re.get(), v.re.get(), 1, MPFR_RNDN);
    mpfr_set(b.im.get(), v.im.get(), MPFR_RNDN);
    mul(num, a, b, t1, t2);

    mpfr_ui_sub(a.re.get(), 1, u.re.get(), MPFR_RNDN);
    mpfr_neg(a.im.get(), u.im.get(), MPFR_RNDN);
    mpfr_ui_sub(b.re.get(), 1, v.re.get(), MPFR_RNDN);
    mpfr_neg(b.im.get(), v.im.get(), MPFR_RNDN);
    mul(den, a, b, t1, t2);

    // num / den = num * conj(den) / |den|^2; only the real part survives the
    // full sum, and each term is real already (pure i times pure i).
    mpfr_neg(den.im.get(), den.im.get(), MPFR_RNDN);
    mul(term, num, den, t1, t2);
    mpfr_sqr(t1.get(), den.re.get(), MPFR_RNDN);
    mpfr_sqr(t2.get(), den.im.get(), MPFR_RNDN);
    mpfr_add(norm.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_div(term.re.get(), term.re.get(), norm.get(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.re.get(), MPFR_RNDN);
  }

  // Each term is at most cot^2(pi/p) < p^2 in size and its denominators lose
  // up to ~2 log2(p) bits to cancellation in 1 - cos; 64 p^5 ulps covers the
  // p-term sum with room to spare.
  BigFloat bound(prec);
  const Integer p5 = pow(Integer(static_cast<long>(p)), 5) * 64;
  mpfr_set_z(bound.get(), p5.get_mpz_t(), MPFR_RNDU);
  mpfr_mul_2si(bound.get(), bound.get(), -bits, MPFR_RNDU);

  return ApproxDefect{std::move(sum), bits, std::move(bound)};
}

}  // namespace surfaut
