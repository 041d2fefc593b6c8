#include "surfaut/bigfloat.hpp"

#include <algorithm>
#include <vector>

namespace surfaut {

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(mpfr_prec_t bits, const Rational& value) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_string(int digits) const {
  std::vector<char> buffer(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buffer.data(), buffer.size(), "%.*Re", std::max(digits - 1, 0), value_);
  return std::string(buffer.data());
}

bool BigFloat::within(const Rational& exact, long exponent) const {
  const mpfr_prec_t work = precision() + 64;
  BigFloat diff(work, exact);
  mpfr_sub(diff.get(), value_, diff.get(), MPFR_RNDN);
  mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
  BigFloat bound(work);
  mpfr_set_ui_2exp(bound.get(), 1, exponent, MPFR_RNDN);
  return mpfr_less_p(diff.get(), bound.get()) != 0;
}

}  // namespace surfaut
