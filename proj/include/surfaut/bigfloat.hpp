#pragma once

#include <string>

#include <mpfr.h>

#include "surfaut/rational.hpp"

namespace surfaut {

// Owning MPFR value of fixed binary precision. Round-to-nearest throughout.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits);
  BigFloat(mpfr_prec_t bits, const Rational& value);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // Scientific notation with the given number of significant digits.
  std::string to_string(int digits) const;

  // |*this - exact| < 2^exponent, evaluated at this value's precision plus a
  // margin large enough that the subtraction itself is exact to the test.
  bool within(const Rational& exact, long exponent) const;

 private:
  mpfr_t value_;
};

}  // namespace surfaut
