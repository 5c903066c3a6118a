// Arbitrary-precision real numbers on top of MPFR.
//
// Every Real carries its own precision in bits.  Binary operations produce a
// result at the larger of the two operand precisions; operations with a
// machine scalar keep the precision of the Real operand.  Values constructed
// from scalars take the precision of the innermost PrecisionScope on the
// calling thread, so numeric kernels can be written with ordinary literals.

#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace apz {

using Integer = mpz_class;
using Rational = mpq_class;
using Bits = mpfr_prec_t;

/// Bits needed to carry `digits` significant decimal digits.
Bits digits_to_bits(int digits);
int bits_to_digits(Bits bits);

/// Sets the thread-local precision used for Reals built from scalars.
class PrecisionScope {
 public:
  explicit PrecisionScope(Bits bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

  static Bits current();

 private:
  Bits saved_;
};

class Real {
 public:
  Real();
  template <std::integral I>
  Real(I v) : Real() {
    if constexpr (std::is_signed_v<I>)
      mpfr_set_si(x_, static_cast<long>(v), MPFR_RNDN);
    else
      mpfr_set_ui(x_, static_cast<unsigned long>(v), MPFR_RNDN);
  }
  Real(double v);
  explicit Real(const Integer& v);
  explicit Real(const Rational& v);

  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  /// Zero with an explicit precision.
  static Real zero(Bits bits);
  /// Parses a decimal literal ("1.5", "-2e-30"); throws UsageError.
  static Real parse(std::string_view text, Bits bits);
  static Real from_rational(const Rational& q, Bits bits);

  Bits precision() const { return mpfr_get_prec(x_); }
  /// Copy rounded (or widened) to `bits`.
  Real with_precision(Bits bits) const;

  bool is_zero() const { return mpfr_zero_p(x_) != 0; }
  bool is_finite() const { return mpfr_number_p(x_) != 0; }
  int sign() const { return mpfr_sgn(x_); }
  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  /// log10|x| as a double; -inf for zero.
  double log10_abs() const;

  /// Significant digits d1..dn and exponent e such that |x| ~ 0.d1..dn * 10^e,
  /// truncated toward zero.  Sign is not included.
  std::pair<std::string, long> decimal_digits(int n) const;
  /// Scientific notation, round-to-nearest, `n` significant digits.
  std::string to_scientific(int n) const;

  mpfr_srcptr get() const { return x_; }
  mpfr_ptr get() { return x_; }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  template <std::integral I>
  Real& operator*=(I v) {
    if constexpr (std::is_signed_v<I>)
      mpfr_mul_si(x_, x_, static_cast<long>(v), MPFR_RNDN);
    else
      mpfr_mul_ui(x_, x_, static_cast<unsigned long>(v), MPFR_RNDN);
    return *this;
  }
  template <std::integral I>
  Real& operator/=(I v) {
    if constexpr (std::is_signed_v<I>)
      mpfr_div_si(x_, x_, static_cast<long>(v), MPFR_RNDN);
    else
      mpfr_div_ui(x_, x_, static_cast<unsigned long>(v), MPFR_RNDN);
    return *this;
  }
  template <std::integral I>
  Real& operator+=(I v) {
    if constexpr (std::is_signed_v<I>)
      mpfr_add_si(x_, x_, static_cast<long>(v), MPFR_RNDN);
    else
      mpfr_add_ui(x_, x_, static_cast<unsigned long>(v), MPFR_RNDN);
    return *this;
  }
  template <std::integral I>
  Real& operator-=(I v) {
    if constexpr (std::is_signed_v<I>)
      mpfr_sub_si(x_, x_, static_cast<long>(v), MPFR_RNDN);
    else
      mpfr_sub_ui(x_, x_, static_cast<unsigned long>(v), MPFR_RNDN);
    return *this;
  }

  Real operator-() const;

 private:
  explicit Real(Bits bits, int /*tag*/);
  void widen_to(Bits bits);

  mpfr_t x_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);

template <std::integral I>
Real operator*(Real a, I v) { return a *= v; }
template <std::integral I>
Real operator*(I v, Real a) { return a *= v; }
template <std::integral I>
Real operator/(Real a, I v) { return a /= v; }
template <std::integral I>
Real operator+(Real a, I v) { return a += v; }
template <std::integral I>
Real operator+(I v, Real a) { return a += v; }
template <std::integral I>
Real operator-(Real a, I v) { return a -= v; }
template <std::integral I>
Real operator-(I v, const Real& a) { return -(a - v); }
/// v / a at the precision of a.
Real operator/(long v, const Real& a);

std::partial_ordering operator<=>(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);
template <std::integral I>
std::partial_ordering operator<=>(const Real& a, I v) {
  if (mpfr_nan_p(a.get())) return std::partial_ordering::unordered;
  int c = std::is_signed_v<I> ? mpfr_cmp_si(a.get(), static_cast<long>(v))
                              : mpfr_cmp_ui(a.get(), static_cast<unsigned long>(v));
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}
template <std::integral I>
bool operator==(const Real& a, I v) {
  return (a <=> v) == std::partial_ordering::equivalent;
}

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real exp(const Real& x);
Real pow(const Real& base, const Real& e);
Real pow(const Real& base, long e);
/// n^{-s} at the precision of s.
Real inverse_power(unsigned long n, const Real& s);
/// log n at `bits`.
Real log_of(unsigned long n, Bits bits);
Real pi(Bits bits);
Real euler_gamma(Bits bits);
/// 10^e at `bits`.
Real power_of_ten(long e, Bits bits);
Real max_abs(const Real& a, const Real& b);

}  // namespace apz
