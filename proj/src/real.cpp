#include "apz/real.hpp"

#include <cmath>
#include <cstdlib>
#include <memory>

#include "apz/errors.hpp"

namespace apz {

namespace {

thread_local Bits tls_precision = 256;

Bits wider(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

Bits digits_to_bits(int digits) {
  return static_cast<Bits>(std::ceil(digits * 3.3219280948873623)) + 8;
}

int bits_to_digits(Bits bits) {
  return static_cast<int>(std::floor(static_cast<double>(bits - 8) * 0.30102999566398120));
}

PrecisionScope::PrecisionScope(Bits bits) : saved_(tls_precision) {
  tls_precision = std::max<Bits>(bits, MPFR_PREC_MIN);
}

PrecisionScope::~PrecisionScope() { tls_precision = saved_; }

Bits PrecisionScope::current() { return tls_precision; }

Real::Real() {
  mpfr_init2(x_, tls_precision);
  mpfr_set_zero(x_, 1);
}

Real::Real(Bits bits, int) {
  mpfr_init2(x_, bits);
  mpfr_set_zero(x_, 1);
}

Real::Real(double v) : Real() { mpfr_set_d(x_, v, MPFR_RNDN); }

Real::Real(const Integer& v) : Real() { mpfr_set_z(x_, v.get_mpz_t(), MPFR_RNDN); }

Real::Real(const Rational& v) : Real() { mpfr_set_q(x_, v.get_mpq_t(), MPFR_RNDN); }

Real::Real(const Real& o) {
  mpfr_init2(x_, o.precision());
  mpfr_set(x_, o.x_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  // Steal the limbs; the source is left in a destroy-or-assign-only state.
  x_[0] = o.x_[0];
  o.x_[0]._mpfr_d = nullptr;
}

Real& Real::operator=(const Real& o) {
  if (this == &o) return *this;
  if (x_[0]._mpfr_d == nullptr)
    mpfr_init2(x_, o.precision());
  else if (precision() != o.precision())
    mpfr_set_prec(x_, o.precision());
  mpfr_set(x_, o.x_, MPFR_RNDN);
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  if (this == &o) return *this;
  if (x_[0]._mpfr_d != nullptr) mpfr_clear(x_);
  x_[0] = o.x_[0];
  o.x_[0]._mpfr_d = nullptr;
  return *this;
}

Real::~Real() {
  if (x_[0]._mpfr_d != nullptr) mpfr_clear(x_);
}

Real Real::zero(Bits bits) { return Real(bits, 0); }

Real Real::parse(std::string_view text, Bits bits) {
  Real r(bits, 0);
  std::string s(text);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.x_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end == s.c_str() || *end != '\0' || !r.is_finite())
    throw UsageError("not a decimal number: '" + s + "'");
  return r;
}

Real Real::from_rational(const Rational& q, Bits bits) {
  Real r(bits, 0);
  mpfr_set_q(r.x_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::with_precision(Bits bits) const {
  Real r(bits, 0);
  mpfr_set(r.x_, x_, MPFR_RNDN);
  return r;
}

void Real::widen_to(Bits bits) {
  if (bits > precision()) mpfr_prec_round(x_, bits, MPFR_RNDN);
}

double Real::log10_abs() const {
  if (is_zero()) return -INFINITY;
  long e = 0;
  double m = mpfr_get_d_2exp(&e, x_, MPFR_RNDN);
  return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
}

std::pair<std::string, long> Real::decimal_digits(int n) const {
  mpfr_exp_t e = 0;
  std::unique_ptr<char, void (*)(char*)> raw(mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(n), x_, MPFR_RNDZ),
                                             mpfr_free_str);
  std::string digits(raw.get());
  if (!digits.empty() && digits.front() == '-') digits.erase(0, 1);
  if (is_zero()) e = 0;
  return {digits, static_cast<long>(e)};
}

std::string Real::to_scientific(int n) const {
  mpfr_exp_t e = 0;
  std::unique_ptr<char, void (*)(char*)> raw(mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(n), x_, MPFR_RNDN),
                                             mpfr_free_str);
  std::string digits(raw.get());
  std::string out;
  if (!digits.empty() && digits.front() == '-') {
    out = "-";
    digits.erase(0, 1);
  }
  if (!is_finite()) return out + digits;
  long exponent = is_zero() ? 0 : static_cast<long>(e) - 1;
  out += digits.substr(0, 1);
  if (digits.size() > 1) out += "." + digits.substr(1);
  char buf[32];
  std::snprintf(buf, sizeof buf, "e%+03ld", exponent);
  return out + buf;
}

Real& Real::operator+=(const Real& o) {
  widen_to(o.precision());
  mpfr_add(x_, x_, o.x_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen_to(o.precision());
  mpfr_sub(x_, x_, o.x_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen_to(o.precision());
  mpfr_mul(x_, x_, o.x_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  widen_to(o.precision());
  mpfr_div(x_, x_, o.x_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(precision(), 0);
  mpfr_neg(r.x_, x_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r = Real::zero(wider(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r = Real::zero(wider(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r = Real::zero(wider(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r = Real::zero(wider(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator/(long v, const Real& a) {
  Real r = Real::zero(a.precision());
  mpfr_si_div(r.get(), v, a.get(), MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.get(), b.get())) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.get(), b.get());
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

#define APZ_UNARY(name, fn)                        \
  Real name(const Real& x) {                       \
    Real r = Real::zero(x.precision());            \
    fn(r.get(), x.get(), MPFR_RNDN);               \
    return r;                                      \
  }

APZ_UNARY(abs, mpfr_abs)
APZ_UNARY(sqrt, mpfr_sqrt)
APZ_UNARY(log, mpfr_log)
APZ_UNARY(log1p, mpfr_log1p)
APZ_UNARY(exp, mpfr_exp)

#undef APZ_UNARY

Real pow(const Real& base, const Real& e) {
  Real r = Real::zero(wider(base, e));
  mpfr_pow(r.get(), base.get(), e.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& base, long e) {
  Real r = Real::zero(base.precision());
  mpfr_pow_si(r.get(), base.get(), e, MPFR_RNDN);
  return r;
}

Real inverse_power(unsigned long n, const Real& s) {
  Real r = Real::zero(s.precision());
  mpfr_ui_pow(r.get(), n, s.get(), MPFR_RNDN);
  mpfr_ui_div(r.get(), 1, r.get(), MPFR_RNDN);
  return r;
}

Real log_of(unsigned long n, Bits bits) {
  Real r = Real::zero(bits);
  mpfr_log_ui(r.get(), n, MPFR_RNDN);
  return r;
}

Real pi(Bits bits) {
  Real r = Real::zero(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real euler_gamma(Bits bits) {
  Real r = Real::zero(bits);
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}

Real power_of_ten(long e, Bits bits) {
  Real r = Real::zero(bits);
  mpfr_set_ui(r.get(), 10, MPFR_RNDN);
  mpfr_pow_si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

Real max_abs(const Real& a, const Real& b) {
  Real x = abs(a), y = abs(b);
  return x < y ? y : x;
}

}  // namespace apz
