#include "modeq/numerics.hpp"

#include <cctype>
#include <climits>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <utility>

namespace modeq {

namespace {

constexpr double kLog10Of2 = 0.30102999566398119521;

struct MpfrString {
  char* ptr = nullptr;
  ~MpfrString() {
    if (ptr != nullptr) mpfr_free_str(ptr);
  }
};

// Promote `a` in place so it can absorb an operand at `other` precision.
void promote(Precision& prec, mpfr_ptr value, const Precision& other) {
  if (other.effective() > prec.effective()) {
    mpfr_prec_round(value, other.effective(), MPFR_RNDN);
    prec = other;
  }
}

}  // namespace

Precision::Precision(long bits_, long guard_bits_) : bits(bits_), guard_bits(guard_bits_) {
  if (bits < kMinBits) {
    throw DomainError("precision below " + std::to_string(kMinBits) + " bits");
  }
  if (guard_bits < 0) throw DomainError("negative guard bits");
}

Precision Precision::from_digits(int digits, long guard_bits) {
  if (digits <= 0) throw DomainError("precision digits must be positive");
  long bits = static_cast<long>(std::ceil(digits / kLog10Of2));
  while (static_cast<int>(std::floor(bits * kLog10Of2)) < digits) ++bits;
  if (bits < kMinBits) bits = kMinBits;
  return Precision(bits, guard_bits);
}

int Precision::decimal_digits() const {
  return static_cast<int>(std::floor(static_cast<double>(bits) * kLog10Of2));
}

ArbReal::ArbReal(Precision prec) : prec_(prec) {
  mpfr_init2(value_, prec_.effective());
  mpfr_set_zero(value_, 1);
}

ArbReal::ArbReal(long value, Precision prec) : prec_(prec) {
  mpfr_init2(value_, prec_.effective());
  mpfr_set_si(value_, value, MPFR_RNDN);
}

ArbReal::ArbReal(const ArbReal& other) : prec_(other.prec_) {
  mpfr_init2(value_, prec_.effective());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

ArbReal::ArbReal(ArbReal&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

ArbReal& ArbReal::operator=(const ArbReal& other) {
  if (this != &other) {
    prec_ = other.prec_;
    mpfr_set_prec(value_, prec_.effective());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

ArbReal& ArbReal::operator=(ArbReal&& other) noexcept {
  if (this != &other) {
    std::swap(prec_, other.prec_);
    mpfr_swap(value_, other.value_);
  }
  return *this;
}

ArbReal::~ArbReal() { mpfr_clear(value_); }

ArbReal ArbReal::from_rational(const mpq_class& value, Precision prec) {
  ArbReal out(prec);
  mpfr_set_q(out.value_, value.get_mpq_t(), MPFR_RNDN);
  return out;
}

ArbReal ArbReal::from_ratio(long num, long den, Precision prec) {
  if (den == 0) throw DivisionByZero("zero denominator");
  return from_rational(mpq_class(num, den), prec);
}

ArbReal ArbReal::from_string(std::string_view text, Precision prec) {
  ArbReal out(prec);
  std::string buf(text);
  char* end = nullptr;
  if (!buf.empty()) mpfr_strtofr(out.value_, buf.c_str(), &end, 10, MPFR_RNDN);
  if (buf.empty() || end == buf.c_str() || *end != '\0') {
    throw DomainError("not a decimal number: '" + buf + "'");
  }
  return out;
}

ArbReal ArbReal::pow10(long exponent, Precision prec) {
  ArbReal out(prec);
  mpfr_ui_pow_ui(out.value_, 10, static_cast<unsigned long>(std::labs(exponent)), MPFR_RNDN);
  if (exponent < 0) mpfr_ui_div(out.value_, 1, out.value_, MPFR_RNDN);
  return out;
}

ArbReal ArbReal::pi(Precision prec) {
  ArbReal out(prec);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

ArbReal ArbReal::with_precision(Precision prec) const {
  ArbReal out(prec);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

bool ArbReal::is_zero_within(const ArbReal& tolerance) const {
  return mpfr_cmpabs(value_, tolerance.value_) < 0;
}

ArbReal ArbReal::ulp() const {
  ArbReal out(prec_);
  if (is_zero()) {
    mpfr_set_ui_2exp(out.value_, 1, mpfr_get_emin(), MPFR_RNDN);
    return out;
  }
  mpfr_set_ui_2exp(out.value_, 1, mpfr_get_exp(value_) - prec_.effective(), MPFR_RNDN);
  return out;
}

long ArbReal::exponent2() const {
  if (is_zero() || !is_finite()) return LONG_MIN;
  return mpfr_get_exp(value_);
}

std::string ArbReal::to_string(int digits) const {
  const int d = std::max(1, std::min(digits, prec_.decimal_digits()));
  MpfrString s;
  if (is_integer() && exponent2() < d * 4) {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDN);
    if (z.get_str().size() <= static_cast<std::size_t>(d) + (z < 0 ? 1 : 0)) return z.get_str();
  }
  mpfr_asprintf(&s.ptr, "%#.*Rg", d, value_);
  return s.ptr;
}

std::string ArbReal::to_scientific(int digits) const {
  const int d = std::max(1, std::min(digits, prec_.decimal_digits()));
  MpfrString s;
  mpfr_asprintf(&s.ptr, "%.*Re", d - 1, value_);
  return s.ptr;
}

ArbReal ArbReal::operator-() const {
  ArbReal out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

ArbReal ArbReal::abs() const {
  ArbReal out(*this);
  mpfr_abs(out.value_, out.value_, MPFR_RNDN);
  return out;
}

ArbReal& ArbReal::operator+=(const ArbReal& rhs) {
  promote(prec_, value_, rhs.prec_);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

ArbReal& ArbReal::operator-=(const ArbReal& rhs) {
  promote(prec_, value_, rhs.prec_);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

ArbReal& ArbReal::operator*=(const ArbReal& rhs) {
  promote(prec_, value_, rhs.prec_);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

ArbReal& ArbReal::operator/=(const ArbReal& rhs) {
  if (rhs.is_zero()) throw DivisionByZero("division by zero");
  promote(prec_, value_, rhs.prec_);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

ArbReal& ArbReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

ArbReal& ArbReal::operator/=(long rhs) {
  if (rhs == 0) throw DivisionByZero("division by zero");
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

ArbReal operator+(ArbReal lhs, long rhs) {
  mpfr_add_si(lhs.value_, lhs.value_, rhs, MPFR_RNDN);
  return lhs;
}

ArbReal operator+(long lhs, const ArbReal& rhs) { return rhs + lhs; }

ArbReal operator-(ArbReal lhs, long rhs) {
  mpfr_sub_si(lhs.value_, lhs.value_, rhs, MPFR_RNDN);
  return lhs;
}

ArbReal operator-(long lhs, const ArbReal& rhs) {
  ArbReal out(rhs.prec_);
  mpfr_si_sub(out.value_, lhs, rhs.value_, MPFR_RNDN);
  return out;
}

ArbReal operator/(long lhs, const ArbReal& rhs) {
  if (rhs.is_zero()) throw DivisionByZero("division by zero");
  ArbReal out(rhs.prec_);
  mpfr_si_div(out.value_, lhs, rhs.value_, MPFR_RNDN);
  return out;
}

bool operator==(const ArbReal& a, const ArbReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const ArbReal& a, const ArbReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool operator==(const ArbReal& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }

std::partial_ordering operator<=>(const ArbReal& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.value_, b);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

ArbReal sqrt(const ArbReal& a) {
  if (a.sign() < 0) throw DomainError("sqrt of a negative number");
  ArbReal out(a.precision());
  mpfr_sqrt(out.raw_mut(), a.raw(), MPFR_RNDN);
  return out;
}

ArbReal exp(const ArbReal& a) {
  ArbReal out(a.precision());
  mpfr_exp(out.raw_mut(), a.raw(), MPFR_RNDN);
  return out;
}

ArbReal log(const ArbReal& a) {
  if (a.sign() <= 0) throw DomainError("log of a non-positive number");
  ArbReal out(a.precision());
  mpfr_log(out.raw_mut(), a.raw(), MPFR_RNDN);
  return out;
}

ArbReal pow(const ArbReal& a, long n) {
  if (n < 0 && a.is_zero()) throw DivisionByZero("zero to a negative power");
  ArbReal out(a.precision());
  mpfr_pow_si(out.raw_mut(), a.raw(), n, MPFR_RNDN);
  return out;
}

ArbReal root_pow(const ArbReal& a, long p, unsigned long r) {
  if (r == 0) throw DomainError("zeroth root");
  if (r % 2 == 0 && a.sign() < 0) throw DomainError("even root of a negative number");
  if (p < 0 && a.is_zero()) throw DivisionByZero("zero to a negative power");
  ArbReal out(a.precision());
  // (a^p)^(1/r) keeps one rounding in the integer power; the root is
  // correctly rounded by MPFR.
  mpfr_t tmp;
  mpfr_init2(tmp, a.precision().effective() + 32);
  mpfr_pow_si(tmp, a.raw(), p, MPFR_RNDN);
  mpfr_rootn_ui(out.raw_mut(), tmp, r, MPFR_RNDN);
  mpfr_clear(tmp);
  return out;
}

ArbReal abs(const ArbReal& a) { return a.abs(); }

ArbReal max(const ArbReal& a, const ArbReal& b) { return a < b ? b : a; }

ArbReal default_tolerance(Precision prec) {
  return ArbReal::pow10(-(prec.decimal_digits() - 10), prec);
}

}  // namespace modeq
