#include "modeq/qseries.hpp"

#include <cmath>
#include <limits>
#include <regex>

namespace modeq {

QPoint::QPoint(mpq_class q) : value(std::move(q)) {
  value.canonicalize();
  if (abs(value) >= 1) throw DomainError("|q| must be below 1, got " + value.get_str());
}

mpq_class parse_rational(const std::string& text) {
  static const std::regex kRational(R"(^([+-]?\d+)(?:/(\d+))?$)");
  static const std::regex kDecimal(R"(^([+-]?)(\d*)\.?(\d*)(?:[eE]([+-]?\d+))?$)");
  std::smatch m;
  if (std::regex_match(text, m, kRational)) {
    mpz_class num(m[1].str());
    mpz_class den(m[2].matched ? m[2].str() : std::string("1"));
    if (den == 0) throw DomainError("zero denominator in '" + text + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
  if (std::regex_match(text, m, kDecimal) && (m[2].length() + m[3].length()) > 0) {
    mpz_class num(m[2].str() + m[3].str());
    long exponent = -static_cast<long>(m[3].length());
    if (m[4].matched) exponent += std::stol(m[4].str());
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    mpq_class q = exponent >= 0 ? mpq_class(num * scale) : mpq_class(num, scale);
    q.canonicalize();
    return m[1].str() == "-" ? mpq_class(-q) : q;
  }
  throw DomainError("cannot parse '" + text + "' (expected a rational such as 1/10)");
}

QPoint QPoint::parse(const std::string& text) { return QPoint(parse_rational(text)); }

namespace qseries {

namespace {

void require_inside_unit_disk(const ArbReal& q, const char* what) {
  if (!(abs(q) < 1)) throw DomainError(std::string(what) + ": |q| must be below 1");
}

// Smallest N >= 1 with growth(N) * (-log2|q|) > bits.
template <typename Growth>
long smallest_index(double neg_log2_q, long bits, Growth growth) {
  if (std::isinf(neg_log2_q)) return 1;
  long n = 1;
  while (growth(n) * neg_log2_q <= static_cast<double>(bits)) ++n;
  return n;
}

ArbReal two_to(long e, Precision prec) {
  ArbReal out(prec);
  mpfr_set_ui_2exp(out.raw_mut(), 1, e, MPFR_RNDN);
  return out;
}

}  // namespace

double log2_abs(const ArbReal& x) {
  if (x.is_zero()) return -std::numeric_limits<double>::infinity();
  long e = 0;
  const double mant = mpfr_get_d_2exp(&e, x.raw(), MPFR_RNDN);
  return std::log2(std::fabs(mant)) + static_cast<double>(e);
}

TruncationPlan pochhammer_plan(const ArbReal& x, const ArbReal& q, long target_bits) {
  require_inside_unit_disk(q, "pochhammer_inf");
  const Precision prec = q.precision();
  if (x.is_zero()) return {0, ArbReal(prec)};
  const ArbReal one_minus = 1 - abs(q);
  // |x| |q|^K / (1 - |q|) < 2^-target
  const double lx = log2_abs(x) - log2_abs(one_minus);
  const double lq = log2_abs(q);
  long k = 1;
  if (!std::isinf(lq)) {
    while (lx + static_cast<double>(k) * lq >= -static_cast<double>(target_bits)) ++k;
  }
  ArbReal tail = std::isinf(lq) ? ArbReal(prec) : abs(x) * pow(abs(q), k) / one_minus;
  return {k, tail};
}

ArbReal pochhammer_inf(const ArbReal& x, const ArbReal& q, long n_max) {
  require_inside_unit_disk(q, "pochhammer_inf");
  ArbReal product(1, wider(x.precision(), q.precision()));
  ArbReal xq = x;
  for (long k = 0; k < n_max; ++k) {
    product *= 1 - xq;
    xq *= q;
  }
  return product;
}

ArbReal pochhammer_inf(const ArbReal& x, const ArbReal& q) {
  const long bits = std::max(x.precision().effective(), q.precision().effective());
  return pochhammer_inf(x, q, pochhammer_plan(x, q, bits).n_max);
}

ArbReal theta_f(const ArbReal& a, const ArbReal& b) {
  const ArbReal ab = a * b;
  if (!(abs(ab) < 1)) throw DomainError("theta_f: |ab| must be below 1");
  const Precision prec = ab.precision();
  const ArbReal eps = two_to(-prec.effective(), prec);
  const ArbReal half = ArbReal::from_ratio(1, 2, prec);

  // Term n+1 = term n * a (ab)^n going up, and with a <-> b going down.
  auto sweep = [&](const ArbReal& lead) {
    ArbReal sum(prec);
    ArbReal term(1, prec);
    ArbReal ratio = lead;
    ArbReal largest(1, prec);
    for (;;) {
      term *= ratio;
      sum += term;
      if (abs(term) > largest) largest = abs(term);
      if (term.is_zero() || (abs(term) < eps * largest && abs(ratio) < half)) break;
      ratio *= ab;
    }
    return sum;
  };
  return 1 + sweep(a) + sweep(b);
}

ArbReal theta_f_product(const ArbReal& a, const ArbReal& b) {
  const ArbReal ab = a * b;
  if (!(abs(ab) < 1)) throw DomainError("theta_f_product: |ab| must be below 1");
  return pochhammer_inf(-a, ab) * pochhammer_inf(-b, ab) * pochhammer_inf(ab, ab);
}

TruncationPlan phi_plan(const ArbReal& q) {
  require_inside_unit_disk(q, "phi");
  const Precision prec = q.precision();
  const long n = smallest_index(-log2_abs(q), prec.effective(),
                                [](long k) { return static_cast<double>(k) * static_cast<double>(k); });
  if (q.is_zero()) return {1, ArbReal(prec)};
  return {n, 2 * pow(abs(q), n * n) / (1 - abs(q))};
}

TruncationPlan psi_plan(const ArbReal& q) {
  require_inside_unit_disk(q, "psi");
  const Precision prec = q.precision();
  const long n = smallest_index(-log2_abs(q), prec.effective(), [](long k) {
    return static_cast<double>(k) * static_cast<double>(k + 1) / 2.0;
  });
  if (q.is_zero()) return {1, ArbReal(prec)};
  return {n, pow(abs(q), n * (n + 1) / 2) / (1 - abs(q))};
}

ArbReal phi_series(const ArbReal& q, long n_max) {
  require_inside_unit_disk(q, "phi");
  // q^{(n+1)^2} = q^{n^2} * q^{2n+1}
  ArbReal sum(q.precision());
  ArbReal term(1, q.precision());
  ArbReal step = q;
  const ArbReal q2 = q * q;
  for (long n = 1; n < n_max; ++n) {
    term *= step;
    sum += term;
    step *= q2;
  }
  return 1 + 2 * sum;
}

ArbReal phi(const ArbReal& q) { return phi_series(q, phi_plan(q).n_max); }

ArbReal phi_product(const ArbReal& q) {
  require_inside_unit_disk(q, "phi_product");
  const ArbReal q2 = q * q;
  const ArbReal a = pochhammer_inf(-q, q2);
  return a * a * pochhammer_inf(q2, q2);
}

ArbReal psi_series(const ArbReal& q, long n_max) {
  require_inside_unit_disk(q, "psi");
  // q^{(n+1)(n+2)/2} = q^{n(n+1)/2} * q^{n+1}
  ArbReal sum(1, q.precision());
  ArbReal term(1, q.precision());
  ArbReal step = q;
  for (long n = 1; n < n_max; ++n) {
    term *= step;
    sum += term;
    step *= q;
  }
  return sum;
}

ArbReal psi(const ArbReal& q) { return psi_series(q, psi_plan(q).n_max); }

ArbReal psi_product(const ArbReal& q) {
  require_inside_unit_disk(q, "psi_product");
  const ArbReal q3 = q * q * q;
  return theta_f_product(q, q3);
}

}  // namespace qseries
}  // namespace modeq
