#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "modeq/numerics.hpp"
#include "modeq/symbolic/upoly.hpp"

namespace modeq::symbolic {

/// Variables in monomial-order precedence: x > y > t > rho > P > Q > R.
enum class Var : std::uint8_t { x, y, t, rho, P, Q, R };
inline constexpr std::size_t kVarCount = 7;

const char* var_name(Var v);

using Exponents = std::array<std::uint16_t, kVarCount>;

int total_degree(const Exponents& e);

/// Graded lexicographic order, larger monomials first.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Q.
class Poly {
 public:
  using TermMap = std::map<Exponents, mpq_class, GrlexGreater>;

  Poly() = default;
  Poly(const mpq_class& c);  // NOLINT
  Poly(long c) : Poly(mpq_class(c)) {}  // NOLINT
  static Poly var(Var v);
  static Poly monomial(const mpq_class& c, const Exponents& e);
  static Poly from_univariate(const UPoly& p, Var v);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  int total_degree() const;
  int degree_in(Var v) const;
  mpq_class coefficient(const Exponents& e) const;
  /// Leading term under grlex; throws DomainError on the zero polynomial.
  std::pair<Exponents, mpq_class> leading_term() const;
  bool has_integer_coefficients() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  Poly pow(unsigned n) const;

  /// Replaces v by `value` everywhere.
  Poly substitute(Var v, const Poly& value) const;
  /// Replaces each listed variable v by num_v / den and clears the
  /// denominator: the result is den^k times the substituted polynomial,
  /// k being the largest combined degree of the listed variables in a term.
  Poly substitute_fraction(const std::vector<std::pair<Var, Poly>>& numerators, const Poly& den) const;
  /// Groups terms by the power of v: result[k] is the coefficient of v^k.
  std::map<int, Poly> collect(Var v) const;
  /// Only valid when v is the sole variable present.
  UPoly to_univariate(Var v) const;

  mpq_class eval(const std::map<Var, mpq_class>& at) const;
  ArbReal eval(const std::map<Var, ArbReal>& at, Precision prec) const;

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const mpq_class& c);
  TermMap terms_;
};

struct DivisionResult {
  std::vector<Poly> quotients;
  Poly remainder;
};

/// Multivariate division in grlex order: f = sum q_i g_i + r with no term
/// of r divisible by any leading term of g_i.
DivisionResult divide(const Poly& f, const std::vector<Poly>& divisors);

}  // namespace modeq::symbolic
