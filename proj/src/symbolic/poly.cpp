#include "modeq/symbolic/poly.hpp"

#include <algorithm>
#include <sstream>

namespace modeq::symbolic {

namespace {

std::size_t idx(Var v) { return static_cast<std::size_t>(v); }

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents minus(const Exponents& b, const Exponents& a) {
  Exponents out{};
  for (std::size_t i = 0; i < kVarCount; ++i) out[i] = static_cast<std::uint16_t>(b[i] - a[i]);
  return out;
}

Exponents plus(const Exponents& a, const Exponents& b) {
  Exponents out{};
  for (std::size_t i = 0; i < kVarCount; ++i) out[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return out;
}

}  // namespace

const char* var_name(Var v) {
  switch (v) {
    case Var::x: return "x";
    case Var::y: return "y";
    case Var::t: return "t";
    case Var::rho: return "rho";
    case Var::P: return "P";
    case Var::Q: return "Q";
    case Var::R: return "R";
  }
  return "?";
}

int total_degree(const Exponents& e) {
  int d = 0;
  for (auto k : e) d += k;
  return d;
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const int da = modeq::symbolic::total_degree(a);
  const int db = modeq::symbolic::total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

Poly::Poly(const mpq_class& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

Poly Poly::var(Var v) {
  Exponents e{};
  e[idx(v)] = 1;
  return monomial(1, e);
}

Poly Poly::monomial(const mpq_class& c, const Exponents& e) {
  Poly p;
  p.add_term(e, c);
  return p;
}

Poly Poly::from_univariate(const UPoly& p, Var v) {
  Poly out;
  for (int i = 0; i <= p.degree(); ++i) {
    Exponents e{};
    e[idx(v)] = static_cast<std::uint16_t>(i);
    out.add_term(e, p.coeff(i));
  }
  return out;
}

void Poly::add_term(const Exponents& e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Poly::total_degree() const {
  return terms_.empty() ? -1 : modeq::symbolic::total_degree(terms_.begin()->first);
}

int Poly::degree_in(Var v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max<int>(d, e[idx(v)]);
  return d;
}

mpq_class Poly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

std::pair<Exponents, mpq_class> Poly::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return *terms_.begin();
}

bool Poly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.get_den() == 1; });
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(plus(ea, eb), ca * cb);
  }
  return out;
}

Poly Poly::pow(unsigned n) const {
  Poly result(1);
  Poly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Poly Poly::substitute(Var v, const Poly& value) const {
  std::vector<Poly> powers{Poly(1)};
  Poly out;
  for (const auto& [e, c] : terms_) {
    const unsigned k = e[idx(v)];
    while (powers.size() <= k) powers.push_back(powers.back() * value);
    Exponents rest = e;
    rest[idx(v)] = 0;
    out += monomial(c, rest) * powers[k];
  }
  return out;
}

Poly Poly::substitute_fraction(const std::vector<std::pair<Var, Poly>>& numerators, const Poly& den) const {
  auto sub_degree = [&](const Exponents& e) {
    int d = 0;
    for (const auto& [v, num] : numerators) d += e[idx(v)];
    return d;
  };
  int k = 0;
  for (const auto& [e, c] : terms_) k = std::max(k, sub_degree(e));

  std::vector<Poly> den_powers{Poly(1)};
  while (static_cast<int>(den_powers.size()) <= k) den_powers.push_back(den_powers.back() * den);
  std::vector<std::vector<Poly>> num_powers(numerators.size(), std::vector<Poly>{Poly(1)});

  Poly out;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    Poly term(1);
    for (std::size_t i = 0; i < numerators.size(); ++i) {
      const auto& [v, num] = numerators[i];
      const unsigned p = e[idx(v)];
      auto& cache = num_powers[i];
      while (cache.size() <= p) cache.push_back(cache.back() * num);
      term = term * cache[p];
      rest[idx(v)] = 0;
    }
    out += monomial(c, rest) * term * den_powers[static_cast<std::size_t>(k - sub_degree(e))];
  }
  return out;
}

std::map<int, Poly> Poly::collect(Var v) const {
  std::map<int, Poly> out;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[idx(v)] = 0;
    out[e[idx(v)]].add_term(rest, c);
  }
  return out;
}

UPoly Poly::to_univariate(Var v) const {
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(std::max(degree_in(v), 0)) + 1);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (i != idx(v) && e[i] != 0) throw DomainError("polynomial is not univariate in " + std::string(var_name(v)));
    }
    coeffs[e[idx(v)]] = c;
  }
  return UPoly(std::move(coeffs));
}

mpq_class Poly::eval(const std::map<Var, mpq_class>& at) const {
  mpq_class out = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class term = c;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      auto it = at.find(static_cast<Var>(i));
      if (it == at.end()) throw DomainError(std::string("no value for ") + var_name(static_cast<Var>(i)));
      for (unsigned k = 0; k < e[i]; ++k) term *= it->second;
    }
    out += term;
  }
  return out;
}

ArbReal Poly::eval(const std::map<Var, ArbReal>& at, Precision prec) const {
  ArbReal out(prec);
  for (const auto& [e, c] : terms_) {
    ArbReal term = ArbReal::from_rational(c, prec);
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      auto it = at.find(static_cast<Var>(i));
      if (it == at.end()) throw DomainError(std::string("no value for ") + var_name(static_cast<Var>(i)));
      term *= modeq::pow(it->second, e[i]);
    }
    out += term;
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c0] : terms_) {
    mpq_class c = c0;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    c = abs(c);
    first = false;
    const bool constant = modeq::symbolic::total_degree(e) == 0;
    if (constant || c != 1) os << c;
    bool need_star = !constant && c != 1;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << var_name(static_cast<Var>(i));
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

DivisionResult divide(const Poly& f, const std::vector<Poly>& divisors) {
  for (const auto& g : divisors) {
    if (g.is_zero()) throw DivisionByZero("division by the zero polynomial");
  }
  DivisionResult out{std::vector<Poly>(divisors.size()), Poly()};
  Poly p = f;
  while (!p.is_zero()) {
    const auto [lp_e, lp_c] = p.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const auto [lg_e, lg_c] = divisors[i].leading_term();
      if (!divides(lg_e, lp_e)) continue;
      const Poly factor = Poly::monomial(lp_c / lg_c, minus(lp_e, lg_e));
      out.quotients[i] += factor;
      p -= factor * divisors[i];
      reduced = true;
      break;
    }
    if (!reduced) {
      const Poly lead = Poly::monomial(lp_c, lp_e);
      out.remainder += lead;
      p -= lead;
    }
  }
  return out;
}

}  // namespace modeq::symbolic
