#include "modeq/symbolic/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace modeq::symbolic {

UPoly::UPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

UPoly UPoly::constant(const mpq_class& c) { return UPoly(std::vector<mpq_class>{c}); }

UPoly UPoly::monomial(const mpq_class& c, int degree) {
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return UPoly(std::move(coeffs));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class UPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

UPoly UPoly::operator-() const {
  UPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UPoly& UPoly::operator+=(const UPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(out));
}

UPoly operator*(UPoly a, const mpq_class& c) {
  for (auto& x : a.coeffs_) x *= c;
  a.trim();
  return a;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  UPoly rem = a;
  if (a.degree() < b.degree()) return {UPoly{}, rem};
  std::vector<mpq_class> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const mpq_class lead_inv = 1 / b.leading();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    const mpq_class factor = rem.leading() * lead_inv;
    quot[static_cast<std::size_t>(shift)] = factor;
    for (int i = 0; i <= b.degree(); ++i) {
      rem.coeffs_[static_cast<std::size_t>(i + shift)] -= factor * b.coeffs_[static_cast<std::size_t>(i)];
    }
    rem.trim();
  }
  return {UPoly(std::move(quot)), rem};
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / leading());
}

UPoly UPoly::derivative() const {
  if (degree() <= 0) return {};
  std::vector<mpq_class> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UPoly(std::move(out));
}

UPoly UPoly::pow(unsigned n) const {
  UPoly result = constant(1);
  UPoly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

mpq_class UPoly::eval(const mpq_class& at) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

ArbReal UPoly::eval(const ArbReal& at) const {
  ArbReal acc(at.precision());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at + ArbReal::from_rational(*it, at.precision());
  }
  return acc;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    mpq_class c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    c = abs(c);
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

RatFunc::RatFunc(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = UPoly::constant(1);
    return;
  }
  const UPoly g = UPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = UPoly::divmod(num_, g).first;
    den_ = UPoly::divmod(den_, g).first;
  }
  const mpq_class lead = den_.leading();
  if (lead != 1) {
    num_ = num_ * (1 / lead);
    den_ = den_ * (1 / lead);
  }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DivisionByZero("rational function division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::derivative() const {
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

mpq_class RatFunc::eval(const mpq_class& at) const {
  const mpq_class d = den_.eval(at);
  if (d == 0) throw DivisionByZero("rational function evaluated at a pole");
  return num_.eval(at) / d;
}

ArbReal RatFunc::eval(const ArbReal& at) const { return num_.eval(at) / den_.eval(at); }

std::string RatFunc::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace modeq::symbolic
