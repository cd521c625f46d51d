#include "modeq/symbolic/radical.hpp"

#include <vector>

namespace modeq::symbolic {

RadicalTower::RadicalTower(UPoly radicand)
    : radicand_(std::move(radicand)),
      u2_(radicand_),
      v2_(UPoly::t()),
      du_(RatFunc(radicand_.derivative(), radicand_ * mpq_class(2))),
      dv_(RatFunc(UPoly::constant(1), UPoly::monomial(2, 1))) {
  if (radicand_.is_zero()) throw DomainError("radicand must be nonzero");
}

RadElem::RadElem(std::shared_ptr<const RadicalTower> tower, RatFunc c0) : tower_(std::move(tower)) {
  c_[One] = std::move(c0);
}

RadElem RadElem::u(std::shared_ptr<const RadicalTower> tower) {
  RadElem e(std::move(tower));
  e.c_[U] = RatFunc(1);
  return e;
}

RadElem RadElem::v(std::shared_ptr<const RadicalTower> tower) {
  RadElem e(std::move(tower));
  e.c_[V] = RatFunc(1);
  return e;
}

RadElem RadElem::t(std::shared_ptr<const RadicalTower> tower) { return RadElem(std::move(tower), UPoly::t()); }

bool RadElem::is_zero() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void RadElem::check_same_tower(const RadElem& other) const {
  if (tower_ != other.tower_) throw DomainError("radical elements from different towers");
}

RadElem RadElem::operator-() const {
  RadElem out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

RadElem operator+(const RadElem& a, const RadElem& b) {
  a.check_same_tower(b);
  RadElem out = a;
  for (std::size_t i = 0; i < 4; ++i) out.c_[i] += b.c_[i];
  return out;
}

RadElem operator-(const RadElem& a, const RadElem& b) {
  a.check_same_tower(b);
  RadElem out = a;
  for (std::size_t i = 0; i < 4; ++i) out.c_[i] -= b.c_[i];
  return out;
}

RadElem operator*(const RadElem& a, const RadElem& b) {
  a.check_same_tower(b);
  const RatFunc& uu = a.tower_->u_squared();
  const RatFunc& vv = a.tower_->v_squared();
  const auto& x = a.c_;
  const auto& y = b.c_;
  RadElem out(a.tower_);
  out.c_[RadElem::One] = x[0] * y[0] + uu * (x[1] * y[1]) + vv * (x[2] * y[2]) + uu * vv * (x[3] * y[3]);
  out.c_[RadElem::U] = x[0] * y[1] + x[1] * y[0] + vv * (x[2] * y[3] + x[3] * y[2]);
  out.c_[RadElem::V] = x[0] * y[2] + x[2] * y[0] + uu * (x[1] * y[3] + x[3] * y[1]);
  out.c_[RadElem::UV] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1];
  return out;
}

RadElem operator*(const RadElem& a, const RatFunc& s) {
  RadElem out = a;
  for (auto& c : out.c_) c *= s;
  return out;
}

RadElem RadElem::pow(unsigned n) const {
  RadElem result(tower_, RatFunc(1));
  RadElem base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

RadElem RadElem::derivative() const {
  const RatFunc& du = tower_->u_log_derivative();
  const RatFunc& dv = tower_->v_log_derivative();
  RadElem out(tower_);
  out.c_[One] = c_[One].derivative();
  out.c_[U] = c_[U].derivative() + c_[U] * du;
  out.c_[V] = c_[V].derivative() + c_[V] * dv;
  out.c_[UV] = c_[UV].derivative() + c_[UV] * (du + dv);
  return out;
}

ArbReal RadElem::evaluate(const ArbReal& t0) const {
  const ArbReal uval = sqrt(tower_->radicand().eval(t0));
  const ArbReal vval = sqrt(t0);
  return c_[One].eval(t0) + c_[U].eval(t0) * uval + c_[V].eval(t0) * vval + c_[UV].eval(t0) * uval * vval;
}

std::string RadElem::to_string() const {
  static const char* names[4] = {"", "u", "v", "u*v"};
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c_[i].to_string() + ")";
    if (i > 0) out += std::string("*") + names[i];
  }
  return out.empty() ? "0" : out;
}

RadElem substitute(const Poly& p, const std::map<Var, RadElem>& values,
                   const std::shared_ptr<const RadicalTower>& tower) {
  std::map<Var, std::vector<RadElem>> powers;
  for (const auto& [v, val] : values) powers[v].push_back(RadElem(tower, RatFunc(1)));

  RadElem out(tower);
  for (const auto& [e, c] : p.terms()) {
    RadElem term(tower, RatFunc(c));
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      const Var v = static_cast<Var>(i);
      auto it = values.find(v);
      if (it == values.end()) throw DomainError(std::string("no value for ") + var_name(v));
      auto& cache = powers[v];
      while (cache.size() <= e[i]) cache.push_back(cache.back() * it->second);
      term = term * cache[e[i]];
    }
    out = out + term;
  }
  return out;
}

}  // namespace modeq::symbolic
