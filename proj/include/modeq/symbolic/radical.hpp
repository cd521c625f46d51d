#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>

#include "modeq/numerics.hpp"
#include "modeq/symbolic/poly.hpp"
#include "modeq/symbolic/upoly.hpp"

namespace modeq::symbolic {

/// Q(t)(u, v) with u^2 = U(t) and v^2 = t. Elements are written over the
/// basis 1, u, v, uv with coefficients in Q(t).
class RadicalTower {
 public:
  /// U must not be a constant multiple of a square times t, otherwise the
  /// basis is not independent; this is not checked.
  explicit RadicalTower(UPoly radicand);

  const UPoly& radicand() const { return radicand_; }
  const RatFunc& u_squared() const { return u2_; }
  const RatFunc& v_squared() const { return v2_; }
  /// u'/u = U'/(2U), v'/v = 1/(2t).
  const RatFunc& u_log_derivative() const { return du_; }
  const RatFunc& v_log_derivative() const { return dv_; }

 private:
  UPoly radicand_;
  RatFunc u2_, v2_, du_, dv_;
};

class RadElem {
 public:
  enum Basis : std::size_t { One = 0, U = 1, V = 2, UV = 3 };

  RadElem(std::shared_ptr<const RadicalTower> tower, RatFunc c0 = RatFunc());
  static RadElem u(std::shared_ptr<const RadicalTower> tower);
  static RadElem v(std::shared_ptr<const RadicalTower> tower);
  static RadElem t(std::shared_ptr<const RadicalTower> tower);

  const RatFunc& coeff(Basis b) const { return c_[b]; }
  void set_coeff(Basis b, RatFunc c) { c_[b] = std::move(c); }
  const std::shared_ptr<const RadicalTower>& tower() const { return tower_; }
  bool is_zero() const;

  RadElem operator-() const;
  friend RadElem operator+(const RadElem& a, const RadElem& b);
  friend RadElem operator-(const RadElem& a, const RadElem& b);
  friend RadElem operator*(const RadElem& a, const RadElem& b);
  friend RadElem operator*(const RadElem& a, const RatFunc& s);
  friend RadElem operator*(const RatFunc& s, const RadElem& a) { return a * s; }
  RadElem pow(unsigned n) const;

  /// d/dt.
  RadElem derivative() const;

  /// Value at t = t0 with u = sqrt(U(t0)) and v = sqrt(t0), both positive.
  ArbReal evaluate(const ArbReal& t0) const;

  std::string to_string() const;

 private:
  void check_same_tower(const RadElem& other) const;
  std::shared_ptr<const RadicalTower> tower_;
  std::array<RatFunc, 4> c_;
};

/// Evaluates a polynomial with the listed variables bound to tower elements.
RadElem substitute(const Poly& p, const std::map<Var, RadElem>& values,
                   const std::shared_ptr<const RadicalTower>& tower);

}  // namespace modeq::symbolic
