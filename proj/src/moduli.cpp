#include "modeq/moduli.hpp"

#include <numeric>

#include "modeq/hypergeom.hpp"

namespace modeq {

DegreePair::DegreePair(int n1_, int n2_) : n1(n1_), n2(n2_) {
  if (n1 <= 0 || n2 <= n1) throw DomainError("degree pair needs 0 < n1 < n2");
  if (std::gcd(n1, n2) != 1) throw DomainError("degree pair must be coprime");
}

std::string DegreePair::to_string() const {
  return "(" + std::to_string(n1) + "," + std::to_string(n2) + ")";
}

namespace moduli {

namespace {

void require_open_unit(const ArbReal& q) {
  if (!(q > 0 && q < 1)) throw DomainError("moduli need 0 < q < 1");
}

}  // namespace

ArbReal alpha_from_q(const ArbReal& q) {
  require_open_unit(q);
  const ArbReal ratio = qseries::psi(q * q) / qseries::phi(q);
  return 16 * q * pow(ratio, 4);
}

ArbReal alpha_complement_from_q(const ArbReal& q) {
  require_open_unit(q);
  return pow(qseries::phi(-q) / qseries::phi(q), 4);
}

ModuliPair moduli_pair(const ArbReal& q, DegreePair degrees) {
  require_open_unit(q);
  ArbReal alpha = alpha_from_q(pow(q, degrees.n1));
  ArbReal beta = alpha_from_q(pow(q, degrees.n2));
  ArbReal x = root_pow(alpha * beta, 1, 8);
  ArbReal y = root_pow((1 - alpha) * (1 - beta), 1, 8);
  return ModuliPair{q, degrees, std::move(alpha), std::move(beta), std::move(x), std::move(y)};
}

MultiplierSample multiplier(const ArbReal& q, DegreePair degrees) {
  require_open_unit(q);
  const ArbReal q1 = pow(q, degrees.n1);
  const ArbReal qn = pow(q, degrees.n2);
  ArbReal z1 = pow(qseries::phi(q1), 2);
  ArbReal zn = pow(qseries::phi(qn), 2);
  ArbReal m = z1 / zn;
  MultiplierSample out{degrees.degree(), std::move(z1), std::move(zn), std::move(m), std::nullopt};
  if (degrees.n1 == 1 && q <= ArbReal::from_ratio(1, 10, q.precision())) {
    out.m_hypergeom = hypergeom::hyp2f1_half(alpha_from_q(q1)) / hypergeom::hyp2f1_half(alpha_from_q(qn));
  }
  return out;
}

int russell_sign(DegreePair degrees) {
  const int total = degrees.n1 + degrees.n2;
  if (total % 8 != 0) {
    throw SignUndefined("Russell sign needs 8 | n1 + n2, got " + degrees.to_string());
  }
  return (total / 8) % 2 == 0 ? 1 : -1;
}

RussellTriple russell_triple(const ModuliPair& mp) {
  const int s = russell_sign(mp.degrees);
  const ArbReal sum = mp.x + mp.y;
  const ArbReal prod = mp.x * mp.y;
  return RussellTriple{1 + s * sum, 4 * (sum + s * prod), 4 * prod, s};
}

}  // namespace moduli
}  // namespace modeq
