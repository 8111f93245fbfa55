#include "jumploci/cyclotomic.hpp"

#include <numeric>

namespace jumploci {

namespace {

// p(x) -> p(x^m)
UPoly stretch(const UPoly& p, long m) {
  if (m == 1 || p.is_zero()) return p;
  std::vector<Rational> v(static_cast<std::size_t>(p.degree() * m + 1));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) v[i * m] = p.coeffs()[i];
  return UPoly(std::move(v));
}

}  // namespace

Cyclotomic::Cyclotomic(const Rational& q) : order_(1), p_(UPoly::constant(q)) {}

Cyclotomic::Cyclotomic(long order, UPoly residue) : order_(order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  p_ = residue.degree() >= euler_phi(order) ? residue.mod(cyclotomic_poly(order)) : std::move(residue);
}

Cyclotomic Cyclotomic::root_of_unity(const Rational& angle) {
  Rational a = frac_mod1(angle);
  long n = a.get_den().get_si();
  long k = a.get_num().get_si();
  return Cyclotomic(n, UPoly::monomial(1, static_cast<std::size_t>(k)));
}

std::vector<Rational> Cyclotomic::coefficients() const {
  std::vector<Rational> v(static_cast<std::size_t>(euler_phi(order_)));
  for (std::size_t i = 0; i < p_.coeffs().size(); ++i) v[i] = p_.coeffs()[i];
  return v;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::logic_error("cyclotomic value is not rational");
  return p_.coeff(0);
}

Cyclotomic Cyclotomic::lifted(long multiple) const {
  if (multiple % order_) throw std::invalid_argument("lift target must be a multiple of the order");
  if (multiple == order_) return *this;
  return Cyclotomic(multiple, stretch(p_, multiple / order_));
}

Cyclotomic Cyclotomic::galois(long k) const {
  long kk = ((k % order_) + order_) % order_;
  if (order_ == 1) return *this;
  if (gcd_long(kk, order_) != 1) throw std::invalid_argument("galois exponent not coprime to order");
  return Cyclotomic(order_, stretch(p_, kk));
}

Cyclotomic Cyclotomic::normalized() const {
  if (is_rational()) return Cyclotomic(p_.coeff(0));
  const long n = order_;
  const auto target = coefficients();
  const std::size_t rows = target.size();
  for (long m = 1; m < n; ++m) {
    if (n % m) continue;
    // Solve sum_j c_j * lift(x^j) = element for c in Q^{phi(m)}.
    const long pm = euler_phi(m);
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(pm + 1));
    for (long j = 0; j < pm; ++j) {
      auto col = Cyclotomic(m, UPoly::monomial(1, static_cast<std::size_t>(j))).lifted(n).coefficients();
      for (std::size_t i = 0; i < rows; ++i) a[i][j] = col[i];
    }
    for (std::size_t i = 0; i < rows; ++i) a[i][pm] = target[i];
    std::size_t r = 0;
    std::vector<long> pivcol;
    for (long c = 0; c < pm && r < rows; ++c) {
      std::size_t p = r;
      while (p < rows && sgn(a[p][c]) == 0) ++p;
      if (p == rows) continue;
      std::swap(a[p], a[r]);
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == r || sgn(a[i][c]) == 0) continue;
        Rational f = a[i][c] / a[r][c];
        for (long k = c; k <= pm; ++k) a[i][k] -= f * a[r][k];
      }
      pivcol.push_back(c);
      ++r;
    }
    bool consistent = true;
    for (std::size_t i = r; i < rows && consistent; ++i)
      if (sgn(a[i][pm]) != 0) consistent = false;
    if (!consistent) continue;
    std::vector<Rational> sol(pm);
    for (std::size_t i = 0; i < r; ++i) sol[pivcol[i]] = a[i][pm] / a[i][pivcol[i]];
    return Cyclotomic(m, UPoly(std::move(sol)));
  }
  return *this;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  if (order_ == o.order_) return Cyclotomic(order_, p_ + o.p_);
  long l = lcm_long(order_, o.order_);
  return Cyclotomic(l, lifted(l).p_ + o.lifted(l).p_);
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (is_zero() || o.is_zero()) return Cyclotomic();
  if (order_ == o.order_) return Cyclotomic(order_, p_ * o.p_);
  long l = lcm_long(order_, o.order_);
  if (order_ == 1) return Cyclotomic(o.order_, o.p_.scaled(p_.coeff(0)));
  if (o.order_ == 1) return Cyclotomic(order_, p_.scaled(o.p_.coeff(0)));
  return Cyclotomic(l, lifted(l).p_ * o.lifted(l).p_);
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("cyclotomic inverse of zero");
  if (is_rational()) return Cyclotomic(1 / p_.coeff(0));
  UPoly s, t;
  upoly_xgcd(p_, cyclotomic_poly(order_), s, t);
  return Cyclotomic(order_, s);
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const {
  if (o.is_rational()) {
    if (o.is_zero()) throw std::domain_error("cyclotomic division by zero");
    return Cyclotomic(order_, p_.scaled(1 / o.p_.coeff(0)));
  }
  return *this * o.inverse();
}

Cyclotomic Cyclotomic::pow(long e) const {
  Cyclotomic base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Cyclotomic acc(1);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return jumploci::to_string(p_.coeff(0));
  return p_.to_string("zeta" + std::to_string(order_));
}

}  // namespace jumploci
