#pragma once

#include <string>

#include "jumploci/exact.hpp"

namespace jumploci {

// Element of Q(zeta_N) in the power basis modulo Phi_N.
// Arithmetic between different orders lifts to the lcm; results are not
// shrunk back automatically, call normalized() for the minimal order.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1) {}
  Cyclotomic(const Rational& q);  // NOLINT(google-explicit-constructor)
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}  // NOLINT
  Cyclotomic(long order, UPoly residue);

  // e^{2 pi i angle} for a rational angle.
  static Cyclotomic root_of_unity(const Rational& angle);

  long order() const { return order_; }
  const UPoly& residue() const { return p_; }
  std::vector<Rational> coefficients() const;  // length phi(order)

  bool is_zero() const { return p_.is_zero(); }
  bool is_rational() const { return p_.degree() <= 0; }
  Rational rational_value() const;  // requires is_rational()

  Cyclotomic lifted(long multiple) const;
  Cyclotomic normalized() const;
  Cyclotomic galois(long k) const;  // zeta -> zeta^k, gcd(k, order) = 1
  Cyclotomic conj() const { return galois(-1); }

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator/(const Cyclotomic& o) const;
  Cyclotomic operator-() const { return Cyclotomic(order_, -p_); }
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }
  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;

  bool operator==(const Cyclotomic& o) const { return (*this - o).is_zero(); }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  long order_;
  UPoly p_;
};

inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }

}  // namespace jumploci
