#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jumploci {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised for malformed user input; `path` is a JSON-pointer style location.
class InputError : public std::runtime_error {
 public:
  InputError(std::string path, const std::string& what)
      : std::runtime_error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Raised when an input is well formed but outside what the library handles.
class UnsupportedInput : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }

// Representative of q mod 1 in [0,1).
Rational frac_mod1(const Rational& q);
Integer floor_q(const Rational& q);

long euler_phi(long n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);
Integer factorial(unsigned n);

// Dense univariate polynomial over Q, coefficient i multiplies x^i.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c);
  static UPoly monomial(const Rational& c, std::size_t deg);
  static UPoly x_pow_minus_one(std::size_t n);  // x^n - 1

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& lead() const { return c_.back(); }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator-() const;
  UPoly scaled(const Rational& s) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  // Euclidean division; divisor must be nonzero.
  void divmod(const UPoly& d, UPoly& q, UPoly& r) const;
  UPoly mod(const UPoly& d) const;
  UPoly monic() const;
  Rational eval(const Rational& x) const;
  UPoly derivative() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

UPoly upoly_gcd(const UPoly& a, const UPoly& b);  // monic, gcd(0,0) = 0
// s*a + t*b = g with g = upoly_gcd(a,b).
UPoly upoly_xgcd(const UPoly& a, const UPoly& b, UPoly& s, UPoly& t);
UPoly squarefree_part(const UPoly& p);
// x^e mod m by repeated squaring.
UPoly upoly_powmod_x(const Integer& e, const UPoly& m);

// N-th cyclotomic polynomial; cached, thread safe.
const UPoly& cyclotomic_poly(long n);

}  // namespace jumploci
