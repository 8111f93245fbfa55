#include "jumploci/exact.hpp"

#include <map>
#include <mutex>

namespace jumploci {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto strip = [](std::string& x) {
    while (!x.empty() && (x.front() == ' ' || x.front() == '+')) x.erase(x.begin());
    while (!x.empty() && x.back() == ' ') x.pop_back();
  };
  strip(s);
  if (s.empty()) throw InputError("", "empty rational literal");
  auto valid_int = [](const std::string& x) {
    std::size_t i = (!x.empty() && x[0] == '-') ? 1 : 0;
    if (i >= x.size()) return false;
    for (; i < x.size(); ++i)
      if (x[i] < '0' || x[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw InputError("", "malformed rational literal '" + s + "'");
  Integer d(den);
  if (d == 0) throw InputError("", "zero denominator in '" + s + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer floor_q(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

Rational frac_mod1(const Rational& q) { return q - Rational(floor_q(q)); }

long gcd_long(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

// ---- UPoly ----

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(const Rational& c, std::size_t deg) {
  std::vector<Rational> v(deg + 1);
  v[deg] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::x_pow_minus_one(std::size_t n) {
  std::vector<Rational> v(n + 1);
  v[0] = -1;
  v[n] += 1;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return UPoly(std::move(v));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> v(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return UPoly(std::move(v));
}

UPoly UPoly::scaled(const Rational& s) const {
  if (sgn(s) == 0) return {};
  UPoly r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

void UPoly::divmod(const UPoly& d, UPoly& q, UPoly& r) const {
  if (d.is_zero()) throw std::domain_error("UPoly division by zero");
  std::vector<Rational> rem = c_;
  std::vector<Rational> quo(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0);
  const std::size_t dd = d.c_.size() - 1;
  const Rational inv_lead = 1 / d.c_.back();
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (sgn(rem[i]) == 0) continue;
    Rational f = rem[i] * inv_lead;
    quo[i - dd] = f;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.c_[j];
  }
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

UPoly UPoly::mod(const UPoly& d) const {
  UPoly q, r;
  divmod(d, q, r);
  return r;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / c_.back());
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(v));
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (sgn(c_[i]) == 0) continue;
    Rational c = c_[i];
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    bool unit = c == 1;
    if (!unit || i == 0) out += jumploci::to_string(c);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x.mod(y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly upoly_xgcd(const UPoly& a, const UPoly& b, UPoly& s, UPoly& t) {
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(1), s1;
  UPoly t0, t1 = UPoly::constant(1);
  while (!r1.is_zero()) {
    UPoly q, r;
    r0.divmod(r1, q, r);
    UPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = {};
    t = {};
    return r0;
  }
  Rational inv = 1 / r0.lead();
  s = s0.scaled(inv);
  t = t0.scaled(inv);
  return r0.scaled(inv);
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  UPoly g = upoly_gcd(p, p.derivative());
  UPoly q, r;
  p.monic().divmod(g, q, r);
  return q.monic();
}

UPoly upoly_powmod_x(const Integer& e, const UPoly& m) {
  UPoly result = UPoly::constant(1).mod(m);
  UPoly base = UPoly::monomial(1, 1).mod(m);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result).mod(m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * base).mod(m);
  }
  return result;
}

const UPoly& cyclotomic_poly(long n) {
  static std::mutex mu;
  static std::map<long, UPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  UPoly p = UPoly::x_pow_minus_one(static_cast<std::size_t>(n));
  for (long d = 1; d < n; ++d) {
    if (n % d) continue;
    UPoly q, r;
    p.divmod(cyclotomic_poly(d), q, r);
    p = q;
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

}  // namespace jumploci
