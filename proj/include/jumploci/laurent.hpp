#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "jumploci/cyclotomic.hpp"
#include "jumploci/exact.hpp"

namespace jumploci {

using Exponent = std::vector<long>;

inline std::string coeff_to_string(const Rational& q) { return to_string(q); }
inline std::string coeff_to_string(const Cyclotomic& c) { return c.to_string(); }
inline bool coeff_is_one(const Rational& q) { return q == 1; }
inline bool coeff_is_one(const Cyclotomic& c) { return c.is_rational() && c.rational_value() == 1; }

// Multivariable Laurent polynomial with coefficients in a field K
// (Rational or Cyclotomic). Terms with zero coefficient are never stored.
template <class K>
class BasicLaurent {
 public:
  using Coeff = K;
  using TermMap = std::map<Exponent, K>;

  BasicLaurent() = default;
  explicit BasicLaurent(int num_vars) : n_(num_vars) {}

  static BasicLaurent constant(int num_vars, const K& c) {
    BasicLaurent f(num_vars);
    if (!jumploci::is_zero(c)) f.t_.emplace(Exponent(num_vars, 0), c);
    return f;
  }
  static BasicLaurent one(int num_vars) { return constant(num_vars, K(1)); }
  static BasicLaurent monomial(const Exponent& e, const K& c) {
    BasicLaurent f(static_cast<int>(e.size()));
    if (!jumploci::is_zero(c)) f.t_.emplace(e, c);
    return f;
  }
  static BasicLaurent variable(int num_vars, int i) {
    Exponent e(num_vars, 0);
    e.at(i) = 1;
    return monomial(e, K(1));
  }
  // t^e - c
  static BasicLaurent binomial(const Exponent& e, const K& c) {
    return monomial(e, K(1)) - constant(static_cast<int>(e.size()), c);
  }

  int num_vars() const { return n_; }
  const TermMap& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_monomial() const { return t_.size() == 1; }
  bool is_constant() const {
    return t_.empty() || (t_.size() == 1 && std::all_of(t_.begin()->first.begin(), t_.begin()->first.end(),
                                                        [](long x) { return x == 0; }));
  }
  K coefficient(const Exponent& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? K(0) : it->second;
  }
  // Lexicographically largest term.
  const std::pair<const Exponent, K>& leading() const { return *t_.rbegin(); }
  const std::pair<const Exponent, K>& trailing() const { return *t_.begin(); }

  void add_term(const Exponent& e, const K& c) {
    if (jumploci::is_zero(c)) return;
    auto [it, inserted] = t_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (jumploci::is_zero(it->second)) t_.erase(it);
    }
  }

  BasicLaurent operator+(const BasicLaurent& o) const {
    check_vars(o);
    BasicLaurent r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
  }
  BasicLaurent operator-() const {
    BasicLaurent r = *this;
    for (auto& kv : r.t_) kv.second = -kv.second;
    return r;
  }
  BasicLaurent operator-(const BasicLaurent& o) const {
    check_vars(o);
    BasicLaurent r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, -c);
    return r;
  }
  BasicLaurent operator*(const BasicLaurent& o) const {
    check_vars(o);
    BasicLaurent r(n_);
    Exponent e(n_);
    for (const auto& [e1, c1] : t_)
      for (const auto& [e2, c2] : o.t_) {
        for (int i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
        r.add_term(e, c1 * c2);
      }
    return r;
  }
  BasicLaurent& operator+=(const BasicLaurent& o) { return *this = *this + o; }
  BasicLaurent& operator-=(const BasicLaurent& o) { return *this = *this - o; }
  BasicLaurent& operator*=(const BasicLaurent& o) { return *this = *this * o; }

  BasicLaurent scaled(const K& s) const {
    if (jumploci::is_zero(s)) return BasicLaurent(n_);
    BasicLaurent r = *this;
    for (auto& kv : r.t_) kv.second *= s;
    return r;
  }
  BasicLaurent shifted(const Exponent& by) const {
    BasicLaurent r(n_);
    for (const auto& [e, c] : t_) {
      Exponent f = e;
      for (int i = 0; i < n_; ++i) f[i] += by[i];
      r.t_.emplace_hint(r.t_.end(), std::move(f), c);
    }
    return r;
  }
  BasicLaurent pow(unsigned k) const {
    BasicLaurent acc = one(n_), base = *this;
    while (k) {
      if (k & 1) acc *= base;
      base *= base;
      k >>= 1;
    }
    return acc;
  }
  // t_i -> t_i^{-1}
  BasicLaurent conj() const {
    BasicLaurent r(n_);
    for (const auto& [e, c] : t_) {
      Exponent f = e;
      for (auto& x : f) x = -x;
      r.t_.emplace(std::move(f), c);
    }
    return r;
  }

  Exponent min_exponents() const {
    Exponent m(n_, 0);
    bool first = true;
    for (const auto& [e, c] : t_) {
      for (int i = 0; i < n_; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
      first = false;
    }
    return m;
  }
  Exponent max_exponents() const {
    Exponent m(n_, 0);
    bool first = true;
    for (const auto& [e, c] : t_) {
      for (int i = 0; i < n_; ++i) m[i] = first ? e[i] : std::max(m[i], e[i]);
      first = false;
    }
    return m;
  }
  // Multiply by the monomial unit making every minimal exponent 0.
  BasicLaurent to_polynomial() const {
    Exponent m = min_exponents();
    for (auto& x : m) x = -x;
    return shifted(m);
  }
  // Polynomial representative with lex-leading coefficient 1.
  BasicLaurent normalized() const {
    if (is_zero()) return *this;
    BasicLaurent p = to_polynomial();
    K lead = p.leading().second;
    if (coeff_is_one(lead)) return p;
    return p.scaled(K(1) / lead);
  }

  bool operator==(const BasicLaurent& o) const { return n_ == o.n_ && t_ == o.t_; }
  bool operator!=(const BasicLaurent& o) const { return !(*this == o); }

  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (t_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string cs = coeff_to_string(c);
      bool constant_term = std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
      bool neg = !cs.empty() && cs[0] == '-' && cs.find_first_of("+ ", 1) == std::string::npos;
      if (neg) cs = cs.substr(1);
      bool compound = cs.find_first_of("+-", 1) != std::string::npos || cs.find(' ') != std::string::npos;
      if (compound) cs = "(" + cs + ")";
      if (first)
        out << (neg ? "-" : "");
      else
        out << (neg ? " - " : " + ");
      first = false;
      bool unit = cs == "1";
      if (!unit || constant_term) out << cs;
      bool need_star = !unit;
      for (int i = 0; i < n_; ++i) {
        if (e[i] == 0) continue;
        if (need_star) out << "*";
        need_star = true;
        out << (i < static_cast<int>(names.size()) ? names[i] : "t" + std::to_string(i + 1));
        if (e[i] != 1) out << "^" << (e[i] < 0 ? "(" + std::to_string(e[i]) + ")" : std::to_string(e[i]));
      }
    }
    return out.str();
  }

 private:
  void check_vars(const BasicLaurent& o) const {
    if (o.n_ != n_) throw std::invalid_argument("Laurent polynomials with different numbers of variables");
  }
  int n_ = 0;
  TermMap t_;
};

template <class K>
bool operator<(const BasicLaurent<K>& a, const BasicLaurent<K>& b);

template <>
inline bool operator<(const BasicLaurent<Rational>& a, const BasicLaurent<Rational>& b) {
  if (a.num_vars() != b.num_vars()) return a.num_vars() < b.num_vars();
  return std::lexicographical_compare(a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end(),
                                      [](const auto& x, const auto& y) {
                                        if (x.first != y.first) return x.first < y.first;
                                        return cmp(x.second, y.second) < 0;
                                      });
}

using LaurentPoly = BasicLaurent<Rational>;
using CycLaurent = BasicLaurent<Cyclotomic>;

CycLaurent to_cyclotomic(const LaurentPoly& f);

namespace detail {

template <class K>
long degree_in(const BasicLaurent<K>& f, int v) {
  long d = 0;
  for (const auto& [e, c] : f.terms()) d = std::max(d, e[v]);
  return d;
}

// Coefficients of a polynomial with respect to variable v (exponent v zeroed).
template <class K>
std::map<long, BasicLaurent<K>> split_by(const BasicLaurent<K>& f, int v) {
  std::map<long, BasicLaurent<K>> out;
  for (const auto& [e, c] : f.terms()) {
    Exponent g = e;
    long d = g[v];
    g[v] = 0;
    auto it = out.try_emplace(d, f.num_vars()).first;
    it->second.add_term(g, c);
  }
  return out;
}

// Exact quotient of polynomials (nonnegative exponents), nullopt if b does not divide a.
template <class K>
std::optional<BasicLaurent<K>> poly_divide(const BasicLaurent<K>& a, const BasicLaurent<K>& b) {
  const int n = a.num_vars();
  if (b.is_zero()) throw std::domain_error("Laurent division by zero");
  if (a.is_zero()) return BasicLaurent<K>(n);
  Exponent amax = a.max_exponents(), bmax = b.max_exponents();
  Exponent amin = a.min_exponents(), bmin = b.min_exponents();
  Exponent qmax(n), qmin(n);
  for (int i = 0; i < n; ++i) {
    qmax[i] = amax[i] - bmax[i];
    qmin[i] = amin[i] - bmin[i];
    if (qmax[i] < qmin[i]) return std::nullopt;
  }
  // trailing terms must match too
  BasicLaurent<K> q(n), r = a;
  const auto& [be, bc] = b.leading();
  const K binv = K(1) / bc;
  Exponent qe(n);
  while (!r.is_zero()) {
    const auto& [re, rc] = r.leading();
    for (int i = 0; i < n; ++i) {
      qe[i] = re[i] - be[i];
      if (qe[i] < qmin[i] || qe[i] > qmax[i]) return std::nullopt;
    }
    K qc = rc * binv;
    q.add_term(qe, qc);
    r -= b.shifted(qe).scaled(qc);
  }
  return q;
}

template <class K>
BasicLaurent<K> gcd_rec(const BasicLaurent<K>& f, const BasicLaurent<K>& g, int v);

template <class K>
BasicLaurent<K> content_in(const BasicLaurent<K>& f, int v) {
  auto parts = split_by(f, v);
  BasicLaurent<K> c(f.num_vars());
  for (auto& [d, p] : parts) {
    c = c.is_zero() ? p : gcd_rec(c, p, v + 1);
    if (c.is_constant()) return BasicLaurent<K>::one(f.num_vars());
  }
  return c;
}

template <class K>
BasicLaurent<K> primitive_in(const BasicLaurent<K>& f, int v) {
  if (f.is_zero()) return f;
  auto c = content_in(f, v);
  if (c.is_constant()) return f;
  return *poly_divide(f, c);
}

template <class K>
BasicLaurent<K> leading_coeff_in(const BasicLaurent<K>& f, int v, long d) {
  BasicLaurent<K> out(f.num_vars());
  for (const auto& [e, c] : f.terms())
    if (e[v] == d) {
      Exponent g = e;
      g[v] = 0;
      out.add_term(g, c);
    }
  return out;
}

template <class K>
BasicLaurent<K> pseudo_remainder(const BasicLaurent<K>& a, const BasicLaurent<K>& b, int v) {
  const long db = degree_in(b, v);
  const auto lb = leading_coeff_in(b, v, db);
  BasicLaurent<K> r = a;
  while (!r.is_zero()) {
    long dr = degree_in(r, v);
    if (dr < db) break;
    auto lr = leading_coeff_in(r, v, dr);
    Exponent sh(a.num_vars(), 0);
    sh[v] = dr - db;
    r = r * lb - (lr * b).shifted(sh);
  }
  return r;
}

template <class K>
BasicLaurent<K> gcd_rec(const BasicLaurent<K>& f, const BasicLaurent<K>& g, int v) {
  const int n = f.num_vars();
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.is_constant() || g.is_constant() || v >= n) return BasicLaurent<K>::one(n);
  const long df = degree_in(f, v), dg = degree_in(g, v);
  if (df == 0 && dg == 0) return gcd_rec(f, g, v + 1);
  auto cf = content_in(f, v), cg = content_in(g, v);
  auto c = gcd_rec(cf, cg, v + 1);
  auto a = cf.is_constant() ? f : *poly_divide(f, cf);
  auto b = cg.is_constant() ? g : *poly_divide(g, cg);
  if (degree_in(a, v) < degree_in(b, v)) std::swap(a, b);
  BasicLaurent<K> res(n);
  while (true) {
    if (b.is_zero()) {
      res = a;
      break;
    }
    if (degree_in(b, v) == 0) {
      res = BasicLaurent<K>::one(n);
      break;
    }
    auto r = pseudo_remainder(a, b, v);
    a = std::move(b);
    b = primitive_in(r, v);
  }
  if (c.is_constant()) return res;
  return c * res;
}

}  // namespace detail

// Exact quotient in the Laurent ring, nullopt when b does not divide a.
template <class K>
std::optional<BasicLaurent<K>> laurent_divide(const BasicLaurent<K>& a, const BasicLaurent<K>& b) {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("Laurent polynomials with different numbers of variables");
  if (a.is_zero()) return a;
  Exponent ma = a.min_exponents(), mb = b.min_exponents();
  auto q = detail::poly_divide(a.to_polynomial(), b.to_polynomial());
  if (!q) return std::nullopt;
  Exponent sh(a.num_vars());
  for (int i = 0; i < a.num_vars(); ++i) sh[i] = ma[i] - mb[i];
  return q->shifted(sh);
}

template <class K>
BasicLaurent<K> basic_gcd(const BasicLaurent<K>& f, const BasicLaurent<K>& g) {
  if (f.num_vars() != g.num_vars()) throw std::invalid_argument("laurent_gcd: mismatched num_vars");
  if (f.is_zero()) return g.normalized();
  if (g.is_zero()) return f.normalized();
  auto a = f.to_polynomial(), b = g.to_polynomial();
  if (a.is_constant() || b.is_constant()) return BasicLaurent<K>::one(f.num_vars());
  if (auto q = detail::poly_divide(a, b)) return b.normalized();
  if (auto q = detail::poly_divide(b, a)) return a.normalized();
  return detail::gcd_rec(a, b, 0).normalized();
}

LaurentPoly laurent_gcd(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly laurent_gcd(const std::vector<LaurentPoly>& fs, int num_vars);

// Exact value at the torsion point (e^{2 pi i c_1}, ...), normalized order.
Cyclotomic eval_at_torsion(const LaurentPoly& f, const std::vector<Rational>& point);
Cyclotomic eval_at_torsion(const CycLaurent& f, const std::vector<Rational>& point);

// Substitute t_i -> t^{w_i}: the univariate specialization along a weight vector.
LaurentPoly specialize(const LaurentPoly& f, const std::vector<long>& weights);

UPoly to_upoly(const LaurentPoly& univariate);  // requires a polynomial in one variable
LaurentPoly from_upoly(const UPoly& p);

}  // namespace jumploci
