#include "jumploci/torus.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "jumploci/linalg.hpp"

namespace jumploci {

std::vector<std::string> default_names(int n, const std::string& stem) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(stem + std::to_string(i + 1));
  return out;
}

namespace {

Rational dot_mod1(const std::vector<Integer>& h, const Angles& p) {
  Rational s = 0;
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] != 0) s += Rational(h[i]) * p[i];
  return frac_mod1(s);
}

std::string monomial_string(const std::vector<Integer>& h, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (h[i] != 1) out += "^" + h[i].get_str();
  }
  return out.empty() ? "1" : out;
}

std::string root_string(const Rational& angle) {
  if (angle == 0) return "1";
  if (angle == Rational(1, 2)) return "-1";
  return "e(" + to_string(angle) + ")";
}

}  // namespace

// ---- LinearSubspace ----

LinearSubspace::LinearSubspace(int num_vars, const IntMatrix& equations) : n_(num_vars) {
  if (equations.cols() != static_cast<std::size_t>(num_vars) && equations.rows() > 0)
    throw std::invalid_argument("LinearSubspace: equation width differs from num_vars");
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < equations.rows(); ++i) {
    std::vector<Rational> r;
    for (const auto& x : equations.row(i)) r.emplace_back(x);
    rows.push_back(std::move(r));
  }
  *this = from_rational(num_vars, rows);
}

LinearSubspace LinearSubspace::from_rational(int num_vars, const std::vector<std::vector<Rational>>& equations) {
  LinearSubspace s;
  s.n_ = num_vars;
  s.eq_ = IntMatrix(0, num_vars);
  if (equations.empty()) return s;
  QMatrix m(equations.size(), num_vars);
  for (std::size_t i = 0; i < equations.size(); ++i) {
    if (equations[i].size() != static_cast<std::size_t>(num_vars))
      throw std::invalid_argument("LinearSubspace: equation width differs from num_vars");
    for (int j = 0; j < num_vars; ++j) m(i, j) = equations[i][j];
  }
  auto piv = rref(m);
  for (std::size_t i = 0; i < piv.size(); ++i) {
    Integer l = 1;
    for (int j = 0; j < num_vars; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    std::vector<Integer> row(num_vars);
    Integer g = 0;
    for (int j = 0; j < num_vars; ++j) {
      Rational v = m(i, j) * l;
      row[j] = v.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
    }
    for (auto& x : row) x /= g;
    s.eq_.append_row(row);
  }
  return s;
}

bool LinearSubspace::contains_point(const std::vector<Rational>& z) const {
  for (std::size_t i = 0; i < eq_.rows(); ++i) {
    Rational s = 0;
    for (int j = 0; j < n_; ++j) s += Rational(eq_(i, j)) * z[j];
    if (s != 0) return false;
  }
  return true;
}

bool LinearSubspace::contains(const LinearSubspace& sub) const {
  for (const auto& v : sub.basis())
    if (!contains_point(v)) return false;
  return true;
}

LinearSubspace LinearSubspace::intersect(const LinearSubspace& o) const { return LinearSubspace(n_, eq_.stacked(o.eq_)); }

std::vector<std::vector<Rational>> LinearSubspace::basis() const {
  QMatrix m(eq_.rows(), n_);
  for (std::size_t i = 0; i < eq_.rows(); ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = Rational(eq_(i, j));
  return nullspace(m);
}

std::string LinearSubspace::to_string(const std::vector<std::string>& names_in) const {
  auto names = names_in.empty() ? default_names(n_, "z") : names_in;
  if (eq_.rows() == 0) return "C^" + std::to_string(n_);
  if (static_cast<int>(eq_.rows()) == n_) return "{0}";
  std::string out = "{";
  for (std::size_t i = 0; i < eq_.rows(); ++i) {
    if (i) out += ", ";
    std::string lhs;
    for (int j = 0; j < n_; ++j) {
      Integer c = eq_(i, j);
      if (c == 0) continue;
      bool neg = c < 0;
      if (neg) c = -c;
      if (lhs.empty())
        lhs += neg ? "-" : "";
      else
        lhs += neg ? " - " : " + ";
      if (c != 1) lhs += c.get_str() + "*";
      lhs += names[j];
    }
    out += lhs + " = 0";
  }
  return out + "}";
}

// ---- TranslatedSubtorus ----

std::vector<TranslatedSubtorus> TranslatedSubtorus::from_equations(int num_vars, const IntMatrix& rows,
                                                                   const Angles& angles) {
  if (rows.rows() != angles.size()) throw std::invalid_argument("subtorus: one translate per equation required");
  if (rows.rows() > 0 && rows.cols() != static_cast<std::size_t>(num_vars))
    throw std::invalid_argument("subtorus: equation width differs from num_vars");
  if (rows.rows() == 0 || rows.is_zero()) {
    for (const auto& a : angles)
      if (frac_mod1(a) != 0) return {};
    return {full(num_vars)};
  }
  auto s = smith_normal_form(rows);
  const std::size_t k = rows.rows();
  Angles psi(k);
  for (std::size_t i = 0; i < k; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < k; ++j) acc += Rational(s.U(i, j)) * angles[j];
    psi[i] = frac_mod1(acc);
  }
  for (std::size_t i = s.rank; i < k; ++i)
    if (psi[i] != 0) return {};
  IntMatrix e = s.V_inv.select_rows(0, s.rank);
  auto hnf = hermite_normal_form(e);
  std::vector<TranslatedSubtorus> out;
  std::vector<Integer> d = s.invariant_factors();
  std::vector<long> idx(s.rank, 0);
  while (true) {
    Angles c(s.rank);
    for (std::size_t i = 0; i < s.rank; ++i) c[i] = frac_mod1((psi[i] + idx[i]) / Rational(d[i]));
    TranslatedSubtorus t;
    t.n_ = num_vars;
    t.h_ = hnf.H;
    t.phi_.resize(s.rank);
    for (std::size_t i = 0; i < s.rank; ++i) {
      Rational acc = 0;
      for (std::size_t j = 0; j < s.rank; ++j) acc += Rational(hnf.T(i, j)) * c[j];
      t.phi_[i] = frac_mod1(acc);
    }
    t.finish();
    out.push_back(std::move(t));
    std::size_t pos = 0;
    while (pos < s.rank) {
      if (++idx[pos] < d[pos].get_si()) break;
      idx[pos++] = 0;
    }
    if (pos == s.rank) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TranslatedSubtorus TranslatedSubtorus::full(int num_vars) {
  TranslatedSubtorus t;
  t.n_ = num_vars;
  t.h_ = IntMatrix(0, num_vars);
  t.finish();
  return t;
}

TranslatedSubtorus TranslatedSubtorus::point(const Angles& angles) {
  int n = static_cast<int>(angles.size());
  return from_equations(n, IntMatrix::identity(n), angles).at(0);
}

std::vector<TranslatedSubtorus> TranslatedSubtorus::hypersurface(const std::vector<long>& a, const Rational& c) {
  return from_equations(static_cast<int>(a.size()), IntMatrix::from_rows({a}, a.size()), {c});
}

void TranslatedSubtorus::finish() {
  const std::size_t k = h_.rows();
  if (k == 0) {
    basis_ = IntMatrix::identity(n_);
    base_ = Angles(n_, Rational(0));
    return;
  }
  auto s = smith_normal_form(h_);
  if (s.rank != k) throw std::logic_error("subtorus rows not independent");
  basis_ = s.V.select_cols(k, n_);
  Angles y(n_, Rational(0));
  for (std::size_t i = 0; i < k; ++i) {
    if (s.D(i, i) != 1) throw std::logic_error("subtorus lattice not saturated");
    Rational acc = 0;
    for (std::size_t j = 0; j < k; ++j) acc += Rational(s.U(i, j)) * phi_[j];
    y[i] = frac_mod1(acc);
  }
  base_.assign(n_, Rational(0));
  for (int i = 0; i < n_; ++i) {
    Rational acc = 0;
    for (int j = 0; j < n_; ++j) acc += Rational(s.V(i, j)) * y[j];
    base_[i] = frac_mod1(acc);
  }
}

bool TranslatedSubtorus::contains_identity() const {
  return std::all_of(phi_.begin(), phi_.end(), [](const Rational& x) { return x == 0; });
}

IntMatrix TranslatedSubtorus::param_left_inverse() const {
  const int d = dimension();
  if (d == 0) return IntMatrix(n_, 0);
  auto s = smith_normal_form(basis_.transpose());
  return s.V.select_cols(0, d) * s.U;
}

Angles TranslatedSubtorus::point_at(const Angles& params) const {
  Angles p = base_;
  for (int i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < params.size(); ++j)
      if (basis_(i, j) != 0) p[i] += Rational(basis_(i, j)) * params[j];
    p[i] = frac_mod1(p[i]);
  }
  return p;
}

bool TranslatedSubtorus::operator<(const TranslatedSubtorus& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  if (h_.rows() != o.h_.rows()) return h_.rows() < o.h_.rows();
  for (std::size_t i = 0; i < h_.rows(); ++i)
    for (std::size_t j = 0; j < h_.cols(); ++j)
      if (h_(i, j) != o.h_(i, j)) return h_(i, j) < o.h_(i, j);
  for (std::size_t i = 0; i < phi_.size(); ++i)
    if (phi_[i] != o.phi_[i]) return phi_[i] < o.phi_[i];
  return false;
}

std::string TranslatedSubtorus::to_string(const std::vector<std::string>& names_in) const {
  auto names = names_in.empty() ? default_names(n_, "t") : names_in;
  if (h_.rows() == 0) return "(C*)^" + std::to_string(n_);
  std::string out = "{";
  for (std::size_t i = 0; i < h_.rows(); ++i) {
    if (i) out += ", ";
    out += monomial_string(h_.row(i), names) + " = " + root_string(phi_[i]);
  }
  return out + "}";
}

bool membership(const Angles& point, const TranslatedSubtorus& t) {
  if (point.size() != static_cast<std::size_t>(t.num_vars())) throw std::invalid_argument("membership: point length");
  for (std::size_t i = 0; i < t.exponents().rows(); ++i)
    if (dot_mod1(t.exponents().row(i), point) != frac_mod1(t.translates()[i])) return false;
  return true;
}

std::vector<TranslatedSubtorus> intersect(const TranslatedSubtorus& a, const TranslatedSubtorus& b) {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("intersect: num_vars differ");
  Angles ang = a.translates();
  ang.insert(ang.end(), b.translates().begin(), b.translates().end());
  return TranslatedSubtorus::from_equations(a.num_vars(), a.exponents().stacked(b.exponents()), ang);
}

bool contains(const TranslatedSubtorus& outer, const TranslatedSubtorus& inner) {
  if (outer.num_vars() != inner.num_vars()) throw std::invalid_argument("contains: num_vars differ");
  if (outer.dimension() < inner.dimension()) return false;
  // every equation of outer must be a consequence of inner's lattice
  if (int_rank(inner.exponents().stacked(outer.exponents())) != inner.exponents().rows()) return false;
  return membership(inner.base_point(), outer);
}

std::optional<LinearSubspace> tangent_cone(const TranslatedSubtorus& t) {
  if (!t.contains_identity()) return std::nullopt;
  return LinearSubspace(t.num_vars(), t.exponents());
}

CycLaurent restrict_to(const LaurentPoly& f, const TranslatedSubtorus& t) {
  const int d = t.dimension(), n = t.num_vars();
  const auto& b = t.param_basis();
  std::vector<std::vector<long>> bt(d, std::vector<long>(n));
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < n; ++i) bt[j][i] = b(i, j).get_si();
  CycLaurent out(d);
  Exponent e(d);
  for (const auto& [m, c] : f.terms()) {
    Rational angle = 0;
    for (int i = 0; i < n; ++i)
      if (m[i]) angle += t.base_point()[i] * m[i];
    for (int j = 0; j < d; ++j) {
      long s = 0;
      for (int i = 0; i < n; ++i) s += bt[j][i] * m[i];
      e[j] = s;
    }
    out.add_term(e, Cyclotomic(c) * Cyclotomic::root_of_unity(angle));
  }
  return out;
}

LaurentPoly restrict_to_rational(const LaurentPoly& f, const TranslatedSubtorus& t) {
  if (!t.contains_identity()) throw std::invalid_argument("restrict_to_rational: subtorus misses the identity");
  const int d = t.dimension(), n = t.num_vars();
  const auto& b = t.param_basis();
  std::vector<std::vector<long>> bt(d, std::vector<long>(n));
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < n; ++i) bt[j][i] = b(i, j).get_si();
  LaurentPoly out(d);
  Exponent e(d);
  for (const auto& [m, c] : f.terms()) {
    for (int j = 0; j < d; ++j) {
      long s = 0;
      for (int i = 0; i < n; ++i) s += bt[j][i] * m[i];
      e[j] = s;
    }
    out.add_term(e, c);
  }
  return out;
}

std::vector<TranslatedSubtorus> prune_contained(std::vector<TranslatedSubtorus> list) {
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
  std::vector<TranslatedSubtorus> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < list.size() && !dominated; ++j)
      if (i != j && contains(list[j], list[i])) dominated = true;
    if (!dominated) out.push_back(list[i]);
  }
  return out;
}

// ---- binomial factors ----

namespace {

std::vector<long> sign_normalized(std::vector<long> a) {
  for (long x : a) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : a) y = -y;
    break;
  }
  return a;
}

// Unimodular W with W a = e_1 for a primitive a.
IntMatrix unimodular_for(const std::vector<long>& a) {
  IntMatrix col(a.size(), 1);
  for (std::size_t i = 0; i < a.size(); ++i) col(i, 0) = a[i];
  auto s = smith_normal_form(col);
  IntMatrix w = s.U;
  if (s.V(0, 0) < 0)
    for (std::size_t i = 0; i < w.rows(); ++i)
      for (std::size_t j = 0; j < w.cols(); ++j) w(i, j) = -w(i, j);
  return w;
}

struct RootInfo {
  Rational angle;
  long order;
};

// Cyclotomic orders N (with multiplicity) such that Phi_N divides p.
std::vector<std::pair<long, int>> cyclotomic_orders(UPoly p) {
  std::vector<std::pair<long, int>> out;
  long deg = p.degree();
  if (deg <= 0) return out;
  for (long n = 1; n <= 2 * deg * deg + 2; ++n) {
    if (euler_phi(n) > p.degree()) continue;
    const UPoly& phi = cyclotomic_poly(n);
    int mult = 0;
    while (p.degree() >= phi.degree()) {
      UPoly q, r;
      p.divmod(phi, q, r);
      if (!r.is_zero()) break;
      p = q;
      ++mult;
    }
    if (mult) out.emplace_back(n, mult);
  }
  return out;
}

std::vector<std::vector<long>> candidate_directions(const Exponent& m0, const std::vector<Exponent>& support) {
  std::set<std::vector<long>> dirs;
  for (const auto& m : support) {
    if (m == m0) continue;
    std::vector<long> v(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) v[i] = m[i] - m0[i];
    dirs.insert(sign_normalized(primitive_vector(v)));
  }
  return {dirs.begin(), dirs.end()};
}

// Content in u = s^a of a polynomial with respect to direction a, or nullopt
// when some fiber has a single term (so no binomial factor in this direction).
template <class K>
std::optional<BasicLaurent<K>> direction_content(const BasicLaurent<K>& f, const std::vector<long>& a) {
  const std::size_t d = a.size();
  IntMatrix w = unimodular_for(a);
  std::map<std::vector<long>, BasicLaurent<K>> fibers;
  for (const auto& [m, c] : f.terms()) {
    std::vector<long> y(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      long s = 0;
      for (std::size_t j = 0; j < d; ++j) s += w(i, j).get_si() * m[j];
      y[i] = s;
    }
    std::vector<long> tail(y.begin() + 1, y.end());
    fibers.try_emplace(tail, 1).first->second.add_term(Exponent{y[0]}, c);
  }
  for (const auto& [k, p] : fibers)
    if (p.size() < 2) return std::nullopt;
  BasicLaurent<K> g(1);
  for (const auto& [k, p] : fibers) {
    g = basic_gcd(g, p);
    if (g.is_constant()) return std::nullopt;
  }
  return g;
}

template <class K>
BasicLaurent<K> substitute_direction(const BasicLaurent<K>& u_poly, const std::vector<long>& a) {
  BasicLaurent<K> out(static_cast<int>(a.size()));
  for (const auto& [e, c] : u_poly.terms()) {
    Exponent m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] * e[0];
    out.add_term(m, c);
  }
  return out;
}

// Roots of unity of a univariate polynomial, distinct.
std::vector<RootInfo> unit_roots(const LaurentPoly& c) {
  std::vector<RootInfo> out;
  for (auto [n, mult] : cyclotomic_orders(to_upoly(c.to_polynomial())))
    for (long k = 0; k < n; ++k)
      if (gcd_long(k, n) == 1) out.push_back({Rational(k, n), n});
  for (auto& r : out) r.angle.canonicalize();
  return out;
}

std::vector<RootInfo> unit_roots(const CycLaurent& c0) {
  CycLaurent c = c0.to_polynomial();
  long m = 1;
  for (auto& [e, x] : c.terms()) m = lcm_long(m, x.normalized().order());
  // norm down to Q, then test the candidate orders
  CycLaurent norm = CycLaurent::one(1);
  for (long k = 1; k <= m; ++k) {
    if (gcd_long(k, m) != 1) continue;
    CycLaurent conj(1);
    for (const auto& [e, x] : c.terms()) conj.add_term(e, x.normalized().lifted(m).galois(k));
    norm *= conj;
  }
  LaurentPoly qnorm(1);
  for (const auto& [e, x] : norm.terms()) {
    auto v = x.normalized();
    if (!v.is_rational()) throw std::logic_error("norm polynomial not rational");
    qnorm.add_term(e, v.rational_value());
  }
  std::vector<RootInfo> out;
  for (auto [n, mult] : cyclotomic_orders(to_upoly(qnorm.to_polynomial()))) {
    for (long k = 0; k < n; ++k) {
      if (gcd_long(k, n) != 1) continue;
      Rational ang(k, n);
      ang.canonicalize();
      if (eval_at_torsion(c, {ang}).is_zero()) out.push_back({ang, n});
    }
  }
  return out;
}

template <class K>
struct Split {
  std::vector<std::pair<std::vector<long>, Rational>> roots;  // s^a = e(angle)
  BasicLaurent<K> cofactor;
};

Split<Rational> split_binomials(const LaurentPoly& g) {
  Split<Rational> out{{}, g};
  auto q = binomial_factorization(g);
  for (const auto& f : q.factors)
    for (long k = 0; k < f.order; ++k)
      if (gcd_long(k, f.order) == 1) {
        Rational a(k, f.order);
        a.canonicalize();
        out.roots.emplace_back(f.direction, a);
      }
  out.cofactor = q.cofactor;
  return out;
}

Split<Cyclotomic> split_binomials(const CycLaurent& g) {
  Split<Cyclotomic> out{{}, g};
  while (out.cofactor.size() > 1) {
    const auto& cof = out.cofactor;
    std::vector<Exponent> support;
    for (const auto& [e, c] : cof.terms()) support.push_back(e);
    bool progress = false;
    for (const auto& a : candidate_directions(cof.trailing().first, support)) {
      auto content = direction_content(cof, a);
      if (!content) continue;
      auto roots = unit_roots(*content);
      if (roots.empty()) continue;
      for (const auto& r : roots) {
        out.roots.emplace_back(a, r.angle);
        auto lin = CycLaurent::binomial(Exponent{1}, Cyclotomic::root_of_unity(r.angle));
        auto b = substitute_direction(lin, a);
        while (auto q = laurent_divide(out.cofactor, b)) out.cofactor = *q;
      }
      progress = true;
      break;
    }
    if (!progress) break;
  }
  return out;
}

}  // namespace

BinomialSplit binomial_factorization(const LaurentPoly& f) {
  BinomialSplit out{{}, f};
  const int d = f.num_vars();
  while (out.cofactor.size() > 1 && d > 0) {
    const auto& cof = out.cofactor;
    std::vector<Exponent> support;
    for (const auto& [e, c] : cof.terms()) support.push_back(e);
    bool progress = false;
    for (const auto& a : candidate_directions(cof.trailing().first, support)) {
      auto content = direction_content(cof, a);
      if (!content) continue;
      auto orders = cyclotomic_orders(to_upoly(content->to_polynomial()));
      if (orders.empty()) continue;
      for (auto [n, mult] : orders) {
        auto phi = substitute_direction(from_upoly(cyclotomic_poly(n)), a);
        int count = 0;
        while (auto q = laurent_divide(out.cofactor, phi)) {
          out.cofactor = *q;
          ++count;
        }
        out.factors.push_back({a, n, count});
      }
      progress = true;
      break;
    }
    if (!progress) break;
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const BinomialFactor& x, const BinomialFactor& y) {
    return std::tie(x.direction, x.order) < std::tie(y.direction, y.order);
  });
  return out;
}

std::string factor_to_string(const BinomialFactor& b, const std::vector<std::string>& names_in) {
  auto names = names_in.empty() ? default_names(static_cast<int>(b.direction.size()), "t") : names_in;
  std::vector<Integer> h(b.direction.begin(), b.direction.end());
  std::string mono = monomial_string(h, names);
  std::string base = b.order == 1 ? mono + " - 1" : "Phi" + std::to_string(b.order) + "(" + mono + ")";
  if (b.multiplicity != 1) return (b.order == 1 ? "(" + base + ")" : base) + "^" + std::to_string(b.multiplicity);
  return base;
}

std::string to_string(DecompositionStatus s) {
  switch (s) {
    case DecompositionStatus::exact:
      return "exact";
    case DecompositionStatus::sampled:
      return "sampled";
    default:
      return "undecomposed";
  }
}

bool SupportLocus::contains_point(const Angles& p) const {
  for (const auto& g : ideal_gens)
    if (!eval_at_torsion(g, p).is_zero()) return false;
  return true;
}

bool SupportLocus::components_contain(const Angles& p) const {
  if (!components) throw std::logic_error("locus has no components");
  for (const auto& c : *components)
    if (membership(p, c)) return true;
  return false;
}

std::vector<LaurentPoly> normalize_generators(const std::vector<LaurentPoly>& gens) {
  std::set<LaurentPoly> seen;
  std::vector<LaurentPoly> out;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    auto n = g.normalized();
    if (seen.insert(n).second) out.push_back(std::move(n));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

SupportLocus make_locus(int num_vars, std::vector<LaurentPoly> gens) {
  SupportLocus s;
  s.num_vars = num_vars;
  s.ideal_gens = normalize_generators(gens);
  return s;
}

namespace {

constexpr std::size_t kSplitCandidates = 64;

class Decomposer {
 public:
  Decomposer(int r, const std::vector<LaurentPoly>& gens) : r_(r), gens_(gens) {}

  void run() { visit(TranslatedSubtorus::full(r_)); }

  std::vector<TranslatedSubtorus> components;
  bool certified = true;
  bool undecomposed = false;
  std::set<std::string> notes;

 private:
  void visit(const TranslatedSubtorus& t) {
    if (!seen_.insert(t).second) return;
    if (t.contains_identity()) {
      std::vector<LaurentPoly> g;
      for (const auto& f : gens_) g.push_back(restrict_to_rational(f, t));
      process(t, std::move(g));
    } else {
      std::vector<CycLaurent> g;
      for (const auto& f : gens_) g.push_back(restrict_to(f, t));
      process(t, std::move(g));
    }
  }

  template <class K>
  static std::vector<BasicLaurent<K>> tidy(std::vector<BasicLaurent<K>> g) {
    std::vector<BasicLaurent<K>> out;
    for (auto& f : g)
      if (!f.is_zero()) out.push_back(f.normalized());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<BasicLaurent<K>> uniq;
    for (auto& f : out)
      if (std::find(uniq.begin(), uniq.end(), f) == uniq.end()) uniq.push_back(std::move(f));
    return uniq;
  }

  template <class K>
  std::optional<Split<K>> full_split(const std::vector<BasicLaurent<K>>& g) {
    std::optional<Split<K>> best;
    std::size_t tried = 0;
    for (const auto& f : g) {
      if (tried++ >= kSplitCandidates) break;
      auto s = split_binomials(f);
      if (s.cofactor.size() != 1) continue;
      if (!best || s.roots.size() < best->roots.size()) best = std::move(s);
      if (best->roots.size() <= 1) break;
    }
    return best;
  }

  void descend(const TranslatedSubtorus& t, const std::vector<std::pair<std::vector<long>, Rational>>& roots) {
    IntMatrix p = t.param_left_inverse();
    for (const auto& [a, angle] : roots) {
      std::vector<long> m(r_, 0);
      Rational shift = 0;
      for (int i = 0; i < r_; ++i) {
        long s = 0;
        for (std::size_t j = 0; j < a.size(); ++j) s += p(i, j).get_si() * a[j];
        m[i] = s;
        if (s) shift += t.base_point()[i] * s;
      }
      IntMatrix rows = t.exponents();
      rows.append_row(m);
      Angles ang = t.translates();
      ang.push_back(frac_mod1(angle + shift));
      for (const auto& child : TranslatedSubtorus::from_equations(r_, rows, ang)) visit(child);
    }
  }

  template <class K>
  void process(const TranslatedSubtorus& t, std::vector<BasicLaurent<K>> raw) {
    auto g = tidy(std::move(raw));
    if (g.empty()) {
      components.push_back(t);
      return;
    }
    for (const auto& f : g)
      if (f.size() == 1) return;  // a unit: empty here
    if (auto s = full_split(g)) {
      descend(t, s->roots);
      return;
    }
    // common factor first: V(G) = V(h) u V(G/h)
    BasicLaurent<K> h(t.dimension());
    for (const auto& f : g) {
      h = basic_gcd(h, f);
      if (h.is_constant()) break;
    }
    if (!h.is_constant()) {
      auto hs = split_binomials(h);
      descend(t, hs.roots);
      if (hs.cofactor.size() > 1) {
        undecomposed = true;
        notes.insert("non-binomial hypersurface factor " + hs.cofactor.to_string());
      }
      std::vector<BasicLaurent<K>> rest;
      for (const auto& f : g) rest.push_back(*laurent_divide(f, h));
      g = tidy(std::move(rest));
      for (const auto& f : g)
        if (f.size() == 1) return;
      if (auto s = full_split(g)) {
        descend(t, s->roots);
        return;
      }
    }
    // no certificate: follow the binomial factors of the generator with most of them
    std::optional<Split<K>> best;
    std::size_t tried = 0;
    for (const auto& f : g) {
      if (tried++ >= kSplitCandidates) break;
      auto s = split_binomials(f);
      if (!best || s.roots.size() > best->roots.size()) best = std::move(s);
    }
    certified = false;
    notes.insert("residual locus inside " + t.to_string() + " not certified complete");
    if (best) descend(t, best->roots);
  }

  int r_;
  const std::vector<LaurentPoly>& gens_;
  std::set<TranslatedSubtorus> seen_;
};

}  // namespace

SupportLocus extract_components_union(int num_vars, const std::vector<std::vector<LaurentPoly>>& ideals) {
  SupportLocus out;
  out.num_vars = num_vars;
  std::vector<LaurentPoly> prod;
  bool first = true;
  for (const auto& ideal : ideals) {
    auto gens = normalize_generators(ideal);
    if (first) {
      prod = gens;
      first = false;
    } else {
      std::vector<LaurentPoly> next;
      for (const auto& a : prod)
        for (const auto& b : gens) next.push_back(a * b);
      prod = normalize_generators(next);
    }
  }
  out.ideal_gens = prod;
  std::vector<TranslatedSubtorus> comps;
  bool certified = true, undecomposed = false;
  for (const auto& ideal : ideals) {
    auto gens = normalize_generators(ideal);
    if (gens.empty()) {
      comps.push_back(TranslatedSubtorus::full(num_vars));
      continue;
    }
    Decomposer d(num_vars, gens);
    d.run();
    comps.insert(comps.end(), d.components.begin(), d.components.end());
    certified = certified && d.certified;
    undecomposed = undecomposed || d.undecomposed;
    out.notes.insert(out.notes.end(), d.notes.begin(), d.notes.end());
  }
  if (undecomposed) {
    out.status = DecompositionStatus::undecomposed;
    return out;
  }
  out.components = prune_contained(std::move(comps));
  out.status = certified ? DecompositionStatus::exact : DecompositionStatus::sampled;
  return out;
}

SupportLocus extract_components(const SupportLocus& s) {
  auto out = extract_components_union(s.num_vars, {s.ideal_gens});
  out.ideal_gens = s.ideal_gens;
  return out;
}

}  // namespace jumploci
