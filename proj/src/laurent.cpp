#include "jumploci/laurent.hpp"

namespace jumploci {

CycLaurent to_cyclotomic(const LaurentPoly& f) {
  CycLaurent out(f.num_vars());
  for (const auto& [e, c] : f.terms()) out.add_term(e, Cyclotomic(c));
  return out;
}

LaurentPoly laurent_gcd(const LaurentPoly& f, const LaurentPoly& g) { return basic_gcd(f, g); }

LaurentPoly laurent_gcd(const std::vector<LaurentPoly>& fs, int num_vars) {
  // smallest first keeps the intermediate gcds small
  std::vector<const LaurentPoly*> order;
  for (const auto& f : fs)
    if (!f.is_zero()) order.push_back(&f);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->size() < b->size(); });
  LaurentPoly g(num_vars);
  for (const auto* f : order) {
    g = laurent_gcd(g, *f);
    if (g.is_constant()) break;
  }
  return g;
}

namespace {

long common_order(const std::vector<Rational>& point) {
  long n = 1;
  for (const auto& c : point) n = lcm_long(n, frac_mod1(c).get_den().get_si());
  return n;
}

}  // namespace

Cyclotomic eval_at_torsion(const LaurentPoly& f, const std::vector<Rational>& point) {
  if (point.size() != static_cast<std::size_t>(f.num_vars()))
    throw std::invalid_argument("eval_at_torsion: point length differs from num_vars");
  const long n = common_order(point);
  std::vector<long> k(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    Rational a = frac_mod1(point[i]) * n;
    k[i] = a.get_num().get_si();
  }
  std::vector<Rational> acc(static_cast<std::size_t>(n));
  for (const auto& [e, c] : f.terms()) {
    long s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s = (s + (e[i] % n) * k[i]) % n;
    if (s < 0) s += n;
    acc[static_cast<std::size_t>(s)] += c;
  }
  return Cyclotomic(n, UPoly(std::move(acc))).normalized();
}

Cyclotomic eval_at_torsion(const CycLaurent& f, const std::vector<Rational>& point) {
  if (point.size() != static_cast<std::size_t>(f.num_vars()))
    throw std::invalid_argument("eval_at_torsion: point length differs from num_vars");
  Cyclotomic acc;
  for (const auto& [e, c] : f.terms()) {
    Rational angle = 0;
    for (std::size_t i = 0; i < e.size(); ++i) angle += point[i] * e[i];
    acc += c * Cyclotomic::root_of_unity(angle);
  }
  return acc.normalized();
}

LaurentPoly specialize(const LaurentPoly& f, const std::vector<long>& weights) {
  if (weights.size() != static_cast<std::size_t>(f.num_vars()))
    throw std::invalid_argument("specialize: weight length differs from num_vars");
  LaurentPoly out(1);
  for (const auto& [e, c] : f.terms()) {
    long d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * weights[i];
    out.add_term(Exponent{d}, c);
  }
  return out;
}

UPoly to_upoly(const LaurentPoly& f) {
  if (f.num_vars() != 1) throw std::invalid_argument("to_upoly: expected one variable");
  if (f.is_zero()) return {};
  if (f.min_exponents()[0] < 0) throw std::invalid_argument("to_upoly: negative exponent");
  std::vector<Rational> v(static_cast<std::size_t>(f.max_exponents()[0] + 1));
  for (const auto& [e, c] : f.terms()) v[static_cast<std::size_t>(e[0])] = c;
  return UPoly(std::move(v));
}

LaurentPoly from_upoly(const UPoly& p) {
  LaurentPoly out(1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) out.add_term(Exponent{static_cast<long>(i)}, p.coeffs()[i]);
  return out;
}

}  // namespace jumploci
