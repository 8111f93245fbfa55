#include "jumploci/alexander.hpp"

#include <algorithm>

#include "jumploci/int_matrix.hpp"
#include "jumploci/linalg.hpp"

namespace jumploci {

LaurentPoly fox_derivative(const GroupPresentation& p, const Word& w, std::size_t j) {
  const int r = p.num_components;
  LaurentPoly out(r);
  Exponent prefix(r, 0);
  for (int x : w) {
    const std::size_t g = static_cast<std::size_t>(std::abs(x)) - 1;
    const int v = p.generator_component[g];
    if (x > 0) {
      if (g == j) out.add_term(prefix, Rational(1));
      prefix[v] += 1;
    } else {
      prefix[v] -= 1;
      if (g == j) out.add_term(prefix, Rational(-1));
    }
  }
  return out;
}

void require_free_abelianization(const GroupPresentation& p) {
  IntMatrix m(p.relators.size(), p.num_generators);
  for (std::size_t k = 0; k < p.relators.size(); ++k)
    for (int x : p.relators[k]) m(k, static_cast<std::size_t>(std::abs(x)) - 1) += x > 0 ? 1 : -1;
  auto snf = smith_normal_form(m);
  std::string torsion;
  for (std::size_t i = 0; i < snf.rank; ++i) {
    Integer d = abs(snf.D(i, i));
    if (d > 1) torsion += (torsion.empty() ? "" : " + ") + std::string("Z/") + d.get_str();
  }
  if (!torsion.empty()) throw UnsupportedInput("abelianization has torsion " + torsion);
  const std::size_t free_rank = p.num_generators - snf.rank;
  if (free_rank != static_cast<std::size_t>(p.num_components))
    throw UnsupportedInput("abelianization has rank " + std::to_string(free_rank) + ", expected " +
                           std::to_string(p.num_components));
}

AlexanderData alexander_matrix(const GroupPresentation& p) {
  p.validate();
  require_free_abelianization(p);
  AlexanderData d;
  d.num_vars = p.num_components;
  d.identification = p.generator_component;
  const int r = p.num_components;
  for (std::size_t k = 0; k < p.relators.size(); ++k) {
    std::vector<LaurentPoly> row;
    LaurentPoly identity(r);
    for (std::size_t j = 0; j < p.num_generators; ++j) {
      row.push_back(fox_derivative(p, p.relators[k], j));
      identity += row.back() * (LaurentPoly::variable(r, p.generator_component[j]) - LaurentPoly::one(r));
    }
    if (!identity.is_zero()) throw std::logic_error("fundamental Fox identity failed");
    d.fox.push_back(std::move(row));
  }
  return d;
}

namespace {

std::vector<LaurentPoly> identity_ideal(int r) {
  std::vector<LaurentPoly> out;
  for (int i = 0; i < r; ++i) out.push_back(LaurentPoly::variable(r, i) - LaurentPoly::one(r));
  return out;
}

// Generators of Q with E_1 = Q * (t_1 - 1, ..., t_r - 1); nullopt when the
// shortcut does not apply and the full E_1 must be used.
std::optional<std::vector<LaurentPoly>> reduced_ideal(const AlexanderData& d, std::size_t g) {
  const int r = d.num_vars;
  std::optional<std::size_t> j0;
  for (std::size_t j = 0; j < g && !j0; ++j)
    for (std::size_t k = 0; k < g; ++k)
      if (d.identification[k] != d.identification[j]) {
        j0 = j;
        break;
      }
  if (!j0) return std::nullopt;
  LaurentMatrix sub;
  for (const auto& row : d.fox) {
    std::vector<LaurentPoly> s;
    for (std::size_t j = 0; j < g; ++j)
      if (j != *j0) s.push_back(row[j]);
    sub.push_back(std::move(s));
  }
  auto minors = all_minors(sub, g - 1, g - 1, r);
  const LaurentPoly div = LaurentPoly::variable(r, d.identification[*j0]) - LaurentPoly::one(r);
  std::vector<LaurentPoly> q;
  for (const auto& m : minors) {
    auto x = laurent_divide(m, div);
    if (!x) return std::nullopt;
    q.push_back(*x);
  }
  return normalize_generators(q);
}

std::vector<LaurentPoly> e1_generators(const AlexanderData& d, std::size_t g) {
  auto minors = all_minors(d.fox, g, g - 1, d.num_vars);
  return minors;
}

}  // namespace

SupportLocus alexander_support_deg1(const GroupPresentation& p) {
  auto d = alexander_matrix(p);
  const int r = d.num_vars;
  const std::size_t g = p.num_generators;
  if (g == 1) {
    // E_1 is the unit ideal; only W_0 = {1} remains
    return extract_components(make_locus(r, identity_ideal(r)));
  }
  if (d.fox.size() < g - 1) return extract_components(make_locus(r, {}));
  if (auto q = reduced_ideal(d, g)) {
    if (q->empty()) return extract_components(make_locus(r, {}));
    return extract_components_union(r, {*q, identity_ideal(r)});
  }
  auto gens = e1_generators(d, g);
  auto s = extract_components(make_locus(r, gens));
  s.notes.push_back("full E_1 used");
  return s;
}

LaurentPoly alexander_polynomial(const GroupPresentation& p) {
  auto s = alexander_support_deg1(p);
  auto g = laurent_gcd(s.ideal_gens, p.num_components);
  if (g.is_zero()) return LaurentPoly(p.num_components);
  return g;
}

long twisted_rank(const GroupPresentation& p, const Angles& rho) { return twisted_rank(alexander_matrix(p), rho); }

long twisted_rank(const AlexanderData& d, const Angles& rho) {
  if (rho.size() != static_cast<std::size_t>(d.num_vars)) throw std::invalid_argument("twisted_rank: character length");
  const std::size_t g = d.identification.size();
  long boundary1 = 0;
  for (std::size_t j = 0; j < g; ++j)
    if (frac_mod1(rho[d.identification[j]]) != 0) boundary1 = 1;
  CMatrix m(d.fox.size(), g);
  for (std::size_t i = 0; i < d.fox.size(); ++i)
    for (std::size_t j = 0; j < g; ++j) m(i, j) = eval_at_torsion(d.fox[i][j], rho);
  unify_orders(m);
  return static_cast<long>(g) - boundary1 - static_cast<long>(matrix_rank(m));
}

LaurentPoly substitute_variables(const LaurentPoly& f, const std::vector<int>& target, int num_vars) {
  LaurentPoly out(num_vars);
  for (const auto& [e, c] : f.terms()) {
    Exponent x(num_vars, 0);
    for (std::size_t i = 0; i < e.size(); ++i) x[target.at(i)] += e[i];
    out.add_term(x, c);
  }
  return out;
}

SupportLocus pullback_locus(const SupportLocus& s, const std::vector<int>& nu, int num_vars) {
  std::vector<LaurentPoly> gens;
  bool all_zero = true;
  for (const auto& f : s.ideal_gens) {
    gens.push_back(substitute_variables(f, nu, num_vars));
    if (!gens.back().is_zero()) all_zero = false;
  }
  if (all_zero) gens.clear();
  return extract_components(make_locus(num_vars, gens));
}

SupportLocus uniform_extension(const SupportLocus& local, const std::vector<int>& var_map, int r) {
  SupportLocus out;
  out.num_vars = r;
  out.status = local.status;
  out.notes = local.notes;
  for (const auto& f : local.ideal_gens) out.ideal_gens.push_back(substitute_variables(f, var_map, r));
  if (local.components) {
    std::vector<TranslatedSubtorus> comps;
    for (const auto& c : *local.components) {
      const auto& h = c.exponents();
      IntMatrix rows(h.rows(), r);
      for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j) rows(i, var_map[j]) = h(i, j);
      auto parts = TranslatedSubtorus::from_equations(r, rows, c.translates());
      comps.insert(comps.end(), parts.begin(), parts.end());
    }
    std::sort(comps.begin(), comps.end());
    out.components = comps;
  }
  return out;
}

SupportLocus local_uniform_support(const Arrangement& a, const Flat& s) {
  auto local = local_subarrangement(a, s);
  auto chart = arrangement_presentation(local);
  auto locus = alexander_support_deg1(chart.presentation);
  return uniform_extension(locus, s.closure, static_cast<int>(a.size()));
}

Specialization linking_specialization(const SupportLocus& s) {
  Specialization out;
  std::vector<long> ones(s.num_vars, 1);
  std::vector<LaurentPoly> spec;
  for (const auto& f : s.ideal_gens) {
    auto x = specialize(f, ones);
    if (!x.is_zero()) spec.push_back(x);
  }
  if (spec.empty()) {
    out.non_torsion = true;
    out.poly = LaurentPoly(1);
    return out;
  }
  // the root set is what matters; repeated roots come from products with t_i - 1
  out.poly = from_upoly(squarefree_part(to_upoly(laurent_gcd(spec, 1).normalized()))).normalized();
  return out;
}

}  // namespace jumploci
