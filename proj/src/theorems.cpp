#include "jumploci/theorems.hpp"

#include <algorithm>
#include <map>
#include <iterator>
#include <random>
#include <set>

namespace jumploci {

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::holds: return "holds";
    case VerdictStatus::sampled_holds: return "sampled_holds";
    case VerdictStatus::not_applicable: return "not_applicable";
    case VerdictStatus::fails: return "fails";
  }
  return "?";
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {"cone_containment", "local_divisibility",     "euler_positivity",
                                               "root_orders",      "tangent_cone",           "resonance_divisibility",
                                               "oracle_agreement", "linking_specialization"};
  return ids;
}

std::optional<std::string> resolve_theorem_id(const std::string& name) {
  static const std::map<std::string, std::string> aliases = {
      {"prop5.2", "cone_containment"}, {"thm5.4", "local_divisibility"},     {"cor5.4", "euler_positivity"},
      {"prop6.3", "root_orders"},      {"thm7.1", "tangent_cone"},
      {"thm7.3", "resonance_divisibility"}, {"thm2.1", "oracle_agreement"}, {"prop6.2", "linking_specialization"}};
  const auto& ids = theorem_ids();
  if (std::find(ids.begin(), ids.end(), name) != ids.end()) return name;
  if (auto it = aliases.find(name); it != aliases.end()) return it->second;
  return std::nullopt;
}

namespace {

Verdict verdict(const std::string& id, VerdictStatus s, std::string note = {}) {
  Verdict v;
  v.id = id;
  v.status = s;
  if (!note.empty()) v.notes.push_back(std::move(note));
  return v;
}

TranslatedSubtorus product_torus(int r, const std::vector<int>& support) {
  std::vector<long> a(r, 0);
  for (int i : support) a[i] = 1;
  auto parts = TranslatedSubtorus::hypersurface(a, Rational(0));
  return parts.at(0);
}

std::vector<int> all_indices(int r) {
  std::vector<int> v(r);
  for (int i = 0; i < r; ++i) v[i] = i;
  return v;
}

bool contained_in_some(const TranslatedSubtorus& c, const std::vector<TranslatedSubtorus>& pieces) {
  for (const auto& p : pieces)
    if (contains(p, c)) return true;
  return false;
}

// A torsion point of c outside all pieces, checked exactly; nullopt if none found.
std::optional<Angles> escaping_point(const TranslatedSubtorus& c, const std::vector<TranslatedSubtorus>& pieces,
                                     const SamplingOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  for (int k = 0; k < 200; ++k) {
    auto p = point_on(c, rng, opt.max_order);
    bool inside = false;
    for (const auto& q : pieces)
      if (membership(p, q)) inside = true;
    if (!inside) return p;
  }
  return std::nullopt;
}

std::string join_components(const std::vector<TranslatedSubtorus>& cs) {
  std::string out;
  for (const auto& c : cs) out += (out.empty() ? "" : " u ") + c.to_string();
  return out.empty() ? "empty" : out;
}

bool hypotheses_for_arrangement(const SuiteContext& c, const std::string& id, Verdict& v) {
  if (!c.is_arrangement) {
    v = verdict(id, VerdictStatus::not_applicable, "requires an arrangement input");
    return false;
  }
  return true;
}

bool essential_gate(const SuiteContext& c, const std::string& id, Verdict& v) {
  if (!hypotheses_for_arrangement(c, id, v)) return false;
  if (!is_essential(*c.v)) {
    v = verdict(id, VerdictStatus::not_applicable, "arrangement is not essential");
    return false;
  }
  return true;
}

}  // namespace

std::vector<TranslatedSubtorus> local_bound(const Arrangement& v, int component, int min_dim) {
  const int r = static_cast<int>(v.size());
  std::vector<TranslatedSubtorus> pieces;
  for (const auto& s : strata_along(v, component, min_dim)) {
    const auto all = all_indices(r);
    std::vector<int> outside;
    std::set_difference(all.begin(), all.end(), s.closure.begin(), s.closure.end(), std::back_inserter(outside));
    auto local = local_uniform_support(v, s);
    if (!local.components) throw UnsupportedInput("local support along a stratum could not be decomposed");
    for (const auto& comp : *local.components) {
      if (outside.empty()) {
        pieces.push_back(comp);
        continue;
      }
      for (auto& x : intersect(comp, product_torus(r, outside))) pieces.push_back(x);
    }
  }
  return prune_contained(pieces);
}

std::pair<std::vector<long>, bool> cyclotomic_orders_of(const UPoly& p, long bound) {
  std::vector<long> orders;
  UPoly rest = p.monic();
  for (long m = 1; m <= bound && rest.degree() > 0; ++m) {
    const UPoly& phi = cyclotomic_poly(m);
    if (phi.degree() > rest.degree()) continue;
    UPoly q, rem;
    rest.divmod(phi, q, rem);
    if (rem.is_zero()) {
      orders.push_back(m);
      rest = q;
    }
  }
  return {orders, rest.degree() <= 0};
}

SuiteContext build_context(const SuiteInput& in, const SuiteOptions& opt) {
  SuiteContext c;
  c.input = in;
  c.options = opt;
  if (opt.degree != 1) throw UnsupportedInput("only degree 1 jump loci are computable");
  if (in.arrangement) {
    c.is_arrangement = true;
    const auto& a = *in.arrangement;
    c.v = in.infinity ? a.deletion(*in.infinity) : a;
    c.r = static_cast<int>(c.v->size());
    c.n = a.ambient_dim();
    c.chart = arrangement_presentation(a, in.infinity);
    c.presentation = c.chart->presentation;
    c.locus = alexander_support_deg1(c.presentation);
    if (in.infinity) c.generic = alexander_support_deg1(arrangement_presentation(*c.v).presentation);
    c.lattice = intersection_lattice(*c.v);
    c.os.emplace(*c.v, 2);
    for (const auto& l : local_resonance_of(*c.v)) c.known_resonance.push_back({l, "local"});
    for (const auto& l : in.declared_resonance) c.known_resonance.push_back({l, "declared"});
    if (c.locus.components)
      for (const auto& comp : *c.locus.components)
        if (auto tc = tangent_cone(comp); tc && tc->dimension() > 0) {
          bool known = false;
          for (const auto& [k, src] : c.known_resonance)
            if (k.contains(*tc)) known = true;
          if (!known) c.known_resonance.push_back({*tc, "tangent_cone"});
        }
  } else if (in.presentation) {
    c.presentation = *in.presentation;
    c.r = in.presentation->num_components;
    c.locus = alexander_support_deg1(c.presentation);
    if (in.identification) c.pulled = pullback_locus(c.locus, *in.identification, in.identification_vars);
  } else {
    throw InputError("", "input has neither an arrangement nor a presentation");
  }
  return c;
}

Verdict check_cone_containment(const SuiteContext& c) {
  const std::string id = "cone_containment";
  Verdict v;
  if (!hypotheses_for_arrangement(c, id, v)) return v;
  v = verdict(id, VerdictStatus::holds);
  const int r = c.r;
  auto target = product_torus(r, all_indices(r));
  v.notes.push_back("target " + target.to_string());
  if (c.locus.status != DecompositionStatus::exact || !c.locus.components) {
    for (const auto& p : torsion_sample(r, {}, c.options.sampling))
      if (c.locus.contains_point(p) && !membership(p, target)) {
        v.status = VerdictStatus::fails;
        v.witnesses.push_back(angles_to_string(p));
        return v;
      }
    v.status = VerdictStatus::sampled_holds;
    v.notes.push_back("locus not certified; checked at sampled torsion points");
    return v;
  }
  for (const auto& comp : *c.locus.components) {
    if (contains(target, comp)) {
      v.witnesses.push_back(comp.to_string());
      continue;
    }
    v.status = VerdictStatus::fails;
    if (auto p = escaping_point(comp, {target}, c.options.sampling))
      v.witnesses = {angles_to_string(*p) + " on " + comp.to_string()};
    else
      v.witnesses = {comp.to_string()};
    return v;
  }
  if (c.generic) {
    if (c.generic->components && *c.generic->components == *c.locus.components) {
      v.notes.push_back("chart with the marked hyperplane at infinity agrees with a generic chart");
    } else {
      v.status = VerdictStatus::fails;
      v.notes.push_back("generic chart locus differs: " + join_components(c.generic->components.value_or(std::vector<TranslatedSubtorus>{})));
    }
  }
  return v;
}

Verdict check_local_divisibility(const SuiteContext& c) {
  const std::string id = "local_divisibility";
  Verdict v;
  if (!essential_gate(c, id, v)) return v;
  if (c.n < 2) return verdict(id, VerdictStatus::not_applicable, "needs n >= 2 for degree 1");
  v = verdict(id, VerdictStatus::holds);
  const int min_dim = c.n - 2;
  std::optional<std::vector<TranslatedSubtorus>> sharp;
  for (int i = 0; i < c.r; ++i) {
    auto bound = local_bound(*c.v, i, min_dim);
    std::string line = "component " + std::to_string(i + 1) + ": " + join_components(bound);
    if (c.locus.components) {
      for (const auto& comp : *c.locus.components)
        if (!contained_in_some(comp, bound)) {
          v.status = VerdictStatus::fails;
          auto p = escaping_point(comp, bound, c.options.sampling);
          v.witnesses.push_back("component " + std::to_string(i + 1) + " misses " +
                                (p ? angles_to_string(*p) : comp.to_string()));
        }
    } else {
      for (const auto& p : torsion_sample(c.r, {}, c.options.sampling)) {
        if (!c.locus.contains_point(p)) continue;
        bool inside = false;
        for (const auto& q : bound)
          if (membership(p, q)) inside = true;
        if (!inside) {
          v.status = VerdictStatus::fails;
          v.witnesses.push_back("component " + std::to_string(i + 1) + " misses " + angles_to_string(p));
          break;
        }
      }
      if (v.status == VerdictStatus::holds) v.status = VerdictStatus::sampled_holds;
    }
    v.notes.push_back(line);
    // running intersection over the components
    if (!sharp) {
      sharp = bound;
    } else {
      std::vector<TranslatedSubtorus> next;
      for (const auto& x : *sharp)
        for (const auto& y : bound)
          for (auto& z : intersect(x, y)) next.push_back(z);
      sharp = prune_contained(next);
    }
  }
  if (sharp) v.notes.push_back("intersected bound: " + join_components(*sharp));
  if (c.locus.components && v.status != VerdictStatus::fails)
    for (const auto& comp : *c.locus.components) v.witnesses.push_back(comp.to_string());
  return v;
}

Verdict check_euler_positivity(const SuiteContext& c) {
  const std::string id = "euler_positivity";
  Verdict v;
  if (!essential_gate(c, id, v)) return v;
  const Integer chi = euler_projective_complement(*c.lattice, *c.v);
  const Integer signed_chi = c.n % 2 ? Integer(-chi) : chi;
  v = verdict(id, signed_chi >= 0 ? VerdictStatus::holds : VerdictStatus::fails);
  v.witnesses.push_back("chi(M*) = " + to_string(chi));
  v.witnesses.push_back("chi(F) = " + to_string(Integer(Integer(c.r) * chi)));
  std::string prod;
  for (int i = 1; i <= c.r; ++i) prod += (i > 1 ? "*t" : "t") + std::to_string(i);
  v.notes.push_back("formula output, not verified: Delta_n(M) = (" + prod + " - 1)^" + to_string(signed_chi));
  return v;
}

Verdict check_root_orders(const SuiteContext& c) {
  const std::string id = "root_orders";
  Verdict v;
  if (!essential_gate(c, id, v)) return v;
  auto spec = linking_specialization(c.locus);
  if (spec.non_torsion) {
    v = verdict(id, VerdictStatus::fails, "the diagonal lies in the locus");
    v.witnesses.push_back("diagonal");
    return v;
  }
  const Integer bound = factorial(static_cast<unsigned>(c.r - 1));
  const UPoly p = to_upoly(spec.poly);
  v = verdict(id, VerdictStatus::holds);
  v.witnesses.push_back("specialization " + spec.poly.to_string({"t"}));
  if (p.degree() <= 0) return v;
  const UPoly x_to_e = upoly_powmod_x(bound, p);
  const bool divides = (x_to_e - UPoly::constant(Rational(1))).mod(p).is_zero();
  auto [orders, complete] = cyclotomic_orders_of(p, std::min<long>(bound.get_si(), 5040));
  std::string os;
  for (long m : orders) os += (os.empty() ? "" : ", ") + std::to_string(m);
  v.witnesses.push_back("root orders {" + os + "} divide (r-1)! = " + to_string(bound));
  if (!divides || !complete) {
    v.status = VerdictStatus::fails;
    v.witnesses.back() = "root orders {" + os + "} do not all divide (r-1)! = " + to_string(bound);
  }
  return v;
}

Verdict check_tangent_cone(const SuiteContext& c) {
  const std::string id = "tangent_cone";
  Verdict v;
  if (!hypotheses_for_arrangement(c, id, v)) {
    v.notes = {"resonance needs the cohomology ring of an arrangement"};
    return v;
  }
  v = verdict(id, VerdictStatus::holds);
  std::mt19937_64 rng(c.options.sampling.seed);
  std::vector<LinearSubspace> cones;
  if (!c.locus.components) return verdict(id, VerdictStatus::not_applicable, "locus not decomposed");
  for (const auto& comp : *c.locus.components) {
    auto tc = tangent_cone(comp);
    if (!tc) continue;
    cones.push_back(*tc);
    bool exact = tc->dimension() == 0;
    for (const auto& [k, src] : c.known_resonance)
      if (src != "tangent_cone" && k.contains(*tc)) exact = true;
    for (const auto& z : sample_subspace(*tc, c.options.resonance_samples, rng))
      if (!resonance_membership(*c.os, z, 1).in_union()) {
        v.status = VerdictStatus::fails;
        v.witnesses = {"non-resonant point " + angles_to_string(z) + " on " + tc->to_string()};
        return v;
      }
    v.witnesses.push_back(tc->to_string());
    if (!exact && v.status == VerdictStatus::holds) v.status = VerdictStatus::sampled_holds;
  }
  // reverse inclusion on known resonance components (straightness)
  for (const auto& [k, src] : c.known_resonance)
    for (const auto& z : sample_subspace(k, c.options.resonance_samples, rng)) {
      bool inside = false;
      for (const auto& tc : cones)
        if (tc.contains_point(z)) inside = true;
      if (!inside) {
        v.status = VerdictStatus::fails;
        v.witnesses = {"resonant point " + angles_to_string(z) + " outside every tangent cone"};
        return v;
      }
    }
  v.notes.push_back("reverse inclusion sampled on " + std::to_string(c.known_resonance.size()) + " known resonance components");
  return v;
}

Verdict check_resonance_divisibility(const SuiteContext& c) {
  const std::string id = "resonance_divisibility";
  Verdict v;
  if (!essential_gate(c, id, v)) return v;
  if (c.n < 2) return verdict(id, VerdictStatus::not_applicable, "needs n >= 2 for degree 1");
  v = verdict(id, VerdictStatus::holds);
  std::mt19937_64 rng(c.options.sampling.seed);
  // R^0 = {0} is always a component of the left side
  std::vector<std::pair<LinearSubspace, std::string>> lhs = c.known_resonance;
  lhs.insert(lhs.begin(), {LinearSubspace(c.r, IntMatrix::identity(c.r)), "R^0"});
  for (int i = 0; i < c.r; ++i) {
    auto pieces = local_resonance_components(*c.v, i, c.n - 2);
    for (const auto& [k, src] : lhs) {
      bool exact = false;
      for (const auto& p : pieces)
        if (p.space.contains(k)) exact = true;
      for (const auto& z : sample_subspace(k, c.options.resonance_samples, rng)) {
        bool inside = false;
        for (const auto& p : pieces)
          if (p.space.contains_point(z)) inside = true;
        if (!inside || !resonance_membership(*c.os, z, 1).in_union()) {
          v.status = VerdictStatus::fails;
          v.witnesses.push_back("component " + std::to_string(i + 1) + ": point " + angles_to_string(z) + " of " +
                                k.to_string() + (inside ? " is not resonant" : " lies outside every piece"));
          return v;
        }
      }
      if (!exact) v.status = VerdictStatus::sampled_holds;
    }
  }
  for (const auto& [k, src] : lhs) v.witnesses.push_back(k.to_string() + " (" + src + ")");
  if (c.known_resonance.empty())
    v.notes.push_back("no known resonance components besides R^0; holds vacuously");
  else if (c.input.declared_resonance.empty())
    v.notes.push_back("essential components are only those found as tangent cones; none were declared");
  return v;
}

Verdict check_oracle_agreement(const SuiteContext& c) {
  const std::string id = "oracle_agreement";
  Verdict v = verdict(id, VerdictStatus::holds);
  auto data = alexander_matrix(c.presentation);
  const auto comps = c.locus.components.value_or(std::vector<TranslatedSubtorus>{});
  auto chars = oracle_characters(c.r, comps, c.options.oracle_characters, c.options.sampling);
  std::size_t positive = 0;
  for (const auto& rho : chars) {
    const long t = twisted_rank(data, rho);
    const bool in = c.locus.contains_point(rho);
    if (t > 0) ++positive;
    if ((t > 0) != in) {
      v.status = VerdictStatus::fails;
      v.witnesses.push_back(angles_to_string(rho) + ": twisted rank " + std::to_string(t) +
                            (in ? ", in support" : ", not in support"));
    }
  }
  v.notes.push_back(std::to_string(chars.size()) + " characters, " + std::to_string(positive) + " with positive twisted rank");
  return v;
}

Verdict check_linking_specialization(const SuiteContext& c) {
  const std::string id = "linking_specialization";
  const SupportLocus& s = c.pulled ? *c.pulled : c.locus;
  auto spec = linking_specialization(s);
  if (spec.non_torsion) {
    Verdict v = verdict(id, VerdictStatus::fails, "the diagonal lies in the locus");
    v.witnesses.push_back("diagonal");
    return v;
  }
  const UPoly p = to_upoly(spec.poly);
  auto [orders, complete] = cyclotomic_orders_of(p, std::max<long>(2, 4 * p.degree() * p.degree() + 2));
  Verdict v = verdict(id, complete ? VerdictStatus::holds : VerdictStatus::fails);
  std::string os;
  for (long m : orders) os += (os.empty() ? "" : ", ") + std::to_string(m);
  v.witnesses.push_back("specialization " + spec.poly.to_string({"t"}));
  v.witnesses.push_back("root orders {" + os + "}");
  if (!complete) v.notes.push_back("some roots are not roots of unity");
  return v;
}

std::vector<Verdict> run_suite(const SuiteContext& c) {
  std::vector<Verdict> out;
  auto wanted = [&](const std::string& id) {
    return c.options.theorems.empty() ||
           std::find(c.options.theorems.begin(), c.options.theorems.end(), id) != c.options.theorems.end();
  };
  auto add = [&](const std::string& id, Verdict (*f)(const SuiteContext&)) {
    if (wanted(id)) out.push_back(f(c));
  };
  add("cone_containment", check_cone_containment);
  add("local_divisibility", check_local_divisibility);
  add("euler_positivity", check_euler_positivity);
  add("root_orders", check_root_orders);
  add("tangent_cone", check_tangent_cone);
  add("resonance_divisibility", check_resonance_divisibility);
  if (!c.is_arrangement) {
    add("oracle_agreement", check_oracle_agreement);
    add("linking_specialization", check_linking_specialization);
  }
  return out;
}

}  // namespace jumploci
