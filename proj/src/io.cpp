#include "jumploci/io.hpp"

#include <fstream>
#include <sstream>

namespace jumploci {

using nlohmann::json;

namespace {

std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const json& field(const json& j, const std::string& path, const char* key) {
  if (!j.contains(key)) throw InputError(path, std::string("missing field '") + key + "'");
  return j.at(key);
}

long as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw InputError(path, "expected an integer");
  return j.get<long>();
}

Rational as_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw InputError(path, "expected an integer or a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(path, e.what());
  }
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path, "expected an array");
  return j;
}

Form as_form(const json& j, const std::string& path) {
  Form f;
  for (std::size_t i = 0; i < as_array(j, path).size(); ++i) f.push_back(as_rational(j[i], child(path, i)));
  return f;
}

json form_json(const Form& f) {
  json out = json::array();
  for (const auto& q : f) out.push_back(to_string(q));
  return out;
}

void reject_unknown(const json& j, const std::vector<std::string>& allowed) {
  for (const auto& [k, v] : j.items())
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
      throw InputError("/" + k, "unknown field");
}

void parse_arrangement(const json& j, InputDocument& d) {
  reject_unknown(j, {"kind", "name", "ambient_dim", "hyperplanes", "labels", "infinity", "resonance"});
  const int n = static_cast<int>(as_int(field(j, "", "ambient_dim"), "/ambient_dim"));
  const auto& hs = as_array(field(j, "", "hyperplanes"), "/hyperplanes");
  std::vector<Form> forms;
  for (std::size_t i = 0; i < hs.size(); ++i) forms.push_back(as_form(hs[i], child("/hyperplanes", i)));
  std::vector<int> labels;
  if (j.contains("labels")) {
    const auto& ls = as_array(j["labels"], "/labels");
    for (std::size_t i = 0; i < ls.size(); ++i) labels.push_back(static_cast<int>(as_int(ls[i], child("/labels", i))));
  }
  d.arrangement.emplace(n, forms, labels);
  std::size_t r = forms.size();
  if (j.contains("infinity")) {
    const long k = as_int(j["infinity"], "/infinity");
    if (k < 1 || k > static_cast<long>(forms.size())) throw InputError("/infinity", "hyperplane index out of range");
    d.infinity = static_cast<int>(k - 1);
    --r;
  }
  if (j.contains("resonance")) {
    const auto& comps = as_array(j["resonance"], "/resonance");
    for (std::size_t c = 0; c < comps.size(); ++c) {
      const std::string cp = child("/resonance", c);
      std::vector<Form> eqs;
      for (std::size_t e = 0; e < as_array(comps[c], cp).size(); ++e) {
        eqs.push_back(as_form(comps[c][e], child(cp, e)));
        if (eqs.back().size() != r)
          throw InputError(child(cp, e), "expected " + std::to_string(r) + " coefficients, one per affine hyperplane");
      }
      d.resonance.push_back(eqs);
    }
  }
}

void parse_wiring(const json& j, InputDocument& d) {
  reject_unknown(j, {"kind", "name", "wires", "crossings"});
  WiringDiagram w;
  w.num_wires = static_cast<int>(as_int(field(j, "", "wires"), "/wires"));
  const auto& cs = as_array(field(j, "", "crossings"), "/crossings");
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const std::string cp = child("/crossings", i);
    std::vector<int> c;
    for (std::size_t k = 0; k < as_array(cs[i], cp).size(); ++k)
      c.push_back(static_cast<int>(as_int(cs[i][k], child(cp, k))) - 1);
    w.crossings.push_back(c);
  }
  randell_presentation(w);  // validation
  d.wiring = w;
}

void parse_presentation(const json& j, InputDocument& d) {
  reject_unknown(j, {"kind", "name", "generators", "components", "relators", "identification"});
  GroupPresentation p;
  const long g = as_int(field(j, "", "generators"), "/generators");
  if (g < 1) throw InputError("/generators", "presentation needs at least one generator");
  p.num_generators = static_cast<std::size_t>(g);
  const auto& cs = as_array(field(j, "", "components"), "/components");
  int r = 0;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const long c = as_int(cs[i], child("/components", i));
    if (c < 1) throw InputError(child("/components", i), "component indices start at 1");
    p.generator_component.push_back(static_cast<int>(c - 1));
    r = std::max(r, static_cast<int>(c));
  }
  p.num_components = r;
  const auto& rs = as_array(field(j, "", "relators"), "/relators");
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const std::string rp = child("/relators", i);
    try {
      if (rs[i].is_string()) {
        p.relators.push_back(parse_word(rs[i].get<std::string>(), p.num_generators));
      } else {
        Word w;
        for (std::size_t k = 0; k < as_array(rs[i], rp).size(); ++k) {
          const long x = as_int(rs[i][k], child(rp, k));
          if (x == 0 || std::labs(x) > g) throw InputError(child(rp, k), "generator index out of range");
          w.push_back(static_cast<int>(x));
        }
        p.relators.push_back(w);
      }
    } catch (const InputError& e) {
      if (!e.path().empty()) throw;
      throw InputError(rp, e.what());
    }
  }
  p.validate();
  d.presentation = p;
  if (j.contains("identification")) {
    const auto& id = j["identification"];
    const long k = as_int(field(id, "/identification", "variables"), "/identification/variables");
    if (k < 1) throw InputError("/identification/variables", "need at least one variable");
    const auto& m = as_array(field(id, "/identification", "map"), "/identification/map");
    if (m.size() != static_cast<std::size_t>(r)) throw InputError("/identification/map", "one target per component required");
    std::vector<int> map;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const long t = as_int(m[i], child("/identification/map", i));
      if (t < 1 || t > k) throw InputError(child("/identification/map", i), "target variable out of range");
      map.push_back(static_cast<int>(t - 1));
    }
    d.identification = map;
    d.identification_vars = static_cast<int>(k);
  }
}

std::string kind_name(InputKind k) {
  switch (k) {
    case InputKind::arrangement: return "arrangement";
    case InputKind::wiring: return "wiring";
    case InputKind::presentation: return "presentation";
  }
  return "?";
}

std::vector<std::string> variable_names(const SuiteContext& c) {
  std::vector<std::string> out;
  for (int i = 0; i < c.r; ++i) out.push_back("t" + std::to_string(i + 1));
  return out;
}

}  // namespace

InputDocument parse_input(const json& j) {
  if (!j.is_object()) throw InputError("", "input must be a JSON object");
  InputDocument d;
  const auto& kind = field(j, "", "kind");
  if (!kind.is_string()) throw InputError("/kind", "expected a string");
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InputError("/name", "expected a string");
    d.name = j["name"].get<std::string>();
  }
  const std::string k = kind.get<std::string>();
  if (k == "arrangement") {
    d.kind = InputKind::arrangement;
    parse_arrangement(j, d);
  } else if (k == "wiring") {
    d.kind = InputKind::wiring;
    parse_wiring(j, d);
  } else if (k == "presentation") {
    d.kind = InputKind::presentation;
    parse_presentation(j, d);
  } else {
    throw InputError("/kind", "unknown kind '" + k + "'");
  }
  return d;
}

InputDocument parse_input_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("", std::string("malformed JSON: ") + e.what());
  }
  return parse_input(j);
}

InputDocument parse_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("", "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_input_text(ss.str());
}

json serialize(const InputDocument& d) {
  json j;
  j["kind"] = kind_name(d.kind);
  if (!d.name.empty()) j["name"] = d.name;
  if (d.arrangement) {
    j["ambient_dim"] = d.arrangement->ambient_dim();
    json hs = json::array();
    for (const auto& f : d.arrangement->forms()) hs.push_back(form_json(f));
    j["hyperplanes"] = hs;
    j["labels"] = d.arrangement->labels();
    if (d.infinity) j["infinity"] = *d.infinity + 1;
    if (!d.resonance.empty()) {
      json rs = json::array();
      for (const auto& comp : d.resonance) {
        json eqs = json::array();
        for (const auto& e : comp) eqs.push_back(form_json(e));
        rs.push_back(eqs);
      }
      j["resonance"] = rs;
    }
  }
  if (d.wiring) {
    j["wires"] = d.wiring->num_wires;
    json cs = json::array();
    for (const auto& c : d.wiring->crossings) {
      json w = json::array();
      for (int x : c) w.push_back(x + 1);
      cs.push_back(w);
    }
    j["crossings"] = cs;
  }
  if (d.presentation) {
    const auto& p = *d.presentation;
    j["generators"] = p.num_generators;
    json cs = json::array();
    for (int c : p.generator_component) cs.push_back(c + 1);
    j["components"] = cs;
    json rs = json::array();
    for (const auto& w : p.relators) {
      if (p.num_generators <= 26)
        rs.push_back(word_to_string(w, p.num_generators));
      else
        rs.push_back(w);
    }
    j["relators"] = rs;
    if (d.identification) {
      json m = json::array();
      for (int t : *d.identification) m.push_back(t + 1);
      j["identification"] = {{"variables", d.identification_vars}, {"map", m}};
    }
  }
  return j;
}

SuiteInput to_suite_input(const InputDocument& d) {
  SuiteInput in;
  in.name = d.name;
  in.arrangement = d.arrangement;
  in.infinity = d.infinity;
  if (d.wiring) {
    auto p = randell_presentation(*d.wiring);
    in.presentation = p;
  }
  if (d.presentation) in.presentation = d.presentation;
  in.identification = d.identification;
  in.identification_vars = d.identification_vars;
  const int r = d.arrangement ? static_cast<int>(d.arrangement->size()) - (d.infinity ? 1 : 0) : 0;
  for (const auto& comp : d.resonance) {
    IntMatrix m(comp.size(), r);
    for (std::size_t e = 0; e < comp.size(); ++e) {
      Integer den = 1;
      for (const auto& q : comp[e]) den = lcm(den, Integer(q.get_den()));
      for (int i = 0; i < r; ++i) m(e, i) = Integer(comp[e][i] * den);
    }
    in.declared_resonance.emplace_back(r, m);
  }
  return in;
}

json locus_json(const SupportLocus& s) {
  json j;
  j["status"] = to_string(s.status);
  if (s.components) {
    json cs = json::array();
    for (const auto& c : *s.components) cs.push_back(c.to_string());
    j["components"] = cs;
  }
  json gens = json::array();
  for (const auto& f : s.ideal_gens) gens.push_back(f.to_string());
  j["generators"] = gens;
  if (!s.notes.empty()) j["notes"] = s.notes;
  return j;
}

json verdict_json(const Verdict& v) {
  return json{{"id", v.id}, {"status", to_string(v.status)}, {"witnesses", v.witnesses}, {"notes", v.notes}};
}

json invariants_json(const SuiteContext& c) {
  json j;
  j["num_variables"] = c.r;
  const auto names = variable_names(c);
  j["locus"] = locus_json(c.locus);
  auto spec = linking_specialization(c.pulled ? *c.pulled : c.locus);
  if (spec.non_torsion) {
    j["specialization"] = {{"non_torsion_diagonal", true}};
  } else {
    j["specialization"] = {{"non_torsion_diagonal", false}, {"polynomial", spec.poly.to_string({"t"})}};
  }
  if (c.is_arrangement) {
    const auto& v = *c.v;
    json a;
    a["ambient_dim"] = c.n;
    a["essential"] = is_essential(v);
    json vars = json::array();
    for (int i = 0; i < c.r; ++i) vars.push_back(names[i] + " = H" + std::to_string(v.labels()[i]));
    a["variables"] = vars;
    json lat;
    lat["rank"] = c.lattice->rank;
    std::vector<std::size_t> per_rank(c.lattice->rank + 1, 0);
    for (const auto& f : c.lattice->flats) ++per_rank[f.rank];
    lat["flats_per_rank"] = per_rank;
    json pc = json::array();
    for (const auto& x : c.lattice->poincare) pc.push_back(to_string(x));
    lat["poincare"] = pc;
    json multiple = json::array();
    for (const auto& f : c.lattice->flats)
      if (f.rank == 2 && f.closure.size() >= 3) {
        std::string s;
        for (int x : f.closure) s += (s.empty() ? "H" : ",H") + std::to_string(v.labels()[x]);
        multiple.push_back(s);
      }
    lat["multiple_points"] = multiple;
    a["lattice"] = lat;
    const Integer chi = euler_projective_complement(*c.lattice, v);
    json e;
    e["chi_projective_complement"] = to_string(chi);
    e["chi_milnor_fiber"] = to_string(Integer(Integer(c.r) * chi));
    if (c.input.infinity) {
      const Integer chi_u = euler_projective_complement(*c.input.arrangement);
      e["affine_mu"] = to_string(Integer(c.n % 2 ? Integer(-chi_u) : chi_u));
    }
    a["euler"] = e;
    j["arrangement"] = a;
    json chart;
    chart["generators"] = c.presentation.num_generators;
    chart["relators"] = c.presentation.relators.size();
    chart["line_at_infinity"] = c.input.infinity ? "marked" : "generic";
    j["chart"] = chart;
    if (c.generic) j["generic_chart_locus"] = locus_json(*c.generic);
    json res;
    json local = json::array(), declared = json::array(), cones = json::array();
    for (const auto& [k, src] : c.known_resonance) {
      auto s = k.to_string();
      (src == "local" ? local : src == "declared" ? declared : cones).push_back(s);
    }
    res["local"] = local;
    res["declared"] = declared;
    res["from_tangent_cones"] = cones;
    j["resonance"] = res;
  } else {
    j["alexander_polynomial"] = alexander_polynomial(c.presentation).to_string();
    if (c.pulled) {
      j["pullback_locus"] = locus_json(*c.pulled);
      auto g = laurent_gcd(c.pulled->ideal_gens, c.pulled->num_vars);
      j["pullback_alexander_polynomial"] = g.is_zero() ? "0" : g.to_string();
    }
    j["resonance"] = {{"skipped", "needs the cohomology ring of an arrangement"}};
  }
  return j;
}

json make_report(const InputDocument& doc, const SuiteContext& c, const std::vector<Verdict>& verdicts,
                 const ReportOptions& what) {
  json j;
  j["input"] = serialize(doc);
  j["version"] = kToolVersion;
  j["seed"] = c.options.sampling.seed;
  j["max_torsion_order"] = c.options.sampling.max_order;
  j["degree"] = c.options.degree;
  if (what.invariants) j["invariants"] = invariants_json(c);
  if (what.verdicts) {
    json vs = json::array();
    for (const auto& v : verdicts) vs.push_back(verdict_json(v));
    j["verdicts"] = vs;
  }
  return j;
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

}  // namespace jumploci
