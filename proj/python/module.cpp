#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jumploci/io.hpp"

namespace py = pybind11;
using namespace jumploci;

namespace {

SuiteOptions make_options(std::uint64_t seed, long max_order, const std::vector<std::string>& theorems) {
  SuiteOptions o;
  o.sampling.seed = seed;
  o.sampling.max_order = max_order;
  for (const auto& t : theorems) {
    auto id = resolve_theorem_id(t);
    if (!id) throw py::value_error("unknown theorem id '" + t + "'");
    o.theorems.push_back(*id);
  }
  return o;
}

std::string report(const std::string& doc_text, std::uint64_t seed, long max_order,
                   const std::vector<std::string>& theorems, bool invariants, bool verdicts) {
  auto doc = parse_input_text(doc_text);
  auto ctx = build_context(to_suite_input(doc), make_options(seed, max_order, theorems));
  std::vector<Verdict> vs;
  if (verdicts) vs = run_suite(ctx);
  return render(make_report(doc, ctx, vs, {invariants, verdicts}));
}

GroupPresentation presentation_from(std::size_t generators, const std::vector<int>& components,
                                    const std::vector<std::string>& relators) {
  GroupPresentation p;
  p.num_generators = generators;
  for (int c : components) {
    p.generator_component.push_back(c - 1);
    p.num_components = std::max(p.num_components, c);
  }
  for (const auto& r : relators) p.relators.push_back(parse_word(r, generators));
  p.validate();
  return p;
}

Angles angles_from(const std::vector<std::string>& xs) {
  Angles a;
  for (const auto& x : xs) a.push_back(frac_mod1(parse_rational(x)));
  return a;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact jump loci of arrangement and curve complements";
  m.attr("__version__") = kToolVersion;
  m.attr("DEFAULT_SEED") = kDefaultSeed;

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<UnsupportedInput>(m, "UnsupportedInput", PyExc_ValueError);

  m.def("invariants_json", [](const std::string& doc, std::uint64_t seed, long max_order) {
    return report(doc, seed, max_order, {}, true, false);
  }, py::arg("document"), py::arg("seed") = kDefaultSeed, py::arg("max_torsion_order") = 12);
  m.def("check_json", [](const std::string& doc, std::uint64_t seed, long max_order,
                         const std::vector<std::string>& theorems) {
    return report(doc, seed, max_order, theorems, false, true);
  }, py::arg("document"), py::arg("seed") = kDefaultSeed, py::arg("max_torsion_order") = 12,
     py::arg("theorems") = std::vector<std::string>{});

  m.def("support_locus", [](std::size_t generators, const std::vector<int>& components,
                            const std::vector<std::string>& relators) {
    auto s = alexander_support_deg1(presentation_from(generators, components, relators));
    std::vector<std::string> out;
    for (const auto& c : s.components.value_or(std::vector<TranslatedSubtorus>{})) out.push_back(c.to_string());
    return py::make_tuple(to_string(s.status), out);
  }, py::arg("generators"), py::arg("components"), py::arg("relators"),
     "Degree <= 1 support of a presentation; components are 1-based per generator.");
  m.def("twisted_rank", [](std::size_t generators, const std::vector<int>& components,
                           const std::vector<std::string>& relators, const std::vector<std::string>& angles) {
    return twisted_rank(presentation_from(generators, components, relators), angles_from(angles));
  }, py::arg("generators"), py::arg("components"), py::arg("relators"), py::arg("angles"),
     "dim H^1 with rank one local system exp(2 pi i angle) per component.");
  m.def("euler_characteristic", [](int ambient_dim, const std::vector<std::vector<std::string>>& hyperplanes) {
    std::vector<Form> forms;
    for (const auto& h : hyperplanes) {
      Form f;
      for (const auto& x : h) f.push_back(parse_rational(x));
      forms.push_back(f);
    }
    return to_string(euler_projective_complement(Arrangement(ambient_dim, forms)));
  }, py::arg("ambient_dim"), py::arg("hyperplanes"));
  m.def("resolve_theorem", [](const std::string& name) { return resolve_theorem_id(name); });
}
