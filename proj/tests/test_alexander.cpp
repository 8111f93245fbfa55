#include <chrono>
#include <random>

#include "arrangement_oracles.hpp"
#include "cover_oracle.hpp"
#include "jumploci/sampling.hpp"
#include "doctest.h"
#include "jumploci/alexander.hpp"
#include "support.hpp"

using namespace jumploci;
using testing_support::forms_of;
using testing_support::uniform;

namespace {

std::vector<std::string> component_strings(const SupportLocus& s) {
  std::vector<std::string> out;
  REQUIRE(s.components.has_value());
  for (const auto& c : *s.components) out.push_back(c.to_string());
  return out;
}

GroupPresentation from_letters(std::size_t g, std::vector<int> comps, int r, std::initializer_list<const char*> rels) {
  GroupPresentation p;
  p.num_generators = g;
  p.generator_component = std::move(comps);
  p.num_components = r;
  for (const char* w : rels) p.relators.push_back(parse_word(w, g));
  return p;
}

}  // namespace

TEST_CASE("fox derivatives") {
  auto p = from_letters(2, {0, 1}, 2, {"abAB"});
  auto da = fox_derivative(p, p.relators[0], 0);
  auto db = fox_derivative(p, p.relators[0], 1);
  CHECK(da == LaurentPoly::one(2) - LaurentPoly::variable(2, 1));
  CHECK(db == LaurentPoly::variable(2, 0) - LaurentPoly::one(2));
}

TEST_CASE("fox fundamental identity on random words") {
  std::mt19937_64 rng(0xF0C5);
  for (int trial = 0; trial < 50; ++trial) {
    const int g = static_cast<int>(uniform(rng, 1, 4));
    GroupPresentation p = free_presentation(g);
    Word w;
    int len = static_cast<int>(uniform(rng, 0, 12));
    for (int k = 0; k < len; ++k) {
      int x = static_cast<int>(uniform(rng, 1, g));
      w.push_back(uniform(rng, 0, 1) ? x : -x);
    }
    LaurentPoly lhs(g);
    Exponent total(g, 0);
    for (int x : w) total[std::abs(x) - 1] += x > 0 ? 1 : -1;
    for (int j = 0; j < g; ++j) lhs += fox_derivative(p, w, j) * (LaurentPoly::variable(g, j) - LaurentPoly::one(g));
    CHECK(lhs == LaurentPoly::monomial(total, 1) - LaurentPoly::one(g));
  }
}

TEST_CASE("randell presentations") {
  WiringDiagram two{2, {{0, 1}}};
  auto p = randell_presentation(two);
  REQUIRE(p.relators.size() == 1);
  CHECK(word_to_string(p.relators[0], 2) == "abAB");
  WiringDiagram bad{2, {{0, 2}}};
  CHECK_THROWS_AS(randell_presentation(bad), InputError);
  WiringDiagram twice{2, {{0, 1}, {0, 1}}};
  CHECK_THROWS_AS(randell_presentation(twice), InputError);
  WiringDiagram gap{3, {{0, 2}}};
  CHECK_THROWS_AS(randell_presentation(gap), InputError);
}

TEST_CASE("degree one supports of small presentations") {
  SUBCASE("commutator") {
    auto p = from_letters(2, {0, 1}, 2, {"abAB"});
    auto s = alexander_support_deg1(p);
    CHECK(component_strings(s) == std::vector<std::string>{"{t1 = 1, t2 = 1}"});
    auto pulled = pullback_locus(s, {0, 0}, 1);
    CHECK(component_strings(pulled) == std::vector<std::string>{"{t1 = 1}"});
    CHECK(twisted_rank(p, {Rational(1, 2), Rational(0)}) == 0);
    CHECK(twisted_rank(p, {Rational(0), Rational(0)}) == 2);
  }
  SUBCASE("three pencil") {
    WiringDiagram d{3, {{0, 1, 2}}};
    auto p = randell_presentation(d);
    CHECK(p.relators.size() == 2);
    auto s = alexander_support_deg1(p);
    CHECK(component_strings(s) == std::vector<std::string>{"{t1*t2*t3 = 1}"});
    CHECK(twisted_rank(p, {Rational(1, 3), Rational(1, 3), Rational(1, 3)}) == 1);
    CHECK(linking_specialization(s).poly.to_string() == "t1^3 - 1");
  }
  SUBCASE("node and line germ") {
    auto p = from_letters(3, {0, 1, 2}, 3, {"abcaCBAA", "abcbCBAB"});
    auto s = alexander_support_deg1(p);
    CHECK(component_strings(s) == std::vector<std::string>{"{t1*t2*t3 = 1}"});
    auto pulled = pullback_locus(s, {0, 0, 1}, 2);
    CHECK(component_strings(pulled) == std::vector<std::string>{"{t1^2*t2 = 1}"});
    CHECK(laurent_gcd(pulled.ideal_gens, 2).to_string() == "t1^2*t2 - 1");
  }
  SUBCASE("free group and torsion") {
    auto s = alexander_support_deg1(free_presentation(2));
    CHECK(component_strings(s) == std::vector<std::string>{"(C*)^2"});
    auto one = alexander_support_deg1(free_presentation(1));
    CHECK(component_strings(one) == std::vector<std::string>{"{t1 = 1}"});
    auto tor = from_letters(2, {0, 0}, 1, {"aaBB"});
    CHECK_THROWS_AS(alexander_support_deg1(tor), UnsupportedInput);
  }
}

TEST_CASE("four line example") {
  auto t0 = std::chrono::steady_clock::now();
  Arrangement a(2, forms_of({{1, 0, 0}, {1, -1, 0}, {1, 1, 0}, {2, -1, 1}, {0, 0, 1}}));
  auto chart = arrangement_presentation(a, 4);
  CHECK(chart.presentation.relators.size() == 5);
  auto s = alexander_support_deg1(chart.presentation);
  CHECK(s.status == DecompositionStatus::exact);
  CHECK(component_strings(s) == std::vector<std::string>{"{t1*t2*t3 = 1, t4 = 1}"});
  // the same locus with a generic line at infinity, restricted to the first four lines
  auto generic = alexander_support_deg1(arrangement_presentation(a.deletion(4)).presentation);
  CHECK(component_strings(generic) == component_strings(s));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(secs < 5.0);
}

TEST_CASE("braid arrangement") {
  // xyz(x-y)(x-z)(y-z): four triple points and one non-local component
  Arrangement a(2, forms_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}}));
  auto s = alexander_support_deg1(arrangement_presentation(a).presentation);
  CHECK(s.status == DecompositionStatus::exact);
  auto comps = component_strings(s);
  CHECK(comps.size() == 5);
  for (const auto& c : *s.components) CHECK(c.dimension() == 2);
}

namespace {

std::optional<Arrangement> random_plane_arrangement(std::mt19937_64& rng, int r) {
  std::vector<Form> fs;
  for (int k = 0; k < r; ++k) {
    Form f(3);
    for (auto& x : f) x = uniform(rng, -2, 2);
    fs.push_back(f);
  }
  try {
    return Arrangement(2, fs);
  } catch (const InputError&) {
    return std::nullopt;
  }
}

}  // namespace

TEST_CASE("twisted ranks agree with the support and with finite covers") {
  std::mt19937_64 rng(0x0AC1E);
  SamplingOptions opt;
  int tested = 0;
  while (tested < 12) {
    auto a = random_plane_arrangement(rng, static_cast<int>(uniform(rng, 2, 5)));
    if (!a) continue;
    ++tested;
    auto chart = arrangement_presentation(*a);
    const auto& p = chart.presentation;
    auto s = alexander_support_deg1(p);
    REQUIRE(s.status == DecompositionStatus::exact);
    auto data = alexander_matrix(p);
    const int r = p.num_components;
    for (const auto& rho : oracle_characters(r, *s.components, 40, opt)) {
      long tr = twisted_rank(data, rho);
      CHECK((tr > 0) == s.contains_point(rho));
      CHECK((tr > 0) == s.components_contain(rho));
      CHECK(tr >= 0);
    }
    for (int k = 0; k < 15; ++k) {
      long n = uniform(rng, 2, 4);
      std::vector<long> shift(r);
      Angles rho(r);
      for (int i = 0; i < r; ++i) {
        shift[i] = uniform(rng, 0, n - 1);
        rho[i] = Rational(shift[i], n);
        rho[i].canonicalize();
      }
      CHECK(testing_support::cover_eigenspace_rank(p, shift, n) == twisted_rank(data, rho));
    }
  }
}

TEST_CASE("local uniform supports") {
  Arrangement a(2, forms_of({{1, 0, 0}, {1, -1, 0}, {1, 1, 0}, {2, -1, 1}, {0, 0, 1}}));
  auto v = a.deletion(4);
  for (const auto& f : strata_along(v, 0, 0)) {
    auto s = local_uniform_support(v, f);
    REQUIRE(s.components.has_value());
    if (f.closure == std::vector<int>{0, 1, 2})
      CHECK(component_strings(s) == std::vector<std::string>{"{t1*t2*t3 = 1}"});
    else if (f.closure == std::vector<int>{0, 3})
      CHECK(component_strings(s) == std::vector<std::string>{"{t1 = 1, t4 = 1}"});
    else
      CHECK(component_strings(s) == std::vector<std::string>{"{t1 = 1}"});
  }
}
