#include <filesystem>

#include "doctest.h"
#include "jumploci/io.hpp"

using namespace jumploci;
using nlohmann::json;

namespace {

std::string error_path(const std::string& text) {
  try {
    parse_input_text(text);
  } catch (const InputError& e) {
    return e.path();
  }
  return "<no error>";
}

std::string error_message(const std::string& text) {
  try {
    parse_input_text(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("arrangement documents") {
  auto d = parse_input_text(R"({"kind":"arrangement","ambient_dim":2,
      "hyperplanes":[[1,0,0],["1/2","-1/3",0],[0,0,1]],"infinity":3,
      "resonance":[[["1","1"]]]})");
  REQUIRE(d.arrangement);
  CHECK(d.arrangement->size() == 3);
  CHECK(d.arrangement->forms()[1][1] == Rational(-1, 3));
  CHECK(d.infinity == 2);
  auto in = to_suite_input(d);
  REQUIRE(in.declared_resonance.size() == 1);
  CHECK(in.declared_resonance[0].to_string() == "{z1 + z2 = 0}");
}

TEST_CASE("schema errors carry a pointer path") {
  CHECK(error_path(R"({"kind":"arrangement","ambient_dim":2,"hyperplanes":[[1,0,0],[1,"x",0]]})") == "/hyperplanes/1/1");
  CHECK(error_path(R"({"kind":"arrangement","ambient_dim":2,"hyperplanes":[[1,0,0],[1,0]]})") == "/hyperplanes/1");
  CHECK(error_path(R"({"kind":"arrangement","hyperplanes":[[1,0,0]]})") == "");
  CHECK(error_message(R"({"kind":"arrangement","hyperplanes":[[1,0,0]]})").find("ambient_dim") != std::string::npos);
  CHECK(error_path(R"({"kind":"arrangement","ambient_dim":2,"hyperplanes":[[1,0,0]],"infinity":4})") == "/infinity");
  CHECK(error_path(R"({"kind":"arrangement","ambient_dim":2,"hyperplanes":[[1,0,0]],"colour":1})") == "/colour");
  CHECK(error_path(R"({"kind":"knot"})") == "/kind");
  CHECK(error_path(R"({"kind":"presentation","generators":2,"components":[1,2],"relators":["abAc"]})") == "/relators/0");
  CHECK(error_path(R"({"kind":"presentation","generators":2,"components":[1,2],"relators":[[1,3]]})") == "/relators/0/1");
  CHECK(error_path(R"({"kind":"presentation","generators":2,"components":[1,2],"relators":["ab"]})") == "/relators/0");
  CHECK(error_path(R"({"kind":"presentation","generators":2,"components":[1,2],"relators":[],
      "identification":{"variables":1,"map":[1,2]}})") == "/identification/map/1");
  CHECK(error_path(R"({"kind":"wiring","wires":3,"crossings":[[1,3]]})") == "/crossings/0");
  CHECK(error_path("[1, 2") == "");
}

TEST_CASE("duplicate hyperplanes are a non-reduced divisor") {
  auto msg = error_message(R"({"kind":"arrangement","ambient_dim":2,"hyperplanes":[[1,1,0],[0,0,1],[-2,-2,0]]})");
  CHECK(msg == "/hyperplanes/2: non-reduced divisor: proportional to hyperplane 1");
}

TEST_CASE("presentations, wiring, identification") {
  auto d = parse_input_text(R"({"kind":"presentation","generators":3,"components":[1,2,3],
      "relators":["abcaCBAA",[1,2,3,2,-3,-2,-1,-2]],"identification":{"variables":2,"map":[1,1,2]}})");
  REQUIRE(d.presentation);
  CHECK(word_to_string(d.presentation->relators[1], 3) == "abcbCBAB");
  CHECK(d.identification == std::vector<int>{0, 0, 1});
  auto w = parse_input_text(R"({"kind":"wiring","wires":3,"crossings":[[1,2,3]]})");
  auto in = to_suite_input(w);
  REQUIRE(in.presentation);
  CHECK(in.presentation->num_components == 3);
}

TEST_CASE("round trip over the bundled corpus") {
  const std::filesystem::path dir = JUMPLOCI_CORPUS_DIR;
  int seen = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    const auto name = e.path().filename().string();
    if (e.path().extension() != ".json" || name.find(".expected.") != std::string::npos) continue;
    INFO(name);
    auto doc = parse_input_file(e.path().string());
    const json once = serialize(doc);
    const json twice = serialize(parse_input(once));
    CHECK(once == twice);
    ++seen;
  }
  CHECK(seen >= 15);
}

TEST_CASE("reports are deterministic and keys sorted") {
  auto doc = parse_input_file(std::string(JUMPLOCI_CORPUS_DIR) + "/fourlines.json");
  auto make = [&] {
    auto ctx = build_context(to_suite_input(doc), SuiteOptions{});
    return render(make_report(doc, ctx, run_suite(ctx), {true, true}));
  };
  const auto a = make();
  CHECK(a == make());
  auto j = json::parse(a);
  CHECK(j["invariants"]["locus"]["components"] == json::array({"{t1*t2*t3 = 1, t4 = 1}"}));
  CHECK(a.find("\"degree\"") < a.find("\"input\""));
}
