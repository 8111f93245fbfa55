#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "jumploci/presentation.hpp"
#include "jumploci/theorems.hpp"

namespace jumploci {

inline constexpr const char* kToolVersion = "0.1.0";

enum class InputKind { arrangement, wiring, presentation };

struct InputDocument {
  InputKind kind = InputKind::arrangement;
  std::string name;
  std::optional<Arrangement> arrangement;
  std::optional<int> infinity;                 // 0-based
  std::vector<std::vector<Form>> resonance;    // declared components, each a list of equations
  std::optional<WiringDiagram> wiring;
  std::optional<GroupPresentation> presentation;
  std::optional<std::vector<int>> identification;  // 0-based target of each component
  int identification_vars = 0;
};

InputDocument parse_input(const nlohmann::json& j);
InputDocument parse_input_text(const std::string& text);
InputDocument parse_input_file(const std::string& path);
nlohmann::json serialize(const InputDocument& doc);

SuiteInput to_suite_input(const InputDocument& doc);

nlohmann::json locus_json(const SupportLocus& s);
nlohmann::json verdict_json(const Verdict& v);
nlohmann::json invariants_json(const SuiteContext& c);

struct ReportOptions {
  bool invariants = true;
  bool verdicts = false;
};
nlohmann::json make_report(const InputDocument& doc, const SuiteContext& c, const std::vector<Verdict>& verdicts,
                           const ReportOptions& what);
// Canonical text: sorted keys, two-space indent, trailing newline.
std::string render(const nlohmann::json& j);

}  // namespace jumploci
