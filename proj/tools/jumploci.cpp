// Command-line front end: invariants, check, corpus run.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "jumploci/io.hpp"

namespace fs = std::filesystem;
using namespace jumploci;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Flags {
  std::string seed;
  long max_order = 12;
  int degree = 1;
  std::string output;
  std::vector<std::string> theorems;
  bool update = false;
};

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  const auto v = std::stoull(text, &used, 0);
  if (used != text.size()) throw std::invalid_argument(text);
  return v;
}

SuiteOptions options_from(const Flags& f) {
  SuiteOptions o;
  o.sampling.seed = kDefaultSeed;
  if (const char* env = std::getenv("JUMPLOCI_SEED"); env && *env) o.sampling.seed = parse_seed(env);
  if (!f.seed.empty()) o.sampling.seed = parse_seed(f.seed);
  if (f.max_order < 2) throw CLI::ValidationError("--max-torsion-order", "must be at least 2");
  o.sampling.max_order = f.max_order;
  o.degree = f.degree;
  for (const auto& t : f.theorems) {
    auto id = resolve_theorem_id(t);
    if (!id) throw CLI::ValidationError("--theorem", "unknown theorem id '" + t + "'");
    o.theorems.push_back(*id);
  }
  return o;
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) throw std::runtime_error("cannot write " + output);
  out << text;
}

bool any_failed(const std::vector<Verdict>& vs) {
  return std::any_of(vs.begin(), vs.end(), [](const Verdict& v) { return v.status == VerdictStatus::fails; });
}

std::string full_report(const std::string& path, const SuiteOptions& o, bool& failed) {
  auto doc = parse_input_file(path);
  auto ctx = build_context(to_suite_input(doc), o);
  auto vs = run_suite(ctx);
  failed = any_failed(vs);
  return render(make_report(doc, ctx, vs, {true, true}));
}

int cmd_invariants(const std::string& path, const Flags& f) {
  const auto o = options_from(f);
  auto doc = parse_input_file(path);
  auto ctx = build_context(to_suite_input(doc), o);
  emit(render(make_report(doc, ctx, {}, {true, false})), f.output);
  return kExitOk;
}

int cmd_check(const std::string& path, const Flags& f) {
  const auto o = options_from(f);
  auto doc = parse_input_file(path);
  auto ctx = build_context(to_suite_input(doc), o);
  auto vs = run_suite(ctx);
  emit(render(make_report(doc, ctx, vs, {false, true})), f.output);
  for (const auto& v : vs) std::cerr << v.id << ": " << to_string(v.status) << "\n";
  return any_failed(vs) ? kExitFailed : kExitOk;
}

int cmd_corpus_run(const std::string& dir, const Flags& f) {
  const auto o = options_from(f);
  std::vector<fs::path> inputs;
  for (const auto& e : fs::directory_iterator(dir)) {
    const auto name = e.path().filename().string();
    if (e.path().extension() == ".json" && name.find(".expected.") == std::string::npos) inputs.push_back(e.path());
  }
  std::sort(inputs.begin(), inputs.end());
  nlohmann::json summary = nlohmann::json::object();
  int code = kExitOk;
  for (const auto& in : inputs) {
    const auto stem = in.stem().string();
    const auto expected = in.parent_path() / (stem + ".expected.json");
    std::string status;
    try {
      bool failed = false;
      const auto report = full_report(in.string(), o, failed);
      if (f.update) {
        std::ofstream(expected) << report;
        status = failed ? "updated, verdict failure" : "updated";
      } else if (!fs::exists(expected)) {
        status = "missing fixture";
      } else {
        std::ifstream e(expected);
        std::stringstream ss;
        ss << e.rdbuf();
        status = ss.str() == report ? "match" : "differs from fixture";
      }
      if (failed && !f.update) status += ", verdict failure";
      if (status != "match" && status != "updated") code = std::max(code, kExitFailed);
    } catch (const InputError& e) {
      status = std::string("input error: ") + e.what();
      code = kExitUsage;
    } catch (const UnsupportedInput& e) {
      status = std::string("unsupported: ") + e.what();
      code = kExitUsage;
    }
    std::cerr << stem << ": " << status << "\n";
    summary[stem] = status;
  }
  if (!f.output.empty()) emit(render(summary), f.output);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jump loci of arrangement and curve complements"};
  app.require_subcommand(1);
  Flags f;
  std::string path;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", f.seed, "sampling seed, decimal or 0x hex (default 0x5EED or JUMPLOCI_SEED)");
    sub->add_option("--max-torsion-order", f.max_order, "largest torsion order sampled")->capture_default_str();
    sub->add_option("--degree", f.degree, "homological degree bound")->capture_default_str();
    sub->add_option("--output", f.output, "write the report here instead of stdout");
  };
  auto* inv = app.add_subcommand("invariants", "compute lattice, Euler, loci and resonance data");
  inv->add_option("path", path, "input document")->required();
  common(inv);
  auto* check = app.add_subcommand("check", "run the theorem checkers");
  check->add_option("path", path, "input document")->required();
  check->add_option("--theorem", f.theorems, "checker id or alias; repeatable");
  common(check);
  auto* corpus = app.add_subcommand("corpus", "corpus management");
  corpus->require_subcommand(1);
  auto* run = corpus->add_subcommand("run", "compare every input in a directory with its fixture");
  run->add_option("dir", path, "corpus directory")->required();
  run->add_flag("--update", f.update, "rewrite the fixtures instead of comparing");
  common(run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  try {
    if (*inv) return cmd_invariants(path, f);
    if (*check) return cmd_check(path, f);
    return cmd_corpus_run(path, f);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedInput& e) {
    std::cerr << "unsupported input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: bad number '" << e.what() << "'\n";
    return kExitUsage;
  }
}
