#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jumploci/alexander.hpp"
#include "jumploci/arrangement.hpp"
#include "jumploci/os_algebra.hpp"
#include "jumploci/sampling.hpp"

namespace jumploci {

enum class VerdictStatus { holds, sampled_holds, not_applicable, fails };
std::string to_string(VerdictStatus s);

struct Verdict {
  std::string id;
  VerdictStatus status = VerdictStatus::not_applicable;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
};

// Canonical checker ids in run order, and the accepted aliases.
const std::vector<std::string>& theorem_ids();
std::optional<std::string> resolve_theorem_id(const std::string& name);

struct SuiteInput {
  std::string name;
  std::optional<Arrangement> arrangement;
  std::optional<int> infinity;  // 0-based position in the arrangement
  std::optional<GroupPresentation> presentation;
  std::optional<std::vector<int>> identification;  // component -> target variable
  int identification_vars = 0;
  std::vector<LinearSubspace> declared_resonance;  // essential components supplied with the input
};

struct SuiteOptions {
  SamplingOptions sampling;
  int degree = 1;
  std::vector<std::string> theorems;  // canonical ids; empty runs everything
  std::size_t resonance_samples = 25;
  std::size_t oracle_characters = 40;
};

// Everything the checkers share, computed once per input.
struct SuiteContext {
  SuiteInput input;
  SuiteOptions options;
  bool is_arrangement = false;
  std::optional<Arrangement> v;  // the arrangement minus any hyperplane at infinity
  int r = 0;
  int n = 0;
  std::optional<ChartPresentation> chart;
  GroupPresentation presentation;
  SupportLocus locus;                   // degree <= 1 support, ambient variables
  std::optional<SupportLocus> generic;  // generic-chart locus when infinity is marked
  std::optional<SupportLocus> pulled;   // pullback along the identification
  std::optional<LatticeData> lattice;
  std::optional<OSAlgebra> os;
  std::vector<std::pair<LinearSubspace, std::string>> known_resonance;  // component, source
};

SuiteContext build_context(const SuiteInput& in, const SuiteOptions& opt);

Verdict check_cone_containment(const SuiteContext& c);
Verdict check_local_divisibility(const SuiteContext& c);
Verdict check_euler_positivity(const SuiteContext& c);
Verdict check_root_orders(const SuiteContext& c);
Verdict check_tangent_cone(const SuiteContext& c);
Verdict check_resonance_divisibility(const SuiteContext& c);
Verdict check_oracle_agreement(const SuiteContext& c);
Verdict check_linking_specialization(const SuiteContext& c);

std::vector<Verdict> run_suite(const SuiteContext& c);

// Bound along one component: union of local uniform loci cut by
// the product of the variables off the stratum.
std::vector<TranslatedSubtorus> local_bound(const Arrangement& v, int component, int min_dim);
// Roots of unity orders m with Phi_m dividing p, and whether p is a product of such factors.
std::pair<std::vector<long>, bool> cyclotomic_orders_of(const UPoly& p, long bound);

}  // namespace jumploci
