#pragma once

#include <vector>

#include "jumploci/laurent.hpp"
#include "jumploci/torus.hpp"

namespace jumploci {

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

// coker(Gamma^s -> Gamma^g): rows are relations, columns are generators.
class FPModule {
 public:
  FPModule(int num_vars, std::size_t num_generators, LaurentMatrix relations);
  static FPModule cyclic(const LaurentPoly& f);
  static FPModule cyclic(int num_vars, const std::vector<LaurentPoly>& relations);

  int num_vars() const { return n_; }
  std::size_t num_generators() const { return g_; }
  std::size_t num_relations() const { return rel_.size(); }
  const LaurentMatrix& presentation() const { return rel_; }

 private:
  int n_;
  std::size_t g_;
  LaurentMatrix rel_;
};

// All size x size minors, memoized Laplace expansion; rows/cols limited to 64.
// Zero minors are omitted; duplicates up to units removed.
std::vector<LaurentPoly> all_minors(const LaurentMatrix& m, std::size_t cols, std::size_t size, int num_vars);

std::vector<LaurentPoly> fitting_ideal(const FPModule& m, std::size_t k);
SupportLocus support(const FPModule& m);
LaurentPoly char_poly(const FPModule& m);
FPModule involution(const FPModule& m);
FPModule direct_sum(const FPModule& a, const FPModule& b);

// Property check for a sequence A -> B -> C asserted exact by the caller.
bool divisibility_check(const FPModule& a, const FPModule& b, const FPModule& c, const std::vector<Angles>& samples);

}  // namespace jumploci
