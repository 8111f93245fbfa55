#pragma once

#include <optional>
#include <vector>

#include "jumploci/arrangement.hpp"
#include "jumploci/modules.hpp"
#include "jumploci/presentation.hpp"
#include "jumploci/torus.hpp"

namespace jumploci {

// Abelianized Fox derivative of w with respect to generator j (0-based).
LaurentPoly fox_derivative(const GroupPresentation& p, const Word& w, std::size_t j);

struct AlexanderData {
  int num_vars = 0;
  LaurentMatrix fox;                // relators x generators
  std::vector<int> identification;  // generator -> variable
};

// Validates P, requires a free abelianization and checks the fundamental identity.
AlexanderData alexander_matrix(const GroupPresentation& p);
// Throws UnsupportedInput naming the torsion (or the rank defect) of H_1.
void require_free_abelianization(const GroupPresentation& p);

// Zero set of E_1 of the Fox matrix, i.e. W_0 u W_1, with components extracted.
SupportLocus alexander_support_deg1(const GroupPresentation& p);
// gcd of the E_1 generators.
LaurentPoly alexander_polynomial(const GroupPresentation& p);
// dim H_1 of the presentation complex with coefficients in the rank one local system rho.
long twisted_rank(const GroupPresentation& p, const Angles& rho);
long twisted_rank(const AlexanderData& d, const Angles& rho);

// t_i -> s_{target[i]} on every monomial (several i may share a target).
LaurentPoly substitute_variables(const LaurentPoly& f, const std::vector<int>& target, int num_vars);
// Pullback of a locus along nu^*(s) = (s_{nu[0]}, s_{nu[1]}, ...).
SupportLocus pullback_locus(const SupportLocus& s, const std::vector<int>& nu, int num_vars);
// Local locus in variables var_map[i] of (C*)^r, times the full torus elsewhere.
SupportLocus uniform_extension(const SupportLocus& local, const std::vector<int>& var_map, int r);

SupportLocus local_uniform_support(const Arrangement& a, const Flat& s);

struct Specialization {
  bool non_torsion = false;  // the diagonal lies in the locus
  LaurentPoly poly;          // squarefree, univariate; meaningless when non_torsion
};
Specialization linking_specialization(const SupportLocus& s);

}  // namespace jumploci
