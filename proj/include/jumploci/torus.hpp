#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jumploci/int_matrix.hpp"
#include "jumploci/laurent.hpp"

namespace jumploci {

using Angles = std::vector<Rational>;  // torsion point, coordinates mod 1

std::vector<std::string> default_names(int n, const std::string& stem);

// Linear subspace of C^r cut out by integer equations.
// Canonical form: reduced row echelon basis scaled to primitive integer rows.
class LinearSubspace {
 public:
  LinearSubspace() = default;
  LinearSubspace(int num_vars, const IntMatrix& equations);
  static LinearSubspace from_rational(int num_vars, const std::vector<std::vector<Rational>>& equations);
  static LinearSubspace whole(int num_vars) { return LinearSubspace(num_vars, IntMatrix(0, num_vars)); }

  int num_vars() const { return n_; }
  const IntMatrix& equations() const { return eq_; }
  int dimension() const { return n_ - static_cast<int>(eq_.rows()); }
  bool contains_point(const std::vector<Rational>& z) const;
  bool contains(const LinearSubspace& sub) const;  // sub is a subset of *this
  LinearSubspace intersect(const LinearSubspace& o) const;
  std::vector<std::vector<Rational>> basis() const;
  bool operator==(const LinearSubspace& o) const { return n_ == o.n_ && eq_ == o.eq_; }
  bool operator<(const LinearSubspace& o) const { return to_string() < o.to_string(); }
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  int n_ = 0;
  IntMatrix eq_;
};

// {t : t^{a_j} = e^{2 pi i c_j}} in canonical form (Hermite-reduced saturated
// rows, translates in [0,1)). Always nonempty and connected.
class TranslatedSubtorus {
 public:
  TranslatedSubtorus() = default;
  // All components of the solution set (empty if inconsistent).
  static std::vector<TranslatedSubtorus> from_equations(int num_vars, const IntMatrix& rows, const Angles& angles);
  static TranslatedSubtorus full(int num_vars);
  static TranslatedSubtorus point(const Angles& angles);
  // {t^a = e^{2 pi i c}} for a nonzero a; may have several components.
  static std::vector<TranslatedSubtorus> hypersurface(const std::vector<long>& a, const Rational& c);

  int num_vars() const { return n_; }
  int dimension() const { return n_ - static_cast<int>(h_.rows()); }
  const IntMatrix& exponents() const { return h_; }
  const Angles& translates() const { return phi_; }
  bool contains_identity() const;

  // t = e^{2 pi i base} * s^{B}, B = param_basis() (r x d), s in (C*)^d.
  const IntMatrix& param_basis() const { return basis_; }
  const Angles& base_point() const { return base_; }
  // P (r x d) with B^T P = I, turning parameter monomials into ambient ones.
  IntMatrix param_left_inverse() const;
  Angles point_at(const Angles& params) const;

  bool operator==(const TranslatedSubtorus& o) const { return n_ == o.n_ && h_ == o.h_ && phi_ == o.phi_; }
  bool operator!=(const TranslatedSubtorus& o) const { return !(*this == o); }
  bool operator<(const TranslatedSubtorus& o) const;
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void finish();
  int n_ = 0;
  IntMatrix h_;
  Angles phi_;
  IntMatrix basis_;
  Angles base_;
};

bool membership(const Angles& point, const TranslatedSubtorus& t);
std::vector<TranslatedSubtorus> intersect(const TranslatedSubtorus& a, const TranslatedSubtorus& b);
bool contains(const TranslatedSubtorus& outer, const TranslatedSubtorus& inner);  // inner subset of outer
std::optional<LinearSubspace> tangent_cone(const TranslatedSubtorus& t);

// Restriction of f to T in the parameters s of T.
CycLaurent restrict_to(const LaurentPoly& f, const TranslatedSubtorus& t);
LaurentPoly restrict_to_rational(const LaurentPoly& f, const TranslatedSubtorus& t);  // requires identity in T

// Drop members contained in another member; result sorted.
std::vector<TranslatedSubtorus> prune_contained(std::vector<TranslatedSubtorus> list);

// One factor Phi_order(t^direction) of a rational Laurent polynomial.
struct BinomialFactor {
  std::vector<long> direction;  // primitive
  long order = 1;
  int multiplicity = 1;
};
struct BinomialSplit {
  std::vector<BinomialFactor> factors;
  LaurentPoly cofactor;  // no binomial factor left
};
BinomialSplit binomial_factorization(const LaurentPoly& f);
std::string factor_to_string(const BinomialFactor& b, const std::vector<std::string>& names = {});

enum class DecompositionStatus { exact, sampled, undecomposed };
std::string to_string(DecompositionStatus s);

struct SupportLocus {
  int num_vars = 0;
  std::vector<LaurentPoly> ideal_gens;
  std::optional<std::vector<TranslatedSubtorus>> components;
  DecompositionStatus status = DecompositionStatus::undecomposed;
  std::vector<std::string> notes;

  // Membership decided from the generators (exact evaluation).
  bool contains_point(const Angles& p) const;
  bool components_contain(const Angles& p) const;
  bool is_empty() const { return components && components->empty(); }
};

SupportLocus make_locus(int num_vars, std::vector<LaurentPoly> gens);
SupportLocus extract_components(const SupportLocus& s);
// Decompose V(I_1) u V(I_2) u ... ; ideal_gens of the result are the pairwise products.
SupportLocus extract_components_union(int num_vars, const std::vector<std::vector<LaurentPoly>>& ideals);

// Deduplicate generators up to units; zero generators dropped.
std::vector<LaurentPoly> normalize_generators(const std::vector<LaurentPoly>& gens);

}  // namespace jumploci
