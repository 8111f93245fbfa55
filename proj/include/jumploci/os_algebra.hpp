#pragma once

#include <map>
#include <vector>

#include "jumploci/arrangement.hpp"
#include "jumploci/linalg.hpp"
#include "jumploci/torus.hpp"

namespace jumploci {

// Orlik-Solomon algebra of the central arrangement in C^{n+1} cut out by the
// forms, in the nbc basis, built up to a fixed degree.
class OSAlgebra {
 public:
  OSAlgebra(const Arrangement& a, std::size_t degree);

  std::size_t num_generators() const { return r_; }
  std::size_t degree() const { return degree_; }
  // Largest degree with a nonzero component (the rank of the arrangement).
  std::size_t top_degree() const { return rank_; }
  std::size_t dim(std::size_t p) const { return p < basis_.size() ? basis_[p].size() : 0; }
  const std::vector<std::vector<int>>& basis(std::size_t p) const { return basis_.at(p); }
  const std::vector<std::vector<int>>& circuits() const { return circuits_; }

  // Matrix of multiplication by e_i from degree p to degree p+1 (columns index the source).
  const QMatrix& mult(std::size_t i, std::size_t p) const { return mult_.at(p).at(i); }
  // Express the monomial e_T (T sorted, any subset) in the nbc basis of degree |T|.
  std::map<std::size_t, Rational> express(const std::vector<int>& t) const;
  // Matrix of multiplication by a = sum a_i e_i from degree p to p+1.
  QMatrix mult_by(const std::vector<Rational>& a, std::size_t p) const;

 private:
  bool independent(const std::vector<int>& s) const;
  std::size_t r_, degree_, rank_;
  const Arrangement* arr_;
  std::vector<std::vector<std::vector<int>>> basis_;
  std::vector<std::map<std::vector<int>, std::size_t>> index_;
  std::vector<std::vector<int>> circuits_;
  std::vector<std::vector<QMatrix>> mult_;
  mutable std::map<std::vector<int>, std::map<std::size_t, Rational>> memo_;
};

// Sign s with e_A e_B = s e_{A u B} for disjoint sorted A, B.
int wedge_sign(const std::vector<int>& a, const std::vector<int>& b);

// dim H^i(A, a) of the Aomoto complex; requires i < degree() or degree() == top_degree().
long aomoto_rank(const OSAlgebra& os, const std::vector<Rational>& a, std::size_t i);

struct ResonancePoint {
  std::vector<Rational> coordinates;
  std::vector<bool> in_degree;  // in_degree[i]: a lies in R^i
  bool in_union() const;
};
ResonancePoint resonance_membership(const OSAlgebra& os, const std::vector<Rational>& a, std::size_t up_to);

// Degree-one local resonance of the central arrangement: the subspaces
// {z supported on X, sum z = 0} for rank-2 flats X of multiplicity >= 3.
std::vector<LinearSubspace> local_resonance_of(const Arrangement& a);

struct ResonancePiece {
  std::vector<int> flat;   // global positions of the stratum's closure
  LinearSubspace space;    // local resonance times {sum over the complement = 0}
  bool trivial = false;    // the local piece is {0}
};
// Right-hand pieces for the strata along `component` of dimension >= min_dim.
std::vector<ResonancePiece> local_resonance_components(const Arrangement& a, int component, int min_dim);

}  // namespace jumploci
