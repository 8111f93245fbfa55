#pragma once

#include <string>
#include <vector>

#include "jumploci/exact.hpp"

namespace jumploci {

using Form = std::vector<Rational>;

// Hyperplanes of CP^n given by linear forms in n+1 homogeneous coordinates.
// Labels are the global (1-based) indices, kept through sub-arrangements.
class Arrangement {
 public:
  Arrangement(int ambient_dim, std::vector<Form> forms, std::vector<int> labels = {});

  int ambient_dim() const { return n_; }
  std::size_t size() const { return forms_.size(); }
  const std::vector<Form>& forms() const { return forms_; }
  const std::vector<int>& labels() const { return labels_; }

  std::size_t rank_of(const std::vector<int>& members) const;
  std::vector<int> closure(const std::vector<int>& members) const;
  Arrangement subarrangement(const std::vector<int>& members) const;
  Arrangement deletion(int i) const;
  // Restriction to hyperplane i, as an arrangement in CP^{n-1} (duplicates merged).
  Arrangement restriction(int i) const;

 private:
  int n_;
  std::vector<Form> forms_;
  std::vector<int> labels_;
};

struct Flat {
  std::vector<int> members;  // 0-based positions, equal to the closure for lattice flats
  std::vector<int> closure;
  std::size_t rank = 0;      // codimension in C^{n+1}
  int dim = 0;               // projective dimension n - rank
  Form witness;              // a point of the open stratum (empty when not computed)
};

struct LatticeData {
  std::vector<Flat> flats;             // ordered by rank, then lexicographically
  std::vector<Integer> mobius;         // parallel to flats
  std::vector<Integer> poincare;       // coefficients of pi(cA, t)
  std::size_t rank = 0;                // rank of the whole arrangement
  std::size_t index_of(const std::vector<int>& closure) const;
};

LatticeData intersection_lattice(const Arrangement& a);
Integer euler_projective_complement(const Arrangement& a);
Integer euler_projective_complement(const LatticeData& l, const Arrangement& a);
Integer milnor_fiber_euler(const Arrangement& a);
bool is_essential(const Arrangement& a);
// Flats containing hyperplane `component` (0-based) with projective dimension >= min_dim, each with a witness.
std::vector<Flat> strata_along(const Arrangement& a, int component, int min_dim);
Arrangement local_subarrangement(const Arrangement& a, const Flat& x);
Form find_witness(const Arrangement& a, const std::vector<int>& closure, int skip = 0);
// Every flat of A minus h meets hyperplane h in the expected codimension.
bool is_transversal(const Arrangement& a, int h);

std::string form_to_string(const Form& f);

}  // namespace jumploci
