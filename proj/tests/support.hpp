#pragma once

#include <random>

#include "jumploci/laurent.hpp"

namespace testing_support {

using namespace jumploci;

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

inline LaurentPoly random_laurent(std::mt19937_64& rng, int vars, int max_terms, long lo, long hi, long cmax = 5) {
  LaurentPoly f(vars);
  int terms = static_cast<int>(uniform(rng, 1, max_terms));
  for (int k = 0; k < terms; ++k) {
    Exponent e(vars);
    for (auto& x : e) x = uniform(rng, lo, hi);
    long c = uniform(rng, -cmax, cmax);
    if (c == 0) c = 1;
    f.add_term(e, Rational(c));
  }
  return f;
}

inline std::vector<Rational> random_torsion_point(std::mt19937_64& rng, int vars, long max_order) {
  std::vector<Rational> p(vars);
  for (auto& x : p) {
    long n = uniform(rng, 1, max_order);
    x = Rational(uniform(rng, 0, n - 1), n);
    x.canonicalize();
  }
  return p;
}

inline LaurentPoly parse_simple(int vars, std::initializer_list<std::pair<std::vector<long>, long>> terms) {
  LaurentPoly f(vars);
  for (const auto& [e, c] : terms) f.add_term(e, Rational(c));
  return f;
}

}  // namespace testing_support
