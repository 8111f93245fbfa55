#pragma once

#include <vector>

#include "jumploci/arrangement.hpp"

namespace testing_support {

using namespace jumploci;

// Characteristic data via deletion-restriction only, never touching the lattice.
inline std::vector<Integer> poincare_by_deletion(const Arrangement& a) {
  if (a.size() == 1) return {Integer(1), Integer(1)};
  auto del = poincare_by_deletion(a.deletion(0));
  std::vector<Integer> res;
  if (a.ambient_dim() >= 2) {
    res = poincare_by_deletion(a.restriction(0));
  } else {
    // in C^2 every other line restricts to the origin of the line H
    res = {Integer(1), Integer(1)};
  }
  std::vector<Integer> out(std::max(del.size(), res.size() + 1), Integer(0));
  for (std::size_t i = 0; i < del.size(); ++i) out[i] += del[i];
  for (std::size_t i = 0; i < res.size(); ++i) out[i + 1] += res[i];
  return out;
}

// chi of the projective complement: the quotient pi(t)/(1+t) at t = -1.
inline Integer euler_by_deletion(const Arrangement& a) {
  auto pi = poincare_by_deletion(a);
  Integer prev = 0, value = 0;
  for (std::size_t i = 0; i + 1 < pi.size(); ++i) {
    Integer b = pi[i] - prev;
    value += (i % 2 ? Integer(-b) : b);
    prev = b;
  }
  return value;
}

inline std::vector<Form> forms_of(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Form> out;
  for (const auto& r : rows) {
    Form f;
    for (long x : r) f.emplace_back(x);
    out.push_back(f);
  }
  return out;
}

}  // namespace testing_support
