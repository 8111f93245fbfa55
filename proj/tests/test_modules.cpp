#include "doctest.h"
#include "jumploci/modules.hpp"
#include "support.hpp"

using namespace jumploci;
using testing_support::parse_simple;
using testing_support::uniform;

namespace {

LaurentPoly binom(std::vector<long> a) {
  return LaurentPoly::monomial(Exponent(a.begin(), a.end()), 1) - LaurentPoly::one(static_cast<int>(a.size()));
}

// p-adic valuation of f for an irreducible p.
int valuation(LaurentPoly f, const LaurentPoly& p) {
  if (f.is_zero()) return 1 << 20;
  int v = 0;
  while (auto q = laurent_divide(f, p)) {
    f = *q;
    ++v;
  }
  return v;
}

// Length of A_P over the discrete valuation ring Gamma_P for modules with at
// most two generators: Smith form over the DVR, pivoting on a minimal
// valuation entry and eliminating the remaining rows against it.
int localization_length(const FPModule& m, const LaurentPoly& p) {
  const auto& rel = m.presentation();
  if (m.num_generators() == 1) {
    int best = 1 << 20;
    for (const auto& row : rel) best = std::min(best, valuation(row[0], p));
    return best;
  }
  REQUIRE(m.num_generators() == 2);
  int best = 1 << 20;
  std::size_t pr = 0, pc = 0;
  for (std::size_t i = 0; i < rel.size(); ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      int v = valuation(rel[i][j], p);
      if (v < best) best = v, pr = i, pc = j;
    }
  const std::size_t oc = 1 - pc;
  const auto& a1 = rel[pr][pc];
  const auto& b1 = rel[pr][oc];
  int second = 1 << 20;
  for (std::size_t i = 0; i < rel.size(); ++i) {
    if (i == pr) continue;
    // entry of row_i - (a_i / a1) row_1 in the other column, times a1
    auto e = a1 * rel[i][oc] - rel[i][pc] * b1;
    second = std::min(second, valuation(e, p) - best);
  }
  return best + second;
}

// Recompute char_poly multiplicities from the DVR oracle on its prime factors.
void check_against_oracle(const FPModule& m) {
  auto delta = char_poly(m);
  auto split = binomial_factorization(delta);
  REQUIRE(split.cofactor.is_constant());
  for (const auto& f : split.factors) {
    const int n = m.num_vars();
    LaurentPoly p(n);
    const auto& phi = cyclotomic_poly(f.order);
    for (std::size_t j = 0; j < phi.coeffs().size(); ++j) {
      Exponent e(n);
      for (int v = 0; v < n; ++v) e[v] = f.direction[v] * static_cast<long>(j);
      p.add_term(e, phi.coeffs()[j]);
    }
    CHECK(localization_length(m, p) == f.multiplicity);
  }
}

LaurentPoly random_binomial_product(std::mt19937_64& rng, int n, int max_factors) {
  LaurentPoly f = LaurentPoly::one(n);
  int k = static_cast<int>(uniform(rng, 0, max_factors));
  for (int i = 0; i < k; ++i) {
    std::vector<long> a(n);
    for (auto& x : a) x = uniform(rng, -1, 2);
    if (std::all_of(a.begin(), a.end(), [](long x) { return x == 0; })) a[0] = 1;
    f *= binom(a);
  }
  if (uniform(rng, 0, 3) == 0) {
    auto extra = testing_support::random_laurent(rng, n, 2, 0, 1, 2);
    if (!extra.is_zero()) f *= extra;
  }
  return f;
}

bool same_vanishing(const std::vector<LaurentPoly>& a, const std::vector<LaurentPoly>& b, int n,
                    std::mt19937_64& rng) {
  auto la = make_locus(n, a), lb = make_locus(n, b);
  for (int k = 0; k < 25; ++k) {
    auto p = testing_support::random_torsion_point(rng, n, 4);
    if (la.contains_point(p) != lb.contains_point(p)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("fitting ideal examples") {
  auto f = parse_simple(1, {{{2}, 1}, {{0}, -3}});
  CHECK(fitting_ideal(FPModule::cyclic(f), 0) == std::vector<LaurentPoly>{f.normalized()});
  std::vector<LaurentPoly> rel = {binom({1, 0, 0}), binom({0, 1, 0}), binom({0, 0, 1})};
  auto m1 = FPModule::cyclic(3, rel);
  CHECK(fitting_ideal(m1, 0).size() == 3);
  auto s = support(m1);
  REQUIRE(s.components);
  REQUIRE(s.components->size() == 1);
  CHECK((*s.components)[0] == TranslatedSubtorus::point({0, 0, 0}));
  FPModule id(2, 2, {{LaurentPoly::one(2), LaurentPoly(2)}, {LaurentPoly(2), LaurentPoly::one(2)}});
  CHECK(fitting_ideal(id, 0) == std::vector<LaurentPoly>{LaurentPoly::one(2)});
  CHECK(support(id).is_empty());
  // E_k conventions
  CHECK(fitting_ideal(id, 2) == std::vector<LaurentPoly>{LaurentPoly::one(2)});
  FPModule wide(1, 3, {{binom({1}), binom({1}), binom({1})}});
  CHECK(fitting_ideal(wide, 0).front().is_zero());
}

TEST_CASE("support and char_poly examples") {
  auto ex = parse_simple(2, {{{2, 1}, 1}, {{0, 0}, -1}});
  auto m = FPModule::cyclic(ex);
  auto s = support(m);
  REQUIRE(s.components);
  CHECK((*s.components)[0].to_string() == "{t1^2*t2 = 1}");
  CHECK(char_poly(m) == ex);
  check_against_oracle(m);
  auto t1 = binom({1});
  auto sq = FPModule::cyclic(t1 * t1);
  CHECK(char_poly(sq) == t1 * t1);
  check_against_oracle(sq);
  std::vector<LaurentPoly> rel = {binom({1, 0}), binom({0, 1})};
  CHECK(char_poly(FPModule::cyclic(2, rel)) == LaurentPoly::one(2));
  // zero module and free module conventions
  CHECK(char_poly(FPModule(1, 1, {{LaurentPoly::one(1)}})) == LaurentPoly::one(1));
  CHECK(char_poly(FPModule(1, 1, {})) == LaurentPoly::one(1));
}

TEST_CASE("involution") {
  auto m = FPModule::cyclic(binom({1}));
  auto mi = involution(m);
  CHECK(mi.presentation()[0][0] == binom({-1}));
  auto s = support(mi);
  CHECK((*s.components)[0] == TranslatedSubtorus::point({0}));
  auto ex = FPModule::cyclic(parse_simple(2, {{{2, 1}, 1}, {{0, 0}, -1}}));
  CHECK(*support(involution(ex)).components == *support(ex).components);
  std::mt19937_64 rng(31);
  for (int k = 0; k < 60; ++k) {
    int n = static_cast<int>(uniform(rng, 1, 3));
    LaurentMatrix rel(2, std::vector<LaurentPoly>(2, LaurentPoly(n)));
    for (auto& row : rel)
      for (auto& x : row) x = random_binomial_product(rng, n, 2);
    FPModule a(n, 2, rel);
    auto la = make_locus(n, fitting_ideal(a, 0)), lb = make_locus(n, fitting_ideal(involution(a), 0));
    for (int j = 0; j < 20; ++j) {
      auto p = testing_support::random_torsion_point(rng, n, 6);
      Angles q = p;
      for (auto& x : q) x = frac_mod1(-x);
      REQUIRE(la.contains_point(p) == lb.contains_point(q));
    }
  }
}

TEST_CASE("divisibility check examples") {
  auto t = binom({1});
  auto a = FPModule::cyclic(t), b = FPModule::cyclic(t * t), c = FPModule::cyclic(t);
  std::vector<Angles> samples;
  for (long k = 0; k < 12; ++k) samples.push_back({Rational(k, 12)});
  for (auto& s : samples) s[0].canonicalize();
  CHECK(divisibility_check(a, b, c, samples));
  auto plus = FPModule::cyclic(parse_simple(1, {{{1}, 1}, {{0}, 1}}));
  FPModule zero(1, 1, {{LaurentPoly::one(1)}});
  CHECK_FALSE(divisibility_check(a, plus, zero, samples));
}

TEST_CASE("short exact sequences of cyclic modules satisfy the divisibility property") {
  std::mt19937_64 rng(32);
  for (int k = 0; k < 80; ++k) {
    int n = static_cast<int>(uniform(rng, 1, 3));
    auto f = random_binomial_product(rng, n, 2), g = random_binomial_product(rng, n, 2);
    // 0 -> Gamma/(g) --f--> Gamma/(fg) -> Gamma/(f) -> 0
    std::vector<Angles> samples;
    for (int j = 0; j < 20; ++j) samples.push_back(testing_support::random_torsion_point(rng, n, 6));
    REQUIRE(divisibility_check(FPModule::cyclic(g), FPModule::cyclic(f * g), FPModule::cyclic(f), samples));
    REQUIRE(char_poly(FPModule::cyclic(f * g)) == (char_poly(FPModule::cyclic(f)) * char_poly(FPModule::cyclic(g))).normalized());
  }
}

TEST_CASE("char_poly of direct sums multiplies") {
  std::mt19937_64 rng(33);
  for (int k = 0; k < 80; ++k) {
    int n = static_cast<int>(uniform(rng, 1, 3));
    auto f = random_binomial_product(rng, n, 3), g = random_binomial_product(rng, n, 3);
    auto a = FPModule::cyclic(f), b = FPModule::cyclic(g);
    auto s = direct_sum(a, b);
    REQUIRE(char_poly(s) == (char_poly(a) * char_poly(b)).normalized());
    if (binomial_factorization(char_poly(s)).cofactor.is_constant()) check_against_oracle(s);
  }
}

TEST_CASE("tensor products of cyclic modules: support is the intersection") {
  std::mt19937_64 rng(34);
  for (int k = 0; k < 60; ++k) {
    int n = static_cast<int>(uniform(rng, 1, 3));
    LaurentPoly f = LaurentPoly::one(n), g = LaurentPoly::one(n);
    for (int i = 0; i < 2; ++i) {
      std::vector<long> a(n), b(n);
      for (auto& x : a) x = uniform(rng, -1, 2);
      for (auto& x : b) x = uniform(rng, -1, 2);
      if (std::all_of(a.begin(), a.end(), [](long x) { return x == 0; })) a[0] = 1;
      if (std::all_of(b.begin(), b.end(), [](long x) { return x == 0; })) b[n - 1] = 1;
      f *= binom(a);
      g *= binom(b);
    }
    // A (x) B = Gamma/(f, g)
    auto tensor = FPModule::cyclic(n, {f, g});
    auto st = support(tensor);
    auto sa = support(FPModule::cyclic(f)), sb = support(FPModule::cyclic(g));
    REQUIRE(st.components);
    std::vector<TranslatedSubtorus> meet;
    for (const auto& x : *sa.components)
      for (const auto& y : *sb.components)
        for (const auto& z : intersect(x, y)) meet.push_back(z);
    REQUIRE(*st.components == prune_contained(meet));
    for (int j = 0; j < 20; ++j) {
      auto p = testing_support::random_torsion_point(rng, n, 6);
      REQUIRE(st.contains_point(p) == (sa.contains_point(p) && sb.contains_point(p)));
    }
  }
}

TEST_CASE("fitting ideals are invariant under presentation moves") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 200; ++trial) {
    int n = static_cast<int>(uniform(rng, 1, 2));
    std::size_t s = uniform(rng, 1, 3), g = uniform(rng, 1, 3);
    LaurentMatrix rel(s, std::vector<LaurentPoly>(g, LaurentPoly(n)));
    for (auto& row : rel)
      for (auto& x : row) x = uniform(rng, 0, 2) ? random_binomial_product(rng, n, 2) : LaurentPoly(n);
    FPModule m(n, g, rel);
    LaurentMatrix moved = m.presentation();
    std::size_t cols = g;
    int move = static_cast<int>(uniform(rng, 0, 3));
    auto mult = testing_support::random_laurent(rng, n, 2, -1, 1, 2);
    if (move == 0 && moved.size() >= 2) {
      for (std::size_t j = 0; j < cols; ++j) moved[0][j] += mult * moved[1][j];
    } else if (move == 1 && cols >= 2) {
      for (auto& row : moved) row[0] += mult * row[1];
    } else if (move == 2 && !moved.empty()) {
      Exponent e(n);
      for (auto& x : e) x = uniform(rng, -2, 2);
      for (auto& x : moved[0]) x = x * LaurentPoly::monomial(e, Rational(-3));
      if (moved.size() >= 2) std::swap(moved[0], moved.back());
    } else if (move == 3) {
      // stabilization: new generator killed by a new relation
      for (auto& row : moved) row.push_back(LaurentPoly(n));
      std::vector<LaurentPoly> extra(cols + 1, LaurentPoly(n));
      for (std::size_t j = 0; j < cols; ++j) extra[j] = testing_support::random_laurent(rng, n, 2, -1, 1, 2);
      extra[cols] = LaurentPoly::one(n);
      moved.push_back(extra);
      ++cols;
    }
    FPModule m2(n, cols, moved);
    for (std::size_t k = 0; k <= 1; ++k) {
      auto e1 = fitting_ideal(m, k), e2 = fitting_ideal(m2, k);
      REQUIRE(laurent_gcd(e1, n) == laurent_gcd(e2, n));
      REQUIRE(same_vanishing(e1, e2, n, rng));
    }
  }
}
