#include <random>

#include "arrangement_oracles.hpp"
#include "doctest.h"
#include "jumploci/os_algebra.hpp"
#include "os_oracle.hpp"
#include "support.hpp"

using namespace jumploci;
using testing_support::ExteriorQuotient;
using testing_support::forms_of;
using testing_support::uniform;

namespace {

std::vector<Rational> q(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Arrangement four_lines() {
  return Arrangement(2, forms_of({{1, 0, 0}, {1, -1, 0}, {1, 1, 0}, {2, -1, 1}}));
}

std::optional<Arrangement> random_arrangement(std::mt19937_64& rng, int n, int r) {
  std::vector<Form> fs;
  for (int k = 0; k < r; ++k) {
    Form f(n + 1);
    for (auto& x : f) x = uniform(rng, -2, 2);
    fs.push_back(f);
  }
  try {
    return Arrangement(n, fs);
  } catch (const InputError&) {
    return std::nullopt;
  }
}

std::vector<Rational> random_vector(std::mt19937_64& rng, std::size_t r) {
  std::vector<Rational> a(r);
  for (auto& x : a) x = uniform(rng, -5, 5);
  return a;
}

}  // namespace

TEST_CASE("os algebra dimensions") {
  Arrangement pencil(2, forms_of({{1, 0, 0}, {1, -1, 0}, {1, 1, 0}}));
  OSAlgebra a(pencil, 2);
  CHECK(a.dim(0) == 1);
  CHECK(a.dim(1) == 3);
  CHECK(a.dim(2) == 2);
  Arrangement two(1, forms_of({{1, 0}, {0, 1}}));
  CHECK(OSAlgebra(two, 2).dim(2) == 1);
  Arrangement one(2, forms_of({{0, 1, 0}}));
  OSAlgebra b(one, 2);
  CHECK(b.dim(1) == 1);
  CHECK(b.dim(2) == 0);
}

TEST_CASE("aomoto examples") {
  Arrangement pencil(2, forms_of({{1, 0, 0}, {1, -1, 0}, {1, 1, 0}}));
  OSAlgebra a(pencil, 2);
  CHECK(aomoto_rank(a, q({0, 0, 0}), 1) == 3);
  CHECK(aomoto_rank(a, q({1, 1, -2}), 1) == 1);
  CHECK(aomoto_rank(a, q({1, 1, 1}), 0) == 0);
  CHECK(aomoto_rank(a, q({1, 1, 1}), 1) == 0);
  OSAlgebra f(four_lines(), 2);
  CHECK(resonance_membership(f, q({1, 1, -2, 0}), 1).in_degree[1]);
  CHECK_FALSE(resonance_membership(f, q({1, 2, 3, -6}), 1).in_union());
  CHECK(resonance_membership(f, q({0, 0, 0, 0}), 1).in_degree == std::vector<bool>{true, true});
}

TEST_CASE("os algebra against the exterior quotient") {
  std::mt19937_64 rng(0x05A1);
  int tested = 0;
  while (tested < 40) {
    int n = static_cast<int>(uniform(rng, 2, 3));
    auto arr = random_arrangement(rng, n, static_cast<int>(uniform(rng, 2, 6)));
    if (!arr) continue;
    ++tested;
    auto lat = intersection_lattice(*arr);
    OSAlgebra os(*arr, lat.rank);
    ExteriorQuotient ex(*arr, std::min<std::size_t>(lat.rank, 3));
    for (std::size_t p = 0; p <= lat.rank; ++p) CHECK(Integer(static_cast<long>(os.dim(p))) == lat.poincare[p]);
    for (std::size_t p = 0; p <= std::min<std::size_t>(lat.rank, 3); ++p) CHECK(os.dim(p) == ex.quotient_dim(p));
    // e_i^2 = 0 and anticommutativity
    for (std::size_t p = 0; p + 2 <= lat.rank; ++p)
      for (std::size_t i = 0; i < arr->size(); ++i)
        for (std::size_t j = 0; j < arr->size(); ++j) {
          const auto& mi0 = os.mult(i, p);
          const auto& mi1 = os.mult(i, p + 1);
          const auto& mj0 = os.mult(j, p);
          const auto& mj1 = os.mult(j, p + 1);
          for (std::size_t row = 0; row < os.dim(p + 2); ++row)
            for (std::size_t col = 0; col < os.dim(p); ++col) {
              Rational ij = 0, ji = 0;
              for (std::size_t k = 0; k < os.dim(p + 1); ++k) {
                ij += mi1(row, k) * mj0(k, col);
                ji += mj1(row, k) * mi0(k, col);
              }
              CHECK(ij + ji == 0);
            }
        }
    // circuit relations
    for (const auto& c : os.circuits()) {
      std::map<std::size_t, Rational> total;
      for (std::size_t k = 0; k < c.size(); ++k) {
        auto ck = c;
        ck.erase(ck.begin() + static_cast<long>(k));
        for (const auto& [idx, v] : os.express(ck)) total[idx] += (k % 2 ? -v : v);
      }
      for (const auto& [idx, v] : total) CHECK(v == 0);
    }
    // Aomoto cohomology, scaling and Euler characteristic
    for (int k = 0; k < 8; ++k) {
      auto a = random_vector(rng, arr->size());
      if (k % 2) {
        // force a point on a local component when there is one
        auto loc = local_resonance_of(*arr);
        if (!loc.empty()) {
          a.assign(arr->size(), Rational(0));
          for (const auto& b : loc[0].basis()) {
            long c = uniform(rng, -3, 3);
            for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i] * c;
          }
        }
      }
      long euler = 0, expected = 0;
      for (std::size_t i = 0; i < std::min<std::size_t>(lat.rank, 2); ++i) {
        long h = aomoto_rank(os, a, i);
        CHECK(h == ex.cohomology(a, i));
        auto scaled = a;
        for (auto& x : scaled) x *= Rational(-7, 3);
        CHECK((h > 0) == (aomoto_rank(os, scaled, i) > 0));
      }
      for (std::size_t i = 0; i <= lat.rank; ++i) {
        long h = aomoto_rank(os, a, i);
        euler += (i % 2 ? -h : h);
        expected += static_cast<long>(i % 2 ? -static_cast<long>(os.dim(i)) : static_cast<long>(os.dim(i)));
      }
      CHECK(euler == expected);
      Rational sum = 0;
      for (const auto& x : a) sum += x;
      if (sum != 0) CHECK(aomoto_rank(os, a, 0) == 0);
    }
  }
}

TEST_CASE("cone and decone resonance") {
  // A(M) = A(M*) (x) Lambda(e_H): at a with sum zero (the image of H^1(M*)),
  // h^i(M) = h^i(M*) + h^{i-1}(M*), where A(M*) is generated by e_i - e_H.
  std::mt19937_64 rng(0xDEC0);
  for (const auto& arr : {four_lines(), Arrangement(2, forms_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}}))}) {
    const std::size_t r = arr.size();
    OSAlgebra os(arr, 3);
    // basis of the subalgebra B generated by f_i = e_i - e_H (H = last hyperplane), degree by degree
    const std::size_t h = r - 1;
    std::vector<std::vector<std::vector<Rational>>> bspan(3);  // vectors in A^p coordinates
    bspan[0] = {{Rational(1)}};
    for (std::size_t p = 0; p < 2; ++p) {
      for (const auto& v : bspan[p])
        for (std::size_t i = 0; i < h; ++i) {
          std::vector<Rational> w(os.dim(p + 1), Rational(0));
          for (std::size_t row = 0; row < os.dim(p + 1); ++row)
            for (std::size_t col = 0; col < os.dim(p); ++col)
              w[row] += (os.mult(i, p)(row, col) - os.mult(h, p)(row, col)) * v[col];
          bspan[p + 1].push_back(w);
        }
    }
    auto span_rank = [](const std::vector<std::vector<Rational>>& rows) {
      if (rows.empty() || rows[0].empty()) return std::size_t(0);
      QMatrix m(rows.size(), rows[0].size());
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[0].size(); ++j) m(i, j) = rows[i][j];
      return matrix_rank(m);
    };
    // multiplication by a on B^p: rank of a * (spanning set of B^p)
    auto b_mult_rank = [&](const std::vector<Rational>& a, std::size_t p) {
      auto m = os.mult_by(a, p);
      std::vector<std::vector<Rational>> img;
      for (const auto& v : bspan[p]) {
        std::vector<Rational> w(os.dim(p + 1), Rational(0));
        for (std::size_t row = 0; row < os.dim(p + 1); ++row)
          for (std::size_t col = 0; col < os.dim(p); ++col) w[row] += m(row, col) * v[col];
        img.push_back(w);
      }
      return span_rank(img);
    };
    for (int k = 0; k < 30; ++k) {
      std::vector<Rational> a(r);
      Rational sum = 0;
      for (std::size_t i = 0; i + 1 < r; ++i) {
        a[i] = uniform(rng, -4, 4);
        sum += a[i];
      }
      a[h] = -sum;
      if (k % 3 == 0) {
        // a point of the first local component
        auto loc = local_resonance_of(arr)[0].basis();
        a.assign(r, Rational(0));
        for (const auto& b : loc) {
          long c = uniform(rng, -3, 3);
          for (std::size_t i = 0; i < r; ++i) a[i] += b[i] * c;
        }
      }
      std::vector<long> hstar(2);
      hstar[0] = static_cast<long>(span_rank(bspan[0])) - static_cast<long>(b_mult_rank(a, 0));
      hstar[1] = static_cast<long>(span_rank(bspan[1])) - static_cast<long>(b_mult_rank(a, 1)) - static_cast<long>(b_mult_rank(a, 0));
      CHECK(aomoto_rank(os, a, 0) == hstar[0]);
      CHECK(aomoto_rank(os, a, 1) == hstar[1] + hstar[0]);
    }
  }
}

TEST_CASE("local resonance pieces") {
  auto arr = four_lines();
  auto pieces = local_resonance_components(arr, 0, 0);
  std::vector<std::string> nontrivial;
  for (const auto& p : pieces)
    if (!p.trivial) nontrivial.push_back(p.space.to_string());
  CHECK(nontrivial == std::vector<std::string>{"{z1 + z2 + z3 = 0, z4 = 0}"});
  for (const auto& p : pieces)
    if (p.flat == std::vector<int>{0, 3}) {
      CHECK(p.trivial);
      // the local 2-arrangement has no resonance beyond the origin
      Arrangement two(1, forms_of({{1, 0}, {0, 1}}));
      OSAlgebra os(two, 2);
      CHECK(aomoto_rank(os, q({1, 2}), 1) == 0);
    }
}
