#include "doctest.h"
#include "jumploci/int_matrix.hpp"
#include "jumploci/laurent.hpp"
#include "support.hpp"

using namespace jumploci;
using testing_support::parse_simple;

TEST_CASE("rational parsing and rendering") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-7")) == "-7");
  CHECK(to_string(parse_rational(" 0/5 ")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK(frac_mod1(Rational(-1, 3)) == Rational(2, 3));
}

TEST_CASE("cyclotomic polynomials and arithmetic") {
  CHECK(cyclotomic_poly(1).to_string("x") == "x - 1");
  CHECK(cyclotomic_poly(12).to_string("x") == "x^4 - x^2 + 1");
  auto z3 = Cyclotomic::root_of_unity(Rational(1, 3));
  CHECK(z3.pow(3) == Cyclotomic(1));
  CHECK(z3 * z3 * z3 - 1 == Cyclotomic(0));
  auto i = Cyclotomic::root_of_unity(Rational(1, 4));
  CHECK((i * i).normalized() == Cyclotomic(-1));
  CHECK((i * i).normalized().order() == 1);
  // zeta_12^4 = zeta_3
  auto z12 = Cyclotomic::root_of_unity(Rational(1, 12));
  auto w = z12.pow(4).normalized();
  CHECK(w.order() == 3);
  CHECK(w == z3);
  // mixed orders lift to the lcm
  auto s = (z3 + i);
  CHECK(s.order() == 12);
  CHECK((s - i).normalized() == z3);
  CHECK((z3 / (z3 + 2)) * (z3 + 2) == z3);
  CHECK(z3.conj() == z3 * z3);
}

TEST_CASE("laurent gcd examples") {
  auto f = parse_simple(2, {{{1, 1}, 1}, {{0, 0}, -1}});
  auto g = parse_simple(2, {{{2, 2}, 1}, {{0, 0}, -1}});
  CHECK(laurent_gcd(f, g) == f);
  auto a = parse_simple(1, {{{1}, 1}, {{0}, -1}});
  auto b = parse_simple(1, {{{1}, 1}, {{0}, 1}});
  CHECK(laurent_gcd(a, b) == LaurentPoly::one(1));
  CHECK(laurent_gcd(a.scaled(3).shifted({-4}), LaurentPoly(1)) == a);
  CHECK_THROWS_AS(laurent_gcd(a, f), std::invalid_argument);
  // t1^2 t2 - 1 is normalized with lex-leading coefficient 1
  auto h = parse_simple(2, {{{2, 1}, -2}, {{0, 0}, 2}}).shifted({-1, 3});
  CHECK(h.normalized().to_string() == "t1^2*t2 - 1");
}

TEST_CASE("ring axioms on random Laurent polynomials") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 1000; ++k) {
    int n = static_cast<int>(testing_support::uniform(rng, 1, 3));
    auto f = testing_support::random_laurent(rng, n, 4, -2, 2);
    auto g = testing_support::random_laurent(rng, n, 4, -2, 2);
    auto h = testing_support::random_laurent(rng, n, 4, -2, 2);
    REQUIRE(((f + g) + h) == (f + (g + h)));
    REQUIRE(((f * g) * h) == (f * (g * h)));
    REQUIRE((f * (g + h)) == (f * g + f * h));
    REQUIRE((f * g) == (g * f));
    REQUIRE((f - f).is_zero());
  }
}

TEST_CASE("gcd is multiplicative in a common factor") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 150; ++k) {
    int n = static_cast<int>(testing_support::uniform(rng, 1, 3));
    auto f = testing_support::random_laurent(rng, n, 3, -1, 2);
    auto g = testing_support::random_laurent(rng, n, 3, -1, 2);
    auto h = testing_support::random_laurent(rng, n, 3, -1, 2);
    auto lhs = laurent_gcd(f * h, g * h);
    auto rhs = (laurent_gcd(f, g) * h).normalized();
    REQUIRE(lhs == rhs);
    // the gcd divides both arguments
    REQUIRE(laurent_divide(f * h, lhs).has_value());
    REQUIRE(laurent_divide(g * h, lhs).has_value());
  }
}

TEST_CASE("eval_at_torsion examples and homomorphism") {
  auto f = parse_simple(2, {{{2, 1}, 1}, {{0, 0}, -1}});
  CHECK(eval_at_torsion(f, {Rational(1, 3), Rational(1, 3)}).is_zero());
  auto g = parse_simple(2, {{{1, 1}, 1}, {{0, 0}, -1}});
  auto v = eval_at_torsion(g, {Rational(1, 2), Rational(1, 4)});
  CHECK(v == Cyclotomic::root_of_unity(Rational(3, 4)) - 1);
  auto prod = parse_simple(4, {{{1, 1, 1, 1}, 1}, {{0, 0, 0, 0}, -1}});
  CHECK(eval_at_torsion(prod, std::vector<Rational>(4, Rational(1, 4))).is_zero());

  std::mt19937_64 rng(13);
  for (int k = 0; k < 300; ++k) {
    int n = static_cast<int>(testing_support::uniform(rng, 1, 3));
    auto a = testing_support::random_laurent(rng, n, 4, -3, 3);
    auto b = testing_support::random_laurent(rng, n, 4, -3, 3);
    auto p = testing_support::random_torsion_point(rng, n, 6);
    REQUIRE(eval_at_torsion(a * b, p) == eval_at_torsion(a, p) * eval_at_torsion(b, p));
    REQUIRE(eval_at_torsion(a + b, p) == eval_at_torsion(a, p) + eval_at_torsion(b, p));
    REQUIRE(eval_at_torsion(to_cyclotomic(a), p) == eval_at_torsion(a, p));
  }
}

TEST_CASE("smith normal form") {
  auto s = smith_normal_form(IntMatrix::identity(2));
  CHECK(s.D == IntMatrix::identity(2));
  auto t = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  CHECK(t.D == IntMatrix{{1, 0}, {0, 6}});
  auto u = smith_normal_form(IntMatrix{{1, 1, 1, 1}});
  CHECK(u.rank == 1);
  CHECK(u.D == IntMatrix{{1, 0, 0, 0}});

  std::mt19937_64 rng(14);
  for (int k = 0; k < 300; ++k) {
    std::size_t r = testing_support::uniform(rng, 1, 4), c = testing_support::uniform(rng, 1, 5);
    IntMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = testing_support::uniform(rng, -6, 6);
    auto f = smith_normal_form(a);  // throws if the postcondition fails
    REQUIRE(f.rank == int_rank(a));
    auto h = hermite_normal_form(a);
    REQUIRE(h.T * a == h.H.stacked(IntMatrix(r - h.H.rows(), c)));
  }
}
