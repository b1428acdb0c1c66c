/*
   Copyright 2026 The sdist authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "sdist/gegenbauer.hpp"

using namespace sdist;

namespace {

struct Lcg {
  std::uint64_t state;
  explicit Lcg(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  }
  long next_in(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

UniPoly t_poly() { return UniPoly::monomial(1); }

}  // namespace

TEST_CASE("recurrence coefficients") {
  CHECK(gegenbauer_lambda(3, 0) == 0);
  CHECK(gegenbauer_lambda(3, 1) == make_rational(1, 3));
  CHECK(gegenbauer_lambda(3, 2) == make_rational(2, 5));
  CHECK(gegenbauer_lambda(4, 1) == make_rational(1, 4));
  CHECK(gegenbauer_lambda(2, 5) == make_rational(1, 2));
  CHECK_THROWS_AS(gegenbauer_lambda(1, 0), std::invalid_argument);
}

TEST_CASE("low-degree polynomials in closed form") {
  CHECK(gegenbauer_poly(3, 0) == UniPoly::constant(Rational(1)));
  CHECK(gegenbauer_poly(3, 1) == UniPoly::monomial(1, Rational(3)));
  CHECK(gegenbauer_poly(5, 1) == UniPoly::monomial(1, Rational(5)));
  // G_2 for d=3: (15 t^2 - 5)/2
  CHECK(gegenbauer_poly(3, 2) ==
        UniPoly::monomial(2, make_rational(15, 2)) + UniPoly::constant(make_rational(-5, 2)));
  // G_2 for d=4: 12 t^2 - 3
  CHECK(gegenbauer_poly(4, 2) ==
        UniPoly::monomial(2, Rational(12)) + UniPoly::constant(Rational(-3)));
  // G_3 for d=3: (35 t^3 - 21 t)/2
  CHECK(gegenbauer_poly(3, 3) == UniPoly::monomial(3, make_rational(35, 2)) +
                                     UniPoly::monomial(1, make_rational(-21, 2)));
}

TEST_CASE("harmonic space dimensions") {
  CHECK(harmonic_dim(3, 0) == 1);
  CHECK(harmonic_dim(3, 1) == 3);
  CHECK(harmonic_dim(3, 2) == 5);
  CHECK(harmonic_dim(3, 3) == 7);
  CHECK(harmonic_dim(5, 1) == 5);
  CHECK(harmonic_dim(4, 2) == 9);
  CHECK(harmonic_dim(7, 2) == 27);
  CHECK(harmonic_dim(8, 2) == 35);
  CHECK(harmonic_dim(2, 7) == 2);
  CHECK(harmonic_dim(2, 0) == 1);
}

TEST_CASE("G_l(1) equals the harmonic dimension") {
  for (int d = 2; d <= 12; ++d)
    for (int l = 0; l <= 10; ++l)
      CHECK(eval_gegenbauer(d, l, Rational(1)) == harmonic_dim(d, l));
}

TEST_CASE("parity: G_l has only terms of degree congruent to l") {
  for (int d : {2, 3, 5, 8}) {
    const std::vector<UniPoly> basis = gegenbauer_basis(d, 7);
    for (int l = 0; l <= 7; ++l)
      for (int i = 0; i <= l; ++i)
        if (i % 2 != l % 2) CHECK(basis[static_cast<std::size_t>(l)].coeff(i) == 0);
  }
}

TEST_CASE("expanding a basis polynomial gives a unit vector of coefficients") {
  for (int d : {3, 6}) {
    for (int l = 0; l <= 5; ++l) {
      const GegenExpansion e = expand_in_gegenbauer(d, gegenbauer_poly(d, l));
      CHECK(e.degree() == l);
      for (int i = 0; i <= l; ++i) CHECK(e.coeffs[static_cast<std::size_t>(i)] == (i == l ? 1 : 0));
    }
  }
}

TEST_CASE("degree-2 expansions in closed form") {
  // (t - a)(t - b) expands to (ab + 1/d, -(a+b)/d, 2/(d(d+2))).
  const UniPoly p1 = poly_from_roots({make_rational(5, 14), make_rational(-2, 7)});
  const GegenExpansion e1 = expand_in_gegenbauer(8, p1);
  CHECK(e1.coeffs == std::vector<Rational>{make_rational(9, 392), make_rational(-1, 112),
                                           make_rational(1, 40)});

  const UniPoly p2 = poly_from_roots({Rational(0), Rational(-1)});
  const GegenExpansion e2 = expand_in_gegenbauer(4, p2);
  CHECK(e2.coeffs == std::vector<Rational>{make_rational(1, 4), make_rational(1, 4),
                                           make_rational(1, 12)});

  const UniPoly p3 = UniPoly::monomial(2) + UniPoly::constant(make_rational(-1, 5));
  const GegenExpansion e3 = expand_in_gegenbauer(3, p3);
  CHECK(e3.coeffs == std::vector<Rational>{make_rational(2, 15), Rational(0), make_rational(2, 15)});
}

TEST_CASE("degree-1 expansion: t - alpha = -alpha G_0 + (1/d) G_1") {
  const GegenExpansion e = expand_in_gegenbauer(5, t_poly());
  CHECK(e.coeffs == std::vector<Rational>{Rational(0), make_rational(1, 5)});
  const GegenExpansion e2 = expand_in_gegenbauer(3, t_poly() + UniPoly::constant(make_rational(1, 5)));
  CHECK(e2.coeffs == std::vector<Rational>{make_rational(1, 5), make_rational(1, 3)});
}

TEST_CASE("round trip between bases on random polynomials") {
  Lcg rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = static_cast<int>(rng.next_in(2, 12));
    const int deg = static_cast<int>(rng.next_in(0, 8));
    std::vector<Rational> coeffs;
    for (int i = 0; i <= deg; ++i)
      coeffs.push_back(make_rational(rng.next_in(-9, 9), rng.next_in(1, 9)));
    const UniPoly p{coeffs};
    const GegenExpansion e = expand_in_gegenbauer(d, p);
    CHECK(expansion_to_poly(e) == p);
  }
}

TEST_CASE("zero polynomial expands to the empty expansion") {
  const GegenExpansion e = expand_in_gegenbauer(4, UniPoly{});
  CHECK(e.coeffs.empty());
  CHECK(expansion_to_poly(e).is_zero());
}

TEST_CASE("recurrence evaluation agrees with the polynomial form") {
  Lcg rng(4242);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = static_cast<int>(rng.next_in(2, 10));
    const int l = static_cast<int>(rng.next_in(0, 8));
    const Rational t = make_rational(rng.next_in(-7, 7), rng.next_in(1, 7));
    CHECK(eval_gegenbauer(d, l, t) == gegenbauer_poly(d, l).eval(t));
  }
}

TEST_CASE("float evaluation tracks the exact one") {
  for (int d : {3, 8}) {
    for (int l = 0; l <= 8; ++l) {
      for (int i = -4; i <= 4; ++i) {
        const Rational t = make_rational(i, 5);
        const double exact = to_double(eval_gegenbauer(d, l, t));
        const double approx = eval_gegenbauer_f64(d, l, to_double(t));
        CHECK(std::abs(exact - approx) <= 1e-9 * std::max(1.0, std::abs(exact)));
      }
    }
  }
}

TEST_CASE("float expansion tracks the exact one") {
  const std::vector<double> mono{-0.2, 0.0, 1.0};  // t^2 - 1/5
  const std::vector<double> f = expand_in_gegenbauer_f64(3, mono);
  REQUIRE(f.size() == 3);
  CHECK(std::abs(f[0] - 2.0 / 15.0) < 1e-12);
  CHECK(std::abs(f[1]) < 1e-12);
  CHECK(std::abs(f[2] - 2.0 / 15.0) < 1e-12);
}

TEST_CASE("dimension and degree guards") {
  CHECK_THROWS_AS(gegenbauer_basis(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(gegenbauer_poly(3, -1), std::invalid_argument);
  CHECK_THROWS_AS(harmonic_dim(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(eval_gegenbauer(1, 2, Rational(0)), std::invalid_argument);
}
