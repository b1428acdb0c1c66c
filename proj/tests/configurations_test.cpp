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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sdist/config_json.hpp"
#include "sdist/configurations.hpp"

using namespace sdist;

TEST_CASE("regular simplex gram entries") {
  const PointConfiguration tri = regular_simplex(2);
  REQUIRE(tri.size() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(tri.gram[i][j] == (i == j ? Rational(1) : make_rational(-1, 2)));

  const PointConfiguration x = regular_simplex(7);
  CHECK(x.size() == 8);
  CHECK(x.exact());
  const Spectrum sp = spectrum_of(x);
  REQUIRE(sp.s() == 1);
  CHECK(sp.values == std::vector<Rational>{make_rational(-1, 7)});
  CHECK(sp.counts == std::vector<long>{56});
}

TEST_CASE("midpoint simplex matches its closed-form inner products") {
  for (int d : {3, 4, 5, 7, 8, 11}) {
    const PointConfiguration x = midpoint_simplex(d);
    CHECK(x.size() == binomial(d + 1, 2));
    // Shared-vertex and disjoint-edge products, derived independently of
    // the constructor's bilinear route: midpoints m_e = (p_i + p_j)/2 have
    // |m|^2 = (d-1)/(2d), and <m_e, m_f> / |m|^2 gives these two values.
    const Rational alpha = make_rational(d - 3, 2 * (d - 1));
    const Rational beta = make_rational(-2, d - 1);
    const Spectrum sp = spectrum_of(x);
    if (d == 3) {
      // alpha = 0 = -beta - 1: the octahedron, two values {-1, 0}.
      CHECK(sp.values == std::vector<Rational>{Rational(-1), Rational(0)});
    } else {
      REQUIRE(sp.s() == 2);
      CHECK(sp.values == std::vector<Rational>{beta, alpha});
      // Ordered-pair counts: n * 2(d-1) sharing a vertex, n * C(d-1,2) disjoint.
      const long n = binomial(d + 1, 2).get_si();
      CHECK(sp.counts == std::vector<long>{n * binomial(d - 1, 2).get_si(), n * 2 * (d - 1)});
    }
    CHECK(alpha + beta == make_rational(d - 7, 2 * (d - 1)));
  }
}

TEST_CASE("midpoint simplex in d=2 degenerates to a triangle") {
  const PointConfiguration x = midpoint_simplex(2);
  CHECK(x.size() == 3);
  const Spectrum sp = spectrum_of(x);
  CHECK(sp.values == std::vector<Rational>{make_rational(-1, 2)});
}

TEST_CASE("midpoint simplex in d=3 is the octahedron") {
  const PointConfiguration x = midpoint_simplex(3);
  REQUIRE(x.size() == 6);
  const AntipodalDecomposition ad = antipodal_decompose(x);
  CHECK(ad.antipodal);
  CHECK(ad.pairs.size() == 3);
}

TEST_CASE("cross polytope structure") {
  const PointConfiguration x = cross_polytope(3);
  REQUIRE(x.size() == 6);
  const Spectrum sp = spectrum_of(x);
  CHECK(sp.values == std::vector<Rational>{Rational(-1), Rational(0)});
  CHECK(sp.counts == std::vector<long>{6, 24});

  const AntipodalDecomposition ad = antipodal_decompose(x);
  CHECK(ad.antipodal);
  REQUIRE(ad.pairs.size() == 3);
  CHECK(ad.pairs == std::vector<std::pair<int, int>>{{0, 3}, {1, 4}, {2, 5}});
  CHECK(ad.half == std::vector<int>{0, 1, 2});

  const PointConfiguration y = sub_configuration(x, ad.half);
  const Spectrum ysp = spectrum_of(y);
  CHECK(ysp.values == std::vector<Rational>{Rational(0)});
  CHECK(ysp.counts == std::vector<long>{6});
}

TEST_CASE("icosahedron has three clustered inner products") {
  const PointConfiguration x = icosahedron();
  REQUIRE(x.size() == 12);
  CHECK(!x.exact());
  REQUIRE(x.coords.has_value());

  const Spectrum sp = spectrum_of(x);
  REQUIRE(sp.s() == 3);
  const double c = 1.0 / std::sqrt(5.0);
  CHECK(sp.values_f64[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(sp.values_f64[1] == doctest::Approx(-c).epsilon(1e-12));
  CHECK(sp.values_f64[2] == doctest::Approx(c).epsilon(1e-12));
  CHECK(sp.counts == std::vector<long>{12, 60, 60});

  const AntipodalDecomposition ad = antipodal_decompose(x);
  CHECK(ad.antipodal);
  CHECK(ad.pairs.size() == 6);
  CHECK(ad.half.size() == 6);

  // The half-set must realize the exact companion spectrum {+-1/sqrt(5)}.
  const Spectrum ysp = spectrum_of(sub_configuration(x, ad.half));
  REQUIRE(ysp.s() == 2);
  CHECK(ysp.values_f64[0] == doctest::Approx(-c).epsilon(1e-12));
  CHECK(ysp.values_f64[1] == doctest::Approx(c).epsilon(1e-12));

  const SpectrumSpec yspec = icosahedron_y_spec();
  CHECK(yspec.dim() == 3);
  CHECK(yspec.s() == 2);
  CHECK(yspec.annihilator().eval(Rational(0)) == make_rational(-1, 5));
}

TEST_CASE("bundled constructors validate cleanly") {
  const std::vector<PointConfiguration> all = {
      regular_simplex(3), regular_simplex(9),  midpoint_simplex(4), midpoint_simplex(8),
      cross_polytope(2),  cross_polytope(10), icosahedron(),
  };
  for (const PointConfiguration& x : all) {
    const ValidationReport report = validate_configuration(x);
    CHECK(report.ok());
    CHECK(report.rank <= x.dim);
    CHECK(report.min_eigenvalue >= -1e-9 * x.size());
  }
  CHECK(validate_configuration(icosahedron()).rank == 3);
}

TEST_CASE("validation itemizes failures instead of throwing") {
  // Diagonal entry 2: not a unit vector.
  RationalMatrix bad_diag = {{Rational(2), Rational(0)}, {Rational(0), Rational(1)}};
  ValidationReport r = validate_configuration(make_exact_configuration(2, bad_diag, "bad"));
  CHECK(!r.ok());
  bool diag_failed = false;
  for (const CheckReport& c : r.checks)
    if (c.name == "unit_diagonal") diag_failed = c.failed();
  CHECK(diag_failed);

  // Asymmetric float gram.
  Eigen::MatrixXd asym(2, 2);
  asym << 1.0, 0.25, 0.5, 1.0;
  r = validate_configuration(make_float_configuration(2, asym, std::nullopt, "asym"));
  CHECK(!r.ok());

  // Off-diagonal out of range.
  RationalMatrix wide = {{Rational(1), make_rational(3, 2)}, {make_rational(3, 2), Rational(1)}};
  r = validate_configuration(make_exact_configuration(2, wide, "wide"));
  CHECK(!r.ok());

  // Rank above the ambient dimension: I_4 claimed to live in d = 2.
  RationalMatrix eye4(4, std::vector<Rational>(4, Rational(0)));
  for (int i = 0; i < 4; ++i) eye4[i][i] = 1;
  r = validate_configuration(make_exact_configuration(2, eye4, "too-big"));
  CHECK(!r.ok());
  bool rank_failed = false;
  for (const CheckReport& c : r.checks)
    if (c.name == "rank_at_most_dim") rank_failed = c.failed();
  CHECK(rank_failed);
  CHECK(r.rank == 4);

  // Indefinite matrix (a 3-cycle of -1s has eigenvalue -1): PSD check fails.
  RationalMatrix cyc = {{Rational(1), Rational(-1), Rational(-1)},
                        {Rational(-1), Rational(1), Rational(-1)},
                        {Rational(-1), Rational(-1), Rational(1)}};
  r = validate_configuration(make_exact_configuration(3, cyc, "cycle"));
  bool psd_failed = false;
  for (const CheckReport& c : r.checks)
    if (c.name == "positive_semidefinite") psd_failed = c.failed();
  CHECK(psd_failed);
  CHECK(r.min_eigenvalue < -0.5);
}

TEST_CASE("coordinate decoration is checked against the gram") {
  PointConfiguration x = icosahedron();
  REQUIRE(x.coords.has_value());
  Eigen::MatrixXd warped = *x.coords;
  warped(0, 0) += 1e-3;
  const PointConfiguration bad = make_float_configuration(3, x.gram_f64, warped, "warped");
  const ValidationReport r = validate_configuration(bad);
  bool coords_failed = false;
  for (const CheckReport& c : r.checks)
    if (c.name == "coords_match_gram") coords_failed = c.failed();
  CHECK(coords_failed);
}

TEST_CASE("spectrum is permutation invariant") {
  const PointConfiguration x = midpoint_simplex(5);
  std::vector<int> perm(x.size());
  std::iota(perm.begin(), perm.end(), 0);
  // Deterministic shuffle: reverse then swap a few positions.
  std::reverse(perm.begin(), perm.end());
  std::swap(perm[0], perm[7]);
  std::swap(perm[3], perm[11]);
  const Spectrum a = spectrum_of(x);
  const Spectrum b = spectrum_of(sub_configuration(x, perm, "permuted"));
  CHECK(a.values == b.values);
  CHECK(a.counts == b.counts);
}

TEST_CASE("degenerate inputs throw") {
  CHECK_THROWS_AS(regular_simplex(1), std::invalid_argument);
  CHECK_THROWS_AS(midpoint_simplex(1), std::invalid_argument);
  CHECK_THROWS_AS(cross_polytope(1), std::invalid_argument);
  RationalMatrix one = {{Rational(1)}};
  CHECK_THROWS_AS(spectrum_of(make_exact_configuration(2, one, "point")), std::invalid_argument);
  RationalMatrix ragged = {{Rational(1), Rational(0)}, {Rational(0)}};
  CHECK_THROWS_AS(make_exact_configuration(2, ragged, "ragged"), std::invalid_argument);
  CHECK_THROWS_AS(spectrum_spec_of(icosahedron()), std::logic_error);
}

TEST_CASE("an index with two antipodes means duplicate points") {
  RationalMatrix g = {{Rational(1), Rational(-1), Rational(-1)},
                      {Rational(-1), Rational(1), Rational(1)},
                      {Rational(-1), Rational(1), Rational(1)}};
  const PointConfiguration x = make_exact_configuration(2, g, "dup");
  CHECK_THROWS_AS(antipodal_decompose(x), std::invalid_argument);
}

TEST_CASE("exact json round trip is lossless") {
  const PointConfiguration x = midpoint_simplex(4);
  const nlohmann::json j = configuration_to_json(x);
  const PointConfiguration y = configuration_from_json(j);
  CHECK(y.dim == x.dim);
  CHECK(y.exact());
  CHECK(y.gram == x.gram);
  CHECK(y.label == x.label);
}

TEST_CASE("float json round trip preserves gram and coords") {
  const PointConfiguration x = icosahedron();
  const PointConfiguration y = configuration_from_json(configuration_to_json(x));
  CHECK(!y.exact());
  REQUIRE(y.coords.has_value());
  CHECK((y.gram_f64 - x.gram_f64).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((*y.coords - *x.coords).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("malformed configuration documents are rejected") {
  using nlohmann::json;
  const json good = configuration_to_json(regular_simplex(3));

  json j = good;
  j.erase("dim");
  CHECK_THROWS_AS(configuration_from_json(j), std::runtime_error);

  j = good;
  j["mode"] = "decimal";
  CHECK_THROWS_AS(configuration_from_json(j), std::runtime_error);

  j = good;
  j["gram"][0].erase(0);  // non-square
  CHECK_THROWS_AS(configuration_from_json(j), std::runtime_error);

  j = good;
  j["gram"][0][1] = 0.5;  // non-integer number in exact mode
  CHECK_THROWS_AS(configuration_from_json(j), std::runtime_error);

  j = good;
  j["gram"][0][1] = "1/0";
  CHECK_THROWS_AS(configuration_from_json(j), std::runtime_error);

  j = good;
  j["coords"] = json::array({json::array({1.0, 0.0, 0.0})});
  // coords are a float-mode decoration; exact mode rejects them.
  CHECK_THROWS_AS(configuration_from_json(j), std::runtime_error);

  json jf = configuration_to_json(icosahedron());
  jf["coords"][0].erase(0);  // wrong row width
  CHECK_THROWS_AS(configuration_from_json(jf), std::runtime_error);

  CHECK_THROWS_AS(load_configuration("/nonexistent/path/config.json"), std::runtime_error);
}
