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

#pragma once

#include <vector>

#include "sdist/numerics.hpp"

namespace sdist {

/// The Gegenbauer family used throughout: G_0 = 1, G_1 = d*t, and
///   t*G_l = lambda_{l+1} G_{l+1} + (1 - lambda_{l-1}) G_{l-1},
/// lambda_l = l/(d+2l-2). Normalized so that G_l(1) = harmonic_dim(d, l).

/// A polynomial written in the basis {G_0, ..., G_s}: coeffs[i] multiplies
/// G_i^{(dim)}. Length = represented degree + 1; empty represents zero.
struct GegenExpansion {
  int dim = 0;
  std::vector<Rational> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool operator==(const GegenExpansion& o) const = default;
};

/// lambda_l = l/(d+2l-2); lambda_0 = 0 by convention.
Rational gegenbauer_lambda(int d, int l);

/// G_0..G_lmax in the monomial basis, built once by the recurrence.
std::vector<UniPoly> gegenbauer_basis(int d, int lmax);

/// Monomial form of G_l^{(d)}; degree exactly l, parity of l.
UniPoly gegenbauer_poly(int d, int l);

/// Dimension h_l of the harmonic homogeneous polynomials of degree l in
/// d variables: C(d+l-1, l) - C(d+l-3, l-2). h_0 = 1, h_1 = d.
Integer harmonic_dim(int d, int l);

/// Exact coefficients f_i with sum f_i G_i^{(d)} = p, by back-substitution
/// against the degree-triangular basis.
GegenExpansion expand_in_gegenbauer(int d, const UniPoly& p);

/// Inverse of expand_in_gegenbauer.
UniPoly expansion_to_poly(const GegenExpansion& e);

/// Exact G_l^{(d)}(t) by the value recurrence; no polynomial materialized.
Rational eval_gegenbauer(int d, int l, const Rational& t);

/// Double-precision twin of eval_gegenbauer, for float-mode Gram matrices.
double eval_gegenbauer_f64(int d, int l, double t);

/// Double-precision twin of expand_in_gegenbauer for float-mode spectra:
/// input monomial coefficients (index = degree), output basis coefficients.
std::vector<double> expand_in_gegenbauer_f64(int d, const std::vector<double>& monomial);

}  // namespace sdist
