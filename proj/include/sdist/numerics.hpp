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

#include <gmpxx.h>

#include <string>
#include <vector>

namespace sdist {

/// Exact arbitrary-precision integer and rational scalars. All arithmetic in
/// this project is exact; doubles appear only in spectral checks and
/// float-mode configurations.
using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in canonical form (den > 0, gcd 1). Throws on den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "p/q" with an optional sign on p; "p" alone means p/1.
/// Throws std::invalid_argument on anything else (including "1/0").
Rational parse_rational(const std::string& text);

/// Canonical "p/q" (or "p" when q = 1); inverse of parse_rational.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

/// -1, 0, +1.
int sign_of(const Rational& q);

/// C(n, k). Zero when k < 0 or k > n >= 0; exact at every size we use.
Integer binomial(long n, long k);

/// Univariate polynomial over Rational, monomial basis, index = degree.
/// The zero polynomial has an empty coefficient list; otherwise the
/// highest-index coefficient is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  /// c * t^k
  static UniPoly monomial(int k, const Rational& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of t^i; 0 beyond the stored degree.
  Rational coeff(int i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool monic() const { return !is_zero() && leading() == 1; }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rational& c) const;
  UniPoly operator/(const Rational& c) const;
  bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

  /// Horner evaluation, exact.
  Rational eval(const Rational& t) const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Monic product of (t - r) over the given roots. Roots must be pairwise
/// distinct; a duplicate is rejected with std::invalid_argument.
UniPoly poly_from_roots(const std::vector<Rational>& roots);

Rational poly_eval(const UniPoly& p, const Rational& t);

/// "t^2 - 1/9" style rendering, for logs and reports.
std::string to_string(const UniPoly& p);

/// Parses the CLI polynomial grammar: rational coefficients, variable t,
/// caret powers, optional '*'. Examples: "t^2-1/5", "3/2*t^2 - 1/2", "-t".
UniPoly parse_poly(const std::string& text);

}  // namespace sdist
