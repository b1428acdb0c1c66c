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

#include <optional>
#include <string>
#include <vector>

#include "sdist/gegenbauer.hpp"
#include "sdist/numerics.hpp"

namespace sdist {

enum class Sign { negative, zero, positive };

Sign sign_of_rational(const Rational& q);
char sign_char(Sign s);          // '-', '0', '+'
std::string sign_name(Sign s);   // "negative", "zero", "positive"

/// An inner-product set A(X) on S^{d-1}: either explicit rational roots or,
/// for irrational spectra with a rational product polynomial, the monic
/// annihilator itself. s = number of roots = degree.
class SpectrumSpec {
 public:
  /// Distinct rationals, each in [-1, 1). Throws std::invalid_argument
  /// otherwise (a spectrum containing 1 is impossible for distinct unit
  /// vectors).
  static SpectrumSpec from_roots(int dim, std::vector<Rational> roots);

  /// Monic rational polynomial of degree >= 1 whose roots are the spectrum.
  /// Checked necessary conditions: monic, F(1) > 0, (-1)^s F(-1) >= 0.
  /// (Realness of all roots is the caller's contract; verifying it would
  /// need root isolation, which this library does not do.)
  static SpectrumSpec from_poly(int dim, UniPoly poly);

  int dim() const { return dim_; }
  int s() const { return annihilator_.degree(); }
  bool has_roots() const { return !roots_.empty(); }
  const std::vector<Rational>& roots() const { return roots_; }
  /// F_X = prod (t - alpha), monic.
  const UniPoly& annihilator() const { return annihilator_; }

 private:
  SpectrumSpec() = default;
  int dim_ = 0;
  std::vector<Rational> roots_;  // empty in poly form
  UniPoly annihilator_;
};

/// C(d+s-1, s) + C(d+s-2, s-1), or 2*C(d+s-2, s-1) for antipodal sets.
Integer fisher_bound(int d, int s, bool antipodal);

struct LpBound {
  std::optional<Rational> value;  // F(1)/f_0 when the sign condition holds
  int violating_index = -1;       // first index breaking it, else -1
  bool applicable() const { return value.has_value(); }
};

/// F(1)/f_0 when f_0 > 0 and f_i >= 0 for 1 <= i <= s; otherwise the first
/// violating index (f_0 <= 0 counts as a violation at 0).
LpBound lp_bound(const SpectrumSpec& spec);

struct HarmonicSumBound {
  Integer value;
  GegenExpansion f;
  std::vector<Sign> signs;
};

/// Sum of h_i over exactly the indices with f_i > 0 (strict).
HarmonicSumBound harmonic_sum_bound(const SpectrumSpec& spec);

struct AntipodalBound {
  Integer value;  // 2 * sum_{f_i > 0} h_i, a bound on |X| = 2|Y|
  GegenExpansion f;
  std::vector<Sign> signs;
  bool parity_holds = true;           // f_i = 0 for all i == s (mod 2)?
  std::vector<int> parity_violations; // indices where it fails (diagnostic)
};

/// Bound for an antipodal s-distance set X = Y u (-Y) given A(Y).
/// deg F_Y must be s-1; anything else is an inconsistent input.
AntipodalBound antipodal_harmonic_bound(const SpectrumSpec& spec_y, int s);

struct AntipodalInput {
  SpectrumSpec spec_y;
  int s = 0;  // s of X, one more than spec_y.s()
};

struct BoundReport {
  int dim = 0;
  int s = 0;
  /// True when the reported spectrum is A(Y) of an antipodal set rather
  /// than A(X) itself (the CLI's --antipodal mode).
  bool spectrum_is_half = false;
  GegenExpansion f;
  std::vector<Sign> signs;
  std::vector<Integer> h;  // h_0..h_deg for display
  Integer fisher;
  /// Not computed in half-spectrum mode (the LP theorem needs A(X)).
  std::optional<LpBound> lp;
  /// Bound on |X|: sum_{f_i>0} h_i, or 2*sum in half-spectrum mode.
  Integer harmonic_sum;
  std::optional<AntipodalBound> antipodal;
  Integer best;
};

/// Report on A(X) = spec; when an antipodal decomposition is also known,
/// pass (A(Y), s) to add the antipodal bound to the comparison.
BoundReport full_report(const SpectrumSpec& spec,
                        const std::optional<AntipodalInput>& antipodal_input = {});

/// Report when only A(Y) of an antipodal set is known: Fisher in its
/// antipodal form, the antipodal harmonic bound, and no LP row.
BoundReport full_report_antipodal(const SpectrumSpec& spec_y, int s);

/// Float twin for float-mode configurations: clustered spectrum values in,
/// sign decisions at tol * max(1, max|f_i|). Bounds are exact integers on
/// top of approximate signs; callers must label the result approximate.
struct ApproxBoundReport {
  int dim = 0;
  int s = 0;
  std::vector<double> f;
  std::vector<Sign> signs;
  std::vector<Integer> h;
  Integer fisher;
  std::optional<double> lp_value;
  int lp_violating_index = -1;
  Integer harmonic_sum;
  std::optional<Integer> antipodal_bound;
  std::optional<bool> parity_holds;
  Integer best;
};

ApproxBoundReport approx_report(int dim, const std::vector<double>& spectrum, double tol);

/// Adds the antipodal bound computed from clustered A(Y) values.
ApproxBoundReport approx_report(int dim, const std::vector<double>& spectrum, double tol,
                                const std::vector<double>& y_spectrum, int s);

}  // namespace sdist
