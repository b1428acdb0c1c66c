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

#include "sdist/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sdist {

Sign sign_of_rational(const Rational& q) {
  const int s = sgn(q);
  return s < 0 ? Sign::negative : s > 0 ? Sign::positive : Sign::zero;
}

char sign_char(Sign s) {
  switch (s) {
    case Sign::negative: return '-';
    case Sign::zero: return '0';
    case Sign::positive: return '+';
  }
  return '?';
}

std::string sign_name(Sign s) {
  switch (s) {
    case Sign::negative: return "negative";
    case Sign::zero: return "zero";
    case Sign::positive: return "positive";
  }
  return "?";
}

namespace {

void require_dim(int d) {
  if (d < 2) throw std::invalid_argument("unsupported dimension d = " + std::to_string(d) + " (need d >= 2)");
}

Integer floor_rational(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

std::vector<Sign> signs_of(const GegenExpansion& e) {
  std::vector<Sign> signs;
  signs.reserve(e.coeffs.size());
  for (const Rational& c : e.coeffs) signs.push_back(sign_of_rational(c));
  return signs;
}

std::vector<Integer> harmonic_dims_upto(int d, int deg) {
  std::vector<Integer> h;
  h.reserve(static_cast<std::size_t>(deg) + 1);
  for (int i = 0; i <= deg; ++i) h.push_back(harmonic_dim(d, i));
  return h;
}

}  // namespace

SpectrumSpec SpectrumSpec::from_roots(int dim, std::vector<Rational> roots) {
  require_dim(dim);
  if (roots.empty()) throw std::invalid_argument("empty spectrum");
  for (const Rational& r : roots) {
    if (r >= 1)
      throw std::invalid_argument("invalid spectrum: inner product " + to_string(r) +
                                  " >= 1 is impossible for distinct unit vectors");
    if (r < -1)
      throw std::invalid_argument("invalid spectrum: inner product " + to_string(r) + " < -1");
  }
  SpectrumSpec spec;
  spec.dim_ = dim;
  spec.annihilator_ = poly_from_roots(roots);  // rejects duplicates
  spec.roots_ = std::move(roots);
  std::sort(spec.roots_.begin(), spec.roots_.end());
  return spec;
}

SpectrumSpec SpectrumSpec::from_poly(int dim, UniPoly poly) {
  require_dim(dim);
  if (poly.is_zero() || poly.degree() < 1)
    throw std::invalid_argument("spectrum polynomial must have degree >= 1");
  if (!poly.monic())
    throw std::invalid_argument("spectrum polynomial must be monic, got leading coefficient " +
                                to_string(poly.leading()));
  const Rational at_one = poly.eval(Rational(1));
  if (at_one == 0)
    throw std::invalid_argument("invalid spectrum: polynomial vanishes at 1");
  if (at_one < 0)
    throw std::invalid_argument("invalid spectrum: polynomial is negative at 1, so a root exceeds 1");
  Rational at_minus_one = poly.eval(Rational(-1));
  if (poly.degree() % 2 != 0) at_minus_one = -at_minus_one;
  if (at_minus_one < 0)
    throw std::invalid_argument("invalid spectrum: sign at -1 implies a root below -1");
  SpectrumSpec spec;
  spec.dim_ = dim;
  spec.annihilator_ = std::move(poly);
  return spec;
}

Integer fisher_bound(int d, int s, bool antipodal) {
  require_dim(d);
  if (s < 0) throw std::invalid_argument("fisher_bound: s must be >= 0");
  if (antipodal) return 2 * binomial(d + s - 2, s - 1);
  return binomial(d + s - 1, s) + binomial(d + s - 2, s - 1);
}

LpBound lp_bound(const SpectrumSpec& spec) {
  const GegenExpansion f = expand_in_gegenbauer(spec.dim(), spec.annihilator());
  LpBound out;
  if (sgn(f.coeffs[0]) <= 0) {
    out.violating_index = 0;
    return out;
  }
  for (std::size_t i = 1; i < f.coeffs.size(); ++i) {
    if (sgn(f.coeffs[i]) < 0) {
      out.violating_index = static_cast<int>(i);
      return out;
    }
  }
  out.value = spec.annihilator().eval(Rational(1)) / f.coeffs[0];
  return out;
}

HarmonicSumBound harmonic_sum_bound(const SpectrumSpec& spec) {
  HarmonicSumBound out;
  out.f = expand_in_gegenbauer(spec.dim(), spec.annihilator());
  out.signs = signs_of(out.f);
  out.value = 0;
  for (std::size_t i = 0; i < out.signs.size(); ++i)
    if (out.signs[i] == Sign::positive) out.value += harmonic_dim(spec.dim(), static_cast<int>(i));
  return out;
}

AntipodalBound antipodal_harmonic_bound(const SpectrumSpec& spec_y, int s) {
  if (s < 1) throw std::invalid_argument("antipodal bound: s must be >= 1");
  if (spec_y.s() != s - 1)
    throw std::invalid_argument("inconsistent input: deg F_Y = " + std::to_string(spec_y.s()) +
                                " but s = " + std::to_string(s) + " requires degree s-1");
  AntipodalBound out;
  out.f = expand_in_gegenbauer(spec_y.dim(), spec_y.annihilator());
  out.signs = signs_of(out.f);
  out.value = 0;
  for (std::size_t i = 0; i < out.signs.size(); ++i) {
    if (out.signs[i] == Sign::positive) out.value += harmonic_dim(spec_y.dim(), static_cast<int>(i));
    if (static_cast<int>(i) % 2 == s % 2 && out.signs[i] != Sign::zero)
      out.parity_violations.push_back(static_cast<int>(i));
  }
  out.value *= 2;
  out.parity_holds = out.parity_violations.empty();
  return out;
}

BoundReport full_report(const SpectrumSpec& spec,
                        const std::optional<AntipodalInput>& antipodal_input) {
  BoundReport r;
  r.dim = spec.dim();
  r.s = spec.s();
  r.spectrum_is_half = false;
  HarmonicSumBound hs = harmonic_sum_bound(spec);
  r.f = std::move(hs.f);
  r.signs = std::move(hs.signs);
  r.harmonic_sum = std::move(hs.value);
  r.h = harmonic_dims_upto(spec.dim(), spec.s());
  r.fisher = fisher_bound(spec.dim(), spec.s(), false);
  r.lp = lp_bound(spec);
  if (antipodal_input) {
    if (antipodal_input->spec_y.dim() != spec.dim())
      throw std::invalid_argument("antipodal input dimension mismatch");
    r.antipodal = antipodal_harmonic_bound(antipodal_input->spec_y, antipodal_input->s);
  }
  r.best = r.fisher;
  r.best = std::min(r.best, r.harmonic_sum);
  if (r.lp->applicable()) r.best = std::min(r.best, floor_rational(*r.lp->value));
  if (r.antipodal) r.best = std::min(r.best, r.antipodal->value);
  return r;
}

BoundReport full_report_antipodal(const SpectrumSpec& spec_y, int s) {
  BoundReport r;
  r.dim = spec_y.dim();
  r.s = s;
  r.spectrum_is_half = true;
  r.antipodal = antipodal_harmonic_bound(spec_y, s);
  r.f = r.antipodal->f;
  r.signs = r.antipodal->signs;
  r.h = harmonic_dims_upto(spec_y.dim(), spec_y.s());
  r.fisher = fisher_bound(spec_y.dim(), s, true);
  r.lp = std::nullopt;  // the LP theorem needs A(X), not A(Y)
  r.harmonic_sum = r.antipodal->value;
  r.best = std::min(r.fisher, r.antipodal->value);
  return r;
}

namespace {

std::vector<double> monic_poly_from_values(const std::vector<double>& values) {
  std::vector<double> coeffs{1.0};
  for (double v : values) {
    std::vector<double> next(coeffs.size() + 1, 0.0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= v * coeffs[i];
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

std::vector<Sign> signs_at_tol(const std::vector<double>& f, double tol) {
  double scale = 1.0;
  for (double v : f) scale = std::max(scale, std::abs(v));
  std::vector<Sign> signs;
  signs.reserve(f.size());
  for (double v : f) {
    if (std::abs(v) <= tol * scale) signs.push_back(Sign::zero);
    else signs.push_back(v > 0 ? Sign::positive : Sign::negative);
  }
  return signs;
}

}  // namespace

ApproxBoundReport approx_report(int dim, const std::vector<double>& spectrum, double tol) {
  require_dim(dim);
  if (spectrum.empty()) throw std::invalid_argument("empty spectrum");
  ApproxBoundReport r;
  r.dim = dim;
  r.s = static_cast<int>(spectrum.size());
  r.f = expand_in_gegenbauer_f64(dim, monic_poly_from_values(spectrum));
  r.signs = signs_at_tol(r.f, tol);
  r.h = harmonic_dims_upto(dim, r.s);
  r.fisher = fisher_bound(dim, r.s, false);
  r.harmonic_sum = 0;
  for (std::size_t i = 0; i < r.signs.size(); ++i)
    if (r.signs[i] == Sign::positive) r.harmonic_sum += harmonic_dim(dim, static_cast<int>(i));
  if (r.signs[0] == Sign::positive &&
      std::none_of(r.signs.begin() + 1, r.signs.end(), [](Sign s) { return s == Sign::negative; })) {
    double at_one = 1.0;
    for (double v : spectrum) at_one *= (1.0 - v);
    r.lp_value = at_one / r.f[0];
  } else {
    auto it = std::find_if(r.signs.begin(), r.signs.end(), [](Sign s) { return s == Sign::negative; });
    r.lp_violating_index = r.signs[0] != Sign::positive
                               ? 0
                               : static_cast<int>(it - r.signs.begin());
  }
  // best stays over the integer-valued bounds: the float LP value is
  // informational (flooring a value like 11.999999999 would understate it).
  r.best = std::min(r.fisher, r.harmonic_sum);
  return r;
}

ApproxBoundReport approx_report(int dim, const std::vector<double>& spectrum, double tol,
                                const std::vector<double>& y_spectrum, int s) {
  ApproxBoundReport r = approx_report(dim, spectrum, tol);
  if (static_cast<int>(y_spectrum.size()) != s - 1)
    throw std::invalid_argument("inconsistent input: |A(Y)| = " + std::to_string(y_spectrum.size()) +
                                " but s = " + std::to_string(s) + " requires s-1 values");
  std::vector<double> fy = expand_in_gegenbauer_f64(dim, monic_poly_from_values(y_spectrum));
  std::vector<Sign> y_signs = signs_at_tol(fy, tol);
  Integer bound = 0;
  bool parity = true;
  for (std::size_t i = 0; i < y_signs.size(); ++i) {
    if (y_signs[i] == Sign::positive) bound += harmonic_dim(dim, static_cast<int>(i));
    if (static_cast<int>(i) % 2 == s % 2 && y_signs[i] != Sign::zero) parity = false;
  }
  r.antipodal_bound = 2 * bound;
  r.parity_holds = parity;
  r.best = std::min(r.best, *r.antipodal_bound);
  return r;
}

}  // namespace sdist
