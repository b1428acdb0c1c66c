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

#include "sdist/gegenbauer.hpp"

#include <stdexcept>

namespace sdist {

namespace {

void require_dim(int d) {
  if (d < 2) throw std::invalid_argument("unsupported dimension d = " + std::to_string(d) + " (need d >= 2)");
}

void require_degree(int l) {
  if (l < 0) throw std::invalid_argument("negative Gegenbauer degree l = " + std::to_string(l));
}

}  // namespace

Rational gegenbauer_lambda(int d, int l) {
  require_dim(d);
  if (l == 0) return Rational(0);
  return make_rational(l, d + 2 * l - 2);
}

std::vector<UniPoly> gegenbauer_basis(int d, int lmax) {
  require_dim(d);
  require_degree(lmax);
  std::vector<UniPoly> basis;
  basis.reserve(static_cast<std::size_t>(lmax) + 1);
  basis.push_back(UniPoly::constant(Rational(1)));
  if (lmax >= 1) basis.push_back(UniPoly::monomial(1, Rational(d)));
  const UniPoly t = UniPoly::monomial(1, Rational(1));
  for (int l = 1; l < lmax; ++l) {
    // G_{l+1} = (t*G_l - (1 - lambda_{l-1}) G_{l-1}) / lambda_{l+1}
    UniPoly next = (t * basis[static_cast<std::size_t>(l)] -
                    basis[static_cast<std::size_t>(l) - 1] * (Rational(1) - gegenbauer_lambda(d, l - 1))) /
                   gegenbauer_lambda(d, l + 1);
    basis.push_back(std::move(next));
  }
  return basis;
}

UniPoly gegenbauer_poly(int d, int l) {
  require_degree(l);
  return gegenbauer_basis(d, l).back();
}

Integer harmonic_dim(int d, int l) {
  require_dim(d);
  require_degree(l);
  return binomial(d + l - 1, l) - binomial(d + l - 3, l - 2);
}

GegenExpansion expand_in_gegenbauer(int d, const UniPoly& p) {
  require_dim(d);
  GegenExpansion e;
  e.dim = d;
  if (p.is_zero()) return e;
  const int s = p.degree();
  const std::vector<UniPoly> basis = gegenbauer_basis(d, s);
  e.coeffs.assign(static_cast<std::size_t>(s) + 1, Rational(0));
  UniPoly remainder = p;
  for (int i = s; i >= 0; --i) {
    if (remainder.degree() < i) continue;
    Rational f = remainder.coeff(i) / basis[static_cast<std::size_t>(i)].leading();
    e.coeffs[static_cast<std::size_t>(i)] = f;
    remainder = remainder - basis[static_cast<std::size_t>(i)] * f;
  }
  if (!remainder.is_zero()) throw std::logic_error("basis change left a nonzero remainder");
  return e;
}

UniPoly expansion_to_poly(const GegenExpansion& e) {
  require_dim(e.dim);
  if (e.coeffs.empty()) return UniPoly();
  const std::vector<UniPoly> basis = gegenbauer_basis(e.dim, static_cast<int>(e.coeffs.size()) - 1);
  UniPoly p;
  for (std::size_t i = 0; i < e.coeffs.size(); ++i) p = p + basis[i] * e.coeffs[i];
  return p;
}

Rational eval_gegenbauer(int d, int l, const Rational& t) {
  require_dim(d);
  require_degree(l);
  if (l == 0) return Rational(1);
  Rational prev(1);           // G_0
  Rational cur = Rational(d) * t;  // G_1
  for (int k = 1; k < l; ++k) {
    Rational next = (t * cur - (Rational(1) - gegenbauer_lambda(d, k - 1)) * prev) /
                    gegenbauer_lambda(d, k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

double eval_gegenbauer_f64(int d, int l, double t) {
  require_dim(d);
  require_degree(l);
  if (l == 0) return 1.0;
  double prev = 1.0;
  double cur = d * t;
  for (int k = 1; k < l; ++k) {
    double lam_prev = k == 1 ? 0.0 : static_cast<double>(k - 1) / (d + 2 * (k - 1) - 2);
    double lam_next = static_cast<double>(k + 1) / (d + 2 * (k + 1) - 2);
    double next = (t * cur - (1.0 - lam_prev) * prev) / lam_next;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> expand_in_gegenbauer_f64(int d, const std::vector<double>& monomial) {
  require_dim(d);
  std::vector<double> work = monomial;
  while (!work.empty() && work.back() == 0.0) work.pop_back();
  if (work.empty()) return {};
  const int s = static_cast<int>(work.size()) - 1;
  const std::vector<UniPoly> basis = gegenbauer_basis(d, s);
  std::vector<double> f(static_cast<std::size_t>(s) + 1, 0.0);
  for (int i = s; i >= 0; --i) {
    const UniPoly& g = basis[static_cast<std::size_t>(i)];
    double fi = work[static_cast<std::size_t>(i)] / to_double(g.leading());
    f[static_cast<std::size_t>(i)] = fi;
    for (int j = 0; j <= i; ++j) work[static_cast<std::size_t>(j)] -= fi * to_double(g.coeff(j));
  }
  return f;
}

}  // namespace sdist
