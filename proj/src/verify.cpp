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

#include "sdist/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sdist/gegenbauer.hpp"

namespace sdist {

namespace {

void require_symmetric(const Eigen::MatrixXd& M, const char* who) {
  if (M.rows() != M.cols())
    throw std::invalid_argument(std::string(who) + ": matrix is not square");
  const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
  const double skew = (M - M.transpose()).cwiseAbs().maxCoeff();
  if (skew > 1e-9 * scale)
    throw std::invalid_argument(std::string(who) + ": matrix is not symmetric");
}

}  // namespace

RationalMatrix gegenbauer_gram_exact(const PointConfiguration& x, int l) {
  if (!x.exact()) throw std::logic_error("gegenbauer_gram_exact needs an exact-mode configuration");
  const int n = x.size();
  const UniPoly g = gegenbauer_poly(x.dim, l);
  RationalMatrix m(n, std::vector<Rational>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m[a][b] = g.eval(x.gram[a][b]);
  return m;
}

Eigen::MatrixXd gegenbauer_gram_matrix(const PointConfiguration& x, int l) {
  const int n = x.size();
  Eigen::MatrixXd m(n, n);
  if (x.exact()) {
    const RationalMatrix exact = gegenbauer_gram_exact(x, l);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) m(a, b) = to_double(exact[a][b]);
    return m;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m(a, b) = eval_gegenbauer_f64(x.dim, l, x.gram_f64(a, b));
  return m;
}

CheckReport psd_rank_check(const Eigen::MatrixXd& M, long h, double tol) {
  require_symmetric(M, "psd_rank_check");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M);
  const Eigen::VectorXd ev = solver.eigenvalues();
  const double lambda_max = std::max(1.0, ev.cwiseAbs().maxCoeff());
  const double cut = tol * lambda_max;
  const double min_eig = ev.minCoeff();
  const long rank = (ev.array() > cut).count();
  CheckReport c;
  c.name = "psd_rank";
  c.status = (min_eig >= -cut && rank <= h) ? CheckStatus::pass : CheckStatus::fail;
  c.measured = min_eig;
  c.threshold = -cut;
  c.note = "rank " + std::to_string(rank) + " (limit " + std::to_string(h) + ")";
  return c;
}

namespace {

CheckReport resolution_identity_exact(const PointConfiguration& x) {
  const SpectrumSpec spec = spectrum_spec_of(x);
  const UniPoly f_hat = spec.annihilator() / spec.annihilator().eval(Rational(1));
  const GegenExpansion coeff = expand_in_gegenbauer(x.dim, f_hat);
  const int n = x.size();
  RationalMatrix sum(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i <= coeff.degree(); ++i) {
    const RationalMatrix m = gegenbauer_gram_exact(x, i);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) sum[a][b] += coeff.coeffs[i] * m[a][b];
  }
  Rational worst(0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Rational dev = sum[a][b] - (a == b ? 1 : 0);
      if (dev < 0) dev = -dev;
      worst = std::max(worst, dev);
    }
  CheckReport c;
  c.name = "resolution_identity";
  c.measured = to_double(worst);
  c.threshold = 1e-9;
  c.status = c.measured < c.threshold ? CheckStatus::pass : CheckStatus::fail;
  c.note = worst == 0 ? "exact residual 0" : "";
  return c;
}

CheckReport resolution_identity_float(const PointConfiguration& x, double cluster_tol) {
  const std::vector<double> values = spectrum_of(x, cluster_tol).as_f64();
  std::vector<double> coeffs{1.0};
  double at_one = 1.0;
  for (double v : values) {
    std::vector<double> next(coeffs.size() + 1, 0.0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= v * coeffs[i];
    }
    coeffs = std::move(next);
    at_one *= (1.0 - v);
  }
  for (double& c : coeffs) c /= at_one;
  const std::vector<double> f_hat = expand_in_gegenbauer_f64(x.dim, coeffs);
  const int n = x.size();
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < f_hat.size(); ++i)
    sum += f_hat[i] * gegenbauer_gram_matrix(x, static_cast<int>(i));
  CheckReport c;
  c.name = "resolution_identity";
  c.measured = (sum - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  c.threshold = 1e-9;
  c.status = c.measured < c.threshold ? CheckStatus::pass : CheckStatus::fail;
  return c;
}

}  // namespace

CheckReport resolution_identity_check(const PointConfiguration& x, double cluster_tol) {
  return x.exact() ? resolution_identity_exact(x) : resolution_identity_float(x, cluster_tol);
}

InertiaCount inertia(const Eigen::MatrixXd& M, double tol) {
  require_symmetric(M, "inertia");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M);
  const Eigen::VectorXd ev = solver.eigenvalues();
  const double band = tol * std::max(1.0, ev.cwiseAbs().maxCoeff());
  InertiaCount out;
  out.tol = tol;
  for (int i = 0; i < ev.size(); ++i) {
    if (ev(i) > band) ++out.n_pos;
    else if (ev(i) < -band) ++out.n_neg;
    else ++out.n_zero;
  }
  return out;
}

CheckReport inertia_lemma_check(const Eigen::MatrixXd& M, const Eigen::MatrixXd& N, double tol) {
  require_symmetric(M, "inertia_lemma_check");
  if (N.cols() != M.rows())
    throw std::invalid_argument("inertia_lemma_check: N must have as many columns as M has rows");
  const Eigen::MatrixXd P = N * M * N.transpose();
  const double scale = std::max(1.0, P.cwiseAbs().maxCoeff());
  double off_diag = 0.0;
  for (int i = 0; i < P.rows(); ++i)
    for (int j = 0; j < P.cols(); ++j)
      if (i != j) off_diag = std::max(off_diag, std::abs(P(i, j)));
  CheckReport c;
  c.name = "inertia_lemma";
  if (off_diag > tol * scale) {
    c.status = CheckStatus::not_applicable;
    c.measured = off_diag;
    c.threshold = tol * scale;
    c.note = "N*M*N^T is not diagonal, the inertia bound does not apply";
    return c;
  }
  int u = 0;
  int v = 0;
  for (int i = 0; i < P.rows(); ++i) {
    if (P(i, i) > tol * scale) ++u;
    else if (P(i, i) < -tol * scale) ++v;
  }
  const InertiaCount m_inertia = inertia(M, tol);
  c.status = (u <= m_inertia.n_pos && v <= m_inertia.n_neg) ? CheckStatus::pass : CheckStatus::fail;
  c.measured = static_cast<double>(std::max(u - m_inertia.n_pos, v - m_inertia.n_neg));
  c.threshold = 0.0;
  c.note = "u=" + std::to_string(u) + " v=" + std::to_string(v) +
           " n_pos=" + std::to_string(m_inertia.n_pos) + " n_neg=" + std::to_string(m_inertia.n_neg);
  return c;
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least 1 node");
  std::vector<double> nodes(n);
  std::vector<double> weights(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = z;
      for (int l = 2; l <= n; ++l) {
        const double p2 = ((2 * l - 1) * z * p1 - (l - 1) * p0) / l;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (z * p1 - p0) / (z * z - 1.0);
      const double z_next = z - p1 / pp;
      if (std::abs(z_next - z) < 1e-15) {
        z = z_next;
        break;
      }
      z = z_next;
    }
    nodes[i] = -z;
    nodes[n - 1 - i] = z;
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
  return {nodes, weights};
}

double orthogonality_check(int d, int k, int l, int nodes) {
  if (d < 2) throw std::invalid_argument("unsupported dimension d = " + std::to_string(d) + " (need d >= 2)");
  if (k < 0 || l < 0) throw std::invalid_argument("orthogonality_check: degrees must be >= 0");
  if (nodes < std::max(2, 2 * (k + l)))
    throw std::invalid_argument("orthogonality_check: too few quadrature nodes for the requested degrees");
  const auto [x, w] = gauss_legendre(nodes);
  // t = cos(theta): the weight (1-t^2)^((d-3)/2) dt becomes (sin theta)^(d-2)
  // d(theta), analytic in theta for every d >= 2, so plain Gauss-Legendre on
  // theta in [0, pi] converges fast even when the t-form has endpoint
  // singularities (d = 2) or square roots (even d).
  double norm = 0.0;
  double integral = 0.0;
  for (int i = 0; i < nodes; ++i) {
    const double theta = (x[i] + 1.0) * std::numbers::pi / 2.0;
    const double weight = w[i] * std::numbers::pi / 2.0 * std::pow(std::sin(theta), d - 2);
    const double t = std::cos(theta);
    norm += weight;
    integral += weight * eval_gegenbauer_f64(d, k, t) * eval_gegenbauer_f64(d, l, t);
  }
  return integral / norm;
}

}  // namespace sdist
