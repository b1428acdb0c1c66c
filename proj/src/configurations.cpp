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

#include "sdist/configurations.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace sdist {

namespace {

void require_dim(int d) {
  if (d < 2) throw std::invalid_argument("unsupported dimension d = " + std::to_string(d) + " (need d >= 2)");
}

void require_square(const RationalMatrix& gram) {
  for (const auto& row : gram)
    if (row.size() != gram.size()) throw std::invalid_argument("gram matrix is not square");
}

Eigen::MatrixXd to_f64(const RationalMatrix& gram) {
  const int n = static_cast<int>(gram.size());
  Eigen::MatrixXd out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = to_double(gram[i][j]);
  return out;
}

}  // namespace

PointConfiguration make_exact_configuration(int dim, RationalMatrix gram, std::string label) {
  require_dim(dim);
  require_square(gram);
  // Exact comparisons downstream (spectrum grouping, the antipode test)
  // require canonical mpq form, which two-argument construction skips.
  for (std::vector<Rational>& row : gram)
    for (Rational& q : row) q.canonicalize();
  PointConfiguration x;
  x.dim = dim;
  x.mode = GramMode::exact;
  x.gram_f64 = to_f64(gram);
  x.gram = std::move(gram);
  x.label = std::move(label);
  return x;
}

PointConfiguration make_float_configuration(int dim, Eigen::MatrixXd gram,
                                            std::optional<Eigen::MatrixXd> coords,
                                            std::string label) {
  require_dim(dim);
  if (gram.rows() != gram.cols()) throw std::invalid_argument("gram matrix is not square");
  if (coords && (coords->rows() != gram.rows() || coords->cols() != dim))
    throw std::invalid_argument("coords must be n x dim");
  PointConfiguration x;
  x.dim = dim;
  x.mode = GramMode::floating;
  x.gram_f64 = std::move(gram);
  x.coords = std::move(coords);
  x.label = std::move(label);
  return x;
}

PointConfiguration regular_simplex(int d) {
  require_dim(d);
  const int n = d + 1;
  const Rational off = make_rational(-1, d);
  RationalMatrix gram(n, std::vector<Rational>(n, off));
  for (int i = 0; i < n; ++i) gram[i][i] = 1;
  return make_exact_configuration(d, std::move(gram), "regular simplex, d=" + std::to_string(d));
}

PointConfiguration midpoint_simplex(int d) {
  require_dim(d);
  // Vertices e_0..e_d of the regular simplex have <e_a, e_b> = 1 or -1/d;
  // the midpoint of edge {i,j} is (e_i+e_j)/2 with squared norm (d-1)/(2d),
  // and the gram below is the bilinear expansion rescaled to unit norm.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) edges.emplace_back(i, j);
  const auto dot = [d](int a, int b) { return a == b ? Rational(1) : make_rational(-1, d); };
  const Rational norm_sq = make_rational(d - 1, 2 * d);
  const int n = static_cast<int>(edges.size());
  RationalMatrix gram(n, std::vector<Rational>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const auto [i, j] = edges[a];
      const auto [k, l] = edges[b];
      const Rational raw = (dot(i, k) + dot(i, l) + dot(j, k) + dot(j, l)) / 4;
      gram[a][b] = raw / norm_sq;
    }
  }
  return make_exact_configuration(d, std::move(gram),
                                  "midpoints of regular simplex edges, d=" + std::to_string(d));
}

PointConfiguration cross_polytope(int d) {
  require_dim(d);
  const int n = 2 * d;
  RationalMatrix gram(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) gram[i][i] = 1;
  for (int i = 0; i < d; ++i) {
    gram[i][i + d] = -1;
    gram[i + d][i] = -1;
  }
  return make_exact_configuration(d, std::move(gram), "cross polytope, d=" + std::to_string(d));
}

PointConfiguration icosahedron() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double r = std::sqrt(2.0 + phi);  // 1 + phi^2 = 2 + phi
  Eigen::MatrixXd coords(12, 3);
  int row = 0;
  for (double a : {1.0, -1.0}) {
    for (double b : {phi, -phi}) {
      coords.row(row++) = Eigen::RowVector3d(0, a, b) / r;
      coords.row(row++) = Eigen::RowVector3d(a, b, 0) / r;
      coords.row(row++) = Eigen::RowVector3d(b, 0, a) / r;
    }
  }
  Eigen::MatrixXd gram = coords * coords.transpose();
  return make_float_configuration(3, std::move(gram), std::move(coords), "icosahedron");
}

SpectrumSpec icosahedron_y_spec() {
  UniPoly p = UniPoly::monomial(2) + UniPoly::constant(make_rational(-1, 5));
  return SpectrumSpec::from_poly(3, std::move(p));
}

PointConfiguration sub_configuration(const PointConfiguration& x, const std::vector<int>& indices,
                                     std::string label) {
  const int n = static_cast<int>(indices.size());
  for (int i : indices)
    if (i < 0 || i >= x.size()) throw std::invalid_argument("sub_configuration: index out of range");
  PointConfiguration y;
  y.dim = x.dim;
  y.mode = x.mode;
  y.label = label.empty() ? x.label + " (subset)" : std::move(label);
  y.gram_f64.resize(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) y.gram_f64(a, b) = x.gram_f64(indices[a], indices[b]);
  if (x.exact()) {
    y.gram.assign(n, std::vector<Rational>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) y.gram[a][b] = x.gram[indices[a]][indices[b]];
  }
  if (x.coords) {
    Eigen::MatrixXd c(n, x.dim);
    for (int a = 0; a < n; ++a) c.row(a) = x.coords->row(indices[a]);
    y.coords = std::move(c);
  }
  return y;
}

std::vector<double> Spectrum::as_f64() const {
  if (mode == GramMode::floating) return values_f64;
  std::vector<double> out;
  out.reserve(values.size());
  for (const Rational& v : values) out.push_back(to_double(v));
  return out;
}

Spectrum spectrum_of(const PointConfiguration& x, double tol) {
  const int n = x.size();
  if (n < 2) throw std::invalid_argument("no spectrum: configuration has fewer than 2 points");
  Spectrum spec;
  spec.mode = x.mode;
  if (x.exact()) {
    std::map<Rational, long> counts;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) ++counts[x.gram[i][j]];
    for (const auto& [value, count] : counts) {
      spec.values.push_back(value);
      spec.counts.push_back(count);
    }
    return spec;
  }
  std::vector<double> entries;
  entries.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) entries.push_back(x.gram_f64(i, j));
  std::sort(entries.begin(), entries.end());
  // Single-linkage with radius tol: a gap > tol starts a new cluster.
  std::size_t start = 0;
  for (std::size_t i = 1; i <= entries.size(); ++i) {
    if (i == entries.size() || entries[i] - entries[i - 1] > tol) {
      double sum = 0;
      for (std::size_t k = start; k < i; ++k) sum += entries[k];
      spec.values_f64.push_back(sum / static_cast<double>(i - start));
      spec.counts.push_back(static_cast<long>(i - start));
      start = i;
    }
  }
  return spec;
}

SpectrumSpec spectrum_spec_of(const PointConfiguration& x) {
  if (!x.exact())
    throw std::logic_error("spectrum_spec_of needs an exact-mode configuration");
  return SpectrumSpec::from_roots(x.dim, spectrum_of(x).values);
}

AntipodalDecomposition antipodal_decompose(const PointConfiguration& x, double tol) {
  const int n = x.size();
  AntipodalDecomposition out;
  std::vector<int> mate(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool anti = x.exact() ? x.gram[i][j] == -1 : std::abs(x.gram_f64(i, j) + 1.0) <= tol;
      if (!anti) continue;
      if (mate[i] != -1)
        throw std::invalid_argument(
            "invalid configuration: point " + std::to_string(i) +
            " has two antipodes, so the configuration has duplicate points");
      mate[i] = j;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (mate[i] > i) {
      out.pairs.emplace_back(i, mate[i]);
      out.half.push_back(i);
    }
  }
  out.antipodal = static_cast<int>(out.pairs.size()) * 2 == n;
  return out;
}

namespace {

CheckReport bool_check(const std::string& name, bool pass, std::string note = "") {
  CheckReport c;
  c.name = name;
  c.status = pass ? CheckStatus::pass : CheckStatus::fail;
  c.note = std::move(note);
  return c;
}

CheckReport measured_check(const std::string& name, bool pass, double measured, double threshold,
                           std::string note = "") {
  CheckReport c = bool_check(name, pass, std::move(note));
  c.measured = measured;
  c.threshold = threshold;
  return c;
}

}  // namespace

ValidationReport validate_configuration(const PointConfiguration& x, double tol) {
  ValidationReport report;
  const int n = x.size();

  bool square = x.gram_f64.rows() == x.gram_f64.cols();
  if (x.exact()) {
    square = square && static_cast<int>(x.gram.size()) == n;
    for (const auto& row : x.gram) square = square && static_cast<int>(row.size()) == n;
  }
  report.checks.push_back(bool_check("square", square));
  if (!square) return report;

  if (x.exact()) {
    bool symmetric = true;
    bool unit_diag = true;
    bool in_range = true;
    for (int i = 0; i < n && symmetric; ++i)
      for (int j = 0; j < n && symmetric; ++j) symmetric = x.gram[i][j] == x.gram[j][i];
    for (int i = 0; i < n; ++i) unit_diag = unit_diag && x.gram[i][i] == 1;
    for (int i = 0; i < n && in_range; ++i)
      for (int j = 0; j < n && in_range; ++j) {
        if (i == j) continue;
        in_range = x.gram[i][j] >= -1 && x.gram[i][j] < 1;
      }
    report.checks.push_back(bool_check("symmetric", symmetric));
    report.checks.push_back(bool_check("unit_diagonal", unit_diag));
    report.checks.push_back(
        bool_check("entries_in_range", in_range, in_range ? "" : "off-diagonal entry outside [-1,1)"));
  } else {
    const double sym = (x.gram_f64 - x.gram_f64.transpose()).cwiseAbs().maxCoeff();
    report.checks.push_back(measured_check("symmetric", sym <= tol, sym, tol));
    const double diag = (x.gram_f64.diagonal().array() - 1.0).abs().maxCoeff();
    report.checks.push_back(measured_check("unit_diagonal", diag <= tol, diag, tol));
    const double overflow = x.gram_f64.cwiseAbs().maxCoeff() - 1.0;
    report.checks.push_back(measured_check("entries_in_range", overflow <= tol, overflow, tol));
  }

  Eigen::MatrixXd sym_part = (x.gram_f64 + x.gram_f64.transpose()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym_part);
  const Eigen::VectorXd ev = solver.eigenvalues();
  report.min_eigenvalue = ev.minCoeff();
  const double lambda_max = ev.maxCoeff();
  const double psd_floor = -tol * n;
  report.checks.push_back(measured_check("positive_semidefinite", report.min_eigenvalue >= psd_floor,
                                         report.min_eigenvalue, psd_floor));
  const double rank_cut = tol * std::max(1.0, lambda_max);
  report.rank = static_cast<int>((ev.array() > rank_cut).count());
  report.checks.push_back(measured_check("rank_at_most_dim", report.rank <= x.dim,
                                         static_cast<double>(report.rank),
                                         static_cast<double>(x.dim)));

  if (x.coords) {
    const double residual = (*x.coords * x.coords->transpose() - x.gram_f64).cwiseAbs().maxCoeff();
    report.checks.push_back(measured_check("coords_match_gram", residual <= tol, residual, tol));
  }
  return report;
}

}  // namespace sdist
