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

#ifndef SDIST_CONFIGURATIONS_HPP
#define SDIST_CONFIGURATIONS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sdist/bounds.hpp"
#include "sdist/check.hpp"
#include "sdist/numerics.hpp"

namespace sdist {

enum class GramMode { exact, floating };

using RationalMatrix = std::vector<std::vector<Rational>>;

/// A finite point set on S^{d-1}, represented by its Gram matrix. The gram
/// is the primary form: every quantity downstream (spectra, G_l values,
/// bounds) is a function of the inner products alone. Coordinates are an
/// optional float decoration (n x dim rows).
///
/// In exact mode `gram` is authoritative and `gram_f64` is its conversion;
/// in floating mode `gram` is empty and `gram_f64` is authoritative.
struct PointConfiguration {
  int dim = 0;
  GramMode mode = GramMode::exact;
  RationalMatrix gram;
  Eigen::MatrixXd gram_f64;
  std::optional<Eigen::MatrixXd> coords;
  std::string label;

  int size() const { return static_cast<int>(gram_f64.rows()); }
  bool exact() const { return mode == GramMode::exact; }
};

/// Builds an exact-mode configuration, filling the float mirror.
/// Throws std::invalid_argument if the matrix is not square or d < 2.
PointConfiguration make_exact_configuration(int dim, RationalMatrix gram, std::string label);

/// Builds a float-mode configuration. Throws as above.
PointConfiguration make_float_configuration(int dim, Eigen::MatrixXd gram,
                                            std::optional<Eigen::MatrixXd> coords,
                                            std::string label);

/// d+1 unit vectors with all pairwise inner products -1/d.
PointConfiguration regular_simplex(int d);

/// Edge midpoints of the regular simplex, rescaled to unit norm (a raw
/// midpoint has squared norm (d-1)/(2d), so the set is not on the sphere
/// until rescaled). C(d+1,2) points; inner products (d-3)/(2(d-1)) for
/// edges sharing a vertex and -2/(d-1) for disjoint edges.
PointConfiguration midpoint_simplex(int d);

/// The 2d points {±e_1, ..., ±e_d}; points i and i+d are antipodes.
PointConfiguration cross_polytope(int d);

/// The 12 vertices of the regular icosahedron, float mode with coordinates;
/// off-diagonal inner products are ±1/sqrt(5) and -1.
PointConfiguration icosahedron();

/// Exact annihilator of the icosahedron's half-set inner products
/// {±1/sqrt(5)}: the monic polynomial t^2 - 1/5 over d = 3.
SpectrumSpec icosahedron_y_spec();

/// Restriction of a configuration to a subset of its indices.
PointConfiguration sub_configuration(const PointConfiguration& x, const std::vector<int>& indices,
                                     std::string label = "");

/// Distinct off-diagonal inner products with ordered-pair counts.
/// Exact mode keeps exact values; float mode reports single-linkage cluster
/// means (radius tol), so exactness is lost.
struct Spectrum {
  GramMode mode = GramMode::exact;
  std::vector<Rational> values;    // exact mode, ascending
  std::vector<double> values_f64;  // floating mode, ascending cluster means
  std::vector<long> counts;        // aligned with the values, ordered pairs

  int s() const { return static_cast<int>(counts.size()); }
  std::vector<double> as_f64() const;
};

/// Throws std::invalid_argument on configurations with fewer than 2 points
/// ("no spectrum").
Spectrum spectrum_of(const PointConfiguration& x, double tol = 1e-9);

/// Exact spectrum as a SpectrumSpec (exact mode only; throws otherwise).
SpectrumSpec spectrum_spec_of(const PointConfiguration& x);

/// Pairing of antipodal indices: (i, j) with i < j and gram[i][j] = -1
/// (within tol in float mode). `antipodal` is true iff the pairs partition
/// the whole index set; `half` collects the least index of each pair.
struct AntipodalDecomposition {
  bool antipodal = false;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> half;
};

/// Throws std::invalid_argument if some index has two antipodes (impossible
/// for distinct unit vectors; means duplicate points).
AntipodalDecomposition antipodal_decompose(const PointConfiguration& x, double tol = 1e-9);

struct ValidationReport {
  std::vector<CheckReport> checks;
  int rank = 0;
  double min_eigenvalue = 0.0;

  bool ok() const { return all_passed(checks); }
};

/// Itemized structural checks: square, symmetric, unit diagonal, entries in
/// [-1,1] (exact off-diagonal strictly below 1), PSD within tol (minimum
/// eigenvalue >= -tol*n), numerical rank <= dim (eigenvalues > tol*max(1,
/// lambda_max) counted), and coords * coords^T ~ gram when coords are
/// present. Failures are reported, never thrown.
ValidationReport validate_configuration(const PointConfiguration& x, double tol = 1e-9);

}  // namespace sdist

#endif  // SDIST_CONFIGURATIONS_HPP
