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

#ifndef SDIST_VERIFY_HPP
#define SDIST_VERIFY_HPP

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sdist/check.hpp"
#include "sdist/configurations.hpp"

namespace sdist {

/// M_l[a][b] = G_l(gram[a][b]). The addition formula writes M_l as
/// H_l * H_l^T for an |X| x h_l matrix H_l, so M_l must be PSD with
/// rank <= h_l; psd_rank_check tests exactly that consequence.
Eigen::MatrixXd gegenbauer_gram_matrix(const PointConfiguration& x, int l);

/// Exact form of the above (exact-mode configurations only; throws
/// std::logic_error otherwise).
RationalMatrix gegenbauer_gram_exact(const PointConfiguration& x, int l);

/// Passes iff the minimum eigenvalue is >= -tol*max(1, lambda_max) and the
/// numerical rank (eigenvalues > tol*max(1, lambda_max)) is <= h.
/// Throws std::invalid_argument on non-symmetric input.
CheckReport psd_rank_check(const Eigen::MatrixXd& M, long h, double tol);

/// Builds Fhat = F_X / F_X(1), expands it as sum fhat_i G_i, forms
/// sum_i fhat_i M_i and measures max |sum - I|. Exact-mode configurations
/// go through exact arithmetic (residual exactly 0); float mode clusters
/// the spectrum with radius cluster_tol first. Pass threshold 1e-9.
CheckReport resolution_identity_check(const PointConfiguration& x, double cluster_tol = 1e-9);

/// Eigenvalue signature of a symmetric matrix. The zero band is
/// |lambda| <= tol*max(1, max |lambda|).
struct InertiaCount {
  int n_pos = 0;
  int n_neg = 0;
  int n_zero = 0;
  double tol = 0.0;

  int order() const { return n_pos + n_neg + n_zero; }
};

/// Throws std::invalid_argument on non-symmetric input.
InertiaCount inertia(const Eigen::MatrixXd& M, double tol);

/// If N*M*N^T is diagonal D with u positive and v negative entries, then
/// u <= n_pos(M) and v <= n_neg(M). Reports not_applicable (distinct from
/// fail) when N*M*N^T is not diagonal within tol.
CheckReport inertia_lemma_check(const Eigen::MatrixXd& M, const Eigen::MatrixXd& N, double tol);

/// Gauss-Legendre nodes and weights on [-1,1]. n >= 1.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

/// Quadrature value of <G_k, G_l> under the normalized weight
/// c_d (1-t^2)^((d-3)/2) on [-1,1], c_d fixed by <1,1> = 1 (computed with
/// the same quadrature). Expected value: h_l if k == l, else 0. Integrates
/// in the t = cos(theta) variable so the weight (sin theta)^(d-2) stays
/// analytic for every d >= 2. Requires nodes >= max(2, 2(k+l)).
double orthogonality_check(int d, int k, int l, int nodes);

}  // namespace sdist

#endif  // SDIST_VERIFY_HPP
