// SPDX-License-Identifier: Apache-2.0
//
// oia-sim -- low-complexity opportunistic interference alignment simulator
// for K-transmitter MIMO interference channels
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Grassmannian geometry kernels: orthonormal generator matrices, principal
// angles, chordal distance, subspace mean and the exact / approximate spread
// of a set of subspaces. All subspaces are points of G(M, 2M), represented by
// 2M x M generator matrices with orthonormal columns.

#ifndef OIA_GRASSMANN_HPP
#define OIA_GRASSMANN_HPP

#include "oia/errors.hpp"
#include "oia/types.hpp"

#include <span>
#include <vector>

namespace oia
{

// Tolerances for double precision with ambient dimension up to ~16.
inline constexpr double kOrthonormalityTol = 1e-10; // ||B^H B - I||_F bound for generators
inline constexpr double kRankRatioTol = 1e-9;       // smallest/largest singular value ratio
inline constexpr double kDegenerateSpectrumTol = 1e-10;

/// Orthonormal basis of an M-dimensional subspace of C^(2M) (or, generally,
/// of C^rows with rows >= cols). Non-unique: B and B*U generate the same
/// subspace for any unitary U.
class GeneratorMatrix
{
  public:
    /// Validates orthonormality of the columns; throws std::invalid_argument
    /// if ||B^H B - I||_F exceeds the tolerance or the shape is degenerate.
    explicit GeneratorMatrix(CMatrix basis);

    const CMatrix &basis() const { return basis_; }
    Eigen::Index ambient_dim() const { return basis_.rows(); }
    Eigen::Index subspace_dim() const { return basis_.cols(); }

    /// Orthogonal projector B B^H onto the subspace.
    CMatrix projector() const { return basis_ * basis_.adjoint(); }

  private:
    CMatrix basis_;
};

/// The canonical angles between two M-dimensional subspaces, in radians,
/// nondecreasing in [0, pi/2].
struct PrincipalAngles
{
    std::vector<double> angles;
};

/// Orthonormal basis spanning the column space of A. Throws RankDeficientError
/// when the smallest singular value falls below kRankRatioTol times the
/// largest (A does not define an M-dimensional subspace to working precision).
GeneratorMatrix orthonormalize(const CMatrix &a);

/// Squared chordal distance d_c^2(A, B) = M - tr(A^H B B^H A), in [0, M].
/// Symmetric, and invariant under the choice of generators.
double chordal_distance_sq(const GeneratorMatrix &a, const GeneratorMatrix &b);

/// Principal angles between the subspaces generated by a and b: the arccos of
/// the singular values of a^H b (clamped to [0,1] against roundoff).
PrincipalAngles principal_angles(const GeneratorMatrix &a, const GeneratorMatrix &b);

/// Sum of the orthogonal projectors of the given subspaces. Hermitian with
/// trace L*M; all eigenvalues lie in [0, L].
CMatrix sum_projectors(std::span<const GeneratorMatrix> subspaces);

/// Eigenvalues of a Hermitian matrix, descending. The input is symmetrized as
/// (B + B^H)/2 before solving; throws NotHermitianError when the asymmetry
/// residual exceeds 1e-6 relative.
std::vector<double> hermitian_eigs(const CMatrix &b);

/// Eigen-decomposition of a Hermitian matrix, eigenvalues ascending (columns
/// of `vectors` match `values`). Same symmetrization contract as
/// hermitian_eigs.
struct HermitianEig
{
    Eigen::VectorXd values; // ascending
    CMatrix vectors;
};
HermitianEig hermitian_eig_decomposition(const CMatrix &b);

struct SubspaceMeanResult
{
    GeneratorMatrix mean;
    /// True when the M-th and (M+1)-th largest eigenvalues of the projector
    /// sum coincide to within kDegenerateSpectrumTol; the mean is then
    /// non-unique and `mean` is one of the maximizers.
    bool degenerate_spectrum;
};

/// Mean subspace: the minimizer of sum_l d_c^2(F, H_l) over all M-dimensional
/// subspaces F, i.e. the span of the top-M eigenvectors of the projector sum.
SubspaceMeanResult subspace_mean(std::span<const GeneratorMatrix> subspaces);

/// Exact spread of L subspaces: the attained minimum of sum_l d_c^2(F, H_l),
/// equal to L*M minus the sum of the top-M eigenvalues of the projector sum.
/// Zero exactly when all subspaces coincide.
double spread_exact(std::span<const GeneratorMatrix> subspaces);

/// Approximate spread: min over j of sum_l d_c^2(H_j, H_l). Upper-bounds the
/// exact spread, and for L = 2 equals d_c^2(H_1, H_2).
double spread_approx(std::span<const GeneratorMatrix> subspaces);

/// Closed-form spectrum of the sum of two rank-M projectors in terms of the
/// principal angles between their ranges: {1 + cos(theta_m)} followed by
/// {1 - cos(theta_m)} in descending order. Sums to 2M.
std::vector<double> projector_pair_eigs(const PrincipalAngles &angles);

} // namespace oia

#endif
