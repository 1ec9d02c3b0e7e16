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

#include "oia/grassmann.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace oia
{

GeneratorMatrix::GeneratorMatrix(CMatrix basis) : basis_(std::move(basis))
{
    if (basis_.rows() < 1 || basis_.cols() < 1 || basis_.rows() < basis_.cols())
        throw std::invalid_argument("GeneratorMatrix: need rows >= cols >= 1");
    if (!basis_.allFinite())
        throw std::invalid_argument("GeneratorMatrix: non-finite entries");

    const Eigen::Index m = basis_.cols();
    const CMatrix gram = basis_.adjoint() * basis_;
    const double residual = (gram - CMatrix::Identity(m, m)).norm();
    if (residual > kOrthonormalityTol)
        throw std::invalid_argument("GeneratorMatrix: columns not orthonormal (residual " +
                                    std::to_string(residual) + ")");
}

GeneratorMatrix orthonormalize(const CMatrix &a)
{
    if (a.rows() < 1 || a.cols() < 1 || a.rows() < a.cols())
        throw ShapeMismatchError("orthonormalize: need rows >= cols >= 1");
    if (!a.allFinite())
        throw std::invalid_argument("orthonormalize: non-finite entries");

    Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeThinU);
    const auto &sv = svd.singularValues();
    if (sv(0) <= 0.0 || sv(sv.size() - 1) <= kRankRatioTol * sv(0))
        throw RankDeficientError("orthonormalize: numerically rank-deficient input");
    return GeneratorMatrix(svd.matrixU());
}

namespace
{

void check_same_shape(const GeneratorMatrix &a, const GeneratorMatrix &b, const char *op)
{
    if (a.ambient_dim() != b.ambient_dim() || a.subspace_dim() != b.subspace_dim())
        throw ShapeMismatchError(std::string(op) + ": generator shapes differ");
}

} // namespace

double chordal_distance_sq(const GeneratorMatrix &a, const GeneratorMatrix &b)
{
    check_same_shape(a, b, "chordal_distance_sq");
    const double m = static_cast<double>(a.subspace_dim());
    // tr(A^H B B^H A) = ||A^H B||_F^2
    const double overlap = (a.basis().adjoint() * b.basis()).squaredNorm();
    return std::clamp(m - overlap, 0.0, m);
}

PrincipalAngles principal_angles(const GeneratorMatrix &a, const GeneratorMatrix &b)
{
    check_same_shape(a, b, "principal_angles");
    Eigen::JacobiSVD<CMatrix> svd(a.basis().adjoint() * b.basis());
    PrincipalAngles out;
    out.angles.reserve(static_cast<std::size_t>(a.subspace_dim()));
    // Singular values come out descending, so the angles are ascending.
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    {
        const double c = std::clamp(svd.singularValues()(i), 0.0, 1.0);
        out.angles.push_back(std::acos(c));
    }
    return out;
}

CMatrix sum_projectors(std::span<const GeneratorMatrix> subspaces)
{
    if (subspaces.empty())
        throw EmptyListError("sum_projectors: empty subspace list");
    const Eigen::Index n = subspaces.front().ambient_dim();
    const Eigen::Index m = subspaces.front().subspace_dim();
    CMatrix acc = CMatrix::Zero(n, n);
    for (const auto &s : subspaces)
    {
        if (s.ambient_dim() != n || s.subspace_dim() != m)
            throw ShapeMismatchError("sum_projectors: generator shapes differ");
        acc += s.projector();
    }
    return acc;
}

namespace
{

CMatrix symmetrized(const CMatrix &b, const char *op)
{
    if (b.rows() != b.cols())
        throw ShapeMismatchError(std::string(op) + ": matrix not square");
    const double scale = std::max(1.0, b.norm());
    const double residual = (b - b.adjoint()).norm();
    if (residual > 1e-6 * scale)
        throw NotHermitianError(std::string(op) + ": asymmetry residual " +
                                std::to_string(residual) + " exceeds tolerance");
    return 0.5 * (b + b.adjoint());
}

} // namespace

std::vector<double> hermitian_eigs(const CMatrix &b)
{
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(symmetrized(b, "hermitian_eigs"),
                                                  Eigen::EigenvaluesOnly);
    std::vector<double> eigs(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + solver.eigenvalues().size());
    std::reverse(eigs.begin(), eigs.end());
    return eigs;
}

HermitianEig hermitian_eig_decomposition(const CMatrix &b)
{
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(symmetrized(b, "hermitian_eig_decomposition"));
    return HermitianEig{solver.eigenvalues(), solver.eigenvectors()};
}

SubspaceMeanResult subspace_mean(std::span<const GeneratorMatrix> subspaces)
{
    if (subspaces.empty())
        throw EmptyListError("subspace_mean: empty subspace list");
    const Eigen::Index n = subspaces.front().ambient_dim();
    const Eigen::Index m = subspaces.front().subspace_dim();

    const HermitianEig eig = hermitian_eig_decomposition(sum_projectors(subspaces));
    // Top-M eigenvectors (eigenvalues ascending -> rightmost M columns).
    CMatrix basis = eig.vectors.rightCols(m);
    bool degenerate = false;
    if (n > m)
        degenerate = (eig.values(n - m) - eig.values(n - m - 1)) < kDegenerateSpectrumTol;
    return SubspaceMeanResult{GeneratorMatrix(std::move(basis)), degenerate};
}

double spread_exact(std::span<const GeneratorMatrix> subspaces)
{
    if (subspaces.empty())
        throw EmptyListError("spread_exact: empty subspace list");
    const Eigen::Index m = subspaces.front().subspace_dim();
    const double lm = static_cast<double>(subspaces.size()) * static_cast<double>(m);

    const std::vector<double> eigs = hermitian_eigs(sum_projectors(subspaces));
    double top = 0.0;
    for (Eigen::Index i = 0; i < m; ++i)
        top += eigs[static_cast<std::size_t>(i)];
    return std::max(0.0, lm - top);
}

double spread_approx(std::span<const GeneratorMatrix> subspaces)
{
    const std::size_t count = subspaces.size();
    if (count == 0)
        throw EmptyListError("spread_approx: empty subspace list");

    // Pairwise squared chordal distances; the j = l self terms are zero and
    // included in the sums.
    std::vector<double> row_sums(count, 0.0);
    for (std::size_t j = 0; j < count; ++j)
        for (std::size_t l = j + 1; l < count; ++l)
        {
            const double d = chordal_distance_sq(subspaces[j], subspaces[l]);
            row_sums[j] += d;
            row_sums[l] += d;
        }
    return *std::min_element(row_sums.begin(), row_sums.end());
}

std::vector<double> projector_pair_eigs(const PrincipalAngles &angles)
{
    const std::size_t m = angles.angles.size();
    if (m == 0)
        throw std::invalid_argument("projector_pair_eigs: empty angle list");
    for (std::size_t i = 0; i < m; ++i)
    {
        const double th = angles.angles[i];
        if (!(th >= 0.0 && th <= M_PI_2 + 1e-12))
            throw std::invalid_argument("projector_pair_eigs: angle outside [0, pi/2]");
        if (i > 0 && th < angles.angles[i - 1] - 1e-12)
            throw std::invalid_argument("projector_pair_eigs: angles not nondecreasing");
    }

    std::vector<double> eigs;
    eigs.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i)
        eigs.push_back(1.0 + std::cos(angles.angles[i]));
    for (std::size_t i = m; i-- > 0;)
        eigs.push_back(1.0 - std::cos(angles.angles[i]));
    return eigs;
}

} // namespace oia
