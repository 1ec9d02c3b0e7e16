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

#include "oracles.hpp"

#include "oia/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace oia::test
{

std::vector<double> jacobi_eigenvalues(const CMatrix &hermitian)
{
    const std::size_t n = static_cast<std::size_t>(hermitian.rows());
    if (hermitian.cols() != hermitian.rows())
        throw std::invalid_argument("jacobi_eigenvalues: matrix not square");

    // Work on a plain array, symmetrized.
    std::vector<std::vector<Complex>> a(n, std::vector<Complex>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = 0.5 * (hermitian(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) +
                             std::conj(hermitian(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i))));

    auto off_diagonal_sq = [&]() {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j)
                    acc += std::norm(a[i][j]);
        return acc;
    };

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            scale = std::max(scale, std::abs(a[i][j]));
    scale = std::max(scale, 1.0);

    for (int sweep = 0; sweep < 60 && off_diagonal_sq() > 1e-26 * scale * scale; ++sweep)
    {
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
            {
                const double r = std::abs(a[p][q]);
                if (r <= 1e-300)
                    continue;
                const Complex phase = a[p][q] / r; // e^{i phi}
                const double alpha = std::real(a[p][p]);
                const double beta = std::real(a[q][q]);
                const double tau = (beta - alpha) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // A <- J^H A J with the unitary block [[c, s*phase], [-s*conj(phase), c]].
                for (std::size_t i = 0; i < n; ++i)
                {
                    const Complex aip = a[i][p];
                    const Complex aiq = a[i][q];
                    a[i][p] = c * aip - s * std::conj(phase) * aiq;
                    a[i][q] = s * phase * aip + c * aiq;
                }
                for (std::size_t j = 0; j < n; ++j)
                {
                    const Complex apj = a[p][j];
                    const Complex aqj = a[q][j];
                    a[p][j] = c * apj - s * phase * aqj;
                    a[q][j] = s * std::conj(phase) * apj + c * aqj;
                }
            }
    }

    std::vector<double> eigs(n);
    for (std::size_t i = 0; i < n; ++i)
        eigs[i] = std::real(a[i][i]);
    std::sort(eigs.begin(), eigs.end(), std::greater<>());
    return eigs;
}

CMatrix gram_schmidt(const CMatrix &a)
{
    if (a.rows() < a.cols() || a.cols() < 1)
        throw std::invalid_argument("gram_schmidt: need rows >= cols >= 1");
    CMatrix q = a;
    for (Eigen::Index j = 0; j < q.cols(); ++j)
    {
        for (int pass = 0; pass < 2; ++pass)
            for (Eigen::Index i = 0; i < j; ++i)
            {
                const Complex proj = q.col(i).dot(q.col(j));
                q.col(j) -= proj * q.col(i);
            }
        const double norm = q.col(j).norm();
        if (norm < 1e-12)
            throw std::invalid_argument("gram_schmidt: rank-deficient input");
        q.col(j) /= norm;
    }
    return q;
}

CMatrix random_unitary(Eigen::Index n, std::mt19937_64 &rng)
{
    return gram_schmidt(draw_cscg_matrix(n, n, rng));
}

CMatrix random_orthonormal(Eigen::Index rows, Eigen::Index cols, std::mt19937_64 &rng)
{
    return gram_schmidt(draw_cscg_matrix(rows, cols, rng));
}

} // namespace oia::test
