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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oia/channel.hpp"
#include "oia/grassmann.hpp"
#include "support/oracles.hpp"

#include <cmath>
#include <random>

using namespace oia;

namespace
{

GeneratorMatrix known_angle_line(double theta)
{
    CMatrix b(2, 1);
    b << Complex(std::cos(theta), 0), Complex(std::sin(theta), 0);
    return GeneratorMatrix(b);
}

/// Pair of generators in G(M, 2M) with prescribed principal angles:
/// [[I],[0]] against [[diag cos],[diag sin]].
std::pair<GeneratorMatrix, GeneratorMatrix> known_angle_pair(const std::vector<double> &thetas)
{
    const Eigen::Index m = static_cast<Eigen::Index>(thetas.size());
    CMatrix a = CMatrix::Zero(2 * m, m);
    CMatrix b = CMatrix::Zero(2 * m, m);
    for (Eigen::Index i = 0; i < m; ++i)
    {
        a(i, i) = 1.0;
        b(i, i) = std::cos(thetas[static_cast<std::size_t>(i)]);
        b(m + i, i) = std::sin(thetas[static_cast<std::size_t>(i)]);
    }
    return {GeneratorMatrix(a), GeneratorMatrix(b)};
}

} // namespace

TEST_CASE("orthonormalize keeps the projector of an orthonormal input")
{
    std::mt19937_64 rng(11);
    const CMatrix a = test::random_orthonormal(6, 3, rng);
    const GeneratorMatrix g = orthonormalize(a);
    CHECK((g.projector() - a * a.adjoint()).norm() < 1e-12);
}

TEST_CASE("orthonormalize removes column scaling")
{
    CMatrix a = CMatrix::Zero(4, 2);
    a(0, 0) = 2.0;
    a(1, 1) = 3.0;
    const GeneratorMatrix g = orthonormalize(a);
    CMatrix expected = CMatrix::Zero(4, 4);
    expected(0, 0) = 1.0;
    expected(1, 1) = 1.0;
    CHECK((g.projector() - expected).norm() < 1e-12);
}

TEST_CASE("orthonormalize matches the Gram-Schmidt reference")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 25; ++i)
    {
        const CMatrix a = draw_cscg_matrix(6, 3, rng);
        const GeneratorMatrix g = orthonormalize(a);
        const CMatrix q = test::gram_schmidt(a);
        CHECK((g.projector() - q * q.adjoint()).norm() < 1e-10);
        CHECK((g.basis().adjoint() * g.basis() - CMatrix::Identity(3, 3)).norm() < 1e-10);
    }
}

TEST_CASE("orthonormalize rejects rank-deficient input")
{
    std::mt19937_64 rng(23);
    CMatrix a = draw_cscg_matrix(6, 3, rng);
    a.col(2) = a.col(0) * Complex(0.5, 0.25);
    CHECK_THROWS_AS(orthonormalize(a), RankDeficientError);
    CHECK_THROWS_AS(orthonormalize(CMatrix::Zero(6, 3)), RankDeficientError);
}

TEST_CASE("chordal distance of a subspace to itself is zero")
{
    std::mt19937_64 rng(31);
    const GeneratorMatrix g(test::random_orthonormal(8, 4, rng));
    CHECK(chordal_distance_sq(g, g) <= 1e-12);
}

TEST_CASE("chordal distance of complementary subspaces is M")
{
    const int m = 3;
    CMatrix a = CMatrix::Zero(2 * m, m);
    CMatrix b = CMatrix::Zero(2 * m, m);
    for (int i = 0; i < m; ++i)
    {
        a(i, i) = 1.0;
        b(m + i, i) = 1.0;
    }
    CHECK(chordal_distance_sq(GeneratorMatrix(a), GeneratorMatrix(b)) == doctest::Approx(3.0));
}

TEST_CASE("chordal distance between lines at 45 degrees is one half")
{
    CMatrix a(2, 1), b(2, 1);
    a << 1.0, 0.0;
    b << Complex(1 / std::sqrt(2.0), 0), Complex(1 / std::sqrt(2.0), 0);
    CHECK(chordal_distance_sq(GeneratorMatrix(a), GeneratorMatrix(b)) == doctest::Approx(0.5));
}

TEST_CASE("chordal distance rejects mismatched shapes")
{
    std::mt19937_64 rng(37);
    const GeneratorMatrix a(test::random_orthonormal(6, 3, rng));
    const GeneratorMatrix b(test::random_orthonormal(4, 2, rng));
    CHECK_THROWS_AS(chordal_distance_sq(a, b), ShapeMismatchError);
}

TEST_CASE("chordal distance is symmetric and generator-invariant")
{
    std::mt19937_64 rng(41);
    for (int i = 0; i < 20; ++i)
    {
        const GeneratorMatrix a(test::random_orthonormal(8, 4, rng));
        const GeneratorMatrix b(test::random_orthonormal(8, 4, rng));
        const double d = chordal_distance_sq(a, b);
        CHECK(chordal_distance_sq(b, a) == doctest::Approx(d).epsilon(1e-12));

        const GeneratorMatrix au(a.basis() * test::random_unitary(4, rng));
        const GeneratorMatrix bv(b.basis() * test::random_unitary(4, rng));
        CHECK(std::abs(chordal_distance_sq(au, bv) - d) < 1e-10);
        CHECK(d >= 0.0);
        CHECK(d <= 4.0);
    }
}

TEST_CASE("principal angles of trivial pairs")
{
    std::mt19937_64 rng(43);
    const GeneratorMatrix g(test::random_orthonormal(6, 3, rng));
    for (double th : principal_angles(g, g).angles)
        CHECK(th <= 1e-7);

    const auto [a, b] = known_angle_pair({M_PI_2, M_PI_2, M_PI_2});
    for (double th : principal_angles(a, b).angles)
        CHECK(th == doctest::Approx(M_PI_2));

    CHECK(principal_angles(known_angle_line(0.0), known_angle_line(M_PI_4)).angles[0] ==
          doctest::Approx(M_PI_4));
}

TEST_CASE("squared chordal distance equals the sum of squared angle sines")
{
    std::mt19937_64 rng(47);
    for (int i = 0; i < 20; ++i)
    {
        const GeneratorMatrix a(test::random_orthonormal(8, 4, rng));
        const GeneratorMatrix b(test::random_orthonormal(8, 4, rng));
        const PrincipalAngles angles = principal_angles(a, b);
        double sum = 0.0;
        double prev = -1.0;
        for (double th : angles.angles)
        {
            CHECK(th >= 0.0);
            CHECK(th <= M_PI_2 + 1e-12);
            CHECK(th >= prev - 1e-12);
            prev = th;
            sum += std::sin(th) * std::sin(th);
        }
        CHECK(std::abs(sum - chordal_distance_sq(a, b)) < 1e-9);
    }
}

TEST_CASE("sum of projectors: spectra of trivial cases")
{
    std::mt19937_64 rng(53);
    const GeneratorMatrix g(test::random_orthonormal(6, 3, rng));

    const std::vector<GeneratorMatrix> single{g};
    std::vector<double> eigs = hermitian_eigs(sum_projectors(single));
    for (int i = 0; i < 3; ++i)
        CHECK(std::abs(eigs[static_cast<std::size_t>(i)] - 1.0) < 1e-10);
    for (int i = 3; i < 6; ++i)
        CHECK(std::abs(eigs[static_cast<std::size_t>(i)]) < 1e-10);

    const std::vector<GeneratorMatrix> twice{g, g};
    eigs = hermitian_eigs(sum_projectors(twice));
    for (int i = 0; i < 3; ++i)
        CHECK(std::abs(eigs[static_cast<std::size_t>(i)] - 2.0) < 1e-10);
    for (int i = 3; i < 6; ++i)
        CHECK(std::abs(eigs[static_cast<std::size_t>(i)]) < 1e-10);
}

TEST_CASE("sum of projectors: Hermitian, trace L*M, eigenvalues in [0, L]")
{
    std::mt19937_64 rng(59);
    std::vector<GeneratorMatrix> subspaces;
    for (int l = 0; l < 3; ++l)
        subspaces.emplace_back(test::random_orthonormal(8, 4, rng));
    const CMatrix s = sum_projectors(subspaces);
    CHECK((s - s.adjoint()).norm() < 1e-12);
    CHECK(std::abs(std::real(s.trace()) - 12.0) < 1e-9);
    for (double eig : hermitian_eigs(s))
    {
        CHECK(eig >= -1e-10);
        CHECK(eig <= 3.0 + 1e-10);
    }

    CHECK_THROWS_AS(sum_projectors({}), EmptyListError);
}

TEST_CASE("hermitian_eigs on small known matrices")
{
    CMatrix d = CMatrix::Zero(3, 3);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    const std::vector<double> eigs = hermitian_eigs(d);
    CHECK(eigs[0] == doctest::Approx(3.0));
    CHECK(eigs[1] == doctest::Approx(2.0));
    CHECK(eigs[2] == doctest::Approx(1.0));

    for (double eig : hermitian_eigs(CMatrix::Identity(4, 4)))
        CHECK(eig == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eigs matches the Jacobi reference solver")
{
    std::mt19937_64 rng(61);
    for (int i = 0; i < 20; ++i)
    {
        const CMatrix x = draw_cscg_matrix(6, 6, rng);
        const CMatrix h = x + x.adjoint();
        const std::vector<double> fast = hermitian_eigs(h);
        const std::vector<double> reference = test::jacobi_eigenvalues(h);
        REQUIRE(fast.size() == reference.size());
        for (std::size_t j = 0; j < fast.size(); ++j)
            CHECK(std::abs(fast[j] - reference[j]) < 1e-8);
    }
}

TEST_CASE("hermitian_eigs rejects clearly non-Hermitian input")
{
    CMatrix bad = CMatrix::Zero(3, 3);
    bad(0, 1) = 5.0;
    bad(1, 0) = -5.0; // skew, not Hermitian
    CHECK_THROWS_AS(hermitian_eigs(bad), NotHermitianError);
}

TEST_CASE("eigen-decomposition reconstructs the matrix")
{
    std::mt19937_64 rng(67);
    const CMatrix x = draw_cscg_matrix(6, 6, rng);
    const CMatrix h = x + x.adjoint();
    const HermitianEig eig = hermitian_eig_decomposition(h);
    const CMatrix rebuilt = eig.vectors * eig.values.asDiagonal() * eig.vectors.adjoint();
    CHECK((rebuilt - h).norm() < 1e-8 * h.norm());
}

TEST_CASE("mean of identical subspaces is that subspace")
{
    std::mt19937_64 rng(71);
    const GeneratorMatrix g(test::random_orthonormal(6, 3, rng));
    const std::vector<GeneratorMatrix> copies{g, g, g};
    const SubspaceMeanResult mean = subspace_mean(copies);
    CHECK((mean.mean.projector() - g.projector()).norm() < 1e-10);
}

TEST_CASE("mean of two lines is the bisector")
{
    const double theta = 0.7;
    const std::vector<GeneratorMatrix> lines{known_angle_line(0.0), known_angle_line(theta)};
    const SubspaceMeanResult mean = subspace_mean(lines);
    const GeneratorMatrix bisector = known_angle_line(theta / 2.0);
    CHECK((mean.mean.projector() - bisector.projector()).norm() < 1e-9);
    CHECK_FALSE(mean.degenerate_spectrum);
}

TEST_CASE("mean of orthogonal lines has a degenerate spectrum")
{
    const std::vector<GeneratorMatrix> lines{known_angle_line(0.0), known_angle_line(M_PI_2)};
    CHECK(subspace_mean(lines).degenerate_spectrum);
}

TEST_CASE("no random candidate beats the subspace mean")
{
    std::mt19937_64 rng(73);
    std::vector<GeneratorMatrix> subspaces;
    for (int l = 0; l < 3; ++l)
        subspaces.emplace_back(test::random_orthonormal(4, 2, rng));
    const SubspaceMeanResult mean = subspace_mean(subspaces);

    double attained = 0.0;
    for (const auto &s : subspaces)
        attained += chordal_distance_sq(mean.mean, s);
    CHECK(std::abs(attained - spread_exact(subspaces)) < 1e-8);

    for (int i = 0; i < 10000; ++i)
    {
        const GeneratorMatrix candidate(test::random_orthonormal(4, 2, rng));
        double objective = 0.0;
        for (const auto &s : subspaces)
            objective += chordal_distance_sq(candidate, s);
        CHECK(objective >= attained - 1e-8);
    }

    CHECK_THROWS_AS(subspace_mean({}), EmptyListError);
}

TEST_CASE("exact spread of identical subspaces is zero")
{
    std::mt19937_64 rng(79);
    const GeneratorMatrix g(test::random_orthonormal(8, 4, rng));
    const std::vector<GeneratorMatrix> copies{g, g, g};
    CHECK(spread_exact(copies) < 1e-9);
    CHECK(spread_approx(copies) < 1e-9);
}

TEST_CASE("exact spread of two lines at angle theta is 1 - cos(theta)")
{
    const double theta = 1.1;
    const std::vector<GeneratorMatrix> lines{known_angle_line(0.0), known_angle_line(theta)};
    CHECK(spread_exact(lines) == doctest::Approx(1.0 - std::cos(theta)).epsilon(1e-9));
}

TEST_CASE("exact spread agrees with the Jacobi reference spectrum")
{
    std::mt19937_64 rng(83);
    std::vector<GeneratorMatrix> subspaces;
    for (int l = 0; l < 4; ++l)
        subspaces.emplace_back(test::random_orthonormal(6, 3, rng));
    const std::vector<double> reference = test::jacobi_eigenvalues(sum_projectors(subspaces));
    double expected = 4.0 * 3.0;
    for (int i = 0; i < 3; ++i)
        expected -= reference[static_cast<std::size_t>(i)];
    CHECK(std::abs(spread_exact(subspaces) - expected) < 1e-8);
}

TEST_CASE("approximate spread of a pair reduces to the squared chordal distance")
{
    std::mt19937_64 rng(89);
    const GeneratorMatrix a(test::random_orthonormal(6, 3, rng));
    const GeneratorMatrix b(test::random_orthonormal(6, 3, rng));
    const std::vector<GeneratorMatrix> pair{a, b};
    CHECK(spread_approx(pair) == chordal_distance_sq(a, b));
}

TEST_CASE("approximate spread upper-bounds the exact spread")
{
    std::mt19937_64 rng(97);
    for (int l = 2; l <= 6; ++l)
        for (int m = 1; m <= 6; m += 2)
            for (int i = 0; i < 5; ++i)
            {
                std::vector<GeneratorMatrix> subspaces;
                for (int s = 0; s < l; ++s)
                    subspaces.emplace_back(test::random_orthonormal(2 * m, m, rng));
                CHECK(spread_exact(subspaces) <= spread_approx(subspaces) + 1e-10);
            }
}

TEST_CASE("three-transmitter chain: exact spread <= squared chordal distance")
{
    std::mt19937_64 rng(101);
    for (int i = 0; i < 20; ++i)
    {
        const GeneratorMatrix a(test::random_orthonormal(6, 3, rng));
        const GeneratorMatrix b(test::random_orthonormal(6, 3, rng));
        const std::vector<GeneratorMatrix> pair{a, b};
        const PrincipalAngles angles = principal_angles(a, b);
        double one_minus_cos = 0.0;
        double sin_sq = 0.0;
        for (double th : angles.angles)
        {
            one_minus_cos += 1.0 - std::cos(th);
            sin_sq += std::sin(th) * std::sin(th);
        }
        CHECK(std::abs(spread_exact(pair) - one_minus_cos) < 1e-9);
        CHECK(one_minus_cos <= sin_sq + 1e-9);
        CHECK(std::abs(spread_approx(pair) - sin_sq) < 1e-9);
    }
}

TEST_CASE("analytic spectrum of a projector pair")
{
    CHECK(projector_pair_eigs(PrincipalAngles{{0.0}}) == std::vector<double>{2.0, 0.0});
    CHECK(projector_pair_eigs(PrincipalAngles{{M_PI_2}})[0] == doctest::Approx(1.0));
    CHECK(projector_pair_eigs(PrincipalAngles{{M_PI_2}})[1] == doctest::Approx(1.0));

    const std::vector<double> eigs = projector_pair_eigs(PrincipalAngles{{M_PI / 6, M_PI / 3}});
    CHECK(eigs[0] == doctest::Approx(1.0 + std::sqrt(3.0) / 2.0));
    CHECK(eigs[1] == doctest::Approx(1.5));
    CHECK(eigs[2] == doctest::Approx(0.5));
    CHECK(eigs[3] == doctest::Approx(1.0 - std::sqrt(3.0) / 2.0));
    double sum = 0.0;
    for (double e : eigs)
        sum += e;
    CHECK(std::abs(sum - 4.0) < 1e-12);
}

TEST_CASE("projector pair spectrum matches the eigensolver for random pairs")
{
    std::mt19937_64 rng(103);
    for (int m = 1; m <= 6; ++m)
        for (int i = 0; i < 10; ++i)
        {
            const GeneratorMatrix a(test::random_orthonormal(2 * m, m, rng));
            const GeneratorMatrix b(test::random_orthonormal(2 * m, m, rng));
            const std::vector<GeneratorMatrix> pair{a, b};
            const std::vector<double> numeric = hermitian_eigs(sum_projectors(pair));
            const std::vector<double> analytic = projector_pair_eigs(principal_angles(a, b));
            REQUIRE(numeric.size() == analytic.size());
            for (std::size_t j = 0; j < numeric.size(); ++j)
                CHECK(std::abs(numeric[j] - analytic[j]) < 1e-8);
        }
}

TEST_CASE("projector sum spectrum is invariant under a common rotation")
{
    std::mt19937_64 rng(107);
    for (int i = 0; i < 10; ++i)
    {
        std::vector<GeneratorMatrix> subspaces;
        for (int l = 0; l < 3; ++l)
            subspaces.emplace_back(test::random_orthonormal(8, 4, rng));
        const CMatrix rotation = test::random_unitary(8, rng);
        std::vector<GeneratorMatrix> rotated;
        for (const auto &s : subspaces)
            rotated.emplace_back(rotation * s.basis());

        const std::vector<double> before = hermitian_eigs(sum_projectors(subspaces));
        const std::vector<double> after = hermitian_eigs(sum_projectors(rotated));
        for (std::size_t j = 0; j < before.size(); ++j)
            CHECK(std::abs(before[j] - after[j]) < 1e-9);
    }
}
