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

#include "oia/validation.hpp"

#include "oia/assignment.hpp"
#include "oia/grassmann.hpp"
#include "oia/rng.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <random>

namespace oia
{

namespace
{

// ---------------------------------------------------------------------
// Independent sum-rate route: plain-array complex matrices, explicit loops,
// Gaussian-elimination determinant. Deliberately shares nothing with the
// Eigen-based implementation it validates.
// ---------------------------------------------------------------------

using Grid = std::vector<std::vector<Complex>>;

Grid to_grid(const CMatrix &m)
{
    Grid g(static_cast<std::size_t>(m.rows()), std::vector<Complex>(static_cast<std::size_t>(m.cols())));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
    return g;
}

/// log2 |det(A)| by Gaussian elimination with partial pivoting.
double log2_abs_det(Grid a)
{
    const std::size_t n = a.size();
    double log2_acc = 0.0;
    for (std::size_t col = 0; col < n; ++col)
    {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col]))
                pivot = r;
        if (std::abs(a[pivot][col]) == 0.0)
            return -std::numeric_limits<double>::infinity();
        if (pivot != col)
            std::swap(a[pivot], a[col]); // row swap flips the sign only
        log2_acc += std::log2(std::abs(a[col][col]));
        for (std::size_t r = col + 1; r < n; ++r)
        {
            const Complex factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c)
                a[r][c] -= factor * a[col][c];
        }
    }
    return log2_acc;
}

/// C = A^H * B with explicit loops.
Grid adjoint_times(const Grid &a, const Grid &b)
{
    const std::size_t rows = a[0].size();
    const std::size_t inner = a.size();
    const std::size_t cols = b[0].size();
    Grid c(rows, std::vector<Complex>(cols, Complex(0, 0)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t k = 0; k < inner; ++k)
                c[i][j] += std::conj(a[k][i]) * b[k][j];
    return c;
}

/// C += s * W * W^H with explicit loops.
void add_scaled_outer(Grid &c, const Grid &w, double s)
{
    const std::size_t n = w.size();
    const std::size_t inner = w[0].size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
        {
            Complex acc(0, 0);
            for (std::size_t k = 0; k < inner; ++k)
                acc += w[i][k] * std::conj(w[j][k]);
            c[i][j] += s * acc;
        }
}

Grid identity_grid(std::size_t n)
{
    Grid g(n, std::vector<Complex>(n, Complex(0, 0)));
    for (std::size_t i = 0; i < n; ++i)
        g[i][i] = Complex(1, 0);
    return g;
}

} // namespace

double sum_rate_reference(const ChannelSet &channels, const std::vector<int> &selection,
                          const std::vector<CMatrix> &post_processors, PowerLevel power)
{
    const auto &cfg = channels.config();
    const int k = cfg.num_transmitters;
    const std::size_t m = static_cast<std::size_t>(cfg.tx_antennas);
    const double per_stream = power.total / static_cast<double>(m);

    double total = 0.0;
    for (int tx = 0; tx < k; ++tx)
    {
        const int user = cfg.framework == Framework::UserSelection
                             ? channels.global_user(tx, selection[static_cast<std::size_t>(tx)])
                             : selection[static_cast<std::size_t>(tx)];
        const Grid u = to_grid(post_processors[static_cast<std::size_t>(tx)]);

        Grid denom = identity_grid(m);
        for (int l = 0; l < k; ++l)
        {
            if (l == tx)
                continue;
            add_scaled_outer(denom, adjoint_times(u, to_grid(channels.gain(user, l))), per_stream);
        }
        Grid numer = denom;
        add_scaled_outer(numer, adjoint_times(u, to_grid(channels.gain(user, tx))), per_stream);

        total += log2_abs_det(numer) - log2_abs_det(denom);
    }
    return total;
}

namespace
{

GeneratorMatrix random_generator(std::mt19937_64 &rng, int ambient, int dim)
{
    return orthonormalize(draw_cscg_matrix(ambient, dim, rng));
}

ValidationCheck check_projector_pair_spectrum(std::uint64_t seed)
{
    ValidationCheck check{"projector-pair spectrum vs eigensolver", 0, 0};
    for (int m = 1; m <= 6; ++m)
    {
        std::mt19937_64 rng(rng::stream_key(seed, 1, static_cast<std::uint64_t>(m)));
        for (int i = 0; i < 200; ++i)
        {
            const GeneratorMatrix a = random_generator(rng, 2 * m, m);
            const GeneratorMatrix b = random_generator(rng, 2 * m, m);
            const std::vector<GeneratorMatrix> pair{a, b};
            const std::vector<double> numeric = hermitian_eigs(sum_projectors(pair));
            const std::vector<double> analytic = projector_pair_eigs(principal_angles(a, b));
            ++check.total;
            for (std::size_t j = 0; j < numeric.size(); ++j)
                if (std::abs(numeric[j] - analytic[j]) > 1e-8)
                {
                    ++check.failures;
                    break;
                }
        }
    }
    return check;
}

ValidationCheck check_spread_bound(std::uint64_t seed)
{
    ValidationCheck check{"exact spread bounded by approximate spread", 0, 0};
    for (int l = 2; l <= 6; ++l)
        for (int m = 1; m <= 4; ++m)
        {
            std::mt19937_64 rng(rng::stream_key(seed, 2, static_cast<std::uint64_t>(l),
                                                static_cast<std::uint64_t>(m)));
            for (int i = 0; i < 100; ++i)
            {
                std::vector<GeneratorMatrix> subspaces;
                for (int s = 0; s < l; ++s)
                    subspaces.push_back(random_generator(rng, 2 * m, m));
                const double exact = spread_exact(subspaces);
                const double approx = spread_approx(subspaces);
                ++check.total;
                bool ok = exact <= approx + 1e-10;
                for (int j = 0; j < l && ok; ++j)
                {
                    double sum_j = 0.0;
                    for (int o = 0; o < l; ++o)
                        sum_j += chordal_distance_sq(subspaces[static_cast<std::size_t>(j)],
                                                     subspaces[static_cast<std::size_t>(o)]);
                    ok = exact <= sum_j + 1e-10;
                }
                if (!ok)
                    ++check.failures;
            }
        }
    return check;
}

ValidationCheck check_assignment(std::uint64_t seed)
{
    ValidationCheck check{"assignment solver vs exhaustive enumeration", 0, 0};
    std::mt19937_64 rng(rng::stream_key(seed, 3));
    std::uniform_int_distribution<int> rows_dist(1, 8);
    std::uniform_int_distribution<int> cols_dist(1, 4);
    std::uniform_real_distribution<double> cost_dist(0.0, 10.0);
    for (int i = 0; i < 200; ++i)
    {
        const int rows = rows_dist(rng);
        const int cols = std::min(cols_dist(rng), rows);
        RMatrix cost(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                cost(r, c) = cost_dist(rng);
        ++check.total;
        if (hungarian_rectangular(cost).objective != brute_force_assignment(cost).objective)
            ++check.failures;
    }
    return check;
}

ValidationCheck check_sum_rate_dual(std::uint64_t seed)
{
    ValidationCheck check{"sum-rate dual evaluation", 0, 0};
    for (int i = 0; i < 100; ++i)
    {
        const NetworkConfig config = NetworkConfig::user_pairing(3, 2, 4);
        const ChannelSet channels = generate_channels(config, Seed{rng::stream_key(seed, 4, static_cast<std::uint64_t>(i))});
        const PowerLevel power{10.0};
        const SchemeResult result = run_scheme(Scheme::Oia, channels, power);
        const double direct = result.sum_rate;
        const double reference =
            sum_rate_reference(channels, result.selection, result.post_processors, power);
        ++check.total;
        if (std::abs(direct - reference) > 1e-9 * std::max(1.0, std::abs(reference)))
            ++check.failures;

        // Zero power collapses both determinants to |I| exactly.
        ++check.total;
        if (sum_rate(channels, result.selection, result.post_processors, PowerLevel{0.0}) != 0.0)
            ++check.failures;
    }
    return check;
}

} // namespace

std::vector<ValidationCheck> run_validation_suite(std::uint64_t seed)
{
    return {
        check_projector_pair_spectrum(seed),
        check_spread_bound(seed),
        check_assignment(seed),
        check_sum_rate_dual(seed),
    };
}

bool report_validation(const std::vector<ValidationCheck> &checks, std::ostream &out)
{
    bool all_passed = true;
    for (const ValidationCheck &check : checks)
    {
        out << (check.passed() ? "PASS" : "FAIL") << "  " << check.name << "  (" << check.failures
            << "/" << check.total << " failures)\n";
        all_passed = all_passed && check.passed();
    }
    out << (all_passed ? "validation suite passed" : "validation suite FAILED") << "\n";
    return all_passed;
}

} // namespace oia
