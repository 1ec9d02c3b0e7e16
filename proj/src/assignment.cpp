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

#include "oia/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace oia
{

namespace
{

void check_cost_matrix(const RMatrix &cost)
{
    if (cost.rows() < 1 || cost.cols() < 1)
        throw InfeasibleAssignmentError("assignment: empty cost matrix");
    if (cost.rows() < cost.cols())
        throw InfeasibleAssignmentError("assignment: fewer rows than columns (N < K)");
    if (!cost.allFinite())
        throw NonFiniteCostError("assignment: cost matrix has NaN/Inf entries");
}

double direct_objective(const RMatrix &cost, const std::vector<int> &user_for_tx)
{
    double sum = 0.0;
    for (std::size_t j = 0; j < user_for_tx.size(); ++j)
        sum += cost(user_for_tx[j], static_cast<Eigen::Index>(j));
    return sum;
}

// Shortest-augmenting-path assignment with dual potentials, one augmentation
// per column. Deterministic for a given cost matrix. Returns user_for_tx.
std::vector<int> solve_lap(const RMatrix &cost)
{
    const int n_rows = static_cast<int>(cost.rows()); // users
    const int n_cols = static_cast<int>(cost.cols()); // transmitters
    const double inf = std::numeric_limits<double>::infinity();

    // 1-based internally; index 0 is the virtual start column of each phase.
    std::vector<double> col_potential(static_cast<std::size_t>(n_cols) + 1, 0.0);
    std::vector<double> row_potential(static_cast<std::size_t>(n_rows) + 1, 0.0);
    std::vector<int> col_of_row(static_cast<std::size_t>(n_rows) + 1, 0); // 0 = unassigned
    std::vector<int> prev_row(static_cast<std::size_t>(n_rows) + 1, 0);

    for (int col = 1; col <= n_cols; ++col)
    {
        int row0 = 0;
        col_of_row[0] = col;
        std::vector<double> min_slack(static_cast<std::size_t>(n_rows) + 1, inf);
        std::vector<bool> visited(static_cast<std::size_t>(n_rows) + 1, false);

        do
        {
            visited[static_cast<std::size_t>(row0)] = true;
            const int cur_col = col_of_row[static_cast<std::size_t>(row0)];
            double delta = inf;
            int next_row = -1;

            for (int row = 1; row <= n_rows; ++row)
            {
                if (visited[static_cast<std::size_t>(row)])
                    continue;
                const double reduced = cost(row - 1, cur_col - 1) - col_potential[static_cast<std::size_t>(cur_col)] -
                                       row_potential[static_cast<std::size_t>(row)];
                if (reduced < min_slack[static_cast<std::size_t>(row)])
                {
                    min_slack[static_cast<std::size_t>(row)] = reduced;
                    prev_row[static_cast<std::size_t>(row)] = row0;
                }
                if (min_slack[static_cast<std::size_t>(row)] < delta)
                {
                    delta = min_slack[static_cast<std::size_t>(row)];
                    next_row = row;
                }
            }

            for (int row = 0; row <= n_rows; ++row)
            {
                if (visited[static_cast<std::size_t>(row)])
                {
                    col_potential[static_cast<std::size_t>(col_of_row[static_cast<std::size_t>(row)])] += delta;
                    row_potential[static_cast<std::size_t>(row)] -= delta;
                }
                else
                {
                    min_slack[static_cast<std::size_t>(row)] -= delta;
                }
            }
            row0 = next_row;
        } while (col_of_row[static_cast<std::size_t>(row0)] != 0);

        // Unwind the augmenting path.
        while (row0 != 0)
        {
            const int row1 = prev_row[static_cast<std::size_t>(row0)];
            col_of_row[static_cast<std::size_t>(row0)] = col_of_row[static_cast<std::size_t>(row1)];
            row0 = row1;
        }
    }

    std::vector<int> user_for_tx(static_cast<std::size_t>(n_cols), -1);
    for (int row = 1; row <= n_rows; ++row)
        if (col_of_row[static_cast<std::size_t>(row)] != 0)
            user_for_tx[static_cast<std::size_t>(col_of_row[static_cast<std::size_t>(row)]) - 1] = row - 1;
    return user_for_tx;
}

// Restricted re-solve: columns `fixed_cols` are pinned to `fixed_rows`; the
// remaining columns are solved on the remaining rows. Returns a full
// assignment vector, or empty if the restricted problem is infeasible.
std::vector<int> solve_with_fixed(const RMatrix &cost, const std::vector<int> &fixed_rows, int n_fixed)
{
    const int n_rows = static_cast<int>(cost.rows());
    const int n_cols = static_cast<int>(cost.cols());
    const int n_free_cols = n_cols - n_fixed;

    std::vector<bool> row_used(static_cast<std::size_t>(n_rows), false);
    for (int j = 0; j < n_fixed; ++j)
        row_used[static_cast<std::size_t>(fixed_rows[static_cast<std::size_t>(j)])] = true;

    std::vector<int> free_rows;
    free_rows.reserve(static_cast<std::size_t>(n_rows));
    for (int r = 0; r < n_rows; ++r)
        if (!row_used[static_cast<std::size_t>(r)])
            free_rows.push_back(r);

    std::vector<int> full(static_cast<std::size_t>(n_cols));
    for (int j = 0; j < n_fixed; ++j)
        full[static_cast<std::size_t>(j)] = fixed_rows[static_cast<std::size_t>(j)];

    if (n_free_cols > 0)
    {
        if (static_cast<int>(free_rows.size()) < n_free_cols)
            return {};
        RMatrix sub(static_cast<Eigen::Index>(free_rows.size()), n_free_cols);
        for (std::size_t i = 0; i < free_rows.size(); ++i)
            for (int j = 0; j < n_free_cols; ++j)
                sub(static_cast<Eigen::Index>(i), j) = cost(free_rows[i], n_fixed + j);
        const std::vector<int> sub_sol = solve_lap(sub);
        for (int j = 0; j < n_free_cols; ++j)
            full[static_cast<std::size_t>(n_fixed + j)] = free_rows[static_cast<std::size_t>(sub_sol[static_cast<std::size_t>(j)])];
    }
    return full;
}

// Refine an optimal assignment to the lexicographically smallest pairing
// vector among all assignments attaining the same objective value. Column by
// column, pin the smallest row index that still admits a completion at the
// optimum; if rounding ever prevents an exact match, keep the incumbent.
std::vector<int> lexicographic_refine(const RMatrix &cost, std::vector<int> incumbent, double objective)
{
    const int n_rows = static_cast<int>(cost.rows());
    const int n_cols = static_cast<int>(cost.cols());

    std::vector<int> fixed(static_cast<std::size_t>(n_cols), -1);
    std::vector<bool> row_taken(static_cast<std::size_t>(n_rows), false);

    for (int j = 0; j < n_cols; ++j)
    {
        const int incumbent_row = incumbent[static_cast<std::size_t>(j)];
        bool pinned = false;
        for (int r = 0; r < incumbent_row && !pinned; ++r)
        {
            if (row_taken[static_cast<std::size_t>(r)])
                continue;
            fixed[static_cast<std::size_t>(j)] = r;
            const std::vector<int> candidate = solve_with_fixed(cost, fixed, j + 1);
            if (!candidate.empty() && direct_objective(cost, candidate) == objective)
            {
                incumbent = candidate;
                pinned = true;
            }
        }
        // The incumbent's own row always completes at the optimum.
        fixed[static_cast<std::size_t>(j)] = incumbent[static_cast<std::size_t>(j)];
        row_taken[static_cast<std::size_t>(fixed[static_cast<std::size_t>(j)])] = true;
    }
    return incumbent;
}

} // namespace

AssignmentResult hungarian_rectangular(const RMatrix &cost)
{
    check_cost_matrix(cost);
    std::vector<int> solution = solve_lap(cost);
    const double objective = direct_objective(cost, solution);
    solution = lexicographic_refine(cost, std::move(solution), objective);
    return AssignmentResult{Pairing{std::move(solution)}, objective};
}

AssignmentResult brute_force_assignment(const RMatrix &cost)
{
    check_cost_matrix(cost);
    const int n_rows = static_cast<int>(cost.rows());
    const int n_cols = static_cast<int>(cost.cols());
    if (n_rows > 10 || n_cols > 5)
        throw TooLargeError("brute_force_assignment: guarded to N <= 10, K <= 5");

    std::vector<int> current(static_cast<std::size_t>(n_cols), -1);
    std::vector<bool> row_used(static_cast<std::size_t>(n_rows), false);
    std::vector<int> best;
    double best_objective = std::numeric_limits<double>::infinity();

    // Depth-first over columns, rows in ascending order: assignments are
    // visited in lexicographic order, so keeping strict improvements only
    // leaves the lexicographically smallest optimum.
    auto recurse = [&](auto &&self, int col, double partial) -> void {
        if (col == n_cols)
        {
            if (partial < best_objective)
            {
                best_objective = partial;
                best = current;
            }
            return;
        }
        for (int row = 0; row < n_rows; ++row)
        {
            if (row_used[static_cast<std::size_t>(row)])
                continue;
            row_used[static_cast<std::size_t>(row)] = true;
            current[static_cast<std::size_t>(col)] = row;
            self(self, col + 1, partial + cost(row, col));
            row_used[static_cast<std::size_t>(row)] = false;
        }
    };
    recurse(recurse, 0, 0.0);

    // Recompute the objective as the plain left-to-right sum of the selected
    // entries so that it is bit-identical to the solver's reporting.
    const double objective = direct_objective(cost, best);
    return AssignmentResult{Pairing{std::move(best)}, objective};
}

} // namespace oia
