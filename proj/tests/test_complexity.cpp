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

#include "oia/complexity.hpp"

#include <cmath>
#include <cstdint>

using namespace oia;
using flops::Op;

namespace
{

std::int64_t choose2(std::int64_t k)
{
    return k * (k - 1) / 2;
}

// Re-derive the closed-form totals from the per-operation costs. The channel
// matrices are N_R x N_R/2 and every covariance-level operation runs on
// N_R x N_R matrices.
std::int64_t derive_oia_us(int k, int s, int nr)
{
    const int m = nr / 2;
    const std::int64_t per_user = (k - 1) * flops::op_cost(Op::Gso, nr, m) +
                                  (k - 1) * flops::op_cost(Op::Mul, nr, m) +
                                  choose2(k - 1) * (flops::op_cost(Op::Add, nr, nr) +
                                                    flops::op_cost(Op::FrobNorm, nr, nr));
    const std::int64_t per_selected = (k - 1) * flops::op_cost(Op::Mul, nr, m) +
                                      (k - 2) * flops::op_cost(Op::Add, nr, nr) +
                                      flops::op_cost(Op::Svd, nr, nr);
    return k * (s * per_user + per_selected);
}

std::int64_t derive_oia_up(int k, int n, int nr)
{
    const int m = nr / 2;
    const std::int64_t per_user =
        k * flops::op_cost(Op::Gso, nr, m) + k * flops::op_cost(Op::Mul, nr, m) +
        choose2(k) * (flops::op_cost(Op::Add, nr, nr) + flops::op_cost(Op::FrobNorm, nr, nr));
    const std::int64_t per_selected = (k - 1) * flops::op_cost(Op::Mul, nr, m) +
                                      (k - 2) * flops::op_cost(Op::Add, nr, nr) +
                                      flops::op_cost(Op::Svd, nr, nr);
    return n * per_user + k * per_selected;
}

std::int64_t derive_min_inr_up(int k, int n, int nr)
{
    const int m = nr / 2;
    // One covariance eigensolve per pairing hypothesis.
    const std::int64_t per_user = k * flops::op_cost(Op::Mul, nr, m) +
                                  2 * k * flops::op_cost(Op::Add, nr, nr) +
                                  k * flops::op_cost(Op::Svd, nr, nr);
    return n * per_user;
}

std::int64_t derive_max_snr_up(int k, int n, int nr)
{
    const int m = nr / 2;
    const std::int64_t per_user =
        k * flops::op_cost(Op::Gso, nr, m) + k * flops::op_cost(Op::Svd, nr, nr);
    return n * per_user;
}

} // namespace

TEST_CASE("per-operation flop costs")
{
    CHECK(flops::op_cost(Op::Gso, 6, 3) == 396);
    CHECK(flops::op_cost(Op::Svd, 6, 3) == 5346);
    CHECK(flops::op_cost(Op::Add, 1, 1) == 2);
    CHECK(flops::op_cost(Op::FrobNorm, 2, 2) == 16);
    CHECK(flops::op_cost(Op::Mul, 6, 3) == flops::op_cost(Op::Gso, 6, 3));
    CHECK_THROWS_AS(flops::op_cost(Op::Gso, 3, 6), std::invalid_argument);
}

TEST_CASE("golden totals for the reference configurations")
{
    CHECK(flops::oia_user_selection(3, 10, 6) == 138240);
    CHECK(flops::oia_user_pairing(3, 30, 6) == 174960);
    CHECK(flops::min_inr_user_pairing(3, 30, 6) == 2498040);
    CHECK(flops::max_snr_user_pairing(3, 30, 6) == 2485080);
}

TEST_CASE("structural zero-user cases")
{
    // No users: only the selected-user stage remains (or nothing at all).
    const std::int64_t selected_only = 3 * (216 * 130 + 36 * 0);
    CHECK(flops::oia_user_selection(3, 0, 6) == selected_only);
    CHECK(flops::oia_user_pairing(3, 0, 6) == selected_only);
    CHECK(flops::min_inr_user_pairing(3, 0, 6) == 0);
    CHECK(flops::max_snr_user_pairing(3, 0, 6) == 0);
}

TEST_CASE("closed forms equal the per-operation derivation")
{
    for (int k : {3, 4})
        for (int nr : {6, 12})
            for (int n = 10; n <= 200; n += 10)
            {
                CHECK(flops::oia_user_pairing(k, n, nr) == derive_oia_up(k, n, nr));
                CHECK(flops::min_inr_user_pairing(k, n, nr) == derive_min_inr_up(k, n, nr));
                CHECK(flops::max_snr_user_pairing(k, n, nr) == derive_max_snr_up(k, n, nr));
                if (n % k == 0)
                    CHECK(flops::oia_user_selection(k, n / k, nr) == derive_oia_us(k, n / k, nr));
            }
}

TEST_CASE("OIA pairing costs a fraction of the baselines")
{
    for (int k : {3, 4})
        for (int nr : {6, 12})
            for (int n = 10; n <= 200; n += 10)
            {
                CHECK(flops::oia_user_pairing(k, n, nr) < flops::min_inr_user_pairing(k, n, nr));
                CHECK(flops::oia_user_pairing(k, n, nr) < flops::max_snr_user_pairing(k, n, nr));
            }
}

TEST_CASE("OIA selection and pairing have comparable cost")
{
    for (int k : {3, 4})
        for (int nr : {6, 12})
            for (int n = 4 * k; n <= 200; n += 4 * k)
            {
                const double us = static_cast<double>(flops::oia_user_selection(k, n / k, nr));
                const double up = static_cast<double>(flops::oia_user_pairing(k, n, nr));
                CHECK(std::abs(us - up) / up < 0.5);
            }
}

TEST_CASE("totals are nondecreasing in the user count")
{
    for (int k : {3, 4})
        for (int nr : {6, 12})
            for (int n = 10; n < 200; n += 10)
            {
                CHECK(flops::oia_user_pairing(k, n + 10, nr) >= flops::oia_user_pairing(k, n, nr));
                CHECK(flops::min_inr_user_pairing(k, n + 10, nr) >=
                      flops::min_inr_user_pairing(k, n, nr));
                CHECK(flops::max_snr_user_pairing(k, n + 10, nr) >=
                      flops::max_snr_user_pairing(k, n, nr));
                CHECK(flops::oia_user_selection(k, n + 10, nr) >= flops::oia_user_selection(k, n, nr));
            }
}
