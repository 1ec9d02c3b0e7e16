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

#include "oia/complexity.hpp"

#include <stdexcept>

namespace oia::flops
{

namespace
{

void check_shape(int m, int n)
{
    if (m < n || n < 1)
        throw std::invalid_argument("flops::op_cost: need m >= n >= 1");
}

void check_network(int num_transmitters, int population, int rx_antennas)
{
    if (num_transmitters < 2)
        throw std::invalid_argument("flops: need at least 2 transmitters");
    if (population < 0)
        throw std::invalid_argument("flops: negative user count");
    if (rx_antennas < 2 || rx_antennas % 2 != 0)
        throw std::invalid_argument("flops: rx antenna count must be even and >= 2");
}

std::int64_t cube(std::int64_t x)
{
    return x * x * x;
}

} // namespace

std::int64_t op_cost(Op op, int m, int n)
{
    check_shape(m, n);
    const std::int64_t mm = m;
    const std::int64_t nn = n;
    switch (op)
    {
    case Op::Add:
        return 2 * mm * nn;
    case Op::FrobNorm:
        return 4 * mm * nn;
    case Op::Gso:
        return 8 * mm * nn * nn - 2 * mm * nn;
    case Op::Svd:
        return 24 * mm * nn * nn + 48 * mm * nn * nn + 54 * nn * nn * nn;
    case Op::Mul:
        return 8 * mm * nn * nn - 2 * mm * nn;
    }
    throw std::invalid_argument("flops::op_cost: unknown operation");
}

std::int64_t oia_user_selection(int num_transmitters, int group_size, int rx_antennas)
{
    check_network(num_transmitters, group_size, rx_antennas);
    const std::int64_t k = num_transmitters;
    const std::int64_t s = group_size;
    const std::int64_t nr2 = static_cast<std::int64_t>(rx_antennas) * rx_antennas;
    const std::int64_t nr3 = cube(rx_antennas);
    const std::int64_t per_user = nr3 * (4 * k - 4) + nr2 * (3 * k * k - 11 * k + 8);
    const std::int64_t per_selected = nr3 * (124 + 2 * k) + nr2 * (k - 3);
    return k * (s * per_user + per_selected);
}

std::int64_t oia_user_pairing(int num_transmitters, int total_users, int rx_antennas)
{
    check_network(num_transmitters, total_users, rx_antennas);
    const std::int64_t k = num_transmitters;
    const std::int64_t n = total_users;
    const std::int64_t nr2 = static_cast<std::int64_t>(rx_antennas) * rx_antennas;
    const std::int64_t nr3 = cube(rx_antennas);
    return n * (nr3 * (4 * k) + nr2 * (3 * k * k - 5 * k)) + k * (nr3 * (124 + 2 * k) + nr2 * (k - 3));
}

std::int64_t min_inr_user_pairing(int num_transmitters, int total_users, int rx_antennas)
{
    check_network(num_transmitters, total_users, rx_antennas);
    const std::int64_t k = num_transmitters;
    const std::int64_t n = total_users;
    const std::int64_t nr2 = static_cast<std::int64_t>(rx_antennas) * rx_antennas;
    const std::int64_t nr3 = cube(rx_antennas);
    return n * (nr3 * (128 * k) + nr2 * (3 * k));
}

std::int64_t max_snr_user_pairing(int num_transmitters, int total_users, int rx_antennas)
{
    check_network(num_transmitters, total_users, rx_antennas);
    const std::int64_t k = num_transmitters;
    const std::int64_t n = total_users;
    const std::int64_t nr2 = static_cast<std::int64_t>(rx_antennas) * rx_antennas;
    const std::int64_t nr3 = cube(rx_antennas);
    return n * (nr3 * (128 * k) - nr2 * k);
}

} // namespace oia::flops
