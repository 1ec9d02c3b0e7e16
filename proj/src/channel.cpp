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

#include "oia/channel.hpp"

#include "oia/grassmann.hpp"
#include "oia/rng.hpp"

#include <Eigen/SVD>

#include <atomic>
#include <cmath>

namespace oia
{

PowerLevel PowerLevel::from_snr_db(double snr_db)
{
    return PowerLevel{std::pow(10.0, snr_db / 10.0)};
}

double PowerLevel::snr_db() const
{
    return 10.0 * std::log10(total);
}

NetworkConfig NetworkConfig::user_selection(int num_transmitters, int tx_antennas, int group_size)
{
    NetworkConfig c;
    c.framework = Framework::UserSelection;
    c.num_transmitters = num_transmitters;
    c.tx_antennas = tx_antennas;
    c.group_size = group_size;
    c.total_users = num_transmitters * group_size;
    c.validate();
    return c;
}

NetworkConfig NetworkConfig::user_pairing(int num_transmitters, int tx_antennas, int total_users)
{
    NetworkConfig c;
    c.framework = Framework::UserPairing;
    c.num_transmitters = num_transmitters;
    c.tx_antennas = tx_antennas;
    c.total_users = total_users;
    c.group_size = 0;
    c.validate();
    return c;
}

void NetworkConfig::validate() const
{
    if (num_transmitters < 2)
        throw InvalidConfigError("NetworkConfig: need at least 2 transmitters");
    if (tx_antennas < 1)
        throw InvalidConfigError("NetworkConfig: need at least 1 antenna per transmitter");
    if (framework == Framework::UserSelection)
    {
        if (group_size < 1)
            throw InvalidConfigError("NetworkConfig: user selection needs group size >= 1");
        if (total_users != num_transmitters * group_size)
            throw InvalidConfigError("NetworkConfig: total users must equal K * group size");
    }
    else
    {
        if (total_users < num_transmitters)
            throw InvalidConfigError("NetworkConfig: user pairing needs at least K users");
    }
}

ChannelSet::ChannelSet(NetworkConfig config, std::vector<std::vector<CMatrix>> gains)
    : config_(std::move(config)), gains_(std::move(gains))
{
    config_.validate();
    if (gains_.size() != static_cast<std::size_t>(config_.total_users))
        throw InvalidConfigError("ChannelSet: wrong number of users");
    for (const auto &row : gains_)
    {
        if (row.size() != static_cast<std::size_t>(config_.num_transmitters))
            throw InvalidConfigError("ChannelSet: wrong number of transmitters");
        for (const auto &g : row)
        {
            if (g.rows() != config_.rx_antennas() || g.cols() != config_.tx_antennas)
                throw InvalidConfigError("ChannelSet: wrong channel matrix shape");
            if (!g.allFinite())
                throw InvalidConfigError("ChannelSet: non-finite channel entries");
        }
    }
}

CMatrix draw_cscg_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64 &rng)
{
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("draw_cscg_matrix: need rows, cols >= 1");
    std::normal_distribution<double> component(0.0, std::sqrt(0.5));
    CMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j)
        {
            const double re = component(rng);
            const double im = component(rng);
            m(i, j) = Complex(re, im);
        }
    return m;
}

namespace
{

std::atomic<std::uint64_t> g_rank_redraws{0};

bool numerically_full_rank(const CMatrix &m)
{
    Eigen::JacobiSVD<CMatrix> svd(m);
    const auto &sv = svd.singularValues();
    return sv(0) > 0.0 && sv(sv.size() - 1) > kRankRatioTol * sv(0);
}

} // namespace

ChannelSet generate_channels(const NetworkConfig &config, Seed seed)
{
    config.validate();
    const int n_users = config.total_users;
    const int n_tx = config.num_transmitters;

    std::vector<std::vector<CMatrix>> gains(static_cast<std::size_t>(n_users));
    for (int user = 0; user < n_users; ++user)
    {
        auto &row = gains[static_cast<std::size_t>(user)];
        row.reserve(static_cast<std::size_t>(n_tx));
        for (int tx = 0; tx < n_tx; ++tx)
        {
            CMatrix g;
            for (std::uint64_t attempt = 0;; ++attempt)
            {
                std::mt19937_64 rng(rng::stream_key(seed.value, static_cast<std::uint64_t>(user),
                                                    static_cast<std::uint64_t>(tx), attempt));
                g = draw_cscg_matrix(config.rx_antennas(), config.tx_antennas, rng);
                if (numerically_full_rank(g))
                    break;
                g_rank_redraws.fetch_add(1, std::memory_order_relaxed);
            }
            row.push_back(std::move(g));
        }
    }
    return ChannelSet(config, std::move(gains));
}

std::uint64_t rank_redraw_count()
{
    return g_rank_redraws.load(std::memory_order_relaxed);
}

} // namespace oia
