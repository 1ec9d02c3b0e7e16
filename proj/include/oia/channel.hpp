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
// Random channel generation for the two network models, with counter-based
// seeding: the draw for (user, transmitter) depends only on the master seed
// and the indices, so generation is reproducible under any evaluation order.

#ifndef OIA_CHANNEL_HPP
#define OIA_CHANNEL_HPP

#include "oia/errors.hpp"
#include "oia/types.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oia
{

enum class Framework
{
    UserSelection, // K cells, each BS serves one user out of its group of S
    UserPairing    // a central node pairs each of the K BSs with any user
};

/// Network dimensions. Each transmitter has M antennas, each receiver 2M, so
/// M receive dimensions can carry desired streams while the remaining M
/// absorb the aligned interference.
struct NetworkConfig
{
    Framework framework = Framework::UserPairing;
    int num_transmitters = 0; // K
    int tx_antennas = 0;      // M (= N_T)
    int total_users = 0;      // N
    int group_size = 0;       // S = N/K, user selection only

    int rx_antennas() const { return 2 * tx_antennas; }

    /// K cells of S users each (N = K*S).
    static NetworkConfig user_selection(int num_transmitters, int tx_antennas, int group_size);
    /// K transmitters, N >= K users, no cell structure.
    static NetworkConfig user_pairing(int num_transmitters, int tx_antennas, int total_users);

    /// Throws InvalidConfigError if the dimensions are inconsistent.
    void validate() const;
};

/// One full channel realization: the 2M x M gain matrix for every
/// (user, transmitter) pair. In the user selection model, user n of cell k is
/// the global user k*S + n and its serving transmitter is k.
class ChannelSet
{
  public:
    ChannelSet(NetworkConfig config, std::vector<std::vector<CMatrix>> gains);

    const NetworkConfig &config() const { return config_; }

    /// Gain between transmitter `tx` and global user `user`.
    const CMatrix &gain(int user, int tx) const { return gains_[static_cast<std::size_t>(user)][static_cast<std::size_t>(tx)]; }

    /// User selection view: gain between transmitter `tx` and the
    /// `user_in_cell`-th user of cell `cell`.
    const CMatrix &gain_us(int cell, int user_in_cell, int tx) const
    {
        return gain(global_user(cell, user_in_cell), tx);
    }

    int global_user(int cell, int user_in_cell) const
    {
        return cell * config_.group_size + user_in_cell;
    }

  private:
    NetworkConfig config_;
    std::vector<std::vector<CMatrix>> gains_; // [user][tx]
};

/// Matrix of i.i.d. circularly symmetric complex Gaussian entries with unit
/// variance (real and imaginary parts each N(0, 1/2)).
CMatrix draw_cscg_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64 &rng);

/// Draw the full channel realization for `config`, deterministically from the
/// seed. Every (user, transmitter) pair gets its own derived stream; draws
/// that fail the numerical rank test (probability ~0) are retried from the
/// next substream and counted in rank_redraw_count().
ChannelSet generate_channels(const NetworkConfig &config, Seed seed);

/// Process-wide count of rank-deficient draws that were regenerated.
std::uint64_t rank_redraw_count();

} // namespace oia

#endif
