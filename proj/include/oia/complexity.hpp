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
// Closed-form flop counts (one flop = one real floating point operation) for
// the scheduling schemes. These model the per-user and per-selected-user
// linear algebra only; the central assignment solve is excluded since it runs
// once at the center rather than at the mobiles.

#ifndef OIA_COMPLEXITY_HPP
#define OIA_COMPLEXITY_HPP

#include <cstdint>

namespace oia::flops
{

enum class Op
{
    Add,      // A + A, elementwise
    FrobNorm, // ||A||_F
    Gso,      // Gram-Schmidt orthogonalization
    Svd,      // singular value decomposition
    Mul       // A * A^H
};

/// Flop cost of one operation on a complex m x n matrix, m >= n.
std::int64_t op_cost(Op op, int m, int n);

/// Total flops for OIA user selection: K cells, S users per cell, N_R = 2M
/// receive antennas. Per user: (K-1) GSO, (K-1) MUL, C(K-1,2) differences and
/// Frobenius norms; per selected user: (K-1) MUL, (K-2) adds, one SVD.
std::int64_t oia_user_selection(int num_transmitters, int group_size, int rx_antennas);

/// Total flops for OIA user pairing: N users, each scoring all K hypotheses.
std::int64_t oia_user_pairing(int num_transmitters, int total_users, int rx_antennas);

/// Total flops for MIN-INR user pairing (one covariance eigensolve per user
/// per hypothesis).
std::int64_t min_inr_user_pairing(int num_transmitters, int total_users, int rx_antennas);

/// Total flops for MAX-SNR user pairing (per user: K GSO and K SVD).
std::int64_t max_snr_user_pairing(int num_transmitters, int total_users, int rx_antennas);

} // namespace oia::flops

#endif
