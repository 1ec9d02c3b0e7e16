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
// Scheduling schemes. OIA scores every user by the measure of alignment (the
// approximate spread of its normalized interference subspaces) and schedules
// the best-aligned users, either independently per cell (user selection) or
// by a central assignment over all users (user pairing). MIN-INR and MAX-SNR
// are the conventional opportunistic baselines. Scheduled users apply a
// leakage-minimizing receive subspace, and rates are evaluated analytically.

#ifndef OIA_SCHEMES_HPP
#define OIA_SCHEMES_HPP

#include "oia/assignment.hpp"
#include "oia/channel.hpp"
#include "oia/errors.hpp"
#include "oia/types.hpp"

#include <span>
#include <vector>

namespace oia
{

enum class Scheme
{
    Oia,    // minimize the measure of alignment
    MinInr, // minimize post-processed interference power
    MaxSnr  // maximize desired-signal power
};

/// Measure of alignment for one user of cell `cell`: the approximate spread
/// of the K-1 orthonormalized interference subspaces (all channels except the
/// serving transmitter's). `channels` holds the user's K raw channel matrices
/// indexed by transmitter. Zero means perfectly aligned interference.
double moa_user_us(std::span<const CMatrix> channels, int cell);

/// OIA user selection: per cell, the index (within the group) of the user
/// with the smallest measure of alignment. Ties break toward the lowest
/// index.
std::vector<int> select_users_oia_us(const ChannelSet &channels);

/// OIA user pairing feedback: the N x K matrix whose (n, k) entry is user n's
/// measure of alignment when hypothetically paired with transmitter k.
RMatrix feedback_matrix_up(const ChannelSet &channels);

/// Optimal pairing for a nonnegative N x K feedback matrix: K non-conflicting
/// pairs minimizing the summed measure of alignment.
Pairing pair_users_oia_up(const RMatrix &feedback);

/// Receive subspace minimizing the interference leakage Tr(U^H B U): the
/// eigenvectors of the 2M x 2M interference covariance B for its M smallest
/// eigenvalues.
CMatrix post_processor(const CMatrix &interference_covariance);

/// Interference power remaining after projecting onto the columns of `basis`.
double leakage(const CMatrix &interference_covariance, const CMatrix &basis);

/// MIN-INR metric: interference power left in the best M-dimensional receive
/// subspace, i.e. the sum of the M smallest eigenvalues of sum_l H_l H_l^H
/// over the raw interference channels.
double min_inr_metric(std::span<const CMatrix> interference);

/// MAX-SNR metric: desired-signal power captured by the best M-dimensional
/// receive subspace. The desired channel has rank at most M, so this is the
/// sum of all its squared singular values, ||H_d||_F^2.
double max_snr_metric(const CMatrix &desired);

/// Achievable sum-rate in bits/s/Hz under equal per-stream power P/M and unit
/// noise. `selection[k]` identifies the user served by transmitter k (index
/// within cell k for user selection, global index for user pairing);
/// `post_processors[k]` is its 2M x M receive basis. Raw channel gains enter
/// here; normalization is only ever applied to the feedback metric.
double sum_rate(const ChannelSet &channels, const std::vector<int> &selection,
                const std::vector<CMatrix> &post_processors, PowerLevel power);

struct SchemeResult
{
    std::vector<int> selection;           // per transmitter, see sum_rate()
    std::vector<CMatrix> post_processors; // per transmitter, 2M x M
    std::vector<double> leakage;          // per transmitter, Tr(U^H B U)
    double sum_rate = 0.0;                // bits/s/Hz
};

/// One full scheduling round: score, select or pair, post-process, and
/// evaluate the sum-rate. For OIA with K = 2 the alignment measure is
/// identically zero (a single interferer is always aligned with itself), so
/// selection falls back to the MAX-SNR ordering; a warning is logged once.
SchemeResult run_scheme(Scheme scheme, const ChannelSet &channels, PowerLevel power);

} // namespace oia

#endif
