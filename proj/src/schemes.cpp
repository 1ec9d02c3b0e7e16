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

#include "oia/schemes.hpp"

#include "oia/grassmann.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <iostream>
#include <limits>
#include <mutex>

namespace oia
{

namespace
{

std::once_flag g_k2_warning;

void warn_k2_degenerate()
{
    std::call_once(g_k2_warning, [] {
        std::cerr << "oia-sim: warning: with 2 transmitters the measure of alignment is "
                     "identically zero; OIA selection falls back to the MAX-SNR ordering\n";
    });
}

std::vector<GeneratorMatrix> orthonormalize_all(std::span<const CMatrix> channels)
{
    std::vector<GeneratorMatrix> gens;
    gens.reserve(channels.size());
    for (const auto &h : channels)
        gens.push_back(orthonormalize(h));
    return gens;
}

/// Pairwise squared chordal distances of a generator list.
RMatrix pairwise_distances(const std::vector<GeneratorMatrix> &gens)
{
    const Eigen::Index n = static_cast<Eigen::Index>(gens.size());
    RMatrix d = RMatrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index l = j + 1; l < n; ++l)
        {
            const double v = chordal_distance_sq(gens[static_cast<std::size_t>(j)],
                                                 gens[static_cast<std::size_t>(l)]);
            d(j, l) = v;
            d(l, j) = v;
        }
    return d;
}

/// Raw interference covariance sum_{l != tx} H_l H_l^H for one user.
CMatrix interference_covariance(const ChannelSet &channels, int user, int tx)
{
    const auto &cfg = channels.config();
    CMatrix b = CMatrix::Zero(cfg.rx_antennas(), cfg.rx_antennas());
    for (int l = 0; l < cfg.num_transmitters; ++l)
    {
        if (l == tx)
            continue;
        const CMatrix &h = channels.gain(user, l);
        b += h * h.adjoint();
    }
    return b;
}

int resolve_global_user(const ChannelSet &channels, const std::vector<int> &selection, int tx)
{
    const int raw = selection[static_cast<std::size_t>(tx)];
    return channels.config().framework == Framework::UserSelection
               ? channels.global_user(tx, raw)
               : raw;
}

double log2_det_hermitian(const CMatrix &a)
{
    const Eigen::LLT<CMatrix> llt(a);
    if (llt.info() != Eigen::Success)
        throw Error("sum_rate: Cholesky factorization failed (matrix not positive definite)");
    double acc = 0.0;
    const auto &l = llt.matrixLLT();
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        acc += 2.0 * std::log2(std::real(l(i, i)));
    return acc;
}

} // namespace

double moa_user_us(std::span<const CMatrix> channels, int cell)
{
    const int k = static_cast<int>(channels.size());
    if (k < 2)
        throw InvalidConfigError("moa_user_us: need at least 2 transmitters");
    if (cell < 0 || cell >= k)
        throw InvalidConfigError("moa_user_us: cell index out of range");

    std::vector<GeneratorMatrix> interference;
    interference.reserve(static_cast<std::size_t>(k - 1));
    for (int l = 0; l < k; ++l)
        if (l != cell)
            interference.push_back(orthonormalize(channels[static_cast<std::size_t>(l)]));
    return spread_approx(interference);
}

std::vector<int> select_users_oia_us(const ChannelSet &channels)
{
    const auto &cfg = channels.config();
    if (cfg.framework != Framework::UserSelection)
        throw InvalidConfigError("select_users_oia_us: channel set is not a user selection layout");

    std::vector<int> selection(static_cast<std::size_t>(cfg.num_transmitters), 0);
    std::vector<CMatrix> user_channels(static_cast<std::size_t>(cfg.num_transmitters));
    for (int cell = 0; cell < cfg.num_transmitters; ++cell)
    {
        double best = std::numeric_limits<double>::infinity();
        for (int n = 0; n < cfg.group_size; ++n)
        {
            for (int l = 0; l < cfg.num_transmitters; ++l)
                user_channels[static_cast<std::size_t>(l)] = channels.gain_us(cell, n, l);
            const double f = moa_user_us(user_channels, cell);
            if (f < best)
            {
                best = f;
                selection[static_cast<std::size_t>(cell)] = n;
            }
        }
    }
    return selection;
}

RMatrix feedback_matrix_up(const ChannelSet &channels)
{
    const auto &cfg = channels.config();
    if (cfg.framework != Framework::UserPairing)
        throw InvalidConfigError("feedback_matrix_up: channel set is not a user pairing layout");

    const int n_users = cfg.total_users;
    const int k = cfg.num_transmitters;
    RMatrix feedback(n_users, k);
    std::vector<CMatrix> raw(static_cast<std::size_t>(k));
    for (int n = 0; n < n_users; ++n)
    {
        for (int l = 0; l < k; ++l)
            raw[static_cast<std::size_t>(l)] = channels.gain(n, l);
        const auto gens = orthonormalize_all(raw);
        const RMatrix d = pairwise_distances(gens);
        const Eigen::VectorXd row_sums = d.rowwise().sum();
        // For hypothesis k, the interference set drops transmitter k:
        // sum_{l != k} d(j, l) = row_sum(j) - d(j, k), minimized over j != k.
        for (int hyp = 0; hyp < k; ++hyp)
        {
            double best = std::numeric_limits<double>::infinity();
            for (int j = 0; j < k; ++j)
                if (j != hyp)
                    best = std::min(best, row_sums(j) - d(j, hyp));
            feedback(n, hyp) = std::max(0.0, best);
        }
    }
    return feedback;
}

Pairing pair_users_oia_up(const RMatrix &feedback)
{
    return hungarian_rectangular(feedback).pairing;
}

CMatrix post_processor(const CMatrix &interference_covariance)
{
    if (interference_covariance.rows() != interference_covariance.cols() ||
        interference_covariance.rows() % 2 != 0 || interference_covariance.rows() < 2)
        throw ShapeMismatchError("post_processor: covariance must be 2M x 2M");
    const Eigen::Index m = interference_covariance.rows() / 2;
    const HermitianEig eig = hermitian_eig_decomposition(interference_covariance);
    return eig.vectors.leftCols(m); // eigenvalues ascending: smallest M
}

double leakage(const CMatrix &interference_covariance, const CMatrix &basis)
{
    if (basis.rows() != interference_covariance.rows())
        throw ShapeMismatchError("leakage: basis and covariance dimensions differ");
    return std::real((basis.adjoint() * interference_covariance * basis).trace());
}

double min_inr_metric(std::span<const CMatrix> interference)
{
    if (interference.empty())
        throw EmptyListError("min_inr_metric: no interference channels");
    const Eigen::Index rows = interference.front().rows();
    const Eigen::Index m = interference.front().cols();
    CMatrix b = CMatrix::Zero(rows, rows);
    for (const auto &h : interference)
    {
        if (h.rows() != rows || h.cols() != m)
            throw ShapeMismatchError("min_inr_metric: channel shapes differ");
        b += h * h.adjoint();
    }
    const std::vector<double> eigs = hermitian_eigs(b); // descending
    double trailing = 0.0;
    for (Eigen::Index i = m; i < rows; ++i)
        trailing += eigs[static_cast<std::size_t>(i)];
    return std::max(0.0, trailing);
}

double max_snr_metric(const CMatrix &desired)
{
    if (desired.rows() < desired.cols() || desired.cols() < 1)
        throw ShapeMismatchError("max_snr_metric: need a tall desired channel matrix");
    // Rank <= M, so the top-M eigenvalues of H H^H sum to the full trace.
    return desired.squaredNorm();
}

double sum_rate(const ChannelSet &channels, const std::vector<int> &selection,
                const std::vector<CMatrix> &post_processors, PowerLevel power)
{
    const auto &cfg = channels.config();
    const int k = cfg.num_transmitters;
    const Eigen::Index m = cfg.tx_antennas;
    if (static_cast<int>(selection.size()) != k || static_cast<int>(post_processors.size()) != k)
        throw ShapeMismatchError("sum_rate: need one selected user and post-processor per transmitter");
    if (!(power.total >= 0.0))
        throw std::invalid_argument("sum_rate: negative transmit power");

    const double per_stream = power.total / static_cast<double>(m);
    double total_rate = 0.0;
    for (int tx = 0; tx < k; ++tx)
    {
        const CMatrix &u = post_processors[static_cast<std::size_t>(tx)];
        if (u.rows() != cfg.rx_antennas() || u.cols() != m)
            throw ShapeMismatchError("sum_rate: post-processor must be 2M x M");
        const int user = resolve_global_user(channels, selection, tx);

        CMatrix interference = CMatrix::Zero(m, m);
        for (int l = 0; l < k; ++l)
        {
            if (l == tx)
                continue;
            const CMatrix w = u.adjoint() * channels.gain(user, l);
            interference += w * w.adjoint();
        }
        const CMatrix wd = u.adjoint() * channels.gain(user, tx);

        const CMatrix denom = CMatrix::Identity(m, m) + per_stream * interference;
        const CMatrix numer = denom + per_stream * (wd * wd.adjoint());
        total_rate += log2_det_hermitian(numer) - log2_det_hermitian(denom);
    }
    return total_rate;
}

namespace
{

/// Per-user scheme metric for one serving hypothesis, lower is better.
double selection_metric(Scheme scheme, const ChannelSet &channels, int user, int tx)
{
    const auto &cfg = channels.config();
    switch (scheme)
    {
    case Scheme::Oia:
    {
        std::vector<CMatrix> raw(static_cast<std::size_t>(cfg.num_transmitters));
        for (int l = 0; l < cfg.num_transmitters; ++l)
            raw[static_cast<std::size_t>(l)] = channels.gain(user, l);
        return moa_user_us(raw, tx);
    }
    case Scheme::MinInr:
    {
        std::vector<CMatrix> interference;
        interference.reserve(static_cast<std::size_t>(cfg.num_transmitters - 1));
        for (int l = 0; l < cfg.num_transmitters; ++l)
            if (l != tx)
                interference.push_back(channels.gain(user, l));
        return min_inr_metric(interference);
    }
    case Scheme::MaxSnr:
        return -max_snr_metric(channels.gain(user, tx));
    }
    throw std::invalid_argument("selection_metric: unknown scheme");
}

std::vector<int> select_us(Scheme scheme, const ChannelSet &channels)
{
    const auto &cfg = channels.config();
    Scheme effective = scheme;
    if (scheme == Scheme::Oia && cfg.num_transmitters == 2)
    {
        warn_k2_degenerate();
        effective = Scheme::MaxSnr;
    }

    std::vector<int> selection(static_cast<std::size_t>(cfg.num_transmitters), 0);
    for (int cell = 0; cell < cfg.num_transmitters; ++cell)
    {
        double best = std::numeric_limits<double>::infinity();
        for (int n = 0; n < cfg.group_size; ++n)
        {
            const double metric = selection_metric(effective, channels, channels.global_user(cell, n), cell);
            if (metric < best)
            {
                best = metric;
                selection[static_cast<std::size_t>(cell)] = n;
            }
        }
    }
    return selection;
}

std::vector<int> pair_up(Scheme scheme, const ChannelSet &channels)
{
    const auto &cfg = channels.config();
    Scheme effective = scheme;
    if (scheme == Scheme::Oia && cfg.num_transmitters == 2)
    {
        warn_k2_degenerate();
        effective = Scheme::MaxSnr;
    }

    RMatrix cost;
    if (effective == Scheme::Oia)
    {
        cost = feedback_matrix_up(channels);
    }
    else
    {
        cost.resize(cfg.total_users, cfg.num_transmitters);
        for (int n = 0; n < cfg.total_users; ++n)
            for (int tx = 0; tx < cfg.num_transmitters; ++tx)
                cost(n, tx) = selection_metric(effective, channels, n, tx);
    }
    return hungarian_rectangular(cost).pairing.user_for_tx;
}

} // namespace

SchemeResult run_scheme(Scheme scheme, const ChannelSet &channels, PowerLevel power)
{
    const auto &cfg = channels.config();
    SchemeResult result;
    result.selection = cfg.framework == Framework::UserSelection ? select_us(scheme, channels)
                                                                 : pair_up(scheme, channels);

    result.post_processors.reserve(static_cast<std::size_t>(cfg.num_transmitters));
    result.leakage.reserve(static_cast<std::size_t>(cfg.num_transmitters));
    for (int tx = 0; tx < cfg.num_transmitters; ++tx)
    {
        const int user = resolve_global_user(channels, result.selection, tx);
        const CMatrix b = interference_covariance(channels, user, tx);
        CMatrix u = scheme == Scheme::MaxSnr ? orthonormalize(channels.gain(user, tx)).basis()
                                             : post_processor(b);
        result.leakage.push_back(leakage(b, u));
        result.post_processors.push_back(std::move(u));
    }
    result.sum_rate = sum_rate(channels, result.selection, result.post_processors, power);
    return result;
}

} // namespace oia
