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
// Monte Carlo sweep driver and CSV emission. Trials are independent: every
// trial draws its channels from a key derived from (master seed, grid point,
// trial index), results land in per-trial slots, and aggregation runs in
// trial order. The OpenMP path therefore produces byte-identical output to
// the serial reference for any worker count.

#ifndef OIA_HARNESS_HPP
#define OIA_HARNESS_HPP

#include "oia/channel.hpp"
#include "oia/errors.hpp"
#include "oia/schemes.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace oia
{

enum class SweepKind
{
    SumRateVsSnr,
    SumRateVsUsers,
    SumRateVsAntennas,
    ComplexityVsUsers,
    Validate
};

enum class ExecutionMode
{
    Parallel, // OpenMP over trials
    Serial    // reference implementation, kept for testing and benchmarks
};

struct ExperimentSpec
{
    SweepKind kind = SweepKind::SumRateVsSnr;
    std::vector<Scheme> schemes{Scheme::Oia, Scheme::MinInr, Scheme::MaxSnr};
    std::vector<Framework> frameworks{Framework::UserSelection, Framework::UserPairing};
    int num_transmitters = 0;  // K
    std::vector<int> antennas; // M grid (singleton unless the antenna sweep)
    std::vector<int> users;    // N grid (singleton unless user/complexity sweeps)
    std::vector<double> snr_db;
    int trials = 1000;
    std::uint64_t seed = 42;

    /// Throws InvalidSpecError on inconsistent dimensions or grids.
    void validate() const;
};

struct ResultRow
{
    SweepKind kind{};
    Scheme scheme{};
    Framework framework{};
    int num_transmitters = 0;
    int tx_antennas = 0;
    int total_users = 0;
    std::optional<double> snr_db;
    std::optional<int> trials;
    std::optional<double> mean_sum_rate;   // bits/s/Hz
    std::optional<double> stderr_sum_rate; // standard error of the mean
    std::optional<double> mean_leakage;    // mean per-link interference leakage
    std::optional<std::int64_t> flops;     // complexity sweeps only
};

const char *to_string(SweepKind kind);
const char *to_string(Scheme scheme);
const char *to_string(Framework framework);

/// Number of worker threads the parallel path will use: the OIA_SIM_THREADS
/// environment variable when set (must be a positive integer), otherwise the
/// OpenMP default.
int max_worker_threads();

/// Run a sweep and return one row per (grid point, framework, scheme), in
/// deterministic order. Unsupported scheme/framework combinations of the
/// complexity model are skipped; if nothing remains, throws
/// UnsupportedCombinationError.
std::vector<ResultRow> run_sweep(const ExperimentSpec &spec,
                                 ExecutionMode mode = ExecutionMode::Parallel);

/// Write rows as CSV with the fixed header
/// sweep,scheme,framework,K,M,N,snr_db,trials,mean_sum_rate,stderr_sum_rate,mean_leakage,flops
/// using 10 significant digits for floating point fields.
void emit_csv(const std::vector<ResultRow> &rows, std::ostream &out);
void emit_csv(const std::vector<ResultRow> &rows, const std::string &path);

} // namespace oia

#endif
