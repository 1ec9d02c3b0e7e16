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

#include "oia/harness.hpp"

#include "oia/complexity.hpp"
#include "oia/rng.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

namespace oia
{

const char *to_string(SweepKind kind)
{
    switch (kind)
    {
    case SweepKind::SumRateVsSnr:
        return "sumrate-vs-snr";
    case SweepKind::SumRateVsUsers:
        return "sumrate-vs-users";
    case SweepKind::SumRateVsAntennas:
        return "sumrate-vs-antennas";
    case SweepKind::ComplexityVsUsers:
        return "complexity";
    case SweepKind::Validate:
        return "validate";
    }
    return "?";
}

const char *to_string(Scheme scheme)
{
    switch (scheme)
    {
    case Scheme::Oia:
        return "oia";
    case Scheme::MinInr:
        return "min-inr";
    case Scheme::MaxSnr:
        return "max-snr";
    }
    return "?";
}

const char *to_string(Framework framework)
{
    return framework == Framework::UserSelection ? "us" : "up";
}

namespace
{

template <typename T> bool strictly_increasing(const std::vector<T> &v)
{
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i - 1] < v[i]))
            return false;
    return true;
}

bool contains_framework(const std::vector<Framework> &fw, Framework f)
{
    return std::find(fw.begin(), fw.end(), f) != fw.end();
}

} // namespace

void ExperimentSpec::validate() const
{
    if (kind == SweepKind::Validate)
        return; // the validation suite has no grid parameters

    if (num_transmitters < 2)
        throw InvalidSpecError("spec: need at least 2 transmitters (--K)");
    if (schemes.empty())
        throw InvalidSpecError("spec: no schemes requested");
    if (frameworks.empty())
        throw InvalidSpecError("spec: no frameworks requested");
    if (antennas.empty() || !strictly_increasing(antennas) || antennas.front() < 1)
        throw InvalidSpecError("spec: antenna grid must be nonempty, positive, strictly increasing");
    if (users.empty() || !strictly_increasing(users) || users.front() < num_transmitters)
        throw InvalidSpecError("spec: user grid must be nonempty, strictly increasing, with N >= K");
    if (trials < 1)
        throw InvalidSpecError("spec: need at least one trial");

    const bool needs_snr = kind != SweepKind::ComplexityVsUsers;
    if (needs_snr && (snr_db.empty() || !strictly_increasing(snr_db)))
        throw InvalidSpecError("spec: SNR grid must be nonempty and strictly increasing");

    if (kind != SweepKind::SumRateVsUsers && kind != SweepKind::ComplexityVsUsers && users.size() != 1)
        throw InvalidSpecError("spec: this sweep needs a single --users value");
    if (kind != SweepKind::SumRateVsAntennas && antennas.size() != 1)
        throw InvalidSpecError("spec: this sweep needs a single --M value");

    // The user selection model needs whole groups. The complexity sweep skips
    // indivisible points instead (it has no channel realizations at stake).
    if (kind != SweepKind::ComplexityVsUsers && contains_framework(frameworks, Framework::UserSelection))
        for (int n : users)
            if (n % num_transmitters != 0)
                throw InvalidSpecError("spec: user selection requires --users divisible by --K");
}

int max_worker_threads()
{
    if (const char *env = std::getenv("OIA_SIM_THREADS"))
    {
        int value = 0;
        const char *end = env + std::string_view(env).size();
        const auto [ptr, ec] = std::from_chars(env, end, value);
        if (ec != std::errc() || ptr != end || value < 1)
            throw InvalidSpecError("OIA_SIM_THREADS must be a positive integer");
        return value;
    }
    return omp_get_max_threads();
}

namespace
{

struct GridPoint
{
    int tx_antennas;
    int total_users;
    double snr_db;
};

std::vector<GridPoint> enumerate_grid(const ExperimentSpec &spec)
{
    std::vector<GridPoint> points;
    switch (spec.kind)
    {
    case SweepKind::SumRateVsSnr:
        for (double snr : spec.snr_db)
            points.push_back({spec.antennas.front(), spec.users.front(), snr});
        break;
    case SweepKind::SumRateVsUsers:
        for (int n : spec.users)
            for (double snr : spec.snr_db)
                points.push_back({spec.antennas.front(), n, snr});
        break;
    case SweepKind::SumRateVsAntennas:
        for (int m : spec.antennas)
            for (double snr : spec.snr_db)
                points.push_back({m, spec.users.front(), snr});
        break;
    default:
        throw InvalidSpecError("enumerate_grid: not a rate sweep");
    }
    return points;
}

NetworkConfig make_config(const ExperimentSpec &spec, Framework framework, const GridPoint &point)
{
    if (framework == Framework::UserSelection)
        return NetworkConfig::user_selection(spec.num_transmitters, point.tx_antennas,
                                             point.total_users / spec.num_transmitters);
    return NetworkConfig::user_pairing(spec.num_transmitters, point.tx_antennas, point.total_users);
}

struct Combo
{
    Framework framework;
    Scheme scheme;
};

std::vector<Combo> enumerate_combos(const ExperimentSpec &spec)
{
    std::vector<Combo> combos;
    for (Framework fw : {Framework::UserSelection, Framework::UserPairing})
    {
        if (!contains_framework(spec.frameworks, fw))
            continue;
        for (Scheme s : {Scheme::Oia, Scheme::MinInr, Scheme::MaxSnr})
            if (std::find(spec.schemes.begin(), spec.schemes.end(), s) != spec.schemes.end())
                combos.push_back({fw, s});
    }
    return combos;
}

double mean_of(const std::vector<double> &values, std::size_t offset, std::size_t stride, std::size_t count)
{
    double acc = 0.0;
    for (std::size_t t = 0; t < count; ++t)
        acc += values[offset + t * stride];
    return acc / static_cast<double>(count);
}

double stderr_of(const std::vector<double> &values, std::size_t offset, std::size_t stride,
                 std::size_t count, double mean)
{
    if (count < 2)
        return 0.0;
    double ss = 0.0;
    for (std::size_t t = 0; t < count; ++t)
    {
        const double d = values[offset + t * stride] - mean;
        ss += d * d;
    }
    return std::sqrt(ss / (static_cast<double>(count - 1) * static_cast<double>(count)));
}

std::vector<ResultRow> run_rate_sweep(const ExperimentSpec &spec, ExecutionMode mode)
{
    const std::vector<GridPoint> grid = enumerate_grid(spec);
    const std::vector<Combo> combos = enumerate_combos(spec);
    const std::size_t n_combos = combos.size();
    const std::size_t n_trials = static_cast<std::size_t>(spec.trials);

    std::vector<ResultRow> rows;
    rows.reserve(grid.size() * n_combos);

    for (std::size_t g = 0; g < grid.size(); ++g)
    {
        const GridPoint &point = grid[g];
        const PowerLevel power = PowerLevel::from_snr_db(point.snr_db);

        // Per-trial result slots, written independently and reduced in trial
        // order afterwards so that the parallel and serial paths agree bit
        // for bit.
        std::vector<double> rates(n_trials * n_combos, 0.0);
        std::vector<double> leaks(n_trials * n_combos, 0.0);

        auto run_trial = [&](std::size_t trial) {
            const Seed trial_seed{rng::stream_key(spec.seed, g, trial)};
            for (std::size_t c = 0; c < n_combos; ++c)
            {
                const NetworkConfig config = make_config(spec, combos[c].framework, point);
                const ChannelSet channels = generate_channels(config, trial_seed);
                const SchemeResult result = run_scheme(combos[c].scheme, channels, power);
                const double mean_leak =
                    std::accumulate(result.leakage.begin(), result.leakage.end(), 0.0) /
                    static_cast<double>(result.leakage.size());
                rates[trial * n_combos + c] = result.sum_rate;
                leaks[trial * n_combos + c] = mean_leak;
            }
        };

        if (mode == ExecutionMode::Parallel)
        {
            const int workers = max_worker_threads();
#pragma omp parallel for schedule(dynamic) num_threads(workers)
            for (long long trial = 0; trial < static_cast<long long>(n_trials); ++trial)
                run_trial(static_cast<std::size_t>(trial));
        }
        else
        {
            for (std::size_t trial = 0; trial < n_trials; ++trial)
                run_trial(trial);
        }

        for (std::size_t c = 0; c < n_combos; ++c)
        {
            const double mean_rate = mean_of(rates, c, n_combos, n_trials);
            ResultRow row;
            row.kind = spec.kind;
            row.scheme = combos[c].scheme;
            row.framework = combos[c].framework;
            row.num_transmitters = spec.num_transmitters;
            row.tx_antennas = point.tx_antennas;
            row.total_users = point.total_users;
            row.snr_db = point.snr_db;
            row.trials = spec.trials;
            row.mean_sum_rate = mean_rate;
            row.stderr_sum_rate = stderr_of(rates, c, n_combos, n_trials, mean_rate);
            row.mean_leakage = mean_of(leaks, c, n_combos, n_trials);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<ResultRow> run_complexity_sweep(const ExperimentSpec &spec)
{
    const int k = spec.num_transmitters;
    const int m = spec.antennas.front();
    const int n_r = 2 * m;

    std::vector<ResultRow> rows;
    for (int n : spec.users)
    {
        for (const Combo &combo : enumerate_combos(spec))
        {
            std::optional<std::int64_t> flops;
            if (combo.framework == Framework::UserSelection)
            {
                // Only the OIA total is modeled for user selection, and it
                // needs whole groups.
                if (combo.scheme == Scheme::Oia && n % k == 0)
                    flops = flops::oia_user_selection(k, n / k, n_r);
            }
            else
            {
                switch (combo.scheme)
                {
                case Scheme::Oia:
                    flops = flops::oia_user_pairing(k, n, n_r);
                    break;
                case Scheme::MinInr:
                    flops = flops::min_inr_user_pairing(k, n, n_r);
                    break;
                case Scheme::MaxSnr:
                    flops = flops::max_snr_user_pairing(k, n, n_r);
                    break;
                }
            }
            if (!flops)
                continue;

            ResultRow row;
            row.kind = spec.kind;
            row.scheme = combo.scheme;
            row.framework = combo.framework;
            row.num_transmitters = k;
            row.tx_antennas = m;
            row.total_users = n;
            row.flops = flops;
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty())
        throw UnsupportedCombinationError(
            "complexity: no flop model exists for the requested scheme/framework combination");
    return rows;
}

} // namespace

std::vector<ResultRow> run_sweep(const ExperimentSpec &spec, ExecutionMode mode)
{
    spec.validate();
    switch (spec.kind)
    {
    case SweepKind::SumRateVsSnr:
    case SweepKind::SumRateVsUsers:
    case SweepKind::SumRateVsAntennas:
        return run_rate_sweep(spec, mode);
    case SweepKind::ComplexityVsUsers:
        return run_complexity_sweep(spec);
    case SweepKind::Validate:
        throw InvalidSpecError("run_sweep: the validation suite is run via run_validation_suite");
    }
    throw InvalidSpecError("run_sweep: unknown sweep kind");
}

namespace
{

std::string format_double(double v)
{
    std::ostringstream os;
    os << std::setprecision(10) << v;
    return os.str();
}

} // namespace

void emit_csv(const std::vector<ResultRow> &rows, std::ostream &out)
{
    out << "sweep,scheme,framework,K,M,N,snr_db,trials,mean_sum_rate,stderr_sum_rate,mean_leakage,flops\n";
    for (const ResultRow &row : rows)
    {
        out << to_string(row.kind) << ',' << to_string(row.scheme) << ',' << to_string(row.framework)
            << ',' << row.num_transmitters << ',' << row.tx_antennas << ',' << row.total_users << ',';
        if (row.snr_db)
            out << format_double(*row.snr_db);
        out << ',';
        if (row.trials)
            out << *row.trials;
        out << ',';
        if (row.mean_sum_rate)
            out << format_double(*row.mean_sum_rate);
        out << ',';
        if (row.stderr_sum_rate)
            out << format_double(*row.stderr_sum_rate);
        out << ',';
        if (row.mean_leakage)
            out << format_double(*row.mean_leakage);
        out << ',';
        if (row.flops)
            out << *row.flops;
        out << '\n';
    }
    if (!out)
        throw IoError("emit_csv: write failed");
}

void emit_csv(const std::vector<ResultRow> &rows, const std::string &path)
{
    std::ofstream file(path);
    if (!file)
        throw IoError("emit_csv: cannot open '" + path + "' for writing");
    emit_csv(rows, file);
    file.flush();
    if (!file)
        throw IoError("emit_csv: write to '" + path + "' failed");
}

} // namespace oia
