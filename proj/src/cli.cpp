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

#include "oia/cli.hpp"

#include "oia/validation.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>
#include <sstream>

namespace oia
{

namespace
{

struct HelpRequested
{
    std::string text;
};

std::vector<double> parse_snr_range(const std::string &range)
{
    double start = 0.0, stop = 0.0, step = 0.0;
    char sep1 = 0, sep2 = 0;
    std::istringstream is(range);
    is >> start >> sep1 >> stop >> sep2 >> step;
    if (!is || sep1 != ':' || sep2 != ':' || !is.eof())
        throw UsageError("--snr-range must have the form start:stop:step");
    if (step <= 0.0 || stop < start)
        throw UsageError("--snr-range needs step > 0 and stop >= start");
    std::vector<double> values;
    for (double v = start; v <= stop + 1e-9; v += step)
        values.push_back(v);
    return values;
}

std::vector<Scheme> parse_schemes(const std::string &name)
{
    if (name == "oia")
        return {Scheme::Oia};
    if (name == "min-inr")
        return {Scheme::MinInr};
    if (name == "max-snr")
        return {Scheme::MaxSnr};
    if (name == "all")
        return {Scheme::Oia, Scheme::MinInr, Scheme::MaxSnr};
    throw UsageError("--scheme must be one of oia, min-inr, max-snr, all");
}

std::vector<Framework> parse_frameworks(const std::string &name)
{
    if (name == "us")
        return {Framework::UserSelection};
    if (name == "up")
        return {Framework::UserPairing};
    if (name == "both")
        return {Framework::UserSelection, Framework::UserPairing};
    throw UsageError("--framework must be one of us, up, both");
}

template <typename T> void sort_unique(std::vector<T> &v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

CliRequest parse_cli(const std::vector<std::string> &args)
{
    CLI::App app{"oia-sim: opportunistic interference alignment simulator for "
                 "K-transmitter MIMO interference channels"};
    app.require_subcommand(1);

    struct Raw
    {
        int num_transmitters = 0;
        std::vector<int> antennas;
        std::vector<int> users;
        int group_size = 0;
        std::vector<double> snr;
        std::string snr_range;
        int trials = 1000;
        std::uint64_t seed = 42;
        std::string scheme = "all";
        std::string framework = "both";
        std::string out_path;
    } raw;

    const std::map<std::string, SweepKind> sweep_subcommands = {
        {"sumrate-vs-snr", SweepKind::SumRateVsSnr},
        {"sumrate-vs-users", SweepKind::SumRateVsUsers},
        {"sumrate-vs-antennas", SweepKind::SumRateVsAntennas},
        {"complexity", SweepKind::ComplexityVsUsers},
    };
    const std::map<std::string, std::string> descriptions = {
        {"sumrate-vs-snr", "Mean sum-rate over an SNR grid at fixed network size"},
        {"sumrate-vs-users", "Mean sum-rate over a grid of user counts"},
        {"sumrate-vs-antennas", "Mean sum-rate over a grid of antenna counts"},
        {"complexity", "Closed-form flop counts over a grid of user counts"},
    };

    for (const auto &[name, kind] : sweep_subcommands)
    {
        CLI::App *sub = app.add_subcommand(name, descriptions.at(name));
        sub->add_option("--K", raw.num_transmitters, "Number of transmitters")->required();
        auto *m_opt = sub->add_option("--M", raw.antennas, "Antennas per transmitter (N_R = 2M)");
        if (kind == SweepKind::SumRateVsAntennas)
            m_opt->required()->expected(1, 64);
        else
            m_opt->required()->expected(1);
        auto *users_opt = sub->add_option("--users", raw.users, "Total number of users N");
        if (kind == SweepKind::SumRateVsUsers || kind == SweepKind::ComplexityVsUsers)
            users_opt->expected(1, 1024);
        else
            users_opt->expected(1);
        sub->add_option("--group-size", raw.group_size,
                        "Users per cell S (user selection); implies --users K*S");
        if (kind != SweepKind::ComplexityVsUsers)
        {
            auto *snr_opt = sub->add_option("--snr", raw.snr, "SNR grid in dB");
            auto *range_opt =
                sub->add_option("--snr-range", raw.snr_range, "SNR grid in dB as start:stop:step");
            snr_opt->excludes(range_opt);
            sub->add_option("--trials", raw.trials, "Monte Carlo trials per grid point");
        }
        sub->add_option("--seed", raw.seed, "Master seed");
        sub->add_option("--scheme", raw.scheme, "Scheme: oia, min-inr, max-snr, all");
        sub->add_option("--framework", raw.framework, "Framework: us, up, both");
        sub->add_option("--out", raw.out_path, "Write CSV to this file instead of stdout");
    }

    CLI::App *validate_sub =
        app.add_subcommand("validate", "Run the internal cross-check suite and report pass/fail");
    validate_sub->add_option("--seed", raw.seed, "Master seed");

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &e)
    {
        throw HelpRequested{app.help()};
    }
    catch (const CLI::ParseError &e)
    {
        throw UsageError(e.what());
    }

    CliRequest request;
    request.out_path = raw.out_path;

    if (validate_sub->parsed())
    {
        request.spec.kind = SweepKind::Validate;
        request.spec.seed = raw.seed;
        return request;
    }

    SweepKind kind = SweepKind::SumRateVsSnr;
    for (const auto &[name, k] : sweep_subcommands)
        if (app.get_subcommand(name)->parsed())
            kind = k;

    ExperimentSpec spec;
    spec.kind = kind;
    spec.num_transmitters = raw.num_transmitters;
    spec.antennas = raw.antennas;
    spec.trials = raw.trials;
    spec.seed = raw.seed;
    spec.schemes = parse_schemes(raw.scheme);
    spec.frameworks = parse_frameworks(raw.framework);

    if (raw.group_size > 0)
    {
        const int from_group = raw.num_transmitters * raw.group_size;
        if (!raw.users.empty() && (raw.users.size() != 1 || raw.users.front() != from_group))
            throw UsageError("--users contradicts --group-size (need N = K * S)");
        spec.users = {from_group};
    }
    else
    {
        if (raw.users.empty())
            throw UsageError("--users is required (or --group-size for user selection)");
        spec.users = raw.users;
    }

    if (kind != SweepKind::ComplexityVsUsers)
    {
        if (!raw.snr_range.empty())
            spec.snr_db = parse_snr_range(raw.snr_range);
        else if (!raw.snr.empty())
            spec.snr_db = raw.snr;
        else
            throw UsageError("--snr or --snr-range is required for sum-rate sweeps");
    }

    sort_unique(spec.antennas);
    sort_unique(spec.users);
    sort_unique(spec.snr_db);
    request.spec = spec;
    return request;
}

namespace
{

/// Companion note for user sweeps: how many users the selection framework
/// needs to match the pairing framework's mean OIA sum-rate, by linear
/// interpolation along the N grid.
void report_users_ratio(const std::vector<ResultRow> &rows, std::ostream &err)
{
    std::map<double, std::map<int, double>> us_curve, up_curve; // snr -> N -> mean
    for (const ResultRow &row : rows)
    {
        if (row.scheme != Scheme::Oia || !row.mean_sum_rate || !row.snr_db)
            continue;
        auto &curve = row.framework == Framework::UserSelection ? us_curve : up_curve;
        curve[*row.snr_db][row.total_users] = *row.mean_sum_rate;
    }

    for (const auto &[snr, up_points] : up_curve)
    {
        const auto us_it = us_curve.find(snr);
        if (us_it == us_curve.end() || us_it->second.size() < 2)
            continue;
        const std::vector<std::pair<int, double>> us(us_it->second.begin(), us_it->second.end());
        for (const auto &[n_up, rate_up] : up_points)
        {
            if (rate_up > us.back().second)
            {
                err << "note: OIA at " << snr << " dB: pairing with N=" << n_up
                    << " exceeds selection over the whole grid (> N=" << us.back().first << ")\n";
                continue;
            }
            if (rate_up < us.front().second)
                continue;
            for (std::size_t i = 1; i < us.size(); ++i)
            {
                if (us[i].second >= rate_up)
                {
                    const double span = us[i].second - us[i - 1].second;
                    const double frac = span > 0.0 ? (rate_up - us[i - 1].second) / span : 1.0;
                    const double matched =
                        us[i - 1].first + frac * (us[i].first - us[i - 1].first);
                    err << "note: OIA at " << snr << " dB: pairing with N=" << n_up
                        << " matches selection at N~" << matched << " ("
                        << matched / static_cast<double>(n_up) << "x users)\n";
                    break;
                }
            }
        }
    }
}

} // namespace

int run_cli(int argc, char **argv, std::ostream &out, std::ostream &err)
{
    CliRequest request;
    try
    {
        request = parse_cli(std::vector<std::string>(argv + 1, argv + argc));
    }
    catch (const HelpRequested &help)
    {
        out << help.text;
        return 0;
    }
    catch (const UsageError &e)
    {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try
    {
        if (request.spec.kind == SweepKind::Validate)
        {
            const auto checks = run_validation_suite(request.spec.seed);
            return report_validation(checks, out) ? 0 : 3;
        }

        const std::vector<ResultRow> rows = run_sweep(request.spec);
        if (request.out_path.empty())
            emit_csv(rows, out);
        else
            emit_csv(rows, request.out_path);

        if (request.spec.kind == SweepKind::SumRateVsUsers)
            report_users_ratio(rows, err);
        return 0;
    }
    catch (const std::exception &e)
    {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace oia
