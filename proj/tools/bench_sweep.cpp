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
// Benchmark comparing the OpenMP trial loop against the serial reference and
// verifying that both produce identical rows.

#include "oia/harness.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <sstream>

namespace
{

double time_sweep(const oia::ExperimentSpec &spec, oia::ExecutionMode mode,
                  std::vector<oia::ResultRow> &rows)
{
    const auto start = std::chrono::steady_clock::now();
    rows = oia::run_sweep(spec, mode);
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

std::string csv_of(const std::vector<oia::ResultRow> &rows)
{
    std::ostringstream os;
    oia::emit_csv(rows, os);
    return os.str();
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"oia-bench: serial reference vs OpenMP trial loop"};
    int num_transmitters = 3;
    int antennas = 3;
    int users = 30;
    double snr = 10.0;
    int trials = 200;
    std::uint64_t seed = 42;
    app.add_option("--K", num_transmitters, "Number of transmitters");
    app.add_option("--M", antennas, "Antennas per transmitter");
    app.add_option("--users", users, "Total number of users");
    app.add_option("--snr", snr, "SNR in dB");
    app.add_option("--trials", trials, "Monte Carlo trials");
    app.add_option("--seed", seed, "Master seed");
    CLI11_PARSE(app, argc, argv);

    oia::ExperimentSpec spec;
    spec.kind = oia::SweepKind::SumRateVsSnr;
    spec.num_transmitters = num_transmitters;
    spec.antennas = {antennas};
    spec.users = {users};
    spec.snr_db = {snr};
    spec.trials = trials;
    spec.seed = seed;

    std::cout << "config: K=" << num_transmitters << " M=" << antennas << " N=" << users
              << " snr=" << snr << " dB, " << trials << " trials, "
              << oia::max_worker_threads() << " worker thread(s)\n";

    std::vector<oia::ResultRow> serial_rows, parallel_rows;
    const double t_serial = time_sweep(spec, oia::ExecutionMode::Serial, serial_rows);
    std::cout << "serial reference: " << t_serial << " s\n";
    const double t_parallel = time_sweep(spec, oia::ExecutionMode::Parallel, parallel_rows);
    std::cout << "openmp trial loop: " << t_parallel << " s\n";
    std::cout << "speedup: " << t_serial / t_parallel << "x\n";

    if (csv_of(serial_rows) != csv_of(parallel_rows))
    {
        std::cerr << "MISMATCH: serial and parallel sweeps disagree\n";
        return 1;
    }
    std::cout << "serial and parallel outputs are byte-identical\n";
    return 0;
}
