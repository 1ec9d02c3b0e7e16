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

#ifndef OIA_TYPES_HPP
#define OIA_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace oia
{

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd; // dense complex matrix (channels, bases, covariances)
using RMatrix = Eigen::MatrixXd;  // dense real matrix (feedback / cost matrices)

/// Total transmit power per base station, linear scale. Noise covariance is the
/// identity, so SNR(dB) = 10*log10(P); each of the M streams carries P/M.
struct PowerLevel
{
    double total = 0.0;

    static PowerLevel from_snr_db(double snr_db);
    double snr_db() const;
};

/// Master seed for reproducible simulation runs.
struct Seed
{
    std::uint64_t value = 0;
};

} // namespace oia

#endif
