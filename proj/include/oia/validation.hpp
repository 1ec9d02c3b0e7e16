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
// Self-validation suite: cross-checks between independent computation routes
// (analytic spectra vs. the eigensolver, exact vs. approximate spread bounds,
// the assignment solver vs. exhaustive enumeration, and two separately coded
// evaluations of the sum-rate formula). Exposed through the `validate` CLI
// subcommand.

#ifndef OIA_VALIDATION_HPP
#define OIA_VALIDATION_HPP

#include "oia/channel.hpp"
#include "oia/schemes.hpp"
#include "oia/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace oia
{

struct ValidationCheck
{
    std::string name;
    int total = 0;
    int failures = 0;

    bool passed() const { return failures == 0; }
};

/// Independent evaluation of the sum-rate formula: assembles the receive
/// covariances by explicit loops and computes determinants by Gaussian
/// elimination, sharing no code with sum_rate(). Used as its cross-check.
double sum_rate_reference(const ChannelSet &channels, const std::vector<int> &selection,
                          const std::vector<CMatrix> &post_processors, PowerLevel power);

/// Run all validation checks with randomness derived from `seed`.
std::vector<ValidationCheck> run_validation_suite(std::uint64_t seed);

/// Print one line per check; returns true when everything passed.
bool report_validation(const std::vector<ValidationCheck> &checks, std::ostream &out);

} // namespace oia

#endif
