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

#ifndef OIA_CLI_HPP
#define OIA_CLI_HPP

#include "oia/harness.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace oia
{

struct CliRequest
{
    ExperimentSpec spec;
    std::string out_path; // empty = stdout
};

/// Parse command line arguments (without the program name) into a request.
/// Throws UsageError on bad or missing flags; the message names the flag.
CliRequest parse_cli(const std::vector<std::string> &args);

/// Full CLI entry point. Exit codes: 0 success, 1 usage error, 2 runtime
/// error or unsupported combination, 3 validation-suite failure.
int run_cli(int argc, char **argv, std::ostream &out, std::ostream &err);

} // namespace oia

#endif
