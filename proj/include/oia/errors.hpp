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

#ifndef OIA_ERRORS_HPP
#define OIA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace oia
{

/// Base class for all library errors.
struct Error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct ShapeMismatchError : Error
{
    using Error::Error;
};

struct RankDeficientError : Error
{
    using Error::Error;
};

struct EmptyListError : Error
{
    using Error::Error;
};

struct NotHermitianError : Error
{
    using Error::Error;
};

struct InvalidConfigError : Error
{
    using Error::Error;
};

struct InfeasibleAssignmentError : Error
{
    using Error::Error;
};

struct NonFiniteCostError : Error
{
    using Error::Error;
};

struct TooLargeError : Error
{
    using Error::Error;
};

struct InvalidSpecError : Error
{
    using Error::Error;
};

struct UnsupportedCombinationError : Error
{
    using Error::Error;
};

struct UsageError : Error
{
    using Error::Error;
};

struct IoError : Error
{
    using Error::Error;
};

} // namespace oia

#endif
