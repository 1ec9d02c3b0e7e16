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
// Exact solver for the rectangular linear assignment problem: given an N x K
// cost matrix with N >= K, pick one row per column (rows used at most once)
// minimizing the total cost. Solved directly on the rectangular matrix with
// a shortest-augmenting-path method; no square padding.

#ifndef OIA_ASSIGNMENT_HPP
#define OIA_ASSIGNMENT_HPP

#include "oia/errors.hpp"
#include "oia/types.hpp"

#include <vector>

namespace oia
{

/// Injective map from transmitter k to its assigned receiver user_for_tx[k].
struct Pairing
{
    std::vector<int> user_for_tx;
};

struct AssignmentResult
{
    Pairing pairing;
    double objective = 0.0; // sum of the selected cost entries
};

/// Globally optimal assignment for an N x K cost matrix (N >= K). Among
/// equal-cost optima, returns the lexicographically smallest pairing vector.
/// Throws InfeasibleAssignmentError when N < K and NonFiniteCostError on
/// NaN/Inf entries.
AssignmentResult hungarian_rectangular(const RMatrix &cost);

/// Exhaustive-enumeration reference with the same tie-break rule. Guarded to
/// N <= 10, K <= 5 (throws TooLargeError beyond).
AssignmentResult brute_force_assignment(const RMatrix &cost);

} // namespace oia

#endif
