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

#ifndef OIA_RNG_HPP
#define OIA_RNG_HPP

#include <cstdint>

namespace oia::rng
{

// SplitMix64 finalizer. Full-avalanche mixing of a 64-bit word; the basis of
// the counter-based stream derivation used throughout the simulator.
inline std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derive an independent stream key from a master seed and up to three stream
/// indices. Distinct index tuples map to statistically independent keys, so
/// work keyed on (trial, user, transmitter) can run in any order or in
/// parallel and still reproduce the sequential result.
inline std::uint64_t stream_key(std::uint64_t seed,
                                std::uint64_t a = 0,
                                std::uint64_t b = 0,
                                std::uint64_t c = 0)
{
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ a);
    h = mix64(h ^ b);
    h = mix64(h ^ c);
    return h;
}

} // namespace oia::rng

#endif
