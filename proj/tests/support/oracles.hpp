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
// Test-only reference implementations, written independently of the library
// code paths they are used to validate.

#ifndef OIA_TESTS_ORACLES_HPP
#define OIA_TESTS_ORACLES_HPP

#include "oia/types.hpp"

#include <random>
#include <vector>

namespace oia::test
{

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations on a
/// plain array, descending. Independent of the library eigensolver.
std::vector<double> jacobi_eigenvalues(const CMatrix &hermitian);

/// Two-pass modified Gram-Schmidt orthonormalization of the columns.
/// Independent of the library orthonormalization.
CMatrix gram_schmidt(const CMatrix &a);

/// Haar-ish random unitary (Gram-Schmidt of a square Gaussian draw).
CMatrix random_unitary(Eigen::Index n, std::mt19937_64 &rng);

/// Random orthonormal basis built through gram_schmidt().
CMatrix random_orthonormal(Eigen::Index rows, Eigen::Index cols, std::mt19937_64 &rng);

} // namespace oia::test

#endif
