// Copyright 2026 The qconv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCONV_TESTS_PROPERTIES_H
#define QCONV_TESTS_PROPERTIES_H

#include <cstddef>
#include <cstdint>
#include <string>

// Randomized property checks shared by the property suite and the acceptance runner.
namespace qconv::property {

struct Outcome {
    size_t cases = 0;
    size_t failures = 0;
    /// Inputs outside the checked domain.
    size_t skipped = 0;
    /// First failing case, empty when all pass.
    std::string first_failure;

    bool ok() const {
        return failures == 0 && cases > 0;
    }
};

/// Commutation series coefficients against letter-level enumeration of shifted pairs.
Outcome commutation_series_vs_shifts(uint64_t seed, size_t pairs);
/// Tableau conjugation against dense unitaries for random circuits on up to 4 qubits.
Outcome tableau_vs_dense(uint64_t seed, size_t circuits);
/// Every gate kind at every placement on 1 to 3 qubits, applied to every Pauli
/// with both signs, against dense conjugation.
Outcome gate_rules_exhaustive();
/// a == quotient * b + remainder with deg remainder < deg b, products by schoolbook.
Outcome divmod_reconstruction(uint64_t seed, size_t pairs);
/// Syndrome of a product equals the sum of the syndromes.
Outcome syndrome_linearity(uint64_t seed, size_t pairs);
/// Products of stabilizer rows have the trivial syndrome.
Outcome stabilizer_trivial_syndrome(uint64_t seed, size_t samples);
/// Logical operators of random equivalent codes with a diagonal standard form commute with every generator shift
/// and pair up as X-bar/Z-bar.
Outcome logical_algebra(uint64_t seed, size_t codes);

}  // namespace qconv::property

#endif
