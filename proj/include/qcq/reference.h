// Copyright 2026 The qcq Authors
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

#ifndef QCQ_REFERENCE_H
#define QCQ_REFERENCE_H

#include <string_view>
#include <vector>

#include "qcq/qc2.h"

namespace qcq {

/// One published construction: the generator strings as printed, and the claimed parameters.
struct ReferenceConstruction {
    std::string_view label;
    int n;
    std::string_view g1;
    std::string_view g2;
    std::string_view nu;
    int claimed_k;  ///< classical dimension
    int claimed_d;  ///< classical minimum distance
    int quantum_k;  ///< 2n - 2 deg g1 - 2 deg g2
    int quantum_d;
    /// Dual dimension as printed, or -1 where the text gives none.
    int claimed_dual_k;
    /// Dual minimum distance as printed, or -1.
    int claimed_dual_d;
    /// Whether the text asserts conditions (a)-(c) for this row (g1^dual does not divide g1, the
    /// cross condition, and both norm conditions).
    bool claims_conditions;
    /// Defining sets as printed, by coset representative.
    std::vector<int> claimed_t1;
    std::vector<int> claimed_t2;

    Qc2Spec spec() const;
};

/// The four dual-containing constructions, ordered [42,26], [70,55], [74,55], [78,59].
const std::vector<ReferenceConstruction> &reference_constructions();

}  // namespace qcq

#endif
