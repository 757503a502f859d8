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

#ifndef QCQ_QC2_H
#define QCQ_QC2_H

#include <optional>

#include "qcq/errors.h"
#include "qcq/gf4.h"
#include "qcq/poly.h"

namespace qcq {

/// Two-generator index-2 quasi-cyclic code: the R-module spanned by (nu g1, g1) and (g2, nu g2)
/// in R^2, R = GF(4)[x]/(x^n - 1).
struct Qc2Spec {
    int n = 1;
    Poly g1;
    Poly g2;
    Poly nu;

    /// Throws UnsupportedLength / SpecError unless g1, g2 divide x^n - 1 and deg(nu) < n.
    void validate() const;
    bool operator==(const Qc2Spec &) const = default;
};

/// Coordinates split into `index` blocks of `circulant_size`; the code is invariant under rotating
/// every block by one place simultaneously.
struct QuasiCyclicStructure {
    int circulant_size = 1;
    int index = 1;
    bool operator==(const QuasiCyclicStructure &) const = default;
};

/// A linear code given by a generator matrix whose row space is the code.
class LinearCode {
   public:
    explicit LinearCode(Gf4Matrix generator, std::optional<QuasiCyclicStructure> structure = std::nullopt);

    size_t length() const {
        return generator_.cols();
    }
    size_t dimension() const {
        return echelon_.rank;
    }
    const Gf4Matrix &generator() const {
        return generator_;
    }
    const RowEchelon &echelon() const {
        return echelon_;
    }
    /// The first dimension() rows of the reduced echelon form.
    Gf4Matrix basis() const;
    const std::optional<QuasiCyclicStructure> &structure() const {
        return structure_;
    }
    bool contains(const Gf4Vector &v) const {
        return row_space_contains(echelon_, v);
    }

   private:
    Gf4Matrix generator_;
    RowEchelon echelon_;
    std::optional<QuasiCyclicStructure> structure_;
};

/// The dual generator matrix fails Hermitian orthogonality against the code.
struct AdjointMismatch : InvariantViolation {
    using InvariantViolation::InvariantViolation;
};

/// Rows: the n rotations of ([nu g1], [g1]) followed by the n rotations of ([g2], [nu g2]).
/// When gcd(nu - 1, x^n - 1) = 1 the dimension is checked to be 2n - deg g1 - deg g2.
LinearCode build_qc_code(const Qc2Spec &spec);

/// 2n - deg g1 - deg g2 - deg gcd(nu - 1, h1, h2), where h_i = (x^n - 1) / g_i. Reduces to the
/// plain degree count whenever gcd(nu - 1, x^n - 1) = 1.
int qc_dimension(const Qc2Spec &spec);

/// True iff gcd(nu - 1, x^n - 1) = 1.
bool dimension_condition(const Qc2Spec &spec);

/// Code spanned by the rotations of ([nu* g1d], [g1d]) and ([g2d], [nu* g2d]) with g_id the Hermitian
/// dual generators and nu* the Hermitian adjoint of nu. Always orthogonal to build_qc_code(spec);
/// throws AdjointMismatch otherwise. Equals the full Hermitian dual when `dual_generators_complete`.
LinearCode dual_qc_code(const Qc2Spec &spec);

/// Full Hermitian dual of any linear code, by null space.
LinearCode hermitian_dual(const LinearCode &code);

/// Per-condition breakdown of the polynomial dual-containment test.
struct SymbolicVerdict {
    /// g_i | g_i^dual: each cyclic component contains its own dual. Informational only; it is
    /// sufficient for the component codes but not needed for the quasi-cyclic code.
    bool g1_divides_dual1 = false;
    bool g2_divides_dual2 = false;
    /// g2 | (nu + nu*) g1^dual.
    bool cross_condition = false;
    /// g_i | (nu nu* + 1) g_i^dual.
    bool norm_condition_1 = false;
    bool norm_condition_2 = false;
    /// gcd(nu - 1, h1, h2) = 1 and gcd(nu - 1, g1, g2) = 1: the dual generators span the whole
    /// Hermitian dual, so the divisibility conditions are exact.
    bool dual_generators_complete = false;
    /// Root-of-unity evaluation of the module conditions at every cyclotomic component.
    bool spectral = false;
    /// Final verdict; always equal to `spectral`.
    bool holds = false;

    bool divisibility_conditions() const {
        return cross_condition && norm_condition_1 && norm_condition_2;
    }
};

/// Throws InvariantViolation if the divisibility conditions and the spectral test disagree in the
/// range where both are exact.
SymbolicVerdict dual_containing_symbolic(const Qc2Spec &spec);

/// True iff every generator row of `dual` lies in the row space of `code`.
/// Throws DimensionError when the lengths differ.
bool dual_containing_matrix(const LinearCode &code, const LinearCode &dual);

/// Concatenation (a | b).
Gf4Vector concat(const Gf4Vector &a, const Gf4Vector &b);

}  // namespace qcq

#endif
