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

#ifndef QCQ_CYCLIC_H
#define QCQ_CYCLIC_H

#include <optional>

#include "qcq/cosets.h"
#include "qcq/gf4.h"
#include "qcq/poly.h"

namespace qcq {

/// The cyclic code <g> of length n over GF(4). g is monic and divides x^n - 1; g = x^n - 1 is the
/// zero code.
class CyclicCode {
   public:
    /// Normalizes g to monic. Throws SpecError if g is zero or does not divide x^n - 1.
    static CyclicCode from_generator(const Poly &g, const QuotientContext &ctx);
    static CyclicCode from_defining_set(const DefiningSet &t);

    int n() const {
        return ctx_.n();
    }
    const QuotientContext &context() const {
        return ctx_;
    }
    const Poly &generator() const {
        return g_;
    }
    int dimension() const {
        return n() - g_.degree();
    }
    const std::optional<DefiningSet> &defining_set() const {
        return defining_set_;
    }

   private:
    CyclicCode(QuotientContext ctx, Poly g, std::optional<DefiningSet> t)
        : ctx_(ctx), g_(std::move(g)), defining_set_(std::move(t)) {
    }
    QuotientContext ctx_;
    Poly g_;
    std::optional<DefiningSet> defining_set_;
};

/// Product of the minimal polynomials of the cosets in T; degree equals |T|.
Poly gen_poly_from_defset(const DefiningSet &t);
/// Cosets whose minimal polynomial divides g. g must divide x^n - 1.
DefiningSet defining_set_of(const Poly &g, const QuotientContext &ctx);

/// h = (x^n - 1) / g.
Poly check_poly(const CyclicCode &c);

/// Monic x^deg(h) h(1/x) under the given adjoint variant, without verification.
Poly dual_gen_formula(const Poly &g, const QuotientContext &ctx, AdjointVariant variant);

/// Generator of the Hermitian dual code. Checks directly that <g> and the result are
/// Hermitian-orthogonal and throws InvariantViolation otherwise.
Poly hermitian_dual_gen(const CyclicCode &c);

/// m x m matrix whose row i is the first row rotated right by i places.
class Circulant {
   public:
    Circulant(Gf4Vector first_row) : first_row_(std::move(first_row)) {
    }
    size_t size() const {
        return first_row_.size();
    }
    const Gf4Vector &first_row() const {
        return first_row_;
    }
    Gf4Vector row(size_t i) const;
    Gf4Matrix matrix() const;

   private:
    Gf4Vector first_row_;
};

/// Circulant of p's coefficient vector. Throws DimensionError if degree(p) >= m.
Circulant circulant(const Poly &p, size_t m);

/// All n cyclic shifts of [g] (g reduced mod x^n - 1). Spans <g>.
Gf4Matrix cyclic_generator_matrix(const CyclicCode &c);

}  // namespace qcq

#endif
