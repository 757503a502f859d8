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

#include "qcq/cyclic.h"

#include <algorithm>

#include "qcq/errors.h"
#include "qcq/factor.h"

namespace qcq {

CyclicCode CyclicCode::from_generator(const Poly &g, const QuotientContext &ctx) {
    if (g.is_zero()) {
        throw SpecError("generator polynomial is zero");
    }
    if (!divides(g, ctx.modulus())) {
        throw SpecError("generator " + format_coeff_string(g) + " does not divide x^" + std::to_string(ctx.n()) +
                        " - 1");
    }
    return CyclicCode(ctx, monic(g), std::nullopt);
}

CyclicCode CyclicCode::from_defining_set(const DefiningSet &t) {
    QuotientContext ctx(t.n());
    return CyclicCode(ctx, gen_poly_from_defset(t), t);
}

Poly gen_poly_from_defset(const DefiningSet &t) {
    QuotientContext ctx(t.n());
    Poly g = Poly::constant(kOne);
    for (const auto &mp : minimal_polynomials(ctx)) {
        if (std::binary_search(t.reps().begin(), t.reps().end(), mp.coset_rep)) {
            g = g * mp.poly;
        }
    }
    return g;
}

DefiningSet defining_set_of(const Poly &g, const QuotientContext &ctx) {
    if (g.is_zero() || !divides(g, ctx.modulus())) {
        throw SpecError("defining sets exist only for divisors of x^n - 1");
    }
    std::vector<int> reps;
    for (const auto &mp : minimal_polynomials(ctx)) {
        if (divides(mp.poly, g)) {
            reps.push_back(mp.coset_rep);
        }
    }
    return DefiningSet(ctx.n(), reps);
}

Poly check_poly(const CyclicCode &c) {
    return c.context().modulus() / c.generator();
}

Poly dual_gen_formula(const Poly &g, const QuotientContext &ctx, AdjointVariant variant) {
    Poly h = ctx.modulus() / g;
    Poly r = reversed(h);
    if (variant == AdjointVariant::kConjugateReversal) {
        r = conj_coeffs(r);
    }
    return monic(r);
}

Poly hermitian_dual_gen(const CyclicCode &c) {
    const QuotientContext &ctx = c.context();
    Poly dual = dual_gen_formula(c.generator(), ctx, kHermitianAdjoint);
    // Shift invariance: <x^i g, x^j d> = <g, x^(j-i) d>, so one row of <g> against every row of <d>.
    Gf4Vector g_row = ctx.reduce(c.generator()).to_vector(ctx.n());
    Circulant d = circulant(ctx.reduce(dual), ctx.n());
    for (size_t j = 0; j < d.size(); ++j) {
        if (!hermitian_inner_product(g_row, d.row(j)).is_zero()) {
            throw InvariantViolation("Hermitian dual generator is not orthogonal to the code");
        }
    }
    return dual;
}

Gf4Vector Circulant::row(size_t i) const {
    size_t m = size();
    Gf4Vector out(m);
    for (size_t j = 0; j < m; ++j) {
        out.set((j + i) % m, first_row_[j]);
    }
    return out;
}

Gf4Matrix Circulant::matrix() const {
    Gf4Matrix out(0, size());
    for (size_t i = 0; i < size(); ++i) {
        out.append_row(row(i));
    }
    return out;
}

Circulant circulant(const Poly &p, size_t m) {
    return Circulant(p.to_vector(m));
}

Gf4Matrix cyclic_generator_matrix(const CyclicCode &c) {
    return circulant(c.context().reduce(c.generator()), c.n()).matrix();
}

}  // namespace qcq
