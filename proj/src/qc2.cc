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

#include "qcq/qc2.h"

#include <vector>

#include "qcq/cosets.h"
#include "qcq/cyclic.h"
#include "qcq/factor.h"

namespace qcq {

namespace {

Poly gcd3(const Poly &a, const Poly &b, const Poly &c) {
    return poly_gcd(poly_gcd(a, b), c);
}

Poly nu_minus_one(const Qc2Spec &spec) {
    return spec.nu + Poly::constant(kOne);
}

// Rows of the n rotations of ([left], [right]).
void append_rotations(Gf4Matrix &m, const Poly &left, const Poly &right, const QuotientContext &ctx) {
    Circulant a = circulant(ctx.reduce(left), ctx.n());
    Circulant b = circulant(ctx.reduce(right), ctx.n());
    for (size_t i = 0; i < a.size(); ++i) {
        m.append_row(concat(a.row(i), b.row(i)));
    }
}

// A vector in K^2, K = GF(4^m).
struct Pair {
    Poly x;
    Poly y;
};

size_t pair_rank(const ExtField &f, const std::vector<Pair> &rows) {
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = i + 1; j < rows.size(); ++j) {
            if (!(f.mul(rows[i].x, rows[j].y) + f.mul(rows[i].y, rows[j].x)).is_zero()) {
                return 2;
            }
        }
    }
    for (const auto &r : rows) {
        if (!r.x.is_zero() || !r.y.is_zero()) {
            return 1;
        }
    }
    return 0;
}

// Rows of the 2x2 generator of the code's component at gamma^i.
std::vector<Pair> component_rows(const Qc2Spec &spec, const RootOfUnity &roots, long long i) {
    const ExtField &f = roots.field();
    Poly nu = roots.evaluate(spec.nu, i);
    Poly g1 = roots.evaluate(spec.g1, i);
    Poly g2 = roots.evaluate(spec.g2, i);
    return {{f.mul(nu, g1), g1}, {g2, f.mul(nu, g2)}};
}

// c . v* = 0 evaluated at gamma^i reads sum_t c_t(gamma^i) v_t(gamma^j)^2 = 0 with j = -i/2, so the
// dual's component at j is the orthogonal complement of the code's component at i = -2j.
bool spectral_dual_containing(const Qc2Spec &spec) {
    const RootOfUnity &roots = root_of_unity(spec.n);
    const ExtField &f = roots.field();
    int n = spec.n;
    for (const Coset &c : all_cosets(n)) {
        long long j = c.rep;
        long long i = ((-2 * j) % n + n) % n;
        std::vector<Pair> here = component_rows(spec, roots, j);
        std::vector<Pair> partner = component_rows(spec, roots, i);
        size_t partner_rank = pair_rank(f, partner);
        size_t here_rank = pair_rank(f, here);
        if (partner_rank == 2) {
            continue;
        }
        if (partner_rank == 0) {
            if (here_rank != 2) {
                return false;
            }
            continue;
        }
        const Pair &row = partner[0].x.is_zero() && partner[0].y.is_zero() ? partner[1] : partner[0];
        Pair w{f.sqrt(row.y), f.sqrt(row.x)};
        std::vector<Pair> extended = here;
        extended.push_back(w);
        if (pair_rank(f, extended) != here_rank) {
            return false;
        }
    }
    return true;
}

}  // namespace

void Qc2Spec::validate() const {
    QuotientContext ctx(n);
    for (const Poly *g : {&g1, &g2}) {
        if (g->is_zero() || !divides(*g, ctx.modulus())) {
            throw SpecError("generator " + format_coeff_string(*g) + " does not divide x^" + std::to_string(n) +
                            " - 1");
        }
    }
    if (nu.degree() >= n) {
        throw SpecError("nu has degree " + std::to_string(nu.degree()) + " >= n = " + std::to_string(n));
    }
}

Gf4Vector concat(const Gf4Vector &a, const Gf4Vector &b) {
    Gf4Vector out(a.size() + b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        out.set(i, a[i]);
    }
    for (size_t i = 0; i < b.size(); ++i) {
        out.set(a.size() + i, b[i]);
    }
    return out;
}

LinearCode::LinearCode(Gf4Matrix generator, std::optional<QuasiCyclicStructure> structure)
    : generator_(std::move(generator)), echelon_(row_reduce(generator_)), structure_(structure) {
    if (structure_ && static_cast<size_t>(structure_->circulant_size) * structure_->index != generator_.cols()) {
        throw DimensionError("quasi-cyclic structure does not match the code length");
    }
}

Gf4Matrix LinearCode::basis() const {
    Gf4Matrix out(0, length());
    for (size_t i = 0; i < echelon_.rank; ++i) {
        out.append_row(echelon_.reduced.row(i));
    }
    return out;
}

int qc_dimension(const Qc2Spec &spec) {
    spec.validate();
    QuotientContext ctx(spec.n);
    Poly h1 = ctx.modulus() / spec.g1;
    Poly h2 = ctx.modulus() / spec.g2;
    Poly lost = gcd3(nu_minus_one(spec), h1, h2);
    return 2 * spec.n - spec.g1.degree() - spec.g2.degree() - lost.degree();
}

bool dimension_condition(const Qc2Spec &spec) {
    return poly_gcd(nu_minus_one(spec), xn_minus_1(spec.n)).degree() == 0;
}

LinearCode build_qc_code(const Qc2Spec &spec) {
    spec.validate();
    QuotientContext ctx(spec.n);
    Gf4Matrix g(0, 2 * static_cast<size_t>(spec.n));
    append_rotations(g, mulmod(spec.nu, spec.g1, ctx), spec.g1, ctx);
    append_rotations(g, spec.g2, mulmod(spec.nu, spec.g2, ctx), ctx);
    LinearCode code(std::move(g), QuasiCyclicStructure{spec.n, 2});
    if (dimension_condition(spec)) {
        size_t expected = 2 * spec.n - spec.g1.degree() - spec.g2.degree();
        if (code.dimension() != expected) {
            throw InvariantViolation("dimension " + std::to_string(code.dimension()) + " differs from " +
                                     std::to_string(expected) + " under the gcd condition");
        }
    }
    return code;
}

LinearCode dual_qc_code(const Qc2Spec &spec) {
    spec.validate();
    QuotientContext ctx(spec.n);
    Poly d1 = hermitian_dual_gen(CyclicCode::from_generator(spec.g1, ctx));
    Poly d2 = hermitian_dual_gen(CyclicCode::from_generator(spec.g2, ctx));
    Poly nu_adj = adjoint(spec.nu, ctx);
    Gf4Matrix h(0, 2 * static_cast<size_t>(spec.n));
    append_rotations(h, mulmod(nu_adj, d1, ctx), d1, ctx);
    append_rotations(h, d2, mulmod(nu_adj, d2, ctx), ctx);

    // Rotating both blocks preserves the form, so the two base rows of G cover every row of G.
    Gf4Matrix g(0, h.cols());
    append_rotations(g, mulmod(spec.nu, spec.g1, ctx), spec.g1, ctx);
    append_rotations(g, spec.g2, mulmod(spec.nu, spec.g2, ctx), ctx);
    for (size_t base : {size_t{0}, static_cast<size_t>(spec.n)}) {
        for (size_t r = 0; r < h.rows(); ++r) {
            if (!hermitian_inner_product(g.row(base), h.row(r)).is_zero()) {
                throw AdjointMismatch("dual generator matrix is not Hermitian-orthogonal to the code");
            }
        }
    }
    return LinearCode(std::move(h), QuasiCyclicStructure{spec.n, 2});
}

LinearCode hermitian_dual(const LinearCode &code) {
    return LinearCode(hermitian_dual_basis(code.generator()), code.structure());
}

SymbolicVerdict dual_containing_symbolic(const Qc2Spec &spec) {
    spec.validate();
    QuotientContext ctx(spec.n);
    Poly d1 = hermitian_dual_gen(CyclicCode::from_generator(spec.g1, ctx));
    Poly d2 = hermitian_dual_gen(CyclicCode::from_generator(spec.g2, ctx));
    Poly nu_adj = adjoint(spec.nu, ctx);
    // Divisibility by a divisor of x^n - 1 is well defined on residues mod x^n - 1.
    Poly trace = ctx.reduce(spec.nu + nu_adj);
    Poly norm_plus_one = mulmod(spec.nu, nu_adj, ctx) + Poly::constant(kOne);

    SymbolicVerdict v;
    v.g1_divides_dual1 = divides(spec.g1, d1);
    v.g2_divides_dual2 = divides(spec.g2, d2);
    v.cross_condition = divides(spec.g2, mulmod(trace, d1, ctx));
    v.norm_condition_1 = divides(spec.g1, mulmod(norm_plus_one, d1, ctx));
    v.norm_condition_2 = divides(spec.g2, mulmod(norm_plus_one, d2, ctx));
    Poly h1 = ctx.modulus() / spec.g1;
    Poly h2 = ctx.modulus() / spec.g2;
    Poly shift = nu_minus_one(spec);
    v.dual_generators_complete =
        gcd3(shift, h1, h2).degree() == 0 && gcd3(shift, spec.g1, spec.g2).degree() == 0;
    v.spectral = spectral_dual_containing(spec);
    v.holds = v.spectral;
    if (v.dual_generators_complete && v.divisibility_conditions() != v.spectral) {
        throw InvariantViolation("divisibility conditions disagree with the spectral test");
    }
    // The dual generators span a subcode of the dual. If that subcode is not self-orthogonal the
    // code cannot contain its dual, complete or not.
    if (!v.divisibility_conditions() && v.spectral) {
        throw InvariantViolation("spectral test accepts a code whose dual generators are not self-orthogonal");
    }
    return v;
}

bool dual_containing_matrix(const LinearCode &code, const LinearCode &dual) {
    if (code.length() != dual.length()) {
        throw DimensionError("codes of different lengths");
    }
    for (const auto &row : dual.generator().row_vectors()) {
        if (!code.contains(row)) {
            return false;
        }
    }
    return true;
}

}  // namespace qcq
