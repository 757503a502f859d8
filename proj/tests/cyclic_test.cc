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

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.h"
#include "qcq/errors.h"
#include "qcq/reference.h"

using namespace qcq;

namespace {

std::vector<DefiningSet> all_defining_sets(int n) {
    auto cosets = all_cosets(n);
    std::vector<DefiningSet> out;
    for (uint32_t mask = 0; mask < (1u << cosets.size()); ++mask) {
        std::vector<int> picks;
        for (size_t i = 0; i < cosets.size(); ++i) {
            if (mask >> i & 1) {
                picks.push_back(cosets[i].rep);
            }
        }
        out.emplace_back(n, picks);
    }
    return out;
}

}  // namespace

TEST(gen_poly_from_defset, examples) {
    ASSERT_EQ(gen_poly_from_defset(DefiningSet(21, {})), Poly::constant(kOne));
    std::vector<int> all(21);
    std::iota(all.begin(), all.end(), 0);
    ASSERT_EQ(gen_poly_from_defset(DefiningSet(21, all)), xn_minus_1(21));
    ASSERT_EQ(gen_poly_from_defset(DefiningSet(21, {7})).degree(), 1);
    auto zero_code = CyclicCode::from_defining_set(DefiningSet(21, all));
    ASSERT_EQ(zero_code.dimension(), 0);
}

TEST(gen_poly_from_defset, roots_match_defining_set) {
    for (int n : {15, 21, 35}) {
        const RootOfUnity &r = root_of_unity(n);
        for (const auto &t : all_defining_sets(n)) {
            Poly g = gen_poly_from_defset(t);
            ASSERT_EQ(static_cast<size_t>(g.degree()), t.size());
            for (int i = 0; i < n; ++i) {
                ASSERT_EQ(r.evaluate(g, i).is_zero(), t.contains(i)) << n << " " << i;
            }
            ASSERT_EQ(defining_set_of(g, QuotientContext(n)), t);
        }
    }
}

TEST(cyclic_code, rejects_non_divisors) {
    QuotientContext ctx(7);
    ASSERT_THROW(CyclicCode::from_generator(Poly(), ctx), SpecError);
    ASSERT_THROW(CyclicCode::from_generator(Poly::from_digits("01"), ctx), SpecError);
    auto c = CyclicCode::from_generator(Poly::from_digits("2202"), ctx);  // omega (1 + x + x^3)
    ASSERT_EQ(c.generator(), Poly::from_digits("1101"));
    ASSERT_EQ(c.dimension(), 4);
}

TEST(check_poly, examples) {
    QuotientContext ctx(21);
    ASSERT_EQ(check_poly(CyclicCode::from_generator(Poly::constant(kOne), ctx)), xn_minus_1(21));
    ASSERT_EQ(check_poly(CyclicCode::from_generator(xn_minus_1(21), ctx)), Poly::constant(kOne));
    auto c1 = CyclicCode::from_generator(parse_coeff_string(reference_constructions()[0].g1), ctx);
    ASSERT_EQ(c1.generator() * check_poly(c1), xn_minus_1(21));
}

TEST(hermitian_dual_gen, examples) {
    QuotientContext ctx(21);
    ASSERT_EQ(hermitian_dual_gen(CyclicCode::from_generator(xn_minus_1(21), ctx)), Poly::constant(kOne));
    QuotientContext c3(3);
    Poly d = hermitian_dual_gen(CyclicCode::from_generator(Poly::from_digits("11"), c3));
    ASSERT_EQ(d.degree(), 2);

    auto g1 = CyclicCode::from_generator(parse_coeff_string(reference_constructions()[0].g1), ctx);
    auto dual = CyclicCode::from_generator(hermitian_dual_gen(g1), ctx);
    Gf4Matrix a = cyclic_generator_matrix(g1), b = cyclic_generator_matrix(dual);
    for (const auto &u : a.row_vectors()) {
        for (const auto &v : b.row_vectors()) {
            ASSERT_EQ(hermitian_inner_product(u, v), kZero);
        }
    }
}

// Pure reversal (the formula without conjugation) is not the dual generator in general.
TEST(hermitian_dual_gen, unconjugated_formula_is_not_orthogonal) {
    QuotientContext ctx(21);
    auto g1 = CyclicCode::from_generator(parse_coeff_string(reference_constructions()[0].g2), ctx);
    Poly wrong = dual_gen_formula(g1.generator(), ctx, AdjointVariant::kReversal);
    Poly right = dual_gen_formula(g1.generator(), ctx, AdjointVariant::kConjugateReversal);
    ASSERT_NE(wrong, right);
    ASSERT_EQ(right, hermitian_dual_gen(g1));
    Gf4Vector u = g1.generator().to_vector(21);
    bool orthogonal = true;
    for (size_t s = 0; s < 21; ++s) {
        orthogonal &= hermitian_inner_product(u, mulmod(wrong, Poly::monomial(s), ctx).to_vector(21)) == kZero;
    }
    ASSERT_FALSE(orthogonal);
}

TEST(hermitian_dual_gen, every_divisor_up_to_31) {
    for (int n = 1; n <= 31; n += 2) {
        QuotientContext ctx(n);
        for (const auto &t : all_defining_sets(n)) {
            auto c = CyclicCode::from_defining_set(t);
            Poly d = hermitian_dual_gen(c);
            auto dual = CyclicCode::from_generator(d, ctx);
            ASSERT_EQ(c.dimension() + dual.dimension(), n);
            // T cap T^-2 = {} exactly when <g> contains its Hermitian dual.
            ASSERT_EQ(defset_dual_containing(t), divides(c.generator(), d)) << "n=" << n;
            if (n <= 15) {
                Gf4Matrix a = cyclic_generator_matrix(c), b = cyclic_generator_matrix(dual);
                ASSERT_EQ(rank(a), static_cast<size_t>(c.dimension()));
                for (const auto &u : a.row_vectors()) {
                    for (const auto &v : b.row_vectors()) {
                        ASSERT_EQ(hermitian_inner_product(u, v), kZero);
                    }
                }
            }
        }
    }
}

TEST(circulant, examples) {
    Gf4Matrix id = circulant(Poly::constant(kOne), 5).matrix();
    for (size_t i = 0; i < 5; ++i) {
        for (size_t j = 0; j < 5; ++j) {
            ASSERT_EQ(id(i, j), i == j ? kOne : kZero);
        }
    }
    ASSERT_EQ(rank(circulant(Poly(), 5).matrix()), 0u);
    ASSERT_THROW(circulant(Poly::monomial(5), 5), DimensionError);
    Circulant c = circulant(Poly::from_digits("123"), 5);
    ASSERT_EQ(c.row(1).digits(), "01230");
    ASSERT_EQ(c.row(3).digits(), "30012");
}

TEST(circulant, rows_are_shifts_and_rank_is_n_minus_gcd_degree) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + 2 * static_cast<int>(rng() % 12);
        QuotientContext ctx(n);
        Poly p = qcq::testing::random_poly(rng, n);
        if (t % 2 == 0) {
            p = ctx.reduce(p * qcq::testing::random_divisor(rng, n));
        }
        Circulant c = circulant(p, n);
        for (int i = 0; i < n; ++i) {
            ASSERT_EQ(c.row(i), mulmod(p, Poly::monomial(i), ctx).to_vector(n));
        }
        int expected = p.is_zero() ? 0 : n - poly_gcd(p, xn_minus_1(n)).degree();
        ASSERT_EQ(rank(c.matrix()), static_cast<size_t>(expected));
    }
}
