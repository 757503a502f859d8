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

#include "qcq/poly.h"

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"
#include "qcq/errors.h"
#include "qcq/factor.h"

using namespace qcq;
using qcq::testing::random_gf4;
using qcq::testing::random_poly;

namespace {

Poly P(std::string_view digits) {
    return Poly::from_digits(digits);
}

Poly ascending(std::initializer_list<int> v) {
    std::vector<Gf4> c;
    for (int x : v) {
        c.push_back(Gf4::from_digit(x));
    }
    return Poly(c);
}

}  // namespace

TEST(poly, normalization_and_degree) {
    ASSERT_EQ(P("1100").degree(), 1);
    ASSERT_EQ(P("000").degree(), Poly::kZeroDegree);
    ASSERT_TRUE(Poly().is_zero());
    ASSERT_EQ(P("0"), Poly());
    ASSERT_TRUE(P("3201").is_monic());
    ASSERT_FALSE(P("12").is_monic());
}

TEST(poly, evaluation) {
    // 1 + x + x^3 at omega: 1 + w + 1 = w.
    ASSERT_EQ(P("1101")(kOmega), kOmega);
    ASSERT_EQ(P("11")(kOne), kZero);
}

TEST(poly, divmod_reconstructs) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 500; ++t) {
        Poly a = random_poly(rng, 1 + rng() % 30);
        Poly b = random_poly(rng, 1 + rng() % 12);
        if (b.is_zero()) {
            ASSERT_THROW(divmod(a, b), std::domain_error);
            continue;
        }
        DivMod qr = divmod(a, b);
        ASSERT_EQ(qr.quotient * b + qr.remainder, a);
        ASSERT_LT(qr.remainder.degree(), b.degree());
    }
}

TEST(mulmod, identities) {
    QuotientContext ctx(7);
    Poly a = P("1203");
    ASSERT_EQ(mulmod(a, Poly::constant(kOne), ctx), a);
    ASSERT_EQ(mulmod(Poly::monomial(6), Poly::monomial(1), ctx), Poly::constant(kOne));
}

TEST(mulmod, matches_schoolbook_and_long_division) {
    std::mt19937_64 rng(12);
    QuotientContext ctx(7);
    for (int t = 0; t < 300; ++t) {
        Poly a = random_poly(rng, 7), b = random_poly(rng, 7);
        oracle::Digits expected = oracle::long_division_mod(
            oracle::poly_mul(oracle::digits_of(a), oracle::digits_of(b)), 7);
        ASSERT_EQ(oracle::digits_of(mulmod(a, b, ctx)), expected);
    }
}

TEST(mulmod, ring_axioms) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 300; ++t) {
        int n = 1 + 2 * static_cast<int>(rng() % 16);
        QuotientContext ctx(n);
        Poly a = random_poly(rng, n), b = random_poly(rng, n), c = random_poly(rng, n);
        ASSERT_EQ(mulmod(a, b, ctx), mulmod(b, a, ctx));
        ASSERT_EQ(mulmod(mulmod(a, b, ctx), c, ctx), mulmod(a, mulmod(b, c, ctx), ctx));
        ASSERT_EQ(mulmod(a, b + c, ctx), mulmod(a, b, ctx) + mulmod(a, c, ctx));
    }
}

TEST(quotient_context, rejects_unsupported_lengths) {
    ASSERT_THROW(QuotientContext(0), UnsupportedLength);
    ASSERT_THROW(QuotientContext(8), UnsupportedLength);
    ASSERT_THROW(QuotientContext(257), UnsupportedLength);
    ASSERT_NO_THROW(QuotientContext(255));
}

TEST(poly_gcd, examples) {
    Poly f = ascending({2, 0, 1, 3});
    ASSERT_EQ(poly_gcd(f, f), monic(f));
    ASSERT_EQ(poly_gcd(P("101"), P("11")), P("11"));
    ASSERT_THROW(poly_gcd(Poly(), Poly()), std::domain_error);
    ASSERT_EQ(poly_gcd(Poly(), f), monic(f));
}

TEST(poly_gcd, divides_both_arguments) {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 300; ++t) {
        Poly c = random_poly(rng, 5);
        Poly a = random_poly(rng, 10) * c, b = random_poly(rng, 10) * c;
        if (a.is_zero() && b.is_zero()) {
            continue;
        }
        Poly g = poly_gcd(a, b);
        ASSERT_TRUE(g.is_monic());
        ASSERT_TRUE(divides(g, a));
        ASSERT_TRUE(divides(g, b));
        if (!c.is_zero()) {
            ASSERT_TRUE(divides(c, g));
        }
    }
}

TEST(divides, examples) {
    ASSERT_TRUE(divides(P("11"), xn_minus_1(21)));
    ASSERT_TRUE(divides(P("1101"), xn_minus_1(7)));
    ASSERT_FALSE(divides(P("01"), xn_minus_1(21)));
    ASSERT_THROW(divides(Poly(), P("1")), std::domain_error);
}

TEST(reciprocal, examples) {
    QuotientContext ctx(7);
    ASSERT_EQ(reciprocal(P("1101000"), ctx), P("1000101"));
    ASSERT_EQ(reciprocal(Poly::constant(kOmega), ctx), Poly::constant(kOmega));
    std::mt19937_64 rng(15);
    for (int t = 0; t < 100; ++t) {
        Poly g = random_poly(rng, 7);
        ASSERT_EQ(reciprocal(reciprocal(g, ctx), ctx), g);
    }
}

TEST(conj_coeffs, examples) {
    ASSERT_EQ(conj_coeffs(P("12")), P("13"));
    ASSERT_EQ(conj_coeffs(P("1101")), P("1101"));
    std::mt19937_64 rng(16);
    for (int t = 0; t < 100; ++t) {
        Poly g = random_poly(rng, 20);
        ASSERT_EQ(conj_coeffs(conj_coeffs(g)), g);
    }
}

// Lemma-3 exchange law <f g, h> = <g, f* h>. Only conj(f)(x^{-1}) is an adjoint for the
// Hermitian form; the coefficient-preserving reversal is not. Pin both facts.
TEST(adjoint, exchange_law_selects_conjugate_reversal) {
    std::mt19937_64 rng(17);
    size_t reversal_failures = 0;
    for (int t = 0; t < 1000; ++t) {
        int n = 1 + 2 * static_cast<int>(rng() % 8);
        QuotientContext ctx(n);
        Poly f = random_poly(rng, n), g = random_poly(rng, n), h = random_poly(rng, n);
        Gf4 lhs = hermitian_inner_product(mulmod(f, g, ctx).to_vector(n), h.to_vector(n));
        Gf4 selected =
            hermitian_inner_product(g.to_vector(n), mulmod(adjoint(f, ctx), h, ctx).to_vector(n));
        ASSERT_EQ(lhs, selected) << "n=" << n << " f=" << f << " g=" << g << " h=" << h;
        Gf4 plain = hermitian_inner_product(
            g.to_vector(n), mulmod(adjoint(f, ctx, AdjointVariant::kReversal), h, ctx).to_vector(n));
        reversal_failures += lhs != plain;
    }
    ASSERT_EQ(kHermitianAdjoint, AdjointVariant::kConjugateReversal);
    ASSERT_GT(reversal_failures, 0u);
}

TEST(parse_coeff_string, paper_examples) {
    ASSERT_EQ(parse_coeff_string("1101"), ascending({1, 1, 0, 1}));
    ASSERT_EQ(parse_coeff_string("130^{2}21"), ascending({1, 3, 0, 0, 2, 1}));
    ASSERT_EQ(parse_coeff_string("130^221"), ascending({1, 3, 0, 0, 2, 1}));
    Poly p = parse_coeff_string("3^{2}1^{2}(31)^{2}12(21)^{2}");
    ASSERT_EQ(p, ascending({3, 3, 1, 1, 3, 1, 3, 1, 1, 2, 2, 1, 2, 1}));
    ASSERT_EQ(p.degree(), 13);
    ASSERT_EQ(parse_coeff_string("(12)"), P("12"));
    ASSERT_EQ(parse_coeff_string("1^{12}"), P("111111111111"));
}

TEST(parse_coeff_string, errors_carry_positions) {
    auto position_of = [](std::string_view s) -> int {
        try {
            parse_coeff_string(s);
        } catch (const ParseError &e) {
            return static_cast<int>(e.position());
        }
        return -1;
    };
    ASSERT_EQ(position_of(""), 0);
    ASSERT_EQ(position_of("124"), 2);
    ASSERT_GE(position_of("1^{0}"), 2);
    ASSERT_GE(position_of("1^0"), 2);
    ASSERT_GE(position_of("(12"), 0);
    ASSERT_GE(position_of("()"), 0);
    ASSERT_GE(position_of("1^{2"), 1);
    ASSERT_GE(position_of("1^"), 1);
    ASSERT_GE(position_of("x"), 0);
    ASSERT_GE(position_of("1^{99999999}"), 0);
}

TEST(format_coeff_string, examples) {
    ASSERT_EQ(format_coeff_string(ascending({1, 1, 0, 1})), "1^{2}01");
    ASSERT_EQ(format_coeff_string(Poly()), "0");
    ASSERT_EQ(format_coeff_string(ascending({1, 3, 0, 0, 2, 1})), "130^{2}21");
}

TEST(format_coeff_string, round_trip) {
    std::mt19937_64 rng(18);
    for (int t = 0; t < 1000; ++t) {
        Poly p = random_poly(rng, 1 + rng() % 60);
        if (t % 4 == 0) {
            // Long runs exercise the compressed form.
            p = p * Poly::monomial(rng() % 9) + Poly::monomial(rng() % 40, random_gf4(rng));
        }
        ASSERT_EQ(parse_coeff_string(format_coeff_string(p)), p) << format_coeff_string(p);
    }
}

TEST(factor, small_lengths) {
    auto f3 = factor_xn_minus_1(QuotientContext(3));
    ASSERT_EQ(f3.size(), 3u);
    for (const auto &f : f3) {
        ASSERT_EQ(f.degree(), 1);
    }
    std::vector<int> d5;
    for (const auto &f : factor_xn_minus_1(QuotientContext(5))) {
        d5.push_back(f.degree());
    }
    ASSERT_EQ(d5, (std::vector<int>{1, 2, 2}));
    std::vector<int> d21;
    for (const auto &f : factor_xn_minus_1(QuotientContext(21))) {
        d21.push_back(f.degree());
    }
    std::sort(d21.begin(), d21.end());
    ASSERT_EQ(d21, (std::vector<int>{1, 1, 1, 3, 3, 3, 3, 3, 3}));
}

TEST(factor, product_is_xn_minus_1_and_factors_irreducible) {
    for (int n = 1; n <= 75; n += 2) {
        QuotientContext ctx(n);
        Poly prod = Poly::constant(kOne);
        auto fs = factor_xn_minus_1(ctx);
        for (size_t i = 0; i < fs.size(); ++i) {
            ASSERT_TRUE(fs[i].is_monic());
            ASSERT_TRUE(is_irreducible(fs[i])) << n << " " << fs[i];
            for (size_t j = 0; j < i; ++j) {
                ASSERT_EQ(poly_gcd(fs[i], fs[j]), Poly::constant(kOne));
            }
            prod = prod * fs[i];
        }
        ASSERT_EQ(prod, xn_minus_1(n)) << n;
    }
}

TEST(factor, irreducibility_test_by_brute_force) {
    // Every monic polynomial of degree <= 4 checked against trial division by all lower monic degrees.
    std::vector<Poly> monics[5];
    for (int d = 1; d <= 4; ++d) {
        for (unsigned code = 0; code < (1u << (2 * d)); ++code) {
            std::vector<Gf4> c;
            for (int i = 0; i < d; ++i) {
                c.push_back(Gf4((code >> (2 * i)) & 3u));
            }
            c.push_back(kOne);
            monics[d].emplace_back(c);
        }
    }
    for (int d = 1; d <= 4; ++d) {
        for (const auto &p : monics[d]) {
            bool reducible = false;
            for (int e = 1; e * 2 <= d && !reducible; ++e) {
                for (const auto &q : monics[e]) {
                    if ((p % q).is_zero()) {
                        reducible = true;
                        break;
                    }
                }
            }
            ASSERT_EQ(is_irreducible(p), !reducible) << p;
        }
    }
}

TEST(factor, root_of_unity_is_primitive) {
    for (int n : {3, 5, 7, 21, 35, 37, 39, 63}) {
        const RootOfUnity &r = root_of_unity(n);
        ASSERT_EQ(r.power(n), r.field().one());
        for (int i = 1; i < n; ++i) {
            ASSERT_NE(r.power(i), r.field().one()) << n << " " << i;
        }
        ASSERT_EQ(r.power(-1), r.power(n - 1));
    }
}

TEST(factor, extension_field_sqrt) {
    ExtField f(5);
    std::mt19937_64 rng(19);
    for (int t = 0; t < 50; ++t) {
        Poly a = random_poly(rng, 5);
        ASSERT_EQ(f.square(f.sqrt(a)), a);
    }
}

TEST(factor, multiplicative_order) {
    ASSERT_EQ(multiplicative_order_of_4(3), 1);
    ASSERT_EQ(multiplicative_order_of_4(5), 2);
    ASSERT_EQ(multiplicative_order_of_4(21), 3);
    ASSERT_EQ(multiplicative_order_of_4(37), 18);
}
