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

#include "qcq/factor.h"

#include <map>
#include <memory>
#include <mutex>

#include "qcq/cosets.h"
#include "qcq/errors.h"

namespace qcq {

namespace {

std::vector<int> prime_factors(int n) {
    std::vector<int> out;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) {
                n /= p;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

// Base-4 digits (most significant first) of (4^m - 1) / n.
std::vector<int> exponent_digits(int m, int n) {
    std::vector<int> quotient;
    int remainder = 0;
    for (int i = 0; i < m; ++i) {
        int cur = remainder * 4 + 3;
        quotient.push_back(cur / n);
        remainder = cur % n;
    }
    if (remainder != 0) {
        throw InvariantViolation("n does not divide 4^m - 1");
    }
    return quotient;
}

// Advances a base-4 counter stored in `digits` (least significant first). False on wraparound.
bool increment(std::vector<Gf4> &digits) {
    for (auto &d : digits) {
        if (d.value() < 3) {
            d = Gf4(d.value() + 1u);
            return true;
        }
        d = kZero;
    }
    return false;
}

}  // namespace

bool is_irreducible(const Poly &p) {
    int m = p.degree();
    if (m < 1) {
        return false;
    }
    if (m == 1) {
        return true;
    }
    Poly y = Poly::monomial(1);
    Poly t = y;
    for (int i = 1; i <= m / 2; ++i) {
        t = (t * t) % p;
        t = (t * t) % p;
        if (poly_gcd(t + y, p).degree() > 0) {
            return false;
        }
    }
    return true;
}

int multiplicative_order_of_4(int n) {
    if (n < 1 || n % 2 == 0) {
        throw UnsupportedLength("order of 4 needs an odd modulus");
    }
    if (n == 1) {
        return 1;
    }
    int m = 1;
    long long x = 4 % n;
    while (x != 1) {
        x = (x * 4) % n;
        ++m;
    }
    return m;
}

ExtField::ExtField(int degree) : degree_(degree) {
    if (degree < 1) {
        throw std::invalid_argument("extension degree must be positive");
    }
    std::vector<Gf4> lower(degree, kZero);
    do {
        if (lower[0].is_zero()) {
            continue;
        }
        std::vector<Gf4> coeffs(lower);
        coeffs.push_back(kOne);
        Poly candidate(std::move(coeffs));
        if (is_irreducible(candidate)) {
            modulus_ = std::move(candidate);
            return;
        }
    } while (increment(lower));
    throw InvariantViolation("no irreducible polynomial found");
}

Poly ExtField::pow(const Poly &a, uint64_t e) const {
    Poly result = one();
    Poly base = a % modulus_;
    while (e > 0) {
        if (e & 1) {
            result = mul(result, base);
        }
        base = square(base);
        e >>= 1;
    }
    return result;
}

Poly ExtField::pow_base4(const Poly &a, const std::vector<int> &digits) const {
    Poly powers[4] = {one(), a % modulus_, Poly(), Poly()};
    powers[2] = square(powers[1]);
    powers[3] = mul(powers[2], powers[1]);
    Poly result = one();
    for (int d : digits) {
        result = square(square(result));
        if (d != 0) {
            result = mul(result, powers[d]);
        }
    }
    return result;
}

Poly ExtField::sqrt(const Poly &a) const {
    // Frobenius x -> x^2 has order 2m on GF(2^{2m}); its inverse is x -> x^{2^{2m-1}}.
    Poly r = a % modulus_;
    for (int i = 0; i < 2 * degree_ - 1; ++i) {
        r = square(r);
    }
    return r;
}

Poly ExtField::evaluate(const Poly &f, const Poly &x) const {
    Poly acc;
    for (size_t i = f.coeffs().size(); i-- > 0;) {
        acc = mul(acc, x) + Poly::constant(f.coeffs()[i]);
    }
    return acc;
}

RootOfUnity::RootOfUnity(int n) : n_(n), field_(multiplicative_order_of_4(n)) {
    int m = field_.degree();
    std::vector<int> digits = exponent_digits(m, n);
    std::vector<int> primes = prime_factors(n);
    Poly gamma;
    bool found = false;
    std::vector<Gf4> candidate(m, kZero);
    while (!found && increment(candidate)) {
        Poly alpha(candidate);
        Poly g = field_.pow_base4(alpha, digits);
        bool primitive = true;
        for (int q : primes) {
            if (field_.pow(g, static_cast<uint64_t>(n / q)) == field_.one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gamma = std::move(g);
            found = true;
        }
    }
    if (!found) {
        throw InvariantViolation("no primitive root of unity of order " + std::to_string(n));
    }
    if (field_.pow(gamma, static_cast<uint64_t>(n)) != field_.one()) {
        throw InvariantViolation("root of unity has the wrong order");
    }
    powers_.reserve(n);
    Poly x = field_.one();
    for (int i = 0; i < n; ++i) {
        powers_.push_back(x);
        x = field_.mul(x, gamma);
    }
}

const Poly &RootOfUnity::power(long long i) const {
    long long r = i % n_;
    if (r < 0) {
        r += n_;
    }
    return powers_[static_cast<size_t>(r)];
}

Poly RootOfUnity::evaluate(const Poly &f, long long i) const {
    return field_.evaluate(f, power(i));
}

const RootOfUnity &root_of_unity(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<RootOfUnity>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto &slot = cache[n];
    if (!slot) {
        slot = std::make_unique<RootOfUnity>(n);
    }
    return *slot;
}

const std::vector<MinimalPolynomial> &minimal_polynomials(const QuotientContext &ctx) {
    static std::mutex mu;
    static std::map<int, std::vector<MinimalPolynomial>> cache;
    const RootOfUnity &roots = root_of_unity(ctx.n());
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(ctx.n());
    if (it != cache.end()) {
        return it->second;
    }
    const ExtField &field = roots.field();
    std::vector<MinimalPolynomial> out;
    for (const Coset &c : all_cosets(ctx.n())) {
        // Coefficients live in GF(4^m) while multiplying; they must land back in GF(4).
        std::vector<Poly> acc{field.one()};
        for (int j : c.members) {
            const Poly &root = roots.power(j);
            std::vector<Poly> next(acc.size() + 1);
            for (size_t k = 0; k < acc.size(); ++k) {
                next[k + 1] = next[k + 1] + acc[k];
                next[k] = next[k] + field.mul(acc[k], root);
            }
            acc = std::move(next);
        }
        std::vector<Gf4> coeffs;
        for (const Poly &a : acc) {
            if (a.degree() > 0) {
                throw InvariantViolation("minimal polynomial has a coefficient outside GF(4)");
            }
            coeffs.push_back(a.coeff(0));
        }
        out.push_back({c.rep, Poly(std::move(coeffs))});
    }
    return cache.emplace(ctx.n(), std::move(out)).first->second;
}

std::vector<Poly> factor_xn_minus_1(const QuotientContext &ctx) {
    std::vector<Poly> out;
    for (const auto &mp : minimal_polynomials(ctx)) {
        out.push_back(mp.poly);
    }
    return out;
}

}  // namespace qcq
