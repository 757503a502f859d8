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

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "qcq/errors.h"

namespace qcq {

namespace {

constexpr size_t kMaxParsedLength = size_t{1} << 16;

}  // namespace

Poly::Poly(std::vector<Gf4> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Poly Poly::constant(Gf4 c) {
    return Poly(std::vector<Gf4>{c});
}

Poly Poly::monomial(size_t degree, Gf4 c) {
    std::vector<Gf4> coeffs(degree + 1, kZero);
    coeffs[degree] = c;
    return Poly(std::move(coeffs));
}

Poly Poly::from_digits(std::string_view digits) {
    std::vector<Gf4> coeffs;
    coeffs.reserve(digits.size());
    for (char ch : digits) {
        coeffs.push_back(Gf4::from_digit(ch - '0'));
    }
    return Poly(std::move(coeffs));
}

Gf4 Poly::operator()(Gf4 x) const {
    Gf4 acc = kZero;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + coeffs_[i];
    }
    return acc;
}

Gf4Vector Poly::to_vector(size_t n) const {
    if (degree() >= static_cast<int>(n)) {
        throw DimensionError("polynomial of degree " + std::to_string(degree()) + " does not fit in length " +
                             std::to_string(n));
    }
    Gf4Vector v(n);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        v.set(i, coeffs_[i]);
    }
    return v;
}

std::string Poly::digits() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::string out;
    for (Gf4 c : coeffs_) {
        out.push_back(static_cast<char>('0' + c.value()));
    }
    return out;
}

Poly operator+(const Poly &a, const Poly &b) {
    std::vector<Gf4> out(std::max(a.coeffs_.size(), b.coeffs_.size()), kZero);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        out[i] = a.coeffs_[i];
    }
    for (size_t i = 0; i < b.coeffs_.size(); ++i) {
        out[i] += b.coeffs_[i];
    }
    return Poly(std::move(out));
}

Poly operator*(const Poly &a, const Poly &b) {
    if (a.is_zero() || b.is_zero()) {
        return Poly();
    }
    std::vector<Gf4> out(a.coeffs_.size() + b.coeffs_.size() - 1, kZero);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Poly(std::move(out));
}

Poly operator*(Gf4 c, const Poly &p) {
    std::vector<Gf4> out(p.coeffs_);
    for (auto &x : out) {
        x *= c;
    }
    return Poly(std::move(out));
}

std::ostream &operator<<(std::ostream &out, const Poly &p) {
    return out << format_coeff_string(p);
}

DivMod divmod(const Poly &a, const Poly &b) {
    if (b.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    std::vector<Gf4> rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) {
        return {Poly(), a};
    }
    std::vector<Gf4> quot(a.degree() - db + 1, kZero);
    Gf4 lead_inv = b.leading().inverse();
    for (int i = a.degree(); i >= db; --i) {
        Gf4 c = rem[i] * lead_inv;
        if (c.is_zero()) {
            continue;
        }
        quot[i - db] = c;
        for (int j = 0; j <= db; ++j) {
            rem[i - db + j] += c * b.coeff(j);
        }
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly operator/(const Poly &a, const Poly &b) {
    return divmod(a, b).quotient;
}

Poly operator%(const Poly &a, const Poly &b) {
    return divmod(a, b).remainder;
}

Poly monic(const Poly &p) {
    if (p.is_zero()) {
        return p;
    }
    return p.leading().inverse() * p;
}

Poly poly_gcd(const Poly &a, const Poly &b) {
    if (a.is_zero() && b.is_zero()) {
        throw std::domain_error("gcd(0, 0) is undefined");
    }
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

bool divides(const Poly &a, const Poly &b) {
    if (a.is_zero()) {
        throw std::domain_error("divisibility by the zero polynomial");
    }
    return (b % a).is_zero();
}

Poly reversed(const Poly &p) {
    std::vector<Gf4> out(p.coeffs().rbegin(), p.coeffs().rend());
    return Poly(std::move(out));
}

Poly conj_coeffs(const Poly &p) {
    std::vector<Gf4> out = p.coeffs();
    for (auto &x : out) {
        x = conj(x);
    }
    return Poly(std::move(out));
}

Poly xn_minus_1(int n) {
    Poly m = Poly::monomial(static_cast<size_t>(n));
    return m + Poly::constant(kOne);
}

QuotientContext::QuotientContext(int n) : n_(n) {
    if (n < 1 || n > kMaxLength || n % 2 == 0) {
        throw UnsupportedLength("circulant size must be odd and in 1.." + std::to_string(kMaxLength) + ", got " +
                                std::to_string(n));
    }
    modulus_ = xn_minus_1(n);
}

Poly QuotientContext::reduce(const Poly &p) const {
    if (p.degree() < n_) {
        return p;
    }
    std::vector<Gf4> out(n_, kZero);
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
        out[i % n_] += p.coeffs()[i];
    }
    return Poly(std::move(out));
}

Poly mulmod(const Poly &a, const Poly &b, const QuotientContext &ctx) {
    return ctx.reduce(ctx.reduce(a) * ctx.reduce(b));
}

Poly reciprocal(const Poly &g, const QuotientContext &ctx) {
    Poly r = ctx.reduce(g);
    int n = ctx.n();
    std::vector<Gf4> out(n, kZero);
    for (int i = 0; i <= r.degree(); ++i) {
        out[(n - i) % n] = r.coeff(i);
    }
    return Poly(std::move(out));
}

Poly adjoint(const Poly &f, const QuotientContext &ctx, AdjointVariant variant) {
    Poly r = reciprocal(f, ctx);
    return variant == AdjointVariant::kConjugateReversal ? conj_coeffs(r) : r;
}

Poly parse_coeff_string(std::string_view s) {
    if (s.empty()) {
        throw ParseError("empty coefficient string", 0);
    }
    std::vector<Gf4> coeffs;
    size_t pos = 0;
    auto digit_at = [&](size_t p) {
        char ch = s[p];
        if (ch < '0' || ch > '3') {
            throw ParseError(std::string("expected a coefficient digit 0-3, found '") + ch + "'", p);
        }
        return Gf4(static_cast<unsigned>(ch - '0'));
    };
    while (pos < s.size()) {
        std::vector<Gf4> atom;
        if (s[pos] == '(') {
            size_t open = pos++;
            while (pos < s.size() && s[pos] != ')') {
                atom.push_back(digit_at(pos));
                ++pos;
            }
            if (pos == s.size()) {
                throw ParseError("unclosed '('", open);
            }
            if (atom.empty()) {
                throw ParseError("empty group '()'", open);
            }
            ++pos;
        } else {
            atom.push_back(digit_at(pos));
            ++pos;
        }
        size_t repeat = 1;
        if (pos < s.size() && s[pos] == '^') {
            size_t caret = pos++;
            if (pos == s.size()) {
                throw ParseError("missing exponent after '^'", caret);
            }
            if (s[pos] == '{') {
                size_t start = ++pos;
                size_t value = 0;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                    value = value * 10 + static_cast<size_t>(s[pos] - '0');
                    if (value > kMaxParsedLength) {
                        throw ParseError("repeat count too large", start);
                    }
                    ++pos;
                }
                if (pos == start) {
                    throw ParseError("expected a repeat count inside '^{...}'", start);
                }
                if (pos == s.size() || s[pos] != '}') {
                    throw ParseError("expected '}'", pos);
                }
                ++pos;
                repeat = value;
                if (repeat == 0) {
                    throw ParseError("repeat count must be at least 1", start);
                }
            } else {
                if (!std::isdigit(static_cast<unsigned char>(s[pos]))) {
                    throw ParseError("expected a repeat count after '^'", pos);
                }
                repeat = static_cast<size_t>(s[pos] - '0');
                if (repeat == 0) {
                    throw ParseError("repeat count must be at least 1", pos);
                }
                ++pos;
            }
        }
        if (coeffs.size() + atom.size() * repeat > kMaxParsedLength) {
            throw ParseError("expanded polynomial too long", pos);
        }
        for (size_t r = 0; r < repeat; ++r) {
            coeffs.insert(coeffs.end(), atom.begin(), atom.end());
        }
    }
    return Poly(std::move(coeffs));
}

std::string format_coeff_string(const Poly &p) {
    if (p.is_zero()) {
        return "0";
    }
    const auto &c = p.coeffs();
    std::string out;
    for (size_t i = 0; i < c.size();) {
        size_t j = i;
        while (j < c.size() && c[j] == c[i]) {
            ++j;
        }
        out.push_back(static_cast<char>('0' + c[i].value()));
        if (j - i >= 2) {
            out += "^{" + std::to_string(j - i) + "}";
        }
        i = j;
    }
    return out;
}

}  // namespace qcq
