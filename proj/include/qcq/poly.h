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

#ifndef QCQ_POLY_H
#define QCQ_POLY_H

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qcq/gf4.h"

namespace qcq {

/// Dense polynomial over GF(4) with ascending coefficients (coeffs()[i] multiplies x^i).
///
/// Always normalized: no trailing zero coefficients, so the zero polynomial has no coefficients.
class Poly {
   public:
    /// degree() of the zero polynomial; stands in for minus infinity.
    static constexpr int kZeroDegree = -1;

    Poly() = default;
    explicit Poly(std::vector<Gf4> coeffs);
    static Poly constant(Gf4 c);
    static Poly monomial(size_t degree, Gf4 c = kOne);
    /// Plain ascending digit string, no run-length notation ("1101" -> 1 + x + x^3).
    static Poly from_digits(std::string_view digits);

    int degree() const {
        return static_cast<int>(coeffs_.size()) - 1;
    }
    bool is_zero() const {
        return coeffs_.empty();
    }
    bool is_monic() const {
        return !coeffs_.empty() && coeffs_.back() == kOne;
    }
    Gf4 coeff(size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : kZero;
    }
    Gf4 leading() const {
        return coeffs_.empty() ? kZero : coeffs_.back();
    }
    const std::vector<Gf4> &coeffs() const {
        return coeffs_;
    }
    Gf4 operator()(Gf4 x) const;

    /// Coefficient vector padded to length n. Throws DimensionError if degree >= n.
    Gf4Vector to_vector(size_t n) const;
    std::string digits() const;

    friend Poly operator+(const Poly &a, const Poly &b);
    friend Poly operator-(const Poly &a, const Poly &b) {
        return a + b;
    }
    friend Poly operator*(const Poly &a, const Poly &b);
    friend Poly operator*(Gf4 c, const Poly &p);
    Poly &operator+=(const Poly &other) {
        return *this = *this + other;
    }
    bool operator==(const Poly &other) const = default;

   private:
    void normalize();
    std::vector<Gf4> coeffs_;
};

std::ostream &operator<<(std::ostream &out, const Poly &p);

struct DivMod {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division. Throws std::domain_error when the divisor is zero.
DivMod divmod(const Poly &a, const Poly &b);
Poly operator/(const Poly &a, const Poly &b);
Poly operator%(const Poly &a, const Poly &b);

/// p scaled so its leading coefficient is 1; zero stays zero.
Poly monic(const Poly &p);
/// Monic gcd by Euclid. Throws std::domain_error when both arguments are zero.
Poly poly_gcd(const Poly &a, const Poly &b);
/// True iff a divides b. Throws std::domain_error when a is zero.
bool divides(const Poly &a, const Poly &b);
/// x^deg(p) p(1/x): the coefficient list read backwards.
Poly reversed(const Poly &p);
/// Every coefficient replaced by its conjugate (square).
Poly conj_coeffs(const Poly &p);

/// The ring GF(4)[x]/(x^n - 1) for odd 1 <= n <= 255.
class QuotientContext {
   public:
    static constexpr int kMaxLength = 255;

    /// Throws UnsupportedLength unless n is odd and in range.
    explicit QuotientContext(int n);

    int n() const {
        return n_;
    }
    /// x^n - 1.
    const Poly &modulus() const {
        return modulus_;
    }
    /// Folds exponents modulo n.
    Poly reduce(const Poly &p) const;

   private:
    int n_;
    Poly modulus_;
};

Poly xn_minus_1(int n);

/// a * b reduced modulo x^n - 1.
Poly mulmod(const Poly &a, const Poly &b, const QuotientContext &ctx);

/// g_0 + g_{n-1} x + g_{n-2} x^2 + ... + g_1 x^{n-1}, i.e. g(x^{-1}) in the quotient ring.
Poly reciprocal(const Poly &g, const QuotientContext &ctx);

/// Candidate adjoints for multiplication operators under the Hermitian form.
enum class AdjointVariant {
    kReversal,           ///< g(x^{-1}) with coefficients untouched.
    kConjugateReversal,  ///< conj(g)(x^{-1}).
};

/// The variant satisfying <[f g], [h]>_h = <[g], [f* h]>_h for all f, g, h.
/// Pinned by the exchange-law property test; reversal alone fails it.
inline constexpr AdjointVariant kHermitianAdjoint = AdjointVariant::kConjugateReversal;

Poly adjoint(const Poly &f, const QuotientContext &ctx, AdjointVariant variant = kHermitianAdjoint);

/// Parses the compressed coefficient notation.
///
///   string   := atom*
///   atom     := digit | "(" digit+ ")"    then optionally  "^{" k "}" | "^" d
///
/// Digits are 0-3 in ascending order of powers; "^k" repeats the atom k >= 1 times. An unbraced
/// exponent is a single digit. Example: "130^{2}21" is 1 + w^2 x + w x^4 + x^5.
/// Throws ParseError with the character offset on malformed input.
Poly parse_coeff_string(std::string_view s);

/// Inverse of parse_coeff_string: maximal runs (length >= 2) of one digit become "d^{k}".
/// The zero polynomial formats as "0".
std::string format_coeff_string(const Poly &p);

}  // namespace qcq

#endif
