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

#ifndef QCQ_FACTOR_H
#define QCQ_FACTOR_H

#include <cstdint>
#include <vector>

#include "qcq/poly.h"

namespace qcq {

/// True iff p (degree >= 1) is irreducible over GF(4). Rabin/Ben-Or gcd test.
bool is_irreducible(const Poly &p);

/// Smallest m >= 1 with 4^m = 1 mod n (n odd).
int multiplicative_order_of_4(int n);

/// GF(4^m) as GF(4)[y]/(p(y)). The modulus is the first monic irreducible of degree m when the
/// lower coefficients are counted in base 4, so the field is reproducible run to run.
/// Elements are Poly values of degree < m.
class ExtField {
   public:
    explicit ExtField(int degree);

    int degree() const {
        return degree_;
    }
    const Poly &modulus() const {
        return modulus_;
    }
    Poly one() const {
        return Poly::constant(kOne);
    }
    Poly mul(const Poly &a, const Poly &b) const {
        return (a * b) % modulus_;
    }
    Poly square(const Poly &a) const {
        return mul(a, a);
    }
    Poly pow(const Poly &a, uint64_t e) const;
    /// a^E where E is given by its base-4 digits, most significant first.
    Poly pow_base4(const Poly &a, const std::vector<int> &digits) const;
    /// The unique b with b^2 = a (squaring is bijective in characteristic 2).
    Poly sqrt(const Poly &a) const;
    /// f(x) for f with GF(4) coefficients.
    Poly evaluate(const Poly &f, const Poly &x) const;

   private:
    int degree_;
    Poly modulus_;
};

/// A fixed primitive n-th root of unity gamma in GF(4^m), m = ord_n(4), with all its powers.
class RootOfUnity {
   public:
    explicit RootOfUnity(int n);

    int n() const {
        return n_;
    }
    const ExtField &field() const {
        return field_;
    }
    const Poly &gamma() const {
        return powers_.size() > 1 ? powers_[1] : powers_[0];
    }
    /// gamma^i, any integer i.
    const Poly &power(long long i) const;
    /// f(gamma^i).
    Poly evaluate(const Poly &f, long long i) const;

   private:
    int n_;
    ExtField field_;
    std::vector<Poly> powers_;
};

/// Shared instance per n; safe to call concurrently.
const RootOfUnity &root_of_unity(int n);

struct MinimalPolynomial {
    int coset_rep;
    Poly poly;  ///< prod over j in C_rep of (x - gamma^j)
};

/// One minimal polynomial per 4-cyclotomic coset mod n, ordered by coset representative.
const std::vector<MinimalPolynomial> &minimal_polynomials(const QuotientContext &ctx);

/// Monic irreducible factors of x^n - 1 over GF(4), ordered by coset representative.
std::vector<Poly> factor_xn_minus_1(const QuotientContext &ctx);

}  // namespace qcq

#endif
