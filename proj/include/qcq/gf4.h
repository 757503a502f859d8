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

#ifndef QCQ_GF4_H
#define QCQ_GF4_H

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcq {

/// An element of GF(4) = {0, 1, w, w^2}, stored as the 2-bit value a + 2b for a + b*w.
///
/// The digit encoding matches the usual coefficient-string convention: 2 is w and 3 is w^2 = 1 + w.
/// Addition is XOR of the encodings; characteristic 2 makes negation the identity.
class Gf4 {
   public:
    constexpr Gf4() = default;
    /// Masks to two bits. Use `from_digit` for checked conversion.
    constexpr explicit Gf4(unsigned value) : value_(static_cast<uint8_t>(value & 3u)) {
    }
    static Gf4 from_digit(int digit);

    constexpr uint8_t value() const {
        return value_;
    }
    constexpr bool is_zero() const {
        return value_ == 0;
    }
    /// Multiplicative inverse. Throws std::domain_error on zero.
    Gf4 inverse() const;

    friend constexpr Gf4 operator+(Gf4 a, Gf4 b) {
        return Gf4(a.value_ ^ b.value_);
    }
    friend constexpr Gf4 operator-(Gf4 a, Gf4 b) {
        return a + b;
    }
    friend constexpr Gf4 operator-(Gf4 a) {
        return a;
    }
    friend constexpr Gf4 operator*(Gf4 a, Gf4 b) {
        return Gf4(kMulTable[a.value_][b.value_]);
    }
    constexpr Gf4 &operator+=(Gf4 other) {
        return *this = *this + other;
    }
    constexpr Gf4 &operator*=(Gf4 other) {
        return *this = *this * other;
    }
    friend constexpr bool operator==(Gf4, Gf4) = default;

   private:
    static constexpr std::array<std::array<uint8_t, 4>, 4> kMulTable{{
        {0, 0, 0, 0},
        {0, 1, 2, 3},
        {0, 2, 3, 1},
        {0, 3, 1, 2},
    }};
    uint8_t value_ = 0;
};

inline constexpr Gf4 kZero{0};
inline constexpr Gf4 kOne{1};
inline constexpr Gf4 kOmega{2};
inline constexpr Gf4 kOmegaSq{3};

/// Frobenius conjugation x -> x^2. An involution fixing exactly {0, 1}.
constexpr Gf4 conj(Gf4 a) {
    return a * a;
}

std::ostream &operator<<(std::ostream &out, Gf4 a);

/// A vector over GF(4) packed into two bit planes (low and high bit of each coordinate).
///
/// Addition is a pair of word XORs; the weight is popcount(lo | hi). Coordinates past `size()`
/// in the last word are kept zero.
class Gf4Vector {
   public:
    Gf4Vector() = default;
    explicit Gf4Vector(size_t size);
    static Gf4Vector from_values(std::span<const Gf4> values);
    /// Parses a string of digits 0-3 ("1021" -> (1, 0, w, 1)).
    static Gf4Vector from_digits(std::string_view digits);

    size_t size() const {
        return size_;
    }
    Gf4 operator[](size_t index) const {
        uint64_t bit = uint64_t{1} << (index & 63);
        size_t word = index >> 6;
        return Gf4(((lo_[word] & bit) ? 1u : 0u) | ((hi_[word] & bit) ? 2u : 0u));
    }
    void set(size_t index, Gf4 value);

    size_t weight() const;
    bool is_zero() const;

    Gf4Vector &operator+=(const Gf4Vector &other);
    /// this += scale * other.
    void add_scaled(const Gf4Vector &other, Gf4 scale);
    /// Incremental-weight hook: this += scale * other, returning the new weight.
    size_t add_scaled_and_weigh(const Gf4Vector &other, Gf4 scale);
    Gf4Vector scaled(Gf4 scale) const;
    Gf4Vector conjugated() const;

    std::span<const uint64_t> lo_words() const {
        return lo_;
    }
    std::span<const uint64_t> hi_words() const {
        return hi_;
    }
    std::vector<Gf4> values() const;
    std::string digits() const;

    bool operator==(const Gf4Vector &other) const = default;

   private:
    size_t size_ = 0;
    std::vector<uint64_t> lo_;
    std::vector<uint64_t> hi_;
};

Gf4Vector operator+(Gf4Vector a, const Gf4Vector &b);
Gf4Vector operator*(Gf4 scale, const Gf4Vector &v);
std::ostream &operator<<(std::ostream &out, const Gf4Vector &v);

/// sum_i u_i * conj(v_i). Satisfies <u, v> = conj(<v, u>). Throws DimensionError on length mismatch.
Gf4 hermitian_inner_product(const Gf4Vector &u, const Gf4Vector &v);

/// Dense matrix over GF(4); each row is a packed Gf4Vector of length `cols()`.
class Gf4Matrix {
   public:
    Gf4Matrix() = default;
    Gf4Matrix(size_t rows, size_t cols);
    /// All rows must have length `cols`.
    Gf4Matrix(std::vector<Gf4Vector> rows, size_t cols);

    size_t rows() const {
        return rows_.size();
    }
    size_t cols() const {
        return cols_;
    }
    const Gf4Vector &row(size_t r) const {
        return rows_[r];
    }
    Gf4Vector &row(size_t r) {
        return rows_[r];
    }
    const std::vector<Gf4Vector> &row_vectors() const {
        return rows_;
    }
    Gf4 operator()(size_t r, size_t c) const {
        return rows_[r][c];
    }
    void set(size_t r, size_t c, Gf4 value) {
        rows_[r].set(c, value);
    }
    void append_row(Gf4Vector row);
    /// Vertical concatenation; widths must agree.
    void append_rows(const Gf4Matrix &other);
    Gf4Matrix conjugated() const;

    bool operator==(const Gf4Matrix &other) const = default;

   private:
    std::vector<Gf4Vector> rows_;
    size_t cols_ = 0;
};

std::ostream &operator<<(std::ostream &out, const Gf4Matrix &m);

/// Reduced row echelon form. The first `rank` rows of `reduced` are nonzero, row i has a 1 at
/// column `pivots[i]`, and every pivot column is zero outside its row.
struct RowEchelon {
    Gf4Matrix reduced;
    size_t rank = 0;
    std::vector<size_t> pivots;
};

RowEchelon row_reduce(const Gf4Matrix &m);
/// Like `row_reduce`, but pivot columns are chosen greedily in `column_order` (a permutation or a
/// subset of the columns). Columns absent from the order are never pivots.
RowEchelon row_reduce(const Gf4Matrix &m, std::span<const size_t> column_order);
size_t rank(const Gf4Matrix &m);

/// True iff v lies in the row space described by `echelon`.
bool row_space_contains(const RowEchelon &echelon, const Gf4Vector &v);

/// Basis of {x : M x^T = 0}, one basis vector per row.
Gf4Matrix null_space(const Gf4Matrix &m);
/// Basis of the Hermitian dual {v : <g, v>_h = 0 for every row g of the generator}.
Gf4Matrix hermitian_dual_basis(const Gf4Matrix &generator);

}  // namespace qcq

#endif
