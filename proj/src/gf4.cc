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

#include "qcq/gf4.h"

#include <bit>
#include <ostream>
#include <stdexcept>

#include "qcq/errors.h"

namespace qcq {

namespace {

size_t word_count(size_t size) {
    return (size + 63) / 64;
}

// (lo, hi) planes of scale * x for every coordinate x at once.
void scale_planes(uint64_t lo, uint64_t hi, Gf4 scale, uint64_t &out_lo, uint64_t &out_hi) {
    switch (scale.value()) {
        case 0:
            out_lo = 0;
            out_hi = 0;
            break;
        case 1:
            out_lo = lo;
            out_hi = hi;
            break;
        case 2:
            out_lo = hi;
            out_hi = lo ^ hi;
            break;
        default:
            out_lo = lo ^ hi;
            out_hi = lo;
            break;
    }
}

}  // namespace

Gf4 Gf4::from_digit(int digit) {
    if (digit < 0 || digit > 3) {
        throw std::out_of_range("GF(4) digit must be in 0..3, got " + std::to_string(digit));
    }
    return Gf4(static_cast<unsigned>(digit));
}

Gf4 Gf4::inverse() const {
    static constexpr std::array<uint8_t, 4> kInv{0, 1, 3, 2};
    if (is_zero()) {
        throw std::domain_error("inverse of zero in GF(4)");
    }
    return Gf4(kInv[value_]);
}

std::ostream &operator<<(std::ostream &out, Gf4 a) {
    return out << static_cast<int>(a.value());
}

Gf4Vector::Gf4Vector(size_t size) : size_(size), lo_(word_count(size), 0), hi_(word_count(size), 0) {
}

Gf4Vector Gf4Vector::from_values(std::span<const Gf4> values) {
    Gf4Vector v(values.size());
    for (size_t i = 0; i < values.size(); ++i) {
        v.set(i, values[i]);
    }
    return v;
}

Gf4Vector Gf4Vector::from_digits(std::string_view digits) {
    Gf4Vector v(digits.size());
    for (size_t i = 0; i < digits.size(); ++i) {
        v.set(i, Gf4::from_digit(digits[i] - '0'));
    }
    return v;
}

void Gf4Vector::set(size_t index, Gf4 value) {
    uint64_t bit = uint64_t{1} << (index & 63);
    size_t word = index >> 6;
    lo_[word] = (value.value() & 1) ? (lo_[word] | bit) : (lo_[word] & ~bit);
    hi_[word] = (value.value() & 2) ? (hi_[word] | bit) : (hi_[word] & ~bit);
}

size_t Gf4Vector::weight() const {
    size_t w = 0;
    for (size_t i = 0; i < lo_.size(); ++i) {
        w += std::popcount(lo_[i] | hi_[i]);
    }
    return w;
}

bool Gf4Vector::is_zero() const {
    for (size_t i = 0; i < lo_.size(); ++i) {
        if (lo_[i] | hi_[i]) {
            return false;
        }
    }
    return true;
}

Gf4Vector &Gf4Vector::operator+=(const Gf4Vector &other) {
    if (other.size_ != size_) {
        throw DimensionError("vector length mismatch in addition");
    }
    for (size_t i = 0; i < lo_.size(); ++i) {
        lo_[i] ^= other.lo_[i];
        hi_[i] ^= other.hi_[i];
    }
    return *this;
}

void Gf4Vector::add_scaled(const Gf4Vector &other, Gf4 scale) {
    if (other.size_ != size_) {
        throw DimensionError("vector length mismatch in addition");
    }
    for (size_t i = 0; i < lo_.size(); ++i) {
        uint64_t lo, hi;
        scale_planes(other.lo_[i], other.hi_[i], scale, lo, hi);
        lo_[i] ^= lo;
        hi_[i] ^= hi;
    }
}

size_t Gf4Vector::add_scaled_and_weigh(const Gf4Vector &other, Gf4 scale) {
    if (other.size_ != size_) {
        throw DimensionError("vector length mismatch in addition");
    }
    size_t w = 0;
    for (size_t i = 0; i < lo_.size(); ++i) {
        uint64_t lo, hi;
        scale_planes(other.lo_[i], other.hi_[i], scale, lo, hi);
        lo_[i] ^= lo;
        hi_[i] ^= hi;
        w += std::popcount(lo_[i] | hi_[i]);
    }
    return w;
}

Gf4Vector Gf4Vector::scaled(Gf4 scale) const {
    Gf4Vector out(size_);
    for (size_t i = 0; i < lo_.size(); ++i) {
        scale_planes(lo_[i], hi_[i], scale, out.lo_[i], out.hi_[i]);
    }
    return out;
}

Gf4Vector Gf4Vector::conjugated() const {
    Gf4Vector out(size_);
    for (size_t i = 0; i < lo_.size(); ++i) {
        out.lo_[i] = lo_[i] ^ hi_[i];
        out.hi_[i] = hi_[i];
    }
    return out;
}

std::vector<Gf4> Gf4Vector::values() const {
    std::vector<Gf4> out(size_);
    for (size_t i = 0; i < size_; ++i) {
        out[i] = (*this)[i];
    }
    return out;
}

std::string Gf4Vector::digits() const {
    std::string out(size_, '0');
    for (size_t i = 0; i < size_; ++i) {
        out[i] = static_cast<char>('0' + (*this)[i].value());
    }
    return out;
}

Gf4Vector operator+(Gf4Vector a, const Gf4Vector &b) {
    a += b;
    return a;
}

Gf4Vector operator*(Gf4 scale, const Gf4Vector &v) {
    return v.scaled(scale);
}

std::ostream &operator<<(std::ostream &out, const Gf4Vector &v) {
    return out << v.digits();
}

Gf4 hermitian_inner_product(const Gf4Vector &u, const Gf4Vector &v) {
    if (u.size() != v.size()) {
        throw DimensionError("Hermitian inner product of vectors with lengths " + std::to_string(u.size()) +
                             " and " + std::to_string(v.size()));
    }
    // (a0 + a1 w)(c0 + c1 w) = (a0 c0 + a1 c1) + (a0 c1 + a1 c0 + a1 c1) w, with c = conj(v).
    auto ulo = u.lo_words(), uhi = u.hi_words(), vlo = v.lo_words(), vhi = v.hi_words();
    unsigned lo_parity = 0, hi_parity = 0;
    for (size_t i = 0; i < ulo.size(); ++i) {
        uint64_t c0 = vlo[i] ^ vhi[i];
        uint64_t c1 = vhi[i];
        lo_parity ^= std::popcount((ulo[i] & c0) ^ (uhi[i] & c1)) & 1;
        hi_parity ^= std::popcount((ulo[i] & c1) ^ (uhi[i] & c0) ^ (uhi[i] & c1)) & 1;
    }
    return Gf4(lo_parity | (hi_parity << 1));
}

Gf4Matrix::Gf4Matrix(size_t rows, size_t cols) : rows_(rows, Gf4Vector(cols)), cols_(cols) {
}

Gf4Matrix::Gf4Matrix(std::vector<Gf4Vector> rows, size_t cols) : rows_(std::move(rows)), cols_(cols) {
    for (const auto &r : rows_) {
        if (r.size() != cols_) {
            throw DimensionError("matrix row of length " + std::to_string(r.size()) + " in a matrix with " +
                                 std::to_string(cols_) + " columns");
        }
    }
}

void Gf4Matrix::append_row(Gf4Vector row) {
    if (row.size() != cols_) {
        throw DimensionError("appended row has the wrong length");
    }
    rows_.push_back(std::move(row));
}

void Gf4Matrix::append_rows(const Gf4Matrix &other) {
    if (other.cols_ != cols_) {
        throw DimensionError("stacked matrices have different widths");
    }
    rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
}

Gf4Matrix Gf4Matrix::conjugated() const {
    Gf4Matrix out;
    out.cols_ = cols_;
    out.rows_.reserve(rows_.size());
    for (const auto &r : rows_) {
        out.rows_.push_back(r.conjugated());
    }
    return out;
}

std::ostream &operator<<(std::ostream &out, const Gf4Matrix &m) {
    for (size_t r = 0; r < m.rows(); ++r) {
        out << m.row(r) << '\n';
    }
    return out;
}

RowEchelon row_reduce(const Gf4Matrix &m, std::span<const size_t> column_order) {
    RowEchelon result{m, 0, {}};
    Gf4Matrix &a = result.reduced;
    size_t rank = 0;
    for (size_t col : column_order) {
        if (rank == a.rows()) {
            break;
        }
        size_t pivot = rank;
        while (pivot < a.rows() && a(pivot, col).is_zero()) {
            ++pivot;
        }
        if (pivot == a.rows()) {
            continue;
        }
        std::swap(a.row(pivot), a.row(rank));
        a.row(rank) = a.row(rank).scaled(a(rank, col).inverse());
        for (size_t r = 0; r < a.rows(); ++r) {
            if (r != rank) {
                Gf4 factor = a(r, col);
                if (!factor.is_zero()) {
                    a.row(r).add_scaled(a.row(rank), factor);
                }
            }
        }
        result.pivots.push_back(col);
        ++rank;
    }
    result.rank = rank;
    return result;
}

RowEchelon row_reduce(const Gf4Matrix &m) {
    std::vector<size_t> order(m.cols());
    for (size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    return row_reduce(m, order);
}

size_t rank(const Gf4Matrix &m) {
    return row_reduce(m).rank;
}

bool row_space_contains(const RowEchelon &echelon, const Gf4Vector &v) {
    if (v.size() != echelon.reduced.cols()) {
        throw DimensionError("membership test with a vector of the wrong length");
    }
    Gf4Vector residue = v;
    for (size_t i = 0; i < echelon.rank; ++i) {
        Gf4 c = residue[echelon.pivots[i]];
        if (!c.is_zero()) {
            residue.add_scaled(echelon.reduced.row(i), c);
        }
    }
    return residue.is_zero();
}

Gf4Matrix null_space(const Gf4Matrix &m) {
    RowEchelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : e.pivots) {
        is_pivot[p] = true;
    }
    Gf4Matrix basis(0, m.cols());
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        Gf4Vector v(m.cols());
        v.set(f, kOne);
        // x_p = -R[i][f] = R[i][f] in characteristic 2.
        for (size_t i = 0; i < e.rank; ++i) {
            v.set(e.pivots[i], e.reduced(i, f));
        }
        basis.append_row(std::move(v));
    }
    return basis;
}

Gf4Matrix hermitian_dual_basis(const Gf4Matrix &generator) {
    // sum g_j conj(v_j) = 0  <=>  sum conj(g_j) v_j = 0.
    return null_space(generator.conjugated());
}

}  // namespace qcq
