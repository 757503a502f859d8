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

#ifndef QCQ_SRC_PACKED_H
#define QCQ_SRC_PACKED_H

// Fixed-width GF(4) words for the enumeration kernels. W is the number of 64-bit words per plane;
// all kernels are instantiated for W in {1, 2, 4, 8}, which covers lengths up to 512.

#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "qcq/gf4.h"

namespace qcq::internal {

template <size_t W>
struct Packed {
    uint64_t lo[W] = {};
    uint64_t hi[W] = {};

    Packed &operator^=(const Packed &o) {
        for (size_t i = 0; i < W; ++i) {
            lo[i] ^= o.lo[i];
            hi[i] ^= o.hi[i];
        }
        return *this;
    }
    friend Packed operator^(Packed a, const Packed &b) {
        a ^= b;
        return a;
    }
    size_t weight() const {
        size_t w = 0;
        for (size_t i = 0; i < W; ++i) {
            w += std::popcount(lo[i] | hi[i]);
        }
        return w;
    }
    Gf4 get(size_t i) const {
        uint64_t bit = uint64_t{1} << (i & 63);
        return Gf4(((lo[i >> 6] & bit) ? 1u : 0u) | ((hi[i >> 6] & bit) ? 2u : 0u));
    }
    void set(size_t i, Gf4 v) {
        uint64_t bit = uint64_t{1} << (i & 63);
        lo[i >> 6] = (v.value() & 1) ? (lo[i >> 6] | bit) : (lo[i >> 6] & ~bit);
        hi[i >> 6] = (v.value() & 2) ? (hi[i >> 6] | bit) : (hi[i >> 6] & ~bit);
    }
    /// Multiplication by omega: (lo, hi) -> (hi, lo ^ hi).
    Packed times_omega() const {
        Packed r;
        for (size_t i = 0; i < W; ++i) {
            r.lo[i] = hi[i];
            r.hi[i] = lo[i] ^ hi[i];
        }
        return r;
    }
};

/// Coordinates `columns` of v, in that order, packed into positions 0, 1, ....
template <size_t W>
Packed<W> gather(const Gf4Vector &v, const std::vector<size_t> &columns) {
    Packed<W> p;
    for (size_t i = 0; i < columns.size(); ++i) {
        p.set(i, v[columns[i]]);
    }
    return p;
}

template <size_t W>
Packed<W> pack(const Gf4Vector &v) {
    Packed<W> p;
    auto lo = v.lo_words();
    auto hi = v.hi_words();
    for (size_t i = 0; i < lo.size() && i < W; ++i) {
        p.lo[i] = lo[i];
        p.hi[i] = hi[i];
    }
    return p;
}

template <size_t W>
Gf4Vector unpack(const Packed<W> &p, size_t n) {
    Gf4Vector v(n);
    for (size_t i = 0; i < n; ++i) {
        v.set(i, p.get(i));
    }
    return v;
}

/// The three nonzero multiples of each row: index 0 -> 1, 1 -> omega, 2 -> omega^2.
template <size_t W>
struct ScaledRows {
    std::vector<Packed<W>> by[3];

    void push_back(const Packed<W> &row) {
        by[0].push_back(row);
        by[1].push_back(row.times_omega());
        by[2].push_back(by[1].back().times_omega());
    }
    size_t size() const {
        return by[0].size();
    }
};

inline Gf4 scalar_of(int index) {
    return Gf4(static_cast<unsigned>(index + 1));
}

/// Calls body<W>() with the smallest supported W holding `bits` coordinates.
template <typename Body>
decltype(auto) with_width(size_t bits, Body &&body) {
    if (bits <= 64) {
        return body.template operator()<1>();
    }
    if (bits <= 128) {
        return body.template operator()<2>();
    }
    if (bits <= 256) {
        return body.template operator()<4>();
    }
    return body.template operator()<8>();
}

inline unsigned resolve_workers(unsigned requested) {
    if (requested != 0) {
        return requested;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs f(item, worker) for every item in [0, count). Items are handed out in increasing order.
/// The first exception thrown by any item is rethrown after all workers stop.
template <typename F>
void parallel_items(size_t count, unsigned workers, F &&f) {
    workers = static_cast<unsigned>(std::min<size_t>(workers, count));
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) {
            f(i, 0u);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < workers; ++t) {
        threads.emplace_back([&, t] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= count || failed.load()) {
                    return;
                }
                try {
                    f(i, t);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                    failed = true;
                }
            }
        });
    }
    for (auto &t : threads) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace qcq::internal

#endif
