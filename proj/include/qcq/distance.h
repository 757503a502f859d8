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

#ifndef QCQ_DISTANCE_H
#define QCQ_DISTANCE_H

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qcq/qc2.h"

namespace qcq {

enum class DistanceKind { kExact, kUpperBound, kLowerBound };
enum class DistanceMethod { kBruteForce, kBrouwerZimmermann, kLowWeightSearch };

const char *to_string(DistanceKind kind);
const char *to_string(DistanceMethod method);

struct WorkStats {
    /// Codewords whose weight was evaluated (scalar multiples counted individually).
    uint64_t codewords = 0;
    /// Information sets (systematic generator matrices) used.
    uint64_t information_sets = 0;
    /// Largest message weight fully enumerated over the first information set.
    int message_weight = 0;
    double elapsed_seconds = 0;
};

/// Minimum distance bracket. The true distance d satisfies lower <= d <= upper, and `witness`
/// (when present) is a codeword of weight `upper`.
struct DistanceResult {
    size_t lower = 0;
    size_t upper = 0;
    DistanceKind kind = DistanceKind::kExact;
    DistanceMethod method = DistanceMethod::kBruteForce;
    WorkStats stats;
    std::optional<Gf4Vector> witness;

    bool exact() const {
        return kind == DistanceKind::kExact;
    }
    /// The exact distance, or the bound named by `kind`.
    size_t value() const {
        return kind == DistanceKind::kLowerBound ? lower : upper;
    }
};

struct DistanceOptions {
    /// 0 selects std::thread::hardware_concurrency().
    unsigned workers = 0;
    std::chrono::duration<double> budget = std::chrono::minutes(15);
    /// Use the rotation-orbit lower bound when the code is verified quasi-cyclic.
    bool quasi_cyclic_bound = true;
    /// Stop as soon as a codeword lighter than this is found (the answer is then "d < value").
    std::optional<size_t> stop_below;
};

/// Exact distance by enumerating all codewords. Requires 1 <= dimension <= 13.
/// Throws DimensionError for the zero code and CapacityError above the cap.
DistanceResult min_distance_bruteforce(const LinearCode &code, const DistanceOptions &options = {});
inline constexpr size_t kBruteForceMaxDimension = 13;

/// Brouwer-Zimmermann with rank-deficient information sets, strengthened by the orbit bound for
/// quasi-cyclic codes. Returns bounds instead of an exact value if the budget runs out.
DistanceResult min_distance_bz(const LinearCode &code, const DistanceOptions &options = {});

/// True iff rotating every block of `structure` by one place maps the code into itself.
bool is_quasi_cyclic(const LinearCode &code, const QuasiCyclicStructure &structure);

/// Randomized information-set sampling (weights 1 and 2 on each set). Returns a codeword of weight
/// <= target, or nothing. Deterministic for a fixed seed.
std::optional<Gf4Vector> low_weight_search(const LinearCode &code, size_t target, uint64_t trials, uint64_t seed);

using BigInt = boost::multiprecision::cpp_int;

/// A_0..A_length, with exact integer counts.
class WeightEnumerator {
   public:
    WeightEnumerator() = default;
    explicit WeightEnumerator(std::vector<BigInt> counts) : counts_(std::move(counts)) {
    }

    size_t length() const {
        return counts_.empty() ? 0 : counts_.size() - 1;
    }
    const std::vector<BigInt> &counts() const {
        return counts_;
    }
    const BigInt &operator[](size_t w) const {
        return counts_[w];
    }
    BigInt total() const;
    /// Smallest w > 0 with A_w > 0; 0 for the zero code.
    size_t min_weight() const;
    bool operator==(const WeightEnumerator &) const = default;

   private:
    std::vector<BigInt> counts_;
};

/// All 4^k codewords, Gray-code order. Throws CapacityError above dimension 17.
WeightEnumerator weight_enumerator_exhaustive(const LinearCode &code, unsigned workers = 0);
inline constexpr size_t kEnumeratorMaxDimension = 17;

/// Enumerator of the Hermitian (equally, Euclidean) dual of an [n, k] code over GF(4):
/// B_j = 4^-k sum_i A_i K_j(i). Throws std::invalid_argument unless A_0 = 1, every A_i >= 0,
/// sum A_i = 4^k, and the result is integral.
WeightEnumerator macwilliams_transform(const WeightEnumerator &a, size_t n, size_t k);

}  // namespace qcq

#endif
