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

#include "qcq/distance.h"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>

#include "packed.h"
#include "qcq/errors.h"

namespace qcq {

using internal::Packed;
using internal::ScaledRows;
using Clock = std::chrono::steady_clock;

const char *to_string(DistanceKind kind) {
    switch (kind) {
        case DistanceKind::kExact:
            return "exact";
        case DistanceKind::kUpperBound:
            return "upper_bound";
        case DistanceKind::kLowerBound:
            return "lower_bound";
    }
    return "?";
}

const char *to_string(DistanceMethod method) {
    switch (method) {
        case DistanceMethod::kBruteForce:
            return "brute_force";
        case DistanceMethod::kBrouwerZimmermann:
            return "bz";
        case DistanceMethod::kLowWeightSearch:
            return "low_weight_search";
    }
    return "?";
}

namespace {

constexpr size_t kNone = std::numeric_limits<size_t>::max();

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---------------------------------------------------------------------------------------------
// Full enumeration.
//
// Only codewords whose top nonzero message digit is 1 are visited; the other two scalar multiples
// have the same weight. For top digit j the lower j digits run through a base-4 Gray code: step t
// bumps digit v_4(t), whose label cycles 0 -> 1 -> w -> w^2 -> 0, i.e. adds the row times 1 from an
// even label and times w^2 from an odd one. Large j are split into 64 items on the next 3 digits.

struct GrayItem {
    size_t top;
    uint32_t high;       // explicit values of digits [top - high_digits, top)
    size_t high_digits;
};

std::vector<GrayItem> gray_items(size_t k) {
    std::vector<GrayItem> items;
    for (size_t j = 0; j < k; ++j) {
        size_t b = j >= 8 ? 3 : 0;
        for (uint32_t h = 0; h < (1u << (2 * b)); ++h) {
            items.push_back({j, h, b});
        }
    }
    return items;
}

template <size_t W>
struct GrayTally {
    std::vector<uint64_t> histogram;
    uint64_t visits = 0;
    size_t best = kNone;
    Packed<W> best_word;
};

template <size_t W>
void gray_run(const ScaledRows<W> &rows, const GrayItem &item, GrayTally<W> &tally) {
    Packed<W> v = rows.by[0][item.top];
    size_t lower = item.top - item.high_digits;
    for (size_t d = 0; d < item.high_digits; ++d) {
        unsigned digit = (item.high >> (2 * d)) & 3u;
        if (digit != 0) {
            v ^= rows.by[digit - 1][lower + d];
        }
    }
    auto visit = [&](const Packed<W> &x) {
        size_t w = x.weight();
        ++tally.histogram[w];
        if (w < tally.best) {
            tally.best = w;
            tally.best_word = x;
        }
    };
    visit(v);
    uint8_t labels[64] = {};
    uint64_t total = uint64_t{1} << (2 * lower);
    for (uint64_t t = 1; t < total; ++t) {
        size_t i = static_cast<size_t>(std::countr_zero(t)) >> 1;
        uint8_t label = labels[i];
        v ^= rows.by[(label & 1) ? 2 : 0][i];
        labels[i] = (label + 1) & 3;
        visit(v);
    }
    tally.visits += total;
}

template <size_t W>
struct GrayOutcome {
    std::vector<uint64_t> histogram;
    uint64_t visits = 0;
    size_t best = kNone;
    Gf4Vector best_word;
};

template <size_t W>
GrayOutcome<W> gray_enumerate(const Gf4Matrix &basis, unsigned workers) {
    size_t n = basis.cols();
    ScaledRows<W> rows;
    for (const auto &r : basis.row_vectors()) {
        rows.push_back(internal::pack<W>(r));
    }
    auto items = gray_items(basis.rows());
    // One tally per item keeps the merge independent of scheduling.
    std::vector<GrayTally<W>> tallies(items.size());
    internal::parallel_items(items.size(), internal::resolve_workers(workers), [&](size_t i, unsigned) {
        tallies[i].histogram.assign(n + 1, 0);
        gray_run(rows, items[i], tallies[i]);
    });
    GrayOutcome<W> out;
    out.histogram.assign(n + 1, 0);
    Packed<W> best_word;
    for (auto &t : tallies) {
        for (size_t w = 0; w <= n; ++w) {
            out.histogram[w] += t.histogram[w];
        }
        out.visits += t.visits;
        if (t.best < out.best) {
            out.best = t.best;
            best_word = t.best_word;
        }
    }
    if (out.best != kNone) {
        out.best_word = internal::unpack(best_word, n);
    }
    return out;
}

// ---------------------------------------------------------------------------------------------
// Brouwer-Zimmermann.

struct InformationSet {
    Gf4Matrix reduced;               // k rows, systematic on `pivots`
    std::vector<size_t> pivots;      // pivots[i] is the identity column of row i
    std::vector<size_t> redundancy;  // the other columns
    size_t relative_rank = 0;        // pivots not used by earlier sets
    size_t level = 0;                // every message of weight <= level has been enumerated
    size_t max_block_share = 0;      // max over rotation blocks of |pivots in block|
};

std::vector<InformationSet> information_sets(const LinearCode &code, const std::optional<QuasiCyclicStructure> &qc) {
    size_t n = code.length();
    Gf4Matrix basis = code.basis();
    std::vector<size_t> base(n);
    if (qc) {
        // Interleave the blocks so the first set is spread evenly across them.
        size_t m = qc->circulant_size, l = qc->index;
        base.clear();
        for (size_t i = 0; i < m; ++i) {
            for (size_t b = 0; b < l; ++b) {
                base.push_back(b * m + i);
            }
        }
    } else {
        std::iota(base.begin(), base.end(), 0);
    }
    std::vector<bool> used(n, false);
    std::vector<InformationSet> sets;
    for (;;) {
        std::vector<size_t> order;
        for (size_t c : base) {
            if (!used[c]) {
                order.push_back(c);
            }
        }
        if (order.empty()) {
            break;
        }
        for (size_t c = 0; c < n; ++c) {
            if (used[c]) {
                order.push_back(c);
            }
        }
        RowEchelon e = row_reduce(basis, order);
        InformationSet s;
        s.pivots = e.pivots;
        for (size_t p : s.pivots) {
            s.relative_rank += !used[p];
        }
        if (s.relative_rank == 0) {
            break;  // only zero columns remain
        }
        for (size_t p : s.pivots) {
            used[p] = true;
        }
        std::vector<bool> is_pivot(n, false);
        for (size_t p : s.pivots) {
            is_pivot[p] = true;
        }
        for (size_t c = 0; c < n; ++c) {
            if (!is_pivot[c]) {
                s.redundancy.push_back(c);
            }
        }
        Gf4Matrix reduced(0, n);
        for (size_t r = 0; r < e.rank; ++r) {
            reduced.append_row(e.reduced.row(r));
        }
        s.reduced = std::move(reduced);
        if (qc) {
            std::vector<size_t> share(qc->index, 0);
            for (size_t p : s.pivots) {
                ++share[p / qc->circulant_size];
            }
            s.max_block_share = *std::max_element(share.begin(), share.end());
        }
        sets.push_back(std::move(s));
    }
    return sets;
}

struct Choice {
    uint16_t position;
    uint8_t scalar;
};

struct ItemResult {
    size_t best = kNone;
    std::vector<Choice> path;
    uint64_t leaves = 0;
    bool halted = false;     // found a decisive codeword
    bool abandoned = false;  // cut off by budget or by an earlier decisive item
};

struct Control {
    Clock::time_point deadline;
    std::atomic<size_t> decisive{kNone};
    std::atomic<bool> out_of_time{false};

    void claim(size_t item) {
        size_t cur = decisive.load();
        while (item < cur && !decisive.compare_exchange_weak(cur, item)) {
        }
    }
};

// Depth-first walk over the remaining message digits of one item.
template <size_t W>
class MessageWalk {
   public:
    MessageWalk(const ScaledRows<W> &rows, size_t weight, size_t halt_at_or_below, size_t item, Control &control,
                ItemResult &result)
        : rows_(rows), k_(rows.size()), weight_(weight), halt_(halt_at_or_below), item_(item), control_(control),
          result_(result) {
        path_.reserve(weight);
    }

    void push(size_t position, int scalar) {
        path_.push_back({static_cast<uint16_t>(position), static_cast<uint8_t>(scalar)});
    }

    void leaf(const Packed<W> &acc) {
        ++result_.leaves;
        consider(weight_ + acc.weight(), path_);
    }

    // Extends the path by `depth` more digits at positions >= start.
    bool walk(const Packed<W> &acc, size_t start, size_t depth) {
        if (depth == 1) {
            for (size_t p = start; p < k_; ++p) {
                for (int s = 0; s < 3; ++s) {
                    size_t w = weight_ + (acc ^ rows_.by[s][p]).weight();
                    if (w < result_.best) {
                        path_.push_back({static_cast<uint16_t>(p), static_cast<uint8_t>(s)});
                        consider(w, path_);
                        path_.pop_back();
                    }
                }
            }
            result_.leaves += 3 * (k_ - start);
            return !checkpoint();
        }
        for (size_t p = start; p + depth <= k_; ++p) {
            for (int s = 0; s < 3; ++s) {
                path_.push_back({static_cast<uint16_t>(p), static_cast<uint8_t>(s)});
                bool go_on = walk(acc ^ rows_.by[s][p], p + 1, depth - 1);
                path_.pop_back();
                if (!go_on) {
                    return false;
                }
            }
        }
        return true;
    }

    bool stopped() const {
        return result_.halted || result_.abandoned;
    }

   private:
    void consider(size_t w, const std::vector<Choice> &path) {
        if (w < result_.best) {
            result_.best = w;
            result_.path = path;
            if (w <= halt_) {
                result_.halted = true;
                control_.claim(item_);
            }
        }
    }

    // True when the walk must stop.
    bool checkpoint() {
        if (result_.halted) {
            return true;
        }
        if (result_.leaves - last_check_ < (uint64_t{1} << 20)) {
            return false;
        }
        last_check_ = result_.leaves;
        if (control_.decisive.load(std::memory_order_relaxed) < item_ || control_.out_of_time.load()) {
            result_.abandoned = true;
            return true;
        }
        if (Clock::now() > control_.deadline) {
            control_.out_of_time = true;
            result_.abandoned = true;
            return true;
        }
        return false;
    }

    const ScaledRows<W> &rows_;
    size_t k_;
    size_t weight_;
    size_t halt_;
    size_t item_;
    Control &control_;
    ItemResult &result_;
    std::vector<Choice> path_;
    uint64_t last_check_ = 0;
};

struct RoundItem {
    uint16_t first;
    uint16_t second;  // unused for weight 1
    uint8_t second_scalar;
};

struct RoundOutcome {
    size_t best = kNone;
    std::vector<Choice> path;
    uint64_t leaves = 0;
    bool complete = false;  // every message of this weight enumerated
    bool halted = false;    // a codeword of weight <= halt was found
};

// All messages of exactly `weight` whose first nonzero digit is 1.
template <size_t W>
RoundOutcome enumerate_weight(const ScaledRows<W> &rows, size_t weight, size_t halt, Clock::time_point deadline,
                              unsigned workers) {
    size_t k = rows.size();
    std::vector<RoundItem> items;
    if (weight == 1) {
        items.push_back({0, 0, 0});
    } else {
        for (size_t a = 0; a < k; ++a) {
            // b leaves room for the weight - 2 digits after it.
            for (size_t b = a + 1; b < k && k - 1 - b >= weight - 2; ++b) {
                for (uint8_t s = 0; s < 3; ++s) {
                    items.push_back({static_cast<uint16_t>(a), static_cast<uint16_t>(b), s});
                }
            }
        }
    }
    Control control;
    control.deadline = deadline;
    std::vector<ItemResult> results(items.size());
    internal::parallel_items(items.size(), workers, [&](size_t i, unsigned) {
        ItemResult &r = results[i];
        if (control.decisive.load() < i || control.out_of_time.load()) {
            r.abandoned = true;
            return;
        }
        if (Clock::now() > deadline) {
            control.out_of_time = true;
            r.abandoned = true;
            return;
        }
        MessageWalk<W> walk(rows, weight, halt, i, control, r);
        const RoundItem &it = items[i];
        if (weight == 1) {
            walk.walk(Packed<W>{}, 0, 1);
            return;
        }
        Packed<W> acc = rows.by[0][it.first] ^ rows.by[it.second_scalar][it.second];
        walk.push(it.first, 0);
        walk.push(it.second, it.second_scalar);
        if (weight == 2) {
            walk.leaf(acc);
        } else {
            walk.walk(acc, it.second + 1u, weight - 2);
        }
    });

    RoundOutcome out;
    size_t decisive = control.decisive.load();
    out.complete = !control.out_of_time.load();
    for (size_t i = 0; i < results.size() && i <= decisive; ++i) {
        const ItemResult &r = results[i];
        out.leaves += r.leaves;
        if (r.abandoned && i != decisive) {
            out.complete = false;
        }
        if (r.best < out.best) {
            out.best = r.best;
            out.path = r.path;
        }
    }
    if (decisive != kNone) {
        out.halted = true;
        out.complete = false;
    }
    return out;
}

template <size_t W>
ScaledRows<W> redundancy_rows(const InformationSet &s) {
    ScaledRows<W> rows;
    for (const auto &r : s.reduced.row_vectors()) {
        rows.push_back(internal::gather<W>(r, s.redundancy));
    }
    return rows;
}

size_t ceil_div(size_t a, size_t b) {
    return (a + b - 1) / b;
}

class BzSearch {
   public:
    BzSearch(const LinearCode &code, const DistanceOptions &options)
        : code_(code), options_(options), start_(Clock::now()) {
        workers_ = internal::resolve_workers(options.workers);
        deadline_ = start_ + std::chrono::duration_cast<Clock::duration>(options.budget);
        if (options.quasi_cyclic_bound && code.structure() && code.structure()->index > 1 &&
            is_quasi_cyclic(code, *code.structure())) {
            qc_ = code.structure();
        }
        sets_ = information_sets(code, qc_);
        k_ = code.dimension();
        upper_ = kNone;
    }

    DistanceResult run() {
        DistanceResult result;
        result.method = DistanceMethod::kBrouwerZimmermann;
        size_t halt_below = options_.stop_below.value_or(0);
        for (size_t w = 1; w <= k_; ++w) {
            for (size_t j = 0; j < sets_.size(); ++j) {
                InformationSet &s = sets_[j];
                bool useful = j == 0 || w + 1 > k_ - s.relative_rank;
                while (useful && s.level < w) {
                    size_t lower = lower_bound();
                    // Anything at or below the current lower bound is the distance; anything below
                    // the caller's threshold settles the caller's question.
                    size_t halt = std::max(lower, halt_below == 0 ? 0 : halt_below - 1);
                    RoundOutcome r = with_width_for(s, s.level + 1, halt);
                    stats_.codewords += 3 * r.leaves;
                    if (r.best < upper_) {
                        upper_ = r.best;
                        witness_ = witness_from(s, r.path);
                    }
                    if (r.halted) {
                        return finish(result, upper_ <= lower);
                    }
                    if (!r.complete) {
                        return finish(result, false);
                    }
                    ++s.level;
                    if (lower_bound() >= upper_) {
                        return finish(result, true);
                    }
                }
            }
        }
        return finish(result, true);  // every message enumerated on the first set
    }

   private:
    RoundOutcome with_width_for(const InformationSet &s, size_t weight, size_t halt) {
        return internal::with_width(std::max<size_t>(1, s.redundancy.size()), [&]<size_t W>() {
            auto rows = redundancy_rows<W>(s);
            return enumerate_weight<W>(rows, weight, halt, deadline_, workers_);
        });
    }

    size_t lower_bound() const {
        size_t bz = 0, orbit = 0;
        for (const auto &s : sets_) {
            if (s.level >= k_) {
                return upper_;  // exhaustive
            }
            size_t need = k_ - s.relative_rank;
            if (s.level + 1 > need) {
                bz += s.level + 1 - need;
            }
            if (qc_ && s.max_block_share > 0) {
                orbit = std::max(orbit, ceil_div(qc_->circulant_size * (s.level + 1), s.max_block_share));
            }
        }
        return std::max<size_t>({bz, orbit, 1});
    }

    Gf4Vector witness_from(const InformationSet &s, const std::vector<Choice> &path) const {
        Gf4Vector v(code_.length());
        for (const Choice &c : path) {
            v.add_scaled(s.reduced.row(c.position), internal::scalar_of(c.scalar));
        }
        return v;
    }

    DistanceResult finish(DistanceResult &result, bool exact) {
        for (const auto &s : sets_) {
            stats_.information_sets += s.level > 0;
        }
        stats_.message_weight = sets_.empty() ? 0 : static_cast<int>(sets_[0].level);
        stats_.elapsed_seconds = seconds_since(start_);
        result.stats = stats_;
        result.upper = upper_ == kNone ? code_.length() : upper_;
        result.lower = exact ? result.upper : std::min(lower_bound(), result.upper);
        result.kind = exact ? DistanceKind::kExact
                            : (upper_ == kNone ? DistanceKind::kLowerBound : DistanceKind::kUpperBound);
        if (witness_) {
            if (witness_->weight() != upper_ || !code_.contains(*witness_)) {
                throw InvariantViolation("distance witness is not a codeword of the reported weight");
            }
            result.witness = witness_;
        }
        return result;
    }

    const LinearCode &code_;
    DistanceOptions options_;
    Clock::time_point start_;
    Clock::time_point deadline_;
    unsigned workers_ = 1;
    std::optional<QuasiCyclicStructure> qc_;
    std::vector<InformationSet> sets_;
    size_t k_ = 0;
    size_t upper_;
    std::optional<Gf4Vector> witness_;
    WorkStats stats_;
};

}  // namespace

DistanceResult min_distance_bruteforce(const LinearCode &code, const DistanceOptions &options) {
    size_t k = code.dimension();
    if (k == 0) {
        throw DimensionError("minimum distance of the zero code is undefined");
    }
    if (k > kBruteForceMaxDimension) {
        throw CapacityError("dimension " + std::to_string(k) + " exceeds the brute-force cap of " +
                            std::to_string(kBruteForceMaxDimension) + "; use the bz method");
    }
    auto start = Clock::now();
    Gf4Matrix basis = code.basis();
    DistanceResult result;
    result.method = DistanceMethod::kBruteForce;
    internal::with_width(code.length(), [&]<size_t W>() {
        auto out = gray_enumerate<W>(basis, options.workers);
        result.lower = result.upper = out.best;
        result.witness = out.best_word;
        result.stats.codewords = 3 * out.visits;
    });
    result.kind = DistanceKind::kExact;
    result.stats.information_sets = 0;
    result.stats.message_weight = static_cast<int>(k);
    result.stats.elapsed_seconds = seconds_since(start);
    return result;
}

DistanceResult min_distance_bz(const LinearCode &code, const DistanceOptions &options) {
    if (code.dimension() == 0) {
        throw DimensionError("minimum distance of the zero code is undefined");
    }
    return BzSearch(code, options).run();
}

bool is_quasi_cyclic(const LinearCode &code, const QuasiCyclicStructure &structure) {
    size_t m = structure.circulant_size, l = structure.index;
    if (m * l != code.length()) {
        return false;
    }
    Gf4Matrix basis = code.basis();
    for (const auto &row : basis.row_vectors()) {
        Gf4Vector rotated(code.length());
        for (size_t b = 0; b < l; ++b) {
            for (size_t i = 0; i < m; ++i) {
                rotated.set(b * m + (i + 1) % m, row[b * m + i]);
            }
        }
        if (!code.contains(rotated)) {
            return false;
        }
    }
    return true;
}

std::optional<Gf4Vector> low_weight_search(const LinearCode &code, size_t target, uint64_t trials, uint64_t seed) {
    size_t n = code.length();
    if (code.dimension() == 0 || trials == 0) {
        return std::nullopt;
    }
    Gf4Matrix basis = code.basis();
    std::mt19937_64 rng(seed);
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    return internal::with_width(n, [&]<size_t W>() -> std::optional<Gf4Vector> {
        for (uint64_t t = 0; t < trials; ++t) {
            std::shuffle(order.begin(), order.end(), rng);
            RowEchelon e = row_reduce(basis, order);
            ScaledRows<W> rows;
            for (size_t r = 0; r < e.rank; ++r) {
                rows.push_back(internal::pack<W>(e.reduced.row(r)));
            }
            std::optional<Packed<W>> hit;
            for (size_t i = 0; i < rows.size() && !hit; ++i) {
                if (rows.by[0][i].weight() <= target) {
                    hit = rows.by[0][i];
                }
            }
            for (size_t i = 0; i < rows.size() && !hit; ++i) {
                for (size_t j = i + 1; j < rows.size() && !hit; ++j) {
                    for (int s = 0; s < 3 && !hit; ++s) {
                        Packed<W> x = rows.by[0][i] ^ rows.by[s][j];
                        if (x.weight() <= target) {
                            hit = x;
                        }
                    }
                }
            }
            if (hit) {
                Gf4Vector v = internal::unpack(*hit, n);
                if (!code.contains(v)) {
                    throw InvariantViolation("low_weight_search produced a non-codeword");
                }
                return v;
            }
        }
        return std::nullopt;
    });
}

BigInt WeightEnumerator::total() const {
    BigInt t = 0;
    for (const auto &c : counts_) {
        t += c;
    }
    return t;
}

size_t WeightEnumerator::min_weight() const {
    for (size_t w = 1; w < counts_.size(); ++w) {
        if (counts_[w] != 0) {
            return w;
        }
    }
    return 0;
}

WeightEnumerator weight_enumerator_exhaustive(const LinearCode &code, unsigned workers) {
    size_t k = code.dimension(), n = code.length();
    if (k > kEnumeratorMaxDimension) {
        throw CapacityError("dimension " + std::to_string(k) + " exceeds the enumeration cap of " +
                            std::to_string(kEnumeratorMaxDimension));
    }
    std::vector<BigInt> counts(n + 1, 0);
    counts[0] = 1;
    if (k == 0) {
        return WeightEnumerator(std::move(counts));
    }
    Gf4Matrix basis = code.basis();
    internal::with_width(n, [&]<size_t W>() {
        auto out = gray_enumerate<W>(basis, workers);
        for (size_t w = 1; w <= n; ++w) {
            counts[w] = BigInt(out.histogram[w]) * 3;
        }
    });
    return WeightEnumerator(std::move(counts));
}

WeightEnumerator macwilliams_transform(const WeightEnumerator &a, size_t n, size_t k) {
    if (a.length() != n) {
        throw std::invalid_argument("weight enumerator has length " + std::to_string(a.length()) + ", expected " +
                                    std::to_string(n));
    }
    if (k > n) {
        throw std::invalid_argument("dimension exceeds length");
    }
    if (a[0] != 1) {
        throw std::invalid_argument("A_0 must be 1");
    }
    for (const auto &c : a.counts()) {
        if (c < 0) {
            throw std::invalid_argument("negative weight count");
        }
    }
    BigInt size = BigInt(1) << (2 * k);
    if (a.total() != size) {
        throw std::invalid_argument("weight counts do not sum to 4^k");
    }
    // binom[a][b]
    std::vector<std::vector<BigInt>> binom(n + 1, std::vector<BigInt>(n + 1, 0));
    for (size_t i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (size_t j = 1; j <= i; ++j) {
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : BigInt(0));
        }
    }
    std::vector<BigInt> pow3(n + 1, 1);
    for (size_t i = 1; i <= n; ++i) {
        pow3[i] = pow3[i - 1] * 3;
    }
    std::vector<BigInt> b(n + 1, 0);
    for (size_t j = 0; j <= n; ++j) {
        BigInt sum = 0;
        for (size_t i = 0; i <= n; ++i) {
            if (a[i] == 0) {
                continue;
            }
            // Krawtchouk K_j(i) = sum_s (-1)^s 3^(j-s) C(i,s) C(n-i,j-s).
            BigInt kj = 0;
            for (size_t s = 0; s <= std::min(i, j); ++s) {
                if (j - s > n - i) {
                    continue;
                }
                BigInt term = pow3[j - s] * binom[i][s] * binom[n - i][j - s];
                if (s & 1) {
                    kj -= term;
                } else {
                    kj += term;
                }
            }
            sum += a[i] * kj;
        }
        if (sum % size != 0 || sum < 0) {
            throw std::invalid_argument("input is not the weight enumerator of a linear code");
        }
        b[j] = sum / size;
    }
    return WeightEnumerator(std::move(b));
}

}  // namespace qcq
