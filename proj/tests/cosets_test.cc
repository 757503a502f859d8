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

#include "qcq/cosets.h"

#include <gtest/gtest.h>

#include <numeric>

#include "qcq/errors.h"

using namespace qcq;

TEST(coset_of, examples) {
    ASSERT_EQ(coset_of(0, 21).members, (std::vector<int>{0}));
    ASSERT_EQ(coset_of(1, 21).members, (std::vector<int>{1, 4, 16}));
    ASSERT_EQ(coset_of(16, 21).rep, 1);
    ASSERT_EQ(coset_of(7, 21).members, (std::vector<int>{7}));
    ASSERT_THROW(coset_of(1, 20), UnsupportedLength);
    ASSERT_THROW(coset_of(21, 21), std::out_of_range);
    ASSERT_THROW(coset_of(-1, 21), std::out_of_range);
}

TEST(all_cosets, examples) {
    auto c3 = all_cosets(3);
    ASSERT_EQ(c3.size(), 3u);
    for (const auto &c : c3) {
        ASSERT_EQ(c.size(), 1u);
    }
    auto c5 = all_cosets(5);
    ASSERT_EQ(c5.size(), 3u);
    ASSERT_EQ(c5[1].members, (std::vector<int>{1, 4}));
    ASSERT_EQ(c5[2].members, (std::vector<int>{2, 3}));
    std::vector<size_t> sizes;
    for (const auto &c : all_cosets(21)) {
        sizes.push_back(c.size());
    }
    ASSERT_EQ(sizes, (std::vector<size_t>{1, 3, 3, 3, 3, 1, 3, 3, 1}));
    ASSERT_THROW(all_cosets(22), UnsupportedLength);
}

TEST(all_cosets, partition_and_closure) {
    for (int n = 1; n <= 101; n += 2) {
        std::vector<int> seen(n, 0);
        int prev_rep = -1;
        for (const auto &c : all_cosets(n)) {
            ASSERT_GT(c.rep, prev_rep);
            prev_rep = c.rep;
            ASSERT_EQ(c.rep, c.members.front());
            ASSERT_TRUE(std::is_sorted(c.members.begin(), c.members.end()));
            for (int m : c.members) {
                ++seen[m];
                ASSERT_TRUE(c.contains(4 * m % n));
            }
        }
        for (int i = 0; i < n; ++i) {
            ASSERT_EQ(seen[i], 1) << "n=" << n << " i=" << i;
        }
    }
}

TEST(classify, examples) {
    ASSERT_TRUE(classify(coset_of(0, 21)).skew_symmetric);
    ASSERT_TRUE(classify(coset_of(7, 21)).skew_symmetric);
    CosetClass c1 = classify(coset_of(1, 21));
    ASSERT_FALSE(c1.skew_symmetric);
    ASSERT_EQ(c1.partner_rep, 10);
    ASSERT_EQ(coset_of(10, 21).members, (std::vector<int>{10, 13, 19}));
}

TEST(classify, partner_is_an_involution) {
    for (int n = 1; n <= 101; n += 2) {
        for (const auto &c : all_cosets(n)) {
            CosetClass k = classify(c);
            ASSERT_EQ(k.skew_symmetric, k.partner_rep == c.rep);
            CosetClass back = classify(coset_of(k.partner_rep, n));
            ASSERT_EQ(back.partner_rep, c.rep) << "n=" << n << " rep=" << c.rep;
        }
    }
}

TEST(defining_set, construction) {
    DefiningSet t(21, {4, 7});
    ASSERT_EQ(t.reps(), (std::vector<int>{1, 7}));
    ASSERT_EQ(t.elements(), (std::vector<int>{1, 4, 7, 16}));
    ASSERT_EQ(t.size(), 4u);
    ASSERT_TRUE(t.contains(16));
    ASSERT_FALSE(t.contains(2));
    ASSERT_EQ(DefiningSet::from_elements(21, {16, 1, 4}), DefiningSet(21, {1}));
    ASSERT_THROW(DefiningSet::from_elements(21, {1, 4}), SpecError);
}

TEST(defset_dual_containing, examples) {
    ASSERT_TRUE(defset_dual_containing(DefiningSet(21, {})));
    ASSERT_FALSE(defset_dual_containing(DefiningSet(21, {7})));
    ASSERT_TRUE(defset_dual_containing(DefiningSet(21, {1})));
    ASSERT_FALSE(defset_dual_containing(DefiningSet(21, {1, 10})));
    ASSERT_EQ(minus_two_image(DefiningSet(21, {1})), (std::vector<int>{10, 13, 19}));
}

// The single-condition form T cap T^-2 = {} and the two-clause phrasing agree on every union of
// cosets for every odd n up to 45.
TEST(defset_dual_containing, equals_two_clause_form_exhaustively) {
    for (int n = 1; n <= 45; n += 2) {
        auto cosets = all_cosets(n);
        if (cosets.size() > 16) {
            continue;
        }
        for (uint32_t mask = 0; mask < (1u << cosets.size()); ++mask) {
            std::vector<int> picks;
            for (size_t i = 0; i < cosets.size(); ++i) {
                if (mask >> i & 1) {
                    picks.push_back(cosets[i].rep);
                }
            }
            DefiningSet t(n, picks);
            ASSERT_EQ(defset_dual_containing(t), defset_no_skew_symmetric_or_pairs(t)) << n << " " << mask;
        }
    }
}
