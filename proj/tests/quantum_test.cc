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

#include "qcq/quantum.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "qcq/errors.h"
#include "qcq/reference.h"

using namespace qcq;

namespace {

QuantumParams Q(int n, int k, int d, bool pure = false) {
    QuantumParams q;
    q.n = n;
    q.k = k;
    q.d = d;
    q.pure = pure;
    return q;
}

bool has(const std::vector<QuantumParams> &set, int n, int k, int d) {
    return std::any_of(set.begin(), set.end(), [&](const QuantumParams &q) { return q.n == n && q.k == k && q.d == d; });
}

std::string records_path() {
    return std::string(QCQ_SOURCE_DIR) + "/data/records.csv";
}

// Table-2 left column.
const std::vector<std::tuple<int, int, int>> kImprovements = {
    {42, 10, 9}, {42, 9, 9},  {43, 10, 9}, {44, 10, 9}, {45, 10, 9}, {70, 40, 7}, {70, 39, 7}, {71, 40, 7},
    {74, 36, 9}, {74, 35, 9}, {74, 34, 9}, {74, 33, 9}, {75, 36, 9}, {75, 35, 9}, {75, 34, 9}, {75, 33, 9},
    {76, 36, 9}, {76, 35, 9}, {76, 34, 9}, {76, 33, 9}, {77, 36, 9}, {77, 35, 9}, {77, 34, 9}, {78, 40, 9},
    {78, 39, 9}, {79, 40, 9}, {79, 39, 9}, {80, 40, 9}, {80, 39, 9}, {77, 41, 8}};

}  // namespace

TEST(hermitian_construction, reference_42_26) {
    LinearCode c = build_qc_code(reference_constructions()[0].spec());
    auto cert = DualContainmentCertificate::verify(c);
    ASSERT_TRUE(cert.has_value());
    DistanceResult d = min_distance_bz(c);
    QuantumParams q = hermitian_construction(c, *cert, d);
    ASSERT_TRUE(q.same_parameters(Q(42, 10, 9)));
    ASSERT_TRUE(q.pure);
    ASSERT_TRUE(q.steps.empty());
}

TEST(hermitian_construction, zero_logical_dimension_edge) {
    // <1100, 0011> is Hermitian self-dual.
    Gf4Matrix g({Gf4Vector::from_digits("1100"), Gf4Vector::from_digits("0011")}, 4);
    LinearCode c(g);
    auto cert = DualContainmentCertificate::verify(c);
    ASSERT_TRUE(cert.has_value());
    QuantumParams q = hermitian_construction(c, *cert, min_distance_bruteforce(c));
    ASSERT_EQ(q.k, 0);
    ASSERT_EQ(q.n, 4);
    ASSERT_EQ(q.d, 2);
}

TEST(hermitian_construction, contract_violations) {
    LinearCode c = build_qc_code(reference_constructions()[0].spec());
    auto cert = DualContainmentCertificate::verify(c);
    DistanceResult bound = min_distance_bz(c);
    bound.kind = DistanceKind::kUpperBound;
    ASSERT_THROW(hermitian_construction(c, *cert, bound), ContractError);
    LinearCode other = build_qc_code(reference_constructions()[1].spec());
    ASSERT_THROW(hermitian_construction(other, *cert, min_distance_bz(other)), ContractError);
    // A code that is not dual-containing never gets a certificate.
    LinearCode small(Gf4Matrix({Gf4Vector::from_digits("1000")}, 4));
    ASSERT_FALSE(DualContainmentCertificate::verify(small).has_value());
}

TEST(propagate, examples) {
    QuantumParams base = Q(42, 10, 9, true);
    ASSERT_TRUE(propagate(base, PropagationRule::kLengthen).same_parameters(Q(43, 10, 9)));
    ASSERT_TRUE(propagate(base, PropagationRule::kSubcode).same_parameters(Q(42, 9, 9)));
    ASSERT_TRUE(propagate(Q(78, 40, 9, true), PropagationRule::kPurePuncture).same_parameters(Q(77, 41, 8)));
    ASSERT_TRUE(propagate(base, PropagationRule::kPuncture).same_parameters(Q(41, 10, 8)));
    ASSERT_FALSE(propagate(base, PropagationRule::kSubcode).pure);
    ASSERT_EQ(propagate(base, PropagationRule::kSubcode).steps, std::vector<PropagationRule>{PropagationRule::kSubcode});
}

TEST(propagate, preconditions) {
    ASSERT_THROW(propagate(Q(5, 0, 3), PropagationRule::kSubcode), RuleInapplicable);
    ASSERT_THROW(propagate(Q(5, 0, 3), PropagationRule::kLengthen), RuleInapplicable);
    ASSERT_THROW(propagate(Q(5, 1, 1), PropagationRule::kPuncture), RuleInapplicable);
    ASSERT_THROW(propagate(Q(10, 2, 3, false), PropagationRule::kPurePuncture), RuleInapplicable);
    ASSERT_THROW(propagate(Q(2, 0, 2, true), PropagationRule::kPurePuncture), RuleInapplicable);
    ASSERT_NO_THROW(propagate(Q(10, 2, 3, true), PropagationRule::kPurePuncture));
}

TEST(propagate, preserves_validity) {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 2000; ++t) {
        int n = 1 + rng() % 30;
        QuantumParams q = Q(n, rng() % (n + 1), 1 + rng() % n, rng() & 1);
        for (PropagationRule r : kAllRules) {
            if (applicable(q, r)) {
                ASSERT_NO_THROW(propagate(q, r).validate()) << q << " " << to_string(r);
            }
        }
    }
}

TEST(derive_closure, zero_steps_is_the_base) {
    auto out = derive_closure(Q(42, 10, 9, true), 0, Window{});
    ASSERT_EQ(out.size(), 1u);
    ASSERT_TRUE(out[0].same_parameters(Q(42, 10, 9)));
}

TEST(derive_closure, example_1_window) {
    auto out = derive_closure(Q(42, 10, 9, true), 8, Window{1, 45, 9});
    for (auto [n, k, d] : std::vector<std::tuple<int, int, int>>{{42, 9, 9}, {43, 10, 9}, {44, 10, 9}, {45, 10, 9}}) {
        ASSERT_TRUE(has(out, n, k, d)) << n << "," << k << "," << d;
    }
    // One row per (n, k), sorted.
    for (size_t i = 1; i < out.size(); ++i) {
        ASSERT_LT(std::tie(out[i - 1].n, out[i - 1].k), std::tie(out[i].n, out[i].k));
    }
}

TEST(derive_closure, example_3_window) {
    auto out = derive_closure(Q(74, 36, 9, true), 8, Window{1, 77, 33});
    int derived = 0;
    for (int n = 74; n <= 77; ++n) {
        for (int k = 33; k <= 36; ++k) {
            if (n == 74 && k == 36) {
                continue;
            }
            ASSERT_TRUE(has(out, n, k, 9)) << n << "," << k;
            ++derived;
        }
    }
    ASSERT_EQ(derived, 15);  // the printed list of 14 omits [[77,33,9]], which the rules also give
}

TEST(derive_closure, independent_of_rule_order) {
    std::mt19937_64 rng(62);
    std::vector<PropagationRule> order(std::begin(kAllRules), std::end(kAllRules));
    for (int t = 0; t < 40; ++t) {
        int n = 6 + rng() % 20;
        QuantumParams base = Q(n, rng() % (n / 2 + 1), 1 + rng() % (n / 2), rng() & 1);
        Window w{n - 4, n + 3, std::max(0, base.k - 3), base.k + 3};
        int steps = static_cast<int>(rng() % 7);
        auto reference = derive_closure(base, steps, w);
        std::shuffle(order.begin(), order.end(), rng);
        auto shuffled = derive_closure(base, steps, w, order);
        ASSERT_EQ(reference.size(), shuffled.size());
        for (size_t i = 0; i < reference.size(); ++i) {
            ASSERT_TRUE(reference[i].same_parameters(shuffled[i]));
        }
    }
}

TEST(records, parse_with_warnings) {
    std::istringstream in(
        "# comment\n"
        "n,k,d,source\n"
        "42,10,8,snap\n"
        "\n"
        "42,10,7,dup\n"
        "x,1,1,bad\n"
        "5,9,1,range\n"
        "7,1,3\n"
        "1,2\n");
    RecordsDb db = parse_records(in);
    ASSERT_EQ(db.rows.size(), 2u);
    ASSERT_EQ(db.find(42, 10)->d_best, 8);
    ASSERT_EQ(db.find(42, 10)->source, "snap");
    ASSERT_EQ(db.find(7, 1)->d_best, 3);
    ASSERT_EQ(db.warnings.size(), 4u);
    ASSERT_EQ(db.find(1, 1), nullptr);
}

TEST(records, shipped_snapshot) {
    RecordsDb db = load_records(records_path());
    ASSERT_TRUE(db.warnings.empty());
    ASSERT_EQ(db.rows.size(), 30u);
    ASSERT_THROW(load_records("/nonexistent/records.csv"), std::runtime_error);
}

TEST(compare_records, verdicts) {
    std::istringstream in("n,k,d,source\n42,10,8,s\n43,10,9,s\n44,10,10,s\n");
    RecordsDb db = parse_records(in);
    auto r = compare_records({Q(44, 10, 9), Q(42, 10, 9), Q(43, 10, 9), Q(50, 1, 3)}, db);
    ASSERT_EQ(r.size(), 4u);
    ASSERT_EQ(r[0].verdict, RecordVerdict::kImproves);
    ASSERT_EQ(r[1].verdict, RecordVerdict::kTies);
    ASSERT_EQ(r[2].verdict, RecordVerdict::kWorse);
    ASSERT_EQ(r[3].verdict, RecordVerdict::kUnknown);
    ASSERT_FALSE(r[3].record.has_value());
}

TEST(compare_records, closure_of_the_four_bases_improves_exactly_thirty) {
    RecordsDb db = load_records(records_path());
    std::vector<QuantumParams> all;
    for (QuantumParams base : {Q(42, 10, 9, true), Q(70, 40, 7, true), Q(74, 36, 9, true), Q(78, 40, 9, true)}) {
        auto c = derive_closure(base, 6, Window{1, base.n + 3, base.k - 3});
        all.insert(all.end(), c.begin(), c.end());
    }
    std::set<std::tuple<int, int, int>> improved;
    for (const auto &r : compare_records(all, db)) {
        if (r.verdict == RecordVerdict::kImproves) {
            improved.insert({r.candidate.n, r.candidate.k, r.candidate.d});
        }
    }
    std::set<std::tuple<int, int, int>> expected(kImprovements.begin(), kImprovements.end());
    ASSERT_EQ(improved, expected);
}
