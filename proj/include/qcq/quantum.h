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

#ifndef QCQ_QUANTUM_H
#define QCQ_QUANTUM_H

#include <iosfwd>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcq/distance.h"
#include "qcq/qc2.h"

namespace qcq {

enum class PropagationRule { kSubcode, kLengthen, kPuncture, kPurePuncture };
const char *to_string(PropagationRule rule);
/// Inverse of to_string; throws std::invalid_argument.
PropagationRule parse_rule(std::string_view name);
inline constexpr PropagationRule kAllRules[] = {PropagationRule::kSubcode, PropagationRule::kLengthen,
                                                PropagationRule::kPuncture, PropagationRule::kPurePuncture};

/// Binary stabilizer code parameters [[n, k, d]].
struct QuantumParams {
    int n = 1;
    int k = 0;
    int d = 1;
    bool pure = false;
    /// Where the base code came from, e.g. "hermitian [42,26,9]".
    std::string origin;
    /// Rules applied to the base code, in order.
    std::vector<PropagationRule> steps;

    /// Throws ContractError unless 1 <= n, 0 <= k <= n, 1 <= d <= n.
    void validate() const;
    std::string label() const;  // "[[n,k,d]]"
    bool same_parameters(const QuantumParams &o) const {
        return n == o.n && k == o.k && d == o.d;
    }
};

std::ostream &operator<<(std::ostream &out, const QuantumParams &q);

/// Proof that a code contains its Hermitian dual, obtained only from the matrix oracle.
class DualContainmentCertificate {
   public:
    /// Runs the matrix oracle; nothing if the code is not dual-containing.
    static std::optional<DualContainmentCertificate> verify(const LinearCode &code);
    bool covers(const LinearCode &code) const;

   private:
    explicit DualContainmentCertificate(Gf4Matrix basis) : basis_(std::move(basis)) {
    }
    Gf4Matrix basis_;
};

/// [[n, 2k - n, d]], pure. Throws ContractError if the certificate is for another code, the distance
/// is not exact, or 2k < n.
QuantumParams hermitian_construction(const LinearCode &code, const DualContainmentCertificate &certificate,
                                     const DistanceResult &distance);

struct RuleInapplicable : ContractError {
    using ContractError::ContractError;
};

bool applicable(const QuantumParams &q, PropagationRule rule);
/// Derived codes are never marked pure. Throws RuleInapplicable when the preconditions fail.
QuantumParams propagate(const QuantumParams &q, PropagationRule rule);

struct Window {
    int min_n = 1;
    int max_n = std::numeric_limits<int>::max();
    int min_k = 0;
    int max_k = std::numeric_limits<int>::max();
    bool contains(int n, int k) const {
        return n >= min_n && n <= max_n && k >= min_k && k <= max_k;
    }
};

/// Every code reachable from `base` in at most max_steps rule applications without leaving the
/// window, reduced to the largest d per (n, k). Sorted by (n, k). `rule_order` only affects which
/// of several equally short derivations is kept as provenance.
std::vector<QuantumParams> derive_closure(const QuantumParams &base, int max_steps, const Window &window,
                                          std::span<const PropagationRule> rule_order = kAllRules);

struct CodeRecord {
    int n = 0;
    int k = 0;
    int d_best = 0;
    std::string source;
};

struct RecordsDb {
    std::map<std::pair<int, int>, CodeRecord> rows;
    /// One message per malformed or duplicate line; those lines are skipped.
    std::vector<std::string> warnings;

    const CodeRecord *find(int n, int k) const;
};

/// CSV with header "n,k,d,source"; '#' lines and blank lines ignored.
RecordsDb parse_records(std::istream &in);
/// Throws std::runtime_error if the file cannot be opened.
RecordsDb load_records(const std::string &path);

enum class RecordVerdict { kImproves, kTies, kWorse, kUnknown };
const char *to_string(RecordVerdict v);

struct RecordComparison {
    QuantumParams candidate;
    RecordVerdict verdict = RecordVerdict::kUnknown;
    std::optional<CodeRecord> record;
};

/// One entry per candidate, sorted by (n, k, d).
std::vector<RecordComparison> compare_records(const std::vector<QuantumParams> &candidates, const RecordsDb &db);

}  // namespace qcq

#endif
