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

#ifndef QCQ_APP_H
#define QCQ_APP_H

// Application layer shared by the qcq tool and the acceptance suite: the JSON schema for specs and
// dossiers, the search over nu(x), and the reproduction report.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "qcq/cosets.h"
#include "qcq/distance.h"
#include "qcq/quantum.h"
#include "qcq/reference.h"

namespace qcq {

using Json = nlohmann::ordered_json;

/// {"n": 21, "g1": "1^{2}01", "g2": ..., "nu": ..., "notation": "paper"}.
Json spec_to_json(const Qc2Spec &spec);
/// Throws SpecError for missing or mistyped fields, ParseError for bad notation strings.
Qc2Spec spec_from_json(const Json &j);

struct DossierChecks {
    SymbolicVerdict symbolic;
    bool matrix = false;
    bool dimension_condition = false;
    int formula_dimension = 0;
};

/// Everything known about one construction. `distance` and `quantum` are filled in by later steps.
struct CodeDossier {
    Qc2Spec spec;
    int length = 0;
    int dimension = 0;
    int dual_dimension = 0;
    std::optional<DistanceResult> distance;
    std::optional<size_t> dual_distance;
    std::optional<QuantumParams> quantum;
    DossierChecks checks;
    std::vector<std::string> warnings;
};

/// Builds the code and runs every dual-containment check; no distance work.
CodeDossier build_dossier(const Qc2Spec &spec);

/// Exact distance (or bounds) by the chosen method; "auto" picks brute force up to dimension 13.
DistanceResult compute_distance(const LinearCode &code, const std::string &method, const DistanceOptions &options);

/// Hermitian construction, requiring an exact distance and a matrix-verified containment.
/// Throws ContractError otherwise.
QuantumParams dossier_quantum(const CodeDossier &dossier);

/// `timing` adds elapsed seconds to the distance work stats; leave it off for reproducible output.
Json dossier_to_json(const CodeDossier &dossier, bool timing = false);
/// Rebuilds the code from the spec and re-runs every check; throws SpecError when a stored value
/// disagrees with the recomputation.
CodeDossier dossier_from_json(const Json &j);

Json distance_to_json(const DistanceResult &d, bool timing);
Json quantum_to_json(const QuantumParams &q);

enum class NuMode { kRandomDense, kRandomSparse, kExhaustive };

struct SearchConfig {
    int n = 1;
    std::vector<int> t1;  // coset representatives (any member selects its coset)
    std::vector<int> t2;
    NuMode nu_mode = NuMode::kRandomDense;
    int max_terms = 3;   // random_sparse
    int max_degree = 0;  // exhaustive
    uint64_t trials = 0;
    uint64_t seed = 0;
    double distance_budget = 60;  // seconds per candidate
    /// Keep only codes with d >= target (0: keep everything that is dual-containing).
    int target_distance = 0;
    unsigned workers = 1;
    /// Insist on T cap T^-2 = {} for both defining sets before searching.
    bool require_condition_a = true;
};

Json config_to_json(const SearchConfig &cfg);
/// Throws SpecError for malformed configs.
SearchConfig config_from_json(const Json &j);

struct SearchSummary {
    uint64_t trials = 0;
    uint64_t distinct_nu = 0;
    uint64_t dual_containing = 0;
    uint64_t below_target = 0;
    uint64_t exact = 0;
    uint64_t bounds_only = 0;
};

struct SearchOutcome {
    std::vector<CodeDossier> dossiers;  // in order of first trial index
    SearchSummary summary;
};

/// Throws SpecError if the defining sets fail the precondition, before any trial runs.
SearchOutcome search_nu(const SearchConfig &cfg);
/// Byte-stable rendering: no timings, fixed key order.
Json search_to_json(const SearchConfig &cfg, const SearchOutcome &outcome);

/// A printed value next to its recomputation.
struct Checked {
    std::string quantity;
    std::string claimed;
    std::string computed;
    bool agrees = false;
};

struct ReproductionRow {
    std::string label;
    std::optional<std::string> error;  // parse or validation failure; nothing else is filled in
    std::vector<Checked> checks;
    std::optional<CodeDossier> dossier;
    std::vector<QuantumParams> closure;
};

struct TableTwoEntry {
    int n, k, d;
    bool computed = false;  // the closure reaches it and it beats the stored record
};

struct ReproductionReport {
    std::vector<ReproductionRow> rows;
    std::vector<RecordComparison> improvements;  // every closure member beating its record
    std::vector<TableTwoEntry> table_two;
    std::vector<std::string> record_warnings;
    /// All checks agree and the improvements are exactly Table 2.
    bool all_agree() const;
};

struct ReproductionOptions {
    DistanceOptions distance;
    int closure_steps = 6;
    int closure_length_slack = 3;     // window: n <= base n + slack
    int closure_dimension_slack = 3;  // window: k >= base k - slack
};

/// The 30 improvements listed in Table 2, as (n, k, d).
const std::vector<std::tuple<int, int, int>> &table_two_improvements();

ReproductionReport reproduce_tables(std::span<const ReferenceConstruction> rows, const RecordsDb &db,
                                    const ReproductionOptions &options = {});
Json report_to_json(const ReproductionReport &report);

/// Defining sets are relative to a chosen primitive root gamma; replacing gamma by gamma^b maps every
/// set T to b^-1 T. Returns the smallest unit a mod n with a * computed[i] = claimed[i] for all i.
std::optional<int> common_root_change(const std::vector<DefiningSet> &computed, const std::vector<DefiningSet> &claimed);

}  // namespace qcq

#endif
