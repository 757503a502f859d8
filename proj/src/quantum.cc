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

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

namespace qcq {

const char *to_string(PropagationRule rule) {
    switch (rule) {
        case PropagationRule::kSubcode:
            return "subcode";
        case PropagationRule::kLengthen:
            return "lengthen";
        case PropagationRule::kPuncture:
            return "puncture";
        case PropagationRule::kPurePuncture:
            return "pure_puncture";
    }
    return "?";
}

PropagationRule parse_rule(std::string_view name) {
    for (PropagationRule r : kAllRules) {
        if (name == to_string(r)) {
            return r;
        }
    }
    throw std::invalid_argument("unknown propagation rule '" + std::string(name) + "'");
}

void QuantumParams::validate() const {
    if (n < 1 || k < 0 || k > n || d < 1 || d > n) {
        throw ContractError("invalid quantum code parameters " + label());
    }
}

std::string QuantumParams::label() const {
    return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]]";
}

std::ostream &operator<<(std::ostream &out, const QuantumParams &q) {
    out << q.label();
    if (q.pure) {
        out << " pure";
    }
    return out;
}

std::optional<DualContainmentCertificate> DualContainmentCertificate::verify(const LinearCode &code) {
    if (!dual_containing_matrix(code, hermitian_dual(code))) {
        return std::nullopt;
    }
    return DualContainmentCertificate(code.basis());
}

bool DualContainmentCertificate::covers(const LinearCode &code) const {
    return code.basis() == basis_;
}

QuantumParams hermitian_construction(const LinearCode &code, const DualContainmentCertificate &certificate,
                                     const DistanceResult &distance) {
    if (!certificate.covers(code)) {
        throw ContractError("dual-containment certificate belongs to a different code");
    }
    if (!distance.exact()) {
        throw ContractError("Hermitian construction needs an exact minimum distance");
    }
    int n = static_cast<int>(code.length());
    int k = static_cast<int>(code.dimension());
    if (2 * k < n) {
        throw ContractError("2k < n: a dual-containing code cannot have k = " + std::to_string(k) +
                            " at length " + std::to_string(n));
    }
    QuantumParams q;
    q.n = n;
    q.k = 2 * k - n;
    q.d = static_cast<int>(distance.value());
    q.pure = true;
    q.origin = "hermitian [" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(q.d) + "]";
    q.validate();
    return q;
}

bool applicable(const QuantumParams &q, PropagationRule rule) {
    switch (rule) {
        case PropagationRule::kSubcode:
            return q.k >= 1;
        case PropagationRule::kLengthen:
            return q.k > 0;
        case PropagationRule::kPuncture:
            return q.k > 0 && q.d >= 2 && q.k <= q.n - 1;
        case PropagationRule::kPurePuncture:
            return q.n > 2 && q.pure && q.d >= 2 && q.k + 1 <= q.n - 1;
    }
    return false;
}

QuantumParams propagate(const QuantumParams &q, PropagationRule rule) {
    if (!applicable(q, rule)) {
        throw RuleInapplicable(std::string(to_string(rule)) + " does not apply to " + q.label() +
                               (q.pure ? " (pure)" : ""));
    }
    QuantumParams out = q;
    out.pure = false;
    out.steps.push_back(rule);
    switch (rule) {
        case PropagationRule::kSubcode:
            out.k -= 1;
            break;
        case PropagationRule::kLengthen:
            out.n += 1;
            break;
        case PropagationRule::kPuncture:
            out.n -= 1;
            out.d -= 1;
            break;
        case PropagationRule::kPurePuncture:
            out.n -= 1;
            out.k += 1;
            out.d -= 1;
            break;
    }
    out.validate();
    return out;
}

std::vector<QuantumParams> derive_closure(const QuantumParams &base, int max_steps, const Window &window,
                                          std::span<const PropagationRule> rule_order) {
    base.validate();
    using State = std::tuple<int, int, int, bool>;
    auto state_of = [](const QuantumParams &q) { return State{q.n, q.k, q.d, q.pure}; };
    std::set<State> seen{state_of(base)};
    std::vector<QuantumParams> reached{base};
    std::vector<QuantumParams> frontier{base};
    for (int step = 0; step < max_steps && !frontier.empty(); ++step) {
        std::vector<QuantumParams> next;
        for (const auto &q : frontier) {
            for (PropagationRule rule : rule_order) {
                if (!applicable(q, rule)) {
                    continue;
                }
                QuantumParams r = propagate(q, rule);
                if (!window.contains(r.n, r.k) || !seen.insert(state_of(r)).second) {
                    continue;
                }
                next.push_back(r);
                reached.push_back(r);
            }
        }
        frontier = std::move(next);
    }
    // Largest d per (n, k); among equals prefer pure, then the first (shortest) derivation.
    std::map<std::pair<int, int>, QuantumParams> best;
    for (const auto &q : reached) {
        auto [it, inserted] = best.try_emplace({q.n, q.k}, q);
        if (!inserted && (q.d > it->second.d || (q.d == it->second.d && q.pure && !it->second.pure))) {
            it->second = q;
        }
    }
    std::vector<QuantumParams> out;
    for (auto &[key, q] : best) {
        out.push_back(std::move(q));
    }
    return out;
}

const CodeRecord *RecordsDb::find(int n, int k) const {
    auto it = rows.find({n, k});
    return it == rows.end() ? nullptr : &it->second;
}

namespace {

std::string trim(std::string s) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

bool parse_int(const std::string &s, int &out) {
    if (s.empty()) {
        return false;
    }
    size_t used = 0;
    try {
        out = std::stoi(s, &used);
    } catch (const std::exception &) {
        return false;
    }
    return used == s.size();
}

}  // namespace

RecordsDb parse_records(std::istream &in) {
    RecordsDb db;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') {
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(t);
        std::string f;
        while (std::getline(ss, f, ',')) {
            fields.push_back(trim(f));
        }
        if (!header_seen) {
            header_seen = true;
            if (fields.size() >= 3 && fields[0] == "n" && fields[1] == "k" && fields[2] == "d") {
                continue;
            }
            db.warnings.push_back("line " + std::to_string(line_no) + ": missing header n,k,d,source");
        }
        auto warn = [&](const std::string &what) {
            db.warnings.push_back("line " + std::to_string(line_no) + ": " + what + ": '" + t + "'");
        };
        if (fields.size() < 3 || fields.size() > 4) {
            warn("expected 3 or 4 fields");
            continue;
        }
        CodeRecord r;
        if (!parse_int(fields[0], r.n) || !parse_int(fields[1], r.k) || !parse_int(fields[2], r.d_best)) {
            warn("non-integer field");
            continue;
        }
        if (r.n < 1 || r.k < 0 || r.k > r.n || r.d_best < 1 || r.d_best > r.n) {
            warn("parameters out of range");
            continue;
        }
        r.source = fields.size() == 4 ? fields[3] : "";
        if (!db.rows.emplace(std::make_pair(r.n, r.k), r).second) {
            warn("duplicate (n,k) row ignored");
        }
    }
    return db;
}

RecordsDb load_records(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open records file " + path);
    }
    return parse_records(in);
}

const char *to_string(RecordVerdict v) {
    switch (v) {
        case RecordVerdict::kImproves:
            return "improves";
        case RecordVerdict::kTies:
            return "ties";
        case RecordVerdict::kWorse:
            return "worse";
        case RecordVerdict::kUnknown:
            return "unknown";
    }
    return "?";
}

std::vector<RecordComparison> compare_records(const std::vector<QuantumParams> &candidates, const RecordsDb &db) {
    std::vector<RecordComparison> out;
    for (const auto &c : candidates) {
        RecordComparison r;
        r.candidate = c;
        if (const CodeRecord *rec = db.find(c.n, c.k)) {
            r.record = *rec;
            r.verdict = c.d > rec->d_best    ? RecordVerdict::kImproves
                        : c.d == rec->d_best ? RecordVerdict::kTies
                                             : RecordVerdict::kWorse;
        }
        out.push_back(std::move(r));
    }
    std::stable_sort(out.begin(), out.end(), [](const RecordComparison &a, const RecordComparison &b) {
        return std::tie(a.candidate.n, a.candidate.k, a.candidate.d) <
               std::tie(b.candidate.n, b.candidate.k, b.candidate.d);
    });
    return out;
}

}  // namespace qcq
