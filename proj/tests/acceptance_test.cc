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


// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>

#include "oracles.h"
#include "qcq/app.h"
#include "qcq/qc2.h"

using namespace qcq;
using namespace qcq::testing;

namespace {

using Clock = std::chrono::steady_clock;

std::string records_path() {
    return std::string(QCQ_SOURCE_DIR) + "/data/records.csv";
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double s) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2) << s << " s";
    return out.str();
}

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome example_one() {
    const auto &ref = reference_constructions()[0];
    Qc2Spec spec = ref.spec();  // throws unless g1, g2 | x^21 - 1
    CodeDossier d = build_dossier(spec);
    LinearCode code = build_qc_code(spec);
    auto start = Clock::now();
    d.distance = min_distance_bz(code);
    double bz = seconds_since(start);
    if (!d.checks.matrix || !d.distance->exact()) {
        return {false, "matrix oracle " + std::to_string(d.checks.matrix) + ", distance not exact"};
    }
    QuantumParams q = dossier_quantum(d);
    bool ok = d.length == 42 && d.dimension == 26 && d.distance->value() == 9 && q.label() == "[[42,10,9]]" &&
              bz <= 600;
    return {ok, "[" + std::to_string(d.length) + "," + std::to_string(d.dimension) + "," +
                    std::to_string(d.distance->value()) + "] -> " + q.label() + ", BZ " + fmt(bz)};
}

Outcome weight_prefix() {
    LinearCode code = build_qc_code(reference_constructions()[0].spec());
    LinearCode dual = hermitian_dual(code);
    auto start = Clock::now();
    WeightEnumerator b = weight_enumerator_exhaustive(dual);
    WeightEnumerator a = macwilliams_transform(b, 42, dual.dimension());
    double t = seconds_since(start);
    bool ok = dual.dimension() == 16 && a[9] == 3486 && a[10] == 22176 && a[11] == 181566 &&
              a.total() == BigInt(1) << 52 && t <= 3600;
    std::ostringstream out;
    out << "[42," << dual.dimension() << "] dual enumerated (min weight " << b.min_weight() << "); A9=" << a[9]
        << " A10=" << a[10] << " A11=" << a[11] << ", " << fmt(t);
    return {ok, out.str()};
}

Outcome large_examples() {
    DistanceOptions opt;
    opt.budget = std::chrono::hours(1);
    bool ok = true;
    std::string detail;
    const std::vector<std::pair<size_t, std::string>> expected{{7, "[[70,40,7]]"}, {9, "[[74,36,9]]"}, {9, "[[78,40,9]]"}};
    for (size_t i = 0; i < 3; i++) {
        CodeDossier d = build_dossier(reference_constructions()[i + 1].spec());
        d.distance = min_distance_bz(build_qc_code(d.spec), opt);
        const auto &r = *d.distance;
        std::string part(reference_constructions()[i + 1].label);
        if (r.exact()) {
            QuantumParams q = dossier_quantum(d);
            ok = ok && r.value() == expected[i].first && q.label() == expected[i].second;
            part += " d=" + std::to_string(r.value()) + " -> " + q.label();
        } else {
            // Budget exhausted: acceptable output is a bracket, but the criterion asks for exact values.
            ok = false;
            bool brackets = r.lower <= expected[i].first && expected[i].first <= r.upper;
            part += " bounds " + std::to_string(r.lower) + ".." + std::to_string(r.upper) +
                    (brackets ? " (bracket the printed value)" : " (DO NOT bracket the printed value)");
        }
        detail += (i ? "; " : "") + part + " in " + fmt(r.stats.elapsed_seconds);
    }
    return {ok, detail};
}

Outcome table_two() {
    RecordsDb db = load_records(records_path());
    auto start = Clock::now();
    std::vector<QuantumParams> all;
    for (QuantumParams base : {QuantumParams{42, 10, 9, true, "", {}}, QuantumParams{70, 40, 7, true, "", {}},
                               QuantumParams{74, 36, 9, true, "", {}}, QuantumParams{78, 40, 9, true, "", {}}}) {
        auto c = derive_closure(base, 6, Window{1, base.n + 3, base.k - 3});
        all.insert(all.end(), c.begin(), c.end());
    }
    std::set<std::tuple<int, int, int>> improved;
    for (const auto &r : compare_records(all, db)) {
        if (r.verdict == RecordVerdict::kImproves) {
            improved.insert({r.candidate.n, r.candidate.k, r.candidate.d});
        }
    }
    double t = seconds_since(start);
    std::set<std::tuple<int, int, int>> expected(table_two_improvements().begin(), table_two_improvements().end());
    size_t missing = 0, extra = 0;
    for (const auto &e : expected) {
        missing += !improved.contains(e);
    }
    for (const auto &e : improved) {
        extra += !expected.contains(e);
    }
    return {improved == expected && t <= 1, std::to_string(improved.size()) + " improvements (" +
                                                std::to_string(missing) + " missing, " + std::to_string(extra) +
                                                " extra), " + fmt(t)};
}

Outcome dimension_theorem() {
    std::mt19937_64 rng(5);
    auto start = Clock::now();
    int failures = 0, tested = 0;
    for (int t = 0; t < 200; t++) {
        int n = 7 + 2 * (t % 5);
        Qc2Spec s{n, random_divisor(rng, n), random_divisor(rng, n), random_poly(rng, n)};
        while (!dimension_condition(s)) {
            s.nu = random_poly(rng, n);
        }
        tested++;
        failures += static_cast<int>(build_qc_code(s).dimension()) != 2 * n - s.g1.degree() - s.g2.degree();
    }
    double t = seconds_since(start);
    return {failures == 0 && t <= 60, std::to_string(tested) + " specs, " + std::to_string(failures) +
                                          " rank failures, " + fmt(t)};
}

Outcome oracle_agreement() {
    std::mt19937_64 rng(6);
    auto start = Clock::now();
    int verdict_bad = 0, bz_bad = 0, exchange_bad = 0, involution_bad = 0;
    for (int n : {7, 9, 11, 13, 15}) {
        for (int t = 0; t < 100; t++) {
            Qc2Spec s{n, random_divisor(rng, n), random_divisor(rng, n), random_poly(rng, n)};
            LinearCode c = build_qc_code(s);
            verdict_bad += dual_containing_symbolic(s).holds != dual_containing_matrix(c, hermitian_dual(c));
        }
    }
    for (int t = 0; t < 50; t++) {
        std::optional<LinearCode> c;
        if (t % 2) {
            size_t n = 4 + rng() % 17;
            c.emplace(random_matrix(rng, 1 + rng() % std::min<size_t>(10, n - 1), n));
        } else {
            int n = 5 + 2 * static_cast<int>(rng() % 3);  // quasi-cyclic, length 10..18
            do {
                c.emplace(build_qc_code({n, random_divisor(rng, n), random_divisor(rng, n), random_poly(rng, n)}));
            } while (c->dimension() > 10);
        }
        if (c->dimension() == 0) {
            continue;
        }
        bz_bad += min_distance_bz(*c).value() != min_distance_bruteforce(*c).value();
    }
    for (int t = 0; t < 1000; t++) {
        int n = 1 + 2 * static_cast<int>(rng() % 8);
        QuotientContext ctx(n);
        Poly f = random_poly(rng, n), g = random_poly(rng, n), h = random_poly(rng, n);
        exchange_bad += hermitian_inner_product(mulmod(f, g, ctx).to_vector(n), h.to_vector(n)) !=
                        hermitian_inner_product(g.to_vector(n), mulmod(adjoint(f, ctx), h, ctx).to_vector(n));
    }
    for (int t = 0; t < 100; t++) {
        size_t n = 2 + rng() % 11;
        LinearCode c(random_matrix(rng, 1 + rng() % std::min<size_t>(n - 1, 6), n));
        size_t k = c.dimension();
        WeightEnumerator a = weight_enumerator_exhaustive(c, 1);
        involution_bad += macwilliams_transform(macwilliams_transform(a, n, k), n, n - k) != a;
    }
    double t = seconds_since(start);
    int total = verdict_bad + bz_bad + exchange_bad + involution_bad;
    return {total == 0 && t <= 300,
            "verdict mismatches " + std::to_string(verdict_bad) + "/500, BZ mismatches " + std::to_string(bz_bad) +
                "/50, exchange-law failures " + std::to_string(exchange_bad) + "/1000, involution failures " +
                std::to_string(involution_bad) + "/100, " + fmt(t)};
}

Outcome determinism() {
    SearchConfig cfg;
    cfg.n = 15;
    cfg.t1 = {1};
    cfg.t2 = {7};
    cfg.trials = 300;
    cfg.seed = 42;
    cfg.target_distance = 2;
    auto run = [&](unsigned workers) {
        cfg.workers = workers;
        return search_to_json(cfg, search_nu(cfg)).dump(2);
    };
    std::string a = run(1), b = run(1), c = run(8);
    Json j = Json::parse(a);
    return {a == b && a == c, std::to_string(j["codes"].size()) + " dossiers from " +
                                  std::to_string(int(j["summary"]["distinct_nu"])) + " distinct nu; " +
                                  (a == b ? "runs identical" : "runs differ") + ", " +
                                  (a == c ? "workers 1 and 8 identical" : "workers 1 and 8 differ")};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"1 Example-1 reproduction", example_one},
        {"2 Weight-prefix check", weight_prefix},
        {"3 Example-2/3/4 distances", large_examples},
        {"4 Table-2 closure", table_two},
        {"5 Dimension-theorem property suite", dimension_theorem},
        {"6 Oracle-agreement suite", oracle_agreement},
        {"7 Determinism", determinism},
    };
    int failed = 0;
    for (const auto &[name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    }
    return failed ? 1 : 0;
}
