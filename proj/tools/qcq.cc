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


// qcq: command-line front end. Exit codes: 0 success, 2 validation or parse error, 3 distance
// budget exhausted with only bounds, 4 internal invariant violation.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "qcq/app.h"
#include "qcq/errors.h"
#include "qcq/qc2.h"

using namespace qcq;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kBoundsOnly = 3;
constexpr int kInvariant = 4;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json read_json(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_json(const std::string &path, const Json &j) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write " + path);
    }
    out << j.dump(2) << "\n";
}

RecordsDb read_records(const std::string &path) {
    try {
        return load_records(path);
    } catch (const std::runtime_error &e) {
        throw InputError(e.what());
    }
}

std::string join(const std::vector<int> &v) {
    std::string out;
    for (size_t i = 0; i < v.size(); i++) {
        out += (i ? " " : "") + std::to_string(v[i]);
    }
    return out;
}

void print_distance(const DistanceResult &d) {
    std::cout << "distance: " << (d.exact() ? std::to_string(d.value()) : std::to_string(d.lower) + ".." + std::to_string(d.upper))
              << " (" << to_string(d.kind) << ", " << to_string(d.method) << ", " << d.stats.codewords << " codewords, "
              << d.stats.information_sets << " information sets, " << std::fixed << std::setprecision(3)
              << d.stats.elapsed_seconds << " s)\n";
}

void print_dossier(const CodeDossier &d) {
    std::cout << "spec: n=" << d.spec.n << " g1=" << format_coeff_string(d.spec.g1)
              << " g2=" << format_coeff_string(d.spec.g2) << " nu=" << format_coeff_string(d.spec.nu) << "\n";
    std::cout << "classical: [" << d.length << "," << d.dimension << "]  dual: [" << d.length << ","
              << d.dual_dimension << "]\n";
    if (d.distance) {
        print_distance(*d.distance);
    }
    if (d.quantum) {
        std::cout << "quantum: " << *d.quantum << "\n";
    }
    for (const auto &w : d.warnings) {
        std::cout << "warning: " << w << "\n";
    }
}

void print_checks(const CodeDossier &d) {
    const auto &v = d.checks.symbolic;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "g1 | g1^dual:                    " << yn(v.g1_divides_dual1) << "\n"
              << "g2 | g2^dual:                    " << yn(v.g2_divides_dual2) << "\n"
              << "g2 | (nu + nu-bar) g1^dual:      " << yn(v.cross_condition) << "\n"
              << "g1 | (nu nu-bar + 1) g1^dual:    " << yn(v.norm_condition_1) << "\n"
              << "g2 | (nu nu-bar + 1) g2^dual:    " << yn(v.norm_condition_2) << "\n"
              << "dual generators complete:        " << yn(v.dual_generators_complete) << "\n"
              << "spectral test:                   " << yn(v.spectral) << "\n"
              << "symbolic verdict:                " << yn(v.holds) << "\n"
              << "matrix oracle:                   " << yn(d.checks.matrix) << "\n"
              << "gcd(nu - 1, x^n - 1) = 1:        " << yn(d.checks.dimension_condition) << "\n"
              << "2n - deg g1 - deg g2:            " << d.checks.formula_dimension << " (rank " << d.dimension << ")\n";
}

DistanceOptions distance_options(double budget, unsigned workers) {
    if (budget <= 0) {
        throw SpecError("--budget must be positive");
    }
    DistanceOptions o;
    o.budget = std::chrono::duration<double>(budget);
    o.workers = workers;
    return o;
}

QuantumParams require_quantum(CodeDossier &d) {
    if (!d.quantum) {
        d.quantum = dossier_quantum(d);
    }
    return *d.quantum;
}

struct Args {
    bool json = false;
    int n = 0;
    std::string g1, g2, nu, out, file, method = "auto", config, db, candidates, out_dir;
    double budget = 900;
    unsigned workers = 0;
    int max_n = 0, min_k = 0, steps = 6;
};

int run_cosets(const Args &a) {
    Json rows = Json::array();
    for (const auto &c : all_cosets(a.n)) {
        CosetClass k = classify(c);
        rows.push_back({{"rep", c.rep}, {"size", c.members.size()}, {"members", c.members},
                        {"skew_symmetric", k.skew_symmetric}, {"partner_rep", k.partner_rep}});
    }
    if (a.json) {
        std::cout << Json{{"n", a.n}, {"cosets", rows}}.dump(2) << "\n";
        return kOk;
    }
    std::cout << "rep  size  class                members\n";
    for (const auto &r : rows) {
        std::string cls = r["skew_symmetric"] ? "skew-symmetric" : "pair with C" + std::to_string(int(r["partner_rep"]));
        std::cout << std::left << std::setw(5) << int(r["rep"]) << std::setw(6) << size_t(r["size"]) << std::setw(21)
                  << cls << join(r["members"].get<std::vector<int>>()) << "\n";
    }
    return kOk;
}

int run_construct(const Args &a) {
    Qc2Spec spec{a.n, parse_coeff_string(a.g1), parse_coeff_string(a.g2), parse_coeff_string(a.nu)};
    CodeDossier d = build_dossier(spec);
    Json j = dossier_to_json(d);
    if (!a.out.empty()) {
        write_json(a.out, j);
    }
    if (a.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        print_dossier(d);
    }
    return kOk;
}

int run_check(const Args &a) {
    CodeDossier d = dossier_from_json(read_json(a.file));
    if (a.json) {
        std::cout << dossier_to_json(d)["checks"].dump(2) << "\n";
    } else {
        print_checks(d);
    }
    return kOk;
}

int run_distance(const Args &a) {
    CodeDossier d = dossier_from_json(read_json(a.file));
    d.distance = compute_distance(build_qc_code(d.spec), a.method, distance_options(a.budget, a.workers));
    d.quantum.reset();
    if (d.distance->exact() && d.checks.matrix) {
        d.quantum = dossier_quantum(d);
    }
    write_json(a.file, dossier_to_json(d));
    if (a.json) {
        std::cout << distance_to_json(*d.distance, true).dump(2) << "\n";
    } else {
        print_distance(*d.distance);
    }
    return d.distance->exact() ? kOk : kBoundsOnly;
}

int run_quantum(const Args &a) {
    CodeDossier d = dossier_from_json(read_json(a.file));
    if (d.distance && !d.distance->exact()) {
        std::cerr << "qcq: only distance bounds " << d.distance->lower << ".." << d.distance->upper
                  << " are known; rerun `distance` with a larger budget\n";
        return kBoundsOnly;
    }
    QuantumParams q = require_quantum(d);
    write_json(a.file, dossier_to_json(d));
    if (a.json) {
        std::cout << quantum_to_json(q).dump(2) << "\n";
    } else {
        std::cout << q << "\n";
    }
    return kOk;
}

int run_derive(const Args &a) {
    CodeDossier d = dossier_from_json(read_json(a.file));
    QuantumParams base = require_quantum(d);
    Window w{1, a.max_n ? a.max_n : base.n, a.min_k};
    auto closure = derive_closure(base, a.steps, w);
    if (a.json) {
        Json out = Json::array();
        for (const auto &q : closure) {
            out.push_back(quantum_to_json(q));
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto &q : closure) {
            std::cout << q << "\n";
        }
    }
    return kOk;
}

int run_search(const Args &a) {
    SearchConfig cfg = config_from_json(read_json(a.config));
    if (a.workers) {
        cfg.workers = a.workers;
    }
    SearchOutcome outcome = search_nu(cfg);
    Json j = search_to_json(cfg, outcome);
    if (!a.out_dir.empty()) {
        fs::create_directories(a.out_dir);
        Json index = Json::array();
        for (size_t i = 0; i < outcome.dossiers.size(); i++) {
            std::ostringstream name;
            name << "code_" << std::setw(4) << std::setfill('0') << i << ".json";
            write_json((fs::path(a.out_dir) / name.str()).string(), j["codes"][i]);
            index.push_back({{"file", name.str()}, {"nu", j["codes"][i]["spec"]["nu"]},
                             {"quantum", outcome.dossiers[i].quantum ? Json(outcome.dossiers[i].quantum->label()) : Json(nullptr)}});
        }
        write_json((fs::path(a.out_dir) / "index.json").string(),
                   Json{{"config", j["config"]}, {"summary", j["summary"]}, {"files", index}});
    }
    if (a.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "summary: " << j["summary"].dump() << "\n";
        for (const auto &d : outcome.dossiers) {
            std::cout << "nu=" << format_coeff_string(d.spec.nu) << "  [" << d.length << "," << d.dimension << ","
                      << (d.distance->exact() ? std::to_string(d.distance->value())
                                              : std::to_string(d.distance->lower) + ".." + std::to_string(d.distance->upper))
                      << "]" << (d.quantum ? "  " + d.quantum->label() : "") << "\n";
        }
    }
    return outcome.summary.bounds_only ? kBoundsOnly : kOk;
}

int run_records(const Args &a) {
    RecordsDb db = read_records(a.db);
    if (!fs::is_directory(a.candidates)) {
        throw InputError("not a directory: " + a.candidates);
    }
    std::vector<fs::path> files;
    for (const auto &e : fs::directory_iterator(a.candidates)) {
        if (e.path().extension() == ".json") {
            files.push_back(e.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<QuantumParams> candidates;
    for (const auto &f : files) {
        Json j = read_json(f.string());
        if (!j.is_object() || !j.contains("spec")) {
            continue;  // index files and other artifacts
        }
        CodeDossier d = dossier_from_json(j);
        if (d.quantum) {
            candidates.push_back(*d.quantum);
        }
    }
    auto cmp = compare_records(candidates, db);
    if (a.json) {
        Json out = Json::array();
        for (const auto &c : cmp) {
            out.push_back({{"code", c.candidate.label()}, {"verdict", to_string(c.verdict)},
                           {"record_d", c.record ? Json(c.record->d_best) : Json(nullptr)}});
        }
        std::cout << Json{{"results", out}, {"warnings", db.warnings}}.dump(2) << "\n";
    } else {
        for (const auto &w : db.warnings) {
            std::cout << "warning: " << w << "\n";
        }
        for (const auto &c : cmp) {
            std::cout << std::left << std::setw(16) << c.candidate.label() << std::setw(10) << to_string(c.verdict)
                      << (c.record ? "record d=" + std::to_string(c.record->d_best) : "no record") << "\n";
        }
    }
    return kOk;
}

int run_reproduce(const Args &a) {
    RecordsDb db = read_records(a.db);
    ReproductionOptions o;
    o.distance = distance_options(a.budget, a.workers);
    ReproductionReport r = reproduce_tables(reference_constructions(), db, o);
    Json j = report_to_json(r);
    if (a.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto &row : r.rows) {
            std::cout << row.label << "\n";
            if (row.error) {
                std::cout << "  error: " << *row.error << "\n";
                continue;
            }
            for (const auto &c : row.checks) {
                std::cout << "  [" << (c.agrees ? "computed  " : "discrepant") << "] " << c.quantity << ": printed "
                          << c.claimed << ", computed " << c.computed << "\n";
            }
        }
        std::cout << "Table 2 (" << r.table_two.size() << " improvements listed, " << r.improvements.size()
                  << " found)\n";
        for (const auto &t : r.table_two) {
            std::cout << "  [" << (t.computed ? "computed  " : "discrepant") << "] [[" << t.n << "," << t.k << ","
                      << t.d << "]]\n";
        }
        for (const auto &w : r.record_warnings) {
            std::cout << "warning: " << w << "\n";
        }
        std::cout << (r.all_agree() ? "all printed values reproduced\n" : "some printed values are discrepant\n");
    }
    for (const auto &row : r.rows) {
        if (row.dossier && row.dossier->distance && !row.dossier->distance->exact()) {
            return kBoundsOnly;
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quasi-cyclic GF(4) codes and the binary quantum codes they yield"};
    app.require_subcommand(1);
    Args a;
    auto json_flag = [&](CLI::App *s) { s->add_flag("--json", a.json, "Machine-readable output"); };

    auto *cosets = app.add_subcommand("cosets", "4-cyclotomic cosets mod n with skew-symmetry classification");
    cosets->add_option("--n", a.n, "Odd length")->required();
    auto *construct = app.add_subcommand("construct", "Build a code from (n, g1, g2, nu) and write its dossier");
    construct->add_option("--n", a.n)->required();
    construct->add_option("--g1", a.g1, "Coefficient string, ascending, e.g. 1^{2}01")->required();
    construct->add_option("--g2", a.g2)->required();
    construct->add_option("--nu", a.nu)->required();
    construct->add_option("--out", a.out, "Dossier file to write");
    auto *check = app.add_subcommand("check", "Dual-containment verdicts for a dossier");
    check->add_option("file", a.file)->required();
    auto *distance = app.add_subcommand("distance", "Minimum distance; updates the dossier");
    distance->add_option("file", a.file)->required();
    distance->add_option("--method", a.method)->check(CLI::IsMember({"auto", "bf", "bz"}));
    distance->add_option("--budget", a.budget, "Seconds");
    distance->add_option("--workers", a.workers, "0: all cores");
    auto *quantum = app.add_subcommand("quantum", "Hermitian construction; updates the dossier");
    quantum->add_option("file", a.file)->required();
    auto *derive = app.add_subcommand("derive", "Propagation-rule closure of the dossier's quantum code");
    derive->add_option("file", a.file)->required();
    derive->add_option("--max-n", a.max_n)->required();
    derive->add_option("--min-k", a.min_k)->required();
    derive->add_option("--steps", a.steps);
    auto *search = app.add_subcommand("search", "Search over nu(x) for fixed defining sets");
    search->add_option("--config", a.config)->required();
    search->add_option("--out-dir", a.out_dir, "Write one dossier per code plus index.json");
    search->add_option("--workers", a.workers, "Overrides the config; does not change the result");
    auto *records = app.add_subcommand("records", "Compare dossiers against a records table");
    records->add_option("--db", a.db)->required();
    records->add_option("--candidates", a.candidates)->required();
    auto *reproduce = app.add_subcommand("reproduce", "Recompute the reference constructions and improvements");
    reproduce->add_option("--db", a.db)->required();
    reproduce->add_option("--budget", a.budget, "Seconds per distance computation");
    reproduce->add_option("--workers", a.workers, "0: all cores");
    for (auto *s : {cosets, construct, check, distance, quantum, derive, search, records, reproduce}) {
        json_flag(s);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        if (*cosets) return run_cosets(a);
        if (*construct) return run_construct(a);
        if (*check) return run_check(a);
        if (*distance) return run_distance(a);
        if (*quantum) return run_quantum(a);
        if (*derive) return run_derive(a);
        if (*search) return run_search(a);
        if (*records) return run_records(a);
        if (*reproduce) return run_reproduce(a);
    } catch (const InvariantViolation &e) {
        std::cerr << "qcq: invariant violation: " << e.what() << "\n";
        return kInvariant;
    } catch (const std::invalid_argument &e) {
        std::cerr << "qcq: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::out_of_range &e) {
        std::cerr << "qcq: " << e.what() << "\n";
        return kInvalid;
    } catch (const ContractError &e) {
        std::cerr << "qcq: " << e.what() << "\n";
        return kInvalid;
    } catch (const InputError &e) {
        std::cerr << "qcq: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception &e) {
        std::cerr << "qcq: internal error: " << e.what() << "\n";
        return kInvariant;
    }
    return kInvalid;
}
