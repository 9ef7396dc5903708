// Copyright 2026 The graphsym Authors
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

#include "graphsym/commands.h"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "graphsym/construct.h"
#include "graphsym/errors.h"
#include "graphsym/report.h"
#include "graphsym/verify.h"

namespace graphsym::cli {

double resolve_tolerance(std::optional<double> flag) {
    double tol = kDefaultTolerance;
    if (flag) {
        tol = *flag;
    } else if (const char *env = std::getenv(kToleranceEnv); env != nullptr && *env != '\0') {
        char *end = nullptr;
        tol = std::strtod(env, &end);
        if (end == env || *end != '\0') {
            throw DomainError(std::string(kToleranceEnv) + " is not a number: '" + env + "'");
        }
    }
    if (!(tol > 0) || !std::isfinite(tol)) {
        throw DomainError("tolerance must be a positive number");
    }
    return tol;
}

namespace {

void write_output(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw DomainError("cannot write '" + path + "'");
    }
    file << text;
}

/// Maps library exceptions onto the exit-code contract.
template <typename Body>
int guarded(std::ostream &err, Body body) {
    try {
        return body();
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapacityError &e) {
        err << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

StateVector build_antisym(const std::string &method, int n, int d) {
    if (method == "recursive") {
        return antisymmetric_state(n, d);
    }
    if (method == "oracle") {
        return oracle_antisymmetric_state(n, d);
    }
    if (method == "alternator") {
        return alternator_state(n, d);
    }
    throw DomainError("unknown method '" + method + "'");
}

}  // namespace

int run_build(const BuildOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const double tol = resolve_tolerance(options.tol);
        GraphFile graph = load_graph_file(options.graph_path);
        std::optional<int> levels = options.levels ? options.levels : graph.levels;
        Json report;
        if (options.construction == "cz") {
            if (graph.directed) {
                err << "error: cz construction needs an undirected graph file\n";
                return static_cast<int>(kExitUsage);
            }
            if (levels && *levels != 2) {
                err << "error: cz construction is defined on qubits (d = 2), got d = " << *levels << "\n";
                return static_cast<int>(kExitUsage);
            }
            StateVector state = cz_graph_state(graph.undirected());
            report = make_report("cz", state, classify(state, tol), graph);
        } else if (options.construction == "gr") {
            if (!graph.directed) {
                err << "error: gr construction needs a directed graph file\n";
                return static_cast<int>(kExitUsage);
            }
            const int d = levels.value_or(graph.num_vertices);
            auto built = gr_graph_state(graph.oriented(), d);
            for (const auto &w : built.warnings) {
                err << "warning: " << w << "\n";
            }
            report = make_report("gr", built.state, classify(built.state, tol), graph, built.trace, built.warnings);
        } else {
            err << "error: unknown construction '" << options.construction << "'\n";
            return static_cast<int>(kExitUsage);
        }
        write_output(options.out_path, dump(report), out);
        return static_cast<int>(kExitOk);
    });
}

int run_antisym(const AntisymOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const double tol = resolve_tolerance(options.tol);
        const int n = options.n;
        if (n < 2) {
            throw DomainError("n must be at least 2, got " + std::to_string(n));
        }
        const int d = options.levels.value_or(n);
        if (d < n) {
            throw DomainError("levels must be at least n = " + std::to_string(n) + ", got " + std::to_string(d));
        }
        std::vector<std::string> methods = options.methods.empty() ? std::vector<std::string>{"recursive"}
                                                                   : options.methods;
        std::vector<StateVector> states;
        for (const auto &m : methods) {
            states.push_back(build_antisym(m, n, d));
        }
        Json report = make_report(methods.front(), states.front(), classify(states.front(), tol));
        report["methods"] = methods;
        Json comparisons = Json::array();
        for (std::size_t i = 0; i < states.size(); i++) {
            for (std::size_t j = i + 1; j < states.size(); j++) {
                Json c;
                c["a"] = methods[i];
                c["b"] = methods[j];
                c["fidelity"] = round_report_value(fidelity(states[i], states[j]));
                c["max_abs_difference"] = round_report_value(max_abs_difference(states[i], states[j]));
                c["exact_equal"] = equal_exact(states[i], states[j], tol);
                c["equal_up_to_global_phase"] = equal_up_to_global_phase(states[i], states[j], tol);
                comparisons.push_back(c);
            }
        }
        if (!comparisons.empty()) {
            report["comparisons"] = comparisons;
        }
        write_output(options.out_path, dump(report), out);
        return static_cast<int>(kExitOk);
    });
}

int run_classify(const ClassifyOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const double tol = resolve_tolerance(options.tol);
        std::ifstream in(options.report_path);
        if (!in) {
            throw DomainError("cannot open '" + options.report_path + "'");
        }
        Json report = Json::parse(in);
        StateVector state = state_from_report(report);
        Json result;
        result["num_qudits"] = state.num_qudits();
        result["levels"] = state.levels();
        result["norm"] = round_report_value(state.norm());
        SymmetryClass fast = classify(state, tol);
        result["classification"] = classification_json(fast);
        if (options.full_group) {
            SymmetryClass full = check_full_group(state, tol);
            result["full_group"] = classification_json(full);
            result["agree"] = full == fast;
        }
        write_output(options.out_path, dump(result), out);
        return static_cast<int>(kExitOk);
    });
}

int run_verify(const VerifyOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const double tol = resolve_tolerance(options.tol);
        VerifyOutcome outcome = run_suite(options.suite, options.max_n, tol);
        if (!options.report_path.empty()) {
            write_output(options.report_path, dump(outcome.summary), out);
            out << options.suite << ": " << (outcome.passed ? "PASS" : "FAIL") << "\n";
        } else {
            out << dump(outcome.summary);
        }
        return static_cast<int>(outcome.passed ? kExitOk : kExitVerificationFailed);
    });
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Build graph states and classify their exchange symmetry", "graphsym"};
    app.require_subcommand(1);
    std::optional<double> tol;
    app.add_option("--tol", tol, "Comparison tolerance (default 1e-9, or $GRAPHSYM_TOLERANCE)");

    BuildOptions build;
    auto *build_cmd = app.add_subcommand("build", "Build the state of a graph file and emit an amplitude report");
    build_cmd->add_option("graph", build.graph_path, "Graph file")->required();
    build_cmd->add_option("-c,--construction", build.construction, "cz or gr")
        ->required()
        ->check(CLI::IsMember({"cz", "gr"}));
    build_cmd->add_option("-d,--levels", build.levels, "Qudit dimension (gr default: number of vertices)");
    build_cmd->add_option("-o,--out", build.out_path, "Report path (default stdout)");

    AntisymOptions antisym;
    auto *antisym_cmd = app.add_subcommand("antisym", "Build the recursive antisymmetric state and its references");
    antisym_cmd->add_option("n", antisym.n, "Number of qudits")->required();
    antisym_cmd->add_option("-d,--levels", antisym.levels, "Qudit dimension (default n)");
    antisym_cmd->add_option("-m,--method", antisym.methods, "recursive, oracle or alternator; repeat to compare")
        ->check(CLI::IsMember({"recursive", "oracle", "alternator"}));
    antisym_cmd->add_option("-o,--out", antisym.out_path, "Report path (default stdout)");

    ClassifyOptions classify_opts;
    auto *classify_cmd = app.add_subcommand("classify", "Classify the state stored in an amplitude report");
    classify_cmd->add_option("report", classify_opts.report_path, "Amplitude report (JSON)")->required();
    classify_cmd->add_flag("--full-group", classify_opts.full_group, "Also test every permutation of S_n");
    classify_cmd->add_option("-o,--out", classify_opts.out_path, "Output path (default stdout)");

    VerifyOptions verify;
    auto *verify_cmd = app.add_subcommand("verify", "Run exhaustive verification suites");
    verify_cmd->add_option("-s,--suite", verify.suite, "theorem1, impossibility, antisymmetry or all")
        ->check(CLI::IsMember({"theorem1", "impossibility", "antisymmetry", "all"}));
    verify_cmd->add_option("-n,--max-n", verify.max_n, "Largest graph / qudit count");
    verify_cmd->add_option("-r,--report", verify.report_path, "Summary path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (*build_cmd) {
        build.tol = tol;
        return run_build(build, out, err);
    }
    if (*antisym_cmd) {
        antisym.tol = tol;
        return run_antisym(antisym, out, err);
    }
    if (*classify_cmd) {
        classify_opts.tol = tol;
        return run_classify(classify_opts, out, err);
    }
    verify.tol = tol;
    return run_verify(verify, out, err);
}

}  // namespace graphsym::cli
