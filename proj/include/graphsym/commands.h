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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace graphsym::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
    kExitCapacity = 3,
};

/// Environment variable overriding the default comparison tolerance.
inline constexpr const char *kToleranceEnv = "GRAPHSYM_TOLERANCE";

/// Tolerance from the flag, else the environment, else the library default.
/// Throws DomainError on an unparsable or non-positive value.
double resolve_tolerance(std::optional<double> flag);

struct BuildOptions {
    std::string graph_path;
    std::string construction;  // "cz" or "gr"
    std::optional<int> levels;
    std::string out_path;  // empty or "-" for stdout
    std::optional<double> tol;
};

struct AntisymOptions {
    int n = 0;
    std::optional<int> levels;
    std::vector<std::string> methods;  // "recursive", "oracle", "alternator"
    std::string out_path;
    std::optional<double> tol;
};

struct ClassifyOptions {
    std::string report_path;
    bool full_group = false;
    std::string out_path;
    std::optional<double> tol;
};

struct VerifyOptions {
    std::string suite = "all";
    int max_n = 4;
    std::string report_path;
    std::optional<double> tol;
};

int run_build(const BuildOptions &options, std::ostream &out, std::ostream &err);
int run_antisym(const AntisymOptions &options, std::ostream &out, std::ostream &err);
int run_classify(const ClassifyOptions &options, std::ostream &out, std::ostream &err);
int run_verify(const VerifyOptions &options, std::ostream &out, std::ostream &err);

/// Parses argv (argv[0] is the program name) and dispatches to a subcommand.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace graphsym::cli
