// Copyright 2026 The BPMN Analyzer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bpmn/cli.hpp"

#include "bpmn/bench.hpp"
#include "bpmn/report.hpp"
#include "bpmn/service.hpp"
#include "bpmn/xml_io.hpp"

#include "CLI11.hpp"
#include "httplib.h"

#include <fstream>
#include <iostream>
#include <sstream>

namespace bpmn {

namespace {

struct AnalyzeArgs {
    std::string file;
    std::string format = "text";
    std::size_t max_states = ExplorationLimits{}.max_states;
    bool lenient = false;
    bool no_fixes = false;
};

struct GenerateArgs {
    std::string suite;
    std::size_t branches = 0;
    std::size_t length = 0;
    std::size_t elements = 0;
    std::string out;
};

struct BenchArgs {
    std::string suite;
    std::string dir;
    std::string csv;
    std::size_t reps = kMinRepetitions;
    std::size_t branches = 0;
    std::size_t length = 0;
    std::size_t from = 5;
    std::size_t to = 4000;
    std::size_t count = 10;
    std::size_t max_states = ExplorationLimits{}.max_states;
    bool lenient = false;
};

struct ServeArgs {
    std::string host = "127.0.0.1";
    int port = 8080;
    std::size_t max_states = ExplorationLimits{}.max_states;
    bool lenient = false;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err)
{
    DiagnoseOptions options;
    options.limits.max_states = args.max_states;
    options.suggest_fixes = !args.no_fixes;
    try {
        options.limits.validate();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    CollaborationModel model;
    try {
        model = parse_bpmn(read_file(args.file), ParseOptions{args.lenient});
    } catch (const ModelError& e) {
        err << "error: " << args.file << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const auto d = diagnose(model, options);
    const auto name = model_display_name(model);
    if (args.format == "json") {
        out << diagnosis_json(d, name).dump(2) << "\n";
    } else {
        out << diagnosis_text(d, name);
    }
    if (d.any_violated()) return kExitViolation;
    if (d.any_unknown()) return kExitUnknown;
    return kExitOk;
}

int cmd_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err)
{
    CollaborationModel model;
    try {
        if (args.suite == "branches") {
            model = gen_parallel_branches({args.branches, args.length});
        } else {
            model = gen_growing_sequence(args.elements);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const auto xml = serialize_bpmn(model);
    if (args.out.empty() || args.out == "-") {
        out << xml;
        return kExitOk;
    }
    std::ofstream file(args.out, std::ios::binary);
    if (!(file << xml)) {
        err << "error: cannot write " << args.out << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err)
{
    std::vector<BenchModel> models;
    DiagnoseOptions options;
    options.limits.max_states = args.max_states;
    try {
        options.limits.validate();
        if (args.suite == "branches") {
            if (args.branches != 0 || args.length != 0) {
                models = branches_suite({{args.branches, args.length}});
            } else {
                models = branches_suite();
            }
        } else if (args.suite == "growing") {
            models = growing_suite(args.from, args.to, args.count);
        } else {
            if (args.dir.empty()) throw std::invalid_argument("--dir is required for the dir suite");
            models = directory_suite(args.dir, args.lenient);
        }
        if (args.reps < kMinRepetitions) {
            throw std::invalid_argument("at least " + std::to_string(kMinRepetitions) +
                                        " repetitions are required");
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const auto report = run_benchmark(models, args.reps, options);
    out << report.to_text();
    if (!args.csv.empty()) {
        std::ofstream file(args.csv, std::ios::binary);
        if (!(file << report.to_csv())) {
            err << "error: cannot write " << args.csv << "\n";
            return kExitUsage;
        }
    }
    return report.any_failed() ? kExitViolation : kExitOk;
}

int cmd_serve(const ServeArgs& args, std::ostream& out, std::ostream& err)
{
    ServiceOptions options;
    options.limits.max_states = args.max_states;
    options.lenient = args.lenient;
    httplib::Server server;
    mount_service(server, options);
    if (!server.bind_to_port(args.host, args.port)) {
        err << "error: cannot listen on " << args.host << ":" << args.port << "\n";
        return kExitUsage;
    }
    out << "listening on http://" << args.host << ":" << args.port << std::endl;
    server.listen_after_bind();
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Control-flow analysis of BPMN process and collaboration models", "bpmn-analyzer"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    AnalyzeArgs analyze;
    auto* a = app.add_subcommand("analyze", "Check safeness, option to complete and dead activities");
    a->add_option("file", analyze.file, "BPMN 2.0 XML file")->required();
    a->add_option("--format", analyze.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    a->add_option("--max-states", analyze.max_states, "Stop exploring after this many states");
    a->add_flag("--lenient", analyze.lenient, "Map unsupported elements instead of rejecting them");
    a->add_flag("--no-fixes", analyze.no_fixes, "Do not compute quick fixes");

    GenerateArgs generate;
    auto* g = app.add_subcommand("generate", "Write a synthetic benchmark model");
    g->add_option("--suite", generate.suite)->required()->check(CLI::IsMember({"branches", "growing"}));
    g->add_option("--branches,-n", generate.branches, "Parallel branches (branches suite)");
    g->add_option("--length,-l", generate.length, "Tasks per branch (branches suite)");
    g->add_option("--elements,-e", generate.elements, "Target flow-node count (growing suite)");
    g->add_option("--out,-o", generate.out, "Output file, stdout when omitted");

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "Time repeated analyses of a model suite");
    b->add_option("--suite", bench.suite)->required()->check(CLI::IsMember({"branches", "growing", "dir"}));
    b->add_option("--dir", bench.dir, "Directory of .bpmn files (dir suite)");
    b->add_option("--csv", bench.csv, "Also write the report as CSV");
    b->add_option("--reps", bench.reps, "Repetitions per model (at least 10)");
    b->add_option("--branches,-n", bench.branches, "Single row instead of the default table");
    b->add_option("--length,-l", bench.length);
    b->add_option("--from", bench.from, "Smallest growing member");
    b->add_option("--to", bench.to, "Largest growing member");
    b->add_option("--count", bench.count, "Number of growing members");
    b->add_option("--max-states", bench.max_states);
    b->add_flag("--lenient", bench.lenient);

    ServeArgs serve;
    auto* s = app.add_subcommand("serve", "Run the HTTP analysis service");
    s->add_option("--port,-p", serve.port)->check(CLI::Range(0, 65535));
    s->add_option("--host", serve.host);
    s->add_option("--max-states", serve.max_states);
    s->add_flag("--lenient", serve.lenient);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (a->parsed()) return cmd_analyze(analyze, out, err);
        if (g->parsed()) return cmd_generate(generate, out, err);
        if (b->parsed()) return cmd_bench(bench, out, err);
        return cmd_serve(serve, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace bpmn
