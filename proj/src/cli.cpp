#include "fsmlab/cli.hpp"

#include <CLI11.hpp>
#include <httplib.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>

#include "fsmlab/compgraph.hpp"
#include "fsmlab/diagram.hpp"
#include "fsmlab/engine.hpp"
#include "fsmlab/io.hpp"
#include "fsmlab/service.hpp"

namespace fsmlab::cli {

namespace {

struct RunFlags {
    std::string machine;
    std::string word;
    std::size_t head = 0;
    std::optional<std::size_t> threshold;
};

struct GraphFlags {
    std::string machine;
    std::vector<std::string> states;
    std::vector<std::string> from_rules;
    std::optional<std::string> start;
    std::string output;
    std::optional<std::string> render;
};

struct CmpGraphFlags {
    RunFlags run;
    std::string output;
    std::optional<std::string> render;
};

struct ServeFlags {
    std::string host = "127.0.0.1";
    int port = 8080;
    std::optional<std::string> oracle;
    std::optional<std::string> static_dir;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::optional<MachineDef> load(const std::string& path, std::ostream& err) {
    auto result = load_machine(path);
    if (!result.ok()) {
        for (const auto& d : result.diagnostics) {
            err << to_string(d) << '\n';
        }
        return std::nullopt;
    }
    return std::move(*result.machine);
}

int exit_code_for(const Outcome& o) {
    if (std::holds_alternative<Accept>(o)) {
        return kSuccess;
    }
    return std::holds_alternative<Reject>(o) ? kRejected : kUnknown;
}

// Writes DOT to `path`, or to `out` when no path is given; optionally asks
// Graphviz to lay it out next to the DOT file.
int emit_dot(const std::string& text, const std::string& path, const std::optional<std::string>& render,
             std::ostream& out, std::ostream& err) {
    if (path.empty()) {
        if (render) {
            throw UsageError("--render needs -o");
        }
        out << text;
        return kSuccess;
    }
    std::ofstream file(path);
    file << text;
    if (!file) {
        err << "cannot write " << path << '\n';
        return kUsage;
    }
    file.close();
    if (render) {
        if (std::system("command -v dot >/dev/null 2>&1") != 0) {
            err << "warning: Graphviz 'dot' not found; wrote DOT only\n";
            return kSuccess;
        }
        const auto image = std::filesystem::path(path).replace_extension(*render).string();
        const auto cmd = "dot -T" + *render + " -o '" + image + "' '" + path + "'";
        if (std::system(cmd.c_str()) != 0) {
            err << "warning: Graphviz failed to render " << path << '\n';
        }
    }
    return kSuccess;
}

std::vector<std::size_t> select_rules(const MachineDef& def, const std::vector<std::string>& pairs) {
    std::vector<std::size_t> out;
    for (const auto& pair : pairs) {
        const auto colon = pair.rfind(':');
        if (colon == std::string::npos) {
            throw UsageError("--from-rules expects FROM:TO pairs, got '" + pair + "'");
        }
        const auto from = pair.substr(0, colon);
        const auto to = pair.substr(colon + 1);
        bool any = false;
        for (std::size_t r = 0; r < def.rules.size(); ++r) {
            if (def.rules[r].from == from && def.rules[r].to == to) {
                out.push_back(r);
                any = true;
            }
        }
        if (!any) {
            throw UsageError("no rule goes from " + from + " to " + to);
        }
    }
    return out;
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
    const auto def = load(path, err);
    if (!def) {
        return kInvalidMachine;
    }
    out << "valid: " << def->name << " (" << def->states.size() << " states, " << def->rules.size() << " rules, "
        << def->numtapes << " tapes)\n";
    return kSuccess;
}

int cmd_apply(const RunFlags& f, std::ostream& out, std::ostream& err) {
    const auto def = load(f.machine, err);
    if (!def) {
        return kInvalidMachine;
    }
    const auto outcome = apply(*def, split_word(f.word), f.head, f.threshold.value_or(default_threshold()));
    out << outcome_name(outcome) << '\n';
    return exit_code_for(outcome);
}

int cmd_trace(const RunFlags& f, std::ostream& out, std::ostream& err) {
    const auto def = load(f.machine, err);
    if (!def) {
        return kInvalidMachine;
    }
    const auto threshold = f.threshold.value_or(default_threshold());
    const auto e = explore(*def, split_word(f.word), f.head, threshold, {.stop_at_accept = true});
    const auto outcome = outcome_of(e);
    out << format_trace(e.accepting_trace ? *e.accepting_trace : *e.first_computation);
    if (const auto* unknown = std::get_if<Unknown>(&outcome)) {
        err << "unknown: " << unknown->cutoff_count << " computation(s) cut off at " << threshold << " steps\n";
    } else if (std::holds_alternative<Reject>(outcome)) {
        err << "reject\n";
    }
    return exit_code_for(outcome);
}

int cmd_graph(const GraphFlags& f, std::ostream& out, std::ostream& err) {
    const auto def = load(f.machine, err);
    if (!def) {
        return kInvalidMachine;
    }
    if (f.states.empty() && f.from_rules.empty() && !f.start) {
        return emit_dot(render_transition_diagram(*def), f.output, f.render, out, err);
    }
    std::vector<std::size_t> rules;
    std::set<StateName> keep(f.states.begin(), f.states.end());
    if (!f.from_rules.empty()) {
        rules = select_rules(*def, f.from_rules);
        if (f.states.empty()) {
            for (auto r : rules) {
                keep.insert(def->rules[r].from);
                keep.insert(def->rules[r].to);
            }
        }
    } else {
        if (keep.empty()) {
            keep.insert(def->states.begin(), def->states.end());
        }
        for (std::size_t r = 0; r < def->rules.size(); ++r) {
            if (keep.contains(def->rules[r].from) && keep.contains(def->rules[r].to)) {
                rules.push_back(r);
            }
        }
    }
    auto start = f.start;
    if (!start && keep.contains(def->start)) {
        start = def->start;
    }
    try {
        return emit_dot(render_subdiagram(*def, keep, rules, start), f.output, f.render, out, err);
    } catch (const SubsetViolation& e) {
        throw UsageError(e.what());
    }
}

int cmd_cmpgraph(const CmpGraphFlags& f, std::ostream& out, std::ostream& err) {
    const auto def = load(f.run.machine, err);
    if (!def) {
        return kInvalidMachine;
    }
    const auto g = build_cmpgraph(*def, split_word(f.run.word), f.run.head,
                                  f.run.threshold.value_or(default_threshold()));
    const int written = emit_dot(render_cmpgraph(g), f.output, f.render, out, err);
    if (written != kSuccess) {
        return written;
    }
    if (!f.output.empty()) {
        out << g.message << '\n';
    }
    switch (g.outcome) {
        case GraphOutcome::Accept: return kSuccess;
        case GraphOutcome::Reject: return kRejected;
        case GraphOutcome::Unknown: return kUnknown;
    }
    return kSuccess;
}

int cmd_serve(const ServeFlags& f, std::ostream& out, std::ostream& err) {
    ServiceOptions options;
    options.oracle_command = f.oracle;
    if (f.static_dir) {
        options.static_dir = *f.static_dir;
    }
    SessionService service(options);
    httplib::Server server;
    service.mount(server);
    out << "serving on http://" << f.host << ':' << f.port << '\n' << std::flush;
    if (!server.listen(f.host, f.port)) {
        err << "cannot listen on " << f.host << ':' << f.port << '\n';
        return kUsage;
    }
    return kSuccess;
}

void add_run_flags(CLI::App& cmd, RunFlags& f) {
    cmd.add_option("machine", f.machine, "Machine file (JSON)")->required();
    cmd.add_option("--word", f.word, "Tape 0 contents as whitespace-separated symbols, e.g. \"@ _ a b\"")->required();
    cmd.add_option("--head", f.head, "Initial head position on tape 0")->required();
    cmd.add_option("--threshold", f.threshold, "Maximum steps per computation (default 1000, or $FSMLAB_THRESHOLD)")
        ->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multitape Turing machine runner and visualizer", "fsmlab"};
    app.require_subcommand(1);

    std::string validate_path;
    auto* validate = app.add_subcommand("validate", "Check a machine file");
    validate->add_option("machine", validate_path, "Machine file (JSON)")->required();

    RunFlags apply_flags;
    auto* apply_cmd = app.add_subcommand("apply", "Run a machine on a word and print accept, reject or unknown");
    add_run_flags(*apply_cmd, apply_flags);

    RunFlags trace_flags;
    auto* trace_cmd = app.add_subcommand("trace", "Print the configurations of a computation");
    add_run_flags(*trace_cmd, trace_flags);

    GraphFlags graph_flags;
    auto* graph = app.add_subcommand("graph", "Emit the transition diagram as DOT");
    graph->add_option("machine", graph_flags.machine, "Machine file (JSON)")->required();
    graph->add_option("--states", graph_flags.states, "Keep only these states")->delimiter(',');
    graph->add_option("--from-rules", graph_flags.from_rules, "Keep only rules between FROM:TO pairs")->delimiter(',');
    graph->add_option("--start", graph_flags.start, "State to highlight as the phase start");
    graph->add_option("-o,--output", graph_flags.output, "Write DOT here instead of stdout");
    graph->add_option("--render", graph_flags.render, "Also run Graphviz to produce this format (e.g. svg)");

    CmpGraphFlags cmp_flags;
    auto* cmp = app.add_subcommand("cmpgraph", "Emit the computation graph of a word as DOT");
    add_run_flags(*cmp, cmp_flags.run);
    cmp->add_option("-o,--output", cmp_flags.output, "Write DOT here instead of stdout");
    cmp->add_option("--render", cmp_flags.render, "Also run Graphviz to produce this format (e.g. svg)");

    ServeFlags serve_flags;
    auto* serve = app.add_subcommand("serve", "Start the stepper HTTP service");
    serve->add_option("--host", serve_flags.host, "Interface to bind");
    serve->add_option("--port", serve_flags.port, "Port to listen on")->check(CLI::Range(1, 65535));
    serve->add_option("--oracle", serve_flags.oracle, "Command answering invariant queries, one JSON line each");
    serve->add_option("--static", serve_flags.static_dir, "Directory with the browser stepper")
        ->check(CLI::ExistingDirectory);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (*validate) {
            return cmd_validate(validate_path, out, err);
        }
        if (*apply_cmd) {
            return cmd_apply(apply_flags, out, err);
        }
        if (*trace_cmd) {
            return cmd_trace(trace_flags, out, err);
        }
        if (*graph) {
            return cmd_graph(graph_flags, out, err);
        }
        if (*cmp) {
            return cmd_cmpgraph(cmp_flags, out, err);
        }
        if (*serve) {
            return cmd_serve(serve_flags, out, err);
        }
    } catch (const InvalidInitial& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace fsmlab::cli
