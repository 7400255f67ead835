#include "fsmlab/session.hpp"

#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fcntl.h>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fsmlab/io.hpp"

extern char** environ;

namespace fsmlab {

using nlohmann::json;

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::Unavailable: return "unavailable";
    }
    return "unavailable";
}

std::vector<Verdict> PredicateOracle::evaluate(std::span<const Configuration> configurations) const {
    std::vector<Verdict> out;
    out.reserve(configurations.size());
    for (const auto& cfg : configurations) {
        try {
            out.push_back(predicate_(cfg) ? Verdict::Holds : Verdict::Fails);
        } catch (...) {
            out.push_back(Verdict::Unavailable);
        }
    }
    return out;
}

json ExternalOracle::request_line(const Configuration& cfg) {
    json tapes = json::array();
    for (const auto& t : cfg.tapes) {
        tapes.push_back(json{{"head", t.head}, {"cells", t.cells}});
    }
    return json{{"state", cfg.state}, {"tapes", std::move(tapes)}};
}

namespace {

// Temporary file removed on scope exit.
class TempFile {
public:
    TempFile() {
        auto pattern = (std::filesystem::temp_directory_path() / "fsmlab-oracle-XXXXXX").string();
        fd_ = ::mkstemp(pattern.data());
        if (fd_ >= 0) {
            path_ = pattern;
        }
    }
    ~TempFile() {
        if (fd_ >= 0) {
            ::close(fd_);
            std::remove(path_.c_str());
        }
    }
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;

    bool ok() const { return fd_ >= 0; }
    const std::string& path() const { return path_; }

private:
    int fd_ = -1;
    std::string path_;
};

// Runs the command with stdin redirected from `input_path`; returns stdout, or
// nullopt when the process cannot start or exits unsuccessfully.
std::optional<std::string> run_filter(const std::string& command, const std::string& input_path) {
    int out_pipe[2];
    if (::pipe(out_pipe) != 0) {
        return std::nullopt;
    }
    posix_spawn_file_actions_t actions;
    posix_spawn_file_actions_init(&actions);
    posix_spawn_file_actions_addopen(&actions, STDIN_FILENO, input_path.c_str(), O_RDONLY, 0);
    posix_spawn_file_actions_adddup2(&actions, out_pipe[1], STDOUT_FILENO);
    posix_spawn_file_actions_addclose(&actions, out_pipe[0]);
    posix_spawn_file_actions_addclose(&actions, out_pipe[1]);

    std::string sh = "/bin/sh";
    std::string dash_c = "-c";
    std::string cmd = command;
    char* argv[] = {sh.data(), dash_c.data(), cmd.data(), nullptr};
    pid_t pid = 0;
    const int rc = posix_spawn(&pid, "/bin/sh", &actions, nullptr, argv, environ);
    posix_spawn_file_actions_destroy(&actions);
    ::close(out_pipe[1]);
    if (rc != 0) {
        ::close(out_pipe[0]);
        return std::nullopt;
    }

    std::string output;
    char buf[4096];
    for (ssize_t n; (n = ::read(out_pipe[0], buf, sizeof buf)) != 0;) {
        if (n < 0) {
            if (errno == EINTR) {
                continue;
            }
            break;
        }
        output.append(buf, static_cast<std::size_t>(n));
    }
    ::close(out_pipe[0]);

    int status = 0;
    while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
    }
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
        return std::nullopt;
    }
    return output;
}

}  // namespace

std::vector<Verdict> ExternalOracle::evaluate(std::span<const Configuration> configurations) const {
    const std::vector<Verdict> unavailable(configurations.size(), Verdict::Unavailable);
    TempFile input;
    if (!input.ok()) {
        return unavailable;
    }
    {
        std::ofstream file(input.path());
        for (const auto& cfg : configurations) {
            file << request_line(cfg).dump() << '\n';
        }
        if (!file) {
            return unavailable;
        }
    }
    const auto output = run_filter(command_, input.path());
    if (!output) {
        return unavailable;
    }

    std::vector<Verdict> verdicts;
    std::istringstream lines(*output);
    for (std::string line; std::getline(lines, line);) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        const auto answer = json::parse(line, nullptr, false);
        if (answer.is_discarded() || !answer.is_object() || !answer.contains("holds") ||
            !answer["holds"].is_boolean()) {
            return unavailable;
        }
        verdicts.push_back(answer["holds"].get<bool>() ? Verdict::Holds : Verdict::Fails);
    }
    if (verdicts.size() != configurations.size()) {
        return unavailable;
    }
    return verdicts;
}

json view_to_json(const StepView& view) {
    json tapes = json::array();
    for (const auto& t : view.tapes) {
        tapes.push_back(json{{"cells", t.cells}, {"head", t.head}});
    }
    return json{
        {"step", view.step},
        {"steps", view.total_steps},
        {"prevState", view.prev_state ? json(*view.prev_state) : json(nullptr)},
        {"currState", view.curr_state},
        {"lastRule", view.last_rule ? rule_to_json(*view.last_rule) : json(nullptr)},
        {"tapes", std::move(tapes)},
        {"invariant", to_string(view.invariant)},
        {"atBoundary", view.at_boundary},
    };
}

Session::Session(std::string id, MachineDef machine, Trace trace, Outcome outcome, std::vector<Verdict> verdicts)
    : id_(std::move(id)),
      machine_(std::move(machine)),
      trace_(std::move(trace)),
      outcome_(std::move(outcome)),
      verdicts_(std::move(verdicts)) {
    verdicts_.resize(trace_.steps.size() + 1, Verdict::Unavailable);
}

StepView Session::view() const {
    return view_at(cursor_, false);
}

StepView Session::step(Direction direction) {
    bool clamped = false;
    if (direction == Direction::Forward) {
        if (cursor_ < trace_.steps.size()) {
            ++cursor_;
        } else {
            clamped = true;
        }
    } else {
        if (cursor_ > 0) {
            --cursor_;
        } else {
            clamped = true;
        }
    }
    return view_at(cursor_, clamped);
}

StepView Session::view_at(std::size_t cursor, bool at_boundary) const {
    StepView v;
    v.step = cursor;
    v.total_steps = trace_.steps.size();
    v.at_boundary = at_boundary;
    v.invariant = verdicts_[cursor];
    if (cursor == 0) {
        v.curr_state = trace_.initial.state;
        v.tapes = trace_.initial.tapes;
        return v;
    }
    const auto& step = trace_.steps[cursor - 1];
    v.prev_state = step.before.state;
    v.curr_state = step.after.state;
    v.last_rule = step.rule;
    v.tapes = step.after.tapes;
    return v;
}

Session create_session(std::string id, const MachineDef& def, const std::vector<Symbol>& tape0, std::size_t head0,
                       std::size_t threshold, const InvariantOracle* oracle) {
    auto exploration = explore(def, tape0, head0, threshold, {.stop_at_accept = true});
    const auto outcome = outcome_of(exploration);
    Trace trace = exploration.accepting_trace ? std::move(*exploration.accepting_trace)
                                              : std::move(*exploration.first_computation);
    std::vector<Verdict> verdicts;
    if (oracle != nullptr) {
        const auto configurations = trace.configurations();
        verdicts = oracle->evaluate(configurations);
    }
    return Session(std::move(id), def, std::move(trace), outcome, std::move(verdicts));
}

}  // namespace fsmlab
