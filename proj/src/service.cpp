#include "fsmlab/service.hpp"

#include <httplib.h>

#include <iomanip>
#include <random>
#include <sstream>

#include "fsmlab/fixtures.hpp"
#include "fsmlab/io.hpp"

namespace fsmlab {

using nlohmann::json;

SessionStore::SessionStore(std::chrono::seconds idle_expiry, std::function<Clock::time_point()> now)
    : idle_expiry_(idle_expiry), now_(std::move(now)), salt_(std::random_device{}()) {
    salt_ = (salt_ << 32) ^ std::random_device{}();
}

void SessionStore::expire_locked(Clock::time_point now) {
    for (auto it = sessions_.begin(); it != sessions_.end();) {
        if (now - it->second->last_used > idle_expiry_) {
            it = sessions_.erase(it);
        } else {
            ++it;
        }
    }
}

std::string SessionStore::fresh_id_locked() {
    std::mt19937_64 mix(salt_ + counter_++);
    std::ostringstream os;
    os << std::hex << std::setfill('0') << std::setw(16) << mix();
    return os.str();
}

std::string SessionStore::add(std::function<Session(std::string id)> make) {
    std::string id;
    {
        std::lock_guard guard(mutex_);
        do {
            id = fresh_id_locked();
        } while (sessions_.contains(id));
    }
    // Building a session may run a long exploration; keep the table unlocked meanwhile.
    auto entry = std::make_shared<Entry>(make(id));
    std::lock_guard guard(mutex_);
    const auto now = now_();
    expire_locked(now);
    entry->last_used = now;
    sessions_.emplace(id, std::move(entry));
    return id;
}

bool SessionStore::erase(const std::string& id) {
    std::lock_guard guard(mutex_);
    expire_locked(now_());
    return sessions_.erase(id) > 0;
}

std::size_t SessionStore::size() {
    std::lock_guard guard(mutex_);
    expire_locked(now_());
    return sessions_.size();
}

bool SessionStore::with(const std::string& id, const std::function<void(Session&)>& fn) {
    std::shared_ptr<Entry> entry;
    {
        std::lock_guard guard(mutex_);
        const auto now = now_();
        expire_locked(now);
        auto it = sessions_.find(id);
        if (it == sessions_.end()) {
            return false;
        }
        entry = it->second;
        entry->last_used = now;
    }
    std::lock_guard guard(entry->lock);
    fn(entry->session);
    return true;
}

namespace {

void send_json(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

void send_diagnostics(httplib::Response& res, const std::vector<Diagnostic>& diags) {
    send_json(res, 422, diagnostics_to_json(diags));
}

void send_problem(httplib::Response& res, const std::string& code, const std::string& locus,
                  const std::string& message) {
    send_json(res, 422, json::array({json{{"code", code}, {"message", message}, {"locus", locus}}}));
}

void send_not_found(httplib::Response& res, const std::string& id) {
    send_json(res, 404, json{{"error", "no session " + id}});
}

}  // namespace

SessionService::SessionService(ServiceOptions options)
    : options_(std::move(options)), store_(options_.idle_expiry) {}

void SessionService::mount(httplib::Server& server) {
    server.Post("/api/sessions", [this](const httplib::Request& req, httplib::Response& res) {
        const auto body = json::parse(req.body, nullptr, false);
        if (body.is_discarded() || !body.is_object()) {
            send_problem(res, "Malformed", "body", "request body must be a JSON object");
            return;
        }
        if (!body.contains("machine")) {
            send_problem(res, "Malformed", "machine", "missing key 'machine'");
            return;
        }
        auto validated = machine_from_json(body["machine"]);
        if (!validated.ok()) {
            send_diagnostics(res, validated.diagnostics);
            return;
        }
        if (!body.contains("tape0") || !body["tape0"].is_array()) {
            send_problem(res, "Malformed", "tape0", "tape0 must be an array of symbols");
            return;
        }
        std::vector<Symbol> tape0;
        for (const auto& cell : body["tape0"]) {
            if (!cell.is_string()) {
                send_problem(res, "Malformed", "tape0", "tape0 must be an array of symbols");
                return;
            }
            tape0.push_back(cell.get<std::string>());
        }
        if (!body.contains("head0") || !body["head0"].is_number_integer() || body["head0"].get<long long>() < 0) {
            send_problem(res, "Malformed", "head0", "head0 must be a non-negative integer");
            return;
        }
        const auto head0 = body["head0"].get<std::size_t>();
        std::size_t threshold = default_threshold();
        if (body.contains("threshold") && !body["threshold"].is_null()) {
            if (!body["threshold"].is_number_integer() || body["threshold"].get<long long>() < 1) {
                send_problem(res, "Malformed", "threshold", "threshold must be a positive integer");
                return;
            }
            threshold = body["threshold"].get<std::size_t>();
        }
        bool external = false;
        if (body.contains("invariant") && !body["invariant"].is_null()) {
            if (body["invariant"] != "external") {
                send_problem(res, "Malformed", "invariant", "invariant must be \"external\" or null");
                return;
            }
            external = true;
        }

        std::optional<ExternalOracle> oracle;
        if (external && options_.oracle_command) {
            oracle.emplace(*options_.oracle_command);
        }
        const InvariantOracle* oracle_ptr = oracle ? &*oracle : nullptr;
        const auto& def = *validated.machine;
        try {
            std::size_t steps = 0;
            std::string outcome;
            const auto id = store_.add([&](std::string id) {
                auto s = create_session(std::move(id), def, tape0, head0, threshold, oracle_ptr);
                steps = s.steps();
                outcome = outcome_name(s.outcome());
                return s;
            });
            send_json(res, 201, json{{"id", id}, {"steps", steps}, {"outcome", outcome}});
        } catch (const InvalidInitial& e) {
            send_problem(res, "InvalidInitial", "tape0", e.what());
        }
    });

    server.Get(R"(/api/sessions/([0-9a-f]+))", [this](const httplib::Request& req, httplib::Response& res) {
        const auto id = req.matches[1].str();
        std::optional<StepView> view;
        if (!store_.with(id, [&](Session& s) { view = s.view(); })) {
            send_not_found(res, id);
            return;
        }
        send_json(res, 200, view_to_json(*view));
    });

    server.Post(R"(/api/sessions/([0-9a-f]+)/step)", [this](const httplib::Request& req, httplib::Response& res) {
        const auto id = req.matches[1].str();
        const auto body = json::parse(req.body, nullptr, false);
        std::string requested;
        if (body.is_object() && body.contains("direction") && body["direction"].is_string()) {
            requested = body["direction"].get<std::string>();
        }
        Direction direction{};
        if (requested == "forward") {
            direction = Direction::Forward;
        } else if (requested == "backward") {
            direction = Direction::Backward;
        } else {
            send_problem(res, "Malformed", "direction", "direction must be \"forward\" or \"backward\"");
            return;
        }
        std::optional<StepView> view;
        if (!store_.with(id, [&](Session& s) { view = s.step(direction); })) {
            send_not_found(res, id);
            return;
        }
        send_json(res, 200, view_to_json(*view));
    });

    server.Delete(R"(/api/sessions/([0-9a-f]+))", [this](const httplib::Request& req, httplib::Response& res) {
        const auto id = req.matches[1].str();
        if (!store_.erase(id)) {
            send_not_found(res, id);
            return;
        }
        res.status = 204;
    });

    server.Get("/api/machines/examples", [](const httplib::Request&, httplib::Response& res) {
        send_json(res, 200, json::array({machine_to_json(fixtures::eqabc()), machine_to_json(fixtures::eqabc_nd())}));
    });

    if (options_.static_dir) {
        server.set_mount_point("/", options_.static_dir->string());
    }
}

}  // namespace fsmlab
