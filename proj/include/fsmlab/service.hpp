#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "fsmlab/session.hpp"

namespace httplib {
class Server;
}

namespace fsmlab {

struct ServiceOptions {
    /// Command backing `"invariant": "external"`; without one such sessions
    /// report every verdict as unavailable.
    std::optional<std::string> oracle_command;
    std::chrono::seconds idle_expiry{std::chrono::minutes(30)};
    /// Directory served at `/` (the browser stepper).
    std::optional<std::filesystem::path> static_dir;
};

/// In-memory session table. Sessions idle longer than the expiry are dropped
/// on the next access to the table. Operations on one session are serialized.
class SessionStore {
public:
    using Clock = std::chrono::steady_clock;

    explicit SessionStore(std::chrono::seconds idle_expiry, std::function<Clock::time_point()> now = Clock::now);

    std::string add(std::function<Session(std::string id)> make);
    bool erase(const std::string& id);
    std::size_t size();

    /// Runs `fn` on the session under its lock; false when the id is unknown.
    bool with(const std::string& id, const std::function<void(Session&)>& fn);

private:
    struct Entry {
        explicit Entry(Session s) : session(std::move(s)) {}
        std::mutex lock;
        Session session;
        Clock::time_point last_used;
    };

    void expire_locked(Clock::time_point now);
    std::string fresh_id_locked();

    std::chrono::seconds idle_expiry_;
    std::function<Clock::time_point()> now_;
    std::mutex mutex_;
    std::map<std::string, std::shared_ptr<Entry>> sessions_;
    std::uint64_t counter_ = 0;
    std::uint64_t salt_;
};

/// Routes for the stepper API:
///   POST   /api/sessions
///   GET    /api/sessions/{id}
///   POST   /api/sessions/{id}/step
///   DELETE /api/sessions/{id}
///   GET    /api/machines/examples
class SessionService {
public:
    explicit SessionService(ServiceOptions options);

    void mount(httplib::Server& server);
    SessionStore& store() { return store_; }

private:
    ServiceOptions options_;
    SessionStore store_;
};

}  // namespace fsmlab
