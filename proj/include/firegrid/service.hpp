#ifndef FIREGRID_SERVICE_HPP
#define FIREGRID_SERVICE_HPP

#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>

#include <httplib.h>
#include <json.hpp>

#include "firegrid/io.hpp"
#include "firegrid/registry.hpp"
#include "firegrid/solver.hpp"

namespace firegrid {

struct Reply {
    int status = 200;
    json body;
};

struct ServiceConfig {
    int maxWindow = 2000;
    int solverCap = 64;
    int fullViewLimit = 5000;  // larger lattices answer with delta views
    std::chrono::seconds ttl{1800};
    unsigned seed = 0;
};

class Service {
public:
    explicit Service(ServiceConfig cfg = {}) : cfg_(cfg), rng_(cfg.seed) {}

    Reply createSession(const json& req) {
        return guard([&] {
            Lattice lat = latticeFrom(req.at("lattice"), cfg_.maxWindow);
            auto fires = verticesFrom(lat, req.at("fires"));
            BudgetSchedule sched = scheduleFrom(req.value("schedule", json(nullptr)));
            auto sess = std::make_shared<Session>(lat);
            sess->fires = fires;
            std::string mode = req.value("mode", "manual");
            if (mode != "manual" && mode != "playback")
                throw DomainError("InvalidMode", "mode must be manual or playback");
            if (mode == "playback") {
                if (!req.contains("strategy")) throw DomainError("UnknownStrategy", "playback needs a strategy");
                sess->strategy = strategyRefFrom(req["strategy"]);
                for (int t : strategyExtras(*sess->strategy)) sched.extras.push_back(t);
            }
            sess->schedule = sched;
            sess->rebuild(0);
            std::lock_guard<std::mutex> lk(mapMutex_);
            evictIdle();
            std::string id = newId();
            sessions_[id] = sess;
            json out = summary(id, *sess);
            return Reply{201, out};
        });
    }

    Reply getSession(const std::string& id, std::optional<int> since = std::nullopt) {
        auto s = find(id);
        if (!s) return notFound(id);
        std::lock_guard<std::mutex> lk(s->m);
        return guard([&] { return Reply{200, view(id, *s, since)}; });
    }

    Reply act(const std::string& id, const json& req) {
        auto s = find(id);
        if (!s) return notFound(id);
        std::unique_lock<std::mutex> lk(s->m);
        return guard([&]() -> Reply {
            std::string type = req.at("type").get<std::string>();
            std::optional<int> since;
            if (req.contains("since")) since = req["since"].get<int>();
            json extra = json::object();
            if (type == "protect") {
                auto vs = verticesFrom(s->state->lattice(), req.at("vertices"));
                s->state->protect(vs);
                s->pending.insert(s->pending.end(), vs.begin(), vs.end());
            } else if (type == "endTurn") {
                extra["ignited"] = verticesJson(s->state->lattice(), s->endTurn());
            } else if (type == "stepStrategy") {
                if (!s->strategy) throw DomainError("NotPlayback", "session has no attached strategy");
                auto vs = s->strat->decide(*s->state, s->state->turn() + 1);
                s->state->protect(vs);
                s->pending.insert(s->pending.end(), vs.begin(), vs.end());
                extra["protectedNow"] = verticesJson(s->state->lattice(), vs);
                extra["ignited"] = verticesJson(s->state->lattice(), s->endTurn());
            } else if (type == "fork") {
                auto child = std::make_shared<Session>(*s);
                child->parent = id;
                lk.unlock();
                std::lock_guard<std::mutex> g(mapMutex_);
                std::string cid = newId();
                sessions_[cid] = child;
                return Reply{201, summary(cid, *child)};
            } else if (type == "undoToTurn") {
                int t = req.at("turn").get<int>();
                if (t < 0 || t > s->state->turn())
                    throw DomainError("InvalidTurn", "turn must be in [0, " + std::to_string(s->state->turn()) + "]");
                s->rebuild(t);
            } else {
                throw DomainError("InvalidAction", "unknown action type '" + type + "'");
            }
            json out = view(id, *s, since);
            for (auto& [k, v] : extra.items()) out[k] = v;
            return Reply{200, out};
        });
    }

    Reply hint(const std::string& id) {
        auto s = find(id);
        if (!s) return notFound(id);
        std::lock_guard<std::mutex> lk(s->m);
        return guard([&] {
            const GameState& st = *s->state;
            const Lattice& lat = st.lattice();
            if (!lat.isFinite())
                throw DomainError("CapExceeded", "hints need a finite lattice; cap is " + std::to_string(cfg_.solverCap));
            if (st.isContained()) {
                long long saved = static_cast<long long>(lat.indexCount() - st.burning().size());
                return Reply{200, {{"move", json::array()}, {"value", saved}, {"proved", true}}};
            }
            SolveOptions opt;
            opt.cap = cfg_.solverCap;
            opt.firstTurnBudget = st.budgetRemaining();
            auto r = solvePosition(lat, st.burning(), st.protectedVertices(), st.schedule(), st.turn(), opt);
            json move = r.optimalSequence.empty() ? json::array() : verticesJson(lat, r.optimalSequence.front());
            return Reply{200, {{"move", move}, {"value", r.sn}, {"proved", r.proved}, {"nodes", r.nodesExpanded}}};
        });
    }

    Reply lattices() const {
        json a = json::array();
        for (const char* k : {"square", "infinite_square", "hex", "tri", "tree", "path", "clique"}) a.push_back(k);
        return {200, {{"kinds", a}, {"maxWindow", cfg_.maxWindow}, {"solverCap", cfg_.solverCap}}};
    }

    Reply strategies() const { return {200, {{"strategies", catalogJson()}}}; }

    std::size_t sessionCount() {
        std::lock_guard<std::mutex> lk(mapMutex_);
        return sessions_.size();
    }

    void mount(httplib::Server& srv) {
        auto send = [](httplib::Response& res, const Reply& r) {
            res.status = r.status;
            res.set_content(r.body.dump(), "application/json");
        };
        auto parse = [](const httplib::Request& req) -> std::optional<json> {
            auto j = json::parse(req.body, nullptr, false);
            if (j.is_discarded()) return std::nullopt;
            return j;
        };
        srv.Post("/sessions", [=, this](const httplib::Request& req, httplib::Response& res) {
            auto j = parse(req);
            send(res, j ? createSession(*j) : error(400, "InvalidJson", "request body is not JSON"));
        });
        srv.Get(R"(/sessions/([^/]+))", [=, this](const httplib::Request& req, httplib::Response& res) {
            std::optional<int> since;
            if (req.has_param("since")) since = std::atoi(req.get_param_value("since").c_str());
            send(res, getSession(req.matches[1], since));
        });
        srv.Post(R"(/sessions/([^/]+)/actions)", [=, this](const httplib::Request& req, httplib::Response& res) {
            auto j = parse(req);
            send(res, j ? act(req.matches[1], *j) : error(400, "InvalidJson", "request body is not JSON"));
        });
        srv.Get(R"(/sessions/([^/]+)/hint)",
                [=, this](const httplib::Request& req, httplib::Response& res) { send(res, hint(req.matches[1])); });
        srv.Get("/lattices", [=, this](const httplib::Request&, httplib::Response& res) { send(res, lattices()); });
        srv.Get("/strategies", [=, this](const httplib::Request&, httplib::Response& res) { send(res, strategies()); });
    }

    static int statusFor(const std::string& code) {
        static const std::map<std::string, int> m{
            {"WindowTooLarge", 413},      {"CapExceeded", 422},      {"ProtectBurning", 409},
            {"AlreadyProtected", 409},    {"BudgetExceeded", 409},   {"WindowExceeded", 409},
            {"NotPlayback", 409},         {"InvalidTurn", 409},      {"GameOver", 409},
        };
        auto it = m.find(code);
        return it == m.end() ? 400 : it->second;
    }

private:
    struct Session {
        explicit Session(Lattice l) : lat(std::move(l)) {}
        Session(const Session& o)
            : lat(o.lat), fires(o.fires), schedule(o.schedule), strategy(o.strategy), history(o.history),
              pending(o.pending), parent(o.parent) {
            state = std::make_unique<GameState>(*o.state);
            if (o.strat) strat = o.strat->clone();
        }

        // Replays recorded turns up to t; the strategy sees every replayed
        // position so its internal counters match.
        void rebuild(int t) {
            state = std::make_unique<GameState>(lat, fires, schedule);
            if (strategy) strat = makeStrategy(*strategy, lat, fires);
            history.resize(std::min<std::size_t>(history.size(), static_cast<std::size_t>(t)));
            for (const auto& r : history) {
                if (strat) strat->decide(*state, state->turn() + 1);
                state->protect(r.protectedVertices);
                state->spread();
            }
            pending.clear();
        }

        std::vector<Vertex> endTurn() {
            Round r;
            r.turn = state->turn() + 1;
            r.protectedVertices = pending;
            r.ignited = state->spread();
            pending.clear();
            history.push_back(r);
            return r.ignited;
        }

        std::mutex m;
        Lattice lat;
        std::vector<Vertex> fires;
        BudgetSchedule schedule;
        std::optional<StrategyRef> strategy;
        std::unique_ptr<Strategy> strat;
        std::unique_ptr<GameState> state;
        std::vector<Round> history;
        std::vector<Vertex> pending;
        std::optional<std::string> parent;
        std::chrono::steady_clock::time_point lastUsed = std::chrono::steady_clock::now();
    };

    template <class F>
    Reply guard(F&& f) {
        try {
            return f();
        } catch (const DomainError& e) {
            return error(statusFor(e.code()), e.code(), e.what());
        } catch (const json::exception& e) {
            return error(400, "InvalidRequest", e.what());
        }
    }

    static Reply error(int status, const std::string& code, const std::string& detail) {
        return {status, {{"error", code}, {"detail", detail}}};
    }
    static Reply notFound(const std::string& id) { return error(404, "UnknownSession", "no session '" + id + "'"); }

    json summary(const std::string& id, const Session& s) const {
        json j = view(id, s, std::nullopt);
        j["lattice"] = latticeJson(s.lat);
        j["schedule"] = scheduleJson(s.schedule);
        j["mode"] = s.strategy ? "playback" : "manual";
        if (s.strategy) j["strategy"] = {{"name", s.strategy->name}, {"params", s.strategy->params}};
        j["parent"] = s.parent ? json(*s.parent) : json(nullptr);
        return j;
    }

    // Full view on small lattices; otherwise only what changed after turn `since`.
    json view(const std::string& id, const Session& s, std::optional<int> since) const {
        const GameState& st = *s.state;
        const Lattice& lat = st.lattice();
        json j{{"id", id}, {"turn", st.turn()}, {"budgetRemaining", st.budgetRemaining()},
               {"contained", st.isContained()}, {"burntCount", st.burning().size()}};
        bool full = lat.indexCount() < static_cast<std::size_t>(cfg_.fullViewLimit) && !since;
        if (full) {
            j["burning"] = verticesJson(lat, st.burning());
            j["protected"] = verticesJson(lat, st.protectedVertices());
            return j;
        }
        int from = since.value_or(0);
        std::vector<Vertex> ign, prot;
        if (from == 0) ign = s.fires;
        for (const auto& r : s.history)
            if (r.turn > from) {
                ign.insert(ign.end(), r.ignited.begin(), r.ignited.end());
                prot.insert(prot.end(), r.protectedVertices.begin(), r.protectedVertices.end());
            }
        prot.insert(prot.end(), s.pending.begin(), s.pending.end());
        j["delta"] = {{"since", from}, {"ignited", verticesJson(lat, ign)}, {"protected", verticesJson(lat, prot)}};
        return j;
    }

    std::shared_ptr<Session> find(const std::string& id) {
        std::lock_guard<std::mutex> lk(mapMutex_);
        auto it = sessions_.find(id);
        if (it == sessions_.end()) return nullptr;
        it->second->lastUsed = std::chrono::steady_clock::now();
        return it->second;
    }

    void evictIdle() {
        auto now = std::chrono::steady_clock::now();
        std::erase_if(sessions_, [&](const auto& kv) { return now - kv.second->lastUsed > cfg_.ttl; });
    }

    std::string newId() {
        static const char* hexd = "0123456789abcdef";
        std::string id;
        do {
            id.clear();
            for (int i = 0; i < 16; ++i) id += hexd[rng_() & 15];
        } while (sessions_.count(id));
        return id;
    }

    ServiceConfig cfg_;
    std::mutex mapMutex_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    std::mt19937_64 rng_;
};

}  // namespace firegrid

#endif
