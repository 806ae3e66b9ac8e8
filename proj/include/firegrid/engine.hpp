#ifndef FIREGRID_ENGINE_HPP
#define FIREGRID_ENGINE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "firegrid/lattice.hpp"

namespace firegrid {

struct BudgetSchedule {
    int base = 1;
    std::vector<int> extras;  // each entry grants one more firefighter at that turn

    int budget(int turn) const {
        return base + static_cast<int>(std::count(extras.begin(), extras.end(), turn));
    }
    bool uniformFrom(int turn) const {
        return std::none_of(extras.begin(), extras.end(), [&](int t) { return t >= turn; });
    }
    friend bool operator==(const BudgetSchedule&, const BudgetSchedule&) = default;
};

enum class Cell : std::uint8_t { Free = 0, Burning = 1, Protected = 2 };

class GameState {
public:
    GameState(Lattice lat, const std::vector<Vertex>& fires, BudgetSchedule schedule)
        : lat_(std::move(lat)), schedule_(std::move(schedule)) {
        if (fires.empty()) throw DomainError("EmptyFires", "at least one initial fire is required");
        if (schedule_.base < 0) throw DomainError("InvalidSchedule", "base budget must be >= 0");
        cells_.assign(lat_.indexCount(), Cell::Free);
        for (Vertex v : fires) {
            lat_.check(v);
            if (at(v) == Cell::Burning) throw DomainError("DuplicateFire", "fire listed twice at " + toString(v));
            at(v) = Cell::Burning;
            burning_.push_back(v);
        }
        front_ = burning_;
    }

    const Lattice& lattice() const { return lat_; }
    const BudgetSchedule& schedule() const { return schedule_; }
    int turn() const { return turn_; }
    int protectedThisTurn() const { return usedThisTurn_; }
    int budgetRemaining() const { return schedule_.budget(turn_ + 1) - usedThisTurn_; }

    Cell cell(Vertex v) const { return lat_.contains(v) ? at(v) : Cell::Free; }
    bool isBurning(Vertex v) const { return cell(v) == Cell::Burning; }
    bool isProtected(Vertex v) const { return cell(v) == Cell::Protected; }
    bool isFree(Vertex v) const { return cell(v) == Cell::Free; }

    // in ignition order
    const std::vector<Vertex>& burning() const { return burning_; }
    const std::vector<Vertex>& protectedVertices() const { return protected_; }
    const std::vector<Vertex>& lastIgnited() const { return front_; }

    void protect(const std::vector<Vertex>& vs) {
        int limit = schedule_.budget(turn_ + 1);
        if (usedThisTurn_ + static_cast<int>(vs.size()) > limit)
            throw DomainError("BudgetExceeded", "budget " + std::to_string(limit) + " at turn " +
                                                    std::to_string(turn_ + 1) + " exceeded");
        for (std::size_t i = 0; i < vs.size(); ++i) {
            Vertex v = vs[i];
            lat_.check(v);
            if (at(v) == Cell::Burning) throw DomainError("ProtectBurning", "vertex " + toString(v) + " is burning");
            if (at(v) == Cell::Protected)
                throw DomainError("AlreadyProtected", "vertex " + toString(v) + " is already protected");
            for (std::size_t j = 0; j < i; ++j)
                if (vs[j] == v) throw DomainError("AlreadyProtected", "vertex " + toString(v) + " listed twice");
        }
        for (Vertex v : vs) {
            at(v) = Cell::Protected;
            protected_.push_back(v);
            ++usedThisTurn_;
        }
    }

    // Returns the newly ignited vertices. Throws WindowExceeded (state untouched)
    // if the fire would leave the window of an infinite lattice.
    std::vector<Vertex> spread() {
        std::vector<Vertex> next;
        bool escaped = false;
        Vertex where{};
        for (Vertex v : front_) {
            lat_.forEachNeighbor(v, [&](Vertex u) {
                if (!lat_.contains(u)) {
                    if (!escaped) escaped = true, where = u;
                    return;
                }
                Cell& c = at(u);
                if (c == Cell::Free) {
                    c = Cell::Burning;
                    next.push_back(u);
                }
            });
        }
        if (escaped) {
            for (Vertex u : next) at(u) = Cell::Free;
            throw DomainError("WindowExceeded", "fire reaches " + toString(where) + " outside " + lat_.describe());
        }
        burning_.insert(burning_.end(), next.begin(), next.end());
        front_ = next;
        ++turn_;
        usedThisTurn_ = 0;
        return next;
    }

    bool hasFreeNeighbor(Vertex v) const {
        bool any = false;
        lat_.forEachNeighbor(v, [&](Vertex u) {
            if (!any && cell(u) == Cell::Free) any = true;
        });
        return any;
    }

    bool isContained() const {
        return std::none_of(front_.begin(), front_.end(), [&](Vertex v) { return hasFreeNeighbor(v); });
    }

    std::vector<Vertex> activeFires() const {
        std::vector<Vertex> out;
        for (Vertex v : front_)
            if (hasFreeNeighbor(v)) out.push_back(v);
        return out;
    }

    // Rebuild from explicit sets; used by normalization and the solver.
    static GameState fromSets(Lattice lat, const std::vector<Vertex>& burning, const std::vector<Vertex>& prot,
                              BudgetSchedule schedule, int turn) {
        GameState s(std::move(lat), burning, std::move(schedule));
        for (Vertex v : prot) {
            s.lat_.check(v);
            if (s.at(v) != Cell::Free) throw DomainError("InvalidState", "vertex " + toString(v) + " burning and protected");
            s.at(v) = Cell::Protected;
            s.protected_.push_back(v);
        }
        s.turn_ = turn;
        s.front_.clear();
        for (Vertex v : s.burning_)
            if (s.hasFreeNeighbor(v)) s.front_.push_back(v);
        return s;
    }

private:
    Cell& at(Vertex v) { return cells_[lat_.index(v)]; }
    Cell at(Vertex v) const { return cells_[lat_.index(v)]; }

    Lattice lat_;
    BudgetSchedule schedule_;
    std::vector<Cell> cells_;
    std::vector<Vertex> burning_;
    std::vector<Vertex> protected_;
    std::vector<Vertex> front_;
    int turn_ = 0;
    int usedThisTurn_ = 0;
};

class Strategy {
public:
    virtual ~Strategy() = default;
    virtual std::string name() const = 0;
    virtual nlohmann::json params() const { return nlohmann::json::object(); }
    // protections for the given turn; called once per turn, in order
    virtual std::vector<Vertex> decide(const GameState& s, int turn) = 0;
    virtual std::unique_ptr<Strategy> clone() const = 0;
};

// Protects nothing.
class IdleStrategy : public Strategy {
public:
    std::string name() const override { return "idle"; }
    std::vector<Vertex> decide(const GameState&, int) override { return {}; }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<IdleStrategy>(*this); }
};

// Replays a fixed per-turn list; turns beyond the list protect nothing.
class ScriptStrategy : public Strategy {
public:
    explicit ScriptStrategy(std::vector<std::vector<Vertex>> moves, std::string label = "script")
        : moves_(std::move(moves)), label_(std::move(label)) {}
    std::string name() const override { return label_; }
    std::vector<Vertex> decide(const GameState&, int turn) override {
        if (turn < 1 || turn > static_cast<int>(moves_.size())) return {};
        return moves_[turn - 1];
    }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<ScriptStrategy>(*this); }
    const std::vector<std::vector<Vertex>>& moves() const { return moves_; }

private:
    std::vector<std::vector<Vertex>> moves_;
    std::string label_;
};

struct Round {
    int turn = 0;
    std::vector<Vertex> protectedVertices;
    std::vector<Vertex> ignited;
};

struct GameTrace {
    std::string strategy;
    std::vector<Vertex> initialFires;
    std::vector<Round> rounds;
    std::optional<int> containedAtTurn;
    long long burntCount = 0;
    std::optional<long long> savedCount;
    bool horizonExhausted = false;
};

inline void step(GameState& s, Strategy& strat) {
    int turn = s.turn() + 1;
    auto vs = strat.decide(s, turn);
    try {
        s.protect(vs);
    } catch (const DomainError& e) {
        throw DomainError(e.code(), "strategy " + strat.name() + ": " + e.what());
    }
    s.spread();
}

using RoundObserver = std::function<void(const GameState&, const Round&)>;

// Plays until containment or maxTurns rounds. Mutates s in place. The fire
// leaving the window ends the run with horizonExhausted set.
inline GameTrace run(GameState& s, Strategy& strat, int maxTurns, const RoundObserver& observe = {}) {
    if (maxTurns < 1) throw DomainError("InvalidHorizon", "maxTurns must be >= 1");
    GameTrace tr;
    tr.strategy = strat.name();
    tr.initialFires = s.burning();
    if (s.isContained()) tr.containedAtTurn = s.turn();
    for (int i = 0; i < maxTurns && !tr.containedAtTurn; ++i) {
        Round r;
        r.turn = s.turn() + 1;
        r.protectedVertices = strat.decide(s, r.turn);
        try {
            s.protect(r.protectedVertices);
        } catch (const DomainError& e) {
            throw DomainError(e.code(), "strategy " + strat.name() + ": " + e.what());
        }
        try {
            r.ignited = s.spread();
        } catch (const DomainError& e) {
            if (e.code() != "WindowExceeded") throw;
            tr.rounds.push_back(std::move(r));
            tr.horizonExhausted = true;
            break;
        }
        tr.rounds.push_back(std::move(r));
        if (observe) observe(s, tr.rounds.back());
        if (s.isContained()) tr.containedAtTurn = s.turn();
    }
    if (!tr.containedAtTurn && !tr.horizonExhausted) tr.horizonExhausted = true;
    tr.burntCount = static_cast<long long>(s.burning().size());
    if (s.lattice().isFinite())
        tr.savedCount = static_cast<long long>(s.lattice().indexCount()) - tr.burntCount;
    return tr;
}

inline GameState newGame(const Lattice& lat, const std::vector<Vertex>& fires, const BudgetSchedule& sched) {
    return GameState(lat, fires, sched);
}

// Rebuilds the final state of a trace.
inline GameState replay(const Lattice& lat, const GameTrace& tr, const BudgetSchedule& sched) {
    GameState s(lat, tr.initialFires, sched);
    for (const Round& r : tr.rounds) {
        s.protect(r.protectedVertices);
        try {
            s.spread();
        } catch (const DomainError& e) {
            if (e.code() != "WindowExceeded") throw;
        }
    }
    return s;
}

struct Normalized {
    Vertex v0;
    int t = 0;
    GameState state;
};

// Smallest ball around some center that holds every active fire. Centers
// range over the bounding box of the active fires grown by one; ties go to
// the lexicographically smallest center. Returns (v0, t); t = -1 when no
// fire is active.
inline std::pair<Vertex, int> coverBall(const GameState& s) {
    auto act = s.activeFires();
    const Lattice& lat = s.lattice();
    if (act.empty()) return {s.burning().front(), -1};
    int a0 = act[0].a, a1 = act[0].a, b0 = act[0].b, b1 = act[0].b;
    for (Vertex v : act) a0 = std::min(a0, v.a), a1 = std::max(a1, v.a), b0 = std::min(b0, v.b), b1 = std::max(b1, v.b);
    Vertex best{};
    int bestT = -1;
    for (int a = a0 - 1; a <= a1 + 1; ++a)
        for (int b = b0 - 1; b <= b1 + 1; ++b) {
            Vertex c{a, b};
            if (!lat.contains(c)) continue;
            int t = 0;
            for (Vertex v : act) {
                t = std::max(t, lat.distance(c, v));
                if (bestT >= 0 && t >= bestT) break;
            }
            if (bestT < 0 || t < bestT) bestT = t, best = c;
        }
    return {best, bestT};
}

inline Normalized normalizeToBall(const GameState& s) {
    auto [v0, t] = coverBall(s);
    if (t < 0) return {v0, 0, s};
    const Lattice& lat = s.lattice();
    auto ball = lat.ball(v0, t);
    std::vector<Vertex> prot;
    auto inBall = [&](Vertex v) { return lat.distance(v0, v) <= t; };
    for (Vertex v : s.protectedVertices())
        if (!inBall(v)) prot.push_back(v);
    for (Vertex v : s.burning())
        if (!inBall(v)) prot.push_back(v);
    GameState out = GameState::fromSets(lat, ball, prot, s.schedule(), s.turn());
    return {v0, t, std::move(out)};
}

}  // namespace firegrid

#endif
