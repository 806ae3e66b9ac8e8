#include <gtest/gtest.h>

#include <random>
#include <set>

#include "firegrid/engine.hpp"
#include "firegrid/strategies/random.hpp"

using namespace firegrid;

namespace {

std::string codeOf(const std::function<void()>& f) {
    try {
        f();
    } catch (const DomainError& e) {
        return e.code();
    }
    return "";
}

class Fixed : public Strategy {
public:
    explicit Fixed(std::vector<Vertex> vs) : vs_(std::move(vs)) {}
    std::string name() const override { return "fixed"; }
    std::vector<Vertex> decide(const GameState&, int) override { return vs_; }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<Fixed>(*this); }

private:
    std::vector<Vertex> vs_;
};

// protects the first free neighbor of the fire, scanning the path left to right
class PathBlock : public Strategy {
public:
    std::string name() const override { return "path_block"; }
    std::vector<Vertex> decide(const GameState& s, int) override {
        for (Vertex v : s.activeFires())
            for (Vertex u : s.lattice().neighbors(v))
                if (s.isFree(u)) return {u};
        return {};
    }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<PathBlock>(*this); }
};

}  // namespace

TEST(Engine, NewGame) {
    GameState s(Lattice::finiteSquare(3), {{0, 0}}, BudgetSchedule{});
    EXPECT_EQ(s.burning().size(), 1u);
    EXPECT_EQ(s.protectedVertices().size(), 0u);
    EXPECT_EQ(s.turn(), 0);
    GameState m(Lattice::infiniteSquare(50), {{0, 0}, {3, 3}}, BudgetSchedule{});
    EXPECT_EQ(m.burning().size(), 2u);
    EXPECT_EQ(codeOf([] { GameState(Lattice::finiteSquare(3), {}, BudgetSchedule{}); }), "EmptyFires");
    EXPECT_EQ(codeOf([] { GameState(Lattice::finiteSquare(3), {{0, 0}, {0, 0}}, BudgetSchedule{}); }), "DuplicateFire");
    EXPECT_EQ(codeOf([] { GameState(Lattice::hexagonal(3), {{9, 0}}, BudgetSchedule{}); }), "WindowExceeded");
}

TEST(Engine, ProtectRules) {
    GameState s(Lattice::finiteSquare(3), {{0, 0}}, BudgetSchedule{});
    s.protect({{1, 0}});
    EXPECT_TRUE(s.isProtected({1, 0}));
    EXPECT_EQ(codeOf([&] { s.protect({{0, 0}}); }), "BudgetExceeded");
    GameState t(Lattice::finiteSquare(3), {{0, 0}}, BudgetSchedule{2, {}});
    EXPECT_EQ(codeOf([&] { t.protect({{0, 0}}); }), "ProtectBurning");
    t.protect({{1, 0}});
    EXPECT_EQ(codeOf([&] { t.protect({{1, 0}}); }), "AlreadyProtected");
    GameState u(Lattice::finiteSquare(3), {{0, 0}}, BudgetSchedule{});
    EXPECT_EQ(codeOf([&] { u.protect({{1, 0}, {0, 1}}); }), "BudgetExceeded");
    GameState w(Lattice::finiteSquare(3), {{0, 0}}, BudgetSchedule{3, {}});
    EXPECT_EQ(codeOf([&] { w.protect({{1, 0}, {1, 0}}); }), "AlreadyProtected");
    EXPECT_EQ(w.protectedVertices().size(), 0u);  // rejected lists leave no trace
}

TEST(Engine, ExtrasStackAndDoNotBank) {
    BudgetSchedule b{1, {3, 3, 5}};
    EXPECT_EQ(b.budget(1), 1);
    EXPECT_EQ(b.budget(3), 3);
    EXPECT_EQ(b.budget(5), 2);
    GameState s(Lattice::infiniteSquare(20), {{0, 0}}, b);
    s.spread();
    EXPECT_EQ(s.budgetRemaining(), 1);  // turn 1 unused, nothing carried
    s.spread();
    EXPECT_EQ(s.budgetRemaining(), 3);
}

TEST(Engine, Spread) {
    GameState s(Lattice::finiteSquare(3), {{0, 0}}, BudgetSchedule{});
    s.spread();
    EXPECT_EQ(s.burning().size(), 5u);
    EXPECT_EQ(s.turn(), 1);
    GameState t(Lattice::finiteSquare(3), {{0, 0}}, BudgetSchedule{});
    t.protect({{1, 0}});
    t.spread();
    EXPECT_EQ(t.burning().size(), 4u);
    GameState w(Lattice::hexagonal(2), {{0, 0}}, BudgetSchedule{0, {}});
    w.spread();
    w.spread();
    auto before = w.burning();
    EXPECT_EQ(codeOf([&] { w.spread(); }), "WindowExceeded");
    EXPECT_EQ(w.burning(), before);
    EXPECT_EQ(w.turn(), 2);
}

TEST(Engine, ContainmentFixedPoint) {
    GameState s(Lattice::finiteSquare(3), {{0, 0}}, BudgetSchedule{4, {}});
    EXPECT_FALSE(s.isContained());
    s.protect({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    EXPECT_TRUE(s.isContained());
    s.spread();
    EXPECT_EQ(s.burning().size(), 1u);
    EXPECT_EQ(s.turn(), 1);
    EXPECT_TRUE(s.activeFires().empty());
}

TEST(Engine, StepTagsStrategyName) {
    GameState s(Lattice::finiteSquare(3), {{0, 0}}, BudgetSchedule{});
    Fixed f({{1, 0}});
    step(s, f);
    EXPECT_EQ(s.burning().size(), 4u);
    EXPECT_EQ(s.protectedVertices().size(), 1u);
    Fixed bad({{0, 0}});
    try {
        step(s, bad);
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_EQ(e.code(), "ProtectBurning");
        EXPECT_NE(std::string(e.what()).find("fixed"), std::string::npos);
    }
}

TEST(Engine, RunOutcomes) {
    GameState p(Lattice::path(5), {{0, 0}}, BudgetSchedule{});
    PathBlock pb;
    auto tr = run(p, pb, 10);
    ASSERT_TRUE(tr.containedAtTurn);
    EXPECT_EQ(*tr.containedAtTurn, 1);
    EXPECT_EQ(tr.burntCount, 1);
    EXPECT_EQ(*tr.savedCount, 4);

    GameState k(Lattice::clique(5), {{2, 0}}, BudgetSchedule{});
    RandomStrategy r(5);
    auto tk = run(k, r, 10);
    EXPECT_EQ(*tk.savedCount, 1);

    GameState g(Lattice::finiteSquare(3), {{0, 0}}, BudgetSchedule{});
    IdleStrategy idle;
    auto ti = run(g, idle, 10);
    EXPECT_EQ(ti.burntCount, 9);
    EXPECT_FALSE(ti.horizonExhausted);

    GameState h(Lattice::hexagonal(5), {{0, 0}}, BudgetSchedule{});
    auto th = run(h, idle, 100);
    EXPECT_TRUE(th.horizonExhausted);
    EXPECT_FALSE(th.containedAtTurn);
    EXPECT_THROW(run(h, idle, 0), DomainError);
}

TEST(Engine, RandomPlayInvariants) {
    Lattice lat = Lattice::finiteSquare(9);
    std::mt19937 rng(1);
    for (int game = 0; game < 50; ++game) {
        std::uniform_int_distribution<int> c(lat.lo(), lat.hi());
        Vertex f{c(rng), c(rng)};
        Vertex g{c(rng), c(rng)};
        std::vector<Vertex> fires{f};
        if (g != f) fires.push_back(g);
        GameState s(lat, fires, BudgetSchedule{1 + game % 2, {}});
        RandomStrategy strat(game);
        std::set<Vertex> burnt(s.burning().begin(), s.burning().end()), prot;
        auto tr = run(s, strat, 40, [&](const GameState& st, const Round& r) {
            std::set<Vertex> b2(st.burning().begin(), st.burning().end());
            std::set<Vertex> p2(st.protectedVertices().begin(), st.protectedVertices().end());
            for (Vertex v : burnt) ASSERT_TRUE(b2.count(v));
            for (Vertex v : prot) ASSERT_TRUE(p2.count(v));
            for (Vertex v : b2) {
                ASSERT_FALSE(p2.count(v));
                int dmin = 1 << 30;
                for (Vertex x : fires) dmin = std::min(dmin, lat.distance(x, v));
                ASSERT_LE(dmin, r.turn);
            }
            burnt = b2;
            prot = p2;
        });
        GameState again(lat, fires, BudgetSchedule{1 + game % 2, {}});
        RandomStrategy strat2(game);
        auto tr2 = run(again, strat2, 40);
        ASSERT_EQ(tr.rounds.size(), tr2.rounds.size());
        for (std::size_t i = 0; i < tr.rounds.size(); ++i) {
            EXPECT_EQ(tr.rounds[i].protectedVertices, tr2.rounds[i].protectedVertices);
            EXPECT_EQ(tr.rounds[i].ignited, tr2.rounds[i].ignited);
        }
        GameState rep = replay(lat, tr, BudgetSchedule{1 + game % 2, {}});
        EXPECT_EQ(rep.burning(), s.burning());
        EXPECT_EQ(rep.protectedVertices(), s.protectedVertices());
    }
}

TEST(Engine, UnburntOnSphereAtMostRadius) {
    // one firefighter, one fire: by time r at most r vertices at distance r escape the fire
    Lattice lat = Lattice::finiteSquare(15);
    for (int game = 0; game < 100; ++game) {
        Vertex f{game % 15 - 7, (game * 7) % 15 - 7};
        GameState s(lat, {f}, BudgetSchedule{});
        RandomStrategy strat(1000 + game, game % 3 == 0 ? 1.0 : 0.4);
        for (int r = 1; r <= 28; ++r) {
            step(s, strat);
            int free = 0;
            for (Vertex v : lat.sphere(f, r)) free += !s.isBurning(v);
            ASSERT_LE(free, r) << "game " << game << " r " << r;
        }
    }
}

TEST(Engine, ActiveFires) {
    GameState s(Lattice::finiteSquare(3), {{0, 0}}, BudgetSchedule{});
    EXPECT_EQ(s.activeFires(), (std::vector<Vertex>{{0, 0}}));
    s.spread();
    auto act = s.activeFires();
    EXPECT_EQ(std::find(act.begin(), act.end(), Vertex{0, 0}), act.end());
    EXPECT_EQ(act.size(), 4u);
}

TEST(Engine, NormalizeToBall) {
    Lattice lat = Lattice::infiniteSquare(20);
    GameState one(lat, {{2, 3}}, BudgetSchedule{});
    auto n1 = normalizeToBall(one);
    EXPECT_EQ(n1.v0, (Vertex{2, 3}));
    EXPECT_EQ(n1.t, 0);
    EXPECT_EQ(n1.state.burning(), one.burning());

    GameState two(lat, {{0, 0}, {4, 0}}, BudgetSchedule{});
    auto n2 = normalizeToBall(two);
    // brute force over all centers in the window box
    int best = 1 << 30;
    for (Vertex c : lat.ball({2, 0}, 6)) best = std::min(best, std::max(lat.distance(c, {0, 0}), lat.distance(c, {4, 0})));
    EXPECT_EQ(n2.t, best);
    EXPECT_LE(n2.t, 2);
    EXPECT_EQ(lat.distance(n2.v0, {0, 0}), 2);
    EXPECT_EQ(lat.distance(n2.v0, {4, 0}), 2);
    EXPECT_EQ(n2.state.burning().size(), lat.ball(n2.v0, 2).size());

    // protections and inactive burning outside the ball become protected
    GameState h(Lattice::hexagonal(20), {{0, 0}}, BudgetSchedule{});
    h.protect({{1, 0}});
    h.spread();
    h.protect({{-2, 0}});
    h.spread();
    auto n3 = normalizeToBall(h);
    for (Vertex v : h.burning())
        EXPECT_TRUE(n3.state.isBurning(v) || n3.state.isProtected(v));
    for (Vertex v : h.protectedVertices())
        EXPECT_TRUE(n3.state.isBurning(v) || n3.state.isProtected(v));
    for (Vertex v : h.activeFires()) EXPECT_LE(hex::distance(n3.v0, v), n3.t);

    GameState c(Lattice::finiteSquare(3), {{0, 0}}, BudgetSchedule{4, {}});
    c.protect({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    auto n4 = normalizeToBall(c);
    EXPECT_TRUE(n4.state.activeFires().empty());
}
