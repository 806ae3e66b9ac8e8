#ifndef FIREGRID_STRATEGIES_RANDOM_HPP
#define FIREGRID_STRATEGIES_RANDOM_HPP

#include <random>

#include "firegrid/engine.hpp"

namespace firegrid {

// Seeded random play for property tests. Each protection is a free
// neighbor of the fire with probability `nearBias`, otherwise any free
// vertex of the lattice. Finite lattices only.
class RandomStrategy : public Strategy {
public:
    explicit RandomStrategy(std::uint64_t seed, double nearBias = 0.5) : rng_(seed), seed_(seed), bias_(nearBias) {}

    std::string name() const override { return "random"; }
    nlohmann::json params() const override { return {{"seed", seed_}, {"near_bias", bias_}}; }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<RandomStrategy>(*this); }

    std::vector<Vertex> decide(const GameState& s, int) override {
        const Lattice& lat = s.lattice();
        std::vector<Vertex> near, any;
        for (Vertex v : s.activeFires())
            lat.forEachNeighbor(v, [&](Vertex u) {
                if (lat.contains(u) && s.isFree(u)) near.push_back(u);
            });
        std::sort(near.begin(), near.end());
        near.erase(std::unique(near.begin(), near.end()), near.end());
        for (Vertex v : lat.vertices())
            if (s.isFree(v)) any.push_back(v);
        std::vector<Vertex> out;
        std::uniform_real_distribution<double> coin(0, 1);
        for (int k = 0; k < s.budgetRemaining(); ++k) {
            auto& pool = (!near.empty() && coin(rng_) < bias_) ? near : any;
            if (pool.empty()) break;
            std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
            Vertex v = pool[pick(rng_)];
            std::erase(near, v);
            std::erase(any, v);
            out.push_back(v);
        }
        return out;
    }

private:
    std::mt19937_64 rng_;
    std::uint64_t seed_;
    double bias_;
};

}  // namespace firegrid

#endif
