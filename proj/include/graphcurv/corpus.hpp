#pragma once

#include <cstdint>
#include <random>

#include "graphcurv/graph.hpp"
#include "graphcurv/transport.hpp"

namespace graphcurv::corpus {

// mt19937_64 output is pinned by the standard; the helpers below avoid
// std::uniform_int_distribution, whose mapping is implementation-defined.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // Uniform in [lo, hi], unbiased via rejection.
    int64_t uniform(int64_t lo, int64_t hi);

    bool chance(uint64_t num, uint64_t den) {
        return uniform(0, static_cast<int64_t>(den) - 1) < static_cast<int64_t>(num);
    }

private:
    std::mt19937_64 eng_;
};

// Connected simple graph: random attachment tree plus random extra edges.
Graph random_connected_graph(Rng& rng, int min_n, int max_n);

// Random support, integer weights 1..9, normalized to total mass 1.
ProbabilityMeasure random_measure(Rng& rng, const Graph& g);

} // namespace graphcurv::corpus
