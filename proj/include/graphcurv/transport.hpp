#pragma once

#include <vector>

#include "graphcurv/graph.hpp"
#include "graphcurv/rational.hpp"

namespace graphcurv {

// Probability measure with finite support on graph vertices. Entries are
// sorted by vertex, strictly positive, and sum to exactly 1.
class ProbabilityMeasure {
public:
    static ProbabilityMeasure from_weights(std::vector<std::pair<Vertex, Rational>> entries);

    const std::vector<std::pair<Vertex, Rational>>& entries() const { return entries_; }
    size_t support_size() const { return entries_.size(); }

    // 0 outside the support.
    Rational at(Vertex v) const;

    friend bool operator==(const ProbabilityMeasure& a, const ProbabilityMeasure& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::vector<std::pair<Vertex, Rational>> entries_;
};

// Alpha-lazy random walk step distribution from x: mass alpha stays at x,
// the rest splits evenly over the neighbors. alpha = 0 drops x from the
// support entirely.
ProbabilityMeasure lazy_walk_measure(const Graph& g, Vertex x, const Rational& alpha);

struct TransportPlanEntry {
    Vertex from;
    Vertex to;
    Rational mass; // > 0
};

// Optimal transport solution with both certificates: an explicit coupling
// whose cost equals `value`, and a 1-Lipschitz potential on the union of the
// supports whose signed integral also equals `value` (strong duality).
struct TransportSolution {
    Rational value;
    std::vector<TransportPlanEntry> plan;
    std::vector<std::pair<Vertex, Rational>> potential; // min over entries is 0
};

// Exact Wasserstein-1 distance between two measures under hop distance,
// via successive shortest augmenting paths on the support-to-support
// bipartite network with integer masses (common denominator cleared).
TransportSolution wasserstein(const Graph& g, const DistanceMatrix& dm,
                              const ProbabilityMeasure& m1, const ProbabilityMeasure& m2);

// Re-derives the optimality evidence from scratch: exact marginals, plan cost
// equal to value, potential 1-Lipschitz with dual objective equal to value.
bool verify_certificate(const Graph& g, const DistanceMatrix& dm, const ProbabilityMeasure& m1,
                        const ProbabilityMeasure& m2, const TransportSolution& sol);

// Independent oracle: maximizes sum_f f(v)(m1(v) - m2(v)) over integer-valued
// 1-Lipschitz f with f(v0) = 0 by exhaustive backtracking. Kantorovich
// duality makes this the same number as wasserstein(). Guarded to n <= 10.
Rational brute_force_dual(const Graph& g, const DistanceMatrix& dm,
                          const ProbabilityMeasure& m1, const ProbabilityMeasure& m2);

} // namespace graphcurv
