#include "graphcurv/corpus.hpp"

#include <vector>

#include "graphcurv/rational.hpp"

namespace graphcurv::corpus {

int64_t Rng::uniform(int64_t lo, int64_t hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    uint64_t r;
    do {
        r = eng_();
    } while (r >= limit);
    return lo + static_cast<int64_t>(r % span);
}

Graph random_connected_graph(Rng& rng, int min_n, int max_n) {
    int n = static_cast<int>(rng.uniform(min_n, max_n));
    std::vector<std::pair<long long, long long>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(rng.uniform(0, v - 1), v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(1, 4)) edges.emplace_back(u, v);

    // The tree pass may duplicate an extra edge; drop repeats, keep order.
    std::vector<std::pair<long long, long long>> unique;
    for (const auto& e : edges) {
        bool dup = false;
        for (const auto& f : unique)
            dup |= (f.first == e.first && f.second == e.second) ||
                   (f.first == e.second && f.second == e.first);
        if (!dup) unique.push_back(e);
    }
    return Graph::from_labeled_edges(unique);
}

ProbabilityMeasure random_measure(Rng& rng, const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> in_support(static_cast<size_t>(n), 0);
    int size = static_cast<int>(rng.uniform(1, n));
    for (int picked = 0; picked < size;) {
        int v = static_cast<int>(rng.uniform(0, n - 1));
        if (!in_support[v]) {
            in_support[v] = 1;
            ++picked;
        }
    }

    std::vector<std::pair<Vertex, Rational>> weights;
    long long total = 0;
    for (Vertex v = 0; v < n; ++v)
        if (in_support[v]) {
            long long w = rng.uniform(1, 9);
            weights.emplace_back(v, Rational(w));
            total += w;
        }
    for (auto& e : weights) e.second /= Rational(total);
    return ProbabilityMeasure::from_weights(std::move(weights));
}

} // namespace graphcurv::corpus
