#include "graphcurv/transport.hpp"

#include <algorithm>
#include <limits>

namespace graphcurv {

ProbabilityMeasure ProbabilityMeasure::from_weights(
    std::vector<std::pair<Vertex, Rational>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (entries.empty()) raise(errc::invalid_parameter, "measure with empty support");
    Rational total;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i > 0 && entries[i].first == entries[i - 1].first)
            raise(errc::invalid_parameter, "measure lists vertex " +
                                               std::to_string(entries[i].first) + " twice");
        if (entries[i].second.sign() <= 0)
            raise(errc::invalid_parameter, "measure mass must be positive at vertex " +
                                               std::to_string(entries[i].first));
        total += entries[i].second;
    }
    if (total != Rational(1))
        raise(errc::invalid_parameter, "measure masses sum to " + total.str() + ", not 1");
    ProbabilityMeasure m;
    m.entries_ = std::move(entries);
    return m;
}

Rational ProbabilityMeasure::at(Vertex v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const auto& e, Vertex x) { return e.first < x; });
    if (it != entries_.end() && it->first == v) return it->second;
    return Rational(0);
}

ProbabilityMeasure lazy_walk_measure(const Graph& g, Vertex x, const Rational& alpha) {
    g.check_vertex(x);
    if (alpha.sign() < 0 || alpha >= Rational(1))
        raise(errc::alpha_out_of_range, "alpha = " + alpha.str() + " outside [0, 1)");
    std::vector<std::pair<Vertex, Rational>> w;
    if (alpha.sign() > 0) w.emplace_back(x, alpha);
    Rational share = (Rational(1) - alpha) / Rational(g.degree(x));
    for (Vertex nb : g.neighbors(x)) w.emplace_back(nb, share);
    return ProbabilityMeasure::from_weights(std::move(w));
}

namespace {

// Min-cost flow over the bipartite support network, successive shortest
// augmenting paths with Johnson potentials. Masses are scaled by the common
// denominator L so every capacity is an exact integer.
struct FlowNet {
    struct Arc {
        int to;
        int rev;
        mpz_class cap;
        long cost;
    };

    std::vector<std::vector<Arc>> adj;

    explicit FlowNet(int nodes) : adj(static_cast<size_t>(nodes)) {}

    void add(int from, int to, mpz_class cap, long cost) {
        adj[from].push_back({to, static_cast<int>(adj[to].size()), std::move(cap), cost});
        adj[to].push_back({from, static_cast<int>(adj[from].size()) - 1, mpz_class(0), -cost});
    }
};

mpz_class scaled_mass(const Rational& r, const mpz_class& L) {
    return r.num() * (L / r.den()); // L is a multiple of every denominator
}

} // namespace

TransportSolution wasserstein(const Graph& g, const DistanceMatrix& dm,
                              const ProbabilityMeasure& m1, const ProbabilityMeasure& m2) {
    for (const auto& e : m1.entries()) g.check_vertex(e.first);
    for (const auto& e : m2.entries()) g.check_vertex(e.first);

    const auto& src = m1.entries();
    const auto& snk = m2.entries();
    const int k1 = static_cast<int>(src.size());
    const int k2 = static_cast<int>(snk.size());
    const int S = k1 + k2, T = S + 1;

    mpz_class L(1);
    for (const auto& e : src) L = lcm(L, e.second.den());
    for (const auto& e : snk) L = lcm(L, e.second.den());

    FlowNet net(k1 + k2 + 2);
    mpz_class remaining(0);
    for (int i = 0; i < k1; ++i) {
        mpz_class a = scaled_mass(src[i].second, L);
        remaining += a;
        net.add(S, i, std::move(a), 0);
    }
    for (int j = 0; j < k2; ++j) net.add(k1 + j, T, scaled_mass(snk[j].second, L), 0);
    for (int i = 0; i < k1; ++i)
        for (int j = 0; j < k2; ++j)
            net.add(i, k1 + j, L, dm.at(src[i].first, snk[j].first));

    const int nodes = k1 + k2 + 2;
    const long INF = std::numeric_limits<long>::max() / 4;
    std::vector<long> pi(static_cast<size_t>(nodes), 0), dist(static_cast<size_t>(nodes));
    std::vector<int> par_node(static_cast<size_t>(nodes)), par_arc(static_cast<size_t>(nodes));
    mpz_class total_cost(0);

    while (remaining > 0) {
        std::fill(dist.begin(), dist.end(), INF);
        std::vector<char> done(static_cast<size_t>(nodes), 0);
        dist[S] = 0;
        for (;;) {
            int u = -1;
            for (int v = 0; v < nodes; ++v)
                if (!done[v] && dist[v] < INF && (u < 0 || dist[v] < dist[u])) u = v;
            if (u < 0) break;
            done[u] = 1;
            for (size_t a = 0; a < net.adj[u].size(); ++a) {
                const auto& arc = net.adj[u][a];
                if (arc.cap == 0) continue;
                long nd = dist[u] + arc.cost + pi[u] - pi[arc.to];
                if (nd < dist[arc.to]) {
                    dist[arc.to] = nd;
                    par_node[arc.to] = u;
                    par_arc[arc.to] = static_cast<int>(a);
                }
            }
        }
        if (dist[T] >= INF)
            raise(errc::convergence_failure, "transport network lost feasibility");
        for (int v = 0; v < nodes; ++v) pi[v] += std::min(dist[v], dist[T]);

        mpz_class push = remaining;
        for (int v = T; v != S; v = par_node[v]) {
            const auto& arc = net.adj[par_node[v]][par_arc[v]];
            if (arc.cap < push) push = arc.cap;
        }
        for (int v = T; v != S; v = par_node[v]) {
            auto& arc = net.adj[par_node[v]][par_arc[v]];
            arc.cap -= push;
            net.adj[v][arc.rev].cap += push;
            total_cost += push * arc.cost;
        }
        remaining -= push;
    }

    TransportSolution sol;
    sol.value = Rational(total_cost, L);

    // Flow on a middle arc sits on its reverse arc's capacity.
    for (int i = 0; i < k1; ++i)
        for (const auto& arc : net.adj[i]) {
            if (arc.to < k1 || arc.to >= S) continue;
            const mpz_class& flow = net.adj[arc.to][arc.rev].cap;
            if (flow > 0)
                sol.plan.push_back({src[i].first, snk[arc.to - k1].first, Rational(flow, L)});
        }

    // Dual potential by c-transform of the sink potentials: 1-Lipschitz by
    // construction, optimal because it matches the flow potentials on every
    // flow-carrying arc.
    std::vector<Vertex> dom;
    for (const auto& e : src) dom.push_back(e.first);
    for (const auto& e : snk) dom.push_back(e.first);
    std::sort(dom.begin(), dom.end());
    dom.erase(std::unique(dom.begin(), dom.end()), dom.end());

    long shift = std::numeric_limits<long>::max();
    std::vector<long> f(dom.size());
    for (size_t k = 0; k < dom.size(); ++k) {
        long best = std::numeric_limits<long>::max();
        for (int j = 0; j < k2; ++j)
            best = std::min(best, -pi[k1 + j] + dm.at(dom[k], snk[j].first));
        f[k] = best;
        shift = std::min(shift, best);
    }
    for (size_t k = 0; k < dom.size(); ++k)
        sol.potential.emplace_back(dom[k], Rational(f[k] - shift));

    return sol;
}

bool verify_certificate(const Graph& g, const DistanceMatrix& dm, const ProbabilityMeasure& m1,
                        const ProbabilityMeasure& m2, const TransportSolution& sol) {
    // Plan: positive masses, exact marginals, cost equal to the claimed value.
    Rational plan_cost;
    std::vector<std::pair<Vertex, Rational>> out_mass, in_mass;
    for (const auto& entry : sol.plan) {
        g.check_vertex(entry.from);
        g.check_vertex(entry.to);
        if (entry.mass.sign() <= 0) return false;
        plan_cost += entry.mass * Rational(dm.at(entry.from, entry.to));
        out_mass.emplace_back(entry.from, entry.mass);
        in_mass.emplace_back(entry.to, entry.mass);
    }
    auto marginal_matches = [](std::vector<std::pair<Vertex, Rational>> acc,
                               const ProbabilityMeasure& m) {
        std::sort(acc.begin(), acc.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<Vertex, Rational>> merged;
        for (const auto& [v, mass] : acc) {
            if (!merged.empty() && merged.back().first == v) merged.back().second += mass;
            else merged.emplace_back(v, mass);
        }
        return merged == m.entries();
    };
    if (plan_cost != sol.value) return false;
    if (!marginal_matches(out_mass, m1) || !marginal_matches(in_mass, m2)) return false;

    // Potential: defined on the whole support union, min 0, 1-Lipschitz,
    // dual objective equal to the claimed value.
    auto fval = [&](Vertex v) -> const Rational* {
        for (const auto& [w, fv] : sol.potential)
            if (w == v) return &fv;
        return nullptr;
    };
    Rational minf, dual;
    bool first = true;
    for (const auto& [v, fv] : sol.potential) {
        if (first || fv < minf) minf = fv;
        first = false;
    }
    if (first || minf != Rational(0)) return false;
    for (size_t a = 0; a < sol.potential.size(); ++a)
        for (size_t b = a + 1; b < sol.potential.size(); ++b) {
            Rational gap = sol.potential[a].second - sol.potential[b].second;
            if (gap.sign() < 0) gap = -gap;
            if (gap > Rational(dm.at(sol.potential[a].first, sol.potential[b].first)))
                return false;
        }
    for (const auto& [v, mass] : m1.entries()) {
        const Rational* fv = fval(v);
        if (!fv) return false;
        dual += *fv * mass;
    }
    for (const auto& [v, mass] : m2.entries()) {
        const Rational* fv = fval(v);
        if (!fv) return false;
        dual -= *fv * mass;
    }
    return dual == sol.value;
}

Rational brute_force_dual(const Graph& g, const DistanceMatrix& dm,
                          const ProbabilityMeasure& m1, const ProbabilityMeasure& m2) {
    const int n = g.vertex_count();
    if (n > 10)
        raise(errc::too_large, "brute-force dual supports n <= 10, got " + std::to_string(n));
    for (const auto& e : m1.entries()) g.check_vertex(e.first);
    for (const auto& e : m2.entries()) g.check_vertex(e.first);

    mpz_class L(1);
    for (const auto& e : m1.entries()) L = lcm(L, e.second.den());
    for (const auto& e : m2.entries()) L = lcm(L, e.second.den());
    std::vector<mpz_class> w(static_cast<size_t>(n), mpz_class(0));
    for (const auto& [v, mass] : m1.entries()) w[v] += scaled_mass(mass, L);
    for (const auto& [v, mass] : m2.entries()) w[v] -= scaled_mass(mass, L);

    // BFS order: every later vertex has an earlier neighbor, so candidate
    // values form an interval of width <= 2 and branching stays <= 3.
    std::vector<Vertex> order{0};
    {
        std::vector<char> vis(static_cast<size_t>(n), 0);
        vis[0] = 1;
        for (size_t head = 0; head < order.size(); ++head)
            for (Vertex nb : g.neighbors(order[head]))
                if (!vis[nb]) {
                    vis[nb] = 1;
                    order.push_back(nb);
                }
    }

    const int diam = dm.diameter();
    std::vector<int> f(static_cast<size_t>(n), 0);
    mpz_class best;
    bool have_best = false;

    auto dfs = [&](auto&& self, size_t k, const mpz_class& acc) -> void {
        if (k == order.size()) {
            if (!have_best || acc > best) {
                best = acc;
                have_best = true;
            }
            return;
        }
        Vertex v = order[k];
        int lo = -diam, hi = diam;
        for (size_t j = 0; j < k; ++j) {
            Vertex u = order[j];
            lo = std::max(lo, f[u] - dm.at(u, v));
            hi = std::min(hi, f[u] + dm.at(u, v));
        }
        for (int val = lo; val <= hi; ++val) {
            f[v] = val;
            self(self, k + 1, acc + val * w[v]);
        }
    };
    dfs(dfs, 1, mpz_class(0)); // f(order[0]) = f(0) = 0

    return Rational(best, L);
}

} // namespace graphcurv
