#include "graphcurv/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace graphcurv {

Family family_from_name(std::string_view name) {
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "complete") return Family::complete;
    if (name == "dumbbell") return Family::dumbbell;
    if (name == "binary_tree") return Family::binary_tree;
    if (name == "star") return Family::star;
    if (name == "pendant_hexagon") return Family::pendant_hexagon;
    raise(errc::invalid_parameter, "unknown graph family '" + std::string(name) + "'");
}

const char* family_name(Family f) {
    switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::dumbbell: return "dumbbell";
    case Family::binary_tree: return "binary_tree";
    case Family::star: return "star";
    case Family::pendant_hexagon: return "pendant_hexagon";
    }
    return "?";
}

namespace {

// Validation shared by all constructors once labels are resolved to dense ids.
// Rejects self loops, duplicate edges and disconnected inputs.
struct Core {
    int n;
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> adj;
};

Core build_core(int n, std::vector<Edge> edges, const std::vector<long long>& labels) {
    Core c;
    c.n = n;
    std::set<std::pair<Vertex, Vertex>> seen;
    for (Edge& e : edges) {
        if (e.u == e.v)
            raise(errc::self_loop, "self loop at vertex " + std::to_string(labels[e.u]));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (!seen.insert({e.u, e.v}).second)
            raise(errc::duplicate_edge, "duplicate edge " + std::to_string(labels[e.u]) + " " +
                                            std::to_string(labels[e.v]));
    }
    std::sort(edges.begin(), edges.end());
    c.edges = std::move(edges);

    c.adj.assign(static_cast<size_t>(n), {});
    for (const Edge& e : c.edges) {
        c.adj[e.u].push_back(e.v);
        c.adj[e.v].push_back(e.u);
    }
    for (auto& nb : c.adj) std::sort(nb.begin(), nb.end());

    // Connectivity; with n >= 2 this also forces every degree >= 1.
    std::vector<char> vis(static_cast<size_t>(n), 0);
    std::vector<Vertex> queue{0};
    vis[0] = 1;
    for (size_t head = 0; head < queue.size(); ++head)
        for (Vertex w : c.adj[queue[head]])
            if (!vis[w]) {
                vis[w] = 1;
                queue.push_back(w);
            }
    if (queue.size() != static_cast<size_t>(n)) {
        for (Vertex v = 0; v < n; ++v)
            if (!vis[v])
                raise(errc::disconnected, "vertex " + std::to_string(labels[v]) +
                                              " unreachable from " + std::to_string(labels[0]));
    }
    return c;
}

} // namespace

Graph Graph::from_labeled_edges(const std::vector<std::pair<long long, long long>>& input) {
    if (input.empty()) raise(errc::invalid_parameter, "graph needs at least one edge");

    Graph g;
    std::unordered_map<long long, Vertex> id_of;
    auto intern = [&](long long label) {
        auto [it, fresh] = id_of.try_emplace(label, g.n_);
        if (fresh) {
            g.labels_.push_back(label);
            ++g.n_;
        }
        return it->second;
    };

    std::vector<Edge> edges;
    edges.reserve(input.size());
    for (const auto& [lu, lv] : input) {
        if (lu == lv) raise(errc::self_loop, "self loop at vertex " + std::to_string(lu));
        edges.push_back({intern(lu), intern(lv)});
    }

    Core c = build_core(g.n_, std::move(edges), g.labels_);
    g.edges_ = std::move(c.edges);
    g.adj_ = std::move(c.adj);
    return g;
}

Graph Graph::from_edge_list_text(std::string_view text) {
    std::vector<std::pair<long long, long long>> pairs;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        std::istringstream ls(line);
        long long u, v;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra))
            raise(errc::parse_error,
                  "line " + std::to_string(lineno) + ": expected 'u v', got '" + line + "'");
        if (u < 0 || v < 0)
            raise(errc::parse_error, "line " + std::to_string(lineno) + ": negative vertex label");
        pairs.emplace_back(u, v);
    }
    if (pairs.empty()) raise(errc::parse_error, "no edges in input");
    return from_labeled_edges(pairs);
}

Graph Graph::from_json(std::string_view text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        raise(errc::parse_error, "graph JSON: not a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer())
        raise(errc::parse_error, "graph JSON: missing integer field 'n'");
    if (!j.contains("edges") || !j["edges"].is_array())
        raise(errc::parse_error, "graph JSON: missing array field 'edges'");

    long long n = j["n"].get<long long>();
    if (n < 2) raise(errc::invalid_parameter, "graph JSON: need n >= 2, got " + std::to_string(n));

    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            raise(errc::parse_error, "graph JSON: edge entries must be [u, v] integer pairs");
        long long u = e[0].get<long long>(), v = e[1].get<long long>();
        if (u < 0 || u >= n || v < 0 || v >= n)
            raise(errc::parse_error, "graph JSON: vertex id out of range [0, n)");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    if (edges.empty()) raise(errc::parse_error, "graph JSON: no edges");

    Graph g;
    g.n_ = static_cast<int>(n);
    g.labels_.resize(static_cast<size_t>(n));
    for (Vertex v = 0; v < g.n_; ++v) g.labels_[v] = v;

    // A declared vertex that no edge touches is isolated; report it before the
    // generic reachability walk so the message names the right vertex. Edge
    // shape errors still take precedence.
    std::vector<char> used(static_cast<size_t>(n), 0);
    for (const Edge& e : edges) {
        if (e.u == e.v)
            raise(errc::self_loop, "self-loop at vertex " + std::to_string(e.u));
        used[e.u] = used[e.v] = 1;
    }
    for (Vertex v = 0; v < g.n_; ++v)
        if (!used[v]) raise(errc::disconnected, "vertex " + std::to_string(v) + " has no incident edge");

    Core c = build_core(g.n_, std::move(edges), g.labels_);
    g.edges_ = std::move(c.edges);
    g.adj_ = std::move(c.adj);
    return g;
}

Graph Graph::generate(Family f, long long param) {
    std::vector<std::pair<long long, long long>> e;
    switch (f) {
    case Family::path: {
        long long n = param;
        if (n < 2) raise(errc::invalid_parameter, "path needs n >= 2");
        for (long long i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
        break;
    }
    case Family::cycle: {
        long long n = param;
        if (n < 3) raise(errc::invalid_parameter, "cycle needs n >= 3");
        for (long long i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
        e.emplace_back(0, n - 1);
        break;
    }
    case Family::complete: {
        long long m = param;
        if (m < 3) raise(errc::invalid_parameter, "complete needs m >= 3");
        for (long long i = 0; i < m; ++i)
            for (long long j = i + 1; j < m; ++j) e.emplace_back(i, j);
        break;
    }
    case Family::dumbbell: {
        // Two complete graphs on {0..m-1} and {m..2m-1}, bridge 0 -- m.
        // Emission order keeps the label remap the identity.
        long long m = param;
        if (m < 3) raise(errc::invalid_parameter, "dumbbell needs m >= 3");
        for (long long i = 0; i < m; ++i)
            for (long long j = i + 1; j < m; ++j) e.emplace_back(i, j);
        for (long long i = 0; i < m; ++i)
            for (long long j = i + 1; j < m; ++j) e.emplace_back(m + i, m + j);
        e.emplace_back(0, m);
        break;
    }
    case Family::binary_tree: {
        // Full binary tree of depth m in heap order plus one extra leaf under
        // the root, so every non-leaf vertex has degree exactly 3.
        long long m = param;
        if (m < 1) raise(errc::invalid_parameter, "binary_tree needs m >= 1");
        if (m > 20) raise(errc::invalid_parameter, "binary_tree supports m <= 20");
        long long internal = (1LL << m) - 1; // ids with children
        for (long long v = 0; v < internal; ++v) {
            e.emplace_back(v, 2 * v + 1);
            e.emplace_back(v, 2 * v + 2);
        }
        e.emplace_back(0, (1LL << (m + 1)) - 1);
        break;
    }
    case Family::star: {
        long long k = param;
        if (k < 1) raise(errc::invalid_parameter, "star needs k >= 1");
        for (long long i = 1; i <= k; ++i) e.emplace_back(0, i);
        break;
    }
    case Family::pendant_hexagon: {
        // Hexagon 0..5 with a pendant leaf 6+i attached at each cycle vertex i.
        for (long long i = 0; i < 6; ++i) e.emplace_back(i, (i + 1) % 6);
        for (long long i = 0; i < 6; ++i) e.emplace_back(i, 6 + i);
        break;
    }
    }
    return from_labeled_edges(e);
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(Vertex v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

int Graph::max_degree() const {
    size_t d = 0;
    for (const auto& nb : adj_) d = std::max(d, nb.size());
    return static_cast<int>(d);
}

long long Graph::label(Vertex v) const {
    check_vertex(v);
    return labels_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        raise(errc::invalid_parameter, "vertex id " + std::to_string(v) + " out of range");
}

std::string Graph::to_edge_list_text() const {
    std::string out;
    for (const Edge& e : edges_) {
        out += std::to_string(labels_[e.u]);
        out += ' ';
        out += std::to_string(labels_[e.v]);
        out += '\n';
    }
    return out;
}

std::string Graph::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n_;
    auto& arr = j["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : edges_) arr.push_back({e.u, e.v});
    return j.dump();
}

DistanceMatrix::DistanceMatrix(const Graph& g)
    : n_(g.vertex_count()), diameter_(0), d_(static_cast<size_t>(n_) * n_, -1) {
    std::vector<Vertex> queue(static_cast<size_t>(n_));
    for (Vertex s = 0; s < n_; ++s) {
        int* dist = &d_[static_cast<size_t>(s) * n_];
        dist[s] = 0;
        size_t head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            Vertex u = queue[head++];
            for (Vertex w : g.neighbors(u))
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    diameter_ = std::max(diameter_, dist[w]);
                    queue[tail++] = w;
                }
        }
    }
}

NeighborhoodPartition neighborhood_partition(const Graph& g, const DistanceMatrix& dm,
                                             Vertex x, Vertex y) {
    g.check_vertex(x);
    g.check_vertex(y);
    if (x == y) raise(errc::same_vertex, "partition needs two distinct vertices");
    NeighborhoodPartition p;
    int d = dm.at(x, y);
    for (Vertex w : g.neighbors(y)) {
        int dw = dm.at(x, w);
        if (dw == d - 1) p.closer.push_back(w);
        else if (dw == d) p.same.push_back(w);
        else p.farther.push_back(w);
    }
    return p;
}

std::vector<Vertex> shortest_path(const Graph& g, const DistanceMatrix& dm, Vertex x, Vertex y) {
    g.check_vertex(x);
    g.check_vertex(y);
    std::vector<Vertex> path{x};
    Vertex cur = x;
    while (cur != y) {
        for (Vertex w : g.neighbors(cur)) // sorted, so smallest id wins
            if (dm.at(w, y) == dm.at(cur, y) - 1) {
                cur = w;
                break;
            }
        path.push_back(cur);
    }
    return path;
}

} // namespace graphcurv
