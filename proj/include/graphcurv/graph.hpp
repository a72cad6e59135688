#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graphcurv/error.hpp"

namespace graphcurv {

using Vertex = int;

struct Edge {
    Vertex u; // u < v
    Vertex v;

    friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

enum class Family { path, cycle, complete, dumbbell, binary_tree, star, pendant_hexagon };

Family family_from_name(std::string_view name);
const char* family_name(Family f);

// Finite simple connected undirected graph on vertices 0..n-1.
// Input labels are remapped to dense ids in first-appearance order; the
// original labels are kept for output.
class Graph {
public:
    // `input` holds (label, label) pairs in input order.
    static Graph from_labeled_edges(const std::vector<std::pair<long long, long long>>& input);

    // One "u v" pair per line; blank lines and #-comment lines are ignored.
    static Graph from_edge_list_text(std::string_view text);

    // {"n": <int>, "edges": [[u, v], ...]} with 0-based vertex ids.
    static Graph from_json(std::string_view text);

    static Graph generate(Family f, long long param);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const;
    int degree(Vertex v) const;
    int max_degree() const;
    long long label(Vertex v) const;

    bool has_edge(Vertex u, Vertex v) const;
    void check_vertex(Vertex v) const;

    std::string to_edge_list_text() const; // original labels, canonical edge order
    std::string to_json() const;           // canonical 0-based ids

private:
    Graph() = default;

    int n_ = 0;
    std::vector<Edge> edges_;                // canonical: u < v, sorted
    std::vector<std::vector<Vertex>> adj_;   // sorted neighbor lists
    std::vector<long long> labels_;
};

// All-pairs hop distances (BFS from every vertex).
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g);

    int at(Vertex x, Vertex y) const { return d_[static_cast<size_t>(x) * n_ + y]; }
    int diameter() const { return diameter_; }
    int size() const { return n_; }

private:
    int n_;
    int diameter_;
    std::vector<int> d_;
};

// Neighbors of y split by distance to x: closer (d-1), same (d), farther (d+1).
struct NeighborhoodPartition {
    std::vector<Vertex> closer;  // gamma_minus
    std::vector<Vertex> same;    // gamma_zero
    std::vector<Vertex> farther; // gamma_plus
};

NeighborhoodPartition neighborhood_partition(const Graph& g, const DistanceMatrix& dm,
                                             Vertex x, Vertex y);

// One shortest x->y path as a vertex sequence; deterministic (smallest next id).
std::vector<Vertex> shortest_path(const Graph& g, const DistanceMatrix& dm, Vertex x, Vertex y);

} // namespace graphcurv
