#ifndef FRACGRAPH_GRAPH_HPP
#define FRACGRAPH_GRAPH_HPP

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fracgraph/errors.hpp"

namespace fracgraph {

/// Undirected edge between vertex indices u < v with positive weight.
struct Edge {
    int u;
    int v;
    double w;
};

/// A connected-or-not weighted graph G = (V, E, mu, w).
///
/// Immutable after construction: build via build_graph / generate_standard /
/// load_graph.  Vertex identifiers are opaque strings; insertion order fixes
/// the integer index used by every matrix-valued operation.
class WeightedGraph {
public:
    int size() const { return static_cast<int>(ids_.size()); }
    const std::vector<std::string>& vertex_ids() const { return ids_; }
    const std::string& id(int i) const { return ids_.at(static_cast<size_t>(i)); }
    double measure(int i) const { return mu_.at(static_cast<size_t>(i)); }
    const std::vector<double>& measures() const { return mu_; }
    double total_measure() const { return total_mu_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Neighbors of vertex i as (index, weight) pairs, ascending index.
    const std::vector<std::pair<int, double>>& neighbors(int i) const {
        return adj_.at(static_cast<size_t>(i));
    }

    /// Index of a vertex id; throws UnknownVertex.
    int index_of(const std::string& id) const;

    /// (1/mu(x)) * sum of incident weights at vertex i.
    double normalized_degree(int i) const;

    bool same_as(const WeightedGraph& other) const;

private:
    WeightedGraph() = default;
    friend WeightedGraph build_graph(const std::vector<std::string>&,
                                     const std::map<std::string, double>&,
                                     const std::vector<std::tuple<std::string, std::string, double>>&);

    std::vector<std::string> ids_;
    std::map<std::string, int> index_;
    std::vector<double> mu_;
    double total_mu_ = 0.0;
    std::vector<std::vector<std::pair<int, double>>> adj_;
    std::vector<Edge> edges_;
};

WeightedGraph build_graph(const std::vector<std::string>& vertices,
                          const std::map<std::string, double>& measures,
                          const std::vector<std::tuple<std::string, std::string, double>>& edges);

struct ValidationReport {
    bool connected = false;
    double min_measure = 0.0;
    // sup over x of (1/mu(x)) * sum_{y~x} w_xy; finite on finite graphs,
    // which is the sufficient condition for stochastic completeness.
    double max_normalized_degree = 0.0;
    bool stochastically_complete_sufficient = false;
    std::vector<std::string> issues;
};

ValidationReport validate_graph(const WeightedGraph& g);

/// Hop-count distance (minimum number of edges between x and x0).
int graph_distance(const WeightedGraph& g, const std::string& x, const std::string& x0);

/// Induced subgraph on {y : d(y, x0) <= r}, measures and weights restricted.
WeightedGraph ball(const WeightedGraph& g, const std::string& x0, int r);

enum class GraphKind { path, cycle, lattice_ball_Z, lattice_ball_Z2, star };

GraphKind graph_kind_from_string(const std::string& name);

/// Standard test-fixture graphs with deterministic vertex ordering:
///   path n:            v0 - v1 - ... - v{n-1}
///   cycle n:           v0 - ... - v{n-1} - v0            (n >= 3)
///   lattice_ball_Z R:  integers -R..R in ascending order, unit steps
///   lattice_ball_Z2 R: pairs "i,j" with |i|+|j| <= R, lexicographic (i, j)
///   star n:            hub v0 plus leaves v1..v{n-1}
/// params: "n" or "R" for the size, optional uniform "mu" and "w" (default 1).
WeightedGraph generate_standard(GraphKind kind, const std::map<std::string, double>& params);

WeightedGraph load_graph(const std::string& path);
void save_graph(const WeightedGraph& g, const std::string& path);

} // namespace fracgraph

#endif
