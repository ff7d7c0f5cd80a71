#include "fracgraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

namespace fracgraph {

int WeightedGraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw UnknownVertex("unknown vertex '" + id + "'");
    return it->second;
}

double WeightedGraph::normalized_degree(int i) const {
    double sum = 0.0;
    for (const auto& [j, w] : neighbors(i))
        sum += w;
    return sum / measure(i);
}

bool WeightedGraph::same_as(const WeightedGraph& other) const {
    if (ids_ != other.ids_ || mu_ != other.mu_)
        return false;
    return adj_ == other.adj_;
}

WeightedGraph build_graph(const std::vector<std::string>& vertices,
                          const std::map<std::string, double>& measures,
                          const std::vector<std::tuple<std::string, std::string, double>>& edges) {
    WeightedGraph g;
    for (const auto& id : vertices) {
        if (g.index_.count(id))
            throw InvalidParams("duplicate vertex id '" + id + "'");
        auto it = measures.find(id);
        if (it == measures.end())
            throw NonPositiveMeasure("no measure given for vertex '" + id + "'");
        const double m = it->second;
        if (!(m > 0.0) || !std::isfinite(m))
            throw NonPositiveMeasure("measure of '" + id + "' must be positive, got " +
                                     std::to_string(m));
        g.index_[id] = g.size();
        g.ids_.push_back(id);
        g.mu_.push_back(m);
        g.total_mu_ += m;
    }
    g.adj_.resize(g.ids_.size());

    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b, w] : edges) {
        auto ia = g.index_.find(a);
        auto ib = g.index_.find(b);
        if (ia == g.index_.end())
            throw UnknownEndpoint("edge endpoint '" + a + "' is not a vertex");
        if (ib == g.index_.end())
            throw UnknownEndpoint("edge endpoint '" + b + "' is not a vertex");
        if (ia->second == ib->second)
            throw SelfLoop("self-loop at '" + a + "'");
        if (!(w > 0.0) || !std::isfinite(w))
            throw NonPositiveWeight("weight of edge (" + a + "," + b + ") must be positive, got " +
                                    std::to_string(w));
        const int u = std::min(ia->second, ib->second);
        const int v = std::max(ia->second, ib->second);
        if (!seen.insert({u, v}).second)
            throw DuplicateEdge("duplicate edge (" + a + "," + b + ")");
        g.edges_.push_back({u, v, w});
        g.adj_[static_cast<size_t>(u)].push_back({v, w});
        g.adj_[static_cast<size_t>(v)].push_back({u, w});
    }
    for (auto& nbrs : g.adj_)
        std::sort(nbrs.begin(), nbrs.end());
    return g;
}

namespace {

// BFS hop distances from source; -1 where unreachable.
std::vector<int> bfs_distances(const WeightedGraph& g, int source) {
    std::vector<int> dist(static_cast<size_t>(g.size()), -1);
    std::queue<int> q;
    dist[static_cast<size_t>(source)] = 0;
    q.push(source);
    while (!q.empty()) {
        const int x = q.front();
        q.pop();
        for (const auto& [y, w] : g.neighbors(x)) {
            if (dist[static_cast<size_t>(y)] < 0) {
                dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
                q.push(y);
            }
        }
    }
    return dist;
}

} // namespace

ValidationReport validate_graph(const WeightedGraph& g) {
    ValidationReport rep;
    if (g.size() == 0) {
        rep.issues.push_back("graph has no vertices");
        return rep;
    }
    const auto dist = bfs_distances(g, 0);
    rep.connected = std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
    if (!rep.connected)
        rep.issues.push_back("graph is not connected");

    rep.min_measure = *std::min_element(g.measures().begin(), g.measures().end());
    rep.max_normalized_degree = 0.0;
    for (int i = 0; i < g.size(); ++i)
        rep.max_normalized_degree = std::max(rep.max_normalized_degree, g.normalized_degree(i));
    rep.stochastically_complete_sufficient = std::isfinite(rep.max_normalized_degree);
    return rep;
}

int graph_distance(const WeightedGraph& g, const std::string& x, const std::string& x0) {
    const int ix = g.index_of(x);
    const int i0 = g.index_of(x0);
    const auto dist = bfs_distances(g, i0);
    if (dist[static_cast<size_t>(ix)] < 0)
        throw Disconnected("no path between '" + x + "' and '" + x0 + "'");
    return dist[static_cast<size_t>(ix)];
}

WeightedGraph ball(const WeightedGraph& g, const std::string& x0, int r) {
    const int i0 = g.index_of(x0);
    if (r < 0)
        throw InvalidParams("ball radius must be nonnegative");
    const auto dist = bfs_distances(g, i0);

    std::vector<std::string> vertices;
    std::map<std::string, double> measures;
    std::vector<char> keep(static_cast<size_t>(g.size()), 0);
    for (int i = 0; i < g.size(); ++i) {
        if (dist[static_cast<size_t>(i)] >= 0 && dist[static_cast<size_t>(i)] <= r) {
            keep[static_cast<size_t>(i)] = 1;
            vertices.push_back(g.id(i));
            measures[g.id(i)] = g.measure(i);
        }
    }
    std::vector<std::tuple<std::string, std::string, double>> edges;
    for (const auto& e : g.edges())
        if (keep[static_cast<size_t>(e.u)] && keep[static_cast<size_t>(e.v)])
            edges.emplace_back(g.id(e.u), g.id(e.v), e.w);
    return build_graph(vertices, measures, edges);
}

GraphKind graph_kind_from_string(const std::string& name) {
    if (name == "path") return GraphKind::path;
    if (name == "cycle") return GraphKind::cycle;
    if (name == "lattice_ball_Z") return GraphKind::lattice_ball_Z;
    if (name == "lattice_ball_Z2") return GraphKind::lattice_ball_Z2;
    if (name == "star") return GraphKind::star;
    throw InvalidParams("unknown generator kind '" + name + "'");
}

namespace {

int size_param(const std::map<std::string, double>& params, const char* key) {
    auto it = params.find(key);
    if (it == params.end())
        throw InvalidParams(std::string("missing generator parameter '") + key + "'");
    const double v = it->second;
    if (!(v >= 1.0) || v != std::floor(v))
        throw InvalidParams(std::string("parameter '") + key + "' must be a positive integer");
    return static_cast<int>(v);
}

double uniform_param(const std::map<std::string, double>& params, const char* key) {
    auto it = params.find(key);
    return it == params.end() ? 1.0 : it->second;
}

} // namespace

WeightedGraph generate_standard(GraphKind kind, const std::map<std::string, double>& params) {
    for (const auto& [key, value] : params)
        if (key != "n" && key != "R" && key != "mu" && key != "w")
            throw InvalidParams("unknown generator parameter '" + key + "'");
    const double mu = uniform_param(params, "mu");
    const double w = uniform_param(params, "w");

    std::vector<std::string> vertices;
    std::map<std::string, double> measures;
    std::vector<std::tuple<std::string, std::string, double>> edges;

    auto add_vertex = [&](const std::string& id) {
        vertices.push_back(id);
        measures[id] = mu;
    };

    switch (kind) {
    case GraphKind::path: {
        const int n = size_param(params, "n");
        for (int i = 0; i < n; ++i)
            add_vertex("v" + std::to_string(i));
        for (int i = 0; i + 1 < n; ++i)
            edges.emplace_back(vertices[static_cast<size_t>(i)], vertices[static_cast<size_t>(i + 1)], w);
        break;
    }
    case GraphKind::cycle: {
        const int n = size_param(params, "n");
        if (n < 3)
            throw InvalidParams("cycle needs n >= 3");
        for (int i = 0; i < n; ++i)
            add_vertex("v" + std::to_string(i));
        for (int i = 0; i < n; ++i)
            edges.emplace_back(vertices[static_cast<size_t>(i)], vertices[static_cast<size_t>((i + 1) % n)], w);
        break;
    }
    case GraphKind::lattice_ball_Z: {
        const int R = size_param(params, "R");
        for (int i = -R; i <= R; ++i)
            add_vertex(std::to_string(i));
        for (int i = -R; i < R; ++i)
            edges.emplace_back(std::to_string(i), std::to_string(i + 1), w);
        break;
    }
    case GraphKind::lattice_ball_Z2: {
        const int R = size_param(params, "R");
        auto name = [](int i, int j) { return std::to_string(i) + "," + std::to_string(j); };
        for (int i = -R; i <= R; ++i)
            for (int j = -(R - std::abs(i)); j <= R - std::abs(i); ++j)
                add_vertex(name(i, j));
        for (int i = -R; i <= R; ++i)
            for (int j = -(R - std::abs(i)); j <= R - std::abs(i); ++j) {
                if (std::abs(i + 1) + std::abs(j) <= R)
                    edges.emplace_back(name(i, j), name(i + 1, j), w);
                if (std::abs(i) + std::abs(j + 1) <= R)
                    edges.emplace_back(name(i, j), name(i, j + 1), w);
            }
        break;
    }
    case GraphKind::star: {
        const int n = size_param(params, "n");
        for (int i = 0; i < n; ++i)
            add_vertex("v" + std::to_string(i));
        for (int i = 1; i < n; ++i)
            edges.emplace_back(vertices[0], vertices[static_cast<size_t>(i)], w);
        break;
    }
    }
    return build_graph(vertices, measures, edges);
}

WeightedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open '" + path + "' for reading");
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
        // nlohmann reports a byte offset; translate it to a line number.
        const size_t pos = std::min(e.byte, content.size());
        const long line = 1 + std::count(content.begin(), content.begin() + static_cast<long>(pos), '\n');
        throw ParseError("parse error in '" + path + "' at line " + std::to_string(line) + ": " + e.what());
    }

    try {
        std::vector<std::string> vertices;
        std::map<std::string, double> measures;
        std::vector<std::tuple<std::string, std::string, double>> edges;
        for (const auto& v : doc.at("vertices")) {
            const std::string id = v.at("id").get<std::string>();
            vertices.push_back(id);
            measures[id] = v.at("mu").get<double>();
        }
        for (const auto& e : doc.at("edges"))
            edges.emplace_back(e.at("u").get<std::string>(), e.at("v").get<std::string>(),
                               e.at("w").get<double>());
        return build_graph(vertices, measures, edges);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad graph schema in '" + path + "': " + e.what());
    }
}

void save_graph(const WeightedGraph& g, const std::string& path) {
    nlohmann::json doc;
    doc["vertices"] = nlohmann::json::array();
    for (int i = 0; i < g.size(); ++i)
        doc["vertices"].push_back({{"id", g.id(i)}, {"mu", g.measure(i)}});
    doc["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges())
        doc["edges"].push_back({{"u", g.id(e.u)}, {"v", g.id(e.v)}, {"w", e.w}});

    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    out << doc.dump(2) << "\n";
    if (!out)
        throw IoError("write to '" + path + "' failed");
}

} // namespace fracgraph
