#include "dpcolor/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "dpcolor/errors.hpp"

namespace dpc {

Graph::Graph(int num_vertices, std::span<const Edge> edges) : n_(num_vertices) {
    if (num_vertices < 0) throw InvalidArgument("negative vertex count");
    edges_.reserve(edges.size());
    for (Edge e : edges) {
        if (e.u == e.v) throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_) {
            throw InvalidArgument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                  " out of range for " + std::to_string(n_) + " vertices");
        }
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
        throw InvalidArgument("duplicate edge " + std::to_string(dup->u) + "-" + std::to_string(dup->v));
    }

    adj_.assign(static_cast<std::size_t>(n_), {});
    index_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto [u, v] = edges_[i];
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
        index_[static_cast<std::size_t>(u) * n_ + v] = static_cast<std::int32_t>(i);
        index_[static_cast<std::size_t>(v) * n_ + u] = static_cast<std::int32_t>(i);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::edge_index(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) return -1;
    return index_[static_cast<std::size_t>(a) * n_ + b];
}

std::vector<std::vector<Vertex>> Graph::components() const {
    std::vector<std::vector<Vertex>> out;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (Vertex s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (Vertex w : adj_[comp[head]]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool Graph::is_connected() const { return n_ > 0 && components().size() == 1; }

int Graph::cyclomatic_number() const {
    return num_edges() - n_ + static_cast<int>(components().size());
}

Graph Graph::remove_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw InvalidArgument("remove_vertex: no vertex " + std::to_string(v));
    std::vector<Edge> kept;
    for (auto [a, b] : edges_) {
        if (a == v || b == v) continue;
        kept.push_back({a > v ? a - 1 : a, b > v ? b - 1 : b});
    }
    Graph out(n_ - 1, kept);
    if (!labels_.empty()) {
        auto labels = labels_;
        labels.erase(labels.begin() + v);
        out.set_labels(std::move(labels));
    }
    return out;
}

Graph Graph::remove_edge(int index) const {
    std::vector<Edge> kept = edges_;
    kept.erase(kept.begin() + index);
    Graph out(n_, kept);
    out.labels_ = labels_;
    return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
    std::vector<Vertex> pos(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) pos.at(static_cast<std::size_t>(vertices[i])) = static_cast<Vertex>(i);
    std::vector<Edge> kept;
    for (auto [a, b] : edges_) {
        if (pos[a] >= 0 && pos[b] >= 0) kept.push_back({pos[a], pos[b]});
    }
    return Graph(static_cast<int>(vertices.size()), kept);
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != static_cast<std::size_t>(n_)) {
        throw InvalidArgument("label count does not match vertex count");
    }
    labels_ = std::move(labels);
}

Graph build_family(Family family, int n) {
    std::vector<Edge> edges;
    switch (family) {
    case Family::cycle:
        if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices, got " + std::to_string(n));
        for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
        break;
    case Family::path:
        if (n < 1) throw InvalidArgument("path needs at least 1 vertex");
        for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
        break;
    case Family::complete:
        if (n < 1) throw InvalidArgument("complete graph needs at least 1 vertex");
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
        break;
    }
    return Graph(n, edges);
}

Graph empty_graph(int n) { return Graph(n, std::span<const Edge>{}); }

Graph join(const Graph& g, const Graph& h) {
    if (g.num_vertices() == 0 || h.num_vertices() == 0) throw InvalidArgument("join of an empty graph");
    const int off = g.num_vertices();
    std::vector<Edge> edges = g.edges();
    for (auto [a, b] : h.edges()) edges.push_back({a + off, b + off});
    for (Vertex a = 0; a < off; ++a)
        for (Vertex b = 0; b < h.num_vertices(); ++b) edges.push_back({a, b + off});
    return Graph(off + h.num_vertices(), edges);
}

Graph disjoint_union(std::span<const Graph> parts) {
    if (parts.empty()) throw InvalidArgument("disjoint_union needs at least one part");
    std::vector<Edge> edges;
    int off = 0;
    for (const Graph& part : parts) {
        for (auto [a, b] : part.edges()) edges.push_back({a + off, b + off});
        off += part.num_vertices();
    }
    return Graph(off, edges);
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 0 || vertices[i] >= g.num_vertices()) return false;
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (!g.has_edge(vertices[i], vertices[j])) return false;
        }
    }
    return true;
}

Gluing glue(std::span<const Graph> parts, std::span<const std::vector<Vertex>> cliques) {
    if (parts.size() < 2) throw InvalidArgument("gluing needs at least two parts");
    if (cliques.size() != parts.size()) throw InvalidArgument("one clique tuple per part required");
    const std::size_t p = cliques[0].size();
    if (p == 0) throw InvalidArgument("gluing clique size must be at least 1");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (cliques[i].size() != p) throw InvalidArgument("clique tuples have mismatched sizes");
        if (!is_clique(parts[i], cliques[i])) {
            throw InvalidArgument("chosen tuple of part " + std::to_string(i) + " is not a clique");
        }
        auto sorted = cliques[i];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw InvalidArgument("clique tuple repeats a vertex");
        }
    }

    GluingMap map;
    map.parts.assign(parts.begin(), parts.end());
    map.p = static_cast<int>(p);
    map.chosen_cliques.assign(cliques.begin(), cliques.end());
    map.glued_vertex_ids = cliques[0];

    int next = parts[0].num_vertices();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const Graph& part = parts[i];
        std::vector<Vertex> to(static_cast<std::size_t>(part.num_vertices()), -1);
        for (std::size_t q = 0; q < p; ++q) to[cliques[i][q]] = cliques[0][q];
        for (Vertex x = 0; x < part.num_vertices(); ++x) {
            if (to[x] >= 0) continue;
            to[x] = (i == 0) ? x : next++;
        }
        for (auto [a, b] : part.edges()) {
            Edge e{to[a], to[b]};
            if (e.u > e.v) std::swap(e.u, e.v);
            edges.push_back(e);
        }
        map.part_vertex_map.push_back(std::move(to));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Gluing{Graph(next, edges), std::move(map)};
}

namespace {

// Next line that carries content, with comments stripped.
bool next_content_line(std::istream& in, std::string& out, int& line_no) {
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out = line;
        return true;
    }
    return false;
}

}  // namespace

Graph read_graph(std::istream& in) {
    int line_no = 0;
    std::string line;
    if (!next_content_line(in, line, line_no)) throw ParseError(line_no, "missing `n e` header");
    std::istringstream header(line);
    long long n = -1;
    long long e = -1;
    std::string extra;
    if (!(header >> n >> e) || (header >> extra) || n < 0 || e < 0) {
        throw ParseError(line_no, "expected header `n e` with non-negative integers");
    }
    std::vector<Edge> edges;
    for (long long i = 0; i < e; ++i) {
        if (!next_content_line(in, line, line_no)) {
            throw ParseError(line_no, "expected " + std::to_string(e) + " edges, found " + std::to_string(i));
        }
        std::istringstream row(line);
        long long a = -1;
        long long b = -1;
        if (!(row >> a >> b) || (row >> extra)) throw ParseError(line_no, "expected edge `u v`");
        if (a < 0 || b < 0 || a >= n || b >= n) throw ParseError(line_no, "vertex id out of range");
        if (a == b) throw ParseError(line_no, "self-loop");
        edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    }
    if (next_content_line(in, line, line_no)) throw ParseError(line_no, "unexpected trailing content");
    try {
        return Graph(static_cast<int>(n), edges);
    } catch (const InvalidArgument& err) {
        throw ParseError(line_no, err.what());
    }
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

}  // namespace dpc
