#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dpc {

using Vertex = std::int32_t;

/// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on the dense vertex set 0..n-1.
///
/// Edges are kept in lexicographic order of (min, max) endpoint; an edge's
/// position in that order is its edge index, which covers use to key their
/// matchings. Two graphs with the same vertex count and edge set therefore
/// share edge indices regardless of how they were built.
class Graph {
public:
    Graph() = default;

    /// Throws InvalidArgument on self-loops, duplicate edges, or out-of-range endpoints.
    Graph(int num_vertices, std::span<const Edge> edges);
    Graph(int num_vertices, std::initializer_list<Edge> edges)
        : Graph(num_vertices, std::span<const Edge>(edges.begin(), edges.size())) {}

    int num_vertices() const noexcept { return n_; }
    int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(int index) const { return edges_.at(static_cast<std::size_t>(index)); }

    /// Sorted neighbor list.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(Vertex a, Vertex b) const { return edge_index(a, b) >= 0; }

    /// Index of edge {a, b}, or -1 when absent.
    int edge_index(Vertex a, Vertex b) const;

    bool is_connected() const;
    /// |E| - |V| + (number of components).
    int cyclomatic_number() const;
    std::vector<std::vector<Vertex>> components() const;

    /// Graph with `v` deleted; ids above `v` shift down by one.
    Graph remove_vertex(Vertex v) const;
    /// Graph with the edge at `index` deleted.
    Graph remove_edge(int index) const;
    Graph induced(std::span<const Vertex> vertices) const;

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    void set_labels(std::vector<std::string> labels);

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::int32_t> index_;  // n*n, -1 when no edge
    std::vector<std::string> labels_;
};

enum class Family { cycle, path, complete };

/// C_n (n >= 3) with edges v_i v_{i+1} and v_{n-1} v_0; P_n and K_n (n >= 1).
Graph build_family(Family family, int n);

Graph empty_graph(int n);

/// Disjoint copies of g and h plus every cross edge; g's ids come first.
Graph join(const Graph& g, const Graph& h);

/// Vertex-disjoint union with ids concatenated in order.
Graph disjoint_union(std::span<const Graph> parts);

/// Bookkeeping for a K_p-gluing.
struct GluingMap {
    std::vector<Graph> parts;
    int p = 0;
    std::vector<std::vector<Vertex>> chosen_cliques;      // per part, ordered p-tuple
    std::vector<Vertex> glued_vertex_ids;                 // u_1..u_p in the result
    std::vector<std::vector<Vertex>> part_vertex_map;     // per part: part vertex -> result vertex
};

struct Gluing {
    Graph graph;
    GluingMap map;
};

/// K_p-gluing: the q-th chosen clique vertex of every part becomes u_q.
///
/// Id layout: part 0 keeps its ids (so u_q is part 0's q-th clique vertex);
/// the non-glued vertices of each later part are appended in increasing id
/// order. Edges that coincide after identification are merged.
Gluing glue(std::span<const Graph> parts, std::span<const std::vector<Vertex>> cliques);

bool is_clique(const Graph& g, std::span<const Vertex> vertices);

/// Text format: `n e` header, then e lines `u v`; `#` starts a comment.
Graph read_graph(std::istream& in);
Graph parse_graph(const std::string& text);
void write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);

}  // namespace dpc
