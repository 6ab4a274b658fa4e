#pragma once

#include <vector>

#include "dpcolor/cover.hpp"

namespace dpc {

/// Edge indices of the BFS tree from `root` (neighbors in increasing id
/// order). Throws InvalidArgument if g is disconnected.
std::vector<int> bfs_spanning_tree(const Graph& g, Vertex root = 0);

struct NormalizedCover {
    Cover cover;
    /// relabeling[v][old index] = new index.
    std::vector<std::vector<Fiber>> relabeling;
};

/// Relabels fibers so every tree edge carries the identity. Requires a full
/// cover and a spanning tree given as base edge indices.
NormalizedCover normalize_by_spanning_tree(const Cover& c, const std::vector<int>& tree);

/// The same cover carried along a vertex bijection: base vertex x of c
/// becomes phi[x] in `target`. Throws InvalidArgument unless phi maps the
/// base edges exactly onto target's edges.
Cover transport_cover(const Cover& c, std::shared_ptr<const Graph> target, const std::vector<Vertex>& phi);

/// Connected, at least 3 vertices, every degree 2.
bool is_cycle_graph(const Graph& g);

/// Vertices of a cycle graph in walk order starting 0, then its smaller neighbor.
std::vector<Vertex> cycle_walk(const Graph& g);

enum class CycleLabeling { canonical, twisted, not_full };

const char* to_string(CycleLabeling k);

/// Composes the matchings around the cycle from vertex 0.
CycleLabeling classify_cycle_cover(const Cover& c);

/// The cross-edge subgraph of an uncolorable 2-fold cover of an even cycle,
/// with cover vertex (x, i) numbered 2x + i. Certifies that it is one cycle of
/// length 2n; throws InvalidArgument on bad input and CertificationError if
/// the structure is not a single cycle.
Graph cross_edge_cycle(const Cover& c);

}  // namespace dpc
