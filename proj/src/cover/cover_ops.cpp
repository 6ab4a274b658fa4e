#include "dpcolor/cover_ops.hpp"

#include <deque>

#include "dpcolor/counting.hpp"
#include "dpcolor/errors.hpp"

namespace dpc {

std::vector<int> bfs_spanning_tree(const Graph& g, Vertex root) {
    const int n = g.num_vertices();
    if (n == 0) return {};
    if (root < 0 || root >= n) throw InvalidArgument("BFS root out of range");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> tree;
    std::deque<Vertex> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(v)) {
            if (seen[w]) continue;
            seen[w] = 1;
            tree.push_back(g.edge_index(v, w));
            queue.push_back(w);
        }
    }
    if (static_cast<int>(tree.size()) != n - 1) throw InvalidArgument("graph is not connected");
    return tree;
}

NormalizedCover normalize_by_spanning_tree(const Cover& c, const std::vector<int>& tree) {
    const Graph& g = c.base();
    const int n = g.num_vertices();
    const int m = c.fold();
    if (!c.is_full()) throw InvalidArgument("normalization requires a full cover");
    if (static_cast<int>(tree.size()) != std::max(n - 1, 0)) throw InvalidArgument("tree must have n-1 edges");

    std::vector<std::vector<Vertex>> tree_adj(static_cast<std::size_t>(n));
    std::vector<char> used(static_cast<std::size_t>(g.num_edges()), 0);
    for (int e : tree) {
        if (e < 0 || e >= g.num_edges() || used[e]) throw InvalidArgument("tree edges must be distinct base edges");
        used[e] = 1;
        tree_adj[g.edge(e).u].push_back(g.edge(e).v);
        tree_adj[g.edge(e).v].push_back(g.edge(e).u);
    }

    std::vector<std::vector<Fiber>> relabel(static_cast<std::size_t>(n));
    if (n > 0) {
        relabel[0] = identity_permutation(m);
        std::deque<Vertex> queue{0};
        while (!queue.empty()) {
            const Vertex p = queue.front();
            queue.pop_front();
            for (Vertex v : tree_adj[p]) {
                if (!relabel[v].empty()) continue;
                relabel[v].assign(static_cast<std::size_t>(m), 0);
                // (p, i) ~ (v, phi(i)) must become (p, r_p(i)) ~ (v, r_p(i)).
                for (int i = 0; i < m; ++i) relabel[v][c.map(p, v, static_cast<Fiber>(i))] = relabel[p][i];
                queue.push_back(v);
            }
        }
        for (const auto& r : relabel) {
            if (r.empty()) throw InvalidArgument("tree does not span the base graph");
        }
    }

    std::vector<Fiber> images(static_cast<std::size_t>(g.num_edges()) * m);
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto [u, v] = g.edge(e);
        for (int i = 0; i < m; ++i) {
            images[static_cast<std::size_t>(e) * m + relabel[u][i]] = relabel[v][c.image(e, static_cast<Fiber>(i))];
        }
    }
    return {Cover(c.base_ptr(), m, std::move(images)), std::move(relabel)};
}

Cover transport_cover(const Cover& c, std::shared_ptr<const Graph> target, const std::vector<Vertex>& phi) {
    const Graph& g = c.base();
    const int n = g.num_vertices();
    if (!target || target->num_vertices() != n || target->num_edges() != g.num_edges() ||
        static_cast<int>(phi.size()) != n) {
        throw InvalidArgument("transport target does not match the cover's base");
    }
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (Vertex y : phi) {
        if (y < 0 || y >= n || hit[y]) throw InvalidArgument("vertex map is not a bijection");
        hit[y] = 1;
    }
    const int m = c.fold();
    std::vector<Fiber> images(static_cast<std::size_t>(g.num_edges()) * m, kUnmatched);
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto [u, v] = g.edge(e);
        const int te = target->edge_index(phi[u], phi[v]);
        if (te < 0) throw InvalidArgument("vertex map does not preserve edges");
        Fiber* slot = images.data() + static_cast<std::size_t>(te) * m;
        for (int i = 0; i < m; ++i) {
            const Fiber t = c.image(e, static_cast<Fiber>(i));
            if (t == kUnmatched) continue;
            if (phi[u] < phi[v]) {
                slot[i] = t;
            } else {
                slot[t] = static_cast<Fiber>(i);
            }
        }
    }
    return Cover(std::move(target), m, std::move(images));
}

bool is_cycle_graph(const Graph& g) {
    if (g.num_vertices() < 3 || !g.is_connected()) return false;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) != 2) return false;
    }
    return true;
}

std::vector<Vertex> cycle_walk(const Graph& g) {
    if (!is_cycle_graph(g)) throw InvalidArgument("base graph is not a cycle");
    std::vector<Vertex> walk{0};
    Vertex prev = 0;
    Vertex cur = g.neighbors(0).front();
    while (cur != 0) {
        walk.push_back(cur);
        const auto& nb = g.neighbors(cur);
        const Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    return walk;
}

const char* to_string(CycleLabeling k) {
    switch (k) {
        case CycleLabeling::canonical: return "canonical";
        case CycleLabeling::twisted: return "twisted";
        case CycleLabeling::not_full: return "not_full";
    }
    return "?";
}

CycleLabeling classify_cycle_cover(const Cover& c) {
    const auto walk = cycle_walk(c.base());
    if (!c.is_full()) return CycleLabeling::not_full;
    const int n = static_cast<int>(walk.size());
    for (int i = 0; i < c.fold(); ++i) {
        Fiber x = static_cast<Fiber>(i);
        for (int k = 0; k < n; ++k) x = c.map(walk[k], walk[(k + 1) % n], x);
        if (x != i) return CycleLabeling::twisted;
    }
    return CycleLabeling::canonical;
}

Graph cross_edge_cycle(const Cover& c) {
    const Graph& g = c.base();
    if (c.fold() != 2) throw InvalidArgument("cross_edge_cycle needs a 2-fold cover");
    if (!is_cycle_graph(g) || g.num_vertices() % 2 != 0) throw InvalidArgument("base must be an even cycle");
    if (count_colorings(c) != 0) throw InvalidArgument("cover admits a coloring");
    std::vector<Edge> edges;
    for (int e = 0; e < g.num_edges(); ++e) {
        for (int i = 0; i < 2; ++i) {
            const Fiber t = c.image(e, static_cast<Fiber>(i));
            if (t != kUnmatched) edges.push_back({2 * g.edge(e).u + i, 2 * g.edge(e).v + t});
        }
    }
    Graph out(2 * g.num_vertices(), edges);
    if (!is_cycle_graph(out)) throw CertificationError("cross edges do not form a single cycle");
    return out;
}

}  // namespace dpc
