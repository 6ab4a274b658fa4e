#include "dpcolor/random.hpp"

#include <algorithm>

#include "dpcolor/errors.hpp"

namespace dpc {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t CounterRng::next() {
    const std::uint64_t key = splitmix64(seed_ ^ splitmix64(stream_ + 0x632BE59BD9B4E019ULL));
    return splitmix64(key + counter_++ * 0xD1B54A32D192ED03ULL);
}

std::uint64_t CounterRng::uniform(std::uint64_t bound) {
    if (bound == 0) throw InvalidArgument("uniform bound must be positive");
    const std::uint64_t limit = max() - max() % bound;
    while (true) {
        const std::uint64_t x = next();
        if (x < limit) return x % bound;
    }
}

std::vector<Fiber> random_permutation(int m, CounterRng& rng) {
    auto p = identity_permutation(m);
    rng.shuffle(p);
    return p;
}

Cover random_full_cover(std::shared_ptr<const Graph> g, int m, CounterRng& rng) {
    std::vector<Fiber> images;
    images.reserve(static_cast<std::size_t>(g->num_edges()) * m);
    for (int e = 0; e < g->num_edges(); ++e) {
        const auto p = random_permutation(m, rng);
        images.insert(images.end(), p.begin(), p.end());
    }
    return Cover(std::move(g), m, std::move(images));
}

Cover random_cover(std::shared_ptr<const Graph> g, int m, CounterRng& rng, std::uint64_t drop_num,
                   std::uint64_t drop_den) {
    const Cover full = random_full_cover(g, m, rng);
    std::vector<Fiber> images = full.encoding();
    for (Fiber& t : images) {
        if (rng.chance(drop_num, drop_den)) t = kUnmatched;
    }
    return Cover(std::move(g), m, std::move(images));
}

Graph random_chordal_graph(int n, CounterRng& rng) {
    if (n < 1) throw InvalidArgument("random_chordal_graph needs n >= 1");
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        // Grow a random clique among 0..v-1 around a random seed vertex.
        std::vector<Vertex> clique{static_cast<Vertex>(rng.uniform(static_cast<std::uint64_t>(v)))};
        std::vector<Vertex> candidates;
        for (int x = 0; x < v; ++x)
            if (x != clique[0]) candidates.push_back(x);
        rng.shuffle(candidates);
        for (Vertex x : candidates) {
            if (!rng.chance(1, 2)) continue;
            if (std::all_of(clique.begin(), clique.end(), [&](Vertex y) { return adj[x][y] != 0; })) clique.push_back(x);
        }
        for (Vertex x : clique) {
            adj[v][x] = adj[x][v] = 1;
            edges.push_back({x, v});
        }
    }
    return Graph(n, edges);
}

Graph random_graph(int n, std::uint64_t num, std::uint64_t den, CounterRng& rng) {
    if (n < 1) throw InvalidArgument("random_graph needs n >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(num, den)) edges.push_back({u, v});
    return Graph(n, edges);
}

}  // namespace dpc
