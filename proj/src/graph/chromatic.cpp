#include "dpcolor/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_map>

namespace dpc {
namespace {

constexpr int kMemoMaxVertices = 10;

// Adjacency-bitmask graph used only inside the recursion.
struct SmallGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;

    bool has_edges() const {
        return std::any_of(adj.begin(), adj.end(), [](std::uint64_t a) { return a != 0; });
    }
    int num_edges() const {
        int twice = 0;
        for (auto a : adj) twice += std::popcount(a);
        return twice / 2;
    }
};

// Drop bit `pos` from `mask`, shifting higher bits down by one.
std::uint64_t squeeze(std::uint64_t mask, int pos) {
    const std::uint64_t low = (pos == 0) ? 0 : (mask & ((std::uint64_t{1} << pos) - 1));
    const std::uint64_t high = (pos >= 63) ? 0 : (mask >> (pos + 1)) << pos;
    return low | high;
}

class DeletionContraction {
public:
    Polynomial run(const SmallGraph& g) {
        if (!g.has_edges()) return Polynomial::monomial(static_cast<unsigned>(g.n));
        if (g.num_edges() == g.n * (g.n - 1) / 2) return complete(g.n);

        // P(G) = m P(G - u)(m - 1) for a universal vertex u.
        const std::uint64_t all = g.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n) - 1;
        for (int u = 0; u < g.n; ++u) {
            if ((g.adj[u] | std::uint64_t{1} << u) == all) {
                return Polynomial::monomial(1) * run(remove(g, u)).shifted(1);
            }
        }
        // Product over components.
        const std::uint64_t first = component_of(g, 0);
        if (first != all) return run(restrict(g, first)) * run(restrict(g, all & ~first));

        std::uint64_t key = 0;
        const bool memo = g.n <= kMemoMaxVertices;
        if (memo) {
            key = memo_key(g);
            if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        }

        int u = 0;
        while (g.adj[u] == 0) ++u;
        const int v = std::countr_zero(g.adj[u]);  // smallest neighbor; u < v since u is the first non-isolated

        SmallGraph deleted = g;
        deleted.adj[u] &= ~(std::uint64_t{1} << v);
        deleted.adj[v] &= ~(std::uint64_t{1} << u);

        Polynomial result = run(deleted) - run(contract(g, u, v));
        if (memo) cache_.emplace(key, result);
        return result;
    }

private:
    static Polynomial complete(int n) {
        Polynomial p = Polynomial::constant(1);
        for (int i = 0; i < n; ++i) p = p * Polynomial({BigInt(-i), BigInt(1)});
        return p;
    }

    static std::uint64_t component_of(const SmallGraph& g, int s) {
        std::uint64_t seen = std::uint64_t{1} << s;
        std::uint64_t frontier = seen;
        while (frontier) {
            const int x = std::countr_zero(frontier);
            frontier &= frontier - 1;
            const std::uint64_t fresh = g.adj[x] & ~seen;
            seen |= fresh;
            frontier |= fresh;
        }
        return seen;
    }

    // Subgraph induced by the vertices in `keep`, relabeled in order.
    static SmallGraph restrict(const SmallGraph& g, std::uint64_t keep) {
        std::vector<int> ids;
        for (int x = 0; x < g.n; ++x)
            if (keep >> x & 1U) ids.push_back(x);
        SmallGraph out;
        out.n = static_cast<int>(ids.size());
        out.adj.assign(ids.size(), 0);
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = 0; j < ids.size(); ++j)
                if (g.adj[ids[i]] >> ids[j] & 1U) out.adj[i] |= std::uint64_t{1} << j;
        return out;
    }

    static SmallGraph remove(const SmallGraph& g, int v) {
        const std::uint64_t all = g.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n) - 1;
        return restrict(g, all & ~(std::uint64_t{1} << v));
    }

    // Merge v into u and delete v.
    static SmallGraph contract(const SmallGraph& g, int u, int v) {
        SmallGraph out;
        out.n = g.n - 1;
        std::vector<std::uint64_t> adj = g.adj;
        const std::uint64_t ubit = std::uint64_t{1} << u;
        const std::uint64_t vbit = std::uint64_t{1} << v;
        adj[u] = (adj[u] | adj[v]) & ~ubit & ~vbit;
        for (int x = 0; x < g.n; ++x) {
            if (x == u || x == v) continue;
            if (adj[x] & vbit) adj[x] = (adj[x] & ~vbit) | ubit;
        }
        out.adj.reserve(static_cast<std::size_t>(out.n));
        for (int x = 0; x < g.n; ++x) {
            if (x != v) out.adj.push_back(squeeze(adj[x], v));
        }
        return out;
    }

    // Exact key of the graph relabeled by (degree desc, id asc). Equal keys
    // mean isomorphic graphs, which is all memoization needs.
    static std::uint64_t memo_key(const SmallGraph& g) {
        std::vector<int> order(static_cast<std::size_t>(g.n));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return std::popcount(g.adj[a]) > std::popcount(g.adj[b]);
        });
        std::vector<int> pos(static_cast<std::size_t>(g.n));
        for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
        std::uint64_t key = static_cast<std::uint64_t>(g.n) << 56;
        int bit = 0;
        for (int i = 0; i < g.n; ++i) {
            for (int j = i + 1; j < g.n; ++j, ++bit) {
                if (g.adj[order[i]] >> order[j] & 1U) key |= std::uint64_t{1} << bit;
            }
        }
        return key;
    }

    std::unordered_map<std::uint64_t, Polynomial> cache_;
};

}  // namespace

Polynomial chromatic_polynomial(const Graph& g) {
    if (g.num_vertices() > 64) throw InvalidArgument("chromatic_polynomial supports at most 64 vertices");
    SmallGraph sg;
    sg.n = g.num_vertices();
    sg.adj.assign(static_cast<std::size_t>(sg.n), 0);
    for (auto [a, b] : g.edges()) {
        sg.adj[a] |= std::uint64_t{1} << b;
        sg.adj[b] |= std::uint64_t{1} << a;
    }
    DeletionContraction dc;
    return dc.run(sg);
}

int chromatic_number(const Graph& g, const Polynomial& p) {
    if (g.num_vertices() == 0) return 0;
    for (int k = 1;; ++k) {
        if (p.evaluate(k) != 0) return k;
    }
}

int chromatic_number(const Graph& g) { return chromatic_number(g, chromatic_polynomial(g)); }

namespace closed_form {

BigInt cycle(int n, const BigInt& m) {
    if (n < 3) throw InvalidArgument("cycle closed form needs n >= 3");
    const BigInt sign = (n % 2 == 0) ? 1 : -1;
    return ipow(m - 1, static_cast<unsigned>(n)) + sign * (m - 1);
}

BigInt complete(int n, const BigInt& m) {
    if (n < 1) throw InvalidArgument("complete closed form needs n >= 1");
    return falling_factorial(m, static_cast<unsigned>(n));
}

BigInt tree(int n, const BigInt& m) {
    if (n < 1) throw InvalidArgument("tree closed form needs n >= 1");
    return m * ipow(m - 1, static_cast<unsigned>(n - 1));
}

BigInt join_complete(const Graph& g, int n, const BigInt& m) {
    if (n < 1) throw InvalidArgument("join_complete needs n >= 1");
    if (m < n + 1) {
        throw InvalidArgument("join_complete formula is valid only for m >= n+1 (m=" + m.str() +
                              ", n=" + std::to_string(n) + ")");
    }
    return complete(n, m) * chromatic_polynomial(g).evaluate(m - n);
}

BigInt gluing(std::span<const Graph> parts, int p, const BigInt& m) {
    if (parts.size() < 2) throw InvalidArgument("gluing formula needs at least two parts");
    if (p < 1) throw InvalidArgument("gluing formula needs p >= 1");
    if (m < p) throw InvalidArgument("gluing formula is valid only for m >= p");
    BigInt num = 1;
    for (const Graph& part : parts) num *= chromatic_polynomial(part).evaluate(m);
    const BigInt den = ipow(falling_factorial(m, static_cast<unsigned>(p)), static_cast<unsigned>(parts.size() - 1));
    return exact_div(num, den, "gluing formula");
}

}  // namespace closed_form

}  // namespace dpc
