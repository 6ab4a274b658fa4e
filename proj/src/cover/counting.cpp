#include "dpcolor/counting.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace dpc {
namespace {

std::uint64_t full_mask(int m) { return m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1; }

using Node = ColoringCounter::Node;

struct Plan {
    const Node* nodes;
    const int* children;
    const Vertex* link_vertex;
    int m;
    const std::uint64_t* table;  // per link, m masks indexed by the earlier choice
    const std::uint64_t* allowed;
    int* choice;
};

// 64-bit evaluation; sets `overflow` and keeps going with wrapped values.
struct U64Eval {
    const Plan& p;
    bool overflow = false;

    std::uint64_t free_at(const Node& nd) const {
        std::uint64_t forbidden = 0;
        for (int k = nd.link_begin; k < nd.link_end; ++k) {
            forbidden |= p.table[static_cast<std::size_t>(k) * p.m + p.choice[p.link_vertex[k]]];
        }
        return p.allowed[nd.vertex] & ~forbidden;
    }

    std::uint64_t eval(int i) {
        const Node& nd = p.nodes[i];
        if (nd.vertex < 0) {
            std::uint64_t prod = 1;
            for (int c = nd.child_begin; c < nd.child_end; ++c) {
                const std::uint64_t v = eval(p.children[c]);
                if (v == 0) return 0;
                if (__builtin_mul_overflow(prod, v, &prod)) overflow = true;
            }
            return prod;
        }
        std::uint64_t free = free_at(nd);
        if (nd.child_begin == nd.child_end) return static_cast<std::uint64_t>(std::popcount(free));
        const int next = p.children[nd.child_begin];
        std::uint64_t sum = 0;
        while (free != 0) {
            p.choice[nd.vertex] = std::countr_zero(free);
            free &= free - 1;
            if (__builtin_add_overflow(sum, eval(next), &sum)) overflow = true;
        }
        return sum;
    }
};

struct BigEval {
    const Plan& p;

    BigInt eval(int i) {
        const Node& nd = p.nodes[i];
        if (nd.vertex < 0) {
            BigInt prod = 1;
            for (int c = nd.child_begin; c < nd.child_end; ++c) {
                prod *= eval(p.children[c]);
                if (prod == 0) return prod;
            }
            return prod;
        }
        std::uint64_t forbidden = 0;
        for (int k = nd.link_begin; k < nd.link_end; ++k) {
            forbidden |= p.table[static_cast<std::size_t>(k) * p.m + p.choice[p.link_vertex[k]]];
        }
        std::uint64_t free = p.allowed[nd.vertex] & ~forbidden;
        if (nd.child_begin == nd.child_end) return BigInt(std::popcount(free));
        const int next = p.children[nd.child_begin];
        BigInt sum = 0;
        while (free != 0) {
            p.choice[nd.vertex] = std::countr_zero(free);
            free &= free - 1;
            sum += eval(next);
        }
        return sum;
    }
};

}  // namespace

ColoringCounter::ColoringCounter(const Graph& g) : n_(g.num_vertices()), edges_(g.num_edges()) {
    std::vector<char> assigned(static_cast<std::size_t>(n_), 0);
    std::vector<int> placed_nbrs(static_cast<std::size_t>(n_), 0);

    // Components of `vs` among unassigned vertices.
    auto split = [&](const std::vector<Vertex>& vs) {
        std::vector<char> in(static_cast<std::size_t>(n_), 0);
        for (Vertex v : vs) in[v] = 1;
        std::vector<std::vector<Vertex>> parts;
        for (Vertex s : vs) {
            if (!in[s]) continue;
            std::vector<Vertex> comp{s};
            in[s] = 0;
            for (std::size_t h = 0; h < comp.size(); ++h) {
                for (Vertex w : g.neighbors(comp[h])) {
                    if (in[w]) {
                        in[w] = 0;
                        comp.push_back(w);
                    }
                }
            }
            parts.push_back(std::move(comp));
        }
        return parts;
    };

    // Returns the node index for the unassigned vertex set `vs` (nonempty).
    auto build = [&](auto&& self, std::vector<Vertex> vs) -> int {
        const auto parts = split(vs);
        if (parts.size() > 1) {
            const int id = static_cast<int>(nodes_.size());
            nodes_.push_back({});
            std::vector<int> kids;
            for (const auto& part : parts) kids.push_back(self(self, part));
            nodes_[id].child_begin = static_cast<int>(children_.size());
            children_.insert(children_.end(), kids.begin(), kids.end());
            nodes_[id].child_end = static_cast<int>(children_.size());
            return id;
        }
        Vertex pick = -1;
        for (Vertex v : vs) {
            if (pick < 0 || g.degree(v) > g.degree(pick) ||
                (g.degree(v) == g.degree(pick) && placed_nbrs[v] > placed_nbrs[pick]) ||
                (g.degree(v) == g.degree(pick) && placed_nbrs[v] == placed_nbrs[pick] && v < pick)) {
                pick = v;
            }
        }
        const int id = static_cast<int>(nodes_.size());
        nodes_.push_back({});
        nodes_[id].vertex = pick;
        nodes_[id].link_begin = static_cast<int>(link_vertex_.size());
        for (Vertex w : g.neighbors(pick)) {
            if (!assigned[w]) continue;
            link_vertex_.push_back(w);
            link_edge_.push_back(g.edge_index(pick, w));
            link_low_.push_back(w < pick ? 1 : 0);
        }
        nodes_[id].link_end = static_cast<int>(link_vertex_.size());
        assigned[pick] = 1;
        order_.push_back(pick);
        for (Vertex w : g.neighbors(pick)) ++placed_nbrs[w];
        vs.erase(std::find(vs.begin(), vs.end(), pick));
        if (!vs.empty()) {
            const int child = self(self, std::move(vs));
            nodes_[id].child_begin = static_cast<int>(children_.size());
            children_.push_back(child);
            nodes_[id].child_end = static_cast<int>(children_.size());
        }
        return id;
    };
    if (n_ > 0) {
        std::vector<Vertex> all(static_cast<std::size_t>(n_));
        std::iota(all.begin(), all.end(), 0);
        build(build, std::move(all));
    }
}

template <class Value>
bool ColoringCounter::run(const Cover& c, std::span<const std::uint64_t> allowed, Value& out) const {
    if (c.base().num_vertices() != n_ || c.base().num_edges() != edges_) {
        throw InvalidArgument("cover base does not match the counter's graph");
    }
    if (static_cast<int>(allowed.size()) != n_) throw InvalidArgument("allowed mask count must equal vertex count");
    if (n_ == 0) {
        out = 1;
        return true;
    }
    const int m = c.fold();
    std::vector<std::uint64_t> table(link_vertex_.size() * static_cast<std::size_t>(m), 0);
    for (std::size_t k = 0; k < link_vertex_.size(); ++k) {
        const auto mt = c.matching(link_edge_[k]);
        std::uint64_t* row = table.data() + k * m;
        for (int a = 0; a < m; ++a) {
            const Fiber t = mt[a];
            if (t == kUnmatched) continue;
            if (link_low_[k]) {
                row[a] |= std::uint64_t{1} << t;  // earlier vertex is u, choosing a forbids image t at v
            } else {
                row[t] |= std::uint64_t{1} << a;  // earlier vertex is v, choosing t forbids preimage a at u
            }
        }
    }
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) masks[v] = allowed[v] & full_mask(m);
    std::vector<int> choice(static_cast<std::size_t>(n_), 0);
    const Plan plan{nodes_.data(), children_.data(), link_vertex_.data(), m, table.data(), masks.data(), choice.data()};
    if constexpr (std::is_same_v<Value, std::uint64_t>) {
        U64Eval e{plan};
        out = e.eval(0);
        return !e.overflow;
    } else {
        BigEval e{plan};
        out = e.eval(0);
        return true;
    }
}

BigInt ColoringCounter::count(const Cover& c, std::span<const std::uint64_t> allowed) const {
    std::uint64_t small = 0;
    if (run(c, allowed, small)) return BigInt(small);
    BigInt big;
    run(c, allowed, big);
    return big;
}

BigInt ColoringCounter::count(const Cover& c) const {
    const std::vector<std::uint64_t> allowed(static_cast<std::size_t>(n_), full_mask(c.fold()));
    return count(c, allowed);
}

std::uint64_t ColoringCounter::count_u64(const Cover& c) const {
    const std::vector<std::uint64_t> allowed(static_cast<std::size_t>(n_), full_mask(c.fold()));
    std::uint64_t out = 0;
    if (!run(c, allowed, out)) throw Error("coloring count exceeds 64 bits");
    return out;
}

BigInt count_colorings(const Cover& c) { return ColoringCounter(c.base()).count(c); }

BigInt count_colorings_containing(const Cover& c, const PartialAssignment& a) {
    if (!is_independent(c, a)) throw InvalidArgument("partial assignment is not independent in the cover");
    std::vector<std::uint64_t> allowed(static_cast<std::size_t>(c.base().num_vertices()), full_mask(c.fold()));
    for (auto [v, i] : a) allowed[v] = std::uint64_t{1} << i;
    return ColoringCounter(c.base()).count(c, allowed);
}

std::vector<BigInt> fiber_counts(const Cover& c, Vertex v) {
    const int n = c.base().num_vertices();
    if (v < 0 || v >= n) throw InvalidArgument("vertex out of range");
    const ColoringCounter counter(c.base());
    std::vector<std::uint64_t> allowed(static_cast<std::size_t>(n), full_mask(c.fold()));
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(c.fold()));
    for (int i = 0; i < c.fold(); ++i) {
        allowed[v] = std::uint64_t{1} << i;
        out.push_back(counter.count(c, allowed));
    }
    return out;
}

}  // namespace dpc
