#include "dpcolor/chordal.hpp"

#include <algorithm>
#include <numeric>

namespace dpc {

PeoData make_peo_data(const Graph& g, std::vector<Vertex> ordering) {
    const int n = g.num_vertices();
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) pos[ordering[i]] = i;
    PeoData out;
    out.alphas.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (Vertex w : g.neighbors(ordering[i])) {
            if (pos[w] > i) ++out.alphas[i];
        }
    }
    out.ordering = std::move(ordering);
    return out;
}

bool is_perfect_elimination_ordering(const Graph& g, std::span<const Vertex> ordering) {
    const int n = g.num_vertices();
    if (static_cast<int>(ordering.size()) != n) return false;
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        const Vertex v = ordering[i];
        if (v < 0 || v >= n || pos[v] >= 0) return false;
        pos[v] = i;
    }
    for (int i = 0; i < n; ++i) {
        std::vector<Vertex> later;
        for (Vertex w : g.neighbors(ordering[i])) {
            if (pos[w] > i) later.push_back(w);
        }
        if (!is_clique(g, later)) return false;
    }
    return true;
}

namespace {

std::vector<Vertex> maximum_cardinality_search(const Graph& g, Vertex start) {
    const int n = g.num_vertices();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> visit;
    visit.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        Vertex pick = -1;
        if (step == 0) {
            pick = start;
        } else {
            for (Vertex v = 0; v < n; ++v) {
                if (!visited[v] && (pick < 0 || weight[v] > weight[pick])) pick = v;
            }
        }
        visited[pick] = 1;
        visit.push_back(pick);
        for (Vertex w : g.neighbors(pick)) ++weight[w];
    }
    std::reverse(visit.begin(), visit.end());
    return visit;
}

}  // namespace

std::optional<PeoData> perfect_elimination_ordering(const Graph& g, std::optional<Vertex> end) {
    const int n = g.num_vertices();
    if (n == 0) return PeoData{};
    const Vertex last = end.value_or(0);
    if (last < 0 || last >= n) throw InvalidArgument("PEO end vertex out of range");

    auto ordering = maximum_cardinality_search(g, last);
    if (is_perfect_elimination_ordering(g, ordering)) return make_peo_data(g, std::move(ordering));

    if (n < 8) {
        std::vector<Vertex> rest;
        for (Vertex v = 0; v < n; ++v)
            if (v != last) rest.push_back(v);
        do {
            std::vector<Vertex> candidate = rest;
            candidate.push_back(last);
            if (is_perfect_elimination_ordering(g, candidate)) return make_peo_data(g, std::move(candidate));
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return std::nullopt;
}

BigInt peo_product(const PeoData& peo, const BigInt& m) {
    BigInt out = 1;
    for (int a : peo.alphas) out *= (m - a);
    return out;
}

}  // namespace dpc
