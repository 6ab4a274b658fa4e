#include "dpcolor/cone.hpp"

#include <memory>

#include "dpcolor/cover_ops.hpp"
#include "dpcolor/errors.hpp"

namespace dpc {

ConeCover::ConeCover(Cover cover, Vertex hub) : cover_(std::move(cover)), hub_(hub) {
    const Graph& g = cover_.base();
    if (hub_ < 0 || hub_ >= g.num_vertices()) throw InvalidArgument("hub out of range");
    if (g.degree(hub_) != g.num_vertices() - 1) throw InvalidArgument("hub is not a universal vertex");
    for (Vertex x : g.neighbors(hub_)) {
        const int e = g.edge_index(hub_, x);
        for (int i = 0; i < cover_.fold(); ++i) {
            if (cover_.image(e, static_cast<Fiber>(i)) != i) {
                throw InvalidArgument("hub edge " + std::to_string(hub_) + "-" + std::to_string(x) +
                                      " does not carry the identity");
            }
        }
    }
}

ConeCover to_cone_convention(const Cover& c, Vertex hub) {
    const Graph& g = c.base();
    if (hub < 0 || hub >= g.num_vertices() || g.degree(hub) != g.num_vertices() - 1) {
        throw InvalidArgument("hub is not a universal vertex");
    }
    std::vector<int> star;
    for (Vertex x : g.neighbors(hub)) star.push_back(g.edge_index(hub, x));
    auto normalized = normalize_by_spanning_tree(c, star);
    return ConeCover(std::move(normalized.cover), hub);
}

Cover cone_reduction(const ConeCover& cc, Fiber j) {
    const Cover& c = cc.cover();
    const int m = c.fold();
    if (j >= m) throw InvalidArgument("fiber index out of range");
    if (m < 2) throw InvalidArgument("cone reduction needs m >= 2");
    const Vertex w = cc.hub();
    auto reduced = std::make_shared<const Graph>(c.base().remove_vertex(w));
    const int rm = m - 1;
    std::vector<Fiber> images(static_cast<std::size_t>(reduced->num_edges()) * rm, kUnmatched);
    auto orig = [w](Vertex x) { return x >= w ? x + 1 : x; };
    for (int e = 0; e < reduced->num_edges(); ++e) {
        const auto [u, v] = reduced->edge(e);
        const int oe = c.base().edge_index(orig(u), orig(v));
        for (int i = 0; i < rm; ++i) {
            const int oi = i >= j ? i + 1 : i;
            const Fiber t = c.image(oe, static_cast<Fiber>(oi));
            if (t == kUnmatched || t == j) continue;
            images[static_cast<std::size_t>(e) * rm + i] = static_cast<Fiber>(t > j ? t - 1 : t);
        }
    }
    return Cover(std::move(reduced), rm, std::move(images));
}

std::vector<Fiber> level_vertices(const ConeCover& cc) {
    std::vector<Fiber> out;
    for (int t = 0; t < cc.cover().fold(); ++t) {
        if (cone_reduction(cc, static_cast<Fiber>(t)).is_full()) out.push_back(static_cast<Fiber>(t));
    }
    return out;
}

}  // namespace dpc
