#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dpcolor/bigint.hpp"
#include "dpcolor/cover.hpp"

namespace dpc {

/// Counts H-colorings (independent transversals) of covers over a fixed base
/// graph. Vertices are assigned by descending degree, then by number of
/// already-assigned neighbors, then id; each vertex's forbidden fiber indices
/// are the images of its assigned neighbors' choices. Whenever the unassigned
/// vertices fall apart into several components, those are counted
/// separately and multiplied.
///
/// The counter holds only the base graph's plan and is safe to share between
/// threads; each call allocates its own scratch.
class ColoringCounter {
public:
    explicit ColoringCounter(const Graph& g);

    /// Number of H-colorings of c (c.base() must equal the counter's graph).
    BigInt count(const Cover& c) const;

    /// Colorings whose choice at every vertex v lies in allowed[v] (bit i =
    /// fiber index i).
    BigInt count(const Cover& c, std::span<const std::uint64_t> allowed) const;

    /// Same as count() when the total fits in 64 bits; the search loops use it
    /// to skip big-integer work. Throws Error on overflow.
    std::uint64_t count_u64(const Cover& c) const;

    /// Vertices in the order the plan assigns them (depth first).
    const std::vector<Vertex>& order() const noexcept { return order_; }

    struct Node {
        Vertex vertex = -1;  // -1: product of children
        int link_begin = 0;
        int link_end = 0;
        int child_begin = 0;
        int child_end = 0;
    };

private:
    template <class Value>
    bool run(const Cover& c, std::span<const std::uint64_t> allowed, Value& out) const;

    int n_ = 0;
    int edges_ = 0;
    std::vector<Vertex> order_;
    std::vector<Node> nodes_;
    std::vector<int> children_;
    std::vector<Vertex> link_vertex_;  // earlier-assigned neighbor
    std::vector<int> link_edge_;       // base edge index
    std::vector<char> link_low_;       // earlier neighbor is the low endpoint
};

BigInt count_colorings(const Cover& c);

/// N(a, H): colorings extending the partial assignment. Throws
/// InvalidArgument if `a` is not independent.
BigInt count_colorings_containing(const Cover& c, const PartialAssignment& a);

/// N((v, i), H) for every fiber index i.
std::vector<BigInt> fiber_counts(const Cover& c, Vertex v);

}  // namespace dpc
