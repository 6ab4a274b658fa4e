#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "dpcolor/bigint.hpp"
#include "dpcolor/cover.hpp"

namespace dpc {

/// The normalized full covers of a connected graph: BFS-tree edges (from
/// vertex 0) carry the identity and each co-tree edge carries one of the m!
/// permutations. Index order is lexicographic on the tuple of co-tree
/// permutations, with the lowest co-tree edge index most significant and
/// permutations ranked lexicographically, which equals lexicographic order of
/// the cover encodings.
class FullCoverSpace {
public:
    FullCoverSpace(std::shared_ptr<const Graph> g, int m);

    const Graph& graph() const noexcept { return *graph_; }
    const std::shared_ptr<const Graph>& graph_ptr() const noexcept { return graph_; }
    int fold() const noexcept { return m_; }
    const std::vector<int>& tree_edges() const noexcept { return tree_; }
    const std::vector<int>& cotree_edges() const noexcept { return cotree_; }

    /// (m!)^(cyclomatic number).
    const BigInt& size() const noexcept { return size_; }
    /// size() as a 64-bit integer; throws if it does not fit.
    std::uint64_t size_u64() const;

    Cover cover_at(std::uint64_t index) const;

    /// [begin, end) of shard `shard` out of `shards` contiguous pieces.
    std::pair<std::uint64_t, std::uint64_t> shard_range(int shard, int shards) const;

    /// Calls visit(index, cover) for every index in [begin, end). The cover is
    /// mutated in place between calls; copy it to keep it.
    template <class Visit>
    void for_each(std::uint64_t begin, std::uint64_t end, Visit&& visit) const {
        if (begin >= end) return;
        Cover c = cover_at(begin);
        const std::size_t m = static_cast<std::size_t>(m_);
        for (std::uint64_t index = begin;;) {
            visit(index, static_cast<const Cover&>(c));
            if (++index == end) break;
            // Advance the least significant co-tree permutation, carrying left.
            for (std::size_t k = cotree_.size(); k-- > 0;) {
                Fiber* slot = c.images_.data() + static_cast<std::size_t>(cotree_[k]) * m;
                if (std::next_permutation(slot, slot + m)) break;
            }
        }
    }

private:
    std::shared_ptr<const Graph> graph_;
    int m_;
    std::vector<int> tree_;
    std::vector<int> cotree_;
    BigInt size_;
};

/// FullCoverSpace of g, refused with BudgetExceeded (carrying the exact cover
/// count) when the space holds more than `max_covers` covers.
FullCoverSpace enumerate_full_covers(std::shared_ptr<const Graph> g, int m, const BigInt& max_covers);

/// i-th permutation of [m] in lexicographic order.
std::vector<Fiber> permutation_at(int m, std::uint64_t rank);

}  // namespace dpc
