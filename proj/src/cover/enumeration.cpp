#include "dpcolor/enumeration.hpp"

#include <limits>

#include "dpcolor/cover_ops.hpp"
#include "dpcolor/errors.hpp"

namespace dpc {

FullCoverSpace::FullCoverSpace(std::shared_ptr<const Graph> g, int m) : graph_(std::move(g)), m_(m) {
    if (!graph_) throw InvalidArgument("enumeration needs a base graph");
    if (m_ < 1 || m_ > kMaxFold) throw InvalidArgument("fold size must be in [1, 64]");
    if (!graph_->is_connected()) throw InvalidArgument("enumeration requires a connected graph");
    tree_ = bfs_spanning_tree(*graph_, 0);
    std::vector<char> in_tree(static_cast<std::size_t>(graph_->num_edges()), 0);
    for (int e : tree_) in_tree[e] = 1;
    for (int e = 0; e < graph_->num_edges(); ++e) {
        if (!in_tree[e]) cotree_.push_back(e);
    }
    size_ = ipow(factorial(static_cast<unsigned>(m_)), static_cast<unsigned>(cotree_.size()));
}

std::uint64_t FullCoverSpace::size_u64() const {
    if (size_ > std::numeric_limits<std::uint64_t>::max()) throw InvalidArgument("cover space exceeds 64-bit indexing");
    return static_cast<std::uint64_t>(size_);
}

std::vector<Fiber> permutation_at(int m, std::uint64_t rank) {
    std::vector<Fiber> pool = identity_permutation(m);
    std::vector<Fiber> out;
    out.reserve(static_cast<std::size_t>(m));
    std::vector<std::uint64_t> fact(static_cast<std::size_t>(m) + 1, 1);
    for (int i = 1; i <= m && i <= 20; ++i) fact[i] = fact[i - 1] * static_cast<std::uint64_t>(i);
    for (int left = m; left > 0; --left) {
        // Beyond 20! every rank < 2^64 selects the first remaining element.
        const std::uint64_t block = left - 1 <= 20 ? fact[left - 1] : ~std::uint64_t{0};
        const std::uint64_t digit = rank / block;
        rank %= block;
        out.push_back(pool[digit]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return out;
}

Cover FullCoverSpace::cover_at(std::uint64_t index) const {
    if (index >= size_u64()) throw InvalidArgument("cover index out of range");
    const std::size_t m = static_cast<std::size_t>(m_);
    std::vector<Fiber> images(static_cast<std::size_t>(graph_->num_edges()) * m);
    const auto id = identity_permutation(m_);
    for (int e : tree_) std::copy(id.begin(), id.end(), images.begin() + static_cast<std::ptrdiff_t>(e * m));
    const BigInt radix_big = factorial(static_cast<unsigned>(m_));
    for (std::size_t k = cotree_.size(); k-- > 0;) {
        std::uint64_t digit = 0;
        if (radix_big > std::numeric_limits<std::uint64_t>::max()) {
            digit = index;
            index = 0;
        } else {
            const auto radix = static_cast<std::uint64_t>(radix_big);
            digit = index % radix;
            index /= radix;
        }
        const auto perm = permutation_at(m_, digit);
        std::copy(perm.begin(), perm.end(), images.begin() + static_cast<std::ptrdiff_t>(cotree_[k] * m));
    }
    return Cover(graph_, m_, std::move(images));
}

std::pair<std::uint64_t, std::uint64_t> FullCoverSpace::shard_range(int shard, int shards) const {
    if (shards < 1 || shard < 0 || shard >= shards) throw InvalidArgument("invalid shard");
    const std::uint64_t total = size_u64();
    const std::uint64_t base = total / static_cast<std::uint64_t>(shards);
    const std::uint64_t extra = total % static_cast<std::uint64_t>(shards);
    const auto s = static_cast<std::uint64_t>(shard);
    const std::uint64_t begin = s * base + std::min(s, extra);
    return {begin, begin + base + (s < extra ? 1 : 0)};
}

FullCoverSpace enumerate_full_covers(std::shared_ptr<const Graph> g, int m, const BigInt& max_covers) {
    FullCoverSpace space(std::move(g), m);
    if (space.size() > max_covers) throw BudgetExceeded(space.size().str(), max_covers.str());
    return space;
}

}  // namespace dpc
