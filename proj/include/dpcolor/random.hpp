#pragma once

#include <cstdint>
#include <vector>

#include "dpcolor/cover.hpp"

namespace dpc {

/// Counter-based generator: draw k of stream s is splitmix64 applied to a mix
/// of (seed, s, k), so streams can be consumed independently by shards.
class CounterRng {
public:
    using result_type = std::uint64_t;

    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) : seed_(seed), stream_(stream) {}

    std::uint64_t next();
    std::uint64_t operator()() { return next(); }
    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

    /// Uniform in [0, bound), rejection sampled.
    std::uint64_t uniform(std::uint64_t bound);
    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return uniform(den) < num; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform(i)]);
    }

    std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

std::vector<Fiber> random_permutation(int m, CounterRng& rng);

/// Independent uniform permutation on every edge.
Cover random_full_cover(std::shared_ptr<const Graph> g, int m, CounterRng& rng);

/// A random full cover with each cross-edge then removed with probability
/// drop_num / drop_den.
Cover random_cover(std::shared_ptr<const Graph> g, int m, CounterRng& rng, std::uint64_t drop_num,
                   std::uint64_t drop_den);

/// Connected chordal graph on n vertices: each new vertex joins a random
/// nonempty clique among the earlier ones.
Graph random_chordal_graph(int n, CounterRng& rng);

/// G(n, num/den), not necessarily connected.
Graph random_graph(int n, std::uint64_t num, std::uint64_t den, CounterRng& rng);

}  // namespace dpc
