#include "dpcolor/dp.hpp"

#include <algorithm>
#include <thread>

#include "dpcolor/chromatic.hpp"
#include "dpcolor/counting.hpp"
#include "dpcolor/enumeration.hpp"
#include "dpcolor/errors.hpp"

namespace dpc {
namespace {

struct ShardBest {
    bool any = false;
    std::uint64_t value = 0;
    std::vector<std::uint64_t> indices;  // ascending, at most cap
};

void scan_shard(const FullCoverSpace& space, const ColoringCounter& counter, std::uint64_t begin, std::uint64_t end,
                std::size_t cap, ShardBest& out) {
    space.for_each(begin, end, [&](std::uint64_t index, const Cover& c) {
        const std::uint64_t v = counter.count_u64(c);
        if (!out.any || v < out.value) {
            out.any = true;
            out.value = v;
            out.indices.clear();
        }
        if (v == out.value && out.indices.size() < cap) out.indices.push_back(index);
    });
}

}  // namespace

BigInt dp_search_units(const Graph& g, int m) {
    return ipow(factorial(static_cast<unsigned>(m)), static_cast<unsigned>(g.cyclomatic_number())) * g.num_vertices();
}

DpResult dp_exact(std::shared_ptr<const Graph> g, int m, const DpOptions& options) {
    if (!g || g->num_vertices() == 0) throw InvalidArgument("dp_exact needs a nonempty graph");
    if (!g->is_connected()) throw InvalidArgument("dp_exact needs a connected graph; use dp_any");
    if (m < 1) throw InvalidArgument("m must be at least 1");
    const BigInt units = dp_search_units(*g, m);
    if (units > options.budget) throw BudgetExceeded(units.str(), options.budget.str());
    // Every count is at most m^n; the 64-bit counter path needs that to fit.
    if (ipow(BigInt(m), static_cast<unsigned>(g->num_vertices())) > BigInt(~std::uint64_t{0})) {
        throw InvalidArgument("coloring counts may exceed 64 bits");
    }

    const FullCoverSpace space(g, m);
    const ColoringCounter counter(*g);
    const std::uint64_t total = space.size_u64();
    const int shards = static_cast<int>(std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(options.shards, 1)), 1, total));
    std::vector<ShardBest> best(static_cast<std::size_t>(shards));
    if (shards == 1) {
        scan_shard(space, counter, 0, total, options.witness_cap, best[0]);
    } else {
        std::vector<std::thread> workers;
        for (int s = 0; s < shards; ++s) {
            const auto [b, e] = space.shard_range(s, shards);
            workers.emplace_back(scan_shard, std::cref(space), std::cref(counter), b, e, options.witness_cap,
                                 std::ref(best[s]));
        }
        for (auto& w : workers) w.join();
    }

    // (min value, least indices): shards are contiguous and ordered, so
    // concatenating in shard order keeps indices ascending.
    std::uint64_t value = ~std::uint64_t{0};
    for (const auto& b : best)
        if (b.any) value = std::min(value, b.value);
    DpResult result{g, m, BigInt(value), {}, BigInt(total)};
    for (const auto& b : best) {
        if (!b.any || b.value != value) continue;
        for (std::uint64_t idx : b.indices) {
            if (result.witnesses.size() == options.witness_cap) break;
            result.witnesses.push_back(space.cover_at(idx));
        }
    }
    return result;
}

BigInt dp_disconnected(std::span<const DpResult> components) {
    if (components.empty()) throw InvalidArgument("no components given");
    BigInt product = 1;
    for (const auto& c : components) {
        if (c.m != components.front().m) throw InvalidArgument("components were computed at different m");
        product *= c.value;
    }
    return product;
}

DpResult dp_any(std::shared_ptr<const Graph> g, int m, const DpOptions& options) {
    if (!g || g->num_vertices() == 0) throw InvalidArgument("dp needs a nonempty graph");
    if (g->is_connected()) return dp_exact(g, m, options);

    const auto comps = g->components();
    BigInt units = 0;
    for (const auto& vs : comps) units += dp_search_units(g->induced(vs), m);
    if (units > options.budget) throw BudgetExceeded(units.str(), options.budget.str());

    std::vector<DpResult> parts;
    BigInt searched = 0;
    for (const auto& vs : comps) {
        parts.push_back(dp_exact(std::make_shared<const Graph>(g->induced(vs)), m, options));
        searched += parts.back().search_size;
    }
    DpResult result{g, m, dp_disconnected(parts), {}, searched};
    if (std::all_of(parts.begin(), parts.end(), [](const DpResult& r) { return !r.witnesses.empty(); })) {
        std::vector<Fiber> images(static_cast<std::size_t>(g->num_edges()) * m, kUnmatched);
        for (std::size_t c = 0; c < comps.size(); ++c) {
            const Cover& w = parts[c].witnesses.front();
            // induced() keeps the relative order of vertices, so orientation is preserved.
            for (int e = 0; e < w.base().num_edges(); ++e) {
                const auto [a, b] = w.base().edge(e);
                const int ge = g->edge_index(comps[c][a], comps[c][b]);
                const auto mt = w.matching(e);
                std::copy(mt.begin(), mt.end(), images.begin() + static_cast<std::ptrdiff_t>(ge) * m);
            }
        }
        result.witnesses.emplace_back(g, m, std::move(images));
    }
    return result;
}

namespace dp_closed_form {

BigInt cycle(int n, const BigInt& m) {
    if (n < 2) throw InvalidArgument("cycle length must be at least 2");
    if (m < 1) throw InvalidArgument("m must be at least 1");
    if (n == 2) return m * (m - 1);
    return unicyclic(n, n, m);
}

BigInt unicyclic(int n, int cycle_len, const BigInt& m) {
    if (cycle_len < 3 || n < cycle_len) throw InvalidArgument("unicyclic needs 3 <= cycle length <= n");
    if (m < 1) throw InvalidArgument("m must be at least 1");
    if (cycle_len % 2 == 1) {
        const int k = (cycle_len - 1) / 2;
        return ipow(m - 1, static_cast<unsigned>(n)) - ipow(m - 1, static_cast<unsigned>(n - 2 * k));
    }
    if (m < 2) throw InvalidArgument("even unicyclic formula needs m >= 2");
    const int k = (cycle_len - 2) / 2;
    return ipow(m - 1, static_cast<unsigned>(n)) - ipow(m - 1, static_cast<unsigned>(n - 2 * k - 2));
}

BigInt wheel(int cycle_len, const BigInt& m) {
    if (cycle_len < 3) throw InvalidArgument("wheel needs a cycle of length at least 3");
    if (m < 1) throw InvalidArgument("m must be at least 1");
    const BigInt p = m * closed_form::cycle(cycle_len, m - 1);
    if (cycle_len % 2 == 1) return p;
    if (m <= 2) return 0;
    if (m == 3) return 3;
    return p;
}

BigInt chordal(const PeoData& peo, const BigInt& m) {
    if (m < 1) throw InvalidArgument("m must be at least 1");
    return peo_product(peo, m);
}

BigInt gluing_cycle_chordal(std::span<const BigInt> values, int n, const BigInt& m) {
    if (n < 1 || static_cast<int>(values.size()) != n) throw InvalidArgument("need one value per part");
    if (m < 1) throw InvalidArgument("m must be at least 1");
    BigInt num = 1;
    for (const auto& v : values) num *= v;
    return exact_div(num, ipow(m, static_cast<unsigned>(n - 1)), "vertex-gluing formula");
}

}  // namespace dp_closed_form

}  // namespace dpc
