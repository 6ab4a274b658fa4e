#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "dpcolor/bigint.hpp"
#include "dpcolor/chordal.hpp"
#include "dpcolor/cover.hpp"
#include "dpcolor/graph.hpp"

namespace dpc {

/// Default search budget, in covers x base vertices.
inline const BigInt kDefaultBudget = BigInt(1000000000);

struct DpOptions {
    BigInt budget = kDefaultBudget;
    int shards = 1;
    std::size_t witness_cap = 4;
};

struct DpResult {
    std::shared_ptr<const Graph> graph;
    int m = 0;
    BigInt value;
    /// Minimizing covers, lexicographically least encodings first.
    std::vector<Cover> witnesses;
    BigInt search_size;
};

/// Work units needed for the exhaustive search: (m!)^(cyclomatic) * n.
BigInt dp_search_units(const Graph& g, int m);

/// Exact P_DP(g, m) by minimizing over the normalized full covers. Requires
/// a connected graph; throws BudgetExceeded (with the required units) when
/// the search exceeds options.budget. Shards run on separate threads and the
/// result does not depend on the shard count.
DpResult dp_exact(std::shared_ptr<const Graph> g, int m, const DpOptions& options = {});

/// Product of component values; throws InvalidArgument on mixed m.
BigInt dp_disconnected(std::span<const DpResult> components);

/// dp_exact per connected component, multiplied. The witness (when every
/// component has one) is the union of the components' first witnesses.
DpResult dp_any(std::shared_ptr<const Graph> g, int m, const DpOptions& options = {});

namespace dp_closed_form {

/// C_n: P(C_n, m) for odd n, (m-1)^n - 1 for even n (m >= 2), m(m-1) for n = 2.
BigInt cycle(int n, const BigInt& m);
/// Unicyclic graph on n vertices whose cycle has `cycle_len` vertices.
BigInt unicyclic(int n, int cycle_len, const BigInt& m);
/// K_1 v C_{cycle_len}.
BigInt wheel(int cycle_len, const BigInt& m);
/// prod (m - alpha_i) over a perfect elimination ordering.
BigInt chordal(const PeoData& peo, const BigInt& m);
/// prod values / m^(n-1) for a vertex-gluing of n cycles and chordal graphs.
BigInt gluing_cycle_chordal(std::span<const BigInt> values, int n, const BigInt& m);

}  // namespace dp_closed_form

}  // namespace dpc
