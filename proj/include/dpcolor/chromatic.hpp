#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dpcolor/bigint.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/polynomial.hpp"

namespace dpc {

/// P(G, m) by deletion-contraction on the lexicographically smallest edge.
/// Subgraphs on at most 10 vertices are memoized under a degree-sorted
/// relabeling. Graphs with more than 64 vertices are rejected.
Polynomial chromatic_polynomial(const Graph& g);

/// Smallest positive k with P(G, k) != 0 (0 for the empty graph).
int chromatic_number(const Graph& g);
int chromatic_number(const Graph& g, const Polynomial& p);

/// Closed-form chromatic polynomial values for named families.
namespace closed_form {

/// (m-1)^n + (-1)^n (m-1), n >= 3.
BigInt cycle(int n, const BigInt& m);
/// m (m-1) ... (m-n+1).
BigInt complete(int n, const BigInt& m);
/// m (m-1)^{n-1} for any tree on n >= 1 vertices.
BigInt tree(int n, const BigInt& m);
/// P(G v K_n, m) = P(K_n, m) P(G, m-n); requires m >= n+1.
BigInt join_complete(const Graph& g, int n, const BigInt& m);
/// prod P(G_i, m) / (m (m-1) ... (m-p+1))^{parts-1}; requires m >= p and exact division.
BigInt gluing(std::span<const Graph> parts, int p, const BigInt& m);

}  // namespace closed_form

}  // namespace dpc
