#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dpcolor/bigint.hpp"
#include "dpcolor/graph.hpp"

namespace dpc {

/// A perfect elimination ordering and, per position, the number of
/// neighbors that occur later in the ordering.
struct PeoData {
    std::vector<Vertex> ordering;
    std::vector<int> alphas;
};

bool is_perfect_elimination_ordering(const Graph& g, std::span<const Vertex> ordering);

/// Alpha counts for an arbitrary ordering.
PeoData make_peo_data(const Graph& g, std::vector<Vertex> ordering);

/// A PEO ending at `end` (vertex 0 when unspecified), or nullopt iff g is not
/// chordal. Maximum cardinality search started at `end`, reversed; below 8
/// vertices a failed certificate falls back to trying every ordering.
std::optional<PeoData> perfect_elimination_ordering(const Graph& g, std::optional<Vertex> end = std::nullopt);

inline bool is_chordal(const Graph& g) { return perfect_elimination_ordering(g).has_value(); }

/// prod_i (m - alpha_i).
BigInt peo_product(const PeoData& peo, const BigInt& m);

}  // namespace dpc
