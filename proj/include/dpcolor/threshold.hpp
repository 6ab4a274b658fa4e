#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dpcolor/bigint.hpp"
#include "dpcolor/cover.hpp"
#include "dpcolor/dp.hpp"
#include "dpcolor/graph.hpp"

namespace dpc {

/// Structural shape used to look up a claimed threshold.
struct FamilyMatch {
    enum class Kind { chordal, odd_cycle, join_cycle, cone_of_cycles, other };
    Kind kind = Kind::other;
    std::string name;
    /// Universal vertices, ascending (clique of a join, hub of a cone).
    std::vector<Vertex> universal;
    /// Remaining components as cycle walks, in order of least vertex.
    std::vector<std::vector<Vertex>> cycles;
    std::optional<int> claimed_tau;
};

const char* to_string(FamilyMatch::Kind kind);

/// Chordal and odd cycles first, then K_p v C_n (p >= 1) and cones over two
/// or more disjoint cycles.
FamilyMatch recognize_family(const Graph& g);

enum class PointStatus { equal, strictly_less, unverified };
enum class Method { exhaustive, construction, sampled };

const char* to_string(PointStatus s);
const char* to_string(Method m);

struct ThresholdPoint {
    int m = 0;
    PointStatus status = PointStatus::unverified;
    Method method = Method::exhaustive;
    /// Exact P_DP for exhaustive points, otherwise the least count seen.
    BigInt value;
    BigInt chromatic;
    /// Set for every strictly_less point.
    std::optional<Cover> witness;
    BigInt covers_examined;
    std::string note;
};

struct ThresholdOptions {
    BigInt budget = kDefaultBudget;
    int shards = 1;
    std::uint64_t seed = 0;
    std::uint64_t samples = 1000;
};

struct ThresholdReport {
    std::shared_ptr<const Graph> graph;
    FamilyMatch family;
    int chi = 0;
    int m_max = 0;
    std::vector<ThresholdPoint> points;
    /// No "equal" at some m together with "strictly_less" at a larger m.
    bool monotone_consistent = true;
    /// Unset without a claim; false if some point contradicts the claim.
    std::optional<bool> agrees_with_claim;
};

/// Per-m status for m in [chi(g), m_max]. Exhaustive within budget, else a
/// known construction transported onto g, else seeded random covers.
ThresholdReport threshold_report(std::shared_ptr<const Graph> g, int m_max, const ThresholdOptions& options = {});

enum class Implication { holds, violated, not_applicable, unverified };

const char* to_string(Implication i);

struct MonotonicityInstance {
    int p = 0;  // premise graph is K_p v g
    int m = 0;
    std::optional<bool> premise;  // unset when the premise search was refused
    BigInt premise_value;
    BigInt premise_chromatic;
    Implication conclusion = Implication::not_applicable;
    Method method = Method::exhaustive;
    BigInt conclusion_value;  // exact, or the least sampled count
    BigInt conclusion_chromatic;
};

struct MonotonicityReport {
    std::shared_ptr<const Graph> graph;
    std::vector<MonotonicityInstance> instances;
    bool any_violation = false;
};

/// For p in [0, p_max) and m in [1, m_max]: whenever P_DP(K_p v g, m) equals
/// P(K_p v g, m), check P_DP(K_{p+1} v g, m+1) against P(K_{p+1} v g, m+1).
/// The conclusion is exhaustive within budget, otherwise sampled.
MonotonicityReport monotonicity_check(std::shared_ptr<const Graph> g, int p_max, int m_max,
                                      const ThresholdOptions& options = {});

/// K_p v g, with K_0 v g = g.
Graph join_clique(int p, const Graph& g);

}  // namespace dpc
