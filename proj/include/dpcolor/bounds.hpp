#pragma once

#include <span>
#include <vector>

#include "dpcolor/bigint.hpp"

namespace dpc {

/// Per-hub-index lower bounds for covers of K_1 v C_{2k+2} with s level
/// vertices.
struct SethBoundBundle {
    int k = 0;
    int m = 0;
    int s = 0;
    BigInt p;   // (m-1)(m-2)^(2k+1)
    BigInt p1;  // ((m-2)^(2k+1) - (m-2)) / (m-1)
    BigInt p2;  // ((m-2)^(2k+1) + 1) / (m-1)
    BigInt level_bound;     // p - (s-1) p1 - (m-s) p2
    BigInt nonlevel_bound;  // p - s p1 - (m-2-s) p2
    BigInt min_total;       // s level_bound + (m-s) nonlevel_bound
};

/// Level-vertex counts that can occur: {0} and 1..m except m-1.
std::vector<int> admissible_level_counts(int m);

/// Throws InvalidArgument for k < 1, m < 2, or an inadmissible s.
SethBoundBundle seth_bound(int k, int m, int s);

/// Minimum of min_total over the admissible s.
BigInt seth_min_total(int k, int m);

/// prod values / m^(n-1), n = values.size() >= 2, exact.
Rational amalgam_upper_bound(std::span<const BigInt> values, const BigInt& m);

/// (m)(m-1)...(m-p+1) * prod k_i; needs at least two parts and p <= m.
BigInt gluing_lower_bound(std::span<const BigInt> per_part_k, int p, const BigInt& m);

/// P_DP(C_n, m) / m from the parity-split closed forms, exact.
BigInt cycle_vertex_bound(int n, const BigInt& m);

struct TechnicalCheckRecord {
    int m = 0;
    int s = 0;
    Rational value;
    bool greater_than_one = false;
};

/// Exact (1 - m/(m-2)^4)^s (1 + 1/((m-1)(m-2)) - m/(m-2)^4)^(m-s); needs
/// m >= 5 and 0 <= s <= m-2. The verdict is data, not a check.
TechnicalCheckRecord technical_inequality_check(int m, int s);

}  // namespace dpc
