#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dpcolor/bigint.hpp"
#include "dpcolor/cone.hpp"
#include "dpcolor/cover.hpp"
#include "dpcolor/graph.hpp"

namespace dpc {

/// A built cover with its independently recounted number of colorings and
/// the predicate the count was certified against (e.g. "3", "<24").
struct Certified {
    Cover cover;
    BigInt count;
    std::string expected;
    std::optional<Vertex> hub;

    ConeCover cone() const;
    /// `count=<value> expected=<predicate>`
    std::string certification_line() const;
};

/// Inputs of an F-amalgamated cover: part i is glued at glue_vertices[i];
/// bijections[i - 1][s] is the glue fiber index of part i matched with index
/// s of part 0.
struct AmalgamSpec {
    std::vector<Cover> parts;
    std::vector<Vertex> glue_vertices;
    std::vector<std::vector<Fiber>> bijections;
};

struct Amalgam {
    Cover cover;
    GluingMap map;
    /// sum_s N((u_1, s)) * prod_i N(f_i(s)), equal to the cover's count.
    BigInt d;
};

/// The cover of the vertex-gluing whose edges at the glued vertex u send
/// (u, s) to where part i sends (u_i, f_i(s)). Graph layout follows glue().
/// Throws CertificationError if the recount differs from D.
Amalgam amalgamated_cover(const AmalgamSpec& spec);

struct ShiftAmalgam {
    Amalgam amalgam;
    int shift = 0;
    /// D for every shift d, f_d(s) = s + d mod m.
    std::vector<BigInt> d_by_shift;
};

/// The cyclic-shift amalgam of two covers with the least D (lowest shift on
/// ties). Certifies m * D <= count(c1) * count(c2).
ShiftAmalgam best_shift_amalgam(const Cover& c1, const Cover& c2, Vertex u1, Vertex u2);

/// Per-part covers induced from a cover of a glued graph; part i's glued
/// vertices take the fibers of the identified vertices. Throws
/// InvalidArgument if c's base is not the gluing described by `map`, and
/// CertificationError if the product identity fails on the first
/// independent choice at the glued vertices.
std::vector<Cover> separated_covers(const Cover& c, const GluingMap& map);

/// K_1 v C_{2k+2} (hub 0, cycle 1..2k+2), identity everywhere except the
/// closing edge 1-(2k+2), which carries j -> j+1 mod m. Needs m >= 3.
Certified shifted_wheel_cover(int k, int m);

/// K_p v C_{2k+2} at m = 2+p (clique 0..p-1, cycle p..p+2k+1), identity
/// except the closing edge, which carries the full cyclic shift. Needs p >= 2.
Certified kp_join_cycle_cover(int p, int k);

enum class ConeKind { two_even, three_plus, double_c4 };

const char* to_string(ConeKind kind);

/// The wheel cover used as part `part` (0-based) of a cone-of-cycles
/// construction: hub 0, cycle 1..length, hub edges and cycle path identity,
/// closing edge 1-length per the construction.
Cover cone_of_cycles_part(ConeKind kind, int part, int length);

/// Cover of K_1 v (C_{k_1} + ... + C_{k_n}) (hub 0, cycles consecutive),
/// amalgamated from cone_of_cycles_part() covers with identity bijections.
///   two_even:   two even lengths, m = 3, count 3
///   three_plus: at least three even lengths, m = 3, count 0; parts beyond
///               the third are canonical
///   double_c4:  lengths start 4, 4, m = 4, count 1280 * prod_{i>=3} P(C_{k_i}, 3)
Certified cone_of_cycles_cover(ConeKind kind, const std::vector<int>& lengths);

}  // namespace dpc
