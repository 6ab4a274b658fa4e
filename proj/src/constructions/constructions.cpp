#include "dpcolor/constructions.hpp"

#include <algorithm>
#include <memory>

#include "dpcolor/chromatic.hpp"
#include "dpcolor/counting.hpp"
#include "dpcolor/errors.hpp"

namespace dpc {
namespace {

bool is_permutation_of_fold(const std::vector<Fiber>& f, int m) {
    if (static_cast<int>(f.size()) != m) return false;
    std::vector<char> hit(static_cast<std::size_t>(m), 0);
    for (Fiber t : f) {
        if (t >= m || hit[t]) return false;
        hit[t] = 1;
    }
    return true;
}

// Writes the matching of part edge (a, b) into the glued cover, where the
// part's fiber index r at vertex x becomes rel[x][r] in the glued graph.
void place_edge(std::vector<Fiber>& images, const Graph& glued, int m, Vertex ga, Vertex gb,
                const std::vector<Fiber>& rel_a, const std::vector<Fiber>& rel_b, std::span<const Fiber> a_to_b) {
    const int e = glued.edge_index(ga, gb);
    Fiber* slot = images.data() + static_cast<std::size_t>(e) * m;
    for (int r = 0; r < m; ++r) {
        const Fiber t = a_to_b[r];
        if (t == kUnmatched) continue;
        const Fiber from = rel_a[r];
        const Fiber to = rel_b[t];
        if (ga < gb) {
            slot[from] = to;
        } else {
            slot[to] = from;
        }
    }
}

std::vector<Fiber> image_from(const Cover& c, Vertex a, Vertex b) {
    std::vector<Fiber> out(static_cast<std::size_t>(c.fold()));
    for (int r = 0; r < c.fold(); ++r) out[r] = c.map(a, b, static_cast<Fiber>(r));
    return out;
}

Certified certify_equal(Cover cover, const BigInt& expected, std::optional<Vertex> hub, const char* what) {
    const BigInt count = count_colorings(cover);
    if (count != expected) {
        throw CertificationError(std::string(what) + ": count " + count.str() + " differs from " + expected.str());
    }
    return {std::move(cover), count, expected.str(), hub};
}

std::shared_ptr<const Graph> wheel_graph(int length) {
    return std::make_shared<const Graph>(join(empty_graph(1), build_family(Family::cycle, length)));
}

}  // namespace

ConeCover Certified::cone() const {
    if (!hub) throw InvalidArgument("construction has no hub");
    return ConeCover(cover, *hub);
}

std::string Certified::certification_line() const { return "count=" + count.str() + " expected=" + expected; }

Amalgam amalgamated_cover(const AmalgamSpec& spec) {
    const std::size_t n = spec.parts.size();
    if (n < 2) throw InvalidArgument("amalgamation needs at least two parts");
    if (spec.glue_vertices.size() != n || spec.bijections.size() != n - 1) {
        throw InvalidArgument("amalgamation needs one glue vertex per part and n-1 bijections");
    }
    const int m = spec.parts[0].fold();
    std::vector<Graph> graphs;
    std::vector<std::vector<Vertex>> cliques;
    for (std::size_t i = 0; i < n; ++i) {
        if (spec.parts[i].fold() != m) throw InvalidArgument("amalgamated parts must share m");
        graphs.push_back(spec.parts[i].base());
        cliques.push_back({spec.glue_vertices[i]});
    }
    for (const auto& f : spec.bijections) {
        if (!is_permutation_of_fold(f, m)) throw InvalidArgument("amalgamation bijection is not a permutation of [m]");
    }
    Gluing glued = glue(graphs, cliques);
    auto g = std::make_shared<const Graph>(glued.graph);

    std::vector<Fiber> images(static_cast<std::size_t>(g->num_edges()) * m, kUnmatched);
    const auto id = identity_permutation(m);
    for (std::size_t i = 0; i < n; ++i) {
        const Cover& part = spec.parts[i];
        // Part fiber index t at u_i is glued index s with f_i(s) = t.
        std::vector<Fiber> glue_rel = id;
        if (i > 0) {
            for (int s = 0; s < m; ++s) glue_rel[spec.bijections[i - 1][s]] = static_cast<Fiber>(s);
        }
        const Vertex ui = spec.glue_vertices[i];
        const auto& pvm = glued.map.part_vertex_map[i];
        for (int e = 0; e < part.base().num_edges(); ++e) {
            const auto [a, b] = part.base().edge(e);
            place_edge(images, *g, m, pvm[a], pvm[b], a == ui ? glue_rel : id, b == ui ? glue_rel : id,
                       part.matching(e));
        }
    }
    Cover cover(g, m, std::move(images));

    const auto first = fiber_counts(spec.parts[0], spec.glue_vertices[0]);
    std::vector<std::vector<BigInt>> others;
    for (std::size_t i = 1; i < n; ++i) others.push_back(fiber_counts(spec.parts[i], spec.glue_vertices[i]));
    BigInt d = 0;
    for (int s = 0; s < m; ++s) {
        BigInt term = first[s];
        for (std::size_t i = 1; i < n; ++i) term *= others[i - 1][spec.bijections[i - 1][s]];
        d += term;
    }
    const BigInt count = count_colorings(cover);
    if (count != d) throw CertificationError("amalgamated cover has " + count.str() + " colorings, D = " + d.str());
    return {std::move(cover), std::move(glued.map), std::move(d)};
}

ShiftAmalgam best_shift_amalgam(const Cover& c1, const Cover& c2, Vertex u1, Vertex u2) {
    const int m = c1.fold();
    if (c2.fold() != m) throw InvalidArgument("covers must share m");
    const auto a = fiber_counts(c1, u1);
    const auto b = fiber_counts(c2, u2);
    std::vector<BigInt> by_shift;
    int best = 0;
    for (int d = 0; d < m; ++d) {
        BigInt total = 0;
        for (int j = 0; j < m; ++j) total += a[j] * b[(j + d) % m];
        by_shift.push_back(total);
        if (total < by_shift[best]) best = d;
    }
    AmalgamSpec spec{{c1, c2}, {u1, u2}, {cyclic_shift(m, best)}};
    Amalgam am = amalgamated_cover(spec);
    if (am.d * m > count_colorings(c1) * count_colorings(c2)) {
        throw CertificationError("best shift exceeds the averaging bound");
    }
    return {std::move(am), best, std::move(by_shift)};
}

std::vector<Cover> separated_covers(const Cover& c, const GluingMap& map) {
    if (map.parts.size() < 2 || map.part_vertex_map.size() != map.parts.size()) {
        throw InvalidArgument("gluing map is incomplete");
    }
    if (glue(map.parts, map.chosen_cliques).graph != c.base()) {
        throw InvalidArgument("cover base is not the gluing described by the map");
    }
    const int m = c.fold();
    std::vector<Cover> out;
    for (std::size_t i = 0; i < map.parts.size(); ++i) {
        const Graph& part = map.parts[i];
        const auto& pvm = map.part_vertex_map[i];
        std::vector<Fiber> images(static_cast<std::size_t>(part.num_edges()) * m);
        for (int e = 0; e < part.num_edges(); ++e) {
            const auto [a, b] = part.edge(e);
            const auto img = image_from(c, pvm[a], pvm[b]);
            std::copy(img.begin(), img.end(), images.begin() + static_cast<std::ptrdiff_t>(e) * m);
        }
        out.emplace_back(std::make_shared<const Graph>(part), m, std::move(images));
    }

    // Spot-check N(P, H) = prod_i N(P_i, H_i) on the first independent choice.
    const int p = map.p;
    std::vector<Fiber> choice(static_cast<std::size_t>(p), 0);
    while (true) {
        PartialAssignment whole;
        for (int q = 0; q < p; ++q) whole[map.glued_vertex_ids[q]] = choice[q];
        if (is_independent(c, whole)) {
            BigInt product = 1;
            for (std::size_t i = 0; i < out.size(); ++i) {
                PartialAssignment local;
                for (int q = 0; q < p; ++q) local[map.chosen_cliques[i][q]] = choice[q];
                product *= count_colorings_containing(out[i], local);
            }
            if (product != count_colorings_containing(c, whole)) {
                throw CertificationError("separated covers break the product identity");
            }
            break;
        }
        int q = p - 1;
        while (q >= 0 && ++choice[q] == m) choice[q--] = 0;
        if (q < 0) break;
    }
    return out;
}

Certified shifted_wheel_cover(int k, int m) {
    if (k < 1) throw InvalidArgument("shifted wheel needs k >= 1");
    if (m < 3) throw InvalidArgument("shifted wheel needs m >= 3");
    const int len = 2 * k + 2;
    auto g = wheel_graph(len);
    const Cover cover = canonical_cover(g, m).with_matching(1, len, cyclic_shift(m, 1));
    if (m == 3) return certify_equal(cover, 3, 0, "shifted wheel");
    const BigInt count = count_colorings(cover);
    const BigInt p = chromatic_polynomial(*g)(m);
    if (count < p) throw CertificationError("shifted wheel above m = 3 has fewer colorings than P");
    return {cover, count, ">=" + p.str(), 0};
}

Certified kp_join_cycle_cover(int p, int k) {
    if (p < 2) throw InvalidArgument("kp_join_cycle_cover needs p >= 2");
    if (k < 1) throw InvalidArgument("kp_join_cycle_cover needs k >= 1");
    const int len = 2 * k + 2;
    const int m = 2 + p;
    auto g = std::make_shared<const Graph>(join(build_family(Family::complete, p), build_family(Family::cycle, len)));
    const Cover cover = canonical_cover(g, m).with_matching(p, p + len - 1, cyclic_shift(m, 1));
    const BigInt count = count_colorings(cover);
    const BigInt bound = factorial(static_cast<unsigned>(m));
    if (chromatic_polynomial(*g)(m) != bound) throw CertificationError("P(K_p v C, p+2) differs from (p+2)!");
    if (count >= bound) throw CertificationError("K_p-join cover count " + count.str() + " is not below " + bound.str());
    return {cover, count, "<" + bound.str(), std::nullopt};
}

const char* to_string(ConeKind kind) {
    switch (kind) {
        case ConeKind::two_even: return "two_even";
        case ConeKind::three_plus: return "three_plus";
        case ConeKind::double_c4: return "double_c4";
    }
    return "?";
}

Cover cone_of_cycles_part(ConeKind kind, int part, int length) {
    if (length < 3) throw InvalidArgument("cycle length must be at least 3");
    if (part < 0) throw InvalidArgument("part index must be non-negative");
    std::vector<Fiber> closing;
    int m = 3;
    switch (kind) {
        case ConeKind::two_even:
            closing = {1, 2, 0};
            break;
        case ConeKind::three_plus: {
            static const std::vector<Fiber> patterns[] = {{0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
            closing = part < 3 ? patterns[part] : identity_permutation(3);
            break;
        }
        case ConeKind::double_c4:
            m = 4;
            if (part == 0) {
                closing = {0, 1, 3, 2};
            } else if (part == 1) {
                closing = {1, 0, 2, 3};
            } else {
                closing = identity_permutation(4);
            }
            break;
    }
    return canonical_cover(wheel_graph(length), m).with_matching(1, length, closing);
}

Certified cone_of_cycles_cover(ConeKind kind, const std::vector<int>& lengths) {
    const auto all_even = std::all_of(lengths.begin(), lengths.end(), [](int k) { return k % 2 == 0; });
    for (int k : lengths) {
        if (k < 3) throw InvalidArgument("cycle lengths must be at least 3");
    }
    BigInt expected = 0;
    switch (kind) {
        case ConeKind::two_even:
            if (lengths.size() != 2 || !all_even) throw InvalidArgument("two_even needs exactly two even cycle lengths");
            expected = 3;
            break;
        case ConeKind::three_plus:
            if (lengths.size() < 3 || !all_even) throw InvalidArgument("three_plus needs at least three even cycle lengths");
            expected = 0;
            break;
        case ConeKind::double_c4:
            if (lengths.size() < 2 || lengths[0] != 4 || lengths[1] != 4) {
                throw InvalidArgument("double_c4 needs lengths starting with 4, 4");
            }
            expected = 1280;
            for (std::size_t i = 2; i < lengths.size(); ++i) expected *= closed_form::cycle(lengths[i], 3);
            break;
    }
    AmalgamSpec spec;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        spec.parts.push_back(cone_of_cycles_part(kind, static_cast<int>(i), lengths[i]));
        spec.glue_vertices.push_back(0);
        if (i > 0) spec.bijections.push_back(identity_permutation(spec.parts[0].fold()));
    }
    Amalgam am = amalgamated_cover(spec);
    if (kind == ConeKind::double_c4) {
        const std::vector<BigInt> first{16, 16, 20, 20};
        const std::vector<BigInt> second{20, 20, 16, 16};
        if (fiber_counts(spec.parts[0], 0) != first || fiber_counts(spec.parts[1], 0) != second) {
            throw CertificationError("double_c4 hub counts differ from (16,16,20,20) / (20,20,16,16)");
        }
    }
    return certify_equal(std::move(am.cover), expected, 0, to_string(kind));
}

}  // namespace dpc
