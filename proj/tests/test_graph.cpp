#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "dpcolor/chordal.hpp"
#include "dpcolor/chromatic.hpp"
#include "dpcolor/graph.hpp"
#include "oracles.hpp"

using namespace dpc;

namespace {

Graph triangle() { return build_family(Family::complete, 3); }
Graph c(int n) { return build_family(Family::cycle, n); }

Gluing glue_two(const Graph& a, const Graph& b, std::vector<Vertex> qa, std::vector<Vertex> qb) {
    std::vector<Graph> parts{a, b};
    std::vector<std::vector<Vertex>> cl{std::move(qa), std::move(qb)};
    return glue(parts, cl);
}

}  // namespace

TEST_CASE("families") {
    const Graph c4 = c(4);
    CHECK(c4.num_vertices() == 4);
    CHECK(c4.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    CHECK(triangle().num_edges() == 3);
    CHECK(build_family(Family::path, 2).edges() == std::vector<Edge>{{0, 1}});
    CHECK_THROWS_AS(build_family(Family::cycle, 2), InvalidArgument);
    CHECK_THROWS_AS(build_family(Family::path, 0), InvalidArgument);
}

TEST_CASE("graph invariants are enforced") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidArgument);
    const Graph g(4, {{2, 1}, {0, 3}, {1, 0}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
    CHECK(g.edge_index(2, 1) == 2);
    CHECK(g.edge_index(2, 3) == -1);
    CHECK(g.neighbors(0) == std::vector<Vertex>{1, 3});
    CHECK(g.cyclomatic_number() == 0);
}

TEST_CASE("join") {
    const Graph wheel = join(empty_graph(1), c(4));
    CHECK(wheel.num_vertices() == 5);
    CHECK(wheel.degree(0) == 4);
    CHECK(wheel.num_edges() == 8);
    const Graph k2c4 = join(build_family(Family::complete, 2), c(4));
    CHECK(k2c4.num_vertices() == 6);
    CHECK(k2c4.num_edges() == 13);
    CHECK(join(empty_graph(1), empty_graph(1)) == build_family(Family::complete, 2));
}

TEST_CASE("glue") {
    const auto bowtie = glue_two(triangle(), triangle(), {0}, {0});
    CHECK(bowtie.graph.num_vertices() == 5);
    CHECK(bowtie.graph.num_edges() == 6);
    CHECK(bowtie.map.glued_vertex_ids == std::vector<Vertex>{0});

    const auto two_c4 = glue_two(c(4), c(4), {0, 1}, {0, 1});
    CHECK(two_c4.graph.num_vertices() == 6);
    CHECK(two_c4.graph.num_edges() == 7);

    std::vector<Graph> k2s(3, build_family(Family::complete, 2));
    std::vector<std::vector<Vertex>> at0(3, std::vector<Vertex>{0});
    const auto star = glue(k2s, at0);
    CHECK(star.graph.num_vertices() == 4);
    CHECK(star.graph.degree(0) == 3);

    // Images of part maps cover the result and overlap only on glued ids.
    std::vector<int> hits(static_cast<std::size_t>(two_c4.graph.num_vertices()), 0);
    for (const auto& pm : two_c4.map.part_vertex_map)
        for (Vertex v : pm) ++hits[v];
    for (Vertex v = 0; v < two_c4.graph.num_vertices(); ++v) {
        const bool glued = std::count(two_c4.map.glued_vertex_ids.begin(), two_c4.map.glued_vertex_ids.end(), v) > 0;
        CHECK(hits[v] == (glued ? 2 : 1));
    }

    CHECK_THROWS_AS(glue_two(c(4), c(4), {0, 2}, {0, 1}), InvalidArgument);
    CHECK_THROWS_AS(glue_two(c(4), c(4), {0}, {0, 1}), InvalidArgument);
}

TEST_CASE("disjoint union") {
    std::vector<Graph> p{c(3), c(4)};
    const Graph u = disjoint_union(p);
    CHECK(u.num_vertices() == 7);
    CHECK(u.num_edges() == 7);
    CHECK(u.components().size() == 2);
    std::vector<Graph> one{empty_graph(1)};
    CHECK(disjoint_union(one) == empty_graph(1));
}

TEST_CASE("graph text round trip and parse errors") {
    const Graph g = join(empty_graph(1), c(5));
    CHECK(parse_graph(format_graph(g)) == g);
    CHECK(parse_graph("# bowtie\n5 6\n0 1\n0 2\n1 2\n0 3\n0 4\n3 4 # last\n").num_edges() == 6);
    try {
        parse_graph("3 2\n0 1\n1 x\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), ParseError);
}

TEST_CASE("chromatic polynomial examples") {
    const Polynomial k3 = chromatic_polynomial(triangle());
    CHECK(k3.str() == "m^3 - 3m^2 + 2m");
    CHECK(k3(3) == 6);
    CHECK(chromatic_polynomial(c(4))(3) == 18);
    CHECK(chromatic_polynomial(join(empty_graph(1), c(4)))(4) == 72);
    CHECK(chromatic_polynomial(empty_graph(3)).str() == "m^3");
}

TEST_CASE("chromatic polynomial shape") {
    for (int n = 1; n <= 5; ++n) {
        oracle::for_each_graph(n, 10, [&](const Graph& g) {
            const Polynomial p = chromatic_polynomial(g);
            REQUIRE(p.degree() == n);
            CHECK(p.leading_coefficient() == 1);
            for (int i = 0; i <= n; ++i) {
                const BigInt a = p.coefficient(i);
                if (a != 0) CHECK(((n - i) % 2 == 0) == (a > 0));
            }
        });
    }
}

TEST_CASE("chromatic polynomial against brute force, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        oracle::for_each_graph(n, 10, [&](const Graph& g) {
            const Polynomial p = chromatic_polynomial(g);
            for (int m = 0; m <= 4; ++m) CHECK(p(m) == oracle::proper_colorings(g, m));
        });
    }
}

TEST_CASE("chromatic number") {
    CHECK(chromatic_number(triangle()) == 3);
    CHECK(chromatic_number(c(5)) == 3);
    CHECK(chromatic_number(c(6)) == 2);
    CHECK(chromatic_number(empty_graph(2)) == 1);
}

TEST_CASE("closed forms") {
    CHECK(closed_form::cycle(5, 3) == 30);
    CHECK(closed_form::join_complete(c(4), 2, 4) == 24);
    const std::vector<Graph> two_c4{c(4), c(4)};
    CHECK(closed_form::gluing(two_c4, 1, 3) == 108);
    CHECK(chromatic_polynomial(glue_two(c(4), c(4), {0}, {0}).graph)(3) == 108);

    CHECK_THROWS_AS(closed_form::join_complete(c(4), 2, 2), InvalidArgument);
    CHECK_THROWS_AS(closed_form::gluing(two_c4, 3, 2), InvalidArgument);
    // Inputs that are not a valid gluing: 3*3 / (3*2) is not an integer.
    const std::vector<Graph> two_points{empty_graph(1), empty_graph(1)};
    CHECK_THROWS_AS(closed_form::gluing(two_points, 2, 3), DivisibilityError);

    for (int n = 3; n <= 8; ++n)
        for (int m = 0; m <= 6; ++m) CHECK(closed_form::cycle(n, m) == chromatic_polynomial(c(n))(m));
    for (int n = 2; n <= 5; ++n)
        for (int m = 0; m <= 6; ++m)
            CHECK(closed_form::complete(n, m) == chromatic_polynomial(build_family(Family::complete, n))(m));
    for (int p = 1; p <= 2; ++p)
        for (int n = 3; n <= 5; ++n)
            for (int m = p + 1; m <= p + 4; ++m)
                CHECK(closed_form::join_complete(c(n), p, m) ==
                      chromatic_polynomial(join(build_family(Family::complete, p), c(n)))(m));
}

TEST_CASE("tree closed form on every tree up to 6 vertices") {
    for (int n = 1; n <= 6; ++n) {
        oracle::for_each_graph(n, n - 1, [&](const Graph& g) {
            if (g.num_edges() != n - 1 || !g.is_connected()) return;
            for (int m = 0; m <= 4; ++m) CHECK(closed_form::tree(n, m) == chromatic_polynomial(g)(m));
        });
    }
}

TEST_CASE("gluing quotient identity") {
    const Graph k4 = build_family(Family::complete, 4);
    struct Case {
        std::vector<Graph> parts;
        std::vector<std::vector<Vertex>> cliques;
    };
    std::vector<Case> cases{
        {{triangle(), triangle()}, {{0}, {2}}},
        {{c(4), triangle(), c(5)}, {{1}, {0}, {3}}},
        {{c(4), c(4)}, {{0, 1}, {2, 3}}},
        {{k4, triangle(), c(5)}, {{0, 1}, {1, 2}, {4, 0}}},
        {{k4, k4}, {{0, 1, 2}, {3, 2, 1}}},
    };
    for (const auto& cs : cases) {
        const auto glued = glue(cs.parts, cs.cliques);
        const Polynomial p = chromatic_polynomial(glued.graph);
        const int pp = static_cast<int>(cs.cliques[0].size());
        for (int m = pp; m <= pp + 4; ++m) CHECK(closed_form::gluing(cs.parts, pp, m) == p(m));
    }
}

TEST_CASE("perfect elimination orderings") {
    const auto k3 = perfect_elimination_ordering(triangle(), 0);
    REQUIRE(k3);
    CHECK(k3->ordering.back() == 0);
    CHECK(k3->alphas == std::vector<int>{2, 1, 0});
    CHECK_FALSE(perfect_elimination_ordering(c(4)));

    const Graph chorded(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
    const auto pc = perfect_elimination_ordering(chorded);
    REQUIRE(pc);
    auto alphas = pc->alphas;
    std::sort(alphas.begin(), alphas.end());
    CHECK(alphas == std::vector<int>{0, 1, 2, 2});

    // Every end vertex is reachable on a chordal graph.
    for (Vertex end = 0; end < 4; ++end) {
        const auto peo = perfect_elimination_ordering(chorded, end);
        REQUIRE(peo);
        CHECK(peo->ordering.back() == end);
        CHECK(is_perfect_elimination_ordering(chorded, peo->ordering));
        CHECK(peo->alphas.back() == 0);
    }
}

TEST_CASE("chordality against induced-cycle oracle") {
    for (int n = 1; n <= 6; ++n) {
        oracle::for_each_graph(n, 15, [&](const Graph& g) {
            const bool expected = oracle::is_chordal(g);
            const auto peo = perfect_elimination_ordering(g);
            CHECK(peo.has_value() == expected);
            if (peo) {
                CHECK(is_perfect_elimination_ordering(g, peo->ordering));
                // On a chordal graph the PEO product is the chromatic polynomial.
                for (int m = 0; m <= 4; ++m) CHECK(peo_product(*peo, m) == chromatic_polynomial(g)(m));
            }
        });
    }
}

TEST_CASE("polynomial arithmetic") {
    const Polynomial x = Polynomial::monomial(1);
    const Polynomial one = Polynomial::constant(1);
    const Polynomial sq = (x - one) * (x + one);
    CHECK(sq.str() == "m^2 - 1");
    CHECK(sq.shifted(1)(3) == 3);
    CHECK((sq - sq).degree() == -1);
    CHECK((sq - sq).str() == "0");
}
