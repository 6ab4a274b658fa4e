#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpcolor/bounds.hpp"
#include "dpcolor/chordal.hpp"
#include "dpcolor/chromatic.hpp"
#include "dpcolor/cone.hpp"
#include "dpcolor/constructions.hpp"
#include "dpcolor/counting.hpp"
#include "dpcolor/dp.hpp"
#include "dpcolor/enumeration.hpp"
#include "dpcolor/errors.hpp"
#include "dpcolor/random.hpp"
#include "dpcolor/threshold.hpp"
#include "oracles.hpp"

using namespace dpc;

namespace {

std::shared_ptr<const Graph> shared(Graph g) { return std::make_shared<const Graph>(std::move(g)); }
Graph cycle(int n) { return build_family(Family::cycle, n); }
Graph wheel(int n) { return join(empty_graph(1), cycle(n)); }
Graph bowtie() {
    const Graph k3 = build_family(Family::complete, 3);
    return glue(std::vector<Graph>{k3, k3}, std::vector<std::vector<Vertex>>{{0}, {0}}).graph;
}
Graph vertex_glued(const Graph& a, const Graph& b) {
    return glue(std::vector<Graph>{a, b}, std::vector<std::vector<Vertex>>{{0}, {0}}).graph;
}
Graph cone_of(const std::vector<int>& lengths) {
    std::vector<Graph> cycles;
    for (int k : lengths) cycles.push_back(cycle(k));
    return join(empty_graph(1), disjoint_union(cycles));
}

BigInt dp_value(const Graph& g, int m) { return dp_any(shared(g), m).value; }

// Minimum and least minimizing indices by plain enumeration with the oracle.
std::pair<std::uint64_t, std::vector<std::uint64_t>> brute_min(const Graph& g, int m) {
    const FullCoverSpace space(shared(g), m);
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<std::uint64_t> at;
    for (std::uint64_t i = 0; i < space.size_u64(); ++i) {
        const std::uint64_t v = oracle::cover_colorings(space.cover_at(i));
        if (v < best) {
            best = v;
            at.clear();
        }
        if (v == best) at.push_back(i);
    }
    return {best, at};
}

}  // namespace

TEST_CASE("dp_exact examples") {
    const DpResult c4_3 = dp_exact(shared(cycle(4)), 3);
    CHECK(c4_3.value == 15);
    CHECK(c4_3.search_size == 6);
    CHECK(dp_exact(shared(cycle(4)), 2).value == 0);
    CHECK(dp_exact(shared(wheel(4)), 3).value == 3);
    CHECK(dp_exact(shared(wheel(4)), 3).search_size == 1296);
    const DpResult bt = dp_exact(shared(bowtie()), 3);
    CHECK(bt.value == 12);
    CHECK(bt.search_size == 36);
    CHECK(dp_exact(shared(cycle(6)), 3).value == 63);
    CHECK(dp_exact(shared(empty_graph(1)), 4).value == 4);
}

TEST_CASE("dp_exact witnesses are the least minimizing covers") {
    const std::vector<Graph> graphs{cycle(4), cycle(5), wheel(4), bowtie(), build_family(Family::complete, 4)};
    for (const auto& g : graphs) {
        for (int m = 2; m <= 3; ++m) {
            const auto [best, at] = brute_min(g, m);
            const DpResult r = dp_exact(shared(g), m);
            CHECK(r.value == best);
            const FullCoverSpace space(shared(g), m);
            REQUIRE(r.witnesses.size() == std::min<std::size_t>(4, at.size()));
            for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
                CHECK(r.witnesses[i] == space.cover_at(at[i]));
                CHECK(count_colorings(r.witnesses[i]) == r.value);
            }
        }
    }
}

TEST_CASE("dp_exact does not depend on the shard count") {
    const auto g = shared(wheel(5));
    const DpResult one = dp_exact(g, 3);
    for (int shards : {2, 3, 7, 64}) {
        DpOptions opts;
        opts.shards = shards;
        const DpResult r = dp_exact(g, 3, opts);
        CHECK(r.value == one.value);
        REQUIRE(r.witnesses.size() == one.witnesses.size());
        for (std::size_t i = 0; i < r.witnesses.size(); ++i) CHECK(r.witnesses[i] == one.witnesses[i]);
    }
}

TEST_CASE("dp_exact is at most P") {
    CounterRng rng(4);
    for (int t = 0; t < 40; ++t) {
        const int n = 2 + static_cast<int>(rng.uniform(4));
        const Graph g = random_graph(n, 1, 2, rng);
        for (int m = 1; m <= 3; ++m) {
            if (dp_search_units(g, m) > 200000) continue;
            const BigInt v = dp_value(g, m);
            CHECK(v <= chromatic_polynomial(g)(m));
            CHECK(v >= 0);
        }
    }
}

TEST_CASE("dp_exact refuses over budget") {
    DpOptions opts;
    opts.budget = 1000;
    try {
        dp_exact(shared(wheel(4)), 3, opts);
        FAIL("expected a refusal");
    } catch (const BudgetExceeded& e) {
        CHECK(e.required() == "6480");
    }
    CHECK(dp_search_units(wheel(4), 4) == 331776 * 5);
    CHECK_THROWS_AS(dp_exact(shared(disjoint_union(std::vector<Graph>{cycle(3), cycle(3)})), 3), InvalidArgument);
    CHECK_THROWS_AS(dp_exact(shared(cycle(3)), 0), InvalidArgument);
}

TEST_CASE("disconnected product rule") {
    DpResult a{nullptr, 3, 6, {}, 1};
    DpResult b{nullptr, 3, 6, {}, 1};
    CHECK(dp_disconnected(std::vector<DpResult>{a, b}) == 36);
    DpResult z{nullptr, 3, 0, {}, 1};
    CHECK(dp_disconnected(std::vector<DpResult>{z, b}) == 0);
    DpResult other{nullptr, 4, 6, {}, 1};
    CHECK_THROWS_AS(dp_disconnected(std::vector<DpResult>{a, other}), InvalidArgument);

    const auto g = shared(disjoint_union(std::vector<Graph>{cycle(4), build_family(Family::complete, 3)}));
    const DpResult r = dp_any(g, 3);
    CHECK(r.value == 90);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(count_colorings(r.witnesses[0]) == 90);
}

TEST_CASE("closed forms agree with exhaustive search") {
    for (int n = 3; n <= 7; ++n) {
        for (int m = 1; m <= 4; ++m) {
            if (n % 2 == 0 && m < 2) continue;
            CHECK(dp_closed_form::cycle(n, m) == dp_value(cycle(n), m));
        }
    }
    CHECK(dp_closed_form::cycle(2, 3) == 6);
    for (int len : {4, 5}) {
        for (int m = 1; m <= 3; ++m) CHECK(dp_closed_form::wheel(len, m) == dp_value(wheel(len), m));
    }
    CHECK(dp_closed_form::wheel(4, 4) == 72);
    CHECK(dp_closed_form::unicyclic(5, 4, 3) == 30);
    const BigInt v33[] = {3, 3};
    CHECK(dp_closed_form::gluing_cycle_chordal(v33, 2, 3) == 3);
    const BigInt v66[] = {6, 6};
    CHECK(dp_closed_form::gluing_cycle_chordal(v66, 2, 3) == dp_value(bowtie(), 3));
    const BigInt bad[] = {5, 5};
    CHECK_THROWS_AS(dp_closed_form::gluing_cycle_chordal(bad, 2, 3), DivisibilityError);
    CHECK_THROWS_AS(dp_closed_form::unicyclic(4, 4, 1), InvalidArgument);
}

TEST_CASE("unicyclic closed form on cycles with pendant trees") {
    CounterRng rng(17);
    for (int t = 0; t < 30; ++t) {
        const int len = 3 + static_cast<int>(rng.uniform(3));
        const int n = len + static_cast<int>(rng.uniform(3));
        std::vector<Edge> edges;
        for (int i = 0; i < len; ++i) edges.push_back({i, (i + 1) % len});
        for (int v = len; v < n; ++v) edges.push_back({static_cast<Vertex>(rng.uniform(static_cast<std::uint64_t>(v))), v});
        const Graph g(n, edges);
        for (int m = 2; m <= 4; ++m) CHECK(dp_closed_form::unicyclic(n, len, m) == dp_value(g, m));
    }
}

TEST_CASE("chordal closed form agrees with exhaustive search") {
    CounterRng rng(23);
    int checked = 0;
    for (int t = 0; t < 40; ++t) {
        const int n = 2 + static_cast<int>(rng.uniform(4));
        const Graph g = random_chordal_graph(n, rng);
        const auto peo = perfect_elimination_ordering(g);
        REQUIRE(peo.has_value());
        for (int m = 1; m <= 4; ++m) {
            if (dp_search_units(g, m) > 3000000) continue;
            CHECK(dp_closed_form::chordal(*peo, m) == dp_value(g, m));
            ++checked;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("vertex-glued cycles and chordal graphs") {
    const Graph c4 = cycle(4);
    const Graph k3 = build_family(Family::complete, 3);
    const Graph c5 = cycle(5);
    const std::vector<std::pair<Graph, Graph>> pairs{{c4, c4}, {c4, k3}, {c5, k3}, {c4, c5}};
    for (const auto& [a, b] : pairs) {
        for (int m = 2; m <= 3; ++m) {
            const DpResult ra = dp_exact(shared(a), m);
            const DpResult rb = dp_exact(shared(b), m);
            const BigInt glued = dp_value(vertex_glued(a, b), m);
            const BigInt vals[] = {ra.value, rb.value};
            CHECK(dp_closed_form::gluing_cycle_chordal(vals, 2, m) == glued);
            CHECK(amalgam_upper_bound(vals, m) == Rational(glued));
            // The best shift of two minimizing covers attains the bound.
            const ShiftAmalgam s = best_shift_amalgam(ra.witnesses[0], rb.witnesses[0], 0, 0);
            CHECK(s.amalgam.d == glued);
        }
    }
}

TEST_CASE("seth bound values") {
    const SethBoundBundle b = seth_bound(1, 4, 0);
    CHECK(b.p == 24);
    CHECK(b.p1 == 2);
    CHECK(b.p2 == 3);
    CHECK(seth_bound(1, 4, 4).min_total == 72);
    CHECK(seth_bound(1, 3, 0).min_total == 3);
    CHECK(seth_min_total(1, 3) == 3);
    CHECK(admissible_level_counts(4) == std::vector<int>{0, 1, 2, 4});
    CHECK_THROWS_AS(seth_bound(1, 4, 3), InvalidArgument);
    CHECK_THROWS_AS(seth_bound(1, 4, 5), InvalidArgument);
    for (int k = 1; k <= 4; ++k) {
        for (int m = 2; m <= 9; ++m) {
            for (int s : admissible_level_counts(m)) {
                const SethBoundBundle x = seth_bound(k, m, s);
                const BigInt q = ipow(BigInt(m - 2), static_cast<unsigned>(2 * k + 1));
                CHECK(x.p2 >= x.p1);
                CHECK((m - 1) * x.p1 == q - (m - 2));
                CHECK((m - 1) * x.p2 == q + 1);
            }
        }
    }
}

TEST_CASE("seth bounds hold on every cover of K_1 v C_4 at m = 3") {
    const FullCoverSpace space(shared(wheel(4)), 3);
    std::uint64_t violations = 0;
    for (std::uint64_t i = 0; i < space.size_u64(); ++i) {
        const ConeCover cc(space.cover_at(i), 0);
        const auto level = level_vertices(cc);
        const SethBoundBundle b = seth_bound(1, 3, static_cast<int>(level.size()));
        const auto counts = fiber_counts(cc.cover(), 0);
        BigInt total = 0;
        for (int j = 0; j < 3; ++j) {
            const bool is_level = std::find(level.begin(), level.end(), j) != level.end();
            if (counts[j] < (is_level ? b.level_bound : b.nonlevel_bound)) ++violations;
            total += counts[j];
        }
        if (total < b.min_total) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("amalgam and gluing bounds") {
    const BigInt a[] = {3, 3};
    CHECK(amalgam_upper_bound(a, 3) == 3);
    const BigInt b[] = {72, 72};
    CHECK(amalgam_upper_bound(b, 4) == 1296);
    const BigInt c[] = {6, 6, 6};
    CHECK(amalgam_upper_bound(c, 3) == 24);
    const BigInt d[] = {5, 7};
    CHECK(amalgam_upper_bound(d, 3) == Rational(35, 3));
    CHECK_THROWS_AS(amalgam_upper_bound(std::span<const BigInt>(a, 1), 3), InvalidArgument);

    const BigInt k22[] = {2, 2};
    CHECK(gluing_lower_bound(k22, 1, 3) == 12);
    const BigInt k55[] = {5, 5};
    CHECK(gluing_lower_bound(k55, 1, 3) == 75);
    CHECK(gluing_lower_bound(k55, 1, 3) <= dp_value(vertex_glued(cycle(4), cycle(4)), 3));
    CHECK(gluing_lower_bound(k22, 1, 3) <= dp_value(bowtie(), 3));
    CHECK_THROWS_AS(gluing_lower_bound(std::span<const BigInt>(k22, 1), 1, 3), InvalidArgument);
    CHECK_THROWS_AS(gluing_lower_bound(k22, 4, 3), InvalidArgument);
}

TEST_CASE("triple bowtie meets the amalgam bound") {
    const Graph k3 = build_family(Family::complete, 3);
    const Graph g = glue(std::vector<Graph>{k3, k3, k3}, std::vector<std::vector<Vertex>>{{0}, {0}, {0}}).graph;
    CHECK(dp_value(g, 3) == 24);
}

TEST_CASE("cycle vertex bound") {
    CHECK(cycle_vertex_bound(4, 3) == 5);
    CHECK(cycle_vertex_bound(5, 3) == 10);
    CHECK(cycle_vertex_bound(3, 3) == 2);
    for (int n = 3; n <= 9; ++n)
        for (int m = 2; m <= 6; ++m) CHECK(cycle_vertex_bound(n, m) * m == dp_closed_form::cycle(n, m));
    CHECK_THROWS_AS(cycle_vertex_bound(2, 3), InvalidArgument);
    CHECK_THROWS_AS(cycle_vertex_bound(4, 1), InvalidArgument);
}

TEST_CASE("technical inequality records") {
    const TechnicalCheckRecord r50 = technical_inequality_check(5, 0);
    CHECK(r50.value == rpow(Rational(331, 324), 5));
    CHECK(r50.greater_than_one);
    CHECK(technical_inequality_check(10, 0).greater_than_one);
    const TechnicalCheckRecord r53 = technical_inequality_check(5, 3);
    CHECK(r53.value == rpow(Rational(76, 81), 3) * rpow(Rational(331, 324), 2));
    CHECK(r53.greater_than_one == (r53.value > 1));
    CHECK_THROWS_AS(technical_inequality_check(4, 0), InvalidArgument);
    CHECK_THROWS_AS(technical_inequality_check(6, 5), InvalidArgument);
}

TEST_CASE("family recognition") {
    CHECK(recognize_family(build_family(Family::complete, 4)).kind == FamilyMatch::Kind::chordal);
    CHECK(recognize_family(build_family(Family::complete, 4)).claimed_tau == 4);
    CHECK(recognize_family(cycle(5)).claimed_tau == 3);
    CHECK(!recognize_family(cycle(6)).claimed_tau);

    const FamilyMatch j = recognize_family(join(build_family(Family::complete, 2), cycle(5)));
    CHECK(j.kind == FamilyMatch::Kind::join_cycle);
    CHECK(j.claimed_tau == 5);
    CHECK(j.universal == std::vector<Vertex>{0, 1});
    CHECK(recognize_family(wheel(4)).claimed_tau == 4);

    CHECK(recognize_family(cone_of({4, 4})).claimed_tau == 5);
    CHECK(recognize_family(cone_of({4, 6, 4})).claimed_tau == 5);
    CHECK(recognize_family(cone_of({3, 4})).claimed_tau == 4);
    CHECK(recognize_family(cone_of({4, 6})).kind == FamilyMatch::Kind::cone_of_cycles);

    Graph pendant(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}});
    CHECK(recognize_family(pendant).kind == FamilyMatch::Kind::other);
    CHECK(recognize_family(join(build_family(Family::complete, 2), disjoint_union(std::vector<Graph>{cycle(4), cycle(4)})))
              .kind == FamilyMatch::Kind::other);
}

TEST_CASE("threshold report on K_1 v C_4") {
    const ThresholdReport r = threshold_report(shared(wheel(4)), 4);
    CHECK(r.chi == 3);
    CHECK(r.family.claimed_tau == 4);
    REQUIRE(r.points.size() == 2);
    CHECK(r.points[0].status == PointStatus::strictly_less);
    CHECK(r.points[0].method == Method::exhaustive);
    CHECK(r.points[0].value == 3);
    CHECK(r.points[0].chromatic == 6);
    REQUIRE(r.points[0].witness.has_value());
    CHECK(count_colorings(*r.points[0].witness) == 3);
    CHECK(r.points[1].status == PointStatus::equal);
    CHECK(r.points[1].value == 72);
    CHECK(r.monotone_consistent);
    CHECK(r.agrees_with_claim == true);
}

TEST_CASE("threshold report falls back to constructions") {
    ThresholdOptions opts;
    opts.budget = 1000;
    const ThresholdReport w = threshold_report(shared(wheel(6)), 3, opts);
    REQUIRE(w.points.size() == 1);
    CHECK(w.points[0].method == Method::construction);
    CHECK(w.points[0].value == 3);

    const ThresholdReport k2 = threshold_report(shared(join(build_family(Family::complete, 2), cycle(4))), 4);
    CHECK(k2.chi == 4);
    CHECK(k2.family.claimed_tau == 5);
    REQUIRE(k2.points.size() == 1);
    CHECK(k2.points[0].status == PointStatus::strictly_less);
    CHECK(k2.points[0].method == Method::construction);
    CHECK(k2.points[0].value == 16);
    CHECK(k2.points[0].chromatic == 24);
    REQUIRE(k2.points[0].witness.has_value());
    CHECK(k2.points[0].witness->base() == join(build_family(Family::complete, 2), cycle(4)));

    opts.samples = 50;
    const ThresholdReport cc = threshold_report(shared(cone_of({4, 6, 4})), 5, opts);
    CHECK(cc.family.claimed_tau == 5);
    REQUIRE(cc.points.size() == 3);
    CHECK(cc.points[0].value == 0);
    CHECK(cc.points[0].method == Method::construction);
    CHECK(cc.points[1].value == 1280 * 66);
    CHECK(cc.points[1].status == PointStatus::strictly_less);
    CHECK(cc.points[2].method == Method::sampled);
    CHECK(cc.points[2].status == PointStatus::unverified);
    CHECK(cc.agrees_with_claim == true);

    const ThresholdReport two = threshold_report(shared(cone_of({4, 4})), 4, opts);
    CHECK(two.points[0].value == 3);
    CHECK(two.points[1].value == 1280);
}

TEST_CASE("threshold report sampling") {
    ThresholdOptions opts;
    opts.budget = 1;
    opts.samples = 200;
    opts.seed = 9;
    const ThresholdReport c6 = threshold_report(shared(cycle(6)), 3, opts);
    REQUIRE(c6.points.size() == 2);
    for (const auto& pt : c6.points) {
        CHECK(pt.method == Method::sampled);
        CHECK(pt.status == PointStatus::strictly_less);
        CHECK(pt.value == dp_closed_form::cycle(6, pt.m));
        REQUIRE(pt.witness.has_value());
    }
    const ThresholdReport again = threshold_report(shared(cycle(6)), 3, opts);
    CHECK(*again.points[1].witness == *c6.points[1].witness);
    CHECK_THROWS_AS(threshold_report(shared(cycle(5)), 2), InvalidArgument);
}

TEST_CASE("threshold report on odd cycles and chordal graphs") {
    const ThresholdReport c5 = threshold_report(shared(cycle(5)), 5);
    for (const auto& pt : c5.points) CHECK(pt.status == PointStatus::equal);
    CHECK(c5.agrees_with_claim == true);
    const ThresholdReport bt = threshold_report(shared(bowtie()), 4);
    CHECK(bt.chi == 3);
    for (const auto& pt : bt.points) CHECK(pt.status == PointStatus::equal);
}

TEST_CASE("monotonicity instances") {
    const MonotonicityReport k3 = monotonicity_check(shared(build_family(Family::complete, 3)), 1, 4);
    REQUIRE(k3.instances.size() == 4);
    for (const auto& inst : k3.instances) {
        CHECK(inst.premise == true);
        CHECK(inst.conclusion == Implication::holds);
    }
    CHECK(k3.instances[2].conclusion_value == 24);
    CHECK(k3.instances[3].conclusion_value == 120);

    const MonotonicityReport c4 = monotonicity_check(shared(cycle(4)), 1, 3);
    CHECK(c4.instances[2].premise == false);
    CHECK(c4.instances[2].conclusion == Implication::not_applicable);
    CHECK(c4.instances[1].premise == false);
    CHECK(c4.instances[0].premise == true);
    CHECK(c4.instances[0].conclusion == Implication::holds);
    CHECK(!c4.any_violation);

    ThresholdOptions opts;
    opts.budget = 100;
    opts.samples = 20;
    const MonotonicityReport c5 = monotonicity_check(shared(cycle(5)), 1, 3, opts);
    CHECK(c5.instances[2].method == Method::sampled);
    CHECK(c5.instances[2].conclusion == Implication::unverified);
}
