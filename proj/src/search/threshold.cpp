#include "dpcolor/threshold.hpp"

#include <algorithm>

#include "dpcolor/chordal.hpp"
#include "dpcolor/chromatic.hpp"
#include "dpcolor/constructions.hpp"
#include "dpcolor/counting.hpp"
#include "dpcolor/cover_ops.hpp"
#include "dpcolor/errors.hpp"
#include "dpcolor/random.hpp"

namespace dpc {
namespace {

std::string join_name(int p, int n) {
    return "K_" + std::to_string(p) + " v C_" + std::to_string(n);
}

// Vertex map sending the construction's layout onto g, cycle i of the
// construction going to g's cycle order[i].
std::vector<Vertex> layout_map(const Graph& built, const FamilyMatch& target, const std::vector<std::size_t>& order) {
    const FamilyMatch src = recognize_family(built);
    if (src.universal.size() != target.universal.size() || src.cycles.size() != order.size()) {
        throw CertificationError("construction layout does not match the recognized family");
    }
    std::vector<Vertex> phi(static_cast<std::size_t>(built.num_vertices()), -1);
    for (std::size_t i = 0; i < src.universal.size(); ++i) phi[src.universal[i]] = target.universal[i];
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto& from = src.cycles[i];
        const auto& to = target.cycles[order[i]];
        if (from.size() != to.size()) throw CertificationError("construction cycle lengths do not match");
        for (std::size_t j = 0; j < from.size(); ++j) phi[from[j]] = to[j];
    }
    return phi;
}

std::optional<Certified> construction_for(const FamilyMatch& fam, int m) {
    if (fam.kind == FamilyMatch::Kind::join_cycle) {
        const int p = static_cast<int>(fam.universal.size());
        const int n = static_cast<int>(fam.cycles[0].size());
        if (n % 2 != 0 || m != 2 + p) return std::nullopt;
        const int k = (n - 2) / 2;
        return p == 1 ? shifted_wheel_cover(k, 3) : kp_join_cycle_cover(p, k);
    }
    if (fam.kind == FamilyMatch::Kind::cone_of_cycles) {
        std::vector<int> lengths;
        for (const auto& c : fam.cycles) lengths.push_back(static_cast<int>(c.size()));
        const bool all_even = std::all_of(lengths.begin(), lengths.end(), [](int k) { return k % 2 == 0; });
        if (m == 3 && all_even) {
            return cone_of_cycles_cover(lengths.size() == 2 ? ConeKind::two_even : ConeKind::three_plus, lengths);
        }
        if (m == 4 && std::count(lengths.begin(), lengths.end(), 4) >= 2) {
            std::vector<int> reordered{4, 4};
            int skipped = 0;
            for (int k : lengths) {
                if (k == 4 && skipped < 2) {
                    ++skipped;
                } else {
                    reordered.push_back(k);
                }
            }
            return cone_of_cycles_cover(ConeKind::double_c4, reordered);
        }
    }
    return std::nullopt;
}

// The C_4 parts go first for double_c4; otherwise cycles keep their order.
std::vector<std::size_t> cycle_order(const FamilyMatch& fam, int m) {
    std::vector<std::size_t> order;
    if (fam.kind == FamilyMatch::Kind::cone_of_cycles && m == 4) {
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < fam.cycles.size(); ++i) {
            if (fam.cycles[i].size() == 4 && order.size() < 2) {
                order.push_back(i);
            } else {
                rest.push_back(i);
            }
        }
        order.insert(order.end(), rest.begin(), rest.end());
        return order;
    }
    for (std::size_t i = 0; i < fam.cycles.size(); ++i) order.push_back(i);
    return order;
}

struct SampleResult {
    BigInt least;
    std::optional<Cover> cover;
};

SampleResult sample_min(std::shared_ptr<const Graph> g, int m, std::uint64_t samples, std::uint64_t seed,
                        std::uint64_t stream) {
    CounterRng rng(seed, stream);
    const ColoringCounter counter(*g);
    SampleResult out;
    // The canonical cover is always a candidate, so the minimum is at most P.
    Cover best = canonical_cover(g, m);
    BigInt least = counter.count(best);
    for (std::uint64_t i = 0; i < samples; ++i) {
        Cover c = random_full_cover(g, m, rng);
        BigInt v = counter.count(c);
        if (v < least) {
            least = std::move(v);
            best = std::move(c);
        }
    }
    out.least = least;
    out.cover = std::move(best);
    return out;
}

bool within_budget(const Graph& g, int m, const BigInt& budget) {
    if (!g.is_connected()) {
        BigInt units = 0;
        for (const auto& vs : g.components()) units += dp_search_units(g.induced(vs), m);
        return units <= budget;
    }
    return dp_search_units(g, m) <= budget;
}

}  // namespace

const char* to_string(FamilyMatch::Kind kind) {
    switch (kind) {
        case FamilyMatch::Kind::chordal: return "chordal";
        case FamilyMatch::Kind::odd_cycle: return "odd_cycle";
        case FamilyMatch::Kind::join_cycle: return "join_cycle";
        case FamilyMatch::Kind::cone_of_cycles: return "cone_of_cycles";
        case FamilyMatch::Kind::other: return "other";
    }
    return "?";
}

const char* to_string(PointStatus s) {
    switch (s) {
        case PointStatus::equal: return "equal";
        case PointStatus::strictly_less: return "strictly_less";
        case PointStatus::unverified: return "unverified";
    }
    return "?";
}

const char* to_string(Method m) {
    switch (m) {
        case Method::exhaustive: return "exhaustive";
        case Method::construction: return "construction";
        case Method::sampled: return "sampled";
    }
    return "?";
}

const char* to_string(Implication i) {
    switch (i) {
        case Implication::holds: return "holds";
        case Implication::violated: return "violated";
        case Implication::not_applicable: return "not_applicable";
        case Implication::unverified: return "unverified";
    }
    return "?";
}

FamilyMatch recognize_family(const Graph& g) {
    FamilyMatch fam;
    const int n = g.num_vertices();
    if (n == 0) return fam;
    if (is_chordal(g)) {
        fam.kind = FamilyMatch::Kind::chordal;
        fam.name = "chordal";
        fam.claimed_tau = chromatic_number(g);
        return fam;
    }
    if (is_cycle_graph(g)) {
        fam.cycles.push_back(cycle_walk(g));
        if (n % 2 == 1) {
            fam.kind = FamilyMatch::Kind::odd_cycle;
            fam.name = "C_" + std::to_string(n);
            fam.claimed_tau = 3;
        } else {
            fam.name = "C_" + std::to_string(n);
        }
        return fam;
    }
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) {
            fam.universal.push_back(v);
        } else {
            rest.push_back(v);
        }
    }
    if (fam.universal.empty() || rest.empty()) return fam;
    const Graph h = g.induced(rest);
    for (const auto& comp : h.components()) {
        const Graph c = h.induced(comp);
        if (!is_cycle_graph(c)) {
            fam.cycles.clear();
            return fam;
        }
        std::vector<Vertex> walk;
        for (Vertex x : cycle_walk(c)) walk.push_back(rest[comp[x]]);
        fam.cycles.push_back(std::move(walk));
    }
    const int p = static_cast<int>(fam.universal.size());
    if (fam.cycles.size() == 1) {
        fam.kind = FamilyMatch::Kind::join_cycle;
        fam.name = join_name(p, static_cast<int>(fam.cycles[0].size()));
        fam.claimed_tau = 3 + p;
    } else if (p == 1) {
        fam.kind = FamilyMatch::Kind::cone_of_cycles;
        fam.name = "K_1 v (";
        int fours = 0;
        for (std::size_t i = 0; i < fam.cycles.size(); ++i) {
            const int k = static_cast<int>(fam.cycles[i].size());
            if (k == 4) ++fours;
            fam.name += (i ? " + C_" : "C_") + std::to_string(k);
        }
        fam.name += ")";
        fam.claimed_tau = fours >= 2 ? 5 : 4;
    } else {
        fam.cycles.clear();
    }
    return fam;
}

ThresholdReport threshold_report(std::shared_ptr<const Graph> g, int m_max, const ThresholdOptions& options) {
    if (!g || g->num_vertices() == 0) throw InvalidArgument("threshold_report needs a nonempty graph");
    const Polynomial poly = chromatic_polynomial(*g);
    ThresholdReport report;
    report.graph = g;
    report.family = recognize_family(*g);
    report.chi = chromatic_number(*g, poly);
    report.m_max = m_max;
    if (m_max < report.chi) {
        throw InvalidArgument("m_max " + std::to_string(m_max) + " is below the chromatic number " +
                              std::to_string(report.chi));
    }
    DpOptions dp_opts;
    dp_opts.budget = options.budget;
    dp_opts.shards = options.shards;

    for (int m = report.chi; m <= m_max; ++m) {
        ThresholdPoint pt;
        pt.m = m;
        pt.chromatic = poly(m);
        if (within_budget(*g, m, options.budget)) {
            DpResult r = dp_any(g, m, dp_opts);
            pt.method = Method::exhaustive;
            pt.value = r.value;
            pt.covers_examined = r.search_size;
            pt.status = r.value == pt.chromatic ? PointStatus::equal : PointStatus::strictly_less;
            if (pt.status == PointStatus::strictly_less) {
                if (r.witnesses.empty()) throw CertificationError("strict point without a witness");
                pt.witness = r.witnesses.front();
            }
        } else if (auto built = construction_for(report.family, m)) {
            const auto phi = layout_map(built->cover.base(), report.family, cycle_order(report.family, m));
            Cover moved = transport_cover(built->cover, g, phi);
            pt.method = Method::construction;
            pt.value = count_colorings(moved);
            if (pt.value != built->count) throw CertificationError("transported construction changed its count");
            pt.covers_examined = 1;
            pt.status = pt.value < pt.chromatic ? PointStatus::strictly_less : PointStatus::unverified;
            pt.note = built->certification_line();
            if (pt.status == PointStatus::strictly_less) pt.witness = std::move(moved);
        } else {
            SampleResult s = sample_min(g, m, options.samples, options.seed, static_cast<std::uint64_t>(m));
            pt.method = Method::sampled;
            pt.value = s.least;
            pt.covers_examined = options.samples;
            if (s.least < pt.chromatic) {
                pt.status = PointStatus::strictly_less;
                pt.witness = std::move(s.cover);
            } else {
                pt.status = PointStatus::unverified;
                pt.note = "budget refused exhaustive search; no sampled cover beat P";
            }
        }
        report.points.push_back(std::move(pt));
    }

    bool seen_equal = false;
    for (const auto& pt : report.points) {
        if (pt.status == PointStatus::equal) seen_equal = true;
        if (pt.status == PointStatus::strictly_less && seen_equal) report.monotone_consistent = false;
    }
    if (report.family.claimed_tau) {
        const int tau = *report.family.claimed_tau;
        bool agrees = true;
        for (const auto& pt : report.points) {
            if (pt.m >= tau && pt.status == PointStatus::strictly_less) agrees = false;
            if (pt.m == tau - 1 && pt.status == PointStatus::equal) agrees = false;
        }
        report.agrees_with_claim = agrees;
    }
    return report;
}

Graph join_clique(int p, const Graph& g) {
    if (p < 0) throw InvalidArgument("clique size must be non-negative");
    if (p == 0) return g;
    return join(build_family(Family::complete, p), g);
}

MonotonicityReport monotonicity_check(std::shared_ptr<const Graph> g, int p_max, int m_max,
                                      const ThresholdOptions& options) {
    if (!g || g->num_vertices() == 0) throw InvalidArgument("monotonicity_check needs a nonempty graph");
    if (p_max < 1 || m_max < 1) throw InvalidArgument("p_max and m_max must be at least 1");
    MonotonicityReport report;
    report.graph = g;
    DpOptions dp_opts;
    dp_opts.budget = options.budget;
    dp_opts.shards = options.shards;

    for (int p = 0; p < p_max; ++p) {
        auto base = std::make_shared<const Graph>(join_clique(p, *g));
        auto next = std::make_shared<const Graph>(join_clique(p + 1, *g));
        const Polynomial pb = chromatic_polynomial(*base);
        const Polynomial pn = chromatic_polynomial(*next);
        for (int m = 1; m <= m_max; ++m) {
            MonotonicityInstance inst;
            inst.p = p;
            inst.m = m;
            inst.premise_chromatic = pb(m);
            inst.conclusion_chromatic = pn(m + 1);
            if (!within_budget(*base, m, options.budget)) {
                inst.conclusion = Implication::unverified;
                report.instances.push_back(std::move(inst));
                continue;
            }
            inst.premise_value = dp_any(base, m, dp_opts).value;
            inst.premise = inst.premise_value == inst.premise_chromatic;
            if (!*inst.premise) {
                inst.conclusion = Implication::not_applicable;
            } else if (within_budget(*next, m + 1, options.budget)) {
                inst.method = Method::exhaustive;
                inst.conclusion_value = dp_exact(next, m + 1, dp_opts).value;
                inst.conclusion =
                    inst.conclusion_value == inst.conclusion_chromatic ? Implication::holds : Implication::violated;
            } else {
                inst.method = Method::sampled;
                const auto stream = static_cast<std::uint64_t>(p) << 32 | static_cast<std::uint64_t>(m + 1);
                inst.conclusion_value = sample_min(next, m + 1, options.samples, options.seed, stream).least;
                inst.conclusion = inst.conclusion_value < inst.conclusion_chromatic ? Implication::violated
                                                                                     : Implication::unverified;
            }
            if (inst.conclusion == Implication::violated) report.any_violation = true;
            report.instances.push_back(std::move(inst));
        }
    }
    return report;
}

}  // namespace dpc
