#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "dpcolor/chromatic.hpp"
#include "dpcolor/constructions.hpp"
#include "dpcolor/dp.hpp"
#include "dpcolor/errors.hpp"
#include "dpcolor/family_spec.hpp"
#include "dpcolor/suites.hpp"
#include "dpcolor/threshold.hpp"

using namespace dpc;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kPass = 0, kCheckFailure = 1, kRefused = 2, kInputError = 3 };

struct Config {
    std::string family;
    std::string file;
    std::string m = "3";
    std::string budget = "1000000000";
    int shards = 0;
    std::uint64_t seed = 0;
    std::string emit = "table";
    std::string output;
    bool allow_refusal = false;
    // verify
    std::string suite = "all";
    // construct
    std::string name;
    int k = 1;
    int p = 2;
    std::vector<int> lengths;
    // threshold
    int m_max = 4;
    std::uint64_t samples = 1000;
};

json big(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    return v.str();
}

BigInt parse_budget(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw InvalidArgument("budget must be a nonnegative integer, got '" + s + "'");
    }
    return BigInt(s);
}

std::shared_ptr<const Graph> load_graph(const Config& c) {
    if (c.family.empty() == c.file.empty()) throw InvalidArgument("give exactly one of --family and --file");
    if (!c.family.empty()) return std::make_shared<const Graph>(parse_family_spec(c.family));
    std::ifstream in(c.file);
    if (!in) throw InvalidArgument("cannot open '" + c.file + "'");
    return std::make_shared<const Graph>(read_graph(in));
}

std::string graph_name(const Config& c) { return c.family.empty() ? c.file : c.family; }

class Emitter {
public:
    Emitter(const Config& c, const std::string& cmd) : config_(c) {
        doc_["command"] = cmd;
        doc_["seed"] = c.seed;
        out_ << "# dpcolor " << cmd << " seed=" << c.seed << "\n";
    }
    std::ostream& text() { return out_; }
    json& doc() { return doc_; }

    void flush() {
        std::string body = config_.emit == "json" ? doc_.dump(2) + "\n" : out_.str();
        if (config_.output.empty()) {
            std::cout << body;
        } else {
            std::ofstream f(config_.output);
            if (!f) throw InvalidArgument("cannot write '" + config_.output + "'");
            f << body;
        }
    }

private:
    const Config& config_;
    std::ostringstream out_;
    json doc_;
};

int cmd_chromatic(const Config& c) {
    const auto g = load_graph(c);
    const auto [lo, hi] = parse_m_range(c.m);
    const Polynomial p = chromatic_polynomial(*g);
    Emitter e(c, "chromatic");
    e.text() << "graph " << graph_name(c) << "\npolynomial " << p.str() << "\ncoefficients";
    json coeffs = json::array();
    for (const auto& a : p.coefficients()) {
        e.text() << " " << a.str();
        coeffs.push_back(big(a));
    }
    e.text() << "\nm\tP\n";
    json values = json::array();
    for (int m = lo; m <= hi; ++m) {
        const BigInt v = p(m);
        e.text() << m << "\t" << v.str() << "\n";
        values.push_back({{"m", m}, {"value", big(v)}});
    }
    e.doc()["graph"] = graph_name(c);
    e.doc()["coefficients"] = coeffs;
    e.doc()["values"] = values;
    e.flush();
    return kPass;
}

int cmd_dp(const Config& c) {
    const auto g = load_graph(c);
    const auto [lo, hi] = parse_m_range(c.m);
    DpOptions opts;
    opts.budget = parse_budget(c.budget);
    opts.shards = c.shards;
    Emitter e(c, "dp");
    e.text() << "graph " << graph_name(c) << "\n";
    e.doc()["graph"] = graph_name(c);
    json results = json::array();
    int status = kPass;
    for (int m = lo; m <= hi; ++m) {
        const auto start = std::chrono::steady_clock::now();
        try {
            const DpResult r = dp_any(g, m, opts);
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            std::cerr << "m=" << m << " wall " << secs << " s\n";
            const BigInt p = chromatic_polynomial(*g)(m);
            e.text() << "m=" << m << " value=" << r.value.str() << " P=" << p.str()
                     << " search_size=" << r.search_size.str() << "\n";
            json row{{"m", m}, {"value", big(r.value)}, {"chromatic", big(p)}, {"search_size", big(r.search_size)}};
            if (!r.witnesses.empty()) {
                const std::string w = format_cover(r.witnesses.front());
                e.text() << "witness\n" << w;
                row["witness"] = w;
            }
            results.push_back(row);
        } catch (const BudgetExceeded& ex) {
            e.text() << "m=" << m << " refused required=" << ex.required() << " budget=" << c.budget << "\n";
            results.push_back({{"m", m}, {"refused", true}, {"required", ex.required()}});
            if (!c.allow_refusal) {
                std::cerr << ex.what() << "\n";
                status = kRefused;
                break;
            }
        }
    }
    e.doc()["results"] = results;
    e.flush();
    return status;
}

int cmd_verify(const Config& c) {
    SuiteOptions opts;
    opts.seed = c.seed;
    opts.shards = c.shards;
    opts.budget = parse_budget(c.budget);
    const auto rows = run_suite(c.suite, opts);
    Emitter e(c, "verify");
    e.text() << "suite " << c.suite << "\nclaim\tinstance\texpected\tcomputed\tstatus\n";
    json arr = json::array();
    std::size_t failed = 0;
    for (const auto& r : rows) {
        e.text() << r.claim << "\t" << r.instance << "\t" << r.expected << "\t" << r.computed << "\t"
                 << to_string(r.status) << "\n";
        arr.push_back({{"claim", r.claim},
                       {"instance", r.instance},
                       {"expected", r.expected},
                       {"computed", r.computed},
                       {"status", to_string(r.status)}});
        if (r.status == CheckStatus::fail) ++failed;
    }
    e.text() << "rows=" << rows.size() << " failed=" << failed << "\n";
    e.doc()["suite"] = c.suite;
    e.doc()["rows"] = arr;
    e.doc()["failed"] = failed;
    e.flush();
    return failed == 0 ? kPass : kCheckFailure;
}

Certified build(const Config& c) {
    if (c.name == "shifted-wheel") return shifted_wheel_cover(c.k, c.m.empty() ? 3 : parse_m_range(c.m).first);
    if (c.name == "kp-join-cycle") return kp_join_cycle_cover(c.p, c.k);
    const std::vector<std::pair<std::string, ConeKind>> cones{
        {"two-even", ConeKind::two_even}, {"three-plus", ConeKind::three_plus}, {"double-c4", ConeKind::double_c4}};
    for (const auto& [name, kind] : cones) {
        if (c.name != name) continue;
        std::vector<int> lengths = c.lengths;
        if (lengths.empty()) lengths = kind == ConeKind::three_plus ? std::vector<int>{4, 4, 4} : std::vector<int>{4, 4};
        return cone_of_cycles_cover(kind, lengths);
    }
    throw InvalidArgument("unknown construction '" + c.name +
                          "' (shifted-wheel, kp-join-cycle, two-even, three-plus, double-c4)");
}

int cmd_construct(const Config& c) {
    const Certified cert = build(c);
    Emitter e(c, "construct");
    const std::string cover = format_cover(cert.cover);
    const BigInt p = chromatic_polynomial(cert.cover.base())(cert.cover.fold());
    e.text() << "construction " << c.name << "\n" << cover << cert.certification_line() << "\n"
             << "P=" << p.str() << "\n";
    e.doc()["construction"] = c.name;
    e.doc()["graph"] = format_graph(cert.cover.base());
    e.doc()["cover"] = cover;
    e.doc()["count"] = big(cert.count);
    e.doc()["expected"] = cert.expected;
    e.doc()["chromatic"] = big(p);
    e.flush();
    return kPass;
}

int cmd_threshold(const Config& c) {
    const auto g = load_graph(c);
    ThresholdOptions opts;
    opts.budget = parse_budget(c.budget);
    opts.shards = c.shards;
    opts.seed = c.seed;
    opts.samples = c.samples;
    const ThresholdReport r = threshold_report(g, c.m_max, opts);
    Emitter e(c, "threshold");
    e.text() << "graph " << graph_name(c) << "\nfamily " << to_string(r.family.kind) << " " << r.family.name
             << "\nchi " << r.chi << "\nclaimed_tau "
             << (r.family.claimed_tau ? std::to_string(*r.family.claimed_tau) : "none") << "\n"
             << "m\tstatus\tmethod\tvalue\tP\tnote\n";
    json pts = json::array();
    for (const auto& pt : r.points) {
        e.text() << pt.m << "\t" << to_string(pt.status) << "\t" << to_string(pt.method) << "\t" << pt.value.str()
                 << "\t" << pt.chromatic.str() << "\t" << pt.note << "\n";
        json row{{"m", pt.m},
                 {"status", to_string(pt.status)},
                 {"method", to_string(pt.method)},
                 {"value", big(pt.value)},
                 {"chromatic", big(pt.chromatic)},
                 {"covers_examined", big(pt.covers_examined)},
                 {"note", pt.note}};
        if (pt.witness) {
            const std::string w = format_cover(*pt.witness);
            e.text() << "witness m=" << pt.m << "\n" << w;
            row["witness"] = w;
        }
        pts.push_back(row);
    }
    const std::string agrees = r.agrees_with_claim ? (*r.agrees_with_claim ? "yes" : "no") : "no claim";
    e.text() << "monotone_consistent " << (r.monotone_consistent ? "yes" : "no") << "\nagrees_with_claim " << agrees
             << "\n";
    e.doc()["graph"] = graph_name(c);
    e.doc()["family"] = to_string(r.family.kind);
    e.doc()["chi"] = r.chi;
    e.doc()["claimed_tau"] = r.family.claimed_tau ? json(*r.family.claimed_tau) : json(nullptr);
    e.doc()["points"] = pts;
    e.doc()["monotone_consistent"] = r.monotone_consistent;
    e.doc()["agrees_with_claim"] = agrees;
    e.flush();
    return (r.monotone_consistent && r.agrees_with_claim.value_or(true)) ? kPass : kCheckFailure;
}

void env_overrides(Config& c) {
    if (const char* b = std::getenv("DPCOLOR_BUDGET")) c.budget = b;
    if (const char* s = std::getenv("DPCOLOR_SHARDS")) {
        try {
            c.shards = std::stoi(s);
        } catch (const std::exception&) {
            throw InvalidArgument(std::string("DPCOLOR_SHARDS must be an integer, got '") + s + "'");
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    Config c;
    CLI::App app{"DP-coloring computations and checks"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub, bool graph) {
        if (graph) {
            sub->add_option("--family", c.family, "family spec, e.g. cycle:4, wheel:5, join:2:cycle:4");
            sub->add_option("--file", c.file, "graph file");
        }
        sub->add_option("--budget", c.budget, "search budget in covers x vertices (env DPCOLOR_BUDGET)");
        sub->add_option("--shards", c.shards, "worker threads, 0 for all cores (env DPCOLOR_SHARDS)");
        sub->add_option("--seed", c.seed, "seed for sampled modes");
        sub->add_option("--emit", c.emit, "table or json")->check(CLI::IsMember({"table", "json"}));
        sub->add_option("--output", c.output, "write output here instead of stdout");
    };

    auto* chromatic = app.add_subcommand("chromatic", "chromatic polynomial and its values");
    common(chromatic, true);
    chromatic->add_option("--m", c.m, "m or a..b");

    auto* dp = app.add_subcommand("dp", "exhaustive DP color function");
    common(dp, true);
    dp->add_option("--m", c.m, "m or a..b");
    dp->add_flag("--allow-refusal", c.allow_refusal, "report budget refusals and exit 0");

    auto* verify = app.add_subcommand("verify", "run a check suite");
    common(verify, false);
    verify->add_option("--suite", c.suite, "suite name or all");

    auto* construct = app.add_subcommand("construct", "build a certified cover");
    common(construct, false);
    construct->add_option("name", c.name, "shifted-wheel, kp-join-cycle, two-even, three-plus, double-c4")->required();
    construct->add_option("--k", c.k, "cycle length 2k+2");
    construct->add_option("--m", c.m, "fold (shifted-wheel)");
    construct->add_option("--p", c.p, "clique size (kp-join-cycle)");
    construct->add_option("--lengths", c.lengths, "cycle lengths (cone constructions)")->delimiter(',');

    auto* threshold = app.add_subcommand("threshold", "per-m equality status up to --m-max");
    common(threshold, true);
    threshold->add_option("--m-max", c.m_max, "largest m");
    threshold->add_option("--samples", c.samples, "random covers per sampled m");

    try {
        env_overrides(c);
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        const int rc = app.exit(ex);
        return rc == 0 ? kPass : kInputError;
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kInputError;
    }
    if (c.shards <= 0) c.shards = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));

    try {
        if (*chromatic) return cmd_chromatic(c);
        if (*dp) return cmd_dp(c);
        if (*verify) return cmd_verify(c);
        if (*construct) return cmd_construct(c);
        if (*threshold) return cmd_threshold(c);
    } catch (const BudgetExceeded& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kRefused;
    } catch (const CertificationError& ex) {
        std::cerr << "certification failed: " << ex.what() << "\n";
        return kCheckFailure;
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
