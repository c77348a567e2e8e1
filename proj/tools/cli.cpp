#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dsrpm/connectivity.hpp"
#include "dsrpm/errors.hpp"
#include "dsrpm/family.hpp"
#include "dsrpm/graph6.hpp"
#include "dsrpm/harness.hpp"
#include "dsrpm/matching.hpp"
#include "dsrpm/quotient.hpp"
#include "dsrpm/report.hpp"
#include "dsrpm/spectra.hpp"

namespace dsrpm::cli {

namespace {

struct Options {
    std::string g6;
    std::string edges_file;
    std::optional<int> n;
    std::optional<int> k;
    std::optional<int> s;
    std::vector<int> parts;
    std::string blocks;
    double tol = kDefaultSpectralTol;
    std::uint64_t seed = 42;
    std::uint64_t trials = 0;
    int threads = 1;
    bool json = false;
    std::string chunk;
    std::string emit = "table";
    std::string suite;
    bool sweep = false;
    int n_min = 14;
    int n_max = 40;
};

// Usage errors raised after CLI11 parsing succeeded.
class UsageError : public Error {
public:
    using Error::Error;
};

void add_graph_flags(CLI::App* sub, Options& o) {
    sub->add_option("--g6", o.g6, "input graph in graph6");
    sub->add_option("--edges", o.edges_file, "input graph as an edge-list file");
    sub->add_option("--n", o.n, "order");
    sub->add_option("--k", o.k, "connectivity parameter");
    sub->add_option("--s", o.s, "cut size");
    sub->add_option("--parts", o.parts, "odd component orders")->delimiter(',');
}

void add_common_flags(CLI::App* sub, Options& o) {
    sub->add_option("--tol", o.tol, "bracket width for spectral radius estimates");
    sub->add_option("--seed", o.seed, "seed for randomized suites");
    sub->add_option("--trials", o.trials, "number of random trials");
    sub->add_option("--threads", o.threads, "worker threads for suites")->check(CLI::PositiveNumber);
    sub->add_flag("--json", o.json, "machine-readable report");
    sub->add_option("--chunk", o.chunk, "process chunk i/m (0 <= i < m) of an enumeration");
}

int require(const std::optional<int>& v, const char* flag) {
    if (!v) throw UsageError(std::string("missing required flag ") + flag);
    return *v;
}

FamilySpec spec_from(const Options& o) {
    FamilySpec spec{require(o.n, "--n"), require(o.s, "--s"), o.parts};
    if (spec.parts.empty()) throw UsageError("missing required flag --parts");
    spec.validate();
    return spec;
}

// Graph from --g6, --edges, or family parameters (--n with --k, or --n --s [--parts]).
Graph load_graph(const Options& o) {
    if (!o.g6.empty()) return parse_graph6(o.g6);
    if (!o.edges_file.empty()) {
        std::ifstream in(o.edges_file);
        if (!in) throw UsageError("cannot open edge list " + o.edges_file);
        return parse_edge_list(in);
    }
    if (o.n && o.s && !o.parts.empty()) return proof_family(spec_from(o));
    if (o.n && o.s) return cut_family(*o.n, *o.s);
    if (o.n && o.k) return extremal_family(*o.n, *o.k);
    throw UsageError("no input graph: give --g6, --edges, or --n with --k / --s");
}

std::pair<int, int> parse_chunk(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) throw UsageError("--chunk expects i/m");
    try {
        return {std::stoi(text.substr(0, slash)), std::stoi(text.substr(slash + 1))};
    } catch (const std::logic_error&) {
        throw UsageError("--chunk expects integers i/m");
    }
}

Json bracket(const SpectralEstimate& e) {
    return {{"value", format_value(e.value)},
            {"lo", format_value(e.lo)},
            {"hi", format_value(e.hi)},
            {"residual", format_value(e.residual)},
            {"iterations", e.iterations}};
}

Json coefficients(const ExactPolynomial& p) {
    Json arr = Json::array();
    for (const Rational& c : p.descending()) {
        if (boost::multiprecision::denominator(c) == 1 && boost::multiprecision::abs(c) < Rational{Integer{1} << 62})
            arr.push_back(boost::multiprecision::numerator(c).convert_to<long long>());
        else
            arr.push_back(to_string(c));
    }
    return arr;
}

Json basic_info(const Graph& g) {
    return {{"graph6", write_graph6(g)}, {"order", g.order()}, {"edges", g.edge_count()}, {"connected", is_connected(g)}};
}

Json spectra_info(const Graph& g, double tol) {
    Json j = basic_info(g);
    const DistanceMatrix d = distance_matrix(g);
    j["wiener"] = wiener_index(d);
    j["wiener_bound"] = to_string(mu_lower_bound_wiener(d));
    j["max_row_sum"] = d.max_row_sum();
    j["diameter"] = d.diameter();
    if (g.order() >= 2) j["mu"] = bracket(distance_spectral_radius(d, tol));
    return j;
}

Json matching_info(const Graph& g) {
    Json j = basic_info(g);
    const Matching m = max_matching(g);
    Json edges = Json::array();
    for (auto [u, v] : m.edges) edges.push_back({u, v});
    j["matching_number"] = m.size();
    j["matching"] = edges;
    j["perfect_matching"] = 2 * m.size() == g.order();
    const TutteSearch t = tutte_certificate(g);
    switch (t.verdict) {
        case TutteVerdict::certificate:
            j["tutte_certificate"] = {{"S", t.certificate->s.members()}, {"odd_components", t.certificate->odd_comp_count}};
            break;
        case TutteVerdict::none: j["tutte_certificate"] = nullptr; break;
        case TutteVerdict::unknown: j["tutte_certificate"] = "unknown"; break;
    }
    return j;
}

Json fractional_info(const Graph& g) {
    Json j = basic_info(g);
    const FractionalResult f = fractional_pm(g);
    j["fractional_pm"] = f.has_fractional_pm();
    if (f.witness) {
        Json w = Json::array();
        for (std::size_t i = 0; i < f.witness->edges.size(); ++i) {
            if (f.witness->weights[i].halves == 0) continue;
            w.push_back({f.witness->edges[i].first, f.witness->edges[i].second, to_string(f.witness->weights[i])});
        }
        j["witness"] = w;
    }
    if (f.violation) j["violation"] = {{"S", f.violation->s.members()}, {"isolated", f.violation->isolated}};
    return j;
}

Partition parse_blocks(const std::string& text, int n) {
    Partition pi;
    std::stringstream ss(text);
    std::string block;
    while (std::getline(ss, block, '|')) {
        VertexSet b;
        std::stringstream bs(block);
        std::string item;
        while (std::getline(bs, item, ',')) {
            try {
                const int v = std::stoi(item);
                if (v < 0 || v >= n) throw UsageError("block member out of range: " + item);
                b.insert(v);
            } catch (const std::logic_error&) {
                throw UsageError("bad block member '" + item + "'");
            }
        }
        pi.blocks.push_back(b);
    }
    return pi;
}

Json quotient_info(const Options& o) {
    Graph g;
    Partition pi;
    std::optional<ExactPolynomial> closed;
    if (!o.g6.empty() || !o.edges_file.empty()) {
        g = load_graph(o);
        if (o.blocks.empty()) throw UsageError("--blocks is required with an explicit graph");
        pi = parse_blocks(o.blocks, g.order());
    } else if (o.n && o.s && !o.parts.empty()) {
        const FamilySpec spec = spec_from(o);
        g = proof_family(spec);
        pi.blocks.push_back(VertexSet::range(0, spec.s));
        int offset = spec.s;
        for (int p : spec.parts) {
            pi.blocks.push_back(VertexSet::range(offset, p));
            offset += p;
        }
    } else if (o.n && (o.s || o.k)) {
        const int s = o.s ? *o.s : *o.k;
        g = cut_family(*o.n, s);
        pi.blocks = cut_family_partition(*o.n, s);
        closed = paper_poly_B2(*o.n, s);
    } else {
        throw UsageError("quotient needs --n with --k / --s (optionally --parts), or a graph with --blocks");
    }
    const DistanceMatrix d = distance_matrix(g);
    const ExactMatrix m = ExactMatrix::from(d);
    Json j = basic_info(g);
    Json blocks = Json::array();
    for (VertexSet b : pi.blocks) blocks.push_back(b.members());
    j["blocks"] = blocks;
    j["equitable"] = is_equitable(m, pi);
    const ExactMatrix q = quotient_matrix(m, pi);
    Json rows = Json::array();
    for (int i = 0; i < q.order(); ++i) {
        Json row = Json::array();
        for (int c = 0; c < q.order(); ++c) row.push_back(to_string(q(i, c)));
        rows.push_back(row);
    }
    j["quotient"] = rows;
    if (q.order() <= 8) {
        const ExactPolynomial cp = char_poly(q);
        j["char_poly"] = coefficients(cp);
        if (closed) {
            j["closed_form"] = coefficients(*closed);
            j["closed_form_matches"] = cp == *closed;
        }
        if (g.order() >= 2) {
            try {
                const RootBracket root = largest_root(cp, mu_lower_bound_wiener(d), Rational{d.max_row_sum()});
                j["largest_root"] = {{"lo", format_value(to_long_double(root.lo))}, {"hi", format_value(to_long_double(root.hi))}};
            } catch (const BracketError& e) {
                j["largest_root"] = std::string("unavailable: ") + e.what();
            }
        }
    }
    return j;
}

SuiteReport run_verify(const Options& o) {
    HarnessOptions h;
    h.threads = o.threads;
    h.tol = o.tol;
    h.progress = &std::cerr;
    const std::string& which = o.suite;
    if (which == "lemmas") return lemma_suites(o.seed, h);
    if (which == "corollary14") return corollary_comparison_suite(o.n_min, o.n_max, h);
    if (which == "theorem13-family") return verify_extremal_family(require(o.n, "--n"), require(o.k, "--k"), h);
    if (which == "ordering-chain") return verify_ordering_chain(spec_from(o), require(o.k, "--k"), h);
    if (which == "probe13") {
        if (o.sweep) return below_threshold_sweep(require(o.k, "--k"), o.trials ? o.trials : 1000, o.seed, h);
        return probe_theorem_1_3(require(o.n, "--n"), require(o.k, "--k"), o.trials ? o.trials : 10000, o.seed, h);
    }
    if (which == "theorem11") {
        const int n = require(o.n, "--n");
        if (n <= 8) {
            std::optional<MaskRange> range;
            if (!o.chunk.empty()) {
                auto [i, m] = parse_chunk(o.chunk);
                range = chunk_range(n, i, m);
            }
            return exhaustive_theorem_1_1(n, h, range);
        }
        return sampled_theorem_1_1(n, o.trials ? o.trials : 100000, o.seed, h);
    }
    throw UsageError("unknown suite '" + which + "'");
}

void print_table(std::ostream& out, const Json& j, const std::string& indent = "") {
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            out << indent << key << ":\n";
            print_table(out, value, indent + "  ");
        } else if (value.is_string()) {
            out << indent << key << ": " << value.get<std::string>() << '\n';
        } else {
            out << indent << key << ": " << value.dump() << '\n';
        }
    }
}

void print_suite_table(std::ostream& out, const SuiteReport& r) {
    out << "suite: " << r.suite << '\n'
        << "parameters: " << r.parameters.dump() << '\n'
        << "cases: " << r.cases << '\n'
        << "violations: " << r.violations.size() << '\n';
    for (const auto& v : r.violations) out << "  - " << v.predicate << " [" << v.witness << "]\n";
    for (const auto& [key, value] : r.stats.items()) {
        if (value.is_array() && value.size() > 4) {
            out << key << ": [" << value.size() << " entries]\n";
        } else {
            out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        }
    }
    out << "result: " << (r.passed() ? "PASS" : "FAIL") << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Distance spectral radius and perfect matching verification", "dsrpm"};
    app.require_subcommand(1);
    Options o;

    auto* family = app.add_subcommand("family", "construct K_k v (kK1 u K3 u K_{n-2k-3})");
    auto* proof = app.add_subcommand("proof-family", "construct K_s v (K_n1 u ... u K_nq)");
    auto* spectra = app.add_subcommand("spectra", "distance spectral radius, Wiener index");
    auto* matching = app.add_subcommand("matching", "maximum matching and Tutte certificate");
    auto* fractional = app.add_subcommand("fractional", "fractional perfect matching witness");
    auto* quotient = app.add_subcommand("quotient", "equitable quotient matrix and characteristic polynomial");
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    auto* enumerate = app.add_subcommand("enumerate", "labeled small-order scan (resumable with --chunk)");

    for (auto* sub : {family, proof, spectra, matching, fractional, quotient, verify, enumerate}) {
        add_graph_flags(sub, o);
        add_common_flags(sub, o);
    }
    for (auto* sub : {family, proof})
        sub->add_option("--emit", o.emit, "output form")->check(CLI::IsMember({"g6", "edges", "json", "table"}));
    quotient->add_option("--blocks", o.blocks, "partition as '0,1|2,3|...'");
    verify->add_option("suite", o.suite, "lemmas|theorem11|theorem13-family|ordering-chain|probe13|corollary14")
        ->required()
        ->check(CLI::IsMember({"lemmas", "theorem11", "theorem13-family", "ordering-chain", "probe13", "corollary14"}));
    verify->add_flag("--sweep", o.sweep, "probe13: exploratory sweep of orders below 8k + 6");
    verify->add_option("--n-min", o.n_min, "corollary14: smallest even order");
    verify->add_option("--n-max", o.n_max, "corollary14: largest even order");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    Json report;
    report["schema_version"] = kReportSchemaVersion;
    report["command"] = args;
    Json results = Json::array();
    std::optional<SuiteReport> suite;

    try {
        if (family->parsed() || proof->parsed()) {
            const Graph g = family->parsed() ? extremal_family(require(o.n, "--n"), require(o.k, "--k"))
                                             : proof_family(spec_from(o));
            if (o.emit == "g6" && !o.json) {
                out << write_graph6(g) << '\n';
                return kExitOk;
            }
            if (o.emit == "edges" && !o.json) {
                out << write_edge_list(g);
                return kExitOk;
            }
            if (o.emit == "json") o.json = true;
            results.push_back(basic_info(g));
        } else if (spectra->parsed()) {
            results.push_back(spectra_info(load_graph(o), o.tol));
        } else if (matching->parsed()) {
            results.push_back(matching_info(load_graph(o)));
        } else if (fractional->parsed()) {
            results.push_back(fractional_info(load_graph(o)));
        } else if (quotient->parsed()) {
            results.push_back(quotient_info(o));
        } else if (verify->parsed()) {
            suite = run_verify(o);
        } else if (enumerate->parsed()) {
            const int n = require(o.n, "--n");
            std::optional<MaskRange> range;
            if (!o.chunk.empty()) {
                auto [i, m] = parse_chunk(o.chunk);
                range = chunk_range(n, i, m);
            }
            HarnessOptions h;
            h.threads = o.threads;
            h.tol = o.tol;
            h.progress = &err;
            suite = exhaustive_theorem_1_1(n, h, range);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    report["results"] = results;
    Json violations = Json::array();
    if (suite) {
        report["suite"] = suite->to_json();
        violations = report["suite"]["violations"];
    }
    report["violations"] = violations;

    if (o.json) {
        out << report.dump(2) << '\n';
    } else if (suite) {
        print_suite_table(out, *suite);
    } else {
        for (const auto& r : results) print_table(out, r);
    }
    return violations.empty() ? kExitOk : kExitViolation;
}

}  // namespace dsrpm::cli
