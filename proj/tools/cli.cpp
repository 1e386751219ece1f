#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nbly/errors.hpp"
#include "nbly/graph.hpp"
#include "nbly/harness.hpp"
#include "nbly/json_io.hpp"
#include "nbly/partition.hpp"
#include "nbly/render.hpp"

namespace nbly::cli {

namespace {

struct Options {
    std::string check;
    int max_weight = -1;  // -1: per-check default
    int q_order = -1;
    int x_order = -1;
    int n_parts = -1;
    int min_part = 1;
    std::string odd_sign = "empirical";
    std::string rule = "literal";
    std::string format = "text";
    std::string output;
    int threads = 0;
    std::string partition_text;
    int table_max = 20;
};

long long enum_cap_from_env() {
    if (const char* env = std::getenv("NBLY_ENUM_CAP")) {
        try {
            const long long cap = std::stoll(env);
            if (cap >= 1) return cap;
        } catch (const std::exception&) {
        }
        throw std::invalid_argument("NBLY_ENUM_CAP must be a positive integer");
    }
    return kDefaultEnumerationCap;
}

void emit(const Options& opt, const std::string& text, std::ostream& out) {
    if (opt.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opt.output, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + opt.output);
    file << text;
}

std::string coeff_row(const Series& s) {
    std::ostringstream os;
    for (int e = 0; e <= s.order(); ++e) os << (e ? "," : "") << s.coeff(e);
    return os.str();
}

std::string reports_to_text(const std::vector<harness::Report>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << "[" << status(r) << "] " << r.check << " " << r.params.dump();
        os << " (" << std::fixed << std::setprecision(2) << r.seconds << "s)\n";
        if (!r.note.empty()) os << "      " << r.note << "\n";
        for (const auto& [key, value] : r.counts)
            os << "      " << key << " = " << value << "\n";
        if (r.series) os << "      coefficients: " << coeff_row(*r.series) << "\n";
        for (const auto& m : r.mismatches)
            os << "      mismatch at " << m.location << ": expected " << m.expected
               << ", got " << m.actual << "\n";
    }
    return os.str();
}

std::string reports_to_csv(const std::vector<harness::Report>& reports) {
    /* A lone series-producing check exports its coefficient table; anything
     * else exports one row per check. */
    if (reports.size() == 1 && reports.front().series)
        return series_to_csv(*reports.front().series);
    std::ostringstream os;
    os << "check,status,mismatches\n";
    for (const auto& r : reports)
        os << r.check << "," << status(r) << "," << r.mismatches.size() << "\n";
    return os.str();
}

std::string reports_to_json(const std::vector<harness::Report>& reports) {
    const nlohmann::json j = reports;
    return j.dump(2) + "\n";
}

int first_failure_code(const std::vector<harness::Report>& reports) {
    const auto names = harness::all_check_names();
    for (const auto& r : reports) {
        if (r.pass) continue;
        const auto it = std::find(names.begin(), names.end(), r.check);
        return 10 + static_cast<int>(it == names.end() ? names.size()
                                                       : it - names.begin());
    }
    return 0;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    harness::RunConfig config;
    config.enum_cap = enum_cap_from_env();
    config.odd_sign =
        opt.odd_sign == "printed" ? OddSign::printed : OddSign::empirical;
    if (opt.max_weight >= 0) {
        config.rr_weight = opt.max_weight;
        config.sig_weight = opt.max_weight;
        config.prune_weight = opt.max_weight;
        config.ev_weight = opt.max_weight;
    }
    if (opt.q_order >= 0) {
        config.q_order = opt.q_order;
        config.gf_order = opt.q_order;
    }
    if (opt.x_order >= 0) config.x_order = opt.x_order;
    if (opt.n_parts >= 0) config.gf_nmax = opt.n_parts;

    if (opt.check == "all") {
        config.checks = harness::all_check_names();
    } else if (opt.check == "signatures") {
        config.checks = {"chain-signs", "signatures"};
    } else {
        config.checks = {opt.check};
    }

    const auto reports = harness::run_all(config);
    if (opt.format == "json")
        emit(opt, reports_to_json(reports), out);
    else if (opt.format == "csv")
        emit(opt, reports_to_csv(reports), out);
    else
        emit(opt, reports_to_text(reports), out);
    return first_failure_code(reports);
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
    const int max_weight = opt.max_weight >= 0 ? opt.max_weight : 30;
    const auto all = enumerate_neighborly(max_weight, enum_cap_from_env());

    struct Row {
        NeighborlyPartition np;
        long long w;
        int sgn;
        SignatureMultiset sig;
        int edges;
    };
    std::vector<Row> rows;
    for (const auto& np : all) {
        if (!np.mu1.empty() && np.mu1.front() < opt.min_part) continue;
        const auto g = build_graph(np);
        const auto [sgn, diag] = signature_closed(g);
        if (sgn == 0) continue;
        rows.push_back({np, weight(np), sgn, sig_multiset(g), prune(g).edge_count});
    }

    std::ostringstream os;
    if (opt.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json item = r.np;
            item["weight"] = r.w;
            item["sign"] = r.sgn;
            item["sig"] = r.sig.elements;
            item["gprime_edges"] = r.edges;
            j.push_back(item);
        }
        os << j.dump(2) << "\n";
    } else if (opt.format == "csv") {
        os << "weight,mu1,mu2,sign,sig,gprime_edges\n";
        auto quote = [](const std::vector<int>& v) {
            std::ostringstream q;
            q << "\"";
            for (std::size_t i = 0; i < v.size(); ++i) q << (i ? "," : "") << v[i];
            q << "\"";
            return q.str();
        };
        for (const auto& r : rows)
            os << r.w << "," << quote(r.np.mu1) << "," << quote(r.np.mu2) << ","
               << r.sgn << "," << quote(r.sig.elements) << "," << r.edges << "\n";
    } else {
        for (const auto& r : rows)
            os << "w=" << r.w << " sign=" << (r.sgn > 0 ? "+1" : "-1")
               << " SIG=" << format_multiset(r.sig) << " edges(G')=" << r.edges << "  "
               << format_partition(r.np) << "\n";
        os << "total: " << rows.size() << " admissible partitions of weight <= "
           << max_weight << "\n";
    }
    emit(opt, os.str(), out);
    return 0;
}

int cmd_table(const Options& opt, std::ostream& out) {
    std::ostringstream os;
    if (opt.format == "json") {
        nlohmann::json j;
        j["max"] = opt.table_max;
        std::vector<int> values;
        for (int n = 1; n <= opt.table_max; ++n) values.push_back(chain_sign(n));
        j["values"] = values;
        os << j.dump(2) << "\n";
    } else if (opt.format == "csv") {
        os << "n,b_n\n";
        for (int n = 1; n <= opt.table_max; ++n) os << n << "," << chain_sign(n) << "\n";
    } else {
        for (int n = 1; n <= opt.table_max; ++n)
            os << (n > 1 ? ", " : "") << chain_sign(n);
        os << "\n";
    }
    emit(opt, os.str(), out);
    return 0;
}

int cmd_show(const Options& opt, std::ostream& out) {
    const NeighborlyPartition np = parse_partition(opt.partition_text);
    const auto g = build_graph(np);
    const auto sig = sig_multiset(g);
    const auto [sgn, diag] = signature_closed(g);
    const PruneRule rule = opt.rule == "example" ? PruneRule::example_consistent
                                                 : PruneRule::literal;

    std::ostringstream os;
    if (opt.format == "json") {
        nlohmann::json j;
        j["partition"] = np;
        j["weight"] = weight(np);
        j["components"] = g.components;
        j["sig"] = sig.elements;
        j["admissible"] = sgn != 0;
        j["signature"] = sgn;
        if (sgn != 0) {
            const auto pg = prune(g, rule);
            j["gprime_edges"] = pg.edge_count;
            nlohmann::json comps = nlohmann::json::array();
            for (const auto& pc : pg.components)
                comps.push_back({{"labels", pc.labels}, {"edges", pc.edges}});
            j["gprime_components"] = comps;
        }
        os << j.dump(2) << "\n";
    } else {
        os << "partition " << format_partition(np) << "  |weight| = " << weight(np)
           << ", " << part_count(np) << " parts\n\nG:\n"
           << render_graph(np) << "\n\nSIG = " << format_multiset(sig) << "\n";
        if (sgn == 0) {
            os << "not admissible (a chain length is divisible by 3); signature = 0\n";
        } else {
            os << "admissible, sign = " << (sgn > 0 ? "+1" : "-1") << " (t=" << diag.t
               << ", s=" << diag.s << ")\n";
            const auto pg = prune(g, rule);
            os << "\nG' (" << (rule == PruneRule::literal ? "literal" : "example-consistent")
               << " rule, " << pg.edge_count << " edges):\n"
               << render_pruned(np, pg) << "\n\ncomponent types:";
            for (const auto t : classify_components(pg)) os << " " << component_type_name(t);
            os << "\n";
        }
    }
    emit(opt, os.str(), out);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"exact verification of neighborly-partition identities"};
    app.require_subcommand(1);

    const std::vector<std::string> checks = {"rr1",        "rr2",       "signatures",
                                             "prune",      "gf",        "functional",
                                             "classical",  "edgevertex", "all"};

    auto* verify = app.add_subcommand("verify", "run identity checks");
    verify->add_option("check", opt.check, "which check to run")
        ->required()
        ->check(CLI::IsMember(checks));
    verify->add_option("--max-weight", opt.max_weight, "enumeration weight bound");
    verify->add_option("--q-order", opt.q_order, "q truncation order");
    verify->add_option("--x-order", opt.x_order, "x truncation order");
    verify->add_option("--n-parts", opt.n_parts, "largest part-count stratum");
    verify->add_option("--odd-sign", opt.odd_sign, "odd-case sign convention")
        ->check(CLI::IsMember({"printed", "empirical"}));

    auto* enumerate = app.add_subcommand("enumerate", "list admissible partitions");
    enumerate->add_option("--max-weight", opt.max_weight, "enumeration weight bound");
    enumerate->add_option("--min-part", opt.min_part, "smallest allowed part")
        ->check(CLI::PositiveNumber);

    auto* table = app.add_subcommand("table", "print a value table");
    std::string table_name;
    table->add_option("name", table_name, "table name (bn = chain signs)")
        ->required()
        ->check(CLI::IsMember({"bn"}));
    table->add_option("--max", opt.table_max, "largest chain length")
        ->check(CLI::PositiveNumber);

    auto* show = app.add_subcommand("show", "render a partition graph");
    show->add_option("partition", opt.partition_text,
                     "mu1/mu2 (e.g. 1,2,3/3) or a bare multiset (e.g. 1,2,3,3)")
        ->required();
    show->add_option("--rule", opt.rule, "deletion-rule variant for G'")
        ->check(CLI::IsMember({"literal", "example"}));

    for (auto* sub : {verify, enumerate, table, show}) {
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--output", opt.output, "write output to a file");
        sub->add_option("--threads", opt.threads, "OpenMP thread count (0 = default)");
    }

    std::vector<const char*> argv;
    argv.push_back("nbly");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

#ifdef _OPENMP
    if (opt.threads > 0) omp_set_num_threads(opt.threads);
#endif

    try {
        if (verify->parsed()) return cmd_verify(opt, out);
        if (enumerate->parsed()) return cmd_enumerate(opt, out);
        if (table->parsed()) return cmd_table(opt, out);
        if (show->parsed()) return cmd_show(opt, out);
    } catch (const budget_error& e) {
        err << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace nbly::cli
