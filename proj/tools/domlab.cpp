// domlab command-line tool.
//
// Exit codes: 0 ok, 1 usage or parse error, 2 infeasible, 3 discrepancy.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "domlab/domination.hpp"
#include "domlab/edge_list.hpp"
#include "domlab/family_spec.hpp"
#include "domlab/solver.hpp"
#include "domlab/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;

struct GraphSource {
    std::string family;
    std::string file;
};

void add_source(CLI::App* cmd, GraphSource& src) {
    auto* fam = cmd->add_option("--family", src.family, "family spec, e.g. cycle:7 or prism:cycle:6");
    auto* file = cmd->add_option("--file", src.file, "edge-list file");
    fam->excludes(file);
}

domlab::Graph load(const GraphSource& src) {
    if (!src.family.empty()) return domlab::parse_family(src.family);
    if (!src.file.empty()) return domlab::read_edge_list_file(src.file);
    throw std::invalid_argument("one of --family or --file is required");
}

std::string describe_source(const GraphSource& src) { return src.family.empty() ? src.file : src.family; }

int report_usage(const std::exception& e) {
    if (const auto* fe = dynamic_cast<const domlab::FamilySpecError*>(&e)) {
        std::cerr << "error: " << fe->what() << " (token \"" << fe->token() << "\")\n";
    } else {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kExitUsage;
}

int run_gamma(const GraphSource& src, int k, const std::string& variant_text) {
    const auto variant = domlab::parse_variant(variant_text);
    const domlab::Graph g = load(src);
    const auto r = domlab::gamma_exact({g, k, variant}, domlab::SolverLimits::from_environment());
    std::cout << "graph: " << describe_source(src) << " (n=" << g.order() << ", m=" << g.size() << ")\n";
    std::cout << "k: " << k << "\nvariant: " << domlab::to_string(variant) << "\n";
    if (!r.feasible()) {
        std::cout << "value: infeasible (min degree " << g.min_degree() << " < k)\n";
        return kExitInfeasible;
    }
    std::cout << "value: " << r.value << "\n";
    std::cout << "certificate: " << r.certificate.to_string_one_based() << "\n";
    return kExitOk;
}

int run_domatic(const GraphSource& src, int k, const std::string& variant_text) {
    const auto variant = domlab::parse_variant(variant_text);
    const domlab::Graph g = load(src);
    const auto r = domlab::domatic_exact({g, k, variant}, domlab::SolverLimits::from_environment());
    std::cout << "graph: " << describe_source(src) << " (n=" << g.order() << ", m=" << g.size() << ")\n";
    std::cout << "k: " << k << "\nvariant: " << domlab::to_string(variant) << "\n";
    if (!r.feasible()) {
        std::cout << "value: infeasible (min degree " << g.min_degree() << " < k)\n";
        return kExitInfeasible;
    }
    std::cout << "value: " << r.value << "\n";
    for (std::size_t i = 0; i < r.partition.size(); ++i) {
        std::cout << "class " << i + 1 << ": " << r.partition[i].to_string_one_based() << "\n";
    }
    return kExitOk;
}

int run_construct(const std::string& family, const std::string& output) {
    const domlab::Graph g = domlab::parse_family(family);
    if (output.empty() || output == "-") {
        domlab::write_edge_list(std::cout, g);
        return kExitOk;
    }
    std::ofstream out(output);
    if (!out) throw std::invalid_argument("cannot write " + output);
    domlab::write_edge_list(out, g);
    std::cerr << "wrote " << output << " (n=" << g.order() << ", m=" << g.size() << ")\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-tuple total restrained domination toolkit"};
    app.require_subcommand(1);

    GraphSource gamma_src;
    int gamma_k = 1;
    std::string gamma_variant = "restrained";
    auto* gamma = app.add_subcommand("gamma", "minimum k-tuple total (restrained) dominating set");
    add_source(gamma, gamma_src);
    gamma->add_option("--k", gamma_k, "tuple parameter k")->check(CLI::PositiveNumber);
    gamma->add_option("--variant", gamma_variant, "total | restrained");

    GraphSource dom_src;
    int dom_k = 1;
    std::string dom_variant = "restrained";
    auto* domatic = app.add_subcommand("domatic", "maximum domatic partition");
    add_source(domatic, dom_src);
    domatic->add_option("--k", dom_k, "tuple parameter k")->check(CLI::PositiveNumber);
    domatic->add_option("--variant", dom_variant, "total | restrained");

    std::string construct_family;
    std::string construct_output;
    auto* construct = app.add_subcommand("construct", "write a family graph as an edge list");
    construct->add_option("family", construct_family, "family spec")->required();
    construct->add_option("-o,--output", construct_output, "output path (default stdout)");

    domlab::SweepConfig cfg;
    std::string format = "csv";
    std::string report_path;
    auto* verify = app.add_subcommand("verify-paper", "run the full verification sweep");
    verify->add_option("--sections", cfg.sections, "sections to run (default all)")->delimiter(',');
    verify->add_option("--format", format, "csv | markdown")->check(CLI::IsMember({"csv", "markdown"}));
    verify->add_option("-o,--output", report_path, "report path (default stdout)");
    verify->add_option("--seed", cfg.seed, "seed for the random-graph suites");
    verify->add_option("--jobs", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    verify->add_flag("--timings", cfg.timings, "fill the runtime_ms column");
    verify->add_option("--k-max", cfg.k_max, "largest k in the family sections");
    verify->add_option("--oracle-graphs", cfg.oracle_random_graphs, "random graphs in the oracle suite");
    verify->add_option("--property-graphs", cfg.property_random_graphs, "random graphs in the property suite");
    verify->add_option("--exhaustive-n-max", cfg.exhaustive_n_max, "largest order in the exhaustive oracle check");
    verify->add_option("--sandwich-n-max", cfg.sandwich_n_max, "largest order in the prism sandwich check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gamma) return run_gamma(gamma_src, gamma_k, gamma_variant);
        if (*domatic) return run_domatic(dom_src, dom_k, dom_variant);
        if (*construct) return run_construct(construct_family, construct_output);

        const domlab::Report report = domlab::run_sweep(cfg);
        std::ostringstream text;
        if (format == "csv") {
            report.write_csv(text, cfg.timings);
        } else {
            report.write_markdown(text, cfg.timings);
        }
        if (report_path.empty() || report_path == "-") {
            std::cout << text.str();
        } else {
            std::ofstream out(report_path, std::ios::binary);
            if (!out) throw std::invalid_argument("cannot write " + report_path);
            out << text.str();
        }
        const auto s = report.summary();
        std::cerr << "rows " << s.total << ", matched " << s.matched << ", discrepancies " << s.discrepancies
                  << ", allowlisted " << s.allowlisted << ", skipped " << s.skipped << "\n";
        for (const auto& row : report.rows) {
            if (row.discrepancy()) {
                std::cerr << (row.allowlisted ? "allowlisted: " : "DISCREPANCY: ") << row.instance << " solver="
                          << row.solver << " formula=" << row.formula << " witness=" << row.witness << "\n";
            }
        }
        return report.exit_status();
    } catch (const domlab::GuardExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise DOMLAB_GUARD_N to allow)\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        return report_usage(e);
    } catch (const std::out_of_range& e) {
        return report_usage(e);
    }
}
