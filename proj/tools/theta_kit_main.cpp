#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "thetakit/decomposition.hpp"
#include "thetakit/enumeration.hpp"
#include "thetakit/generator.hpp"
#include "thetakit/graph_io.hpp"
#include "thetakit/named_graphs.hpp"
#include "thetakit/theta.hpp"
#include "thetakit/verify.hpp"

namespace {

using namespace thetakit;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Multigraph load_graph(const std::string& named, const std::string& input) {
    if (!named.empty()) {
        auto g = named_graph_by_string(named);
        if (!g) throw std::runtime_error("unknown named graph: " + named);
        return *g;
    }
    if (input.empty()) throw std::runtime_error("pass --named or --input");
    return parse_graph(slurp(input));
}

void print_graph(const Multigraph& g, const std::string& format) {
    if (format == "json") {
        std::cout << graph_to_json(g).dump(2) << "\n";
    } else {
        std::cout << write_graph(g);
    }
}

int cmd_theta(const std::string& named, const std::string& input, int search_cap,
              const std::string& format) {
    Multigraph g = load_graph(named, input);
    DeciderOptions opt;
    opt.search_cap = search_cap;
    Certificate cert;
    try {
        cert = is_theta_free(g, opt);
    } catch (const NotMatchingCoveredError& e) {
        std::cerr << "input is not matching covered";
        if (e.report.offending_edge) {
            const auto& ed = g.edge(*e.report.offending_edge);
            std::cerr << ": edge " << *e.report.offending_edge << " (" << ed.u << "-" << ed.v
                      << ") lies in no perfect matching";
        } else if (e.report.tutte_set) {
            std::cerr << ": Tutte set {";
            for (size_t i = 0; i < e.report.tutte_set->ids().size(); ++i)
                std::cerr << (i ? "," : "") << e.report.tutte_set->ids()[i];
            std::cerr << "}";
        } else if (e.report.reason == CoverageReport::Reason::Disconnected) {
            std::cerr << ": graph is disconnected or trivial";
        }
        std::cerr << "\n";
        return 2;
    }
    if (format == "json") {
        std::cout << certificate_to_json(cert).dump(2) << "\n";
    } else {
        std::cout << (cert.verdict == Verdict::Free ? "FREE" : "BASED") << "\n";
    }
    return cert.verdict == Verdict::Free ? 0 : 1;
}

int cmd_decompose(const std::string& named, const std::string& input, const std::string& format) {
    Multigraph g = load_graph(named, input);
    DecompositionResult r = tight_cut_decomposition(g);
    if (format == "json") {
        std::cout << decomposition_to_json(r).dump(2) << "\n";
    } else {
        std::cout << "b " << r.b << "\n";
        for (const auto& br : r.bricks) std::cout << "brick " << br.vertex_count() << " " << br.edge_count() << "\n";
        for (const auto& br : r.braces) std::cout << "brace " << br.vertex_count() << " " << br.edge_count() << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& named, const std::string& input, const std::string& cert_path) {
    Multigraph g = load_graph(named, input);
    nlohmann::json cert = nlohmann::json::parse(slurp(cert_path));
    std::string why;
    bool ok = verify_certificate(g, cert, &why);
    if (ok) {
        std::cout << "true\n";
        return 0;
    }
    std::cout << "false\n";
    std::cerr << why << "\n";
    return 1;
}

int cmd_gen(const std::string& named, const std::string& family, int max_n, bool random_mcg, int n,
            int min_degree, std::uint64_t seed, const std::string& format) {
    if (!named.empty()) {
        print_graph(load_graph(named, ""), format);
        return 0;
    }
    if (!family.empty()) {
        Family which;
        if (family == "T" || family == "t") {
            which = Family::T;
        } else if (family == "T0" || family == "t0") {
            which = Family::T0;
        } else {
            throw std::runtime_error("--family must be T or T0");
        }
        auto members = generate_family(which, max_n);
        if (format == "json") {
            nlohmann::json out = nlohmann::json::array();
            for (const auto& t : members)
                out.push_back({{"graph", graph_to_json(t.graph)}, {"tree", family_tree_to_json(t)}});
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& t : members) std::cout << write_graph(t.graph);
        }
        return 0;
    }
    if (random_mcg) {
        Multigraph g = min_degree > 0 ? random_matching_covered_min_degree(n, min_degree, seed)
                                      : random_matching_covered(n, seed);
        print_graph(g, format);
        return 0;
    }
    throw std::runtime_error("pass --named, --family or --random-mcg");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"theta-kit: decide whether a matching covered graph is theta-free"};
    app.require_subcommand(1);

    std::string named, input, format = "json", cert_path, family;
    int search_cap = 16, max_n = 6, n = 10, min_degree = 0;
    std::uint64_t seed = 1;
    bool random_mcg = false;

    auto* theta = app.add_subcommand("theta", "decide theta-freeness, print a certificate");
    theta->add_option("--named", named, "named graph");
    theta->add_option("--input", input, "edge-list file, - for stdin");
    theta->add_option("--search-cap", search_cap, "brick witness search cap (vertices)");
    theta->add_option("--format", format, "json or text");

    auto* decompose = app.add_subcommand("decompose", "tight cut decomposition");
    decompose->add_option("--named", named, "named graph");
    decompose->add_option("--input", input, "edge-list file, - for stdin");
    decompose->add_option("--format", format, "json or text");

    auto* verify = app.add_subcommand("verify", "check a certificate against a graph");
    verify->add_option("--named", named, "named graph");
    verify->add_option("--input", input, "edge-list file, - for stdin");
    verify->add_option("--certificate", cert_path, "certificate json file")->required();

    auto* gen = app.add_subcommand("gen", "emit graphs: named, families, random");
    gen->add_option("--named", named, "named graph");
    gen->add_option("--family", family, "T or T0");
    gen->add_option("--max-n", max_n, "family size bound");
    gen->add_flag("--random-mcg", random_mcg, "random matching covered graph");
    gen->add_option("--n", n, "order for --random-mcg (even)");
    gen->add_option("--min-degree", min_degree, "raise minimum degree (random-mcg)");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--format", format, "json or text");

    CLI11_PARSE(app, argc, argv);

    try {
        if (theta->parsed()) return cmd_theta(named, input, search_cap, format);
        if (decompose->parsed()) return cmd_decompose(named, input, format);
        if (verify->parsed()) return cmd_verify(named, input, cert_path);
        if (gen->parsed()) return cmd_gen(named, family, max_n, random_mcg, n, min_degree, seed, format);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
