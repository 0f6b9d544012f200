#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "nodal/constructions.hpp"
#include "nodal/io.hpp"
#include "nodal/verify.hpp"

namespace {

using namespace nodal;

struct FamilyOptions {
    std::string family;
    int k = 3;
    int leaves = 3;
    int cycle_len = 2;
    int vertices = 4;
    int edges = 6;
};

void add_family_flags(CLI::App* cmd, FamilyOptions& opt) {
    cmd->add_option("--family", opt.family,
                    "Built-in graph family: theta, cycle, star_of_cycles, random");
    cmd->add_option("--k", opt.k, "Parameter for theta/cycle");
    cmd->add_option("--leaves", opt.leaves, "Leaf count for star_of_cycles");
    cmd->add_option("--cycle-len", opt.cycle_len, "Cycle length for star_of_cycles");
    cmd->add_option("--vertices", opt.vertices, "Vertex count for random");
    cmd->add_option("--edges", opt.edges, "Edge count for random");
}

DualGraph family_graph(const FamilyOptions& opt, std::uint64_t seed) {
    if (opt.family == "theta") return theta(opt.k);
    if (opt.family == "cycle") return cycle(opt.k);
    if (opt.family == "star_of_cycles") return star_of_cycles(opt.leaves, opt.cycle_len);
    if (opt.family == "random") return random_semistable(opt.vertices, opt.edges, seed).graph;
    throw std::invalid_argument("unknown family '" + opt.family + "'");
}

DualGraph load_graph(const std::string& path, const FamilyOptions& opt, std::uint64_t seed,
                     std::optional<Multidegree>* d = nullptr) {
    if (!opt.family.empty()) return family_graph(opt, seed);
    if (path.empty()) throw std::invalid_argument("need a graph file or --family");
    GraphFile f = read_graph_path(path);
    if (d) *d = f.multidegree;
    return f.graph;
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

int run(int argc, char** argv) {
    CLI::App app{"Dual-graph invariants and exact h0 for rational nodal curves"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "Random seed (commands are reproducible per seed)");

    std::string graph_path, bundle_path, out_path, report_path, witness_dir;
    FamilyOptions fam;
    int samples = 50, trials = 200, vertex_id = 0;
    std::string multidegree_text, stable_total;

    CLI::App* analyze = app.add_subcommand("analyze", "Graph invariants");
    analyze->add_option("graph", graph_path, "Graph file");
    add_family_flags(analyze, fam);

    CLI::App* enumerate = app.add_subcommand("enumerate", "Uniform (or stable) multidegrees");
    enumerate->add_option("graph", graph_path, "Graph file");
    enumerate->add_option("--stable", stable_total,
                          "Enumerate stable multidegrees of this total degree instead");
    add_family_flags(enumerate, fam);

    CLI::App* h0cmd = app.add_subcommand("h0", "Exact h0 of a bundle file");
    h0cmd->add_option("bundle", bundle_path, "Bundle file")->required();

    CLI::App* dharcmd = app.add_subcommand("dhar", "Dhar subgraph from a vertex");
    dharcmd->add_option("graph", graph_path, "Graph file (multidegree line used if present)");
    dharcmd->add_option("--vertex", vertex_id, "Start vertex id")->required();
    dharcmd->add_option("--multidegree", multidegree_text, "Multidegree as '<v>:<int> ...'");
    add_family_flags(dharcmd, fam);

    CLI::App* extremalcmd = app.add_subcommand("extremal", "Bound-attaining bundle");
    extremalcmd->add_option("graph", graph_path, "Graph file");
    extremalcmd->add_option("-o,--out", out_path, "Bundle output file (default stdout)");
    add_family_flags(extremalcmd, fam);

    CLI::App* verifycmd = app.add_subcommand("verify", "Run the verification campaigns");
    verifycmd->add_option("graph", graph_path, "Graph file");
    verifycmd->add_option("--samples", samples, "Random gluings per multidegree");
    verifycmd->add_option("--trials", trials, "Random gluings for the generic campaign");
    verifycmd->add_option("--report", report_path, "JSON report file (default stdout)");
    verifycmd->add_option("--witness-dir", witness_dir, "Directory for witness bundle files");
    add_family_flags(verifycmd, fam);

    CLI::App* indexcmd = app.add_subcommand("index", "Clifford index estimate");
    indexcmd->add_option("graph", graph_path, "Graph file");
    indexcmd->add_option("--samples", samples, "Random gluings per multidegree");
    add_family_flags(indexcmd, fam);

    // --seed may be given after the subcommand name.
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (*analyze) {
        DualGraph g = load_graph(graph_path, fam, seed);
        std::cout << "genus " << g.genus() << "\n";
        std::cout << "components " << g.component_count() << "\n";
        std::cout << "semistable " << (is_semistable(g) ? "yes" : "no") << "\n";
        std::cout << "stable " << (is_stable(g) ? "yes" : "no") << "\n";
        std::cout << "bridges";
        for (int id : bridges(g)) std::cout << " " << id;
        std::cout << "\n";
        std::cout << "leaves " << leaf_count(bridge_forest(g)) << "\n";
        std::cout << "canonical " << format_multidegree(g, canonical_multidegree(g)) << "\n";
    } else if (*enumerate) {
        DualGraph g = load_graph(graph_path, fam, seed);
        if (!stable_total.empty()) {
            for (const Multidegree& d : enumerate_stable(g, std::stoll(stable_total))) {
                std::cout << format_multidegree(g, d) << "\n";
            }
        } else {
            for_each_uniform(
                g, [&](const Multidegree& d) { std::cout << format_multidegree(g, d) << "\n"; });
        }
    } else if (*h0cmd) {
        std::cout << h0(read_bundle_path(bundle_path)) << "\n";
    } else if (*dharcmd) {
        std::optional<Multidegree> file_d;
        DualGraph g = load_graph(graph_path, fam, seed, &file_d);
        Multidegree d;
        if (!multidegree_text.empty()) {
            d = parse_multidegree(g, multidegree_text);
        } else if (file_d) {
            d = *file_d;
        } else {
            throw std::invalid_argument("no multidegree: pass --multidegree or a file with one");
        }
        std::cout << "dhar";
        for (int v : dhar(g, d, g.vertex_by_id(vertex_id))) std::cout << " " << g.vertex_id(v);
        std::cout << "\n";
    } else if (*extremalcmd) {
        DualGraph g = load_graph(graph_path, fam, seed);
        RationalCurveModel m = default_model(g);
        GluedLineBundle b = extremal_bundle(m);
        std::ostringstream text;
        write_bundle_file(text, b);
        write_out(out_path, text.str());
        std::cerr << "h0 " << h0(b) << " bound "
                  << to_string(clifford_bound(g, b.degree())) << "\n";
    } else if (*verifycmd) {
        DualGraph g = load_graph(graph_path, fam, seed);
        RationalCurveModel m = default_model(g);
        std::string name = fam.family.empty() ? graph_path : fam.family;
        VerificationReport clifford = verify_clifford(m, samples, seed, name);

        int witness_counter = 0;
        for (CampaignEntry& e : clifford.entries) {
            bool violation = Rational(e.max_h0) > e.bound;
            if (!e.witness || (witness_dir.empty() && !violation)) continue;
            std::string dir = witness_dir.empty() ? "." : witness_dir;
            std::string file = dir + "/" + (violation ? "violation-" : "witness-") +
                               std::to_string(witness_counter++) + ".bundle";
            std::ofstream out(file);
            if (!out) throw std::runtime_error("cannot write '" + file + "'");
            write_bundle_file(out, *e.witness);
            e.witness_file = file;
        }

        GenericReport generic = verify_generic(m, trials, seed);
        generic.graph_name = name;
        LemmaReport lemmas = verify_lemmas(m, seed);
        lemmas.graph_name = name;

        nlohmann::json report = to_json(clifford);
        report["generic"] = to_json(generic);
        report["lemmas"] = to_json(lemmas);
        report["passed"] = clifford.passed && generic.all_classic && lemmas.passed;
        write_out(report_path, report.dump(2) + "\n");
        if (!report["passed"].get<bool>()) {
            std::cerr << "verification FAILED\n";
            return 1;
        }
    } else if (*indexcmd) {
        DualGraph g = load_graph(graph_path, fam, seed);
        if (g.genus() < 2) throw std::invalid_argument("index requires genus >= 2");
        CliffordIndexEstimate est = clifford_index_estimate(default_model(g), samples, seed);
        if (est.found) {
            std::cout << est.value << "\n";
        } else {
            std::cout << "infinity\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
