// Command-line front end: construct, analyze, convert, optimize, groundset,
// ramsey and sample subcommands over the cubegraph library.  Exit codes:
// 0 success, 1 domain/usage error, 2 infeasible or resource error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cubegraph/constructions.hpp"
#include "cubegraph/errors.hpp"
#include "cubegraph/graph.hpp"
#include "cubegraph/groundset.hpp"
#include "cubegraph/ramsey.hpp"
#include "cubegraph/random_model.hpp"

using nlohmann::json;
using namespace cubegraph;

namespace {

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        out << j.dump(2) << "\n";
    }
}

void write_family_to(const std::string& path, const CubeFamily& fam,
                     const std::vector<std::string>& comments = {}) {
    if (path.empty() || path == "-") {
        write_family(std::cout, fam, comments);
    } else {
        save_family(path, fam, comments);
    }
}

std::vector<std::vector<int>> parse_fixed_sets(const std::string& text, int d) {
    std::vector<std::vector<int>> sets;
    std::stringstream ss(text);
    std::string cls;
    while (std::getline(ss, cls, ';')) {
        std::vector<int> coords;
        std::stringstream cs(cls);
        std::string tok;
        while (std::getline(cs, tok, ',')) {
            if (tok.empty()) continue;
            int c = std::stoi(tok);
            if (c < 1 || c > d)
                throw std::invalid_argument("coordinate " + tok +
                                            " outside 1.." + std::to_string(d));
            coords.push_back(c - 1);  // text is 1-based, the library 0-based
        }
        sets.push_back(std::move(coords));
    }
    if (sets.empty()) throw std::invalid_argument("no fixed sets given");
    return sets;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"subcube intersection graph toolkit"};
    app.require_subcommand(1);

    // ---- construct ----------------------------------------------------
    auto* construct = app.add_subcommand("construct", "emit an extremal family");
    construct->require_subcommand(1);
    long long c_n = 0;
    int c_d = 0, c_k = 2, c_r = 2;
    std::string c_out, c_sets;

    auto* partite = construct->add_subcommand("partite", "balanced k-partite family");
    partite->add_option("-n", c_n, "family size")->required();
    partite->add_option("-d", c_d, "cube width")->required();
    partite->add_option("-k", c_k, "class count")->required();
    partite->add_option("-o,--output", c_out, "family file (default stdout)");

    auto* fullcodim = construct->add_subcommand(
        "full-codim", "point-exactly-r-covered family with binom(r,2)*2^d edges");
    fullcodim->add_option("-d", c_d, "cube width")->required();
    fullcodim->add_option("-r", c_r, "class count")->required();
    fullcodim->add_option("-o,--output", c_out, "family file (default stdout)");

    auto* largen = construct->add_subcommand("large-n", "large-n family, grown to n");
    largen->add_option("-n", c_n, "family size")->required();
    largen->add_option("-d", c_d, "cube width")->required();
    largen->add_option("-k", c_k, "class count")->required();
    largen->add_option("-o,--output", c_out, "family file (default stdout)");

    auto* mixed = construct->add_subcommand("mixed", "classes from arbitrary fixed sets");
    mixed->add_option("-d", c_d, "cube width")->required();
    mixed->add_option("--sets", c_sets,
                      "fixed sets, 1-based: e.g. \"1,2;3,4\" or \"1,2;;2,3\"")
        ->required();
    mixed->add_option("-o,--output", c_out, "family file (default stdout)");

    // ---- analyze -------------------------------------------------------
    auto* analyze = app.add_subcommand("analyze", "edge/clique/independence report");
    std::string a_file, a_out, a_cliques;
    bool a_human = false;
    analyze->add_option("file", a_file, "family file")->required();
    analyze->add_option("--cliques", a_cliques, "clique sizes to count, e.g. 3,4");
    analyze->add_flag("--human", a_human, "table view instead of JSON");
    analyze->add_option("-o,--output", a_out, "report file (default stdout)");

    // ---- convert -------------------------------------------------------
    auto* convert = app.add_subcommand("convert", "family file to graph formats");
    std::string v_file, v_to = "graph6", v_out;
    convert->add_option("file", v_file, "family file")->required();
    convert->add_option("--to", v_to, "graph6 | dimacs | family | json")
        ->check(CLI::IsMember({"graph6", "dimacs", "family", "json"}));
    convert->add_option("-o,--output", v_out, "output file (default stdout)");

    // ---- represent -----------------------------------------------------
    auto* represent = app.add_subcommand(
        "represent", "embed a DIMACS graph on d vertices as subcubes of Q_d");
    std::string r_graph, r_out;
    represent->add_option("graph", r_graph, "DIMACS edge-list file")->required();
    represent->add_option("-o,--output", r_out, "family file (default stdout)");

    // ---- optimize -------------------------------------------------------
    auto* optimize = app.add_subcommand("optimize", "exact partite-profile optimum");
    long long o_n = 0;
    int o_d = 0, o_r = 2;
    std::string o_realize, o_out;
    optimize->add_option("-n", o_n, "total size")->required();
    optimize->add_option("-d", o_d, "cube width")->required();
    optimize->add_option("-r", o_r, "class count")->required();
    optimize->add_option("--realize", o_realize, "also write the realized family here");
    optimize->add_option("-o,--output", o_out, "report file (default stdout)");

    // ---- groundset -------------------------------------------------------
    auto* groundset = app.add_subcommand("groundset", "arbitrary-ground-set families");
    groundset->require_subcommand(1);
    int g_q = 2, g_r = 2, g_n = 0;
    std::string g_out;
    auto* mols = groundset->add_subcommand("mols", "rows+columns+latin squares family");
    mols->add_option("-q", g_q, "prime order")->required();
    mols->add_option("-r", g_r, "class count (<= q+1)")->required();
    mols->add_option("-o,--output", g_out, "JSON file (default stdout)");
    auto* cover = groundset->add_subcommand("cover", "pair cover and its dual");
    cover->add_option("-n", g_n, "element count")->required();
    cover->add_option("-r", g_r, "block size")->required();
    cover->add_option("-o,--output", g_out, "JSON file (default stdout)");
    auto* packing = groundset->add_subcommand("packing", "pair packing and its dual");
    packing->add_option("-n", g_n, "element count")->required();
    packing->add_option("-r", g_r, "block size")->required();
    packing->add_option("-o,--output", g_out, "JSON file (default stdout)");

    // ---- ramsey -----------------------------------------------------------
    auto* ramsey = app.add_subcommand("ramsey", "R_d(k,l) searches and bounds");
    ramsey->require_subcommand(1);
    int m_d = 0, m_k = 0, m_l = 0, m_workers = 0, m_maxd = 4, m_x = 3;
    unsigned long long m_budget = 0;
    uint64_t m_relabel = 0;
    double m_alpha = 0;
    bool m_human = false;
    std::string m_ckpt, m_witness_out, m_verify_file, m_witness_dimacs, m_out;

    auto* exact = ramsey->add_subcommand("exact", "exhaustive exact value with witness");
    exact->add_option("-d", m_d, "cube width")->required();
    exact->add_option("-k", m_k, "clique size")->required();
    exact->add_option("-l", m_l, "independent-set size")->required();
    exact->add_option("--workers", m_workers, "search threads (0 = default)");
    exact->add_option("--checkpoint", m_ckpt,
                      "checkpoint file (default: $CUBEGRAPH_CHECKPOINT_DIR/...)");
    exact->add_option("--node-budget", m_budget, "abort after this many nodes");
    exact->add_option("--max-d", m_maxd, "raise the search dimension cap");
    exact->add_option("--relabel-seed", m_relabel, "seeded candidate relabeling");
    exact->add_option("--witness-out", m_witness_out,
                      "witness family file (default ramsey_d{d}_k{k}_l{l}_witness.txt)");
    exact->add_flag("--human", m_human, "table view instead of JSON");
    exact->add_option("-o,--output", m_out, "result file (default stdout)");

    auto* bound = ramsey->add_subcommand("bound", "closed-form upper bound");
    bound->add_option("-d", m_d, "cube width")->required();
    bound->add_option("-k", m_k, "clique size")->required();
    bound->add_option("-l", m_l, "independent-set size")->required();
    bound->add_option("--alpha", m_alpha,
                      "override the l=3 balance parameter (0 = closed form)");
    bound->add_option("-o,--output", m_out, "result file (default stdout)");

    auto* blowup = ramsey->add_subcommand("blowup", "blow-up lower bound family");
    blowup->add_option("-k", m_k, "clique size")->required();
    blowup->add_option("-l", m_l, "independent-set size")->required();
    blowup->add_option("-x", m_x, "witness clique bound");
    blowup->add_option("--witness-dimacs", m_witness_dimacs,
                       "witness graph file (default: built-in catalog)");
    blowup->add_option("-o,--output", m_out, "family file (default stdout)");

    auto* verify = ramsey->add_subcommand("verify", "check a witness family");
    verify->add_option("file", m_verify_file, "family file")->required();
    verify->add_option("-k", m_k, "clique size")->required();
    verify->add_option("-l", m_l, "independent-set size")->required();

    // ---- sample -----------------------------------------------------------
    auto* sample = app.add_subcommand("sample", "random subcube families");
    long long s_n = 0;
    int s_d = 0;
    double s_p = 0.25;
    std::string s_out, s_codim;
    std::optional<uint64_t> s_seed;
    sample->add_option("-n", s_n, "family size")->required();
    sample->add_option("-d", s_d, "cube width")->required();
    sample->add_option("-p", s_p, "coordinate law parameter in [0, 1/2]");
    sample->add_option("--seed", s_seed, "RNG seed (generated and recorded if absent)");
    sample->add_option("--codim-dist", s_codim,
                       "comma list of d+1 codimension probabilities");
    sample->add_option("-o,--output", s_out, "family file (default stdout)");

    app.parse(argc, argv);

    if (partite->parsed())
        write_family_to(c_out, partite_family(c_n, c_d, c_k));
    if (fullcodim->parsed())
        write_family_to(c_out, full_codim_family(c_d, c_r));
    if (largen->parsed())
        write_family_to(c_out, large_n_family(c_n, c_d, c_k));
    if (mixed->parsed())
        write_family_to(c_out, mixed_partite_family(c_d, parse_fixed_sets(c_sets, c_d)));

    if (analyze->parsed()) {
        CubeFamily fam = load_family(a_file);
        IntersectionGraph g = build_graph(fam);
        std::vector<int> sizes;
        if (!a_cliques.empty()) sizes = parse_int_list(a_cliques);
        json rep = analysis_report(g, sizes);
        if (a_human) {
            std::ostringstream hum;
            hum << "n                   " << rep["n"] << "\n"
                << "d                   " << rep["d"] << "\n"
                << "edges               " << rep["edges"] << "\n"
                << "omega               " << rep["omega"]["value"] << "\n";
            if (rep["omega"].contains("witness_point"))
                hum << "omega witness point " << rep["omega"]["witness_point"] << "\n";
            hum << "independence        " << rep["independence_number"] << "\n";
            if (rep.contains("clique_counts"))
                for (auto& [size, count] : rep["clique_counts"].items())
                    hum << "cliques of size " << size << "   " << count << "\n";
            if (a_out.empty() || a_out == "-") {
                std::cout << hum.str();
            } else {
                std::ofstream out(a_out);
                out << hum.str();
            }
        } else {
            emit(rep, a_out);
        }
    }

    if (convert->parsed()) {
        CubeFamily fam = load_family(v_file);
        if (v_to == "family") {
            write_family_to(v_out, fam);
        } else if (v_to == "json") {
            json j;
            j["d"] = fam.width;
            std::vector<std::string> members;
            for (const Subcube& m : fam.members) members.push_back(m.to_string());
            j["members"] = members;
            emit(j, v_out);
        } else {
            IntersectionGraph g = build_graph(fam);
            std::string text = v_to == "graph6" ? to_graph6(g.adj) + "\n"
                                                : to_dimacs(g.adj);
            if (v_out.empty() || v_out == "-") {
                std::cout << text;
            } else {
                std::ofstream out(v_out);
                if (!out) throw std::invalid_argument("cannot write " + v_out);
                out << text;
            }
        }
    }

    if (represent->parsed()) {
        std::ifstream in(r_graph);
        if (!in) throw std::invalid_argument("cannot open " + r_graph);
        BitGraph g = read_dimacs(in);
        write_family_to(r_out, represent_graph(g));
    }

    if (optimize->parsed()) {
        ProfileSearchStats stats;
        PartiteProfile best = optimal_partite_profile(o_n, o_d, o_r, &stats);
        json j = {{"n", o_n},
                  {"d", o_d},
                  {"r", o_r},
                  {"part_dims", best.part_dims},
                  {"part_sizes", best.part_sizes},
                  {"objective", best.objective},
                  {"edges", best.edges},
                  {"enumeration",
                   {{"compositions", stats.compositions}, {"feasible", stats.feasible}}}};
        if (!o_realize.empty())
            write_family_to(o_realize, realize_profile(best, o_d));
        emit(j, o_out);
    }

    auto emit_design = [&](const BlockDesign& design) {
        json j = {{"n", design.n},
                  {"r", design.r},
                  {"ground_size", design.dual.ground_size},
                  {"blocks", design.blocks},
                  {"dual", to_json(design.dual)},
                  {"edges", intersection_graph(design.dual).edge_count()}};
        emit(j, g_out);
    };
    if (mols->parsed()) {
        SetFamily fam = mols_family(g_q, g_r);
        json j = {{"q", g_q},
                  {"r", g_r},
                  {"family", to_json(fam)},
                  {"edges", intersection_graph(fam).edge_count()}};
        emit(j, g_out);
    }
    if (cover->parsed()) emit_design(pair_cover_family(g_n, g_r));
    if (packing->parsed()) emit_design(pair_packing_family(g_n, g_r));

    if (exact->parsed()) {
        SearchOptions opts;
        opts.workers = m_workers;
        opts.max_d = m_maxd;
        opts.node_budget = m_budget;
        opts.relabel_seed = m_relabel;
        if (!m_ckpt.empty()) {
            opts.checkpoint_path = m_ckpt;
        } else if (const char* dir = std::getenv("CUBEGRAPH_CHECKPOINT_DIR")) {
            opts.checkpoint_path = std::string(dir) + "/ramsey_d" +
                                   std::to_string(m_d) + "_k" + std::to_string(m_k) +
                                   "_l" + std::to_string(m_l) + ".ckpt.json";
        }
        RamseyResult r = ramsey_exact(m_d, m_k, m_l, opts);
        std::string wfile = m_witness_out.empty()
                                ? "ramsey_d" + std::to_string(m_d) + "_k" +
                                      std::to_string(m_k) + "_l" +
                                      std::to_string(m_l) + "_witness.txt"
                                : m_witness_out;
        save_family(wfile, r.witness,
                    {"witness: R_" + std::to_string(m_d) + "(" + std::to_string(m_k) +
                     "," + std::to_string(m_l) + ") = " + std::to_string(r.value)});
        json j = {{"d", r.d},
                  {"k", r.k},
                  {"l", r.l},
                  {"value", r.value},
                  {"witness_file", wfile},
                  {"witness_size", r.witness.size()},
                  {"nodes_explored", r.nodes_explored},
                  {"elapsed_seconds", r.elapsed_seconds}};
        if (!r.note.empty()) j["note"] = r.note;
        if (m_human) {
            std::cout << "R_" << r.d << "(" << r.k << "," << r.l << ") = " << r.value
                      << "   (witness " << wfile << ", " << r.nodes_explored
                      << " nodes, " << r.elapsed_seconds << "s)\n";
        } else {
            emit(j, m_out);
        }
    }

    if (bound->parsed()) {
        json j = {{"d", m_d}, {"k", m_k}, {"l", m_l},
                  {"upper_bound", upper_bound_eval(m_d, m_k, m_l)},
                  {"trivial_lower_bound", (m_k - 1) * (m_l - 1) + 1}};
        if (m_alpha > 0) j["alpha_bound"] = upper_bound_eval_alpha(m_d, m_k, m_alpha);
        emit(j, m_out);
    }

    if (blowup->parsed()) {
        BitGraph witness;
        if (m_witness_dimacs.empty()) {
            witness = catalog_witness(m_x, m_l);
        } else {
            std::ifstream in(m_witness_dimacs);
            if (!in) throw std::invalid_argument("cannot open " + m_witness_dimacs);
            witness = read_dimacs(in);
        }
        auto [bd, fam] = lower_bound_blowup(witness.n, m_k, m_l, witness, m_x);
        write_family_to(m_out, fam,
                        {"blow-up witness: R_" + std::to_string(witness.n) + "(" +
                         std::to_string(m_k) + "," + std::to_string(m_l) + ") > " +
                         std::to_string(bd)});
    }

    if (verify->parsed()) {
        CubeFamily fam = load_family(m_verify_file);
        bool ok = verify_witness(fam, m_k, m_l);
        emit({{"file", m_verify_file}, {"k", m_k}, {"l", m_l}, {"valid", ok}}, "");
        if (!ok) return 2;
    }

    if (sample->parsed()) {
        RandomModelParams params;
        params.n = s_n;
        params.d = s_d;
        params.p = s_p;
        bool generated = !s_seed.has_value();
        params.seed = s_seed.value_or(std::random_device{}());
        std::vector<std::string> comments;
        CubeFamily fam;
        if (!s_codim.empty()) {
            std::vector<double> dist;
            std::stringstream ss(s_codim);
            std::string tok;
            while (std::getline(ss, tok, ',')) dist.push_back(std::stod(tok));
            params.codim_distribution = dist;
            fam = sample_family_codim(params);
            comments.push_back("sampled: n=" + std::to_string(s_n) +
                               " d=" + std::to_string(s_d) + " codim-dist=" + s_codim +
                               " seed=" + std::to_string(params.seed));
        } else {
            fam = sample_family(params);
            std::ostringstream c;
            c << "sampled: n=" << s_n << " d=" << s_d << " p=" << s_p
              << " seed=" << params.seed;
            comments.push_back(c.str());
        }
        write_family_to(s_out, fam, comments);
        if (generated && !s_out.empty() && s_out != "-")
            emit({{"seed", params.seed}, {"output", s_out}}, "");
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        CLI::App dummy;
        int code = dummy.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const infeasible_error& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
