// Command-line front end: generators for the library's graph
// constructions, homology computation, structural checks, and the
// F-sequence calculator.
//
// Exit codes: 0 success, 1 check failed, 2 usage/parse error,
// 3 budget refusal.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dht/cube_maps.hpp"
#include "dht/cylinder.hpp"
#include "dht/fseq.hpp"
#include "dht/gamma.hpp"
#include "dht/graph.hpp"
#include "dht/homology.hpp"
#include "dht/iso.hpp"
#include "dht/json_io.hpp"
#include "dht/semicube.hpp"

namespace {

constexpr double kDefaultBudget = 1e9;

double enumeration_budget(double flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("DHT_BUDGET")) {
        try {
            return std::stod(env);
        } catch (...) {
        }
    }
    return kDefaultBudget;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

// Mini graph spec "kind:params" used by --base flags:
//   interval:m | cycle:L | cube:m:n | cube-boundary:m:n | file:path
dht::Graph parse_graph_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw CLI::ValidationError("empty graph spec");
    const std::string& kind = parts[0];
    auto arg = [&](size_t i) {
        if (i >= parts.size()) throw CLI::ValidationError("graph spec " + spec + ": missing parameter");
        return std::stoi(parts[i]);
    };
    if (kind == "interval") return dht::interval(arg(1));
    if (kind == "cycle") return dht::cycle(arg(1));
    if (kind == "cube") return dht::cube(arg(1), arg(2));
    if (kind == "cube-boundary") return dht::cube_boundary(arg(1), arg(2));
    if (kind == "file") {
        if (parts.size() < 2) throw CLI::ValidationError("graph spec file: missing path");
        std::string path = spec.substr(5);
        return dht::graph_from_json_file(path);
    }
    throw CLI::ValidationError("unknown graph spec kind: " + kind);
}

dht::GraphMap boundary_inclusion(int m, int n) {
    dht::Graph bd = dht::cube_boundary(m, n);
    dht::Graph cb = dht::cube(m, n);
    std::vector<int> assign(bd.size());
    for (int v = 0; v < bd.size(); ++v) assign[v] = *cb.index_of(bd.label(v));
    return dht::GraphMap{bd, cb, std::move(assign)};
}

struct GenOptions {
    std::string kind;
    int m = 1;
    int n = 1;
    int length = 3;
    std::string base = "cycle:5";
    std::string span = "id";
    int bm = 2, bn = 1;
    std::string complex_path;
    std::string out;
};

int run_gen(const GenOptions& opt) {
    using namespace dht;
    Graph g;
    if (opt.kind == "interval") {
        g = interval(opt.m);
    } else if (opt.kind == "cycle") {
        g = cycle(opt.length);
    } else if (opt.kind == "cube") {
        g = cube(opt.m, opt.n);
    } else if (opt.kind == "cube-boundary") {
        g = cube_boundary(opt.m, opt.n);
    } else if (opt.kind == "open-box") {
        g = open_box(opt.m, opt.n);
    } else if (opt.kind == "suspension") {
        g = suspension(parse_graph_spec(opt.base), opt.m);
    } else if (opt.kind == "cone") {
        g = cone(parse_graph_spec(opt.base), opt.m);
    } else if (opt.kind == "cylinder") {
        if (opt.span == "id") {
            Graph base = parse_graph_spec(opt.base);
            g = double_mapping_cylinder(identity_map(base), identity_map(base), opt.m).graph;
        } else if (opt.span == "boundary-inclusion") {
            GraphMap i = boundary_inclusion(opt.bm, opt.bn);
            g = double_mapping_cylinder(i, i, opt.m).graph;
        } else if (opt.span == "boundary-id") {
            GraphMap i = boundary_inclusion(opt.bm, opt.bn);
            g = double_mapping_cylinder(i, identity_map(i.source), opt.m).graph;
        } else {
            throw CLI::ValidationError("unknown span: " + opt.span);
        }
    } else if (opt.kind == "f-graph") {
        g = f_graph(opt.m, opt.n).graph;
    } else if (opt.kind == "gamma") {
        if (!opt.complex_path.empty())
            g = gamma_of_complex(complex_from_json_file(opt.complex_path), opt.m).graph;
        else
            g = gamma(standard_cube(opt.n), opt.m).graph;
    } else if (opt.kind == "rp2-gamma") {
        g = gamma_of_complex(builtin_rp2(), opt.m).graph;
    } else {
        throw CLI::ValidationError("unknown generator kind: " + opt.kind);
    }
    emit(graph_to_json(g), opt.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete homotopy toolbox"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker cap (computations are deterministic)");

    // --- gen ---------------------------------------------------------
    GenOptions gen;
    auto* cmd_gen = app.add_subcommand("gen", "emit a generated graph as JSON");
    cmd_gen->add_option("kind", gen.kind,
                        "interval|cycle|cube|cube-boundary|open-box|suspension|cone|"
                        "cylinder|f-graph|gamma|rp2-gamma")
        ->required();
    cmd_gen->add_option("-m", gen.m, "length parameter");
    cmd_gen->add_option("-n", gen.n, "dimension parameter");
    cmd_gen->add_option("-L,--length", gen.length, "cycle length");
    cmd_gen->add_option("--base", gen.base, "base graph spec (kind:params or file:path)");
    cmd_gen->add_option("--span", gen.span, "cylinder span: id|boundary-inclusion|boundary-id");
    cmd_gen->add_option("--bm", gen.bm, "cube length for boundary spans");
    cmd_gen->add_option("--bn", gen.bn, "cube dimension for boundary spans");
    cmd_gen->add_option("--complex", gen.complex_path, "simplicial complex JSON (gamma)");
    cmd_gen->add_option("-o,--out", gen.out, "output path (default stdout)");

    // --- homology ----------------------------------------------------
    std::string hom_input, hom_dump;
    int hom_k = 1, hom_max_dim = -1;
    long long hom_mod_p = 0;
    bool hom_json = false;
    double hom_budget = 0;
    auto* cmd_hom = app.add_subcommand("homology", "discrete homology of a graph");
    cmd_hom->add_option("input", hom_input, "graph JSON path")->required();
    cmd_hom->add_option("-k", hom_k, "homology degree")->required();
    cmd_hom->add_option("--max-dim", hom_max_dim, "chain complex dimension (default k+1)");
    cmd_hom->add_option("--mod-p", hom_mod_p, "also report the F_p dimension");
    cmd_hom->add_flag("--json", hom_json, "JSON output");
    cmd_hom->add_option("--budget", hom_budget, "enumeration budget override");
    cmd_hom->add_option("--dump-boundary", hom_dump,
                        "write each boundary matrix to PREFIX.d<k>.txt as 'row col value'");

    // --- check -------------------------------------------------------
    auto* cmd_check = app.add_subcommand("check", "structural checks");
    cmd_check->require_subcommand(1);

    std::string iso_a, iso_b;
    auto* chk_iso = cmd_check->add_subcommand("iso", "graph isomorphism");
    chk_iso->add_option("-a", iso_a, "first graph JSON path")->required();
    chk_iso->add_option("-b", iso_b, "second graph JSON path")->required();

    std::string sq_path;
    int sq_n = 1;
    auto* chk_sk = cmd_check->add_subcommand("skeletal-pushout", "n-skeletal pushout test");
    chk_sk->add_option("--square", sq_path, "square JSON path")->required();
    chk_sk->add_option("--n", sq_n, "skeletal level")->required();

    std::string face_input;
    int face_max_dim = 2, face_m = 1;
    auto* chk_face = cmd_check->add_subcommand("face-identity",
                                               "validate the nerve cube sets of a graph");
    chk_face->add_option("input", face_input, "graph JSON path")->required();
    chk_face->add_option("--max-dim", face_max_dim, "top dimension");
    chk_face->add_option("-m", face_m, "cube length");

    std::string dc_input;
    std::vector<std::string> dc_a, dc_b;
    int dc_n = 1;
    auto* chk_dc = cmd_check->add_subcommand(
        "distance-criterion", "sufficient condition for an n-skeletal cover square");
    chk_dc->add_option("input", dc_input, "graph JSON path")->required();
    chk_dc->add_option("--a", dc_a, "vertex labels of the first subgraph")->required();
    chk_dc->add_option("--b", dc_b, "vertex labels of the second subgraph")->required();
    chk_dc->add_option("--n", dc_n, "skeletal level")->required();

    // --- fseq --------------------------------------------------------
    std::string fs_action, fs_expr;
    int fs_m = 1, fs_n = 0;
    bool fs_count_only = false, fs_interior = false, fs_boundary = false;
    auto* cmd_fseq = app.add_subcommand("fseq", "F-sequence calculator");
    cmd_fseq->add_option("action", fs_action, "reduce|expand|count")->required();
    cmd_fseq->add_option("expr", fs_expr, "F-sequence, e.g. \"((7;1+,3-),(0;2-))\"");
    cmd_fseq->add_option("-m", fs_m, "weight bound")->required();
    cmd_fseq->add_option("-n", fs_n, "dimension (count action)");
    cmd_fseq->add_flag("--count", fs_count_only, "print only the number of expanded forms");
    cmd_fseq->add_flag("--interior", fs_interior, "count interior vertices only");
    cmd_fseq->add_flag("--boundary", fs_boundary, "count boundary vertices only");

    // --- nerve -------------------------------------------------------
    std::string nerve_input;
    int nerve_max_dim = 2, nerve_m = 1;
    double nerve_budget = 0;
    bool nerve_dump = false;
    auto* cmd_nerve = app.add_subcommand("nerve", "cube counts per dimension");
    cmd_nerve->add_option("input", nerve_input, "graph JSON path")->required();
    cmd_nerve->add_option("--max-dim", nerve_max_dim, "top dimension");
    cmd_nerve->add_option("-m", nerve_m, "cube length");
    cmd_nerve->add_option("--budget", nerve_budget, "enumeration budget override");
    cmd_nerve->add_flag("--dump-json", nerve_dump,
                        "dump the face-only cube sets as JSON (debugging; unstable format)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help exits 0; any usage problem exits 2
    }

    try {
        if (*cmd_gen) return run_gen(gen);

        if (*cmd_hom) {
            dht::Graph g = dht::graph_from_json_file(hom_input);
            int max_dim = hom_max_dim >= 0 ? hom_max_dim : hom_k + 1;
            if (max_dim < hom_k + 1) {
                std::cerr << "error: --max-dim must be at least k+1\n";
                return 2;
            }
            double budget = enumeration_budget(hom_budget);
            for (int d = 0; d <= max_dim; ++d) {
                double est = dht::estimate_cube_count(g, d);
                if (est > budget) {
                    std::cerr << "refused: estimated " << est << " lattice paths in dimension "
                              << d << " exceeds budget " << budget
                              << " (raise with --budget or DHT_BUDGET)\n";
                    return 3;
                }
            }
            auto cc = dht::chain_complex(g, max_dim);
            if (!hom_dump.empty()) {
                for (int d = 1; d <= max_dim; ++d) {
                    std::ofstream out(hom_dump + ".d" + std::to_string(d) + ".txt");
                    if (!out) throw std::runtime_error("cannot write boundary dump");
                    out << "# " << cc.boundary[d].n_rows << " " << cc.boundary[d].n_cols << "\n";
                    for (int col = 0; col < cc.boundary[d].n_cols; ++col)
                        for (auto [row, val] : cc.boundary[d].cols[col])
                            out << row << " " << col << " " << val << "\n";
                }
            }
            auto h = dht::homology_of_complex(cc, hom_k);
            if (hom_json) {
                nlohmann::json j;
                j["k"] = hom_k;
                j["rank"] = h.rank;
                j["torsion"] = h.torsion;
                if (hom_mod_p) j["mod_p_rank"] = dht::homology_mod_p_of_complex(cc, hom_k, hom_mod_p);
                std::cout << j.dump(2) << "\n";
            } else {
                for (int k = 0; k + 1 <= max_dim; ++k) {
                    auto hk = k == hom_k ? h : dht::homology_of_complex(cc, k);
                    std::cout << "H_" << k << " = " << hk.to_text() << "\n";
                }
                std::cout << "boundary matrices:";
                for (int d = 1; d <= max_dim; ++d)
                    std::cout << " d_" << d << ": " << cc.boundary[d].n_rows << "x"
                              << cc.boundary[d].n_cols;
                std::cout << "\n";
                if (hom_mod_p)
                    std::cout << "dim_F" << hom_mod_p << " H_" << hom_k << " = "
                              << dht::homology_mod_p_of_complex(cc, hom_k, hom_mod_p) << "\n";
            }
            return 0;
        }

        if (*chk_iso) {
            dht::Graph a = dht::graph_from_json_file(iso_a);
            dht::Graph b = dht::graph_from_json_file(iso_b);
            auto iso = dht::graph_isomorphic(a, b);
            if (iso) {
                std::cout << "PASS: graphs are isomorphic\n";
                return 0;
            }
            std::cout << "FAIL: graphs are not isomorphic (" << a.size() << " vs " << b.size()
                      << " vertices, " << a.edge_count() << " vs " << b.edge_count()
                      << " edges)\n";
            return 1;
        }

        if (*chk_sk) {
            dht::GraphSquare sq = dht::square_from_json_file(sq_path);
            auto report = dht::skeletal_pushout_report(sq, sq_n);
            if (report.ok) {
                std::cout << "PASS: square is " << sq_n << "-skeletal\n";
                return 0;
            }
            std::cout << "FAIL: square is not " << sq_n << "-skeletal; in dimension "
                      << report.failed_dim << ", " << report.witness << "\n";
            return 1;
        }

        if (*chk_face) {
            dht::Graph g = dht::graph_from_json_file(face_input);
            auto x = dht::nerve_cube_sets(g, face_max_dim, face_m);
            bool ok = x.faces_valid();
            std::cout << (ok ? "PASS" : "FAIL") << ": face identities "
                      << (ok ? "hold" : "violated") << "\n";
            return ok ? 0 : 1;
        }

        if (*chk_dc) {
            dht::Graph g = dht::graph_from_json_file(dc_input);
            auto resolve = [&](const std::vector<std::string>& labels) {
                std::vector<int> ids;
                for (const auto& lab : labels) {
                    auto id = g.index_of(lab);
                    if (!id) throw std::runtime_error("unknown vertex label: " + lab);
                    ids.push_back(*id);
                }
                return ids;
            };
            bool ok = dht::distance_criterion(g, resolve(dc_a), resolve(dc_b), dc_n);
            std::cout << (ok ? "PASS" : "FAIL") << ": complements are "
                      << (ok ? "" : "not ") << "at distance >= " << dc_n + 1 << "\n";
            return ok ? 0 : 1;
        }

        if (*cmd_fseq) {
            if (fs_action == "reduce" || fs_action == "expand") {
                if (fs_expr.empty()) {
                    std::cerr << "error: missing F-sequence expression\n";
                    return 2;
                }
                dht::FSequence s;
                try {
                    s = dht::parse_fseq(fs_expr, fs_m);
                } catch (const dht::FseqParseError& e) {
                    std::cerr << "parse error: " << e.what() << "\n  " << fs_expr << "\n  "
                              << std::string(e.pos, ' ') << "^\n";
                    return 2;
                }
                if (fs_action == "reduce") {
                    std::cout << dht::to_string(dht::reduce(s)) << "\n";
                } else {
                    auto forms = dht::expanded_forms(s);
                    if (!fs_count_only)
                        for (const auto& e : forms) std::cout << dht::to_string(e) << "\n";
                    std::cout << forms.size() << "\n";
                }
                return 0;
            }
            if (fs_action == "count") {
                auto fg = dht::f_graph(fs_m, fs_n);
                size_t nb = fg.boundary_vertices().size();
                size_t ni = fg.interior_vertices().size();
                if (fs_interior)
                    std::cout << ni << "\n";
                else if (fs_boundary)
                    std::cout << nb << "\n";
                else
                    std::cout << "vertices " << fg.graph.size() << " boundary " << nb
                              << " interior " << ni << "\n";
                return 0;
            }
            std::cerr << "error: unknown fseq action " << fs_action << "\n";
            return 2;
        }

        if (*cmd_nerve) {
            dht::Graph g = dht::graph_from_json_file(nerve_input);
            double budget = enumeration_budget(nerve_budget);
            for (int d = 0; d <= nerve_max_dim; ++d) {
                double est = dht::estimate_cube_count(g, d);
                if (est > budget) {
                    std::cerr << "refused: estimated " << est << " lattice paths in dimension "
                              << d << " exceeds budget " << budget << "\n";
                    return 3;
                }
            }
            if (nerve_dump) {
                std::cout << dht::semicubical_to_json(dht::nerve_cube_sets(g, nerve_max_dim, nerve_m))
                          << "\n";
                return 0;
            }
            for (int d = 0; d <= nerve_max_dim; ++d) {
                long long total = 0, nondeg = 0;
                dht::for_each_cube_map(g, d, nerve_m, [&](const std::vector<int>& f) {
                    ++total;
                    if (!dht::is_degenerate_cube_map(f, d, nerve_m)) ++nondeg;
                });
                std::cout << "dim " << d << ": " << total << " cubes, " << nondeg
                          << " non-degenerate\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
