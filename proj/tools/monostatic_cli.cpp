// Command-line front door: generate spiral bodies, classify meshes, run
// optimizations and scans, and verify the embedded reference tables.
//
// Exit codes: 0 success, 1 verify mismatch, 2 invalid parameters,
// 3 construction failure, 4 non-convex input, 5 marginal equilibria present,
// 6 optimizer failure.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "monostatic/build.hpp"
#include "monostatic/equilibrium.hpp"
#include "monostatic/fixtures.hpp"
#include "monostatic/hull.hpp"
#include "monostatic/mass.hpp"
#include "monostatic/mesh_io.hpp"
#include "monostatic/monotonic.hpp"
#include "monostatic/optimize.hpp"
#include "monostatic/oracle.hpp"

using namespace monostatic;
using nlohmann::json;

namespace {

constexpr int kExitVerifyMismatch = 1;
constexpr int kExitInvalidParams = 2;
constexpr int kExitConstruction = 3;
constexpr int kExitNonConvex = 4;
constexpr int kExitMarginal = 5;
constexpr int kExitOptimizer = 6;

double eps_rel_from_env() {
    if (const char* s = std::getenv("MONOSTATIC_TOLERANCE")) {
        try {
            double v = std::stod(s);
            if (v > 0.0) return v;
        } catch (...) {
        }
        std::cerr << "warning: ignoring malformed MONOSTATIC_TOLERANCE\n";
    }
    return kDefaultEpsRel;
}

std::vector<double> parse_angle_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stod(tok));
    }
    return out;
}

std::string fmt_angles_5g(const std::vector<double>& deg) {
    std::string out;
    char buf[64];
    for (std::size_t i = 0; i < deg.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.5g", deg[i]);
        if (i) out += " ";
        out += buf;
    }
    return out;
}

json optimization_to_json(const OptimizationResult& res, double eps_rel) {
    json j;
    j["n"] = res.n;
    j["k"] = res.k;
    j["v"] = res.v;
    j["alphas_deg_table_order"] = res.alphas_table_order_deg();
    j["z_C"] = res.objective;
    j["status"] = to_string(res.status);
    j["starts"] = res.starts;
    j["evaluations"] = res.evaluations;
    if (res.status != OptStatus::Infeasible) {
        SpiralParams p;
        p.n = res.n;
        p.k = res.k;
        p.alphas = res.alphas;
        if (res.k >= 3) {
            KSpiralBuild b = build_k_spiral(p);
            EquilibriumReport rep = classify(b.poly, centroid(b.poly, MassModel::Vertex), eps_rel);
            j["report"] = json::parse(report_to_json(rep, b.poly));
        } else {
            Polygon2D poly = build_double_spiral(p);
            EquilibriumReport2D rep = classify_2d(poly, centroid(poly, MassModel::Vertex), eps_rel);
            j["report"] = json::parse(report_to_json(rep, poly));
        }
    }
    return j;
}

int cmd_generate(int n, int k, const std::string& alphas_csv, int table_row,
                 const std::string& json_path, const std::string& obj_path) {
    SpiralParams params;
    try {
        if (table_row > 0) {
            if (table_row > static_cast<int>(table1().size()))
                throw InvalidParameter("table row out of range");
            params = table1()[table_row - 1].params();
        } else {
            if (alphas_csv.empty()) throw InvalidParameter("need --alphas or --table1-row");
            std::vector<double> deg = parse_angle_list(alphas_csv);
            if (n > 0 && static_cast<int>(deg.size()) != n + 1)
                throw InvalidParameter("expected n+1 angles");
            params = from_table_order_degrees(deg, k);
        }
        params.require_valid();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidParams;
    }

    try {
        ZcClosedForm zc = zc_closed_form(params);
        if (params.k >= 3) {
            KSpiralBuild b = build_k_spiral(params);
            for (const std::string& w : b.warnings) std::cerr << "warning: " << w << "\n";
            if (!json_path.empty()) write_file(json_path, to_json(b.poly));
            if (!obj_path.empty()) write_file(obj_path, to_obj(b.poly));
            std::cout << "v=" << b.poly.vertex_count() << " f=" << b.poly.face_count()
                      << " z_C=" << zc.corrected << " validation=ok\n";
        } else {
            Polygon2D poly = build_double_spiral(params);
            if (!json_path.empty()) write_file(json_path, to_json(poly));
            if (!obj_path.empty())
                throw InvalidParameter("OBJ export is for 3D meshes; k=2 builds a polygon");
            std::cout << "v=" << poly.vertex_count() << " z_C=" << zc.corrected
                      << " validation=ok\n";
        }
    } catch (const ConstructionError& e) {
        std::cerr << "construction failed: " << e.what() << "\n";
        return kExitConstruction;
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidParams;
    }
    return 0;
}

int cmd_classify(const std::string& input, const std::string& mass, int oracle_n,
                 const std::string& report_path, bool monotone_axis_z) {
    const double eps_rel = eps_rel_from_env();
    MassModel model;
    try {
        model = mass_model_from_string(mass);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidParams;
    }

    Mesh mesh;
    try {
        std::string text = read_file(input);
        if (input.size() > 4 && input.substr(input.size() - 4) == ".obj")
            mesh = polyhedron_from_obj(text);
        else
            mesh = mesh_from_json(text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidParams;
    }

    try {
        if (std::holds_alternative<Polygon2D>(mesh)) {
            const Polygon2D& poly = std::get<Polygon2D>(mesh);
            if (!poly.invalid_reason().empty()) {
                std::cerr << "non-convex input: " << poly.invalid_reason() << "\n";
                return kExitNonConvex;
            }
            EquilibriumReport2D rep = classify_2d(poly, centroid(poly, model), eps_rel);
            std::string text = report_to_json(rep, poly);
            if (!report_path.empty()) write_file(report_path, text);
            std::cout << "S=" << rep.S << " U=" << rep.U
                      << " marginal=" << rep.marginal.size() << "\n";
            return rep.marginal.empty() ? 0 : kExitMarginal;
        }

        Polyhedron poly = std::get<Polyhedron>(mesh);
        if (poly.faces.empty())
            poly = convex_hull(poly.vertices).to_polyhedron(poly.vertices);
        if (!poly.invalid_reason().empty()) {
            std::cerr << "non-convex input: " << poly.invalid_reason() << "\n";
            return kExitNonConvex;
        }
        Centroid c = centroid(poly, model);
        EquilibriumReport rep = classify(poly, c, eps_rel);
        std::string text = report_to_json(rep, poly);
        if (!report_path.empty()) write_file(report_path, text);
        std::cout << "S=" << rep.S << " H=" << rep.H << " U=" << rep.U
                  << " complexity=" << complexity(rep, poly)
                  << " marginal=" << rep.marginal.size() << "\n";
        if (oracle_n > 0) {
            OracleResult orc = sampling_oracle(poly, c, oracle_n);
            bool agree = (orc.S == rep.S && orc.U == rep.U);
            std::cout << "oracle: S=" << orc.S << " U=" << orc.U
                      << " agreement=" << (agree ? "yes" : "no") << "\n";
        }
        if (monotone_axis_z) {
            MonotonicityResult mono = radial_monotonicity(poly, c.point, {0, 0, 1});
            std::cout << "radial_monotonicity(z)=" << (mono.monotone ? "true" : "false");
            if (!mono.monotone) std::cout << "  [" << mono.witness << "]";
            std::cout << "\n";
        }
        return rep.marginal.empty() ? 0 : kExitMarginal;
    } catch (const ConstructionError& e) {
        std::cerr << "non-convex input: " << e.what() << "\n";
        return kExitNonConvex;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidParams;
    }
}

int cmd_optimize(int n, int k, int starts, unsigned seed, const std::string& json_path) {
    if (n < 1 || k < 2 || starts < 1) {
        std::cerr << "error: need n >= 1, k >= 2, starts >= 1\n";
        return kExitInvalidParams;
    }
    try {
        OptimizeOptions opts;
        opts.starts = starts;
        opts.seed = seed;
        OptimizationResult res = optimize(n, k, opts);
        json j = optimization_to_json(res, eps_rel_from_env());
        if (!json_path.empty()) write_file(json_path, j.dump(2) + "\n");
        std::cout << "n=" << res.n << " k=" << res.k << " v=" << res.v
                  << " z_C=" << res.objective << " status=" << to_string(res.status) << "\n";
        std::cout << "alphas_deg_table_order: " << fmt_angles_5g(res.alphas_table_order_deg())
                  << "\n";
        if (res.status == OptStatus::Infeasible) {
            std::cerr << "no feasible point found\n";
            return kExitOptimizer;
        }
        return 0;
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidParams;
    } catch (const std::exception& e) {
        std::cerr << "optimizer failed: " << e.what() << "\n";
        return kExitOptimizer;
    }
}

int cmd_scan(int n_max, int k_max, int starts, unsigned seed, const std::string& csv_path,
             const std::string& json_path) {
    if (n_max < 2 || k_max < 2) {
        std::cerr << "error: need --n-max >= 2 and --k-max >= 2\n";
        return kExitInvalidParams;
    }
    try {
        OptimizeOptions opts;
        opts.starts = starts;
        opts.seed = seed;
        ScanResult res = scan(n_max, k_max, opts);

        std::ostringstream csv;
        csv << "no,n,k,v,z_C,alphas_deg_table_order\n";
        char zbuf[64];
        for (std::size_t i = 0; i < res.found.size(); ++i) {
            const ScanRow& row = res.found[i];
            std::vector<double> deg(row.alphas.rbegin(), row.alphas.rend());
            for (double& a : deg) a *= 180.0 / 3.14159265358979323846;
            std::snprintf(zbuf, sizeof zbuf, "%.5e", row.z_c);
            csv << (i + 1) << "," << row.n << "," << row.k << (row.planar ? "*" : "") << ","
                << row.v << "," << zbuf << "," << fmt_angles_5g(deg) << "\n";
        }
        std::cout << csv.str();
        if (!csv_path.empty()) write_file(csv_path, csv.str());

        if (!json_path.empty()) {
            json j;
            j["found"] = json::array();
            for (const ScanRow& row : res.found) {
                std::vector<double> deg(row.alphas.rbegin(), row.alphas.rend());
                for (double& a : deg) a *= 180.0 / 3.14159265358979323846;
                j["found"].push_back({{"n", row.n},
                                      {"k", row.k},
                                      {"v", row.v},
                                      {"planar", row.planar},
                                      {"z_C", row.z_c},
                                      {"alphas_deg_table_order", deg}});
            }
            j["tried"] = json::array();
            for (const ScanRow& row : res.tried)
                j["tried"].push_back({{"n", row.n},
                                      {"k", row.k},
                                      {"z_C", row.z_c},
                                      {"status", to_string(row.status)}});
            write_file(json_path, j.dump(2) + "\n");
        }
        return 0;
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidParams;
    } catch (const std::exception& e) {
        std::cerr << "scan failed: " << e.what() << "\n";
        return kExitOptimizer;
    }
}

int cmd_verify(double perturb_row3_deg) {
    const double eps_rel = eps_rel_from_env();
    bool all_ok = true;
    auto line = [&](const std::string& name, bool ok, const std::string& detail) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
        if (!detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << "\n";
        if (!ok) all_ok = false;
    };

    std::cout << "-- centroid heights from the published angles --\n";
    for (const Table1Row& row : table1()) {
        std::vector<double> deg = row.angles_deg;
        if (row.no == 3 && perturb_row3_deg != 0.0) deg[2] += perturb_row3_deg;
        SpiralParams raw;
        raw.n = row.n;
        raw.k = row.k;
        raw.alphas.assign(deg.rbegin(), deg.rend());
        for (double& a : raw.alphas) a *= 3.14159265358979323846 / 180.0;
        // Evaluate both closed-form variants on the raw printed angles.
        double r = 1.0, phi = 0.0, sn = 0.0;
        for (int i = 0; i < raw.n; ++i) {
            r *= std::cos(raw.alphas[i]);
            phi += raw.alphas[i];
            sn += r * std::cos(phi);
        }
        double denom = 1.0 + static_cast<double>(raw.k) * raw.n;
        double plain = (1.0 + raw.k * sn) / denom;
        double corrected = plain;
        if (raw.k >= 3) {
            double s = std::sin(raw.alphas[0]), t = std::tan(3.14159265358979323846 / raw.k);
            corrected = (1.0 + raw.k * (sn + s * s * t * t / raw.k)) / denom;
        }
        bool plain_ok = std::abs(plain - row.z_c) <= 1e-4;
        bool corr_ok = std::abs(corrected - row.z_c) <= 1e-4;
        char detail[160];
        std::snprintf(detail, sizeof detail, "plain=%.6g corrected=%.6g published=%.6g matches=%s",
                      plain, corrected, row.z_c,
                      corr_ok ? (plain_ok ? "both" : "corrected") : (plain_ok ? "plain" : "none"));
        line("table1 row " + std::to_string(row.no) + " z_C", plain_ok || corr_ok, detail);
    }

    std::cout << "-- construction and classification --\n";
    for (const Table1Row& row : table1()) {
        try {
            std::vector<double> deg = row.angles_deg;
            if (row.no == 3 && perturb_row3_deg != 0.0) deg[2] += perturb_row3_deg;
            SpiralParams params = from_table_order_degrees(deg, row.k);
            if (row.k >= 3) {
                KSpiralBuild b = build_k_spiral(params);
                EquilibriumReport rep =
                    classify(b.poly, centroid(b.poly, MassModel::Vertex), eps_rel);
                char detail[120];
                std::snprintf(detail, sizeof detail, "v=%d S=%d H=%d U=%d", b.poly.vertex_count(),
                              rep.S, rep.H, rep.U);
                line("table1 row " + std::to_string(row.no) + " mono-monostatic",
                     b.poly.vertex_count() == row.v && rep.mono_monostatic(), detail);
            } else {
                Polygon2D poly = build_double_spiral(params);
                EquilibriumReport2D rep =
                    classify_2d(poly, centroid(poly, MassModel::Vertex), eps_rel);
                char detail[120];
                std::snprintf(detail, sizeof detail, "v=%d S=%d U=%d", poly.vertex_count(), rep.S,
                              rep.U);
                line("table1 row " + std::to_string(row.no) + " mono-monostatic (2D)",
                     poly.vertex_count() == row.v && rep.mono_monostatic(), detail);
            }
        } catch (const std::exception& e) {
            line("table1 row " + std::to_string(row.no) + " build", false, e.what());
        }
    }

    std::cout << "-- published coordinate blocks --\n";
    for (const Table2Block& block : table2()) {
        try {
            Polyhedron poly = convex_hull(block.points).to_polyhedron(block.points);
            EquilibriumReport rep = classify(poly, centroid(poly, MassModel::Vertex), eps_rel);
            char detail[120];
            std::snprintf(detail, sizeof detail, "S=%d H=%d U=%d expected S=%d U=%d", rep.S, rep.H,
                          rep.U, block.S, block.U);
            line("table2 block " + block.label, rep.S == block.S && rep.U == block.U, detail);
        } catch (const std::exception& e) {
            line("table2 block " + block.label, false, e.what());
        }
    }

    std::cout << (all_ok ? "VERIFY: all checks passed\n" : "VERIFY: mismatches found\n");
    return all_ok ? 0 : kExitVerifyMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conway k-spiral workbench: spiral bodies, equilibria, optimization"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "build a spiral body and export it");
    int gen_n = 0, gen_k = 0, gen_row = 0;
    std::string gen_alphas, gen_json, gen_obj;
    gen->add_option("--n", gen_n, "number of spiral steps");
    gen->add_option("--k", gen_k, "spiral multiplicity (2 = planar)");
    gen->add_option("--alphas", gen_alphas, "angles in degrees, table order (alpha_{n+1} first)");
    gen->add_option("--table1-row", gen_row, "use embedded published row 1..6");
    gen->add_option("--json", gen_json, "write mesh JSON here");
    gen->add_option("--obj", gen_obj, "write OBJ here");

    // classify
    auto* cls = app.add_subcommand("classify", "classify equilibria of a mesh file");
    std::string cls_input, cls_mass = "vertex", cls_report;
    int cls_oracle = 0;
    bool cls_monotone = false;
    cls->add_option("--input", cls_input, "mesh JSON/OBJ path")->required();
    cls->add_option("--mass", cls_mass, "vertex|edge|face|solid");
    cls->add_option("--oracle", cls_oracle, "also run the sampling oracle with N directions");
    cls->add_option("--report", cls_report, "write report JSON here");
    cls->add_flag("--monotone-z", cls_monotone, "also test radial monotonicity about z");

    // optimize
    auto* opt = app.add_subcommand("optimize", "minimize z_C over angles for fixed (n, k)");
    int opt_n = 0, opt_k = 0, opt_starts = 16;
    unsigned opt_seed = 1;
    std::string opt_json;
    opt->add_option("--n", opt_n, "spiral steps")->required();
    opt->add_option("--k", opt_k, "multiplicity")->required();
    opt->add_option("--starts", opt_starts, "multi-start count");
    opt->add_option("--seed", opt_seed, "perturbation seed");
    opt->add_option("--json", opt_json, "write result JSON here");

    // scan
    auto* scn = app.add_subcommand("scan", "minimal mono-monostatic k per n");
    int scn_nmax = 0, scn_kmax = 0, scn_starts = 8;
    unsigned scn_seed = 1;
    std::string scn_csv, scn_json;
    scn->add_option("--n-max", scn_nmax, "largest n")->required();
    scn->add_option("--k-max", scn_kmax, "largest k")->required();
    scn->add_option("--starts", scn_starts, "multi-start count per cell");
    scn->add_option("--seed", scn_seed, "perturbation seed");
    scn->add_option("--csv", scn_csv, "write table CSV here");
    scn->add_option("--json", scn_json, "write full scan JSON here");

    // verify
    auto* ver = app.add_subcommand("verify", "check the embedded reference tables");
    double ver_perturb = 0.0;
    ver->add_option("--perturb-row3-deg", ver_perturb,
                    "negative control: offset one row-3 angle by this many degrees");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalidParams;
    }

    if (gen->parsed()) return cmd_generate(gen_n, gen_k, gen_alphas, gen_row, gen_json, gen_obj);
    if (cls->parsed()) return cmd_classify(cls_input, cls_mass, cls_oracle, cls_report, cls_monotone);
    if (opt->parsed()) return cmd_optimize(opt_n, opt_k, opt_starts, opt_seed, opt_json);
    if (scn->parsed()) return cmd_scan(scn_nmax, scn_kmax, scn_starts, scn_seed, scn_csv, scn_json);
    if (ver->parsed()) return cmd_verify(ver_perturb);
    return kExitInvalidParams;
}
