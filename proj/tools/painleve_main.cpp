// painleve_main.cpp -- command-line front end.
//
// Subcommands: hm, connect, gl, rescale, verify. Each takes an optional JSON
// config (--config), an output directory (--out), and --quiet. Exit codes:
// 0 converged / completed, 2 solver error or missing artifacts, 3 post-check
// (NonPhysical) failure, 4 I/O or config errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "painleve/connect.hpp"
#include "painleve/csv_io.hpp"
#include "painleve/gl.hpp"
#include "painleve/hastings_mcleod.hpp"
#include "painleve/operators.hpp"
#include "painleve/special.hpp"
#include "painleve/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace painleve;

namespace {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& m) : std::runtime_error(m) {}
};

struct MissingArtifact : std::runtime_error {
    explicit MissingArtifact(const std::string& m) : std::runtime_error(m) {}
};

constexpr int kExitOk = 0;
constexpr int kExitSolver = 2;
constexpr int kExitNonPhysical = 3;
constexpr int kExitIo = 4;

std::string iso_now() {
    char buf[32];
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");
    return j;
}

// Unknown keys are rejected: a typo in a tolerance silently falling back to
// a default is worse than an error.
void check_keys(const json& obj, const std::vector<std::string>& allowed,
                const std::string& ctx) {
    for (const auto& item : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
            throw ConfigError("unknown key '" + item.key() + "' in " + ctx + " config");
    }
}

double get_num(const json& obj, const char* key, double dflt) {
    if (!obj.contains(key)) return dflt;
    if (!obj[key].is_number()) throw ConfigError(std::string("key '") + key + "' must be a number");
    return obj[key].get<double>();
}

int get_int(const json& obj, const char* key, int dflt) {
    if (!obj.contains(key)) return dflt;
    if (!obj[key].is_number_integer())
        throw ConfigError(std::string("key '") + key + "' must be an integer");
    return obj[key].get<int>();
}

const std::vector<std::string> kSolverKeys = {
    "abs_tol", "max_newton_iters", "damping_min", "linsolve_tol", "clamp_bound"};

void apply_solver_keys(const json& obj, SolverConfig& cfg) {
    cfg.abs_tol = get_num(obj, "abs_tol", cfg.abs_tol);
    cfg.max_newton_iters = get_int(obj, "max_newton_iters", cfg.max_newton_iters);
    cfg.damping_min = get_num(obj, "damping_min", cfg.damping_min);
    cfg.linsolve_tol = get_num(obj, "linsolve_tol", cfg.linsolve_tol);
    cfg.clamp_bound = get_num(obj, "clamp_bound", cfg.clamp_bound);
    cfg.validate();
}

std::vector<std::string> with_solver_keys(std::vector<std::string> keys) {
    keys.insert(keys.end(), kSolverKeys.begin(), kSolverKeys.end());
    return keys;
}

HMProblem hm_problem_from(const json& cfg) {
    check_keys(cfg, with_solver_keys({"a", "b", "n"}), "hm");
    const Grid1D grid(get_num(cfg, "a", -12.0), get_num(cfg, "b", 8.0),
                      get_int(cfg, "n", 2001));
    SolverConfig sc;
    sc.abs_tol = 1e-6;
    sc.max_newton_iters = 60;
    sc.clamp_bound = std::sqrt(std::max(-grid.a, 1.0) / 2.0) + 1.0;
    apply_solver_keys(cfg, sc);
    return HMProblem::make(grid, sc);
}

ConnectProblem connect_problem_from(const json& cfg) {
    check_keys(cfg, with_solver_keys({"x1min", "x1max", "x2min", "x2max", "n1", "n2"}),
               "connect");
    const double x2min = get_num(cfg, "x2min", 0.0);
    if (x2min != 0.0) throw ConfigError("connect: x2min must be 0 (odd axis)");
    const Grid2D grid(get_num(cfg, "x1min", -12.0), get_num(cfg, "x1max", 6.0), x2min,
                      get_num(cfg, "x2max", 16.0), get_int(cfg, "n1", 361),
                      get_int(cfg, "n2", 321));
    SolverConfig sc;
    sc.abs_tol = 1e-9;
    sc.max_newton_iters = 40;
    sc.clamp_bound = std::sqrt(-grid.x1min / 2.0) + 1.0;
    apply_solver_keys(cfg, sc);
    return ConnectProblem::make(grid, sc);
}

struct GlChainConfig {
    std::vector<double> epsilons{0.1, 0.05, 0.025};
    double chi = 0.5;
    double L = 2.5;
    int nodes_per_layer = 16;
    json solver_overrides;
};

GlChainConfig gl_chain_from(const json& cfg) {
    check_keys(cfg, with_solver_keys({"epsilons", "chi", "L", "nodes_per_layer"}), "gl");
    GlChainConfig out;
    if (cfg.contains("epsilons")) {
        if (!cfg["epsilons"].is_array() || cfg["epsilons"].empty())
            throw ConfigError("gl: epsilons must be a nonempty array");
        out.epsilons.clear();
        for (const auto& e : cfg["epsilons"]) {
            if (!e.is_number()) throw ConfigError("gl: epsilons must be numbers");
            out.epsilons.push_back(e.get<double>());
        }
    }
    for (std::size_t i = 0; i < out.epsilons.size(); ++i) {
        if (!(out.epsilons[i] > 0)) throw ConfigError("gl: epsilons must be positive");
        if (i > 0 && !(out.epsilons[i] < out.epsilons[i - 1]))
            throw ConfigError("gl: epsilon list must be strictly decreasing");
    }
    out.chi = get_num(cfg, "chi", 0.5);
    out.L = get_num(cfg, "L", 2.5);
    out.nodes_per_layer = get_int(cfg, "nodes_per_layer", 16);
    out.solver_overrides = cfg;
    return out;
}

GLProblem gl_problem_for(const GlChainConfig& chain, double eps) {
    GLProblem prob = GLProblem::make(eps, chain.chi, chain.L, chain.nodes_per_layer);
    apply_solver_keys(chain.solver_overrides, prob.config);
    return prob;
}

std::string eps_tag(double e) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", e);
    return buf;
}

void write_json(const fs::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << j.dump(2) << '\n';
}

// ---------------------------------------------------------------------------

int cmd_hm(const json& cfg, const fs::path& out_dir, bool quiet) {
    HMProblem prob = hm_problem_from(cfg);
    HMSolveStats stats;
    Field1D h;
    try {
        h = solve_hastings_mcleod(prob, nullptr, &stats);
    } catch (const NonPhysical& e) {
        std::cerr << "hm: " << e.what() << "\n";
        return kExitNonPhysical;
    } catch (const NewtonDiverged& e) {
        std::cerr << "hm: " << e.what() << "\n";
        return kExitSolver;
    }
    write_field_csv((out_dir / "h.csv").string(), h);
    write_jsonl_log((out_dir / "hm_log.jsonl").string(), stats.steps);
    json summary{{"started_at", iso_now()},
                 {"a", prob.grid.a},
                 {"b", prob.grid.b},
                 {"n", prob.grid.n},
                 {"residual_sup", stats.final_residual},
                 {"newton_iters", static_cast<int>(stats.steps.size())},
                 {"h_at_0", lagrange_interp_1d(h, 0.0)},
                 {"right_ratio", h.values.back() / airy_ai(prob.grid.b)},
                 {"left_ratio", h.values.front() / std::sqrt(-prob.grid.a / 2.0)}};
    write_json(out_dir / "hm_summary.json", summary);
    if (!quiet)
        std::cout << "hm: converged, residual " << stats.final_residual << ", outputs in "
                  << out_dir.string() << "\n";
    return kExitOk;
}

int cmd_connect(const json& cfg, const fs::path& out_dir, bool quiet) {
    ConnectProblem prob = connect_problem_from(cfg);
    Solve2DStats stats;
    Field2D y;
    try {
        y = solve_connecting(prob, nullptr, &stats);
    } catch (const NonPhysical& e) {
        std::cerr << "connect: " << e.what() << "\n";
        return kExitNonPhysical;
    } catch (const NewtonDiverged& e) {
        std::cerr << "connect: " << e.what() << "\n";
        return kExitSolver;
    }
    write_field_csv((out_dir / "y.csv").string(), y);
    write_jsonl_log((out_dir / "connect_log.jsonl").string(), stats.steps);
    const ConnectChecks cc = run_connect_checks(y, prob.h_ref);
    const DecayCheck dc = check_decay(y);
    json summary{{"started_at", iso_now()},
                 {"residual_sup", stats.final_residual},
                 {"newton_iters", static_cast<int>(stats.steps.size())},
                 {"descent_iters", stats.descent_iters},
                 {"energy_initial", stats.initial_energy},
                 {"energy_final", stats.final_energy},
                 {"decay_M", dc.M},
                 {"decay_argmax_x1", dc.argmax_x1},
                 {"decay_pass", dc.pass},
                 {"top_edge_gap", cc.top_edge_gap},
                 {"airy_ratio", cc.airy_ratio}};
    write_json(out_dir / "connect_summary.json", summary);
    if (!quiet)
        std::cout << "connect: converged, residual " << stats.final_residual
                  << ", outputs in " << out_dir.string() << "\n";
    return kExitOk;
}

int cmd_gl(const json& cfg, const fs::path& out_dir, bool quiet) {
    GlChainConfig chain = gl_chain_from(cfg);
    Field2D prev;
    bool have_prev = false;
    for (double eps : chain.epsilons) {
        GLProblem prob = gl_problem_for(chain, eps);
        Solve2DStats stats;
        Field2D u;
        try {
            if (have_prev) {
                Field2D init(prob.grid);
                for (int i1 = 0; i1 < prob.grid.n1; ++i1)
                    for (int i2 = 0; i2 < prob.grid.n2; ++i2)
                        init.at(i1, i2) = sample(prev, prob.grid.x1(i1), prob.grid.x2(i2));
                u = minimize_odd(prob, &init, &stats);
            } else {
                u = minimize_odd(prob, nullptr, &stats);
            }
        } catch (const NonPhysical& e) {
            std::cerr << "gl(eps=" << eps << "): " << e.what() << "\n";
            return kExitNonPhysical;
        } catch (const NewtonDiverged& e) {
            std::cerr << "gl(eps=" << eps << "): " << e.what() << "\n";
            return kExitSolver;
        }
        const std::string tag = eps_tag(eps);
        write_field_csv((out_dir / ("u_eps" + tag + ".csv")).string(), u);
        write_jsonl_log((out_dir / ("gl_eps" + tag + "_log.jsonl")).string(), stats.steps);
        const GLEnergyParts parts = gl_energy_parts(u, prob);
        json summary{{"started_at", iso_now()},
                     {"epsilon", eps},
                     {"chi", chain.chi},
                     {"energy", parts.energy},
                     {"energy_identity_gap", parts.identity_gap_rel},
                     {"tf_gap", thomas_fermi_gap(u, prob).gap},
                     {"min_K_bound", min_k_bound(u, prob)}};
        write_json(out_dir / ("gl_eps" + tag + "_summary.json"), summary);
        if (!quiet)
            std::cout << "gl: eps = " << eps << " converged, energy " << parts.energy
                      << "\n";
        prev = std::move(u);
        have_prev = true;
    }
    return kExitOk;
}

int cmd_rescale(const json& cfg, const fs::path& out_dir, bool quiet) {
    check_keys(cfg, {"x1_level", "x2_offset", "t2_window", "samples", "connect"},
               "rescale");
    const double x1_level = get_num(cfg, "x1_level", -11.0);
    const double x2_offset = get_num(cfg, "x2_offset", 0.0);
    const double t2_window = get_num(cfg, "t2_window", 4.0);
    const int samples = get_int(cfg, "samples", 161);
    ConnectProblem prob =
        connect_problem_from(cfg.contains("connect") ? cfg["connect"] : json::object());
    Field2D y;
    try {
        y = solve_connecting(prob);
    } catch (const NonPhysical& e) {
        std::cerr << "rescale: " << e.what() << "\n";
        return kExitNonPhysical;
    } catch (const NewtonDiverged& e) {
        std::cerr << "rescale: " << e.what() << "\n";
        return kExitSolver;
    }
    const RescaledProfile p = rescale_to_allen_cahn(y, x1_level, x2_offset, t2_window, samples);
    write_profile_csv((out_dir / "profile.csv").string(), p);
    if (!quiet) std::cout << "rescale: profile written to " << out_dir.string() << "\n";
    return kExitOk;
}

VerifyParams verify_params_from(const json& cfg) {
    check_keys(cfg,
               {"hm", "connect", "gl", "x1_level", "t2_window", "window", "artifacts_dir"},
               "verify");
    VerifyParams p;
    if (cfg.contains("hm")) {
        const json& h = cfg["hm"];
        check_keys(h, {"a", "b", "n"}, "verify.hm");
        p.hm_grid = Grid1D(get_num(h, "a", -12.0), get_num(h, "b", 8.0), get_int(h, "n", 2001));
    }
    if (cfg.contains("connect")) {
        const json& c = cfg["connect"];
        check_keys(c, {"x1min", "x1max", "x2max", "n1", "n2"}, "verify.connect");
        p.connect_grid = Grid2D(get_num(c, "x1min", -12.0), get_num(c, "x1max", 6.0), 0.0,
                                get_num(c, "x2max", 16.0), get_int(c, "n1", 361),
                                get_int(c, "n2", 321));
    }
    if (cfg.contains("gl")) {
        const GlChainConfig chain = gl_chain_from(cfg["gl"]);
        p.epsilons = chain.epsilons;
        p.chi = chain.chi;
        p.L = chain.L;
        p.nodes_per_layer = chain.nodes_per_layer;
    }
    p.x1_level = get_num(cfg, "x1_level", -11.0);
    p.t2_window = get_num(cfg, "t2_window", 4.0);
    if (cfg.contains("window")) {
        const json& w = cfg["window"];
        check_keys(w, {"s1min", "s1max", "s2min", "s2max", "m1", "m2"}, "verify.window");
        p.window.s1min = get_num(w, "s1min", -3.0);
        p.window.s1max = get_num(w, "s1max", 3.0);
        p.window.s2min = get_num(w, "s2min", -3.0);
        p.window.s2max = get_num(w, "s2max", 3.0);
        p.window.m1 = get_int(w, "m1", 121);
        p.window.m2 = get_int(w, "m2", 121);
    }
    p.validate();
    return p;
}

VerifyArtifacts load_artifacts(const VerifyParams& p, const fs::path& dir) {
    VerifyArtifacts art;
    auto need = [&](const std::string& name) {
        const fs::path path = dir / name;
        if (!fs::exists(path)) throw MissingArtifact("missing artifact: " + path.string());
        return path.string();
    };
    art.h = read_field_csv_1d(need("h.csv"));
    art.y = read_field_csv_2d(need("y.csv"));
    {
        SolverConfig cfg;
        cfg.abs_tol = 1e-6;
        cfg.max_newton_iters = 60;
        cfg.clamp_bound = std::sqrt(-art.y.grid.x1min / 2.0) + 1.0;
        art.h_ref = solve_hastings_mcleod(HMProblem::make(
            Grid1D(art.y.grid.x1min, art.y.grid.x1max, art.y.grid.n1), cfg));
    }
    for (double eps : p.epsilons) {
        GLRun run{GLProblem::make(eps, p.chi, p.L, p.nodes_per_layer), Field2D()};
        run.u = read_field_csv_2d(need("u_eps" + eps_tag(eps) + ".csv"));
        if (!(run.u.grid == run.prob.grid))
            throw MissingArtifact("artifact grid mismatch for eps = " + eps_tag(eps));
        art.gl.push_back(std::move(run));
    }
    return art;
}

int cmd_verify(const json& cfg, const fs::path& out_dir, bool quiet) {
    VerifyParams params = verify_params_from(cfg);
    VerificationReport report;
    try {
        VerifyArtifacts art;
        if (cfg.contains("artifacts_dir")) {
            art = load_artifacts(params, fs::path(cfg["artifacts_dir"].get<std::string>()));
        } else {
            art = compute_verify_artifacts(params, quiet ? nullptr : &std::cout);
        }
        report = build_report(params, art);
    } catch (const MissingArtifact& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return kExitSolver;
    } catch (const NonPhysical& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return kExitNonPhysical;
    } catch (const NewtonDiverged& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return kExitSolver;
    }
    json out = report_to_json(report);
    out["started_at"] = iso_now();
    write_json(out_dir / "verify_report.json", out);
    if (!quiet) {
        for (const auto& c : report.checks)
            std::cout << (c.pass ? "[pass] " : "[FAIL] ") << c.name << ": measured "
                      << c.measured << " vs tolerance " << c.tolerance << "\n";
        std::cout << "verify: report written to " << out_dir.string() << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Painleve II connecting-solution and Ginzburg-Landau minimizer suite"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::string out_dir = "out";
    bool quiet = false;
    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--out", out_dir, "output directory");
    app.add_flag("--quiet", quiet, "suppress progress output");

    CLI::App* sub_hm = app.add_subcommand("hm", "solve the 1D Hastings-McLeod problem");
    CLI::App* sub_connect = app.add_subcommand("connect", "solve the 2D connecting problem");
    CLI::App* sub_gl = app.add_subcommand("gl", "minimize the Ginzburg-Landau energy chain");
    CLI::App* sub_rescale =
        app.add_subcommand("rescale", "emit the deep-left Allen-Cahn profile data");
    CLI::App* sub_verify = app.add_subcommand("verify", "run the verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitIo;  // bad invocation is a config error
    }

    try {
        json cfg;
        fs::path out;
        try {
            cfg = load_config(config_path);
            out = fs::path(out_dir);
            fs::create_directories(out);
        } catch (const std::exception& e) {
            std::cerr << "config: " << e.what() << "\n";
            return kExitIo;
        }

        try {
            if (sub_hm->parsed()) return cmd_hm(cfg, out, quiet);
            if (sub_connect->parsed()) return cmd_connect(cfg, out, quiet);
            if (sub_gl->parsed()) return cmd_gl(cfg, out, quiet);
            if (sub_rescale->parsed()) return cmd_rescale(cfg, out, quiet);
            if (sub_verify->parsed()) return cmd_verify(cfg, out, quiet);
        } catch (const ConfigError& e) {
            std::cerr << "config: " << e.what() << "\n";
            return kExitIo;
        } catch (const std::invalid_argument& e) {
            std::cerr << "config: " << e.what() << "\n";
            return kExitIo;
        } catch (const std::domain_error& e) {
            std::cerr << "config: " << e.what() << "\n";
            return kExitIo;
        }
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}
