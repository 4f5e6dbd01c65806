#include "kfds/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kfds/exact.hpp"
#include "kfds/field.hpp"
#include "kfds/io.hpp"
#include "kfds/swe1d.hpp"
#include "kfds/verify.hpp"

namespace kfds {
namespace {

struct HelpRequested {
    std::string text;
};

void check_parent_dir(const std::string& path) {
    namespace fs = std::filesystem;
    const fs::path p(path);
    const fs::path dir = p.parent_path();
    if (!dir.empty() && !fs::is_directory(dir))
        throw IoError("output directory does not exist: " + dir.string());
}

std::vector<std::pair<std::string, std::string>> run_metadata(const RunConfig& cfg,
                                                              const CaseSetup& setup, int nx,
                                                              int ny, double t, long steps) {
    std::vector<std::pair<std::string, std::string>> m;
    m.emplace_back("case", setup.name);
    m.emplace_back("scheme", scheme_name(cfg.scheme));
    m.emplace_back("lambda", wave_speed_mode_name(cfg.resolved_mode()));
    m.emplace_back("cells", ny > 0 ? std::to_string(nx) + "x" + std::to_string(ny)
                                   : std::to_string(nx));
    m.emplace_back("cfl", io::format_double(cfg.cfl));
    m.emplace_back("t", io::format_double(t));
    m.emplace_back("steps", std::to_string(steps));
    for (const auto& kv : setup.metadata) m.push_back(kv);
    return m;
}

void write_table(const RunConfig& cfg, const io::Table& table) {
    if (cfg.out_path.empty()) return;
    check_parent_dir(cfg.out_path);
    if (cfg.format == "json")
        io::write_table_json(cfg.out_path, table);
    else
        io::write_table_csv(cfg.out_path, table);
}

TimeControls make_controls(const RunConfig& cfg, const CaseSetup& setup) {
    TimeControls tc;
    tc.cfl = cfg.cfl;
    tc.t_final = cfg.t_final ? *cfg.t_final : setup.t_final;
    tc.steady_tol = cfg.steady_tol;
    return tc;
}

int run_scalar_1d(const RunConfig& cfg, const CaseSetup& setup) {
    const int n = cfg.cells > 0 ? cfg.cells : setup.default_cells;
    const Grid1D grid = build_grid_1d(setup.x_min, setup.x_max, n);
    ScalarField1D field = ScalarField1D::from_function(grid, setup.initial1d);
    RunLog log;
    const ScalarField1D final_field = run_to_time(field, setup.model, cfg.scheme, setup.bc1d,
                                                  cfg.resolved_mode(), make_controls(cfg, setup),
                                                  &log);
    io::Table table;
    table.metadata = run_metadata(cfg, setup, n, 0, final_field.t, log.steps);
    table.columns = {"x", "u_num"};
    table.data.push_back(grid.centers());
    table.data.push_back(final_field.u);

    std::ostringstream summary;
    summary << "case=" << setup.name << " scheme=" << scheme_name(cfg.scheme)
            << " lambda=" << wave_speed_mode_name(cfg.resolved_mode()) << " cells=" << n
            << " t=" << final_field.t << " steps=" << log.steps;
    if (setup.is_steady() && !cfg.t_final)
        summary << " residual=" << log.final_residual;
    if (setup.oracle1d) {
        ArrayXd exact_values(n);
        for (int j = 0; j < n; ++j)
            exact_values[j] = setup.oracle1d(grid.center(j), final_field.t);
        table.columns.push_back("u_exact");
        table.data.push_back(exact_values);
        const auto [l1, l2] = error_norms(final_field.u, exact_values, grid.dx);
        summary << " L1=" << l1 << " L2=" << l2;
        if (setup.id == CaseId::tc5 && l1 > 0.1)
            summary << " [stationary expansion shock at the sonic point; try --lambda hybrid]";
    }
    write_table(cfg, table);
    std::cout << summary.str() << "\n";
    return kExitOk;
}

int run_swe_1d(const RunConfig& cfg, const CaseSetup& setup) {
    const int n = cfg.cells > 0 ? cfg.cells : setup.default_cells;
    const Grid1D grid = build_grid_1d(setup.x_min, setup.x_max, n);
    SweState state =
        SweState::create(grid, setup.swe_depth, setup.swe_discharge, setup.swe_bed,
                         setup.gravity);
    RunLog log;
    const SweState final_state = run_swe_to_time(state, cfg.scheme, setup.bc1d,
                                                 cfg.resolved_mode(),
                                                 make_controls(cfg, setup), &log);
    io::Table table;
    table.metadata = run_metadata(cfg, setup, n, 0, final_state.t, log.steps);
    table.columns = {"x", "h", "hu", "bed"};
    table.data = {grid.centers(), final_state.h, final_state.hu, final_state.bed};
    write_table(cfg, table);
    std::cout << "case=" << setup.name << " scheme=" << scheme_name(cfg.scheme)
              << " lambda=" << wave_speed_mode_name(cfg.resolved_mode()) << " cells=" << n
              << " t=" << final_state.t << " steps=" << log.steps
              << " mass=" << final_state.h.sum() * grid.dx << "\n";
    return kExitOk;
}

int run_scalar_2d(const RunConfig& cfg, const CaseSetup& setup) {
    const int nx = cfg.cells > 0 ? cfg.cells : setup.default_cells;
    const int ny = cfg.cells_y > 0 ? cfg.cells_y : (cfg.cells > 0 ? nx : setup.default_cells_y);
    const Grid2D grid = build_grid_2d(setup.x_min, setup.x_max, setup.y_min, setup.y_max, nx, ny);
    ScalarField2D field = ScalarField2D::from_function(grid, setup.initial2d);
    RunLog log;
    const ScalarField2D final_field =
        run_2d_scalar_to_time(field, setup.model, cfg.scheme, setup.bc2d, cfg.resolved_mode(),
                              make_controls(cfg, setup), &log);

    io::Table table;
    table.metadata = run_metadata(cfg, setup, nx, ny, final_field.t, log.steps);
    table.columns = {"x", "y", "u"};
    const int cells = nx * ny;
    ArrayXd xs(cells), ys(cells), us(cells);
    for (int j = 0, r = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i, ++r) {
            xs[r] = grid.x_center(i);
            ys[r] = grid.y_center(j);
            us[r] = final_field.u(i, j);
        }
    table.data = {xs, ys, us};

    std::ostringstream summary;
    summary << "case=" << setup.name << " scheme=" << scheme_name(cfg.scheme)
            << " lambda=" << wave_speed_mode_name(cfg.resolved_mode()) << " cells=" << nx << "x"
            << ny << " t=" << final_field.t << " steps=" << log.steps;
    if (setup.is_steady() && !cfg.t_final) summary << " residual=" << log.final_residual;
    if (setup.oracle2d) {
        ArrayXd ex(cells);
        for (int j = 0, r = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i, ++r)
                ex[r] = setup.oracle2d(grid.x_center(i), grid.y_center(j), final_field.t);
        table.columns.push_back("u_exact");
        table.data.push_back(ex);
        const double cell_area = grid.cell_area();
        const double l1 = cell_area * (us - ex).abs().sum();
        const double l2 = std::sqrt(cell_area * ((us - ex) * (us - ex)).sum());
        summary << " L1=" << l1 << " L2=" << l2;
    }
    write_table(cfg, table);
    std::cout << summary.str() << "\n";
    return kExitOk;
}

int run_swe_2d(const RunConfig& cfg, const CaseSetup& setup) {
    const int nx = cfg.cells > 0 ? cfg.cells : setup.default_cells;
    const int ny = cfg.cells_y > 0 ? cfg.cells_y : (cfg.cells > 0 ? nx : setup.default_cells_y);
    const Grid2D grid = build_grid_2d(setup.x_min, setup.x_max, setup.y_min, setup.y_max, nx, ny);
    SweField2D field = SweField2D::create(grid, setup.swe2d_depth, setup.gravity);
    RunLog log;
    const SweField2D final_field = run_2d_swe_to_time(field, cfg.scheme, setup.bc2d,
                                                      cfg.resolved_mode(),
                                                      make_controls(cfg, setup), &log);
    io::Table table;
    table.metadata = run_metadata(cfg, setup, nx, ny, final_field.t, log.steps);
    table.columns = {"x", "y", "h", "hu", "hv"};
    const int cells = nx * ny;
    ArrayXd xs(cells), ys(cells), hs(cells), hus(cells), hvs(cells);
    for (int j = 0, r = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i, ++r) {
            xs[r] = grid.x_center(i);
            ys[r] = grid.y_center(j);
            hs[r] = final_field.h(i, j);
            hus[r] = final_field.hu(i, j);
            hvs[r] = final_field.hv(i, j);
        }
    table.data = {xs, ys, hs, hus, hvs};
    write_table(cfg, table);
    std::cout << "case=" << setup.name << " scheme=" << scheme_name(cfg.scheme)
              << " lambda=" << wave_speed_mode_name(cfg.resolved_mode()) << " cells=" << nx
              << "x" << ny << " t=" << final_field.t << " steps=" << log.steps
              << " mass=" << final_field.h.sum() * grid.cell_area() << "\n";
    return kExitOk;
}

int run_eoc(const RunConfig& cfg) {
    std::vector<int> grids = cfg.grids;
    if (grids.empty()) grids = {20, 40, 80, 160, 320, 640, 1280};
    const ConvergenceReport report =
        convergence_study(cfg.case_id, cfg.scheme, grids, cfg.cfl, cfg.mode);
    if (!cfg.out_path.empty()) {
        check_parent_dir(cfg.out_path);
        if (cfg.format == "json")
            io::write_convergence_json(cfg.out_path, report);
        else
            io::write_convergence_csv(cfg.out_path, report);
    }
    std::cout << "case=" << report.case_id << " scheme=" << report.scheme << " eoc\n";
    std::printf("%8s %12s %14s %8s %14s %8s\n", "n", "dx", "L1", "L1_EOC", "L2", "L2_EOC");
    for (size_t r = 0; r < report.rows.size(); ++r) {
        const auto& row = report.rows[r];
        std::printf("%8d %12.6g %14.8e", row.n_cells, row.dx, row.l1);
        if (r > 0 && report.eoc_l1[r - 1]) std::printf(" %8.3f", *report.eoc_l1[r - 1]);
        else std::printf(" %8s", "-");
        std::printf(" %14.8e", row.l2);
        if (r > 0 && report.eoc_l2[r - 1]) std::printf(" %8.3f\n", *report.eoc_l2[r - 1]);
        else std::printf(" %8s\n", "-");
    }
    if (!report.error.empty()) {
        std::cerr << "error: study aborted: " << report.error << "\n";
        return kExitDivergence;
    }
    return kExitOk;
}

}  // namespace

CliOptions parse_args(const std::vector<std::string>& args) {
    CLI::App app{"finite-volume solver for convection-diffusion and shallow-water benchmarks"};
    app.name("kfds");

    std::string config_path, case_s, scheme_s, lambda_s, cells_s, grids_s, out_s, format_s;
    double cfl = -1.0, tfinal = std::numeric_limits<double>::quiet_NaN();
    double steady_tol = -1.0;
    bool eoc = false;

    app.add_option("--config", config_path, "key=value config file (flags override)");
    app.add_option("--case", case_s, "test case: tc1..tc15 (a/b variants) or smooth");
    app.add_option("--scheme", scheme_s, "scheme: kfds, kfds+, klw, tvd, tvd+");
    app.add_option("--cells", cells_s, "cell count N (1D) or NxM (2D)");
    app.add_option("--cfl", cfl, "CFL number in (0, 1]");
    app.add_option("--tfinal", tfinal, "final time; overrides the case default");
    app.add_option("--lambda", lambda_s, "wave-speed mode: ce, rh, hybrid");
    app.add_option("--steady-tol", steady_tol,
                   "residual tolerance for steady marches (default 1e-10)");
    app.add_flag("--eoc", eoc, "run a grid-convergence study");
    app.add_option("--grids", grids_s, "comma-separated cell counts for --eoc");
    app.add_option("--out", out_s, "output file path");
    app.add_option("--format", format_s, "output format: csv or json");

    if (args.empty()) throw ConfigError("no arguments given\n" + app.help());

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw ConfigError(std::string(e.what()) + "\n" + app.help());
    }

    CliOptions opt;
    if (!config_path.empty()) opt.config = load_run_config(config_path);
    if (!case_s.empty()) apply_key_value(opt.config, "case", case_s);
    if (!scheme_s.empty()) apply_key_value(opt.config, "scheme", scheme_s);
    if (!lambda_s.empty()) apply_key_value(opt.config, "lambda", lambda_s);
    if (!cells_s.empty()) apply_key_value(opt.config, "cells", cells_s);
    if (cfl >= 0.0) opt.config.cfl = cfl;
    if (!std::isnan(tfinal)) opt.config.t_final = tfinal;
    if (steady_tol > 0.0) opt.config.steady_tol = steady_tol;
    if (eoc) opt.config.eoc = true;
    if (!grids_s.empty()) opt.config.grids = parse_grid_list(grids_s);
    if (!out_s.empty()) opt.config.out_path = out_s;
    if (!format_s.empty()) opt.config.format = format_s;

    opt.config.validate();
    opt.output.path = opt.config.out_path;
    opt.output.format =
        opt.config.format == "json" ? OutputSpec::Format::Json : OutputSpec::Format::Csv;
    opt.output.what = opt.config.eoc ? OutputSpec::What::EocTable : OutputSpec::What::Field;

    // Contradictory-flag checks beyond per-option validation.
    if (opt.config.eoc) {
        const CaseSetup setup = get_case(opt.config.case_id);
        if (setup.kind != CaseKind::Scalar1D || !setup.oracle1d)
            throw ConfigError("--eoc needs a 1D case with a closed-form solution; " +
                              setup.name + " has none");
    }
    return opt;
}

int run_case(const CliOptions& options) {
    const RunConfig& cfg = options.config;
    if (cfg.eoc) return run_eoc(cfg);
    const CaseSetup setup = get_case(cfg.case_id);
    switch (setup.kind) {
        case CaseKind::Scalar1D: return run_scalar_1d(cfg, setup);
        case CaseKind::Swe1D: return run_swe_1d(cfg, setup);
        case CaseKind::Scalar2D: return run_scalar_2d(cfg, setup);
        case CaseKind::Swe2D: return run_swe_2d(cfg, setup);
    }
    throw ConfigError("unhandled case kind");
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    try {
        return run_case(parse_args(args));
    } catch (const HelpRequested& h) {
        std::cout << h.text;
        return kExitOk;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const DivergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDivergence;
    } catch (const StateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDivergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace kfds
