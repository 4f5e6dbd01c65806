#include "kfds/verify.hpp"

#include <cmath>

#include "kfds/field.hpp"

namespace kfds {

std::pair<double, double> error_norms(const ArrayXd& numerical, const ArrayXd& analytical,
                                      double dx) {
    if (numerical.size() != analytical.size())
        throw ConfigError("error_norms: field lengths differ");
    const ArrayXd diff = numerical - analytical;
    const double l1 = dx * diff.abs().sum();
    const double l2 = std::sqrt(dx * (diff * diff).sum());
    return {l1, l2};
}

std::optional<double> eoc(double error_coarse, double error_fine) {
    if (error_coarse < 0.0 || error_fine < 0.0) throw ConfigError("eoc: negative error norm");
    if (error_coarse == 0.0 || error_fine == 0.0) return std::nullopt;
    return std::log2(error_coarse / error_fine);
}

ConvergenceReport convergence_study(CaseId id, SchemeKind scheme, const std::vector<int>& grids,
                                    double cfl, std::optional<WaveSpeedMode> mode_opt) {
    const CaseSetup setup = get_case(id);
    if (setup.kind != CaseKind::Scalar1D || !setup.oracle1d)
        throw ConfigError("case " + setup.name +
                          " has no 1D closed-form solution; convergence study unavailable");
    if (grids.empty()) throw ConfigError("convergence_study: empty grid list");
    for (size_t k = 0; k + 1 < grids.size(); ++k)
        if (grids[k + 1] != 2 * grids[k])
            throw ConfigError("convergence_study: grids must refine by factor 2");

    const WaveSpeedMode mode = mode_opt.value_or(default_mode(scheme));
    ConvergenceReport report;
    report.case_id = setup.name;
    report.scheme = scheme_name(scheme);

    for (int n : grids) {
        try {
            const Grid1D grid = build_grid_1d(setup.x_min, setup.x_max, n);
            ScalarField1D field = ScalarField1D::from_function(grid, setup.initial1d);
            TimeControls controls;
            controls.cfl = cfl;
            controls.t_final = setup.t_final;  // NaN marches to steady state
            const ScalarField1D final_field =
                run_to_time(field, setup.model, scheme, setup.bc1d, mode, controls);
            ArrayXd exact_values(n);
            for (int j = 0; j < n; ++j)
                exact_values[j] = setup.oracle1d(grid.center(j), final_field.t);
            const auto [l1, l2] = error_norms(final_field.u, exact_values, grid.dx);
            report.rows.push_back({n, grid.dx, l1, l2});
        } catch (const std::exception& e) {
            report.error = e.what();
            break;
        }
    }
    for (size_t k = 0; k + 1 < report.rows.size(); ++k) {
        report.eoc_l1.push_back(eoc(report.rows[k].l1, report.rows[k + 1].l1));
        report.eoc_l2.push_back(eoc(report.rows[k].l2, report.rows[k + 1].l2));
    }
    return report;
}

}  // namespace kfds
