#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kfds/cases.hpp"
#include "kfds/common.hpp"
#include "kfds/solver1d.hpp"

namespace kfds {

struct ConvergenceRow {
    int n_cells = 0;
    double dx = 0.0;
    double l1 = 0.0;
    double l2 = 0.0;
};

/// Grid-refinement record: errors per grid and pairwise orders under
/// doubling. `error` is set when a solver failure aborted the study early
/// (partial rows are retained).
struct ConvergenceReport {
    std::string case_id;
    std::string scheme;
    std::vector<ConvergenceRow> rows;
    std::vector<std::optional<double>> eoc_l1;  // rows.size() - 1 entries
    std::vector<std::optional<double>> eoc_l2;
    std::string error;
};

/// L1 = dx sum|diff|, L2 = sqrt(dx sum diff^2).
std::pair<double, double> error_norms(const ArrayXd& numerical, const ArrayXd& analytical,
                                      double dx);

/// log2(e_coarse / e_fine); nullopt when either error is exactly zero
/// (numerical solution coincides with the reference).
std::optional<double> eoc(double error_coarse, double error_fine);

/// Runs the case on each grid (strict doubling required), compares against
/// its closed-form solution, and fills the report.
ConvergenceReport convergence_study(CaseId id, SchemeKind scheme, const std::vector<int>& grids,
                                    double cfl,
                                    std::optional<WaveSpeedMode> mode = std::nullopt);

}  // namespace kfds
