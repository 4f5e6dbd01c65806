#pragma once

#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "kfds/boundary.hpp"
#include "kfds/common.hpp"
#include "kfds/flux_model.hpp"
#include "kfds/solver2d.hpp"

namespace kfds {

enum class CaseId {
    tc1, tc2a, tc2b, tc3, tc4, tc5, tc6a, tc6b, tc7, tc8a, tc8b, tc9,
    tc10, tc11, tc12, tc13, tc14, tc15,
    smooth,  // smooth periodic Burgers study (u0 = sin 2 pi x, t = 0.4/pi)
};

enum class CaseKind { Scalar1D, Swe1D, Scalar2D, Swe2D };

/// One benchmark setup: domain, initial/boundary data, model and final time,
/// plus the closed-form reference solution where one exists.
struct CaseSetup {
    CaseId id{};
    std::string name;
    CaseKind kind = CaseKind::Scalar1D;

    double x_min = 0.0, x_max = 1.0;
    double y_min = 0.0, y_max = 1.0;
    int default_cells = 100;
    int default_cells_y = 0;  // 2D only

    FluxModel model;  // scalar cases
    double gravity = 9.81;

    BoundaryCondition bc1d = BoundaryCondition::extrapolation();
    BoundaryCondition2D bc2d = BoundaryCondition2D::extrapolation();

    std::function<double(double)> initial1d;
    std::function<double(double, double)> initial2d;
    std::function<double(double)> swe_depth, swe_discharge, swe_bed;
    std::function<double(double, double)> swe2d_depth;

    // NaN = march to steady state under the residual criterion.
    double t_final = std::numeric_limits<double>::quiet_NaN();
    bool is_steady() const { return std::isnan(t_final); }

    std::function<double(double, double)> oracle1d;          // (x, t)
    std::function<double(double, double, double)> oracle2d;  // (x, y, t)
    bool has_oracle() const { return static_cast<bool>(oracle1d) || static_cast<bool>(oracle2d); }

    std::vector<std::pair<std::string, std::string>> metadata;
};

CaseSetup get_case(CaseId id);
CaseId parse_case_id(const std::string& text);
std::string case_name(CaseId id);
std::vector<CaseId> all_case_ids();

}  // namespace kfds
