#pragma once

#include <functional>

#include "kfds/common.hpp"
#include "kfds/grid.hpp"

namespace kfds {

/// Cell-averaged scalar conserved quantity on a uniform 1D grid.
struct ScalarField1D {
    Grid1D grid;
    ArrayXd u;
    double t = 0.0;

    static ScalarField1D from_function(const Grid1D& g,
                                       const std::function<double(double)>& f) {
        ScalarField1D field;
        field.grid = g;
        field.u.resize(g.n_cells);
        for (int j = 0; j < g.n_cells; ++j) field.u[j] = f(g.center(j));
        return field;
    }
};

/// Scalar field on a 2D Cartesian grid; u(i, j) at (x_center(i), y_center(j)).
struct ScalarField2D {
    Grid2D grid;
    ArrayXXd u;  // n_x rows, n_y cols
    double t = 0.0;

    static ScalarField2D from_function(const Grid2D& g,
                                       const std::function<double(double, double)>& f) {
        ScalarField2D field;
        field.grid = g;
        field.u.resize(g.n_x, g.n_y);
        for (int i = 0; i < g.n_x; ++i)
            for (int j = 0; j < g.n_y; ++j) field.u(i, j) = f(g.x_center(i), g.y_center(j));
        return field;
    }
};

}  // namespace kfds
