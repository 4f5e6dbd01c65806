#pragma once

#include "kfds/common.hpp"

namespace kfds {

/// Uniform 1D cell-centered grid on [x_min, x_max].
struct Grid1D {
    double x_min = 0.0;
    double x_max = 1.0;
    int n_cells = 0;
    double dx = 0.0;

    double center(int j) const { return x_min + (j + 0.5) * dx; }

    ArrayXd centers() const {
        ArrayXd c(n_cells);
        for (int j = 0; j < n_cells; ++j) c[j] = center(j);
        return c;
    }
};

/// A TVD stencil reaches two cells to each side, so n >= 4.
inline Grid1D build_grid_1d(double x_min, double x_max, int n) {
    if (!(x_max > x_min))
        throw ConfigError("build_grid_1d: domain inverted or empty [" + std::to_string(x_min) +
                          ", " + std::to_string(x_max) + "]");
    if (n < 4)
        throw ConfigError("build_grid_1d: need at least 4 cells, got " + std::to_string(n));
    Grid1D g;
    g.x_min = x_min;
    g.x_max = x_max;
    g.n_cells = n;
    g.dx = (x_max - x_min) / n;
    return g;
}

/// Uniform Cartesian 2D grid; cell area dx*dy, axis-aligned faces.
struct Grid2D {
    double x_min = 0.0, x_max = 1.0;
    double y_min = 0.0, y_max = 1.0;
    int n_x = 0, n_y = 0;
    double dx = 0.0, dy = 0.0;

    double cell_area() const { return dx * dy; }
    double x_center(int i) const { return x_min + (i + 0.5) * dx; }
    double y_center(int j) const { return y_min + (j + 0.5) * dy; }
};

inline Grid2D build_grid_2d(double x_min, double x_max, double y_min, double y_max,
                            int n_x, int n_y) {
    if (!(x_max > x_min) || !(y_max > y_min))
        throw ConfigError("build_grid_2d: domain inverted or empty");
    if (n_x < 4 || n_y < 4)
        throw ConfigError("build_grid_2d: need at least 4 cells per axis");
    Grid2D g;
    g.x_min = x_min;
    g.x_max = x_max;
    g.y_min = y_min;
    g.y_max = y_max;
    g.n_x = n_x;
    g.n_y = n_y;
    g.dx = (x_max - x_min) / n_x;
    g.dy = (y_max - y_min) / n_y;
    return g;
}

}  // namespace kfds
