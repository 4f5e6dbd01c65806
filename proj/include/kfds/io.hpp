#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kfds/common.hpp"
#include "kfds/grid.hpp"
#include "kfds/verify.hpp"

namespace kfds::io {

/// Columnar record set shared by the CSV and JSON writers. Metadata lines
/// become '#' comments in CSV and a "metadata" object in JSON.
struct Table {
    std::vector<std::string> columns;
    std::vector<ArrayXd> data;
    std::vector<std::pair<std::string, std::string>> metadata;
};

std::string format_double(double v);  // 17 significant digits, round-trip exact

void write_table_csv(const std::string& path, const Table& table);
void write_table_json(const std::string& path, const Table& table);
Table read_table_csv(const std::string& path);

void write_convergence_csv(const std::string& path, const ConvergenceReport& report);
void write_convergence_json(const std::string& path, const ConvergenceReport& report);

/// Flat binary 2D field: one text header line
///   kfds-field2d <nx> <ny> <x_min> <x_max> <y_min> <y_max> <time> <ncomp> <names...>
/// followed by ncomp * nx * ny native-endian doubles, x varying fastest
/// within each component.
void write_field2d_binary(const std::string& path, const Grid2D& grid, double t,
                          const std::vector<std::pair<std::string, const ArrayXXd*>>& comps);

struct Field2DBinary {
    Grid2D grid;
    double t = 0.0;
    std::vector<std::string> names;
    std::vector<ArrayXXd> comps;
};

Field2DBinary read_field2d_binary(const std::string& path);

}  // namespace kfds::io
