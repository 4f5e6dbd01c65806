#include "kfds/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace kfds::io {
namespace {

std::ofstream open_out(const std::string& path, std::ios_base::openmode mode = std::ios::out) {
    std::ofstream out(path, mode);
    if (!out) throw IoError("cannot open " + path + " for writing");
    return out;
}

nlohmann::json table_to_json(const Table& table) {
    nlohmann::json j;
    if (!table.metadata.empty()) {
        nlohmann::json meta;
        for (const auto& [k, v] : table.metadata) meta[k] = v;
        j["metadata"] = meta;
    }
    j["columns"] = table.columns;
    nlohmann::json rows = nlohmann::json::array();
    const Eigen::Index n = table.data.empty() ? 0 : table.data.front().size();
    for (Eigen::Index r = 0; r < n; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (const ArrayXd& col : table.data) row.push_back(col[r]);
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_table_csv(const std::string& path, const Table& table) {
    auto out = open_out(path);
    for (const auto& [k, v] : table.metadata) out << "# " << k << ": " << v << "\n";
    for (size_t c = 0; c < table.columns.size(); ++c)
        out << table.columns[c] << (c + 1 < table.columns.size() ? "," : "\n");
    const Eigen::Index n = table.data.empty() ? 0 : table.data.front().size();
    for (Eigen::Index r = 0; r < n; ++r) {
        for (size_t c = 0; c < table.data.size(); ++c)
            out << format_double(table.data[c][r]) << (c + 1 < table.data.size() ? "," : "\n");
    }
    if (!out) throw IoError("write failed for " + path);
}

void write_table_json(const std::string& path, const Table& table) {
    auto out = open_out(path);
    out << table_to_json(table).dump(2) << "\n";
    if (!out) throw IoError("write failed for " + path);
}

Table read_table_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    Table table;
    std::string line;
    bool have_header = false;
    std::vector<std::vector<double>> cols;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto colon = line.find(':');
            if (colon != std::string::npos)
                table.metadata.emplace_back(line.substr(2, colon - 2), line.substr(colon + 2));
            continue;
        }
        std::stringstream ss(line);
        std::string cell;
        if (!have_header) {
            while (std::getline(ss, cell, ',')) table.columns.push_back(cell);
            cols.resize(table.columns.size());
            have_header = true;
            continue;
        }
        size_t c = 0;
        while (std::getline(ss, cell, ',')) {
            if (c >= cols.size()) throw IoError(path + ": row wider than header");
            if (cell.empty()) {
                cols[c++].push_back(std::numeric_limits<double>::quiet_NaN());
                continue;
            }
            // strtod instead of stod: subnormal values must parse, not throw
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str()) throw IoError(path + ": bad number '" + cell + "'");
            cols[c++].push_back(v);
        }
    }
    for (const auto& col : cols) {
        ArrayXd a(static_cast<Eigen::Index>(col.size()));
        for (size_t r = 0; r < col.size(); ++r) a[static_cast<Eigen::Index>(r)] = col[r];
        table.data.push_back(std::move(a));
    }
    return table;
}

namespace {

void stream_convergence_csv(std::ostream& out, const ConvergenceReport& report) {
    out << "# case: " << report.case_id << "\n# scheme: " << report.scheme << "\n";
    if (!report.error.empty()) out << "# aborted: " << report.error << "\n";
    out << "n,dx,L1,L1_EOC,L2,L2_EOC\n";
    for (size_t r = 0; r < report.rows.size(); ++r) {
        const auto& row = report.rows[r];
        out << row.n_cells << "," << format_double(row.dx) << "," << format_double(row.l1) << ",";
        if (r > 0 && report.eoc_l1[r - 1]) out << format_double(*report.eoc_l1[r - 1]);
        out << "," << format_double(row.l2) << ",";
        if (r > 0 && report.eoc_l2[r - 1]) out << format_double(*report.eoc_l2[r - 1]);
        out << "\n";
    }
}

}  // namespace

void write_convergence_csv(const std::string& path, const ConvergenceReport& report) {
    auto out = open_out(path);
    stream_convergence_csv(out, report);
    if (!out) throw IoError("write failed for " + path);
}

void write_convergence_json(const std::string& path, const ConvergenceReport& report) {
    nlohmann::json j;
    j["case"] = report.case_id;
    j["scheme"] = report.scheme;
    if (!report.error.empty()) j["aborted"] = report.error;
    j["columns"] = {"n", "dx", "L1", "L1_EOC", "L2", "L2_EOC"};
    nlohmann::json rows = nlohmann::json::array();
    for (size_t r = 0; r < report.rows.size(); ++r) {
        const auto& row = report.rows[r];
        nlohmann::json jr = nlohmann::json::array();
        jr.push_back(row.n_cells);
        jr.push_back(row.dx);
        jr.push_back(row.l1);
        if (r > 0 && report.eoc_l1[r - 1]) jr.push_back(*report.eoc_l1[r - 1]);
        else jr.push_back(nullptr);
        jr.push_back(row.l2);
        if (r > 0 && report.eoc_l2[r - 1]) jr.push_back(*report.eoc_l2[r - 1]);
        else jr.push_back(nullptr);
        rows.push_back(jr);
    }
    j["rows"] = rows;
    auto out = open_out(path);
    out << j.dump(2) << "\n";
    if (!out) throw IoError("write failed for " + path);
}

void write_field2d_binary(const std::string& path, const Grid2D& grid, double t,
                          const std::vector<std::pair<std::string, const ArrayXXd*>>& comps) {
    auto out = open_out(path, std::ios::out | std::ios::binary);
    out << "kfds-field2d " << grid.n_x << " " << grid.n_y << " " << format_double(grid.x_min)
        << " " << format_double(grid.x_max) << " " << format_double(grid.y_min) << " "
        << format_double(grid.y_max) << " " << format_double(t) << " " << comps.size();
    for (const auto& [name, ptr] : comps) out << " " << name;
    out << "\n";
    for (const auto& [name, ptr] : comps) {
        for (int j = 0; j < grid.n_y; ++j)
            for (int i = 0; i < grid.n_x; ++i) {
                const double v = (*ptr)(i, j);
                out.write(reinterpret_cast<const char*>(&v), sizeof v);
            }
    }
    if (!out) throw IoError("write failed for " + path);
}

Field2DBinary read_field2d_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::string header;
    std::getline(in, header);
    std::stringstream ss(header);
    std::string magic;
    Field2DBinary f;
    int ncomp = 0;
    double x_min, x_max, y_min, y_max;
    int nx, ny;
    ss >> magic >> nx >> ny >> x_min >> x_max >> y_min >> y_max >> f.t >> ncomp;
    if (magic != "kfds-field2d" || !ss) throw IoError(path + ": bad field2d header");
    for (int c = 0; c < ncomp; ++c) {
        std::string name;
        ss >> name;
        f.names.push_back(name);
    }
    f.grid = build_grid_2d(x_min, x_max, y_min, y_max, nx, ny);
    for (int c = 0; c < ncomp; ++c) {
        ArrayXXd a(nx, ny);
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                double v;
                in.read(reinterpret_cast<char*>(&v), sizeof v);
                if (!in) throw IoError(path + ": truncated field2d payload");
                a(i, j) = v;
            }
        f.comps.push_back(std::move(a));
    }
    return f;
}

}  // namespace kfds::io
