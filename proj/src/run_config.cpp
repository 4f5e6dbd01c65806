#include "kfds/run_config.hpp"

#include <fstream>
#include <sstream>

namespace kfds {
namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid number for " + key + ": '" + value + "'");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        const int v = std::stoi(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid integer for " + key + ": '" + value + "'");
    }
}

}  // namespace

void parse_cells(const std::string& text, int& cells, int& cells_y) {
    const auto x = text.find('x');
    if (x == std::string::npos) {
        cells = parse_int("cells", text);
        cells_y = 0;
        return;
    }
    cells = parse_int("cells", text.substr(0, x));
    cells_y = parse_int("cells", text.substr(x + 1));
}

std::vector<int> parse_grid_list(const std::string& text) {
    std::vector<int> grids;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) grids.push_back(parse_int("grids", item));
    }
    if (grids.empty()) throw ConfigError("empty grid list");
    return grids;
}

void apply_key_value(RunConfig& config, const std::string& key, const std::string& value) {
    if (key == "case") config.case_id = parse_case_id(value);
    else if (key == "scheme") config.scheme = parse_scheme(value);
    else if (key == "lambda") config.mode = parse_wave_speed_mode(value);
    else if (key == "cells") parse_cells(value, config.cells, config.cells_y);
    else if (key == "cfl") config.cfl = parse_double(key, value);
    else if (key == "tfinal") config.t_final = parse_double(key, value);
    else if (key == "steady_tol") config.steady_tol = parse_double(key, value);
    else if (key == "eoc") config.eoc = (value == "1" || value == "true" || value == "yes");
    else if (key == "grids") config.grids = parse_grid_list(value);
    else if (key == "out") config.out_path = value;
    else if (key == "format") config.format = value;
    else throw ConfigError("unknown config key '" + key + "'");
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file " + path);
    RunConfig config;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(line_no) + ": expected key=value");
        apply_key_value(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return config;
}

}  // namespace kfds
