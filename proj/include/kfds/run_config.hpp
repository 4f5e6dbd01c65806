#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kfds/cases.hpp"
#include "kfds/common.hpp"
#include "kfds/solver1d.hpp"
#include "kfds/wavespeed.hpp"

namespace kfds {

/// One run: case, scheme, wave-speed mode, resolution, CFL, final time and
/// output destination. Loadable from a flat key=value file; CLI flags
/// override file values.
struct RunConfig {
    CaseId case_id = CaseId::tc3;
    SchemeKind scheme = SchemeKind::KFDS;
    std::optional<WaveSpeedMode> mode;  // defaults per scheme when unset
    int cells = 0;                      // 0 = case default
    int cells_y = 0;
    double cfl = 0.8;
    std::optional<double> t_final;  // overrides the case's time / steady marching
    double steady_tol = 1e-10;
    bool eoc = false;
    std::vector<int> grids;  // --eoc grid list; empty = 20..1280 doubling
    std::string out_path;
    std::string format = "csv";

    WaveSpeedMode resolved_mode() const { return mode ? *mode : default_mode(scheme); }

    void validate() const {
        if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("cfl must be in (0, 1]");
        if (!(steady_tol > 0.0)) throw ConfigError("steady tolerance must be positive");
        if (format != "csv" && format != "json")
            throw ConfigError("format must be csv or json");
        if (cells < 0 || cells_y < 0) throw ConfigError("cell counts must be positive");
        validate_scheme_mode(scheme, resolved_mode());
    }
};

/// Apply one key=value assignment (the file format and the CLI share keys).
void apply_key_value(RunConfig& config, const std::string& key, const std::string& value);

/// Parse a flat key=value file ('#' comments, blank lines ignored).
RunConfig load_run_config(const std::string& path);

/// Parse "N" or "NxM" cell counts.
void parse_cells(const std::string& text, int& cells, int& cells_y);

std::vector<int> parse_grid_list(const std::string& text);

}  // namespace kfds
