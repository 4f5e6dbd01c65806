#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "kfds/cli.hpp"
#include "kfds/io.hpp"
#include "test_util.hpp"

using namespace kfds;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args, const std::string& stdout_path = "cli_stdout.tmp") {
    const std::string cmd = std::string(KFDS_CLI_PATH) + " " + args + " > " + stdout_path +
                            " 2> cli_stderr.tmp";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("csv round-trip is bit exact") {
    io::Table table;
    table.columns = {"x", "u"};
    ArrayXd x(5), u(5);
    x << 0.1, 1.0 / 3.0, M_PI, -0.0, 1e-300;
    u << -1.5, 2.0 / 7.0, 1e17, 4.9e-324, -123456.789012345678;
    table.data = {x, u};
    table.metadata.emplace_back("case", "demo");
    io::write_table_csv("io_rt.tmp", table);

    const io::Table back = io::read_table_csv("io_rt.tmp");
    REQUIRE(back.columns == table.columns);
    for (int c = 0; c < 2; ++c)
        for (int r = 0; r < 5; ++r) {
            const double a = table.data[c][r], b = back.data[c][r];
            CHECK(std::memcmp(&a, &b, sizeof a) == 0);  // bit identical
        }
    // decimal text round-trip: re-writing the parsed table reproduces the file
    io::write_table_csv("io_rt2.tmp", back);
    CHECK(slurp("io_rt.tmp") == slurp("io_rt2.tmp"));
}

TEST_CASE("json table mirrors the records") {
    io::Table table;
    table.columns = {"x", "u"};
    ArrayXd x(2), u(2);
    x << 0.25, 0.75;
    u << 1.0 / 3.0, -2.0;
    table.data = {x, u};
    io::write_table_json("io_json.tmp", table);
    const std::string text = slurp("io_json.tmp");
    CHECK(text.find("\"columns\"") != std::string::npos);
    CHECK(text.find("0.3333333333333333") != std::string::npos);
}

TEST_CASE("field2d binary round-trip") {
    const Grid2D grid = build_grid_2d(0.0, 2.0, -1.0, 1.0, 6, 4);
    ArrayXXd h(6, 4), hu(6, 4);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 4; ++j) {
            h(i, j) = test_util::uniform(0.5, 2.0);
            hu(i, j) = test_util::uniform(-1, 1);
        }
    io::write_field2d_binary("io_f2d.tmp", grid, 0.69, {{"h", &h}, {"hu", &hu}});
    const io::Field2DBinary back = io::read_field2d_binary("io_f2d.tmp");
    CHECK(back.grid.n_x == 6);
    CHECK(back.grid.n_y == 4);
    CHECK(back.t == 0.69);
    REQUIRE(back.names.size() == 2);
    CHECK(back.names[1] == "hu");
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 4; ++j) {
            CHECK(back.comps[0](i, j) == h(i, j));
            CHECK(back.comps[1](i, j) == hu(i, j));
        }
    CHECK_THROWS_AS(io::read_field2d_binary("definitely_missing.bin"), IoError);
}

TEST_CASE("parse_args populates the config") {
    const CliOptions opt = parse_args({"--case", "tc3", "--scheme", "kfds", "--cells", "100",
                                       "--tfinal", "0.3", "--out", "x.csv"});
    CHECK(opt.config.case_id == CaseId::tc3);
    CHECK(opt.config.scheme == SchemeKind::KFDS);
    CHECK(opt.config.cells == 100);
    CHECK(opt.config.t_final.has_value());
    CHECK(*opt.config.t_final == doctest::Approx(0.3));
    CHECK(opt.output.what == OutputSpec::What::Field);
    CHECK(opt.output.format == OutputSpec::Format::Csv);
}

TEST_CASE("parse_args usage errors") {
    CHECK_THROWS_AS(parse_args({}), ConfigError);
    CHECK_THROWS_AS(parse_args({"--bogus"}), ConfigError);
    CHECK_THROWS_AS(parse_args({"--case", "tc99"}), ConfigError);
    CHECK_THROWS_AS(parse_args({"--case", "tc3", "--scheme", "kfds", "--lambda", "rh"}),
                    ConfigError);
    // --eoc needs a closed-form reference
    CHECK_THROWS_AS(parse_args({"--case", "tc9", "--eoc"}), ConfigError);
    // 2D cells on a 1D case are harmless; bad cfl is not
    CHECK_THROWS_AS(parse_args({"--case", "tc3", "--cfl", "1.5"}), ConfigError);
}

TEST_CASE("cli: tc3 run writes field with exact column and reports norms") {
    REQUIRE(run_cli("--case tc3 --scheme kfds --cells 100 --tfinal 0.3 --out tc3.csv") == 0);
    const std::string out = slurp("cli_stdout.tmp");
    CHECK(out.find("case=tc3") != std::string::npos);
    CHECK(out.find("L1=") != std::string::npos);
    const io::Table t = io::read_table_csv("tc3.csv");
    REQUIRE(t.columns.size() == 3);
    CHECK(t.columns[2] == "u_exact");
    CHECK(t.data[0].size() == 100);
}

TEST_CASE("cli: determinism, identical bytes for identical configs") {
    REQUIRE(run_cli("--case tc4 --scheme tvd --cells 60 --out det_a.csv") == 0);
    REQUIRE(run_cli("--case tc4 --scheme tvd --cells 60 --out det_b.csv") == 0);
    CHECK(slurp("det_a.csv") == slurp("det_b.csv"));
}

TEST_CASE("cli: tc1 jump locations within one cell of the translated steps") {
    REQUIRE(run_cli("--case tc1 --scheme tvd --cells 100 --out tc1.csv") == 0);
    const io::Table t = io::read_table_csv("tc1.csv");
    const ArrayXd& x = t.data[0];
    const ArrayXd& u = t.data[1];
    // steepest gradients mark the two jumps
    int j1 = 0, j2 = 0;
    double g1 = 0, g2 = 0;
    for (int j = 0; j + 1 < 100; ++j) {
        const double rise = u[j + 1] - u[j];
        if (rise > g1) { g1 = rise; j1 = j; }
        if (-rise > g2) { g2 = -rise; j2 = j; }
    }
    const double dx = x[1] - x[0];
    CHECK(std::abs(0.5 * (x[j1] + x[j1 + 1]) - (-1.0 / 3.0 + 0.3)) <= dx + 1e-12);
    CHECK(std::abs(0.5 * (x[j2] + x[j2 + 1]) - (1.0 / 3.0 + 0.3)) <= dx + 1e-12);
}

TEST_CASE("cli: tc5 summary flags the sonic-point pathology under rh only") {
    REQUIRE(run_cli("--case tc5 --scheme kfds+ --lambda rh --cells 100", "tc5_rh.tmp") == 0);
    CHECK(slurp("tc5_rh.tmp").find("expansion shock") != std::string::npos);
    REQUIRE(run_cli("--case tc5 --scheme kfds+ --lambda hybrid --cells 100", "tc5_hy.tmp") == 0);
    CHECK(slurp("tc5_hy.tmp").find("expansion shock") == std::string::npos);
}

TEST_CASE("cli: steady tolerance flag unlocks limit-cycling steady cases") {
    // the limited scheme settles into a ~4e-10 limiter cycle on the steady
    // 2D contact, above the default tolerance
    REQUIRE(run_cli("--case tc10 --scheme tvd --steady-tol 1e-8 --cells 32x32") == 0);
    CHECK(slurp("cli_stdout.tmp").find("residual=") != std::string::npos);
}

TEST_CASE("cli: tc8a with tvd+ reaches the viscous steady shock") {
    REQUIRE(run_cli("--case tc8a --scheme tvd+ --out tc8a.csv") == 0);
    const std::string out = slurp("cli_stdout.tmp");
    CHECK(out.find("case=tc8a") != std::string::npos);
    CHECK(out.find("residual=") != std::string::npos);
}

TEST_CASE("cli: tc15 writes a 40x40 depth field") {
    REQUIRE(run_cli("--case tc15 --scheme kfds --out tc15.csv") == 0);
    const io::Table t = io::read_table_csv("tc15.csv");
    REQUIRE(t.columns.size() == 5);
    CHECK(t.data[0].size() == 1600);
    // metadata records the non-benchmark depth defaults
    bool has_depth_note = false;
    for (const auto& [k, v] : t.metadata) has_depth_note |= k == "depths";
    CHECK(has_depth_note);
}

TEST_CASE("cli: eoc table output") {
    REQUIRE(run_cli("--case smooth --scheme klw --eoc --grids 20,40,80 --out eoc.csv") == 0);
    const std::string text = slurp("eoc.csv");
    CHECK(text.find("n,dx,L1,L1_EOC,L2,L2_EOC") != std::string::npos);
    REQUIRE(run_cli("--case smooth --scheme klw --eoc --grids 20,40 --format json --out "
                    "eoc.json") == 0);
    CHECK(slurp("eoc.json").find("\"L1_EOC\"") != std::string::npos);
}

TEST_CASE("cli: exit codes") {
    CHECK(run_cli("") == kExitUsage);                       // no args -> usage
    CHECK(run_cli("--case tc3 --scheme weno") == kExitUsage);
    CHECK(run_cli("--case tc3 --out missing_dir/x.csv") == kExitIo);
    CHECK(run_cli("--help") == 0);
    CHECK(slurp("cli_stdout.tmp").find("--case") != std::string::npos);
}

TEST_CASE("cli: config file with flag overrides") {
    {
        std::ofstream out("run.conf");
        out << "case = tc3\nscheme = kfds\ncells = 50\ntfinal = 0.1\n";
    }
    REQUIRE(run_cli("--config run.conf --cells 80 --out conf.csv") == 0);
    const io::Table t = io::read_table_csv("conf.csv");
    CHECK(t.data[0].size() == 80);  // flag wins over file
}
