#include "quadzero/svg.hpp"
#include "quadzero/sweep.hpp"

#include <doctest.h>

#include <sstream>

using namespace quadzero;

namespace {

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("axis spacing") {
    CHECK(Axis{0.0, 1.0, 5}.at(0) == 0.0);
    CHECK(Axis{0.0, 1.0, 5}.at(4) == 1.0);
    CHECK(Axis{0.0, 1.0, 5}.at(2) == 0.5);
    CHECK(Axis{0.7, 3.0, 1}.at(0) == 0.7);
}

TEST_CASE("format_number keeps 17 significant digits") {
    CHECK(format_number(0.1) == "0.10000000000000001");
    CHECK(format_number(2.0) == "2");
    CHECK(std::stod(format_number(2.4589723463779643)) == 2.4589723463779643);
}

TEST_CASE("sweep grid layout and CSV") {
    const SweepGrid g = run_sweep(Axis{0.5, 2.0, 3}, Axis{-1.0, 1.0, 4}, 3, 2, 1, SolveConfig{}, 2);
    REQUIRE(g.cells.size() == 12);
    CHECK(g.cells[0].b == 0.5);
    CHECK(g.cells[0].c == -1.0);
    CHECK(g.cells[1].c == doctest::Approx(-1.0 / 3.0));
    CHECK(g.cells[4].b == 1.25);
    for (const auto& cell : g.cells) {
        CHECK(cell.solved);
        CHECK(cell.count >= 1);
        CHECK(cell.violation != Violation::Proven);
    }

    std::ostringstream csv;
    write_sweep_csv(csv, g);
    const auto lines = lines_of(csv.str());
    REQUIRE(lines.size() == 13);
    CHECK(lines[0] == kSweepCsvHeader);
    for (std::size_t i = 1; i < lines.size(); ++i)
        CHECK(std::count(lines[i].begin(), lines[i].end(), ',') == 10);
}

TEST_CASE("unsolvable cells are reported, not fatal") {
    // k = n = 2 with b = 1 has no inclusion disk
    const SweepGrid g = run_sweep(Axis{1.0, 2.0, 2}, Axis{0.5, 0.5, 1}, 2, 2, 1, SolveConfig{}, 1);
    REQUIRE(g.cells.size() == 2);
    CHECK_FALSE(g.cells[0].solved);
    CHECK_FALSE(g.cells[0].note.empty());
    CHECK(g.cells[1].solved);
    std::ostringstream csv;
    write_sweep_csv(csv, g);
    const auto lines = lines_of(csv.str());
    CHECK(lines[1].find("NA") != std::string::npos);
}

TEST_CASE("sweep CSV is identical across thread counts") {
    const Axis b{-3.0, 3.0, 6};
    const Axis c{-2.0, 2.0, 5};
    std::ostringstream one, many;
    write_sweep_csv(one, run_sweep(b, c, 4, 3, 1, SolveConfig{}, 1));
    write_sweep_csv(many, run_sweep(b, c, 4, 3, 1, SolveConfig{}, 5));
    CHECK(one.str() == many.str());
}

TEST_CASE("svg output is well formed") {
    const auto report = find_zeros(HarmonicQuadrinomial::make(2.0, 3.0, 2, 2, 1));
    std::ostringstream zs;
    write_zeros_svg(zs, report, critical_radius(2.0, 3.0, 2));
    const std::string s = zs.str();
    CHECK(s.rfind("<?xml", 0) == 0);
    CHECK(s.find("<svg") != std::string::npos);
    CHECK(s.find("version=\"1.1\"") != std::string::npos);
    CHECK(s.find("</svg>") != std::string::npos);
    CHECK(std::count(s.begin(), s.end(), '<') == std::count(s.begin(), s.end(), '>'));

    std::ostringstream gs;
    write_sweep_svg(gs, run_sweep(Axis{0.5, 2.0, 3}, Axis{-1.0, 1.0, 3}, 3, 2, 1, SolveConfig{}, 1));
    CHECK(gs.str().find("</svg>") != std::string::npos);
}
