#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using json = nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = quadzero::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("quadzero_test_" + name);
}

} // namespace

TEST_CASE("radius") {
    const auto r = run({"radius", "--b", "2", "--c", "3", "--k", "4", "--n", "3", "--m", "1"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["radius"].get<double>() == doctest::Approx(2.4589723463779643));
    CHECK(j["delta"].get<double>() == doctest::Approx(2.4589723463779643));
    CHECK(j["source"] == "Thm31");
    CHECK(j["majorant_radius"].get<double>() > 0.0);
}

TEST_CASE("zeros as CSV and JSON") {
    const auto r = run({"zeros", "--b", "0", "--c", "0", "--n", "3", "--m", "1", "--k", "1", "--format", "csv"});
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "re,im,residual,jacobian,orientation");

    const auto j = run({"zeros", "--b", "0", "--c", "0", "--n", "3", "--m", "1", "--format", "json", "--threads", "2"});
    REQUIRE(j.code == 0);
    const json doc = json::parse(j.out);
    CHECK(doc["count"] == 5);
    CHECK(doc["n_plus"] == 1);
    CHECK(doc["n_minus"] == 4);
    CHECK(doc["winding_check"] == "passed");
    CHECK(doc["zeros"].size() == 5);
}

TEST_CASE("zeros with an unavailable bound exits 2") {
    const auto r = run({"zeros", "--b", "1", "--c", "1", "--k", "2", "--n", "2", "--m", "1"});
    CHECK(r.code == quadzero::cli::kExitHypothesis);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("classify") {
    const auto r = run({"classify", "--b", "0", "--c", "0", "--n", "3", "--m", "1", "--re", "0", "--im", "0"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["orientation"] == "SensePreserving");
    CHECK(j["jacobian"].get<double>() == 1.0);

    const auto pole = run({"classify", "--b", "1", "--c", "0", "--k", "2", "--n", "3", "--m", "1", "--re", "-0.5", "--im", "0"});
    REQUIRE(pole.code == 0);
    CHECK(json::parse(pole.out)["dilatation"].is_null());
}

TEST_CASE("winding") {
    const auto circle = run({"winding", "--b", "0", "--c", "0", "--n", "3", "--m", "1", "--radius", "0.5"});
    REQUIRE(circle.code == 0);
    CHECK(json::parse(circle.out)["winding"] == 1);

    const auto rect = run({"winding", "--b", "0", "--c", "0", "--n", "3", "--m", "1", "--rect", "-2,-2,2,2"});
    REQUIRE(rect.code == 0);
    CHECK(json::parse(rect.out)["winding"] == -3);

    const auto on = run({"winding", "--b", "0", "--c", "0", "--n", "3", "--m", "1", "--radius", "1"});
    CHECK(on.code == quadzero::cli::kExitNumerical);
}

TEST_CASE("critical-circle") {
    const auto bad = run({"critical-circle", "--b", "1", "--c", "3", "--k", "2"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("Theorem 3.4 requires b ≠ ±1") != std::string::npos);

    const auto ok = run({"critical-circle", "--b", "2", "--c", "3", "--k", "2"});
    REQUIRE(ok.code == 0);
    const json j = json::parse(ok.out);
    CHECK(j["exists"] == true);
    CHECK(j["radius"].get<double>() == doctest::Approx(0.816496580927726));
    CHECK(j["check"]["passed"] == true);

    const auto none = run({"critical-circle", "--b", "2", "--c", "1", "--k", "2"});
    REQUIRE(none.code == 0);
    CHECK(json::parse(none.out)["exists"] == false);
}

TEST_CASE("circle-image") {
    const auto r = run({"circle-image", "--b", "0", "--c", "0", "--n", "3", "--m", "1", "--radius", "1", "--samples", "32"});
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    CHECK(lines[0] == "theta,re,im");
    CHECK(lines.size() == 34);
    CHECK(run({"circle-image", "--b", "0", "--c", "0", "--n", "3", "--m", "1", "--radius", "1", "--samples", "4"}).code == 2);
}

TEST_CASE("sweep with svg") {
    const auto svg = temp_path("sweep.svg");
    const auto r = run({"sweep", "--b-lo", "0.5", "--b-hi", "2", "--b-steps", "2", "--c-lo", "-1", "--c-hi", "1", "--c-steps", "3",
                        "--k", "3", "--n", "2", "--m", "1", "--threads", "2", "--svg", svg.string()});
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 7);
    CHECK(lines[0] == "b,c,count,n_plus,n_minus,n_singular,bound_upper,bound_proven,radius,winding_check,violation");
    std::ifstream f(svg);
    std::stringstream body;
    body << f.rdbuf();
    CHECK(body.str().rfind("<?xml", 0) == 0);
    CHECK(body.str().find("<svg") != std::string::npos);
    std::filesystem::remove(svg);
}

TEST_CASE("zeros svg") {
    const auto svg = temp_path("zeros.svg");
    const auto r = run({"zeros", "--b", "2", "--c", "3", "--k", "2", "--n", "2", "--m", "1", "--svg", svg.string()});
    REQUIRE(r.code == 0);
    std::ifstream f(svg);
    std::stringstream body;
    body << f.rdbuf();
    CHECK(body.str().rfind("<?xml", 0) == 0);
    CHECK(body.str().find("<circle") != std::string::npos);
    std::filesystem::remove(svg);
}

TEST_CASE("config file, with command-line override") {
    const auto cfg = temp_path("model.cfg");
    {
        std::ofstream f(cfg);
        f << "# model\nb = 2\nc = 3\nk=4\nn=3\nm=1\n";
    }
    const auto a = run({"radius", "--config", cfg.string()});
    REQUIRE(a.code == 0);
    CHECK(json::parse(a.out)["source"] == "Thm31");

    const auto b = run({"radius", "--config", cfg.string(), "--c", "0.5"});
    REQUIRE(b.code == 0);
    CHECK(json::parse(b.out)["source"] == "Thm32");

    CHECK(run({"radius", "--config", temp_path("missing.cfg").string()}).code == 2);
    std::filesystem::remove(cfg);
}

TEST_CASE("parse errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"radius", "--b", "2"}).code == 2);
    CHECK(run({"zeros", "--b", "0", "--c", "0", "--n", "3", "--m", "1", "--format", "xml"}).code == 2);
    CHECK(run({"radius", "--b", "0", "--c", "0", "--n", "2", "--m", "2"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
