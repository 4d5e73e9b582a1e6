#include "cli.hpp"

#include "quadzero/bounds.hpp"
#include "quadzero/contour.hpp"
#include "quadzero/critical_set.hpp"
#include "quadzero/error.hpp"
#include "quadzero/svg.hpp"
#include "quadzero/sweep.hpp"
#include "quadzero/zero_finder.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

namespace quadzero::cli {

namespace {

using nlohmann::json;

struct ModelArgs {
    double b = 0.0;
    double c = 0.0;
    int k = 1;
    int n = 2;
    int m = 1;

    HarmonicQuadrinomial build() const { return HarmonicQuadrinomial::make(b, c, k, n, m); }
};

struct SolverArgs {
    SolveConfig cfg;
    double merge_radius = 0.0;
};

unsigned default_threads() {
    if (const char* env = std::getenv("QUADZERO_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void add_model(CLI::App* app, ModelArgs& a, bool with_k_default = true) {
    app->add_option("--b", a.b, "coefficient of the analytic z^k term")->required();
    app->add_option("--c", a.c, "coefficient of the co-analytic conj(z)^m term")->required();
    auto* k = app->add_option("--k", a.k, "degree of the analytic monomial");
    if (!with_k_default) k->required();
    app->add_option("--n", a.n, "leading co-analytic degree")->required();
    app->add_option("--m", a.m, "trailing co-analytic degree")->required();
}

void add_solver(CLI::App* app, SolverArgs& s) {
    app->add_option("--accept-tol", s.cfg.accept_tol, "relative residual acceptance");
    app->add_option("--merge-radius", s.merge_radius, "zero merge distance (default 1e-7 max(1,R))");
    app->add_option("--max-depth", s.cfg.max_depth, "maximum quadtree depth");
    app->add_option("--extra-starts", s.cfg.extra_starts, "seeded random Newton starts per cell");
    app->add_option("--seed", s.cfg.seed, "seed for the random starts");
    app->add_option("--singular-tol", s.cfg.singular_tol, "relative Jacobian tolerance for Singular");
}

SolveConfig finalize(const SolverArgs& s) {
    SolveConfig cfg = s.cfg;
    if (s.merge_radius > 0.0) cfg.merge_radius = s.merge_radius;
    return cfg;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json disk_json(const DiskBound& d) {
    json j;
    j["radius"] = d.radius;
    j["delta"] = d.delta ? json(*d.delta) : json(nullptr);
    j["source"] = std::string(to_string(d.source));
    return j;
}

json bound_json(const std::optional<CountBound>& b) {
    if (!b) return nullptr;
    return {{"upper", b->upper},
            {"proven", b->upper_is_proven},
            {"lower", b->lower},
            {"branch", std::string(to_string(b->branch))}};
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& emit) {
    std::ofstream f(path);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot open " + path + " for writing");
    emit(f);
}

// Turns "--config PATH" entries into flags placed right after the subcommand
// name, so explicit command-line flags (which come later) take precedence.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
    std::vector<std::string> rest;
    std::vector<std::string> from_file;
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string path;
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw Error(ErrorKind::InvalidArgument, "--config needs a path");
            path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        } else {
            rest.push_back(args[i]);
            continue;
        }
        std::ifstream f(path);
        if (!f) throw Error(ErrorKind::InvalidArgument, "cannot read config file " + path);
        std::string line;
        while (std::getline(f, line)) {
            const auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#') continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw Error(ErrorKind::InvalidArgument, "config line is not key=value: " + line);
            auto trim = [](std::string s) {
                const auto a = s.find_first_not_of(" \t\r");
                const auto b = s.find_last_not_of(" \t\r");
                return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
            };
            std::string key = trim(line.substr(0, eq));
            while (!key.empty() && key.front() == '-') key.erase(key.begin());
            from_file.push_back("--" + key);
            from_file.push_back(trim(line.substr(eq + 1)));
        }
    }
    if (from_file.empty()) return rest;
    auto sub = std::find_if(rest.begin(), rest.end(), [](const std::string& a) { return a.rfind("-", 0) != 0; });
    if (sub == rest.end()) return rest;
    ++sub;
    rest.insert(sub, from_file.begin(), from_file.end());
    return rest;
}

} // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Zeros of the harmonic quadrinomial q(z) = b z^k + conj(z)^n + c conj(z)^m + z", "quadzero"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);

    std::function<void()> action;

    // radius
    ModelArgs radius_model;
    auto* radius = app.add_subcommand("radius", "zero-inclusion disk");
    add_model(radius, radius_model);
    radius->callback([&] {
        action = [&] {
            const auto p = radius_model.build();
            json j = disk_json(radius_bound(p));
            try {
                j["majorant_radius"] = majorant_radius(p);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::BoundUnavailable) throw;
                j["majorant_radius"] = nullptr;
            }
            out << j.dump() << '\n';
        };
    });

    // zeros
    ModelArgs zeros_model;
    SolverArgs zeros_solver;
    std::string zeros_format = "csv";
    std::string zeros_svg;
    unsigned zeros_threads = default_threads();
    auto* zeros = app.add_subcommand("zeros", "locate and classify all zeros");
    add_model(zeros, zeros_model);
    add_solver(zeros, zeros_solver);
    zeros->add_option("--format", zeros_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    zeros->add_option("--svg", zeros_svg, "also write an SVG plot to this path");
    zeros->add_option("--threads", zeros_threads, "worker threads");
    zeros->callback([&] {
        action = [&] {
            const auto p = zeros_model.build();
            SolveConfig cfg = finalize(zeros_solver);
            cfg.threads = zeros_threads;
            const ZeroSetReport r = find_zeros(p, cfg);
            if (zeros_format == "csv") {
                out << "re,im,residual,jacobian,orientation\n";
                for (const auto& z : r.zeros)
                    out << format_number(z.location.real()) << ',' << format_number(z.location.imag()) << ','
                        << format_number(z.residual) << ',' << format_number(z.jacobian) << ','
                        << to_string(z.orientation) << '\n';
            } else {
                json j;
                j["count"] = r.count;
                j["n_plus"] = r.n_plus;
                j["n_minus"] = r.n_minus;
                j["n_singular"] = r.n_singular;
                j["disk"] = disk_json(r.disk);
                j["search_radius"] = r.search_radius;
                j["bound"] = bound_json(r.bound);
                j["winding"] = r.winding ? json(*r.winding) : json(nullptr);
                j["winding_check"] = std::string(to_string(r.winding_check));
                j["unresolved_cells"] = r.unresolved_cells;
                j["zeros"] = json::array();
                for (const auto& z : r.zeros)
                    j["zeros"].push_back({{"re", z.location.real()},
                                          {"im", z.location.imag()},
                                          {"residual", z.residual},
                                          {"jacobian", z.jacobian},
                                          {"orientation", std::string(to_string(z.orientation))},
                                          {"multiplicity_hint", z.multiplicity_hint}});
                out << j.dump(2) << '\n';
            }
            if (!zeros_svg.empty()) {
                std::optional<CriticalCircle> critical;
                if (p.k >= 2 && std::abs(p.b) != 1.0) critical = critical_radius(p.b, p.c, p.k);
                write_file(zeros_svg, [&](std::ostream& f) { write_zeros_svg(f, r, critical); });
            }
        };
    });

    // classify
    ModelArgs classify_model;
    double classify_re = 0.0;
    double classify_im = 0.0;
    double classify_tol = kDefaultSingularTol;
    auto* classify = app.add_subcommand("classify", "orientation of q at a point");
    add_model(classify, classify_model);
    classify->add_option("--re", classify_re, "real part of z")->required();
    classify->add_option("--im", classify_im, "imaginary part of z")->required();
    classify->add_option("--tol", classify_tol, "relative Jacobian tolerance");
    classify->callback([&] {
        action = [&] {
            const auto p = classify_model.build();
            const Complex z{classify_re, classify_im};
            json j;
            j["re"] = classify_re;
            j["im"] = classify_im;
            j["value"] = complex_json(evaluate(p, z));
            j["jacobian"] = jacobian(p, z);
            j["orientation"] = std::string(to_string(classify_point(p, z, classify_tol)));
            j["analytic_derivative"] = complex_json(analytic_derivative(p, z));
            j["coanalytic_derivative"] = complex_json(coanalytic_derivative(p, z));
            try {
                j["dilatation"] = complex_json(dilatation(p, z));
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::PoleAtCriticalPoint) throw;
                j["dilatation"] = nullptr;
            }
            out << j.dump() << '\n';
        };
    });

    // winding
    ModelArgs winding_model;
    double w_radius = 0.0;
    double w_center_re = 0.0;
    double w_center_im = 0.0;
    std::vector<double> w_rect;
    std::size_t w_samples = WindingConfig{}.initial_samples;
    auto* winding = app.add_subcommand("winding", "winding number of q along a circle or rectangle");
    add_model(winding, winding_model);
    auto* radius_opt = winding->add_option("--radius", w_radius, "circle radius");
    winding->add_option("--center-re", w_center_re, "circle center, real part");
    winding->add_option("--center-im", w_center_im, "circle center, imaginary part");
    auto* rect_opt = winding->add_option("--rect", w_rect, "rectangle lo_re,lo_im,hi_re,hi_im")
                         ->expected(4)
                         ->delimiter(',');
    radius_opt->excludes(rect_opt);
    winding->add_option("--samples", w_samples, "initial sample count");
    winding->callback([&] {
        action = [&] {
            const auto p = winding_model.build();
            std::optional<Contour> g;
            if (!w_rect.empty())
                g.emplace(Rectangle{{w_rect[0], w_rect[1]}, {w_rect[2], w_rect[3]}});
            else if (w_radius > 0.0)
                g.emplace(Circle{{w_center_re, w_center_im}, w_radius});
            else
                throw Error(ErrorKind::InvalidArgument, "winding needs --radius > 0 or --rect");
            WindingConfig wc;
            wc.initial_samples = w_samples;
            const auto r = winding_number(p, *g, wc);
            out << json{{"winding", r.winding},
                        {"min_modulus", r.min_modulus},
                        {"samples_used", r.samples_used},
                        {"refined", r.refined}}
                       .dump()
                << '\n';
        };
    });

    // critical-circle
    double cc_b = 0.0;
    double cc_c = 0.0;
    int cc_k = 2;
    double cc_tol = 1e-9;
    double cc_margin = 1e-9;
    auto* critical = app.add_subcommand("critical-circle", "circle where |omega| = 1 on the pure-imaginary rays");
    critical->add_option("--b", cc_b, "analytic coefficient")->required();
    critical->add_option("--c", cc_c, "co-analytic coefficient")->required();
    critical->add_option("--k", cc_k, "degree (n = k, m = 1)")->required();
    critical->add_option("--tol", cc_tol, "tolerance for | |omega| - 1 | on the circle");
    critical->add_option("--converse-margin", cc_margin, "required | |omega| - 1 | at 1.1 M");
    critical->callback([&] {
        action = [&] {
            const CriticalCircle circle = critical_radius(cc_b, cc_c, cc_k);
            json j;
            j["b"] = cc_b;
            j["c"] = cc_c;
            j["k"] = cc_k;
            j["exists"] = circle.exists;
            j["radius"] = circle.exists ? json(circle.radius) : json(nullptr);
            j["rays"] = pure_imaginary_rays(cc_k);
            if (cc_b != 0.0) {
                const auto u = univalence_radius(cc_b, cc_k);
                j["univalence_radius"] = u.radius;
            } else {
                j["univalence_radius"] = nullptr;
            }
            if (circle.exists) {
                j["radius_factored"] = critical_radius_factored(cc_b, cc_c, cc_k);
                const auto check = verify_critical_circle(cc_b, cc_c, cc_k, cc_tol, cc_margin);
                json rays = json::array();
                for (const auto& r : check.rays)
                    rays.push_back({{"angle", r.angle},
                                    {"modulus_on_circle", r.modulus_on_circle},
                                    {"modulus_off_circle", r.modulus_off_circle}});
                j["check"] = {{"passed", check.passed}, {"rays", rays}};
            }
            out << j.dump() << '\n';
        };
    });

    // circle-image
    ModelArgs image_model;
    double image_radius = 1.0;
    int image_samples = 256;
    auto* image = app.add_subcommand("circle-image", "image of a circle |z| = r under q");
    add_model(image, image_model);
    image->add_option("--radius", image_radius, "circle radius")->required();
    image->add_option("--samples", image_samples, "number of samples (>= 16)");
    image->callback([&] {
        action = [&] {
            const auto pts = circle_image(image_model.build(), image_radius, image_samples);
            out << "theta,re,im\n";
            for (std::size_t i = 0; i < pts.size(); ++i) {
                const double theta = pts.size() == 1 ? 0.0
                                                     : 2.0 * std::numbers::pi * static_cast<double>(i) /
                                                           static_cast<double>(pts.size() - 1);
                out << format_number(theta) << ',' << format_number(pts[i].real()) << ','
                    << format_number(pts[i].imag()) << '\n';
            }
        };
    });

    // sweep
    Axis b_axis{0.0, 1.0, 5};
    Axis c_axis{0.0, 1.0, 5};
    int sw_k = 1;
    int sw_n = 2;
    int sw_m = 1;
    SolverArgs sweep_solver;
    unsigned sweep_threads = default_threads();
    std::string sweep_svg;
    auto* sweep = app.add_subcommand("sweep", "zero counts over a (b, c) grid");
    sweep->add_option("--b-lo", b_axis.lo)->required();
    sweep->add_option("--b-hi", b_axis.hi)->required();
    sweep->add_option("--b-steps", b_axis.steps)->required()->check(CLI::PositiveNumber);
    sweep->add_option("--c-lo", c_axis.lo)->required();
    sweep->add_option("--c-hi", c_axis.hi)->required();
    sweep->add_option("--c-steps", c_axis.steps)->required()->check(CLI::PositiveNumber);
    sweep->add_option("--k", sw_k)->required();
    sweep->add_option("--n", sw_n)->required();
    sweep->add_option("--m", sw_m)->required();
    sweep->add_option("--threads", sweep_threads, "worker threads (default QUADZERO_THREADS or all cores)");
    sweep->add_option("--svg", sweep_svg, "also write a count heat map to this path");
    add_solver(sweep, sweep_solver);
    sweep->callback([&] {
        action = [&] {
            const SweepGrid grid =
                run_sweep(b_axis, c_axis, sw_k, sw_n, sw_m, finalize(sweep_solver), sweep_threads);
            write_sweep_csv(out, grid);
            for (const auto& cell : grid.cells)
                if (cell.violation == Violation::Proven)
                    err << "proven bound exceeded at b=" << format_number(cell.b)
                        << " c=" << format_number(cell.c) << '\n';
            if (!sweep_svg.empty()) write_file(sweep_svg, [&](std::ostream& f) { write_sweep_svg(f, grid); });
        };
    });

    try {
        std::vector<std::string> args = expand_config(raw_args);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitHypothesis;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return kExitHypothesis;
    }

    if (!action) return kExitHypothesis;
    try {
        action();
    } catch (const Error& e) {
        err << e.what() << '\n';
        return is_hypothesis_error(e.kind()) ? kExitHypothesis : kExitNumerical;
    }
    return kExitOk;
}

} // namespace quadzero::cli
