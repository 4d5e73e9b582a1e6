#include "quadzero/critical_set.hpp"

#include "quadzero/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace quadzero {

namespace {

void require_k(int k) {
    if (k < 2) throw Error(ErrorKind::InvalidArgument, "critical-set operations need k >= 2");
}

} // namespace

std::string_view to_string(Comparison c) {
    switch (c) {
    case Comparison::Less: return "lt";
    case Comparison::Equal: return "eq";
    case Comparison::Greater: return "gt";
    }
    return "unknown";
}

CriticalCircle critical_radius(double b, double c, int k) {
    require_k(k);
    if (std::abs(b) == 1.0) throw Error(ErrorKind::BEqualsOne, "Theorem 3.4 requires b ≠ ±1");
    const double ratio = (c * c - 1.0) / (b * b - 1.0);
    CriticalCircle circle{0.0, k, ratio > 0.0};
    if (circle.exists)
        circle.radius = std::pow(ratio / static_cast<double>(k * k), 1.0 / (2.0 * k - 2.0));
    return circle;
}

double critical_radius_factored(double b, double c, int k) {
    require_k(k);
    if (std::abs(b) == 1.0) throw Error(ErrorKind::BEqualsOne, "Theorem 3.4 requires b ≠ ±1");
    const double ratio = (c * c - 1.0) / (b * b - 1.0);
    return std::pow(1.0 / k, 1.0 / (k - 1.0)) * std::pow(ratio, 1.0 / (2.0 * k - 2.0));
}

std::vector<double> pure_imaginary_rays(int k) {
    require_k(k);
    std::vector<double> angles;
    angles.reserve(static_cast<std::size_t>(2 * (k - 1)));
    for (int j = 0; j < 2 * (k - 1); ++j)
        angles.push_back((std::numbers::pi / 2.0 + j * std::numbers::pi) / (k - 1));
    return angles;
}

CriticalCircleCheck verify_critical_circle(double b, double c, int k, double tol,
                                           double converse_margin) {
    CriticalCircleCheck check;
    check.circle = critical_radius(b, c, k);
    if (!check.circle.exists)
        throw Error(ErrorKind::HypothesisViolation,
                    "critical circle does not exist: (c^2-1)/(b^2-1) must be positive");
    const auto p = HarmonicQuadrinomial::make(b, c, k, k, 1);
    check.passed = true;
    for (double theta : pure_imaginary_rays(k)) {
        const Complex dir{std::cos(theta), std::sin(theta)};
        RayCheck ray;
        ray.angle = theta;
        ray.modulus_on_circle = std::abs(dilatation(p, check.circle.radius * dir));
        ray.modulus_off_circle = std::abs(dilatation(p, 1.1 * check.circle.radius * dir));
        ray.on_circle_ok = std::abs(ray.modulus_on_circle - 1.0) <= tol;
        ray.off_circle_ok = std::abs(ray.modulus_off_circle - 1.0) > converse_margin;
        check.passed = check.passed && ray.on_circle_ok && ray.off_circle_ok;
        check.rays.push_back(ray);
    }
    return check;
}

UnivalenceRadius univalence_radius(double b, int k) {
    require_k(k);
    if (b == 0.0) throw Error(ErrorKind::BZero, "h' = 1 never vanishes when b = 0");
    UnivalenceRadius out;
    out.radius = std::pow(1.0 / (k * std::abs(b)), 1.0 / (k - 1.0));
    // z^{k-1} = -1/(bk): argument pi for b > 0, 0 for b < 0.
    const double base = b > 0.0 ? std::numbers::pi : 0.0;
    for (int j = 0; j < k - 1; ++j) {
        const double theta = (base + 2.0 * std::numbers::pi * j) / (k - 1);
        out.critical_points.push_back(std::polar(out.radius, theta));
    }
    return out;
}

InequalityEvaluation b0_orientation_inequality(double c, int n, int m, Complex z) {
    if (c == 0.0) throw Error(ErrorKind::InvalidArgument, "the b = 0 orientation test divides by c");
    if (!(n > m && m >= 1)) throw Error(ErrorKind::InvalidArgument, "need n > m >= 1");
    const double r = std::abs(z);
    if (m > 1 && r == 0.0)
        throw Error(ErrorKind::InvalidArgument, "z = 0 is excluded when m > 1");
    const double cm = c * m;
    InequalityEvaluation e;
    e.lhs = 2.0 * ipow(z, n - m).real();
    e.rhs = std::pow(r, 2.0 * (1 - m)) / (cm * n) - n * ipow(r, 2 * (n - 1)) / cm - cm / n;
    const double tol = 1e-12 * std::max({1.0, std::abs(e.lhs), std::abs(e.rhs)});
    if (std::abs(e.lhs - e.rhs) <= tol)
        e.comparison = Comparison::Equal;
    else
        e.comparison = e.lhs < e.rhs ? Comparison::Less : Comparison::Greater;
    return e;
}

std::vector<Complex> circle_image(const HarmonicQuadrinomial& p, double radius, int samples) {
    if (samples < 16) throw Error(ErrorKind::InvalidArgument, "circle_image needs at least 16 samples");
    if (!(radius >= 0.0) || !std::isfinite(radius))
        throw Error(ErrorKind::InvalidArgument, "radius must be finite and non-negative");
    if (radius == 0.0) return {evaluate(p, {0.0, 0.0})};
    std::vector<Complex> image;
    image.reserve(static_cast<std::size_t>(samples) + 1);
    for (int i = 0; i < samples; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / samples;
        image.push_back(evaluate(p, std::polar(radius, theta)));
    }
    image.push_back(image.front());
    return image;
}

ModularCensus modular_root_census(const ZeroSetReport& report, const CriticalCircle& circle,
                                  double band) {
    if (!circle.exists)
        throw Error(ErrorKind::HypothesisViolation, "critical circle does not exist");
    ModularCensus census;
    census.circle_radius = circle.radius;
    for (const auto& z : report.zeros) {
        const double d = std::abs(z.location) - circle.radius;
        if (std::abs(d) <= band) ++census.on_circle;
        else if (d < 0.0) ++census.inside;
        else ++census.outside;
    }
    return census;
}

ModularCensus modular_root_census(const HarmonicQuadrinomial& p, const SolveConfig& cfg,
                                  double band) {
    const CriticalCircle circle = critical_radius(p.b, p.c, p.k);
    if (!circle.exists)
        throw Error(ErrorKind::HypothesisViolation, "critical circle does not exist");
    return modular_root_census(find_zeros(p, cfg), circle, band);
}

} // namespace quadzero
