#include "quadzero/contour.hpp"

#include "quadzero/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace quadzero {

Contour::Contour(Circle c) : shape_(c) {
    if (!(c.radius > 0.0) || !std::isfinite(c.radius))
        throw Error(ErrorKind::InvalidArgument, "circle radius must be positive and finite");
}

Contour::Contour(Rectangle r) : shape_(r) {
    if (!(r.hi.real() > r.lo.real()) || !(r.hi.imag() > r.lo.imag()))
        throw Error(ErrorKind::InvalidArgument, "rectangle must have hi > lo in both coordinates");
}

Complex Contour::point(double t) const {
    if (const auto* c = std::get_if<Circle>(&shape_)) {
        const double theta = 2.0 * std::numbers::pi * t;
        return c->center + c->radius * Complex{std::cos(theta), std::sin(theta)};
    }
    const auto& r = std::get<Rectangle>(shape_);
    const double w = r.hi.real() - r.lo.real();
    const double h = r.hi.imag() - r.lo.imag();
    const double perimeter = 2.0 * (w + h);
    double s = std::clamp(t, 0.0, 1.0) * perimeter;
    // lo -> (hi.re, lo.im) -> hi -> (lo.re, hi.im) -> lo
    if (s <= w) return {r.lo.real() + s, r.lo.imag()};
    s -= w;
    if (s <= h) return {r.hi.real(), r.lo.imag() + s};
    s -= h;
    if (s <= w) return {r.hi.real() - s, r.hi.imag()};
    s -= w;
    return {r.lo.real(), r.hi.imag() - std::min(s, h)};
}

namespace {

constexpr double kMaxStep = std::numbers::pi / 2.0;
constexpr int kMaxDepth = 64;

struct Walker {
    const HarmonicQuadrinomial& p;
    const Contour& g;
    const WindingConfig& cfg;
    double zero_threshold = 0.0;
    std::size_t samples = 0;
    double min_modulus = 0.0;
    bool refined = false;

    Complex sample(double t) {
        const Complex v = evaluate(p, g.point(t));
        ++samples;
        min_modulus = std::min(min_modulus, std::abs(v));
        if (!(min_modulus >= zero_threshold))
            throw Error(ErrorKind::ZeroOnContour, "q vanishes (numerically) on the contour");
        return v;
    }

    static bool needs_split(Complex a, Complex b) {
        const double step = std::abs(std::arg(b / a));
        return step > kMaxStep || std::abs(b - a) > std::min(std::abs(a), std::abs(b));
    }

    // Argument change of q over [t0, t1] given endpoint values.
    double segment(double t0, double t1, Complex q0, Complex q1, int depth) {
        if (!needs_split(q0, q1)) return std::arg(q1 / q0);
        if (depth >= kMaxDepth || samples >= cfg.sample_cap)
            throw Error(ErrorKind::SampleCapExceeded, "contour refinement hit the sample cap");
        refined = true;
        const double tm = 0.5 * (t0 + t1);
        const Complex qm = sample(tm);
        return segment(t0, tm, q0, qm, depth + 1) + segment(tm, t1, qm, q1, depth + 1);
    }
};

} // namespace

WindingReport winding_number(const HarmonicQuadrinomial& p, const Contour& g,
                             const WindingConfig& cfg) {
    const std::size_t n0 = std::max<std::size_t>(cfg.initial_samples, 8);

    std::vector<Complex> values(n0 + 1);
    double scale = 0.0;
    for (std::size_t i = 0; i < n0; ++i) {
        const Complex z = g.point(static_cast<double>(i) / static_cast<double>(n0));
        values[i] = evaluate(p, z);
        scale = std::max(scale, term_scale(p, z));
    }
    values[n0] = values[0];

    Walker w{p, g, cfg};
    w.zero_threshold = cfg.zero_fraction * std::max(scale, 1e-300);
    w.samples = n0;
    w.min_modulus = std::abs(values[0]);
    for (std::size_t i = 0; i < n0; ++i) {
        w.min_modulus = std::min(w.min_modulus, std::abs(values[i]));
    }
    if (!(w.min_modulus >= w.zero_threshold))
        throw Error(ErrorKind::ZeroOnContour, "q vanishes (numerically) on the contour");

    double total = 0.0;
    for (std::size_t i = 0; i < n0; ++i) {
        const double t0 = static_cast<double>(i) / static_cast<double>(n0);
        const double t1 = static_cast<double>(i + 1) / static_cast<double>(n0);
        total += w.segment(t0, t1, values[i], values[i + 1], 0);
    }

    const double turns = total / (2.0 * std::numbers::pi);
    const double rounded = std::round(turns);
    if (std::abs(turns - rounded) > 0.25)
        throw Error(ErrorKind::AmbiguousWinding, "argument change is not close to a multiple of 2 pi");
    return {static_cast<int>(rounded), w.min_modulus, w.samples, w.refined};
}

} // namespace quadzero
