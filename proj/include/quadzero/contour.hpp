#pragma once

#include "quadzero/quad_model.hpp"

#include <cstddef>
#include <variant>

namespace quadzero {

struct Circle {
    Complex center{0.0, 0.0};
    double radius = 1.0;
};

/// Axis-aligned rectangle given by its lower-left and upper-right corners.
struct Rectangle {
    Complex lo{0.0, 0.0};
    Complex hi{1.0, 1.0};
};

/// Closed counterclockwise contour. Throws InvalidArgument for a
/// non-positive radius or a degenerate rectangle.
class Contour {
public:
    Contour(Circle c);
    Contour(Rectangle r);

    /// Point at curve parameter t in [0, 1]; point(0) == point(1).
    Complex point(double t) const;

    const std::variant<Circle, Rectangle>& shape() const { return shape_; }

private:
    std::variant<Circle, Rectangle> shape_;
};

struct WindingReport {
    int winding = 0;
    double min_modulus = 0.0;
    std::size_t samples_used = 0;
    bool refined = false;
};

struct WindingConfig {
    std::size_t initial_samples = 512;
    std::size_t sample_cap = std::size_t{1} << 20;
    /// |q| below this fraction of the contour's typical |q| means a zero on the contour.
    double zero_fraction = 1e-9;
};

/// Winding number of q around the contour, from principal-branch argument
/// increments over adaptively refined samples. A segment is split while its
/// argument increment exceeds pi/2 or its chord |dq| exceeds the smaller
/// endpoint modulus.
///
/// Throws ZeroOnContour, SampleCapExceeded, or AmbiguousWinding when the total
/// lands more than 0.25 away from an integer multiple of 2 pi.
WindingReport winding_number(const HarmonicQuadrinomial& p, const Contour& g,
                             const WindingConfig& cfg = {});

} // namespace quadzero
