#pragma once

#include "quadzero/quad_model.hpp"
#include "quadzero/zero_finder.hpp"

#include <string_view>
#include <vector>

namespace quadzero {

/// Circle |z| = M on which |omega| = 1 along the pure-imaginary rays of the
/// n = k, m = 1 family, M = ((c^2 - 1) / (k^2 (b^2 - 1)))^{1/(2k-2)}.
struct CriticalCircle {
    double radius = 0.0;
    int k = 2;
    bool exists = false;
};

/// Throws BEqualsOne for |b| = 1 and InvalidArgument for k < 2.
/// c^2 = 1 (radius 0) and a negative ratio both yield exists = false.
CriticalCircle critical_radius(double b, double c, int k);

/// The same radius written as (1/k)^{1/(k-1)} ((c^2-1)/(b^2-1))^{1/(2k-2)}.
/// Only meaningful when critical_radius(b, c, k).exists.
double critical_radius_factored(double b, double c, int k);

/// Angles in [0, 2 pi) where z^k conj(z) is pure imaginary:
/// theta_j = (pi/2 + j pi) / (k - 1), j = 0 .. 2k-3.
std::vector<double> pure_imaginary_rays(int k);

struct RayCheck {
    double angle = 0.0;
    double modulus_on_circle = 0.0;  // |omega| at M e^{i theta}
    double modulus_off_circle = 0.0; // |omega| at 1.1 M e^{i theta}
    bool on_circle_ok = false;
    bool off_circle_ok = false;
};

struct CriticalCircleCheck {
    CriticalCircle circle;
    std::vector<RayCheck> rays;
    bool passed = false;
};

/// Builds q with n = k, m = 1 and checks | |omega| - 1 | <= tol at every
/// ray/circle intersection and > converse_margin at 1.1 M on the same rays.
/// Throws BEqualsOne, or HypothesisViolation when the circle does not exist.
CriticalCircleCheck verify_critical_circle(double b, double c, int k, double tol = 1e-9,
                                           double converse_margin = 1e-9);

struct UnivalenceRadius {
    double radius = 0.0;
    std::vector<Complex> critical_points; // roots of z^{k-1} = -1/(b k)
};

/// Modulus (1/(k|b|))^{1/(k-1)} where h' can vanish. Throws BZero for b = 0.
UnivalenceRadius univalence_radius(double b, int k);

enum class Comparison { Less, Equal, Greater };

std::string_view to_string(Comparison c);

struct InequalityEvaluation {
    double lhs = 0.0; // 2 Re z^{n-m}
    double rhs = 0.0;
    Comparison comparison = Comparison::Equal;
};

/// Orientation test for the b = 0 family, evaluated exactly as printed:
///   2 Re z^{n-m}  vs  |z|^{2(1-m)}/(cmn) - n |z|^{2(n-1)}/(cm) - cm/n.
/// Diagnostic only; classify_point is the ground truth. For m > 1 the printed
/// middle exponent differs from the direct expansion of |g'|^2 < 1, which has
/// 2(n-m), so the two can disagree.
InequalityEvaluation b0_orientation_inequality(double c, int n, int m, Complex z);

/// q(radius e^{i theta}) at `samples` uniform angles plus the closing point.
/// radius 0 yields the single point q(0).
std::vector<Complex> circle_image(const HarmonicQuadrinomial& p, double radius, int samples);

struct ModularCensus {
    int on_circle = 0;
    int inside = 0;
    int outside = 0;
    double circle_radius = 0.0;
};

inline constexpr double kDefaultModularBand = 1e-6;

/// Partitions find_zeros(p) by | |z| - M_{b,c} | <= band.
ModularCensus modular_root_census(const HarmonicQuadrinomial& p, const SolveConfig& cfg = {},
                                  double band = kDefaultModularBand);
ModularCensus modular_root_census(const ZeroSetReport& report, const CriticalCircle& circle,
                                  double band = kDefaultModularBand);

} // namespace quadzero
