#include "quadzero/quad_model.hpp"

#include "quadzero/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace quadzero {

Complex ipow(Complex z, int e) {
    Complex result{1.0, 0.0};
    Complex base = z;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

double ipow(double x, int e) {
    double result = 1.0;
    double base = x;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

HarmonicQuadrinomial HarmonicQuadrinomial::make(double b, double c, int k, int n, int m) {
    HarmonicQuadrinomial p{b, c, k, n, m, true};
    p.validate();
    return p;
}

HarmonicQuadrinomial HarmonicQuadrinomial::analytic_only() const {
    HarmonicQuadrinomial p = *this;
    p.with_coanalytic = false;
    return p;
}

void HarmonicQuadrinomial::validate() const {
    if (!std::isfinite(b) || !std::isfinite(c))
        throw Error(ErrorKind::InvalidArgument, "coefficients b and c must be finite");
    if (k < 1)
        throw Error(ErrorKind::InvalidArgument, "k must be >= 1, got " + std::to_string(k));
    if (m < 1)
        throw Error(ErrorKind::InvalidArgument, "m must be >= 1, got " + std::to_string(m));
    if (n <= m)
        throw Error(ErrorKind::InvalidArgument,
                    "n must exceed m, got n=" + std::to_string(n) + " m=" + std::to_string(m));
}

std::string_view to_string(OrientationClass o) {
    switch (o) {
    case OrientationClass::SensePreserving: return "SensePreserving";
    case OrientationClass::SenseReversing: return "SenseReversing";
    case OrientationClass::Singular: return "Singular";
    }
    return "Unknown";
}

Complex evaluate(const HarmonicQuadrinomial& p, Complex z) {
    Complex value = p.b * ipow(z, p.k) + z;
    if (p.with_coanalytic) {
        const Complex zc = std::conj(z);
        value += ipow(zc, p.n) + p.c * ipow(zc, p.m);
    }
    return value;
}

Complex analytic_derivative(const HarmonicQuadrinomial& p, Complex z) {
    return p.b * static_cast<double>(p.k) * ipow(z, p.k - 1) + 1.0;
}

Complex coanalytic_derivative(const HarmonicQuadrinomial& p, Complex z) {
    if (!p.with_coanalytic) return {0.0, 0.0};
    return static_cast<double>(p.n) * ipow(z, p.n - 1) +
           p.c * static_cast<double>(p.m) * ipow(z, p.m - 1);
}

double jacobian(const HarmonicQuadrinomial& p, Complex z) {
    return std::norm(analytic_derivative(p, z)) - std::norm(coanalytic_derivative(p, z));
}

Complex dilatation(const HarmonicQuadrinomial& p, Complex z) {
    const Complex hp = analytic_derivative(p, z);
    const double pole_tol =
        1e-14 * (1.0 + std::abs(p.b) * p.k * ipow(std::abs(z), p.k - 1));
    if (std::abs(hp) < pole_tol)
        throw Error(ErrorKind::PoleAtCriticalPoint,
                    "h'(z) vanishes: z is a critical point of the analytic part");
    return coanalytic_derivative(p, z) / hp;
}

OrientationClass classify_point(const HarmonicQuadrinomial& p, Complex z, double tol) {
    if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
    const double h2 = std::norm(analytic_derivative(p, z));
    const double g2 = std::norm(coanalytic_derivative(p, z));
    const double threshold = tol * std::max(1.0, h2 + g2);
    const double j = h2 - g2;
    if (j > threshold) return OrientationClass::SensePreserving;
    if (j < -threshold) return OrientationClass::SenseReversing;
    return OrientationClass::Singular;
}

double term_scale(const HarmonicQuadrinomial& p, Complex z) {
    const double r = std::abs(z);
    double s = std::abs(p.b) * ipow(r, p.k) + r;
    if (p.with_coanalytic) s += ipow(r, p.n) + std::abs(p.c) * ipow(r, p.m);
    return s;
}

} // namespace quadzero
