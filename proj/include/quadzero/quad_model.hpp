#pragma once

#include <complex>
#include <string_view>

namespace quadzero {

using Complex = std::complex<double>;

/// z^e by repeated squaring; z^0 == 1 for every z, including 0.
Complex ipow(Complex z, int e);
double ipow(double x, int e);

/// q(z) = b z^k + conj(z)^n + c conj(z)^m + z with real b, c and n > m >= 1.
///
/// Analytic part h(z) = b z^k + z, co-analytic part g(z) = z^n + c z^m, so that
/// q = h + conj(g). `with_coanalytic = false` drops g entirely; it exists for
/// test harnesses that need the pure analytic polynomial b z^k + z.
struct HarmonicQuadrinomial {
    double b = 0.0;
    double c = 0.0;
    int k = 1;
    int n = 2;
    int m = 1;
    bool with_coanalytic = true;

    /// Validates n > m >= 1, k >= 1 and finite b, c; throws InvalidArgument.
    static HarmonicQuadrinomial make(double b, double c, int k, int n, int m);

    HarmonicQuadrinomial analytic_only() const;

    void validate() const;
};

enum class OrientationClass { SensePreserving, SenseReversing, Singular };

std::string_view to_string(OrientationClass o);

Complex evaluate(const HarmonicQuadrinomial& p, Complex z);

/// h'(z) = b k z^{k-1} + 1
Complex analytic_derivative(const HarmonicQuadrinomial& p, Complex z);

/// g'(z) = n z^{n-1} + c m z^{m-1}
Complex coanalytic_derivative(const HarmonicQuadrinomial& p, Complex z);

/// |h'|^2 - |g'|^2
double jacobian(const HarmonicQuadrinomial& p, Complex z);

/// g'/h'. Throws PoleAtCriticalPoint when |h'| < 1e-14 (1 + |b| k |z|^{k-1}).
Complex dilatation(const HarmonicQuadrinomial& p, Complex z);

inline constexpr double kDefaultSingularTol = 1e-12;

/// Sign of the Jacobian against tol * max(1, |h'|^2 + |g'|^2).
OrientationClass classify_point(const HarmonicQuadrinomial& p, Complex z,
                                double tol = kDefaultSingularTol);

/// Sum of the moduli of the four terms at z; the natural scale for |q(z)|.
double term_scale(const HarmonicQuadrinomial& p, Complex z);

} // namespace quadzero
