#pragma once

#include <span>
#include <vector>

namespace quadzero {

/// Dense real polynomial, coefficients in ascending degree order.
/// Trailing zeros are trimmed on construction, so the zero polynomial has no
/// coefficients and degree -1.
class RealPoly {
public:
    RealPoly() = default;
    explicit RealPoly(std::vector<double> ascending);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::span<const double> coeffs() const { return coeffs_; }
    double operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }

    double operator()(double x) const;
    double derivative_at(double x) const;
    double abs_coeff_sum() const;

private:
    std::vector<double> coeffs_;
};

/// Sign alternations in the coefficient sequence, zero coefficients skipped.
/// Throws ZeroPolynomial.
int sign_changes(const RealPoly& p);

struct Deflation {
    RealPoly quotient;
    double remainder = 0.0;
};

/// Synthetic division by (x - 1). Throws NotARootAtOne unless
/// |p(1)| < 1e-12 * sum|a_i|.
Deflation deflate_at_one(const RealPoly& p);

struct PositiveRoot {
    double value = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

/// Unique positive root of a polynomial with exactly one Descartes sign change.
/// Bracket expansion, bisection down to width 1e-3, then bracket-safeguarded
/// Newton until |p(x)| <= 1e-13 * sum|a_i| * max(1,x)^deg.
/// Throws NoSignChange if sign_changes(p) != 1, NonConvergence after 500 steps.
PositiveRoot positive_root_bracketed(const RealPoly& p);

} // namespace quadzero
