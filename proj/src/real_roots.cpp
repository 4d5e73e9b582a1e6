#include "quadzero/real_roots.hpp"

#include "quadzero/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace quadzero {

RealPoly::RealPoly(std::vector<double> ascending) : coeffs_(std::move(ascending)) {
    for (double a : coeffs_)
        if (!std::isfinite(a))
            throw Error(ErrorKind::InvalidArgument, "polynomial coefficients must be finite");
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double RealPoly::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double RealPoly::derivative_at(double x) const {
    double acc = 0.0;
    for (int i = degree(); i >= 1; --i) acc = acc * x + i * coeffs_[static_cast<std::size_t>(i)];
    return acc;
}

double RealPoly::abs_coeff_sum() const {
    double s = 0.0;
    for (double a : coeffs_) s += std::abs(a);
    return s;
}

int sign_changes(const RealPoly& p) {
    if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "sign_changes of the zero polynomial");
    int changes = 0;
    int last = 0;
    for (double a : p.coeffs()) {
        if (a == 0.0) continue;
        const int s = a > 0.0 ? 1 : -1;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

Deflation deflate_at_one(const RealPoly& p) {
    if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot deflate the zero polynomial");
    const double scale = p.abs_coeff_sum();
    if (!(std::abs(p(1.0)) < 1e-12 * scale))
        throw Error(ErrorKind::NotARootAtOne,
                    "x = 1 is not a root: p(1) = " + std::to_string(p(1.0)));
    const int d = p.degree();
    if (d == 0) return {RealPoly{}, p[0]};
    // Horner from the top: q_{d-1} = a_d, q_{i-1} = a_i + q_i.
    std::vector<double> q(static_cast<std::size_t>(d));
    double carry = 0.0;
    for (int i = d; i >= 1; --i) {
        carry = p[i] + carry;
        q[static_cast<std::size_t>(i - 1)] = carry;
    }
    const double remainder = p[0] + carry;
    return {RealPoly(std::move(q)), remainder};
}

PositiveRoot positive_root_bracketed(const RealPoly& input) {
    if (input.is_zero() || sign_changes(input) != 1)
        throw Error(ErrorKind::NoSignChange,
                    "positive root isolation needs exactly one coefficient sign change");

    // Factors of x do not move positive roots; strip them so p(0) != 0.
    auto all = input.coeffs();
    std::size_t low = 0;
    while (all[low] == 0.0) ++low;
    const RealPoly p(std::vector<double>(all.begin() + static_cast<std::ptrdiff_t>(low), all.end()));

    const double sign_at_zero = p[0] > 0.0 ? 1.0 : -1.0;
    const double scale = p.abs_coeff_sum();
    const int deg = p.degree();
    auto residual_ok = [&](double x, double fx) {
        return std::abs(fx) <= 1e-13 * scale * std::pow(std::max(1.0, x), deg);
    };

    constexpr int kMaxIterations = 500;
    int iterations = 0;

    double lo = 0.0;
    double hi = 1.0;
    while (p(hi) * sign_at_zero > 0.0) {
        lo = hi;
        hi *= 2.0;
        if (++iterations > kMaxIterations || !std::isfinite(hi))
            throw Error(ErrorKind::NonConvergence, "bracket expansion did not terminate");
    }

    while (hi - lo > 1e-3) {
        const double mid = 0.5 * (lo + hi);
        if (p(mid) * sign_at_zero > 0.0) lo = mid; else hi = mid;
        if (++iterations > kMaxIterations)
            throw Error(ErrorKind::NonConvergence, "bisection did not terminate");
    }

    double x = 0.5 * (lo + hi);
    while (true) {
        const double fx = p(x);
        if (fx == 0.0 || residual_ok(x, fx)) return {x, std::abs(fx), iterations};
        if (fx * sign_at_zero > 0.0) lo = x; else hi = x;
        if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) {
            const double best = std::abs(p(lo)) < std::abs(p(hi)) ? lo : hi;
            const double fb = p(best);
            if (residual_ok(best, fb)) return {best, std::abs(fb), iterations};
            throw Error(ErrorKind::NonConvergence, "bracket collapsed above residual tolerance");
        }
        const double dfx = p.derivative_at(x);
        double next = dfx != 0.0 ? x - fx / dfx : lo;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        x = next;
        if (++iterations > kMaxIterations)
            throw Error(ErrorKind::NonConvergence, "Newton polish did not converge");
    }
}

} // namespace quadzero
