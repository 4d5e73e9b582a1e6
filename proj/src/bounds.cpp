#include "quadzero/bounds.hpp"

#include "quadzero/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace quadzero {

std::string_view to_string(BoundSource s) {
    switch (s) {
    case BoundSource::Thm31: return "Thm31";
    case BoundSource::Thm32: return "Thm32";
    case BoundSource::FallbackCauchy: return "FallbackCauchy";
    case BoundSource::Unavailable: return "Unavailable";
    }
    return "Unknown";
}

std::string_view to_string(CountBranch b) {
    switch (b) {
    case CountBranch::BZero: return "BZero";
    case CountBranch::BNonzeroConjectural: return "BNonzeroConjectural";
    case CountBranch::BNonzeroWilmshurst: return "BNonzeroWilmshurst";
    }
    return "Unknown";
}

namespace {

bool radius_theorems_apply(const HarmonicQuadrinomial& p) {
    return p.b != 0.0 && p.c != 0.0 && p.k > p.n;
}

} // namespace

RealPoly radius_polynomial(const HarmonicQuadrinomial& p) {
    if (p.b == 0.0 || p.c == 0.0)
        throw Error(ErrorKind::HypothesisViolation, "Theorem 3.1/3.2 requires b != 0 and c != 0");
    if (p.k <= p.n)
        throw Error(ErrorKind::HypothesisViolation, "Theorem 3.1 requires k > n");
    const double ab = std::abs(p.b);
    const double ac = std::abs(p.c);
    const double tail = ac > 1.0 ? ac : 1.0;
    std::vector<double> coeffs(static_cast<std::size_t>(p.k + 2), 0.0);
    coeffs[0] = tail;
    coeffs[static_cast<std::size_t>(p.k)] = -(ab + tail);
    coeffs[static_cast<std::size_t>(p.k + 1)] = ab;
    return RealPoly(std::move(coeffs));
}

DiskBound radius_bound(const HarmonicQuadrinomial& p) {
    const double ab = std::abs(p.b);
    const double ac = std::abs(p.c);
    if (radius_theorems_apply(p)) {
        const Deflation d = deflate_at_one(radius_polynomial(p));
        const PositiveRoot root = positive_root_bracketed(d.quotient);
        return {std::max(1.0, root.value), root.value,
                ac > 1.0 ? BoundSource::Thm31 : BoundSource::Thm32};
    }
    if (p.b == 0.0 || p.k < p.n)
        return {std::max(1.0, ab + ac + 1.0), std::nullopt, BoundSource::FallbackCauchy};
    if (p.k == p.n) {
        if (ab == 1.0) return {1.0, std::nullopt, BoundSource::Unavailable};
        return {std::max(1.0, (ac + 1.0) / std::abs(ab - 1.0)), std::nullopt,
                BoundSource::FallbackCauchy};
    }
    // k > n, b != 0, c == 0
    return {std::max(1.0, (ac + 2.0) / ab), std::nullopt, BoundSource::FallbackCauchy};
}

double majorant_radius(const HarmonicQuadrinomial& p) {
    const double ab = std::abs(p.b);
    const double ac = p.with_coanalytic ? std::abs(p.c) : 0.0;
    const double an = p.with_coanalytic ? 1.0 : 0.0;

    // Identify the dominant term; the majorant is lead*x^D minus the rest.
    int top = 0;
    double lead = 0.0;
    std::vector<double> coeffs;
    auto subtract = [&](int degree, double modulus) {
        if (degree >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<std::size_t>(degree) + 1, 0.0);
        coeffs[static_cast<std::size_t>(degree)] -= modulus;
    };

    if (!p.with_coanalytic || (ab != 0.0 && p.k > p.n)) {
        if (ab == 0.0 || (p.k == 1))
            // degenerate analytic-only cases: q = (b+1) z or z
            return 0.0;
        top = p.k;
        lead = ab;
        coeffs.assign(static_cast<std::size_t>(top) + 1, 0.0);
        subtract(p.n, an);
        subtract(p.m, ac);
        subtract(1, 1.0);
    } else if (ab == 0.0 || p.k < p.n) {
        top = p.n;
        lead = 1.0;
        coeffs.assign(static_cast<std::size_t>(top) + 1, 0.0);
        subtract(p.k, ab);
        subtract(p.m, ac);
        subtract(1, 1.0);
    } else {
        if (ab == 1.0)
            throw Error(ErrorKind::BoundUnavailable,
                        "no inclusion radius when k = n and |b| = 1");
        top = p.n;
        lead = std::abs(ab - 1.0);
        coeffs.assign(static_cast<std::size_t>(top) + 1, 0.0);
        subtract(p.m, ac);
        subtract(1, 1.0);
    }
    coeffs[static_cast<std::size_t>(top)] += lead;
    return positive_root_bracketed(RealPoly(std::move(coeffs))).value;
}

CountBound count_bound(const HarmonicQuadrinomial& p) {
    if (p.b == 0.0) {
        if (p.n <= p.m) throw Error(ErrorKind::HypothesisViolation, "Theorem 3.3 requires n > m");
        return {3 * p.n - 2, true, p.n, CountBranch::BZero};
    }
    if (!(p.k > p.n && p.n > p.m))
        throw Error(ErrorKind::HypothesisViolation,
                    "Theorem 3.3 requires k > n > m when b != 0 (got k=" + std::to_string(p.k) +
                        ", n=" + std::to_string(p.n) + ", m=" + std::to_string(p.m) + ")");
    if (p.n < p.k - 1)
        return {p.n * (p.n - 1) + 3 * p.k - 2, false, p.k, CountBranch::BNonzeroConjectural};
    return {p.k * p.k, true, p.k, CountBranch::BNonzeroWilmshurst};
}

} // namespace quadzero
