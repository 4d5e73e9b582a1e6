#pragma once

#include "quadzero/quad_model.hpp"
#include "quadzero/real_roots.hpp"

#include <optional>
#include <string_view>

namespace quadzero {

enum class BoundSource { Thm31, Thm32, FallbackCauchy, Unavailable };

std::string_view to_string(BoundSource s);

/// Zero-inclusion disk D(0, radius).
struct DiskBound {
    double radius = 1.0;
    std::optional<double> delta;
    BoundSource source = BoundSource::Unavailable;
};

/// The undeflated radius polynomial for b, c != 0 and k > n:
///   |c| > 1:  |b| x^{k+1} - (|b| + |c|) x^k + |c|
///   |c| <= 1: |b| x^{k+1} - (|b| + 1) x^k + 1
/// Throws HypothesisViolation outside those hypotheses.
RealPoly radius_polynomial(const HarmonicQuadrinomial& p);

/// Disk from the radius polynomial when b, c != 0 and k > n (radius max(1, delta)),
/// otherwise a Cauchy-type fallback:
///   k < n or b = 0:       max(1, |b| + |c| + 1)
///   k = n, |b| != 1:      max(1, (|c| + 1) / ||b| - 1|)
///   k > n, b != 0, c = 0: max(1, (|c| + 2) / |b|)
///   k = n, |b| = 1:       Unavailable
DiskBound radius_bound(const HarmonicQuadrinomial& p);

/// Unique positive root of the triangle-inequality majorant
/// (dominant-term modulus minus the other term moduli). Every zero of q
/// satisfies |z| <= this value. Throws BoundUnavailable when k = n, |b| = 1.
double majorant_radius(const HarmonicQuadrinomial& p);

enum class CountBranch { BZero, BNonzeroConjectural, BNonzeroWilmshurst };

std::string_view to_string(CountBranch b);

struct CountBound {
    int upper = 0;
    bool upper_is_proven = false;
    int lower = 0;
    CountBranch branch = CountBranch::BZero;
};

/// Piecewise zero-count bound:
///   b = 0:                3n - 2       (proven), lower n
///   b != 0, n < k - 1:    n(n-1)+3k-2  (conjectural), lower k
///   b != 0, n = k - 1:    k^2          (proven), lower k
/// The b != 0 branches require k > n > m (HypothesisViolation otherwise).
CountBound count_bound(const HarmonicQuadrinomial& p);

} // namespace quadzero
