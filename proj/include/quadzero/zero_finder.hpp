#pragma once

#include "quadzero/bounds.hpp"
#include "quadzero/quad_model.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace quadzero {

struct SolveConfig {
    /// Residual acceptance, relative to max(1, sum of term moduli at z).
    double accept_tol = 1e-10;
    /// Defaults to 1e-7 * max(1, search radius).
    std::optional<double> merge_radius;
    int max_depth = 12;
    /// Quadtree depth at which Newton starts begin.
    int start_depth = 3;
    int extra_starts = 8;
    std::uint64_t seed = 0;
    double singular_tol = kDefaultSingularTol;
    int newton_iterations = 100;
    unsigned threads = 1;
    /// Upper limit on cells per quadtree level; excess cells are reported unresolved.
    std::size_t cell_budget = 1u << 17;
    bool run_winding_check = true;

    void validate() const;
};

struct ZeroRecord {
    Complex location;
    double residual = 0.0;
    double jacobian = 0.0;
    OrientationClass orientation = OrientationClass::Singular;
    int multiplicity_hint = 1;
};

enum class WindingCheck { Passed, Failed, Inconclusive };

std::string_view to_string(WindingCheck w);

struct ZeroSetReport {
    std::vector<ZeroRecord> zeros;
    int count = 0;
    int n_plus = 0;
    int n_minus = 0;
    int n_singular = 0;
    /// Absent when the count-bound hypotheses (k > n > m for b != 0) fail.
    std::optional<CountBound> bound;
    DiskBound disk;
    /// Radius actually searched: max(disk.radius, majorant_radius).
    double search_radius = 0.0;
    WindingCheck winding_check = WindingCheck::Inconclusive;
    std::optional<int> winding;
    std::size_t cells_visited = 0;
    /// Cells that were neither excluded nor certified to hold a single known zero.
    std::size_t unresolved_cells = 0;
};

/// (Re q(z), Im q(z)).
std::pair<double, double> real_system(const HarmonicQuadrinomial& p, Complex z);

/// One damped Newton update on (Re q, Im q) = 0, step length clamped to max_step.
/// The 2x2 real Jacobian has determinant |h'|^2 - |g'|^2; throws
/// DegenerateJacobian when that is below 1e-14 * max(1, |h'|^2 + |g'|^2).
Complex newton_step(const HarmonicQuadrinomial& p, Complex z, double max_step);

/// All zeros of q: quadtree over the square around D(0, S) with certified
/// Lipschitz exclusion, multi-start Newton in surviving cells, deduplication,
/// classification, then an argument-principle check on C(0, S + 1).
/// Throws BoundUnavailable when no inclusion radius exists (k = n, |b| = 1).
ZeroSetReport find_zeros(const HarmonicQuadrinomial& p, const SolveConfig& cfg = {});

int count_zeros(const HarmonicQuadrinomial& p, const SolveConfig& cfg = {});

} // namespace quadzero
