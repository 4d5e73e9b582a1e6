#pragma once

#include "quadzero/bounds.hpp"
#include "quadzero/zero_finder.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace quadzero {

struct Axis {
    double lo = 0.0;
    double hi = 0.0;
    int steps = 1;

    /// lo + i (hi - lo) / (steps - 1); a single step sits at lo.
    double at(int i) const;
};

enum class Violation { None, Proven, Conjectural };

std::string_view to_string(Violation v);

struct SweepCell {
    double b = 0.0;
    double c = 0.0;
    bool solved = false;
    int count = 0;
    int n_plus = 0;
    int n_minus = 0;
    int n_singular = 0;
    std::optional<CountBound> bound;
    double radius = 0.0;
    WindingCheck winding_check = WindingCheck::Inconclusive;
    Violation violation = Violation::None;
    std::string note; // diagnostic when the cell could not be solved
};

struct SweepGrid {
    Axis b_axis;
    Axis c_axis;
    int k = 1;
    int n = 2;
    int m = 1;
    std::vector<SweepCell> cells; // row-major: b index outer, c index inner
};

/// Solves every (b, c) cell. Cells are distributed over `threads` workers, each
/// cell solved single-threaded, and stored by grid index.
SweepGrid run_sweep(const Axis& b_axis, const Axis& c_axis, int k, int n, int m,
                    const SolveConfig& cfg, unsigned threads);

inline constexpr std::string_view kSweepCsvHeader =
    "b,c,count,n_plus,n_minus,n_singular,bound_upper,bound_proven,radius,winding_check,violation";

void write_sweep_csv(std::ostream& out, const SweepGrid& grid);

/// %.17g rendering used by every CSV column.
std::string format_number(double x);

} // namespace quadzero
