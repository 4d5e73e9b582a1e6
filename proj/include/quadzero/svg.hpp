#pragma once

#include "quadzero/critical_set.hpp"
#include "quadzero/sweep.hpp"
#include "quadzero/zero_finder.hpp"

#include <optional>
#include <ostream>

namespace quadzero {

/// Zero scatter (filled markers colored by orientation) with the inclusion
/// circle and, when given and existing, the critical circle. SVG 1.1.
void write_zeros_svg(std::ostream& out, const ZeroSetReport& report,
                     const std::optional<CriticalCircle>& critical = std::nullopt);

/// Heat map of zero counts over the (b, c) grid; violating cells are outlined.
void write_sweep_svg(std::ostream& out, const SweepGrid& grid);

} // namespace quadzero
