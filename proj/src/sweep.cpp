#include "quadzero/sweep.hpp"

#include "quadzero/error.hpp"
#include "quadzero/parallel.hpp"

#include <fmt/format.h>

namespace quadzero {

double Axis::at(int i) const {
    if (steps <= 1) return lo;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

std::string_view to_string(Violation v) {
    switch (v) {
    case Violation::None: return "none";
    case Violation::Proven: return "proven";
    case Violation::Conjectural: return "conjectural";
    }
    return "unknown";
}

std::string format_number(double x) { return fmt::format("{:.17g}", x); }

SweepGrid run_sweep(const Axis& b_axis, const Axis& c_axis, int k, int n, int m,
                    const SolveConfig& cfg, unsigned threads) {
    if (b_axis.steps < 1 || c_axis.steps < 1)
        throw Error(ErrorKind::InvalidArgument, "sweep axes need at least one step");
    HarmonicQuadrinomial::make(0.0, 0.0, k, n, m);

    SweepGrid grid{b_axis, c_axis, k, n, m, {}};
    const std::size_t total = static_cast<std::size_t>(b_axis.steps) * static_cast<std::size_t>(c_axis.steps);
    grid.cells.resize(total);

    SolveConfig cell_cfg = cfg;
    cell_cfg.threads = 1;

    parallel_for(total, threads, [&](std::size_t idx) {
        const int bi = static_cast<int>(idx / static_cast<std::size_t>(c_axis.steps));
        const int ci = static_cast<int>(idx % static_cast<std::size_t>(c_axis.steps));
        SweepCell& cell = grid.cells[idx];
        cell.b = b_axis.at(bi);
        cell.c = c_axis.at(ci);
        try {
            const auto p = HarmonicQuadrinomial::make(cell.b, cell.c, k, n, m);
            const ZeroSetReport r = find_zeros(p, cell_cfg);
            cell.solved = true;
            cell.count = r.count;
            cell.n_plus = r.n_plus;
            cell.n_minus = r.n_minus;
            cell.n_singular = r.n_singular;
            cell.bound = r.bound;
            cell.radius = r.disk.radius;
            cell.winding_check = r.winding_check;
            if (r.bound && r.count > r.bound->upper)
                cell.violation = r.bound->upper_is_proven ? Violation::Proven : Violation::Conjectural;
        } catch (const Error& e) {
            cell.note = e.what();
        }
    });
    return grid;
}

void write_sweep_csv(std::ostream& out, const SweepGrid& grid) {
    out << kSweepCsvHeader << '\n';
    for (const auto& cell : grid.cells) {
        out << format_number(cell.b) << ',' << format_number(cell.c) << ',';
        if (!cell.solved) {
            out << "NA,NA,NA,NA,NA,NA,NA,NA,none\n";
            continue;
        }
        out << cell.count << ',' << cell.n_plus << ',' << cell.n_minus << ',' << cell.n_singular << ',';
        if (cell.bound)
            out << cell.bound->upper << ',' << (cell.bound->upper_is_proven ? "true" : "false") << ',';
        else
            out << "NA,NA,";
        out << format_number(cell.radius) << ',' << to_string(cell.winding_check) << ','
            << to_string(cell.violation) << '\n';
    }
}

} // namespace quadzero
