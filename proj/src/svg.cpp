#include "quadzero/svg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <string>

namespace quadzero {

namespace {

constexpr double kCanvas = 600.0;
constexpr double kMargin = 30.0;

void header(std::ostream& out, double width, double height) {
    out << R"(<?xml version="1.0" encoding="UTF-8" standalone="no"?>)" << '\n'
        << R"(<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" "http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">)"
        << '\n'
        << fmt::format(R"(<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">)",
                       width, height, width, height)
        << '\n'
        << fmt::format(R"(<rect x="0" y="0" width="{}" height="{}" fill="white"/>)", width, height) << '\n';
}

const char* orientation_color(OrientationClass o) {
    switch (o) {
    case OrientationClass::SensePreserving: return "#1f77b4";
    case OrientationClass::SenseReversing: return "#d62728";
    case OrientationClass::Singular: return "#2ca02c";
    }
    return "black";
}

} // namespace

void write_zeros_svg(std::ostream& out, const ZeroSetReport& report,
                     const std::optional<CriticalCircle>& critical) {
    double extent = std::max(report.disk.radius, 1.0);
    for (const auto& z : report.zeros) extent = std::max(extent, std::abs(z.location));
    extent *= 1.1;
    const double scale = (kCanvas / 2.0 - kMargin) / extent;
    const double mid = kCanvas / 2.0;
    auto sx = [&](double x) { return mid + scale * x; };
    auto sy = [&](double y) { return mid - scale * y; };

    header(out, kCanvas, kCanvas);
    out << fmt::format(R"(<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#bbbbbb" stroke-width="1"/>)",
                       kMargin, mid, kCanvas - kMargin, mid)
        << '\n'
        << fmt::format(R"(<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#bbbbbb" stroke-width="1"/>)",
                       mid, kMargin, mid, kCanvas - kMargin)
        << '\n';
    out << fmt::format(R"(<circle cx="{}" cy="{}" r="{:.6f}" fill="none" stroke="black" stroke-width="1.5"/>)",
                       mid, mid, scale * report.disk.radius)
        << '\n';
    if (critical && critical->exists)
        out << fmt::format(
                   R"(<circle cx="{}" cy="{}" r="{:.6f}" fill="none" stroke="#ff7f0e" stroke-width="1.5" stroke-dasharray="6,4"/>)",
                   mid, mid, scale * critical->radius)
            << '\n';
    for (const auto& z : report.zeros)
        out << fmt::format(R"(<circle cx="{:.6f}" cy="{:.6f}" r="4" fill="{}"/>)", sx(z.location.real()),
                           sy(z.location.imag()), orientation_color(z.orientation))
            << '\n';
    out << "</svg>\n";
}

void write_sweep_svg(std::ostream& out, const SweepGrid& grid) {
    const int nb = std::max(1, grid.b_axis.steps);
    const int nc = std::max(1, grid.c_axis.steps);
    const double cw = (kCanvas - 2.0 * kMargin) / nb;
    const double ch = (kCanvas - 2.0 * kMargin) / nc;
    int max_count = 1;
    for (const auto& cell : grid.cells)
        if (cell.solved) max_count = std::max(max_count, cell.count);

    header(out, kCanvas, kCanvas);
    for (std::size_t idx = 0; idx < grid.cells.size(); ++idx) {
        const auto& cell = grid.cells[idx];
        const int bi = static_cast<int>(idx / static_cast<std::size_t>(nc));
        const int ci = static_cast<int>(idx % static_cast<std::size_t>(nc));
        const double x = kMargin + bi * cw;
        const double y = kCanvas - kMargin - (ci + 1) * ch;
        std::string fill = "#cccccc";
        if (cell.solved) {
            const int shade = static_cast<int>(std::lround(255.0 * (1.0 - double(cell.count) / max_count)));
            fill = fmt::format("rgb({},{},255)", shade, shade);
        }
        const char* stroke = cell.violation == Violation::None ? "none" : "#d62728";
        out << fmt::format(R"(<rect x="{:.4f}" y="{:.4f}" width="{:.4f}" height="{:.4f}" fill="{}" stroke="{}"/>)",
                           x, y, cw, ch, fill, stroke)
            << '\n';
    }
    out << "</svg>\n";
}

} // namespace quadzero
