#include "quadzero/zero_finder.hpp"

#include "quadzero/contour.hpp"
#include "quadzero/error.hpp"
#include "quadzero/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace quadzero {

std::string_view to_string(WindingCheck w) {
    switch (w) {
    case WindingCheck::Passed: return "passed";
    case WindingCheck::Failed: return "failed";
    case WindingCheck::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

void SolveConfig::validate() const {
    if (!(accept_tol > 0.0) || !(singular_tol > 0.0) || (merge_radius && !(*merge_radius > 0.0)))
        throw Error(ErrorKind::InvalidArgument, "solver tolerances must be positive");
    if (max_depth < 1 || start_depth < 0 || start_depth > max_depth)
        throw Error(ErrorKind::InvalidArgument, "need 0 <= start_depth <= max_depth, max_depth >= 1");
    if (extra_starts < 0 || newton_iterations < 1)
        throw Error(ErrorKind::InvalidArgument, "extra_starts >= 0 and newton_iterations >= 1 required");
}

std::pair<double, double> real_system(const HarmonicQuadrinomial& p, Complex z) {
    const Complex v = evaluate(p, z);
    return {v.real(), v.imag()};
}

Complex newton_step(const HarmonicQuadrinomial& p, Complex z, double max_step) {
    const Complex f = evaluate(p, z);
    const Complex hp = analytic_derivative(p, z);
    const Complex gp = coanalytic_derivative(p, z);
    const double h2 = std::norm(hp);
    const double g2 = std::norm(gp);
    const double det = h2 - g2;
    if (std::abs(det) <= 1e-14 * std::max(1.0, h2 + g2))
        throw Error(ErrorKind::DegenerateJacobian, "Jacobian vanishes at the Newton iterate");

    // Solve h' dz + conj(g') conj(dz) = -f.
    Complex dz = (-f * std::conj(hp) + std::conj(gp) * std::conj(f)) / det;
    const double len = std::abs(dz);
    if (len > max_step) dz *= max_step / len;

    const double f0 = std::abs(f);
    Complex trial = dz;
    for (int halving = 0; halving < 10; ++halving) {
        if (std::abs(evaluate(p, z + trial)) < f0) return z + trial;
        trial *= 0.5;
    }
    return z + dz;
}

namespace {

struct Cell {
    double cx = 0.0;
    double cy = 0.0;
    double half = 0.0; // half side length
    int depth = 0;
    std::uint64_t id = 1;

    Complex center() const { return {cx, cy}; }
    double half_diagonal() const { return half * std::sqrt(2.0); }
};

// sup |h'| + |g'| on |z| <= rho
double gradient_bound(const HarmonicQuadrinomial& p, double rho) {
    double l = std::abs(p.b) * p.k * ipow(rho, p.k - 1) + 1.0;
    if (p.with_coanalytic) l += p.n * ipow(rho, p.n - 1) + std::abs(p.c) * p.m * ipow(rho, p.m - 1);
    return l;
}

// sup |h''| + |g''| on |z| <= rho
double hessian_bound(const HarmonicQuadrinomial& p, double rho) {
    auto term = [rho](double coeff, int d) {
        return d >= 2 ? std::abs(coeff) * d * (d - 1) * ipow(rho, d - 2) : 0.0;
    };
    double s = term(p.b, p.k);
    if (p.with_coanalytic) s += term(1.0, p.n) + term(p.c, p.m);
    return s;
}

struct KnownZero {
    Complex z;
    double sigma = 0.0; // smallest singular value of the real Jacobian, ||h'| - |g'||
};

// True when every point of the cell lies inside the isolation disk of some known
// zero: |q(w)| >= sigma d - M d^2 / 2 > 0 for 0 < |w - z| = d < 2 sigma / M.
bool explained(const HarmonicQuadrinomial& p, const Cell& cell, const std::vector<KnownZero>& known) {
    const double hd = cell.half_diagonal();
    for (const auto& kz : known) {
        if (kz.sigma <= 0.0) continue;
        const double reach = std::abs(cell.center() - kz.z) + hd;
        const double m = hessian_bound(p, std::abs(kz.z) + reach);
        if (m * reach < 1.8 * kz.sigma) return true;
    }
    return false;
}

struct Candidate {
    Complex z;
    double residual = 0.0;
    // first-order distance to the true zero, residual / sigma_min
    double spread = 0.0;
};

enum class CellState { Excluded, Explained, Split, Searched };

struct CellOutcome {
    CellState state = CellState::Excluded;
    std::vector<Candidate> candidates;
};

class Solver {
public:
    Solver(const HarmonicQuadrinomial& p, const SolveConfig& cfg, double search_radius)
        : p_(p), cfg_(cfg), search_radius_(search_radius),
          merge_radius_(cfg.merge_radius.value_or(1e-7 * std::max(1.0, search_radius))) {}

    std::vector<ZeroRecord> run(std::size_t& visited, std::size_t& unresolved) {
        const double half = search_radius_ * (1.0 + 1e-6);
        std::vector<Cell> level{{0.0, 0.0, half, 0, 1}};
        while (!level.empty()) {
            visited += level.size();
            const std::vector<KnownZero> snapshot = known_;
            std::vector<CellOutcome> outcomes(level.size());
            parallel_for(level.size(), cfg_.threads, [&](std::size_t i) {
                outcomes[i] = process(level[i], snapshot);
            });

            for (const auto& o : outcomes)
                for (const auto& c : o.candidates) absorb(c);

            std::vector<Cell> next;
            for (std::size_t i = 0; i < level.size(); ++i) {
                const Cell& cell = level[i];
                const CellState st = outcomes[i].state;
                if (st == CellState::Excluded || st == CellState::Explained) continue;
                if (st == CellState::Searched && explained(p_, cell, known_)) continue;
                if (cell.depth >= cfg_.max_depth) {
                    ++unresolved;
                    continue;
                }
                split(cell, next);
            }
            if (next.size() > cfg_.cell_budget) {
                unresolved += next.size();
                break;
            }
            level = std::move(next);
        }
        return finish();
    }

private:
    const HarmonicQuadrinomial& p_;
    const SolveConfig& cfg_;
    double search_radius_;
    double merge_radius_;

    struct Cluster {
        Candidate best;
        std::vector<Complex> distinct;
        double spread = 0.0;
    };
    std::vector<Cluster> clusters_;
    std::vector<KnownZero> known_;

    static void split(const Cell& c, std::vector<Cell>& out) {
        const double h = 0.5 * c.half;
        const double dx[4] = {-h, h, -h, h};
        const double dy[4] = {-h, -h, h, h};
        for (int j = 0; j < 4; ++j)
            out.push_back({c.cx + dx[j], c.cy + dy[j], h, c.depth + 1, c.id * 4 + static_cast<std::uint64_t>(j)});
    }

    bool excluded(const Cell& cell) const {
        const double r0 = std::abs(cell.center());
        const double hd = cell.half_diagonal();
        if (r0 - hd > search_radius_) return true;
        const Complex z0 = cell.center();
        const Complex q0 = evaluate(p_, z0);
        const double slack = 1e-12 * std::max(1.0, term_scale(p_, z0));
        if (std::abs(q0) - gradient_bound(p_, r0 + hd) * hd > slack) return true;

        // Linear model q0 + h' d + conj(g' d) vanishes only at the Newton offset d*;
        // on |d| <= hd it stays >= sigma_min (|d*| - hd), the Taylor remainder is
        // at most M hd^2 / 2.
        const Complex hp = analytic_derivative(p_, z0);
        const Complex gp = coanalytic_derivative(p_, z0);
        const double det = std::norm(hp) - std::norm(gp);
        if (det == 0.0) return false;
        const double sigma = std::abs(std::abs(hp) - std::abs(gp));
        const double dstar = std::abs((-q0 * std::conj(hp) + std::conj(gp) * std::conj(q0)) / det);
        const double remainder = 0.5 * hessian_bound(p_, r0 + hd) * hd * hd;
        return sigma * (dstar - hd) - remainder > slack;
    }

    CellOutcome process(const Cell& cell, const std::vector<KnownZero>& snapshot) const {
        CellOutcome out;
        if (excluded(cell)) return out;
        if (explained(p_, cell, snapshot)) {
            out.state = CellState::Explained;
            return out;
        }
        if (cell.depth < cfg_.start_depth) {
            out.state = CellState::Split;
            return out;
        }
        out.state = CellState::Searched;
        const double h = cell.half;
        std::vector<Complex> starts{cell.center(),
                                    {cell.cx - h, cell.cy - h},
                                    {cell.cx + h, cell.cy - h},
                                    {cell.cx - h, cell.cy + h},
                                    {cell.cx + h, cell.cy + h}};
        std::mt19937_64 rng(cfg_.seed ^ (cell.id * 0x9E3779B97F4A7C15ULL));
        std::uniform_real_distribution<double> u(-h, h);
        for (int s = 0; s < cfg_.extra_starts; ++s) {
            const double ox = u(rng);
            const double oy = u(rng);
            starts.emplace_back(cell.cx + ox, cell.cy + oy);
        }
        for (const Complex& s : starts)
            if (auto c = polish(s, 2.0 * cell.half_diagonal())) out.candidates.push_back(*c);
        return out;
    }

    double residual_limit(Complex z) const {
        return cfg_.accept_tol * std::max(1.0, term_scale(p_, z));
    }

    std::optional<Candidate> polish(Complex z, double max_step) const {
        const double escape = 2.0 * search_radius_ + 1.0;
        int extra = -1;
        for (int it = 0; it < cfg_.newton_iterations; ++it) {
            try {
                z = newton_step(p_, z, max_step);
            } catch (const Error&) {
                break;
            }
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z) > escape)
                return std::nullopt;
            if (extra < 0 && std::abs(evaluate(p_, z)) <= residual_limit(z)) extra = 2;
            if (extra >= 0 && extra-- == 0) break;
        }
        const double r = std::abs(evaluate(p_, z));
        if (r > residual_limit(z)) return std::nullopt;
        // near a degenerate zero sigma -> 0 and Newton creeps in linearly, leaving
        // a cloud of accepted points; the spread lets absorb() fold them together
        const double sigma = std::abs(std::abs(analytic_derivative(p_, z)) - std::abs(coanalytic_derivative(p_, z)));
        const double cap = 1e-4 * std::max(1.0, search_radius_);
        const double spread = sigma > 0.0 ? std::min(cap, r / sigma) : (r > 0.0 ? cap : 0.0);
        return Candidate{z, r, spread};
    }

    void absorb(const Candidate& c) {
        for (std::size_t i = 0; i < clusters_.size(); ++i) {
            Cluster& cl = clusters_[i];
            if (std::abs(cl.best.z - c.z) > merge_radius_ + 4.0 * (cl.spread + c.spread)) continue;
            cl.spread = std::max(cl.spread, c.spread);
            const bool fresh = std::none_of(cl.distinct.begin(), cl.distinct.end(), [&](Complex d) {
                return std::abs(d - c.z) <= 1e-3 * merge_radius_;
            });
            if (fresh) cl.distinct.push_back(c.z);
            if (c.residual < cl.best.residual) {
                cl.best = c;
                known_[i] = make_known(c.z);
            }
            return;
        }
        clusters_.push_back({c, {c.z}, c.spread});
        known_.push_back(make_known(c.z));
    }

    KnownZero make_known(Complex z) const {
        const double h = std::abs(analytic_derivative(p_, z));
        const double g = std::abs(coanalytic_derivative(p_, z));
        return {z, std::abs(h - g)};
    }

    std::vector<ZeroRecord> finish() const {
        std::vector<ZeroRecord> zeros;
        zeros.reserve(clusters_.size());
        for (const auto& cl : clusters_) {
            Complex z = cl.best.z;
            double r = cl.best.residual;
            for (int it = 0; it < 3; ++it) {
                try {
                    const Complex t = newton_step(p_, z, merge_radius_);
                    const double rt = std::abs(evaluate(p_, t));
                    if (rt >= r) break;
                    z = t;
                    r = rt;
                } catch (const Error&) {
                    break;
                }
            }
            ZeroRecord rec;
            rec.location = z;
            rec.residual = r;
            rec.jacobian = jacobian(p_, z);
            rec.orientation = classify_point(p_, z, cfg_.singular_tol);
            rec.multiplicity_hint = static_cast<int>(cl.distinct.size());
            zeros.push_back(rec);
        }
        std::sort(zeros.begin(), zeros.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
            if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
            return a.location.imag() < b.location.imag();
        });
        return zeros;
    }
};

} // namespace

ZeroSetReport find_zeros(const HarmonicQuadrinomial& p, const SolveConfig& cfg) {
    p.validate();
    cfg.validate();
    ZeroSetReport report;
    report.disk = radius_bound(p);
    if (report.disk.source == BoundSource::Unavailable)
        throw Error(ErrorKind::BoundUnavailable, "no zero-inclusion radius when k = n and |b| = 1");
    report.search_radius = std::max(report.disk.radius, majorant_radius(p));
    try {
        report.bound = count_bound(p);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::HypothesisViolation) throw;
    }

    Solver solver(p, cfg, report.search_radius);
    report.zeros = solver.run(report.cells_visited, report.unresolved_cells);
    report.count = static_cast<int>(report.zeros.size());
    for (const auto& z : report.zeros) {
        switch (z.orientation) {
        case OrientationClass::SensePreserving: ++report.n_plus; break;
        case OrientationClass::SenseReversing: ++report.n_minus; break;
        case OrientationClass::Singular: ++report.n_singular; break;
        }
    }

    if (cfg.run_winding_check) {
        try {
            const auto w = winding_number(p, Contour(Circle{{0.0, 0.0}, report.search_radius + 1.0}));
            report.winding = w.winding;
            if (report.n_singular > 0)
                report.winding_check = WindingCheck::Inconclusive;
            else
                report.winding_check = (report.n_plus - report.n_minus == w.winding)
                                           ? WindingCheck::Passed
                                           : WindingCheck::Failed;
        } catch (const Error&) {
            report.winding_check = WindingCheck::Inconclusive;
        }
    }
    return report;
}

int count_zeros(const HarmonicQuadrinomial& p, const SolveConfig& cfg) {
    return find_zeros(p, cfg).count;
}

} // namespace quadzero
