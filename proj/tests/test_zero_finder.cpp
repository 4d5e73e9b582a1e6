#include "quadzero/error.hpp"
#include "quadzero/zero_finder.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <numbers>
#include <random>

using namespace quadzero;

namespace {

const auto kCubicConj = HarmonicQuadrinomial::make(0.0, 0.0, 1, 3, 1);

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::InvalidArgument;
}

int sign_sum(const ZeroSetReport& r) { return r.n_plus - r.n_minus; }

} // namespace

TEST_CASE("real_system") {
    CHECK(real_system(kCubicConj, 0.0) == std::pair{0.0, 0.0});
    CHECK(real_system(kCubicConj, 1.0) == std::pair{2.0, 0.0});
    const auto [x, y] = real_system(HarmonicQuadrinomial::make(1, 1, 2, 2, 1), Complex(0.0, 1.0));
    CHECK(x == doctest::Approx(-2.0));
    CHECK(std::abs(y) < 1e-15);
}

TEST_CASE("newton_step") {
    SUBCASE("near the origin") {
        Complex z{0.1, 0.1};
        int steps = 0;
        while (std::abs(evaluate(kCubicConj, z)) >= 1e-14 && steps < 6) {
            z = newton_step(kCubicConj, z, 1.0);
            ++steps;
        }
        CHECK(steps <= 6);
        CHECK(std::abs(z) < 1e-14);
    }
    SUBCASE("near a unimodular zero") {
        const Complex target = std::polar(1.0, std::numbers::pi / 4.0);
        Complex z = 0.9 * target;
        for (int i = 0; i < 20; ++i) z = newton_step(kCubicConj, z, 1.0);
        CHECK(std::abs(z - target) < 1e-13);
    }
    SUBCASE("step is clamped") {
        const Complex z{0.3, 0.0};
        CHECK(std::abs(newton_step(kCubicConj, z, 1e-3) - z) <= 1e-3 * (1 + 1e-12));
    }
    SUBCASE("singular start") {
        const double rs = 1.0 / std::sqrt(3.0);
        CHECK(kind_of([&] { newton_step(kCubicConj, rs, 1.0); }) == ErrorKind::DegenerateJacobian);
        CHECK(kind_of([&] { newton_step(kCubicConj, std::polar(rs, 1.0), 1.0); }) == ErrorKind::DegenerateJacobian);
    }
}

TEST_CASE("find_zeros: closed form for conj(z)^3 + z") {
    const ZeroSetReport r = find_zeros(kCubicConj);
    REQUIRE(r.count == 5);
    CHECK(r.zeros.size() == 5);
    CHECK(r.n_plus == 1);
    CHECK(r.n_minus == 4);
    CHECK(r.n_singular == 0);
    CHECK(r.winding_check == WindingCheck::Passed);
    REQUIRE(r.winding.has_value());
    CHECK(*r.winding == -3);
    CHECK(r.unresolved_cells == 0);
    std::vector<Complex> expect{0.0};
    for (int j = 0; j < 4; ++j) expect.push_back(std::polar(1.0, (2 * j + 1) * std::numbers::pi / 4.0));
    for (Complex e : expect) {
        const bool found = std::any_of(r.zeros.begin(), r.zeros.end(),
                                       [&](const ZeroRecord& z) { return std::abs(z.location - e) < 1e-10; });
        CHECK(found);
    }
}

TEST_CASE("find_zeros: small perturbation of the b = 0 family") {
    const ZeroSetReport r = find_zeros(HarmonicQuadrinomial::make(0.0, 0.1, 1, 3, 1));
    CHECK(r.count >= 3);
    CHECK(r.count <= 7);
    CHECK(sign_sum(r) == -3);
    CHECK(r.winding_check == WindingCheck::Passed);
    const auto brute = oracle::brute_force_zeros({0.0, 0.1, 1, 3, 1}, r.search_radius);
    CHECK(int(brute.zeros.size()) == r.count);
}

TEST_CASE("find_zeros: b = 2, c = 3, k = 4, n = 3, m = 1") {
    const ZeroSetReport r = find_zeros(HarmonicQuadrinomial::make(2.0, 3.0, 4, 3, 1));
    CHECK(r.count >= 4);
    CHECK(r.count <= 16);
    CHECK(sign_sum(r) == 4);
    CHECK(r.winding_check == WindingCheck::Passed);
    REQUIRE(r.bound.has_value());
    CHECK(r.bound->upper == 16);
    for (const auto& z : r.zeros) CHECK(std::abs(z.location) <= r.disk.radius + 1e-9);
    const auto brute = oracle::brute_force_zeros({2.0, 3.0, 4, 3, 1}, r.search_radius);
    CHECK(int(brute.zeros.size()) == r.count);
    // regression value, confirmed by the brute-force oracle above
    CHECK(r.count == 6);
}

TEST_CASE("count_zeros") {
    CHECK(count_zeros(kCubicConj) == 5);
    CHECK(count_zeros(HarmonicQuadrinomial::make(0.0, 0.0, 1, 5, 1)) == 7);
    // q = 2 Re(z^2 + z) vanishes on a whole curve; no inclusion disk exists
    CHECK(kind_of([] { count_zeros(HarmonicQuadrinomial::make(1, 1, 2, 2, 1)); }) == ErrorKind::BoundUnavailable);
}

TEST_CASE("config validation") {
    SolveConfig bad;
    bad.accept_tol = 0.0;
    CHECK(kind_of([&] { find_zeros(kCubicConj, bad); }) == ErrorKind::InvalidArgument);
    SolveConfig neg;
    neg.merge_radius = -1.0;
    CHECK(kind_of([&] { find_zeros(kCubicConj, neg); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("report properties over random instances") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> mag(0.1, 4.0);
    for (int i = 0; i < 40; ++i) {
        const int k = 1 + int(rng() % 6);
        const int n = 2 + int(rng() % 3);
        const int m = 1 + int(rng() % (n - 1));
        const double b = (i % 3 == 0) ? 0.0 : (rng() & 1 ? 1 : -1) * mag(rng);
        const double c = (rng() & 1 ? 1 : -1) * mag(rng);
        const auto p = HarmonicQuadrinomial::make(b, c, k, n, m);
        if (radius_bound(p).source == BoundSource::Unavailable) continue;
        SolveConfig cfg;
        const ZeroSetReport r = find_zeros(p, cfg);
        CAPTURE(b);
        CAPTURE(c);
        CAPTURE(k);
        CAPTURE(n);
        CAPTURE(m);
        CHECK(r.count == int(r.zeros.size()));
        CHECK(r.n_plus + r.n_minus + r.n_singular == r.count);

        const double merge = 1e-7 * std::max(1.0, r.search_radius);
        bool origin = false;
        for (const auto& z : r.zeros) {
            if (std::abs(z.location) <= merge) origin = true;
            CHECK(std::abs(evaluate(p, z.location)) <= cfg.accept_tol * std::max(1.0, term_scale(p, z.location)));
            CHECK(z.residual == std::abs(evaluate(p, z.location)));
            CHECK(classify_point(p, z.location, cfg.singular_tol) == z.orientation);
            const bool mirrored = std::any_of(r.zeros.begin(), r.zeros.end(), [&](const ZeroRecord& w) {
                return std::abs(w.location - std::conj(z.location)) <= merge;
            });
            CHECK(mirrored);
        }
        CHECK(origin);
        if (r.n_singular == 0 && r.winding) CHECK(sign_sum(r) == *r.winding);
    }
}

TEST_CASE("reports do not depend on the thread count") {
    for (const auto& p : {HarmonicQuadrinomial::make(2.0, 3.0, 4, 3, 1), HarmonicQuadrinomial::make(-0.2684, 1.0195, 3, 2, 1),
                          HarmonicQuadrinomial::make(3.7, -2.2, 7, 6, 3)}) {
        SolveConfig one;
        SolveConfig four;
        four.threads = 4;
        const auto a = find_zeros(p, one);
        const auto b = find_zeros(p, four);
        REQUIRE(a.count == b.count);
        CHECK(a.cells_visited == b.cells_visited);
        for (std::size_t i = 0; i < a.zeros.size(); ++i) {
            CHECK(a.zeros[i].location == b.zeros[i].location);
            CHECK(a.zeros[i].residual == b.zeros[i].residual);
        }
    }
}
