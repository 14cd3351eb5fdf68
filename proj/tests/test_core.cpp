#include <cmath>
#include <random>

#include "doctest.h"
#include "loudper/core.hpp"
#include "oracle_constants.hpp"

using namespace loudper;

TEST_CASE("classify_region tags and precedence") {
    CHECK(classify_region({-0.5, 0.75}) == RegionTag::V_gamma1);
    CHECK(classify_region({-1.2, 1.33}) == RegionTag::W_gamma2);
    CHECK(classify_region({-0.5, 1.0}) == RegionTag::F_equals_1);
    CHECK(classify_region({0.5, 3.0}) == RegionTag::Other);
    CHECK(classify_region({-2.0, 0.5}) == RegionTag::Other);

    // The four isochronous centers take precedence.
    CHECK(classify_region({0.0, 1.0}) == RegionTag::Isochrone);
    CHECK(classify_region({-0.5, 2.0}) == RegionTag::Isochrone);
    CHECK(classify_region({-0.5, 0.5}) == RegionTag::Isochrone);
    CHECK(classify_region({0.0, 0.25}) == RegionTag::Isochrone);

    // Exact matching by default; tolerance opt-in for scanned grids.
    CHECK(classify_region({-0.5 + 1e-12, 2.0}) == RegionTag::W_gamma2);
    CHECK(classify_region({-0.5 + 1e-12, 2.0}, 1e-9) == RegionTag::Isochrone);

    // Total on junk input.
    CHECK(classify_region({std::nan(""), 1.0}) == RegionTag::Other);
    CHECK(classify_region({0.0, INFINITY}) == RegionTag::Other);
}

TEST_CASE("hyperbola_params on reference parameters") {
    const HyperbolaGeometry g = hyperbola_params({-0.5, 2.0});
    CHECK(g.a == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(g.b == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(g.c == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(g.p1 == doctest::Approx(1.0 - std::sqrt(0.5)).epsilon(1e-13));
    CHECK(g.p2 == doctest::Approx(1.0 + std::sqrt(0.5)).epsilon(1e-13));
    CHECK(g.z == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(g.lambda == doctest::Approx(0.5).epsilon(1e-14));

    const HyperbolaGeometry h = hyperbola_params({-1.2, 4.0 / 3.0});
    CHECK(h.p1 == doctest::Approx(oracle::kConicP1_m12_43).epsilon(1e-13));
    CHECK(h.p2 == doctest::Approx(oracle::kConicP2_m12_43).epsilon(1e-13));
    CHECK(h.lambda == doctest::Approx(1.5).epsilon(1e-12));

    CHECK_THROWS_AS(hyperbola_params({-0.5, 0.8}), DomainError);
    CHECK_THROWS_AS(hyperbola_params({0.5, 2.0}), DomainError);
    CHECK_THROWS_AS(hyperbola_params({-3.0, 2.0}), DomainError);
}

TEST_CASE("sampled W geometry invariants") {
    std::mt19937 rng(31337);
    std::uniform_real_distribution<double> uf(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double F = 1.0 + 5.0 * uf(rng) + 1e-3;
        const double D = -F * (0.999 * uf(rng) + 5e-4); // in (-F, 0)
        const HyperbolaGeometry g = hyperbola_params({D, F});
        CHECK(g.p1 < g.p2);
        CHECK(g.z < 1.0);
        CHECK(0.0 < g.p1);
        if (D > -1.0) {
            // q(1) = -(D+1)/(2F) < 0 exactly when D > -1, so the roots
            // straddle 1 on that side of W only.
            CHECK(g.p1 < 1.0);
            CHECK(g.p2 > 1.0);
        }
        const double anchor = annulus_anchor({D, F});
        const double q = (g.a * anchor + g.b) * anchor + g.c;
        const double scale = std::abs(g.a * anchor * anchor) +
                             std::abs(g.b * anchor) + std::abs(g.c);
        CHECK(std::abs(q) <= 1e-12 * std::max(1.0, scale));
        CHECK(anchor == g.p1);
    }
}

TEST_CASE("hyperbolicity_ratio per chart") {
    CHECK(hyperbolicity_ratio({-0.5, 2.0}, Chart::Gamma2) ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(hyperbolicity_ratio({-0.5, 2.0 / 3.0}, Chart::Gamma1) ==
          doctest::Approx(2.0).epsilon(1e-14));
    CHECK(hyperbolicity_ratio({-1.2, 4.0 / 3.0}, Chart::Gamma2) ==
          doctest::Approx(1.5).epsilon(1e-14));
    CHECK_THROWS_AS(hyperbolicity_ratio({-0.5, 1.0}, Chart::Gamma1),
                    DomainError);
    CHECK_THROWS_AS(hyperbolicity_ratio({-0.5, 1.0}, Chart::Gamma2),
                    DomainError);
    CHECK_THROWS_AS(hyperbolicity_ratio({-0.5, 0.8}, Chart::Gamma2),
                    DomainError);

    // Strictly decreasing in F on (1, infinity).
    double prev = hyperbolicity_ratio({-0.5, 1.01}, Chart::Gamma2);
    for (double F = 1.06; F < 8.0; F += 0.05) {
        const double cur = hyperbolicity_ratio({-0.5, F}, Chart::Gamma2);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("annulus_anchor across chart closures") {
    CHECK(annulus_anchor({-0.5, 0.75}) == 1.0);
    CHECK(annulus_anchor({-0.5, 1.0}) == 1.0);  // F = 1 segment
    // Isochronous D = 0 points: the separating level crosses at 1/(2F),
    // capped by the invariant line (exact linear-equation closure in y^2).
    CHECK(annulus_anchor({0.0, 1.0}) == 0.5);
    CHECK(annulus_anchor({0.0, 0.25}) == 1.0);
    CHECK(annulus_anchor({0.0, 0.75}) == doctest::Approx(2.0 / 3.0));
    CHECK(annulus_anchor({-0.5, 0.5}) == 1.0);
    CHECK(annulus_anchor({-0.5, 2.0}) ==
          doctest::Approx(1.0 - std::sqrt(0.5)).epsilon(1e-13));
    // D = 0 with F > 1: the conic degenerates to a parabola with a single
    // finite root.
    CHECK(annulus_anchor({0.0, 3.0}) == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
    CHECK_THROWS_AS(annulus_anchor({0.5, 3.0}), DomainError);
    CHECK_THROWS_AS(annulus_anchor({-1.5, 1.2}), DomainError); // F+D < 0
    CHECK_THROWS_AS(annulus_anchor({-1.5, 0.5}), DomainError); // D <= -1
    CHECK_THROWS_AS(annulus_anchor({-0.5, -0.2}), DomainError);
}
