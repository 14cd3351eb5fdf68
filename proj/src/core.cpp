#include "loudper/core.hpp"

#include <algorithm>
#include <cmath>

namespace loudper {

namespace {

bool is_isochrone(Parameter nu, double tol) {
    const double pts[4][2] = {
        {0.0, 1.0}, {-0.5, 2.0}, {-0.5, 0.5}, {0.0, 0.25}};
    for (const auto& p : pts) {
        if (tol == 0.0) {
            if (nu.D == p[0] && nu.F == p[1]) return true;
        } else if (std::abs(nu.D - p[0]) <= tol &&
                   std::abs(nu.F - p[1]) <= tol) {
            return true;
        }
    }
    return false;
}

struct Conic {
    double a, b, c;
};

// q(x) = a x^2 + b x + c whose zero level  y^2/2 = q(x)  is invariant for
// the vector field when F > 1 (or more generally F not in {1/2, 1}).
Conic conic_coeffs(Parameter nu) {
    const double D = nu.D;
    const double F = nu.F;
    const double a = D / (2.0 * (1.0 - F));
    const double b = (D - F + 1.0) / ((1.0 - F) * (1.0 - 2.0 * F));
    const double c =
        (F - D - 1.0) / (2.0 * F * (1.0 - F) * (1.0 - 2.0 * F));
    return {a, b, c};
}

// Numerically stable roots of a quadratic with positive discriminant,
// polished by one Newton step each.
void stable_roots(double a, double b, double c, double& r1, double& r2) {
    const double disc = b * b - 4.0 * a * c;
    const double sq = std::sqrt(disc);
    const double qq = -0.5 * (b + std::copysign(sq, b));
    r1 = qq / a;
    r2 = c / qq;
    if (r1 > r2) std::swap(r1, r2);
    for (double* r : {&r1, &r2}) {
        const double der = 2.0 * a * (*r) + b;
        if (der != 0.0) *r -= ((a * (*r) + b) * (*r) + c) / der;
    }
}

} // namespace

const char* to_string(RegionTag tag) {
    switch (tag) {
        case RegionTag::V_gamma1: return "V_gamma1";
        case RegionTag::W_gamma2: return "W_gamma2";
        case RegionTag::F_equals_1: return "F_equals_1";
        case RegionTag::Isochrone: return "Isochrone";
        case RegionTag::Other: return "Other";
    }
    return "Other";
}

const char* to_string(Chart chart) {
    switch (chart) {
        case Chart::Gamma1: return "Gamma1";
        case Chart::Gamma2: return "Gamma2";
        case Chart::Gamma3: return "Gamma3";
    }
    return "Gamma1";
}

RegionTag classify_region(Parameter nu, double isochrone_tol) {
    if (!std::isfinite(nu.D) || !std::isfinite(nu.F)) return RegionTag::Other;
    if (is_isochrone(nu, isochrone_tol)) return RegionTag::Isochrone;
    if (nu.D > -1.0 && nu.D < 0.0 && nu.F > 0.0 && nu.F < 1.0)
        return RegionTag::V_gamma1;
    if (nu.F + nu.D > 0.0 && nu.D < 0.0 && nu.F > 1.0)
        return RegionTag::W_gamma2;
    if (nu.F == 1.0 && nu.D > -1.0 && nu.D < 0.0) return RegionTag::F_equals_1;
    return RegionTag::Other;
}

HyperbolaGeometry hyperbola_params(Parameter nu) {
    if (!(nu.F > 1.0 && nu.D < 0.0 && nu.F + nu.D > 0.0))
        throw DomainError("hyperbola_params: parameter outside W");
    const Conic q = conic_coeffs(nu);
    const double disc = q.b * q.b - 4.0 * q.a * q.c;
    if (!(disc > 0.0) ||
        std::abs(disc) < 1e-14 * std::max(1.0, q.b * q.b))
        throw DegenerateError(
            "hyperbola_params: conic discriminant not safely positive");
    HyperbolaGeometry g;
    g.a = q.a;
    g.b = q.b;
    g.c = q.c;
    stable_roots(q.a, q.b, q.c, g.p1, g.p2);
    g.z = (1.0 - g.p2) / (1.0 - g.p1);
    g.lambda = 1.0 / (2.0 * (nu.F - 1.0));
    return g;
}

double hyperbolicity_ratio(Parameter nu, Chart chart) {
    switch (chart) {
        case Chart::Gamma1:
            if (nu.F == 1.0)
                throw DomainError("hyperbolicity_ratio: pole at F = 1");
            return nu.F / (1.0 - nu.F);
        case Chart::Gamma2:
            if (!(nu.F > 1.0))
                throw DomainError("hyperbolicity_ratio: Gamma2 needs F > 1");
            return 1.0 / (2.0 * (nu.F - 1.0));
        case Chart::Gamma3:
            throw DomainError(
                "hyperbolicity_ratio: no ratio attached to the F = 1 chart");
    }
    throw DomainError("hyperbolicity_ratio: unknown chart");
}

double annulus_anchor(Parameter nu) {
    if (!std::isfinite(nu.D) || !std::isfinite(nu.F))
        throw DomainError("annulus_anchor: non-finite parameter");
    if (nu.D == 0.0) {
        // D = 0 edge: y^2 as a function of x solves a first-order linear
        // equation in closed form, and the separating level crosses the
        // positive axis at 1/(2F); the invariant line x = 1 caps it.
        if (!(nu.F > 0.0))
            throw DomainError("annulus_anchor: parameter outside the charts");
        return std::min(1.0, 1.0 / (2.0 * nu.F));
    }
    if (nu.F <= 1.0) {
        // Closure of the F <= 1 charts (includes the isochrones with F <= 1
        // and the segment F = 1): boundary meets the axis at x = 1.
        if (nu.D > -1.0 && nu.D < 0.0 && nu.F > 0.0) return 1.0;
        throw DomainError("annulus_anchor: parameter outside the charts");
    }
    // F > 1: the hyperbola chart, boundary crossing at the smaller conic root.
    if (!(nu.D < 0.0 && nu.F + nu.D > 0.0))
        throw DomainError("annulus_anchor: parameter outside the charts");
    return hyperbola_params(nu).p1;
}

} // namespace loudper
