#pragma once

#include "loudper/errors.hpp"

// Parameter handling, region classification, and the conic geometry that
// every other module consumes.
namespace loudper {

// Parameter pair nu = (D,F) of the quadratic center family
//   -y(1-x) d/dx + (x + D x^2 + F y^2) d/dy,
// which has a center at the origin for every (D,F).
struct Parameter {
    double D = 0.0;
    double F = 0.0;
};

// Mutually exclusive parameter-plane tags; Isochrone takes precedence over
// the set-based tags.
enum class RegionTag {
    V_gamma1,   // D in (-1,0), F in (0,1)
    W_gamma2,   // F+D > 0, D < 0, F > 1
    F_equals_1, // D in (-1,0), F = 1
    Isochrone,  // one of (0,1), (-1/2,2), (-1/2,1/2), (0,1/4)
    Other       // catch-all
};

const char* to_string(RegionTag tag);

// Which boundary chart an expansion is taken in.
enum class Chart { Gamma1, Gamma2, Gamma3 };

const char* to_string(Chart chart);

// Invariant conic data for the W chart: q(x) = a x^2 + b x + c has two real
// roots 0 < p1 < 1 < p2 there; the period annulus reaches x = p1.
struct HyperbolaGeometry {
    double a = 0.0, b = 0.0, c = 0.0; // coefficients of q
    double p1 = 0.0, p2 = 0.0;        // roots, p1 < p2
    double z = 0.0;                   // (1 - p2)/(1 - p1), argument of 2F1
    double lambda = 0.0;              // 1/(2(F-1)), saddle hyperbolicity ratio
};

// Classify nu.  Isochrone detection is exact equality on the four rational
// points by default; pass a positive tolerance to classify scanned grids.
// Total: non-finite or unrecognized input maps to Other.
RegionTag classify_region(Parameter nu, double isochrone_tol = 0.0);

// Conic coefficients and roots for nu in W (F>1, D<0, F+D>0).
// Throws DomainError outside W, DegenerateError if the discriminant is not
// safely positive.
HyperbolaGeometry hyperbola_params(Parameter nu);

// F/(1-F) in the Gamma1 chart (F != 1), 1/(2(F-1)) in the Gamma2 chart
// (F > 1).  Throws DomainError when the chart does not apply.
double hyperbolicity_ratio(Parameter nu, Chart chart);

// x-coordinate where the outer boundary of the period annulus meets the
// positive x-axis: 1 when F <= 1 (with D in (-1,0]), the smallest positive
// root of q when F > 1 (with D <= 0 < F+D).  Defined on the closures of the
// charts, including the four isochrones and the D = 0 edge, where the conic
// degenerates to a parabola.  Throws DomainError elsewhere.
double annulus_anchor(Parameter nu);

} // namespace loudper
