#pragma once

#include "loudper/core.hpp"

// Numerical integration of the vector field with section-crossing event
// detection: the period P(s;nu) = 2 T(s;nu) and its first two derivatives.
namespace loudper::flow {

struct IntegratorConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    long max_steps = 10'000'000;
    double event_tol = 1e-12; // |y| tolerance at the section crossing
    // Escape-box half width in |x|, |y|.  Near the outer boundary the
    // annulus is unbounded and orbits legitimately swing out to
    // |x|,|y| ~ s^(-lambda) (about 5e10 at s = 1e-4 for lambda = 3), so the
    // default must sit far above every legitimate excursion while still
    // catching true blowups well before overflow.
    double bound = 1e14;
    double s_floor = 1e-4;    // minimum normalized offset from the boundary
};

struct PeriodSample {
    double s = 0.0;  // normalized section coordinate in (0,1)
    double P = 0.0;  // full period (time units), always > 0
    double P1 = 0.0; // dP/ds_phys
    double P2 = 0.0; // d2P/ds_phys2
    struct Diagnostics {
        long steps = 0;             // accepted integrator steps, all runs
        double error_estimate = 0;  // accumulated local-error heuristic
        double err_P1 = 0;          // Richardson error estimate for P1
        double err_P2 = 0;          // Richardson error estimate for P2
    } diagnostics;
};

// Half period of the orbit through ((1-s) xi, 0) with xi = annulus_anchor:
// time from the upward departure off y=0 to the next downward crossing.
// The full period is exactly twice this by reversibility in y -> -y.
// s is the normalized offset: s -> 0 approaches the outer boundary, s -> 1
// the center.  Throws DomainError outside (s_floor, 1), EscapeError if the
// trajectory leaves the box, StepLimitError past max_steps.
double half_period(double s, Parameter nu, const IntegratorConfig& cfg = {});

// Same, parametrized by the physical offset from the anchor along the
// x-axis (start point (xi - s_phys, 0)); coefficient formulas use this s.
double half_period_physical(double s_phys, Parameter nu,
                            const IntegratorConfig& cfg = {});

// P = 2T and derivatives with respect to s_phys by Richardson-extrapolated
// central differences with step h = max(1e-6, 1e-3 s_phys); the five
// period evaluations run at sharpened tolerances so the difference
// quotients stay above the integration noise.
PeriodSample period_derivatives(double s_phys, Parameter nu,
                                const IntegratorConfig& cfg = {});

} // namespace loudper::flow
