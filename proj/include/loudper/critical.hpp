#pragma once

#include "loudper/core.hpp"
#include "loudper/expansion.hpp"
#include "loudper/flow.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

// Critical-period detection (isolated zeros of P'), tracing of the
// bifurcation curve D = G(F) where the s-coefficient of the outer-chart
// expansion vanishes, location of the double-criticality parameter, the
// isochrone checks, and least-squares recovery of expansion coefficients
// from integrated periods.
namespace loudper::critical {

// One detected critical period: a refined bracket [lo, hi] around the
// zero of P', with s its midpoint.  multiplicity 1 means a confirmed sign
// change of P'; multiplicity 2 is a *candidate* double root: a sign change
// of P'' whose P' value at the crossing is below 10x the derivative error
// estimate (finite differences cannot certify exact multiplicity).
struct CriticalRoot {
    double s = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    int multiplicity = 1;
};

struct RootReport {
    std::vector<CriticalRoot> roots; // sorted ascending, brackets disjoint
    double s_lo = 0.0;               // scanned range (normalized s)
    double s_hi = 0.0;
    int grid = 0;                    // number of cells in the scan grid
    // Max |dP/ds_phys| over the grid points that integrated successfully;
    // at an isochrone this sits at the finite-difference noise floor.
    double max_abs_dP = 0.0;
    // Cells whose endpoint derivatives change sign but are too close to
    // their own error estimates to confirm a root (e.g. everywhere on an
    // isochrone, where P' == 0 identically and only noise remains).
    std::vector<std::pair<double, double>> unresolved;
    // Grid points whose integration failed, with the error message; the
    // adjoining cells are skipped, not fatal.
    std::vector<std::pair<double, std::string>> failures;
};

// Scan P'(s) on a geometric grid of `grid` cells over [s_lo, s_hi]
// (normalized s, 0 < s_lo < s_hi < 1) and classify every cell: confirmed
// sign changes are refined by bisection to bracket width < 1e-8; cells
// without a sign change of P' but with one of P'' are probed as double-root
// candidates.  Integrator failures are recorded per grid point.
RootReport find_critical_periods(Parameter nu, double s_lo, double s_hi,
                                 int grid,
                                 const flow::IntegratorConfig& cfg = {});

// A point of the bifurcation curve D = G(F).
struct CurvePoint {
    double F = 0.0;
    double D = 0.0;        // G(F), inside (-F, -1/2)
    double residual = 0.0; // |T10| of the outer-chart expansion at (D, F)
};

// Solve for the unique D in (-F, -1/2) where the s-coefficient of the
// outer-chart expansion vanishes, i.e. the zero of the regularized
// hypergeometric factor 2F1(-1-1/lam, -1/2; 1/2-1/lam; z(D,F)) / Gamma(c).
// The regularized form stays smooth at F = 5/4 where the raw quotient hits
// a Gamma pole.  F must lie in (1, 3/2).  Bisection to machine width; the
// post-condition |T10| < tol is checked.  Throws BracketError (with the
// endpoint values in the message) if the endpoint signs agree.
CurvePoint solve_G(double F, double tol = 1e-8);

// The double-criticality parameter (G(4/3), 4/3): both the s- and the
// s^lambda-coefficients of the outer-chart expansion vanish there.  F = 4/3
// is exact: the s^lambda coefficient carries Beta(-lambda, 1/2), which
// vanishes exactly at lambda = 3/2 in the reciprocal-Gamma convention.
Parameter locate_nu_star();

// Max over a 50-point uniform s-grid in [0.02, 0.95] of |P(s) - 2 pi| at
// one of the four isochronous parameters (0,1), (-1/2,2), (-1/2,1/2),
// (0,1/4).  Throws NotIsochroneError for any other parameter.
double verify_isochrone(Parameter nu, const flow::IntegratorConfig& cfg = {});

struct FitResult {
    std::vector<double> coefficients; // one per term of the shape, in order
    double residual_norm = 0.0;       // l2 norm of the fit residual
    double condition = 0.0;           // singular-value ratio of the basis
};

// Linear least squares for the coefficients of `shape` from integrated
// half periods on `s_grid` (physical offsets): design matrix columns are
// the term basis functions s^e omega(s; alpha)^k, solved by column-pivoted
// QR; the condition number comes from the SVD.  Throws IllConditionedError
// when the condition number exceeds 1e10 (e.g. a degenerate grid).
FitResult fit_coefficients(Parameter nu, const ExpansionModel& shape,
                           const std::vector<double>& s_grid,
                           const flow::IntegratorConfig& cfg = {});

inline constexpr std::uint64_t kDefaultProbeSeed = 0x5eed'2026ULL;

// Lower-bound witness for the number of critical periods appearing near
// nu0: the max over `samples` uniform draws nu from the ball
// |nu - nu0| <= delta of the count of confirmed critical periods in
// (0, s0) (normalized s).  This is only ever a lower bound for the
// criticality of the deformation -- upper bounds are theorem content, not
// computable from finitely many samples.  Draws that leave the supported
// charts are skipped; the default seed makes runs reproducible.
int criticality_probe(Parameter nu0, double delta, double s0, int samples,
                      std::uint64_t seed = kDefaultProbeSeed, int grid = 32);

} // namespace loudper::critical
