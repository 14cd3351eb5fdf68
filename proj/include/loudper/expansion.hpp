#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loudper/core.hpp"
#include "loudper/errors.hpp"

// Closed-form coefficients of the asymptotic expansion of the half-period
// time T(s;nu) at s = 0 (s = physical distance from the annulus anchor along
// the positive x-axis), for parameters near the three boundary charts, plus
// assembly and evaluation of the resulting expansion models.
//
// Coefficient naming: T_ij multiplies s^i * omega(s;alpha)^j, where omega is
// the compensator deformation of the logarithm.  At a resonant hyperbolicity
// ratio lambda0 the colliding monomials are replaced by a compensator pair;
// those case coefficients carry the resonance as a suffix (T201_2, T200_2 for
// lambda0 = 2; T101_1, T100_1 for lambda0 = 1; T101_half, T100_half for
// lambda0 = 1/2).
namespace loudper {

// One monomial  coeff * s^e * omega(s;comp_alpha)^k  of an expansion.
struct ExpansionTerm {
    double exponent = 0.0;   // e >= 0
    int comp_power = 0;      // k in {0,1}
    double comp_alpha = 0.0; // only meaningful when comp_power == 1
    double coeff = 0.0;
};

// Value of one term at s > 0.
double term_value(const ExpansionTerm& term, double s);

enum class CaseLabel { G1a, G1b, G1c, G1d, G2a, G2b, G2c, G2d, G3 };

const char* to_string(CaseLabel label);

// Truncated expansion of T(s;nu): sum of `terms` with remainder o(s^{L-u})
// for every small u > 0.  Terms are sorted dominant-first as s -> 0+ (the
// compensator member of a pair precedes its plain-power partner).
struct ExpansionModel {
    std::vector<ExpansionTerm> terms;
    double flatness = 0.0; // L
    Chart chart = Chart::Gamma1;
    CaseLabel case_label = CaseLabel::G1a;
};

// Sum of term values at physical offset s_phys > 0 (DomainError otherwise).
double eval_model(const ExpansionModel& model, double s_phys);

// Why a coefficient slot carries no value.
enum class CoeffStatus {
    Present,       // finite value available
    ResonantPole,  // the closed form degenerates at this hyperbolicity ratio
    Unspecified,   // no closed form exists for this coefficient here
    NotComputed,   // slot not produced by the operation that built the set
};

// A coefficient value or a tagged absence.  The strict accessor value()
// throws PoleError for ResonantPole (caller must switch to the matching
// resonance case) and DomainError for the other absent states.
class Coeff {
  public:
    Coeff() = default;
    static Coeff present(double v);
    static Coeff resonant_pole(std::string note);
    static Coeff unspecified(std::string note);

    bool has_value() const noexcept { return status_ == CoeffStatus::Present; }
    CoeffStatus status() const noexcept { return status_; }
    double value() const;
    std::optional<double> maybe() const;
    const std::string& note() const noexcept { return note_; }

  private:
    CoeffStatus status_ = CoeffStatus::NotComputed;
    double value_ = 0.0;
    std::string note_;
};

// The rho prefactors with closed forms that entered a coefficient set
// (indices follow the coefficient formulas of the owning chart).
struct RhoRecord {
    std::optional<double> rho1, rho2, rho3, rho4, rho5, rho6;
};

// Coefficients of the expansion at one parameter value.  Operations fill the
// slots they are responsible for; the rest stay NotComputed.
struct CoeffSet {
    Coeff T00, T01, T10, T20;
    Coeff T201_2, T200_2;       // lambda0 = 2 compensator pair
    Coeff T101_1, T100_1;       // lambda0 = 1 compensator pair
    Coeff T101_half, T100_half; // lambda0 = 1/2 compensator pair
    RhoRecord rho;
};

// ---- Gamma1 chart: nu in V = (-1,0) x (0,1), lambda = F/(1-F) ----
//
// T00 = pi/(2 sqrt(F(D+1)))
// T01 = rho1 * Gamma(-lambda/2)/Gamma((1-lambda)/2),
//       rho1 = (sqrt(pi)/(2(1-F))) (F/(D+1))^{(lambda+1)/2} (D/(F-1))^{lambda/2}
// T10 = rho2 (2D+1) Gamma(1-1/(2 lambda))/Gamma(3/2-1/(2 lambda)),
//       rho2 = sqrt(pi)/(2 sqrt(F(D+1)^3))
// T20 = sqrt(pi/(2F)) Gamma(1/2-1/lambda)/Gamma(1-1/lambda)  at D = -1/2 only
//       (off D = -1/2 it gains an analytic multiple of (2D+1) with no closed
//       form: reported Unspecified).
// Resonances (slot becomes ResonantPole): lambda in N for T01, 1/(2 lambda)
// in N for T10, 2/lambda in N for T20.
// Throws DomainError outside V.
CoeffSet gamma1_coeffs(Parameter nu);

enum class Gamma1Resonance {
    lambda2, // lambda0 = 2 (F near 2/3): fills T201_2, T200_2
    lambda1, // lambda0 = 1 (F near 1/2): fills T101_1, T100_1
};

// Compensator-case coefficients near the two resonant segments of the V
// chart.
//   lambda1: T101_1 = -rho4 (F-1/2)^2, T100_1 = rho5 (D+1/2) + rho6 (F-1/2)
//     with rho4 = -2 rho1 Gamma(-lambda/2) / ((F-1)^2 Gamma((3-lambda)/2)),
//     rho5 = 2 rho2 Gamma(1-1/(2 lambda))/Gamma(3/2-1/(2 lambda)),
//     rho6 = (1-F)/2 * rho4.   Requires |F - 1/2| <= 0.1.
//   lambda2: T201_2 = (2-lambda) T01 and T200_2 = T20 + T01, evaluated
//     directly off the segment and as Richardson-extrapolated lambda -> 2
//     limits on it; T200_2 needs the T20 closed form, so it is Unspecified
//     off D = -1/2.   Requires |F - 2/3| <= 0.06 (keeps the neighbouring
//     integer resonances of T01 out of range).
// Throws DomainError outside V or outside the stated neighbourhoods.
CoeffSet gamma1_resonance_coeffs(Parameter nu, Gamma1Resonance which);

// ---- Gamma2 chart: nu in W = {F+D>0, D<0, F>1}, lambda = 1/(2(F-1)) ----
//
// With q(x) = a(x-p1)(x-p2), z = (1-p2)/(1-p1) from hyperbola_params:
// T00 = sqrt(2)/(sqrt(a)(1-p1)) 2F1(1,1/2;3/2;z)
// T01 = rho1 B(-lambda,1/2)
// T10 = rho2 B(1-1/lambda,-1/2) 2F1(-1-1/lambda,-1/2;1/2-1/lambda;z)
// T20 = rho3 B(1-2/lambda,-3/2) 2F1(-2/lambda-3,-3/2;-1/2-2/lambda;z)
//       + rho4 T10
// rho1 = (p2-p1)^{lambda} / (2 sqrt(2a) (F-1) (1-p1)^{F/(F-1)})
// rho2 = 1/(2 sqrt(2a) (p2-p1) (1-p1))
// rho3 = 3/(8 sqrt(2a) (p2-p1)^2 (1-p1))
// rho4 = (p1-1+2F(p2-p1)) / ((p2-p1)(p1-1))
// The Beta-times-2F1 products are evaluated in regularized form, so integer
// c = B-sum arguments (e.g. lambda = 2 for T10) stay finite.
// Resonances: lambda in N for T01, 1/lambda in N for T10, 2/lambda in N for
// T20.  Throws DomainError outside W (DegenerateError if the conic
// discriminant is not safely positive).
CoeffSet gamma2_coeffs(Parameter nu);

enum class Gamma2Resonance {
    lambda2,     // lambda0 = 2 (F near 5/4): fills T201_2, T200_2
    lambda_half, // lambda0 = 1/2 (F near 2): fills T101_half, T100_half
};

// Compensator-case coefficients near the two resonant segments of the W
// chart.
//   lambda2: T201_2 = (2-lambda) T01, T200_2 = T20 + T01 (closed forms exist
//     for every D here), as direct off-segment values or Richardson limits
//     on the segment.  Requires |F - 5/4| <= 0.08.
//   lambda_half: T101_half = -lim (1-2 lambda) T10; on the segment F = 2 the
//     limit has the closed form (3/4) rho2 2F1(-3,-1/2;-3/2;z), off it the
//     Richardson limit at the given D is returned.  T100_half has no closed
//     form (its companion T02 is not available) and is always Unspecified.
//     Requires |F - 2| <= 0.1.
// Throws DomainError outside W or outside the stated neighbourhoods.
CoeffSet gamma2_resonance_coeffs(Parameter nu, Gamma2Resonance which);

// ---- Gamma3 chart: the saddle-node segment F = 1, D in (-1,0) ----
//
// T(s) = T0 + T1 s + T2 s^2 + o(s^2) with the slots stored as T00, T10, T20:
// T00 = pi/(2 sqrt(D+1))   (continuity limit of the V-chart head coefficient)
// T10 = (2D+1)/(1+D)^{3/2}
// T20 = pi/sqrt(2) at D = -1/2 only, Unspecified elsewhere.
// Throws DomainError for D outside (-1,0).
CoeffSet gamma3_coeffs(double D);

// Assemble the truncated expansion model for nu, choosing the case by chart
// and hyperbolicity ratio (resonances detected within 1e-9 of lambda0):
//   G1a  F in (2/3,1): [T00, T10 s, T20 s^2], L = min(3,lambda)
//   G1b  F in (1/2,2/3): [T00, T10 s, T01 s^lambda], L = 2
//   G1c  F = 2/3: [T00, T10 s, T201_2 s^2 w, T200_2 s^2], L = 3
//   G1d  F = 1/2: [T00, T101_1 s w, T100_1 s], L = 2
//   G2a  F in (1,5/4): [T00, T10 s, T20 s^2], L = min(3,lambda)
//   G2b  F in (5/4,3/2): [T00, T10 s, T01 s^lambda, T20 s^2], L = lambda+1
//   G2c  F = 5/4: [T00, T10 s, T201_2 s^2 w, T200_2 s^2], L = 3
//   G2d  F = 2: [T00, T01 s^lambda, T101_half s w, T100_half s], L = 3/2
//   G3   F = 1: [T00, T10 s, T20 s^2], L = 2
// (w = the compensator with the case's alpha.)  Terms whose coefficient is
// absent (Unspecified) are omitted from `terms`; the case's flatness L is
// kept as stated.  Throws UnsupportedCaseError for parameters outside the
// covered charts/case ranges (F in (0,1/2) on the V side; F = 3/2,
// F in (3/2,2) and F > 2 on the W side; anything outside the three charts).
ExpansionModel build_model(Parameter nu);

} // namespace loudper
