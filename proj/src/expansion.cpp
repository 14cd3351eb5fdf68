#include "loudper/expansion.hpp"

#include <cmath>
#include <utility>

#include "loudper/specfun.hpp"

namespace loudper {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Tolerance for detecting a resonant hyperbolicity ratio, applied to the
// quantity named in the slot's resonance set (lambda, 1/lambda, ...).
constexpr double kResonanceTol = 1e-9;

// Tolerance for sitting exactly on the D = -1/2 line, where the second-order
// coefficients have closed forms.
constexpr double kHalfLineTol = 1e-12;

bool near_positive_int(double x) {
    const double r = std::round(x);
    return r >= 0.5 && std::abs(x - r) <= kResonanceTol;
}

bool in_V(Parameter nu) {
    return nu.D > -1.0 && nu.D < 0.0 && nu.F > 0.0 && nu.F < 1.0;
}

bool in_W(Parameter nu) {
    return nu.F > 1.0 && nu.D < 0.0 && nu.F + nu.D > 0.0;
}

// Richardson-extrapolated limit of f(lambda) as lambda -> lambda0.  The
// symmetric average A(d) = (f(lambda0+d)+f(lambda0-d))/2 of an analytic
// combination is even in d, so two Richardson sweeps on d in {1e-3, 5e-4,
// 2.5e-4} remove the d^2 and d^4 errors.
template <class F>
double resonant_limit(F&& f, double lambda0) {
    double A[3];
    for (int i = 0; i < 3; ++i) {
        const double d = 1e-3 / static_cast<double>(1 << i);
        A[i] = 0.5 * (f(lambda0 + d) + f(lambda0 - d));
    }
    const double r10 = (4.0 * A[1] - A[0]) / 3.0;
    const double r11 = (4.0 * A[2] - A[1]) / 3.0;
    return (16.0 * r11 - r10) / 15.0;
}

// ---- V-chart raw formulas (no absence handling; also used inside limits) --

double g1_lambda(double F) { return F / (1.0 - F); }

double g1_rho1(Parameter nu) {
    const double lam = g1_lambda(nu.F);
    const double ratio = nu.D / (nu.F - 1.0);
    if (!(ratio > 0.0))
        throw DomainError("gamma1 coefficients: D/(F-1) must be positive");
    return std::sqrt(kPi) / (2.0 * (1.0 - nu.F)) *
           std::pow(nu.F / (nu.D + 1.0), 0.5 * (lam + 1.0)) *
           std::pow(ratio, 0.5 * lam);
}

double g1_rho2(Parameter nu) {
    return std::sqrt(kPi) /
           (2.0 * std::sqrt(nu.F * (nu.D + 1.0) * (nu.D + 1.0) * (nu.D + 1.0)));
}

double g1_T00(Parameter nu) {
    return kPi / (2.0 * std::sqrt(nu.F * (nu.D + 1.0)));
}

double g1_T01(Parameter nu) {
    const double lam = g1_lambda(nu.F);
    return g1_rho1(nu) * specfun::gamma(-0.5 * lam) *
           specfun::recip_gamma(0.5 * (1.0 - lam));
}

double g1_T10(Parameter nu) {
    const double lam = g1_lambda(nu.F);
    const double q = 0.5 / lam;
    return g1_rho2(nu) * (2.0 * nu.D + 1.0) * specfun::gamma(1.0 - q) *
           specfun::recip_gamma(1.5 - q);
}

// Valid on the half line D = -1/2 only.
double g1_T20_half_line(double F) {
    const double q = 1.0 / g1_lambda(F);
    return std::sqrt(kPi / (2.0 * F)) * specfun::gamma(0.5 - q) *
           specfun::recip_gamma(1.0 - q);
}

// ---- W-chart raw formulas ------------------------------------------------

double g2_T00(const HyperbolaGeometry& g) {
    return std::sqrt(2.0) / (std::sqrt(g.a) * (1.0 - g.p1)) *
           specfun::hyp2f1(1.0, 0.5, 1.5, g.z);
}

double g2_rho1(const HyperbolaGeometry& g, double F) {
    return std::pow(g.p2 - g.p1, g.lambda) /
           (2.0 * std::sqrt(2.0 * g.a) * (F - 1.0) *
            std::pow(1.0 - g.p1, F / (F - 1.0)));
}

double g2_rho2(const HyperbolaGeometry& g) {
    return 1.0 /
           (2.0 * std::sqrt(2.0 * g.a) * (g.p2 - g.p1) * (1.0 - g.p1));
}

double g2_rho3(const HyperbolaGeometry& g) {
    return 3.0 / (8.0 * std::sqrt(2.0 * g.a) * (g.p2 - g.p1) * (g.p2 - g.p1) *
                  (1.0 - g.p1));
}

double g2_rho4(const HyperbolaGeometry& g, double F) {
    return (g.p1 - 1.0 + 2.0 * F * (g.p2 - g.p1)) /
           ((g.p2 - g.p1) * (g.p1 - 1.0));
}

double g2_T01(const HyperbolaGeometry& g, double F) {
    return g2_rho1(g, F) * specfun::beta(-g.lambda, 0.5);
}

double g2_T10(const HyperbolaGeometry& g) {
    const double q = 1.0 / g.lambda;
    return g2_rho2(g) *
           specfun::beta_times_hyp2f1(1.0 - q, -0.5, -1.0 - q, -0.5, g.z);
}

double g2_T20(const HyperbolaGeometry& g, double F) {
    const double q = 2.0 / g.lambda;
    return g2_rho3(g) *
               specfun::beta_times_hyp2f1(1.0 - q, -1.5, -q - 3.0, -1.5, g.z) +
           g2_rho4(g, F) * g2_T10(g);
}

// Parameter on the W-chart resonance unfolding: fixed D, F chosen so the
// hyperbolicity ratio equals lam.
HyperbolaGeometry g2_geom_at(double D, double lam) {
    return hyperbola_params({D, 1.0 + 0.5 / lam});
}

} // namespace

// ---- Coeff ----------------------------------------------------------------

Coeff Coeff::present(double v) {
    Coeff c;
    c.status_ = CoeffStatus::Present;
    c.value_ = v;
    return c;
}

Coeff Coeff::resonant_pole(std::string note) {
    Coeff c;
    c.status_ = CoeffStatus::ResonantPole;
    c.note_ = std::move(note);
    return c;
}

Coeff Coeff::unspecified(std::string note) {
    Coeff c;
    c.status_ = CoeffStatus::Unspecified;
    c.note_ = std::move(note);
    return c;
}

double Coeff::value() const {
    switch (status_) {
    case CoeffStatus::Present:
        return value_;
    case CoeffStatus::ResonantPole:
        throw PoleError("coefficient degenerates at this resonance: " + note_);
    case CoeffStatus::Unspecified:
        throw DomainError("coefficient has no closed form here: " + note_);
    case CoeffStatus::NotComputed:
    default:
        throw DomainError(
            "coefficient slot was not produced by this operation");
    }
}

std::optional<double> Coeff::maybe() const {
    if (status_ == CoeffStatus::Present) return value_;
    return std::nullopt;
}

// ---- Terms and models -------------------------------------------------------

double term_value(const ExpansionTerm& term, double s) {
    if (!(s > 0.0)) throw DomainError("term_value: requires s > 0");
    double v = term.coeff * std::pow(s, term.exponent);
    if (term.comp_power == 1) v *= specfun::compensator(s, term.comp_alpha);
    return v;
}

const char* to_string(CaseLabel label) {
    switch (label) {
    case CaseLabel::G1a: return "G1a";
    case CaseLabel::G1b: return "G1b";
    case CaseLabel::G1c: return "G1c";
    case CaseLabel::G1d: return "G1d";
    case CaseLabel::G2a: return "G2a";
    case CaseLabel::G2b: return "G2b";
    case CaseLabel::G2c: return "G2c";
    case CaseLabel::G2d: return "G2d";
    case CaseLabel::G3: return "G3";
    }
    return "?";
}

double eval_model(const ExpansionModel& model, double s_phys) {
    if (!(s_phys > 0.0)) throw DomainError("eval_model: requires s > 0");
    double acc = 0.0;
    for (const ExpansionTerm& t : model.terms) acc += term_value(t, s_phys);
    return acc;
}

// ---- V chart ----------------------------------------------------------------

CoeffSet gamma1_coeffs(Parameter nu) {
    if (!in_V(nu))
        throw DomainError("gamma1_coeffs: parameter outside (-1,0) x (0,1)");
    const double lam = g1_lambda(nu.F);
    CoeffSet cs;
    cs.T00 = Coeff::present(g1_T00(nu));
    cs.rho.rho1 = g1_rho1(nu);
    cs.rho.rho2 = g1_rho2(nu);

    if (near_positive_int(lam)) {
        cs.T01 = Coeff::resonant_pole(
            "T01 degenerates when lambda is a positive integer");
    } else {
        cs.T01 = Coeff::present(g1_T01(nu));
    }

    if (near_positive_int(0.5 / lam)) {
        cs.T10 = Coeff::resonant_pole(
            "T10 degenerates when 1/(2 lambda) is a positive integer");
    } else {
        cs.T10 = Coeff::present(g1_T10(nu));
    }

    if (near_positive_int(2.0 / lam)) {
        cs.T20 = Coeff::resonant_pole(
            "T20 degenerates when 2/lambda is a positive integer");
    } else if (std::abs(nu.D + 0.5) <= kHalfLineTol) {
        cs.T20 = Coeff::present(g1_T20_half_line(nu.F));
    } else {
        cs.T20 = Coeff::unspecified(
            "T20 has a closed form only on the line D = -1/2");
    }
    return cs;
}

CoeffSet gamma1_resonance_coeffs(Parameter nu, Gamma1Resonance which) {
    if (!in_V(nu))
        throw DomainError(
            "gamma1_resonance_coeffs: parameter outside (-1,0) x (0,1)");
    CoeffSet cs;

    if (which == Gamma1Resonance::lambda1) {
        if (std::abs(nu.F - 0.5) > 0.1)
            throw DomainError(
                "gamma1_resonance_coeffs: lambda1 case needs |F - 1/2| <= 0.1");
        const double lam = g1_lambda(nu.F);
        const double rho1 = g1_rho1(nu);
        const double rho2 = g1_rho2(nu);
        // Stable rewrite of the pair prefactor: the raw quotient
        // Gamma(-lambda/2) / ((lambda-1) Gamma((1-lambda)/2)) has a 0/0 at
        // lambda = 1; absorbing (lambda-1) into the Gamma via
        // (lambda-1) Gamma((1-lambda)/2) = -2 Gamma((3-lambda)/2) gives a
        // form regular through the segment.
        const double rho4 = -2.0 * rho1 * specfun::gamma(-0.5 * lam) *
                            specfun::recip_gamma(0.5 * (3.0 - lam)) /
                            ((nu.F - 1.0) * (nu.F - 1.0));
        const double q = 0.5 / lam;
        const double rho5 = 2.0 * rho2 * specfun::gamma(1.0 - q) *
                            specfun::recip_gamma(1.5 - q);
        const double rho6 = 0.5 * (1.0 - nu.F) * rho4;
        cs.rho.rho1 = rho1;
        cs.rho.rho2 = rho2;
        cs.rho.rho4 = rho4;
        cs.rho.rho5 = rho5;
        cs.rho.rho6 = rho6;
        const double dF = nu.F - 0.5;
        cs.T101_1 = Coeff::present(-rho4 * dF * dF);
        cs.T100_1 = Coeff::present(rho5 * (nu.D + 0.5) + rho6 * dF);
        return cs;
    }

    // lambda2
    if (std::abs(nu.F - 2.0 / 3.0) > 0.06)
        throw DomainError(
            "gamma1_resonance_coeffs: lambda2 case needs |F - 2/3| <= 0.06");
    const double lam = g1_lambda(nu.F);
    const double D = nu.D;
    const bool on_segment = std::abs(lam - 2.0) <= kResonanceTol;
    const auto T01_at = [D](double l) {
        return g1_T01({D, l / (1.0 + l)});
    };

    if (on_segment) {
        cs.T201_2 = Coeff::present(resonant_limit(
            [&](double l) { return (2.0 - l) * T01_at(l); }, 2.0));
    } else {
        cs.T201_2 = Coeff::present((2.0 - lam) * g1_T01(nu));
    }

    if (std::abs(D + 0.5) <= kHalfLineTol) {
        if (on_segment) {
            cs.T200_2 = Coeff::present(resonant_limit(
                [&](double l) {
                    return g1_T20_half_line(l / (1.0 + l)) + T01_at(l);
                },
                2.0));
        } else {
            cs.T200_2 = Coeff::present(g1_T20_half_line(nu.F) + g1_T01(nu));
        }
    } else {
        cs.T200_2 = Coeff::unspecified(
            "T200_2 needs the T20 closed form, available only at D = -1/2");
    }
    return cs;
}

// ---- W chart ----------------------------------------------------------------

CoeffSet gamma2_coeffs(Parameter nu) {
    const HyperbolaGeometry g = hyperbola_params(nu); // validates W membership
    const double lam = g.lambda;
    CoeffSet cs;
    cs.T00 = Coeff::present(g2_T00(g));
    cs.rho.rho1 = g2_rho1(g, nu.F);
    cs.rho.rho2 = g2_rho2(g);
    cs.rho.rho3 = g2_rho3(g);
    cs.rho.rho4 = g2_rho4(g, nu.F);

    if (near_positive_int(lam)) {
        cs.T01 = Coeff::resonant_pole(
            "T01 degenerates when lambda is a positive integer");
    } else {
        cs.T01 = Coeff::present(g2_T01(g, nu.F));
    }

    if (near_positive_int(1.0 / lam)) {
        cs.T10 = Coeff::resonant_pole(
            "T10 degenerates when 1/lambda is a positive integer");
    } else {
        cs.T10 = Coeff::present(g2_T10(g));
    }

    if (near_positive_int(2.0 / lam)) {
        cs.T20 = Coeff::resonant_pole(
            "T20 degenerates when 2/lambda is a positive integer");
    } else {
        cs.T20 = Coeff::present(g2_T20(g, nu.F));
    }
    return cs;
}

CoeffSet gamma2_resonance_coeffs(Parameter nu, Gamma2Resonance which) {
    CoeffSet cs;
    const double D = nu.D;

    if (which == Gamma2Resonance::lambda2) {
        if (std::abs(nu.F - 1.25) > 0.08)
            throw DomainError(
                "gamma2_resonance_coeffs: lambda2 case needs |F - 5/4| <= 0.08");
        const HyperbolaGeometry g = hyperbola_params(nu);
        const double lam = g.lambda;
        if (std::abs(lam - 2.0) <= kResonanceTol) {
            cs.T201_2 = Coeff::present(resonant_limit(
                [&](double l) {
                    return (2.0 - l) * g2_T01(g2_geom_at(D, l), 1.0 + 0.5 / l);
                },
                2.0));
            cs.T200_2 = Coeff::present(resonant_limit(
                [&](double l) {
                    const double F = 1.0 + 0.5 / l;
                    const HyperbolaGeometry gg = g2_geom_at(D, l);
                    return g2_T20(gg, F) + g2_T01(gg, F);
                },
                2.0));
        } else {
            cs.T201_2 = Coeff::present((2.0 - lam) * g2_T01(g, nu.F));
            cs.T200_2 = Coeff::present(g2_T20(g, nu.F) + g2_T01(g, nu.F));
        }
        return cs;
    }

    // lambda_half
    if (std::abs(nu.F - 2.0) > 0.1)
        throw DomainError(
            "gamma2_resonance_coeffs: lambda_half case needs |F - 2| <= 0.1");
    const HyperbolaGeometry g = hyperbola_params(nu);
    if (std::abs(g.lambda - 0.5) <= kResonanceTol) {
        cs.T101_half = Coeff::present(
            0.75 * g2_rho2(g) * specfun::hyp2f1(-3.0, -0.5, -1.5, g.z));
    } else {
        cs.T101_half = Coeff::present(resonant_limit(
            [&](double l) {
                return (2.0 * l - 1.0) * g2_T10(g2_geom_at(D, l));
            },
            0.5));
    }
    cs.T100_half = Coeff::unspecified(
        "T100_half has no closed form (its companion coefficient of "
        "s^{2 lambda} is not available)");
    return cs;
}

// ---- Saddle-node segment ------------------------------------------------------

CoeffSet gamma3_coeffs(double D) {
    if (!(D > -1.0 && D < 0.0))
        throw DomainError("gamma3_coeffs: requires D in (-1,0)");
    CoeffSet cs;
    cs.T00 = Coeff::present(kPi / (2.0 * std::sqrt(D + 1.0)));
    cs.T10 = Coeff::present((2.0 * D + 1.0) /
                            ((1.0 + D) * std::sqrt(1.0 + D)));
    if (std::abs(D + 0.5) <= kHalfLineTol) {
        cs.T20 = Coeff::present(kPi / std::sqrt(2.0));
    } else {
        cs.T20 = Coeff::unspecified(
            "T20 has a closed form only on the line D = -1/2");
    }
    return cs;
}

// ---- Model assembly -------------------------------------------------------------

namespace {

ExpansionTerm power_term(double exponent, double coeff) {
    return {exponent, 0, 0.0, coeff};
}

ExpansionTerm comp_term(double exponent, double alpha, double coeff) {
    return {exponent, 1, alpha, coeff};
}

void push_if_present(ExpansionModel& m, const Coeff& c, ExpansionTerm t) {
    if (c.has_value()) {
        t.coeff = c.value();
        m.terms.push_back(t);
    }
}

} // namespace

ExpansionModel build_model(Parameter nu) {
    if (!std::isfinite(nu.D) || !std::isfinite(nu.F))
        throw UnsupportedCaseError("build_model: parameter must be finite");

    if (nu.F == 1.0) {
        if (!(nu.D > -1.0 && nu.D < 0.0))
            throw UnsupportedCaseError(
                "build_model: the F = 1 segment needs D in (-1,0)");
        const CoeffSet cs = gamma3_coeffs(nu.D);
        ExpansionModel m;
        m.chart = Chart::Gamma3;
        m.case_label = CaseLabel::G3;
        m.flatness = 2.0;
        m.terms.push_back(power_term(0.0, cs.T00.value()));
        m.terms.push_back(power_term(1.0, cs.T10.value()));
        push_if_present(m, cs.T20, power_term(2.0, 0.0));
        return m;
    }

    if (nu.F < 1.0) {
        if (!in_V(nu))
            throw UnsupportedCaseError(
                "build_model: parameter outside the supported charts");
        const double lam = g1_lambda(nu.F);
        ExpansionModel m;
        m.chart = Chart::Gamma1;

        if (std::abs(lam - 1.0) <= kResonanceTol) { // F = 1/2
            const CoeffSet base = gamma1_coeffs(nu);
            const CoeffSet res =
                gamma1_resonance_coeffs(nu, Gamma1Resonance::lambda1);
            m.case_label = CaseLabel::G1d;
            m.flatness = 2.0;
            m.terms.push_back(power_term(0.0, base.T00.value()));
            m.terms.push_back(comp_term(1.0, 1.0 - lam, res.T101_1.value()));
            m.terms.push_back(power_term(1.0, res.T100_1.value()));
            return m;
        }
        if (std::abs(lam - 2.0) <= kResonanceTol) { // F = 2/3
            const CoeffSet base = gamma1_coeffs(nu);
            const CoeffSet res =
                gamma1_resonance_coeffs(nu, Gamma1Resonance::lambda2);
            m.case_label = CaseLabel::G1c;
            m.flatness = 3.0;
            m.terms.push_back(power_term(0.0, base.T00.value()));
            m.terms.push_back(power_term(1.0, base.T10.value()));
            m.terms.push_back(comp_term(2.0, 2.0 - lam, res.T201_2.value()));
            push_if_present(m, res.T200_2, power_term(2.0, 0.0));
            return m;
        }
        if (lam > 2.0) { // F in (2/3,1)
            const CoeffSet cs = gamma1_coeffs(nu);
            m.case_label = CaseLabel::G1a;
            m.flatness = std::min(3.0, lam);
            m.terms.push_back(power_term(0.0, cs.T00.value()));
            m.terms.push_back(power_term(1.0, cs.T10.value()));
            push_if_present(m, cs.T20, power_term(2.0, 0.0));
            return m;
        }
        if (lam > 1.0) { // F in (1/2,2/3)
            const CoeffSet cs = gamma1_coeffs(nu);
            m.case_label = CaseLabel::G1b;
            m.flatness = 2.0;
            m.terms.push_back(power_term(0.0, cs.T00.value()));
            m.terms.push_back(power_term(1.0, cs.T10.value()));
            m.terms.push_back(power_term(lam, cs.T01.value()));
            return m;
        }
        throw UnsupportedCaseError(
            "build_model: F below 1/2 is not covered");
    }

    // F > 1
    if (!in_W(nu))
        throw UnsupportedCaseError(
            "build_model: parameter outside the supported charts");
    const double lam = 1.0 / (2.0 * (nu.F - 1.0));
    ExpansionModel m;
    m.chart = Chart::Gamma2;

    if (std::abs(lam - 2.0) <= kResonanceTol) { // F = 5/4
        const CoeffSet base = gamma2_coeffs(nu);
        const CoeffSet res =
            gamma2_resonance_coeffs(nu, Gamma2Resonance::lambda2);
        m.case_label = CaseLabel::G2c;
        m.flatness = 3.0;
        m.terms.push_back(power_term(0.0, base.T00.value()));
        m.terms.push_back(power_term(1.0, base.T10.value()));
        m.terms.push_back(comp_term(2.0, 2.0 - lam, res.T201_2.value()));
        m.terms.push_back(power_term(2.0, res.T200_2.value()));
        return m;
    }
    if (std::abs(lam - 0.5) <= kResonanceTol) { // F = 2
        const CoeffSet base = gamma2_coeffs(nu);
        const CoeffSet res =
            gamma2_resonance_coeffs(nu, Gamma2Resonance::lambda_half);
        m.case_label = CaseLabel::G2d;
        m.flatness = 1.5;
        m.terms.push_back(power_term(0.0, base.T00.value()));
        m.terms.push_back(power_term(lam, base.T01.value()));
        m.terms.push_back(comp_term(1.0, 1.0 - 2.0 * lam,
                                    res.T101_half.value()));
        // The plain s^1 partner (T100_half) has no closed form and is left to
        // the remainder; the stated flatness keeps the compensator pair's L.
        return m;
    }
    if (std::abs(lam - 1.0) <= kResonanceTol)
        throw UnsupportedCaseError(
            "build_model: the F = 3/2 resonance is not covered");
    if (lam > 2.0) { // F in (1,5/4)
        const CoeffSet cs = gamma2_coeffs(nu);
        m.case_label = CaseLabel::G2a;
        m.flatness = std::min(3.0, lam);
        m.terms.push_back(power_term(0.0, cs.T00.value()));
        m.terms.push_back(power_term(1.0, cs.T10.value()));
        m.terms.push_back(power_term(2.0, cs.T20.value()));
        return m;
    }
    if (lam > 1.0) { // F in (5/4,3/2)
        const CoeffSet cs = gamma2_coeffs(nu);
        m.case_label = CaseLabel::G2b;
        m.flatness = lam + 1.0;
        m.terms.push_back(power_term(0.0, cs.T00.value()));
        m.terms.push_back(power_term(1.0, cs.T10.value()));
        m.terms.push_back(power_term(lam, cs.T01.value()));
        m.terms.push_back(power_term(2.0, cs.T20.value()));
        return m;
    }
    throw UnsupportedCaseError(
        "build_model: F in [3/2,2) apart from resonances, and F above 2, "
        "are not covered");
}

} // namespace loudper
