#include "loudper/flow.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "loudper/errors.hpp"

namespace loudper::flow {

namespace {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// x' = -y (1 - x),  y' = x + D x^2 + F y^2
struct Field {
    double D, F;
    Vec2 operator()(const Vec2& u) const {
        return {-u.y * (1.0 - u.x), u.x + D * u.x * u.x + F * u.y * u.y};
    }
};

// Dormand-Prince 5(4) tableau.
constexpr double kC2 = 1.0 / 5.0, kC3 = 3.0 / 10.0, kC4 = 4.0 / 5.0,
                 kC5 = 8.0 / 9.0;
constexpr double kA21 = 1.0 / 5.0;
constexpr double kA31 = 3.0 / 40.0, kA32 = 9.0 / 40.0;
constexpr double kA41 = 44.0 / 45.0, kA42 = -56.0 / 15.0, kA43 = 32.0 / 9.0;
constexpr double kA51 = 19372.0 / 6561.0, kA52 = -25360.0 / 2187.0,
                 kA53 = 64448.0 / 6561.0, kA54 = -212.0 / 729.0;
constexpr double kA61 = 9017.0 / 3168.0, kA62 = -355.0 / 33.0,
                 kA63 = 46732.0 / 5247.0, kA64 = 49.0 / 176.0,
                 kA65 = -5103.0 / 18656.0;
constexpr double kA71 = 35.0 / 384.0, kA73 = 500.0 / 1113.0,
                 kA74 = 125.0 / 192.0, kA75 = -2187.0 / 6784.0,
                 kA76 = 11.0 / 84.0;
// Difference between the 5th- and 4th-order weights (error estimator).
constexpr double kE1 = 71.0 / 57600.0, kE3 = -71.0 / 16695.0,
                 kE4 = 71.0 / 1920.0, kE5 = -17253.0 / 339200.0,
                 kE6 = 22.0 / 525.0, kE7 = -1.0 / 40.0;
// Weights of the quartic continuous extension.
constexpr double kD1 = -12715105075.0 / 11282082432.0,
                 kD3 = 87487479700.0 / 32700410799.0,
                 kD4 = -10690763975.0 / 1880347072.0,
                 kD5 = 701980252875.0 / 199316789632.0,
                 kD6 = -1453857185.0 / 822651844.0,
                 kD7 = 69997945.0 / 29380423.0;

struct DenseStep {
    // Per component: u(t + theta h) =
    //   c1 + theta (c2 + (1-theta)(c3 + theta (c4 + (1-theta) c5)))
    Vec2 c1, c2, c3, c4, c5;
    Vec2 eval(double theta) const {
        const double om = 1.0 - theta;
        return {c1.x + theta * (c2.x + om * (c3.x + theta * (c4.x + om * c5.x))),
                c1.y + theta * (c2.y + om * (c3.y + theta * (c4.y + om * c5.y)))};
    }
};

struct IntegrationStats {
    long steps = 0;
    double error_sum = 0.0; // sum of |scaled local error| * h over accepted steps
};

// Integrates from u0 (on y=0, departing upward) until y next crosses zero
// downward; returns the crossing time.
double integrate_to_return(const Field& f, Vec2 u0, const IntegratorConfig& cfg,
                           IntegrationStats& stats) {
    double t = 0.0;
    double h = 1e-3;
    Vec2 u = u0;
    Vec2 k1 = f(u);
    double err_prev = 1.0;
    long attempts = 0;
    // 0: waiting for y to become positive; 1: armed for the downward crossing.
    int phase = 0;

    while (true) {
        if (++attempts > cfg.max_steps)
            throw StepLimitError("integrate_to_return: step limit " +
                                 std::to_string(cfg.max_steps) +
                                 " exceeded at t=" + std::to_string(t));
        if (!(h > 1e-300))
            throw ConvergenceError("integrate_to_return: step size underflow");

        const Vec2 k2 = f({u.x + h * kA21 * k1.x, u.y + h * kA21 * k1.y});
        const Vec2 k3 = f({u.x + h * (kA31 * k1.x + kA32 * k2.x),
                           u.y + h * (kA31 * k1.y + kA32 * k2.y)});
        const Vec2 k4 = f({u.x + h * (kA41 * k1.x + kA42 * k2.x + kA43 * k3.x),
                           u.y + h * (kA41 * k1.y + kA42 * k2.y + kA43 * k3.y)});
        const Vec2 k5 =
            f({u.x + h * (kA51 * k1.x + kA52 * k2.x + kA53 * k3.x + kA54 * k4.x),
               u.y + h * (kA51 * k1.y + kA52 * k2.y + kA53 * k3.y + kA54 * k4.y)});
        const Vec2 k6 = f({u.x + h * (kA61 * k1.x + kA62 * k2.x + kA63 * k3.x +
                                      kA64 * k4.x + kA65 * k5.x),
                           u.y + h * (kA61 * k1.y + kA62 * k2.y + kA63 * k3.y +
                                      kA64 * k4.y + kA65 * k5.y)});
        const Vec2 u1 = {u.x + h * (kA71 * k1.x + kA73 * k3.x + kA74 * k4.x +
                                    kA75 * k5.x + kA76 * k6.x),
                         u.y + h * (kA71 * k1.y + kA73 * k3.y + kA74 * k4.y +
                                    kA75 * k5.y + kA76 * k6.y)};
        const Vec2 k7 = f(u1); // FSAL: 7th stage is the derivative at u1

        const double ex = h * (kE1 * k1.x + kE3 * k3.x + kE4 * k4.x +
                               kE5 * k5.x + kE6 * k6.x + kE7 * k7.x);
        const double ey = h * (kE1 * k1.y + kE3 * k3.y + kE4 * k4.y +
                               kE5 * k5.y + kE6 * k6.y + kE7 * k7.y);
        const double skx =
            cfg.abs_tol + cfg.rel_tol * std::max(std::abs(u.x), std::abs(u1.x));
        const double sky =
            cfg.abs_tol + cfg.rel_tol * std::max(std::abs(u.y), std::abs(u1.y));
        const double err = std::sqrt(
            0.5 * ((ex / skx) * (ex / skx) + (ey / sky) * (ey / sky)));

        if (!(err <= 1.0)) {
            // Rejected (a NaN error estimate lands here as well).
            const double fac =
                std::isfinite(err) ? 0.9 * std::pow(err, -0.2) : 0.2;
            h *= std::clamp(fac, 0.2, 1.0);
            continue;
        }
        {
            // Accepted step.
            if (++stats.steps > cfg.max_steps)
                throw StepLimitError("integrate_to_return: accepted-step limit "
                                     "exceeded");
            stats.error_sum += std::sqrt(ex * ex + ey * ey);

            if (phase == 0 && u1.y > 0.0) phase = 1;
            if (phase == 1 && u1.y <= 0.0) {
                // Crossing inside this step: localize on the dense output.
                DenseStep dense;
                dense.c1 = u;
                dense.c2 = {u1.x - u.x, u1.y - u.y};
                dense.c3 = {h * k1.x - dense.c2.x, h * k1.y - dense.c2.y};
                dense.c4 = {dense.c2.x - h * k7.x - dense.c3.x,
                            dense.c2.y - h * k7.y - dense.c3.y};
                dense.c5 = {h * (kD1 * k1.x + kD3 * k3.x + kD4 * k4.x +
                                 kD5 * k5.x + kD6 * k6.x + kD7 * k7.x),
                            h * (kD1 * k1.y + kD3 * k3.y + kD4 * k4.y +
                                 kD5 * k5.y + kD6 * k6.y + kD7 * k7.y)};
                double lo = 0.0, hi = 1.0;
                double theta = 1.0;
                for (int it = 0; it < 200; ++it) {
                    theta = 0.5 * (lo + hi);
                    const double ym = dense.eval(theta).y;
                    if (std::abs(ym) < cfg.event_tol) break;
                    if (ym > 0.0)
                        lo = theta;
                    else
                        hi = theta;
                    if (hi - lo < 1e-16) break;
                }
                const Vec2 uc = dense.eval(theta);
                if (f(uc).y < 0.0) return t + theta * h;
                // Grazing touch without a transversal crossing: keep going
                // and wait for y to become positive again.
                phase = 0;
            }

            t += h;
            u = u1;
            k1 = k7;
            if (std::abs(u.x) > cfg.bound || std::abs(u.y) > cfg.bound)
                throw EscapeError("integrate_to_return: trajectory escaped the "
                                  "|x|,|y| <= " +
                                  std::to_string(cfg.bound) + " box");

            double fac = std::pow(std::max(err, 1e-20), -0.7 / 5.0) *
                         std::pow(err_prev, 0.4 / 5.0);
            fac = std::clamp(0.9 * fac, 0.2, 5.0);
            h *= fac;
            err_prev = std::max(err, 1e-4);
        }
    }
}

double half_period_impl(double s_norm, Parameter nu, const IntegratorConfig& cfg,
                        IntegrationStats& stats) {
    if (!(s_norm > cfg.s_floor) || !(s_norm < 1.0))
        throw DomainError("half_period: normalized offset " +
                          std::to_string(s_norm) + " outside (" +
                          std::to_string(cfg.s_floor) + ", 1)");
    const double xi = annulus_anchor(nu);
    const double x0 = (1.0 - s_norm) * xi;
    const Field f{nu.D, nu.F};
    // Departure is upward: y' = x0 (1 + D x0) > 0 on the section segment.
    return integrate_to_return(f, {x0, 0.0}, cfg, stats);
}

} // namespace

double half_period(double s, Parameter nu, const IntegratorConfig& cfg) {
    IntegrationStats stats;
    return half_period_impl(s, nu, cfg, stats);
}

double half_period_physical(double s_phys, Parameter nu,
                            const IntegratorConfig& cfg) {
    const double xi = annulus_anchor(nu);
    IntegrationStats stats;
    return half_period_impl(s_phys / xi, nu, cfg, stats);
}

PeriodSample period_derivatives(double s_phys, Parameter nu,
                                const IntegratorConfig& cfg) {
    const double xi = annulus_anchor(nu);
    const double h = std::max(1e-6, 1e-3 * s_phys);
    if (!(s_phys - h > cfg.s_floor * xi) || !(s_phys + h < xi))
        throw DomainError("period_derivatives: offset " +
                          std::to_string(s_phys) +
                          " too close to the domain ends for step " +
                          std::to_string(h));

    // Difference quotients divide by h and h^2, so the period evaluations
    // run at sharpened tolerances to keep integration noise subdominant.
    IntegratorConfig tight = cfg;
    tight.rel_tol = std::min(cfg.rel_tol, 1e-12);
    tight.abs_tol = std::min(cfg.abs_tol, 1e-13);

    IntegrationStats stats;
    const auto period_at = [&](double sp) {
        return 2.0 * half_period_impl(sp / xi, nu, tight, stats);
    };
    const double f0 = period_at(s_phys);
    const double fp = period_at(s_phys + h);
    const double fm = period_at(s_phys - h);
    const double fp2 = period_at(s_phys + 0.5 * h);
    const double fm2 = period_at(s_phys - 0.5 * h);

    const double d_h = (fp - fm) / (2.0 * h);
    const double d_h2 = (fp2 - fm2) / h;
    const double s_h = (fp - 2.0 * f0 + fm) / (h * h);
    const double s_h2 = 4.0 * (fp2 - 2.0 * f0 + fm2) / (h * h);

    PeriodSample out;
    out.s = s_phys / xi;
    out.P = f0;
    out.P1 = (4.0 * d_h2 - d_h) / 3.0;
    out.P2 = (4.0 * s_h2 - s_h) / 3.0;
    out.diagnostics.steps = stats.steps;
    out.diagnostics.error_estimate = stats.error_sum;
    out.diagnostics.err_P1 = std::abs(d_h2 - d_h) / 3.0;
    out.diagnostics.err_P2 = std::abs(s_h2 - s_h) / 3.0;
    return out;
}

} // namespace loudper::flow
