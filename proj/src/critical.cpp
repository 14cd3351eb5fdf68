#include "loudper/critical.hpp"

#include "loudper/specfun.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <limits>
#include <random>

namespace loudper::critical {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

template <class... Args>
std::string fmt(const char* pattern, Args... args) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), pattern, args...);
    return buf;
}

// Derivative sample at normalized s, or nullopt with the failure recorded.
std::optional<flow::PeriodSample> try_sample(
    double s_norm, double xi, Parameter nu, const flow::IntegratorConfig& cfg,
    std::vector<std::pair<double, std::string>>& failures) {
    try {
        return flow::period_derivatives(s_norm * xi, nu, cfg);
    } catch (const Error& e) {
        failures.emplace_back(s_norm, e.what());
        return std::nullopt;
    }
}

// 10x the finite-difference error estimate, floored away from zero so an
// estimate of exactly 0 never promotes pure noise to a confirmed sign.
double noise_gate(double err) { return 10.0 * std::max(err, 1e-14); }

} // namespace

RootReport find_critical_periods(Parameter nu, double s_lo, double s_hi,
                                 int grid,
                                 const flow::IntegratorConfig& cfg) {
    if (!(0.0 < s_lo && s_lo < s_hi && s_hi < 1.0))
        throw DomainError("find_critical_periods: need 0 < s_lo < s_hi < 1");
    if (grid < 1)
        throw DomainError("find_critical_periods: grid must be >= 1");
    const double xi = annulus_anchor(nu); // DomainError outside the charts

    RootReport report;
    report.s_lo = s_lo;
    report.s_hi = s_hi;
    report.grid = grid;

    // Geometric grid: cells shrink toward the boundary end, where the
    // expansion terms separate and roots accumulate.
    const double ratio = std::pow(s_hi / s_lo, 1.0 / grid);
    std::vector<double> ss(grid + 1);
    std::vector<std::optional<flow::PeriodSample>> ps(grid + 1);
    for (int k = 0; k <= grid; ++k) {
        ss[k] = (k == grid) ? s_hi : s_lo * std::pow(ratio, k);
        ps[k] = try_sample(ss[k], xi, nu, cfg, report.failures);
        if (ps[k])
            report.max_abs_dP =
                std::max(report.max_abs_dP, std::abs(ps[k]->P1));
    }

    for (int k = 0; k < grid; ++k) {
        if (!ps[k] || !ps[k + 1]) continue; // skipped, failure recorded
        const auto& a = *ps[k];
        const auto& b = *ps[k + 1];
        const bool flip1 = a.P1 * b.P1 < 0.0;
        const bool a_clear = std::abs(a.P1) > noise_gate(a.diagnostics.err_P1);
        const bool b_clear = std::abs(b.P1) > noise_gate(b.diagnostics.err_P1);

        if (flip1 && a_clear && b_clear) {
            // Confirmed simple root: bisect the sign change of P'.
            double lo = ss[k], hi = ss[k + 1];
            double sign_lo = a.P1 > 0 ? 1.0 : -1.0;
            bool ok = true;
            while (hi - lo > 1e-8) {
                const double mid = 0.5 * (lo + hi);
                auto m = try_sample(mid, xi, nu, cfg, report.failures);
                if (!m) { ok = false; break; }
                if (m->P1 == 0.0) { lo = hi = mid; break; }
                if ((m->P1 > 0 ? 1.0 : -1.0) == sign_lo) lo = mid;
                else hi = mid;
            }
            if (ok)
                report.roots.push_back(
                    {0.5 * (lo + hi), lo, hi, /*multiplicity=*/1});
            else
                report.unresolved.emplace_back(ss[k], ss[k + 1]);
            continue;
        }
        if (flip1) {
            // Sign change drowned in finite-difference noise: ambiguous.
            report.unresolved.emplace_back(ss[k], ss[k + 1]);
            continue;
        }
        // No sign change of P': a double root would show as a sign change
        // of P'' with |P'| at the crossing below its noise gate.
        const bool flip2 = a.P2 * b.P2 < 0.0;
        if (!flip2) continue;
        if (std::abs(a.P2) <= noise_gate(a.diagnostics.err_P2) ||
            std::abs(b.P2) <= noise_gate(b.diagnostics.err_P2))
            continue; // P'' itself not resolved; nothing to report
        double lo = ss[k], hi = ss[k + 1];
        double sign_lo = a.P2 > 0 ? 1.0 : -1.0;
        std::optional<flow::PeriodSample> at_mid;
        bool ok = true;
        while (hi - lo > 1e-8) {
            const double mid = 0.5 * (lo + hi);
            at_mid = try_sample(mid, xi, nu, cfg, report.failures);
            if (!at_mid) { ok = false; break; }
            if (at_mid->P2 == 0.0) { lo = hi = mid; break; }
            if ((at_mid->P2 > 0 ? 1.0 : -1.0) == sign_lo) lo = mid;
            else hi = mid;
        }
        if (!ok || !at_mid) continue;
        if (std::abs(at_mid->P1) <
            noise_gate(at_mid->diagnostics.err_P1))
            report.roots.push_back(
                {0.5 * (lo + hi), lo, hi, /*multiplicity=*/2});
    }
    std::sort(report.roots.begin(), report.roots.end(),
              [](const CriticalRoot& r1, const CriticalRoot& r2) {
                  return r1.s < r2.s;
              });
    return report;
}

namespace {

// The D-profile whose zero defines G(F): the regularized hypergeometric
// factor of the outer-chart s-coefficient.  Regularization keeps the
// profile finite and sign-definite through F = 5/4, where c = 5/2 - 2F
// crosses the Gamma pole at 0.
double g_profile(double D, double F) {
    const double lam = 1.0 / (2.0 * (F - 1.0));
    const auto geom = hyperbola_params({D, F});
    return specfun::hyp2f1_regularized(-1.0 - 1.0 / lam, -0.5,
                                       0.5 - 1.0 / lam, geom.z);
}

} // namespace

CurvePoint solve_G(double F, double tol) {
    if (!(1.0 < F && F < 1.5))
        throw DomainError("solve_G: F must lie in (1, 3/2)");
    if (!(tol > 0.0)) throw DomainError("solve_G: tol must be positive");
    // The zero lies strictly inside (-F, -1/2); the margin only closes as
    // F -> 1+, where it shrinks like sqrt(F-1) and stays far above 1e-7.
    double lo = -F + 1e-7, hi = -0.5 - 1e-7;
    double f_lo = g_profile(lo, F), f_hi = g_profile(hi, F);
    if (f_lo * f_hi >= 0.0)
        throw BracketError(
            fmt("solve_G: no sign change on [%.9g, %.9g]: "
                "profile values %.6g and %.6g",
                lo, hi, f_lo, f_hi));
    const double sign_lo = f_lo > 0 ? 1.0 : -1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::abs(lo); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = g_profile(mid, F);
        if (fm == 0.0) { lo = hi = mid; break; }
        if ((fm > 0 ? 1.0 : -1.0) == sign_lo) lo = mid;
        else hi = mid;
    }
    CurvePoint point;
    point.F = F;
    point.D = 0.5 * (lo + hi);
    point.residual = std::abs(gamma2_coeffs({point.D, F}).T10.value());
    if (!(point.residual < tol))
        throw ConvergenceError(
            fmt("solve_G: |T10| = %.6g at D = %.17g exceeds tol = %.3g",
                point.residual, point.D, tol));
    return point;
}

Parameter locate_nu_star() {
    const double F = 4.0 / 3.0;
    return {solve_G(F).D, F};
}

double verify_isochrone(Parameter nu, const flow::IntegratorConfig& cfg) {
    if (classify_region(nu) != RegionTag::Isochrone)
        throw NotIsochroneError(
            fmt("verify_isochrone: (%.17g, %.17g) is not one of the four "
                "isochronous parameters",
                nu.D, nu.F));
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const double s = 0.02 + k * (0.95 - 0.02) / 49.0;
        const double P = 2.0 * flow::half_period(s, nu, cfg);
        worst = std::max(worst, std::abs(P - kTwoPi));
    }
    return worst;
}

FitResult fit_coefficients(Parameter nu, const ExpansionModel& shape,
                           const std::vector<double>& s_grid,
                           const flow::IntegratorConfig& cfg) {
    if (shape.terms.empty())
        throw DomainError("fit_coefficients: shape has no terms");
    if (s_grid.empty())
        throw DomainError("fit_coefficients: empty s grid");
    const double xi = annulus_anchor(nu);
    const auto n = static_cast<Eigen::Index>(s_grid.size());
    const auto m = static_cast<Eigen::Index>(shape.terms.size());
    if (n < m)
        throw IllConditionedError(
            fmt("fit_coefficients: %ld samples cannot determine %ld "
                "coefficients",
                static_cast<long>(n), static_cast<long>(m)));

    Eigen::MatrixXd A(n, m);
    Eigen::VectorXd b(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double s = s_grid[static_cast<std::size_t>(i)];
        if (!(s / xi > cfg.s_floor && s / xi < 1.0))
            throw DomainError(
                fmt("fit_coefficients: s = %.6g outside the integrator "
                    "window (floor %.3g, anchor %.6g)",
                    s, cfg.s_floor * xi, xi));
        for (Eigen::Index j = 0; j < m; ++j) {
            ExpansionTerm basis = shape.terms[static_cast<std::size_t>(j)];
            basis.coeff = 1.0;
            A(i, j) = term_value(basis, s);
        }
        b(i) = flow::half_period_physical(s, nu, cfg);
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
    const auto& sv = svd.singularValues();
    const double smallest = sv(sv.size() - 1);
    const double condition =
        smallest > 0.0 ? sv(0) / smallest
                       : std::numeric_limits<double>::infinity();
    if (!(condition <= 1e10))
        throw IllConditionedError(
            fmt("fit_coefficients: condition number %.6g exceeds 1e10 "
                "(%ld samples, %ld terms)",
                condition, static_cast<long>(n), static_cast<long>(m)));

    const Eigen::VectorXd x = A.colPivHouseholderQr().solve(b);
    FitResult result;
    result.coefficients.assign(x.data(), x.data() + x.size());
    result.residual_norm = (A * x - b).norm();
    result.condition = condition;
    return result;
}

int criticality_probe(Parameter nu0, double delta, double s0, int samples,
                      std::uint64_t seed, int grid) {
    if (!(delta > 0.0)) throw DomainError("criticality_probe: delta <= 0");
    if (!(0.0 < s0 && s0 < 1.0))
        throw DomainError("criticality_probe: need 0 < s0 < 1");
    if (samples < 1) throw DomainError("criticality_probe: samples < 1");
    annulus_anchor(nu0); // DomainError if the center parameter is unsupported

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const flow::IntegratorConfig cfg;
    const double s_lo = std::max(2.0 * cfg.s_floor, s0 / 200.0);

    int best = 0;
    for (int i = 0; i < samples; ++i) {
        const double angle = kTwoPi * unit(rng);
        const double radius = delta * std::sqrt(unit(rng));
        const Parameter nu{nu0.D + radius * std::cos(angle),
                           nu0.F + radius * std::sin(angle)};
        try {
            annulus_anchor(nu);
        } catch (const DomainError&) {
            continue; // left the supported charts: cannot count there
        }
        const auto report = find_critical_periods(nu, s_lo, s0, grid, cfg);
        best = std::max(best, static_cast<int>(report.roots.size()));
    }
    return best;
}

} // namespace loudper::critical
