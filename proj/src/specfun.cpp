#include "loudper/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace loudper::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2Pi = 2.50662827463100050242;

// Lanczos approximation, g = 607/128, 15 coefficients.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

// Gamma(x) for x >= 0.5 (no reflection needed).
double gamma_core(double x) {
    double acc = kLanczos[0];
    for (int k = 1; k < 15; ++k) acc += kLanczos[k] / (x - 1.0 + k);
    const double t = x + kLanczosG - 0.5;
    if (x > 100.0)  // avoid overflow of pow before exp can tame it
        return kSqrt2Pi * acc * std::exp((x - 0.5) * std::log(t) - t);
    return kSqrt2Pi * acc * std::pow(t, x - 0.5) * std::exp(-t);
}

// Digamma for x >= 0.5: recurrence up into the asymptotic regime.
double digamma_core(double x) {
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double v = inv * inv;
    // ln x - 1/(2x) - sum_{n>=1} B_{2n}/(2n) x^{-2n}
    const double tail =
        1.0 / 12 -
        v * (1.0 / 120 -
             v * (1.0 / 252 -
                  v * (1.0 / 240 -
                       v * (1.0 / 132 -
                            v * (691.0 / 32760 - v * (1.0 / 12))))));
    return acc + std::log(x) - 0.5 * inv - v * tail;
}

bool exact_nonpositive_int(double x) {
    return x <= 0.0 && x == std::round(x);
}

// If x lies within a small tolerance of an integer m <= 0, set m_out = -m
// (so m_out >= 0) and return true.
bool snap_nonpos_int(double x, long& m_out, double tol = 1e-12) {
    const double r = std::round(x);
    if (r > 0.0) return false;
    if (std::abs(x - r) > tol * std::max(1.0, std::abs(x))) return false;
    m_out = static_cast<long>(-r);
    return true;
}

// Series sum_{n} (a)_n (b)_n / ((c)_n n!) z^n with the documented stopping
// rule.  Caller guarantees no (c)_n vanishes before convergence.
double gauss_series(double a, double b, double c, double z) {
    double term = 1.0;
    double sum = 1.0;
    int quiet = 0;
    for (long n = 0; n < 100000; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) {
            if (++quiet >= 3) return sum;
        } else {
            quiet = 0;
        }
    }
    throw ConvergenceError(
        "hyp2f1: series did not meet the stopping rule within 1e5 terms");
}

// Finite sum for a terminating numerator parameter a = -m.
double terminating_2f1(long m, double b, double c, double z) {
    double term = 1.0;
    double sum = 1.0;
    for (long n = 0; n < m; ++n) {
        term *= (n - static_cast<double>(m)) * (b + n) /
                ((c + n) * (n + 1.0)) * z;
        sum += term;
    }
    return sum;
}

} // namespace

double sin_pi(double x) {
    if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
    double r = std::fmod(x, 2.0); // (-2, 2)
    if (r > 1.0)
        r -= 2.0;
    else if (r < -1.0)
        r += 2.0;
    if (r > 0.5)
        r = 1.0 - r;
    else if (r < -0.5)
        r = -1.0 - r;
    return std::sin(kPi * r); // exact zeros at integers, +-1 at half-integers
}

double cos_pi(double x) { return sin_pi(x + 0.5); }

bool near_nonpositive_int(double x, double tol) {
    const double r = std::round(x);
    return r <= 0.0 && std::abs(x - r) <= tol;
}

double gamma(double x) {
    if (std::isnan(x)) throw DomainError("gamma: NaN argument");
    if (exact_nonpositive_int(x))
        throw PoleError("gamma: pole at nonpositive integer " +
                        std::to_string(static_cast<long>(x)));
    if (x >= 0.5) return gamma_core(x);
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
    return kPi / (sin_pi(x) * gamma_core(1.0 - x));
}

double recip_gamma(double x) {
    if (std::isnan(x)) throw DomainError("recip_gamma: NaN argument");
    if (x >= 0.5) return 1.0 / gamma_core(x);
    // Entire continuation: 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi, which is
    // exactly 0 at x = 0, -1, -2, ...
    return sin_pi(x) * gamma_core(1.0 - x) / kPi;
}

double digamma(double x) {
    if (std::isnan(x)) throw DomainError("digamma: NaN argument");
    if (exact_nonpositive_int(x))
        throw PoleError("digamma: pole at nonpositive integer " +
                        std::to_string(static_cast<long>(x)));
    if (x >= 0.5) return digamma_core(x);
    // Reflection: psi(1-x) - psi(x) = pi cot(pi x).
    return digamma_core(1.0 - x) - kPi * cos_pi(x) / sin_pi(x);
}

double beta(double z, double w) {
    if (near_nonpositive_int(z) || near_nonpositive_int(w))
        throw PoleError("beta: argument at a nonpositive integer");
    const double s = z + w;
    if (near_nonpositive_int(s)) return 0.0; // reciprocal-Gamma convention
    return gamma(z) * gamma(w) * recip_gamma(s);
}

double hyp2f1(double a, double b, double c, double z) {
    if (!(z < 1.0)) throw DomainError("hyp2f1: requires z < 1");
    long ma = 0, mb = 0, mc = 0;
    const bool ta = snap_nonpos_int(a, ma);
    const bool tb = snap_nonpos_int(b, mb);
    const bool tc = snap_nonpos_int(c, mc);
    if (ta || tb) {
        // Polynomial case: series terminates at the smaller index.
        long m;
        double other;
        if (ta && (!tb || ma <= mb)) {
            m = ma;
            other = b;
        } else {
            m = mb;
            other = a;
        }
        if (tc && mc < m)
            throw PoleError(
                "hyp2f1: c hits a nonpositive integer before termination");
        return terminating_2f1(m, other, c, z);
    }
    if (tc) throw PoleError("hyp2f1: c is a nonpositive integer");
    if (z < -0.5) {
        // Pfaff: maps z < -1/2 into [1/3, 1).
        return std::pow(1.0 - z, -a) * hyp2f1(a, c - b, c, z / (z - 1.0));
    }
    if (z <= 0.5) return gauss_series(a, b, c, z);
    // z in (1/2, 1): Euler transformation.  The transformed parameters may
    // terminate, in which case the recursion takes the polynomial branch.
    const double ca = c - a;
    const double cb = c - b;
    long tmp = 0;
    if (snap_nonpos_int(ca, tmp) || snap_nonpos_int(cb, tmp))
        return std::pow(1.0 - z, c - a - b) * hyp2f1(ca, cb, c, z);
    return std::pow(1.0 - z, c - a - b) * gauss_series(ca, cb, c, z);
}

double hyp2f1_regularized(double a, double b, double c, double z) {
    if (!(z < 1.0)) throw DomainError("hyp2f1_regularized: requires z < 1");
    long m = 0;
    if (snap_nonpos_int(c, m)) {
        // Finite limit across the Gamma(c) pole:
        //   lim_{c -> -m} 2F1(a,b;c;z)/Gamma(c)
        //     = (a)_{m+1} (b)_{m+1} / (m+1)!  z^{m+1}
        //       2F1(a+m+1, b+m+1; m+2; z).
        double poch = 1.0;
        for (long j = 0; j <= m; ++j) poch *= (a + j) * (b + j);
        if (poch == 0.0) return 0.0; // series terminated before the pole
        double fact = 1.0;
        for (long j = 2; j <= m + 1; ++j) fact *= j;
        return poch / fact * std::pow(z, static_cast<double>(m + 1)) *
               hyp2f1(a + m + 1, b + m + 1, static_cast<double>(m + 2), z);
    }
    return hyp2f1(a, b, c, z) * recip_gamma(c);
}

double beta_times_hyp2f1(double g1, double g2, double a, double b, double z) {
    if (near_nonpositive_int(g1) || near_nonpositive_int(g2))
        throw PoleError("beta_times_hyp2f1: Beta factor has a pole");
    return gamma(g1) * gamma(g2) * hyp2f1_regularized(a, b, g1 + g2, z);
}

double compensator(CompensatorArg arg) { return compensator(arg.s, arg.alpha); }

double compensator(double s, double alpha) {
    if (!(s > 0.0)) throw DomainError("compensator: requires s > 0");
    const double L = std::log(s);
    if (std::abs(alpha) < 1e-8) {
        // (e^u - 1)/alpha with u = -alpha L, expanded to kill the 0/0.
        const double u = -alpha * L;
        return -L * (1.0 + u * (0.5 + u * (1.0 / 6 + u / 24.0)));
    }
    return std::expm1(-alpha * L) / alpha;
}

double compensator_ds(double s, double alpha) {
    if (!(s > 0.0)) throw DomainError("compensator_ds: requires s > 0");
    return -std::exp(-(alpha + 1.0) * std::log(s));
}

double mellin_hat(const MellinInput& in) {
    if (in.x == 0.0) throw DomainError("mellin_hat: x must be nonzero");
    if (!in.f) throw DomainError("mellin_hat: empty integrand");
    const double alpha = in.alpha;
    {
        const double r = std::round(alpha);
        if (r >= 0.0 && std::abs(alpha - r) <= 1e-12)
            throw DomainError(
                "mellin_hat: alpha must not be a nonnegative integer");
    }
    const long k = static_cast<long>(in.taylor.size());
    if (static_cast<double>(k) <= alpha)
        throw DomainError("mellin_hat: need taylor length k > alpha");

    double head = 0.0;
    double xpow = 1.0;
    for (long i = 0; i < k; ++i) {
        head += in.taylor[i] * xpow / (static_cast<double>(i) - alpha);
        xpow *= in.x;
    }

    // Tail integral after s = x*u:  int_0^1 (f(xu) - T(xu)) u^{-alpha-1} du,
    // where T is the Taylor polynomial; the |x|^alpha prefactor cancels.
    // The integrand behaves like u^{k-alpha-1} at 0, which bisection-based
    // quadrature resolves only slowly, so substitute u = v^m with m chosen
    // to make the integrand C^3 there.
    const int m = std::max(
        1, static_cast<int>(std::ceil(4.0 / (static_cast<double>(k) - alpha))));
    const auto& taylor = in.taylor;
    const auto& f = in.f;
    const double x = in.x;
    auto integrand = [&](double v) {
        const double u = std::pow(v, static_cast<double>(m));
        const double s = x * u;
        double T = 0.0;
        for (long i = k - 1; i >= 0; --i) T = T * s + taylor[i];
        // (f - T) u^{-alpha-1} du = (f - T) m v^{-m alpha - 1} dv
        return (f(s) - T) * m * std::pow(v, -m * alpha - 1.0);
    };
    double err = 0.0;
    const double tail =
        boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
            integrand, 0.0, 1.0, 15, 1e-12, &err);
    if (!(err <= 1e-5 * std::max(1.0, std::abs(tail))))
        throw ConvergenceError("mellin_hat: quadrature failed to converge");
    return head + tail;
}

double mellin_limit_power_kernel(double alpha, double delta, double kappa) {
    if (!(kappa > 0.0))
        throw DomainError("mellin_limit_power_kernel: requires kappa > 0");
    if (!(2.0 * delta < alpha))
        throw DomainError("mellin_limit_power_kernel: requires 2*delta < alpha");
    {
        const double r = std::round(alpha);
        if (r >= 0.0 && std::abs(alpha - r) <= 1e-12)
            throw DomainError(
                "mellin_limit_power_kernel: alpha must not be a nonnegative "
                "integer");
    }
    return 0.5 * std::pow(kappa, 0.5 * alpha) *
           beta(-0.5 * alpha, -delta + 0.5 * alpha);
}

double mellin_limit_beta_kernel(double alpha, double delta, double gamma_,
                                double x) {
    if (!(delta > 0.0))
        throw DomainError("mellin_limit_beta_kernel: requires delta > 0");
    if (!(x < 1.0))
        throw DomainError("mellin_limit_beta_kernel: requires x < 1");
    {
        const double r = std::round(alpha);
        if (r >= 0.0 && std::abs(alpha - r) <= 1e-12)
            throw DomainError(
                "mellin_limit_beta_kernel: alpha must not be a nonnegative "
                "integer");
    }
    // B(-alpha, delta) * 2F1(gamma, -alpha; delta - alpha; x), evaluated
    // through the regularized product so resonant delta - alpha stays finite.
    return beta_times_hyp2f1(-alpha, delta, gamma_, -alpha, x);
}

} // namespace loudper::specfun
