#pragma once

#include <functional>
#include <vector>

#include "loudper/errors.hpp"

// Real special functions used by the expansion coefficient formulas:
// Gamma, digamma, Beta with its reciprocal-Gamma continuation, the Gauss
// hypergeometric function on z<1, the compensator deformation of the
// logarithm, and the incomplete Mellin transform.
namespace loudper::specfun {

// sin(pi*x), cos(pi*x) with exact argument reduction at integers and
// half-integers.  Used by the reflection formulas; exposed because the
// tests exercise them directly.
double sin_pi(double x);
double cos_pi(double x);

// True when x is within tol of an integer <= 0.
bool near_nonpositive_int(double x, double tol = 1e-12);

// Gamma function.  Relative error <= 1e-13 on [-20,20] away from poles.
// Throws PoleError at 0, -1, -2, ...
double gamma(double x);

// 1/Gamma(x), entire: returns 0 at the poles of Gamma instead of throwing.
double recip_gamma(double x);

// Digamma (logarithmic derivative of Gamma).  Throws PoleError at
// nonpositive integers.
double digamma(double x);

// Beta function B(z,w)=Gamma(z)Gamma(w)/Gamma(z+w) with the continuation
// convention: if z+w is a nonpositive integer while z and w are not,
// the reciprocal Gamma factor vanishes and B(z,w)=0.
// Throws PoleError when z or w is a nonpositive integer.
double beta(double z, double w);

// Gauss hypergeometric 2F1(a,b;c;z) for z<1.
//  |z| <= 1/2        : power series (term ratio < 1e-17 three times in a
//                      row, hard cap 1e5 terms);
//  z < -1/2          : Pfaff transform (1-z)^{-a} 2F1(a,c-b;c;z/(z-1));
//  1/2 < z < 1       : Euler transform (1-z)^{c-a-b} 2F1(c-a,c-b;c;z).
// Throws DomainError for z>=1, PoleError for c in Z_{<=0}.
double hyp2f1(double a, double b, double c, double z);

// Regularized hypergeometric 2F1(a,b;c;z)/Gamma(c), entire in c: finite
// even when c is a nonpositive integer.  Needed wherever a Beta prefactor
// sharing the parameter c cancels the pole of 2F1 (a 0 x infinity product
// that is finite); same z-domain as hyp2f1.
double hyp2f1_regularized(double a, double b, double c, double z);

// B(g1,g2) * 2F1(a,b;g1+g2;z) evaluated through the regularized form, so
// the product stays finite when g1+g2 is a nonpositive integer while g1
// and g2 are not.  Throws PoleError when g1 or g2 is a nonpositive
// integer (a genuine pole of the product).
double beta_times_hyp2f1(double g1, double g2, double a, double b, double z);

// Compensator: omega(s;alpha) = (s^{-alpha}-1)/alpha for alpha != 0 and
// -log(s) for alpha = 0, continuous in alpha (series branch below 1e-8).
struct CompensatorArg {
    double s;     // strictly positive
    double alpha;
};
double compensator(CompensatorArg arg);
double compensator(double s, double alpha);
// d/ds omega(s;alpha) = -s^{-alpha-1}.
double compensator_ds(double s, double alpha);

// Incomplete Mellin transform
//   fhat(alpha,x) = sum_{i<k} t_i x^i/(i-alpha)
//                 + |x|^alpha Int_0^x (f(s)-T(s)) |s|^{-alpha} ds/s,
// where t_i are the Taylor coefficients of f at 0 and T is the degree
// k-1 Taylor polynomial.  The value is independent of the choice of
// k > alpha.
struct MellinInput {
    std::function<double(double)> f; // integrand; must be reentrant
    std::vector<double> taylor;      // Taylor coefficients of f at 0, size k
    double alpha;                    // not a nonnegative integer
    double x;                        // nonzero
};
double mellin_hat(const MellinInput& in);

// Limit value of the incomplete Mellin transform of the power kernel
// h(y) = (1+kappa*y^2)^delta at y -> infinity:
//   lim y^{-alpha} hhat(alpha,y) = kappa^{alpha/2}/2 * B(-alpha/2, -delta+alpha/2).
// Preconditions: kappa>0, 2*delta<alpha, alpha not a nonnegative integer.
double mellin_limit_power_kernel(double alpha, double delta, double kappa);

// Limit value of the incomplete Mellin transform of the Beta-type kernel
// g(y) = (1-y)^{delta-1} (1-x*y)^{-gamma} at y -> 1^-:
//   lim ghat(alpha,y) = B(-alpha,delta) * 2F1(gamma,-alpha;delta-alpha;x).
// Preconditions: delta>0, x<1, alpha not a nonnegative integer.
double mellin_limit_beta_kernel(double alpha, double delta, double gamma_,
                                double x);

} // namespace loudper::specfun
