#pragma once

// Generated by tools/gen_oracles.py -- frozen reference values
// computed independently with mpmath (40-digit working precision).
// Regenerate with:  python3 tools/gen_oracles.py > tests/oracle_constants.hpp

namespace oracle {

// ---- Gamma function ----
inline constexpr double kGammaArgs[12] = {-19.3, -7.7, -3.3, -0.7, 0.1, 0.5, 1.0, 2.0, 4.7, 9.2, 15.6, 19.25};
inline constexpr double kGammaVals[12] = {1.3063996396128334e-17, 0.00018207416684152617, 0.43851739219876307, -4.273669982410843, 9.51350769866873, 1.772453850905516, 1.0, 1.0, 15.431411600047436, 62010.763895764685, 439134019915.20337, 1.3300786146933842e+16};

// ---- Digamma function ----
inline constexpr double kDigammaArgs[10] = {0.1, 0.3, 1.0, 2.0, 2.5, 4.7, 9.9, -0.7, -3.3, -15.2};
inline constexpr double kDigammaVals[10] = {-10.423754940411076, -3.502524222200133, -0.5772156649015329, 0.42278433509846713, 0.7031566406452432, 1.4374238096317817, 2.2411803166063815, -2.073952793628704, 3.620353460592126, 7.077860962471039};

// ---- Beta function ----
inline constexpr double kBetaNeg13Neg32 = -2.6350189955118237;  // B(-1/3, -3/2)
inline constexpr double kBeta_25_neg03 = -5.2204074507097475;
inline constexpr double kBeta_neg13_37 = 11.175107840466342;
inline constexpr double kBeta_14_34 = 4.442882938158366;  // B(1/4, 3/4)

// ---- Gauss hypergeometric spot values ----
inline constexpr double kHypArgs[8][4] = {{0.3, 1.7, 2.2, 0.4}, {0.3, 1.7, 2.2, -0.8}, {0.3, 1.7, 2.2, 0.85}, {1.1, -0.4, 0.9, -3.5}, {0.25, 0.75, 1.5, 0.6}, {2.2, 3.3, 0.7, -0.95}, {-0.5, 0.5, 2.0, 0.3}, {0.5, 0.5, 1.5, -6.0}};
inline constexpr double kHypVals[8] = {1.1209812722445474, 0.8681193970800015, 1.4601423055356693, 1.9690701576721616, 1.1068641409651023, -0.12442474855209318, 0.9609412873720531, 0.6647535398739407};

// ---- Regularized hypergeometric at nonpositive c ----
inline constexpr double kRegArgs[4][4] = {{0.7, -0.5, -1.0, 0.35}, {-3.5, -1.5, -1.0, -0.4}, {1.2, 0.4, -2.0, -0.6}, {0.9, 1.3, 0.75, 0.2}};
inline constexpr double kRegVals[4] = {-0.0324433929113537, 0.5794082290607491, -0.07653456543685482, 1.1532025282453437};

// ---- Mellin limit oracles (independent quadrature) ----
inline constexpr double kPowerKernelQuad1 = 1.8680021680446304;  // alpha=-1/2, delta=-1, kappa=2
inline constexpr double kPowerKernelQuad2 = 0.725690359213293;  // alpha=-3/2, delta=-2, kappa=0.7
inline constexpr double kBetaKernelQuad1 = 1.3314873654468884;  // alpha=-0.7, delta=1.3, gamma=0.8, x=0.4
inline constexpr double kBetaKernelQuad2 = 3.0806580660196756;  // alpha=-1.2, delta=0.5, gamma=-1.1, x=-0.9
inline constexpr double kBetaKernelSpot = -3.14;  // B(-1/2,1) * 2F1(-2,-1/2;1/2;0.3)
inline constexpr double kBetaKernelResonant = 0.008245417131417625;  // alpha=2.5, delta=0.5, gamma=0.3, x=0.25 (delta-alpha = -2)

// ---- Conic roots in the W chart ----
inline constexpr double kConicP1_m12_43 = 0.6536278336145789;  // p1 at (-1.2, 4/3)
inline constexpr double kConicP2_m12_43 = 0.8797054997187544;  // p2 at (-1.2, 4/3)

// ---- Leading expansion coefficients ----
inline constexpr double kT00_m05_075 = 2.565099660323728;  // pi / (2 sqrt(F (D+1)))
inline constexpr double kT20_m05_075 = 5.948954850804351;  // sqrt(pi)/sqrt(2F) * Gamma(1/2-1/lam)/Gamma(1-1/lam) at lam=3

// ---- V-chart expansion coefficients ----
inline constexpr double kT01_m05_06 = 3.244292790903094;  // T01 at (-1/2, 0.6), lambda = 3/2
inline constexpr double kT01_m03_06 = 1.4523571753924516;  // T01 at (-0.3, 0.6)
inline constexpr double kT10_m03_06 = 1.1405704905945935;  // T10 at (-0.3, 0.6)
inline constexpr double kT10_m04_075 = 0.5566573465394993;  // T10 at (-0.4, 3/4), lambda = 3
inline constexpr double kRho4_m03_05 = 27.811053778104768;  // rho4 at (-0.3, 1/2)
inline constexpr double kRho5_m03_05 = 7.586086850872184;  // rho5 at (-0.3, 1/2)
inline constexpr double kT201_m05_23 = 3.4641016151377544;  // lim (2-lambda) T01 at (-1/2, 2/3): exactly 2 sqrt(3)
inline constexpr double kT200_m05_23 = -1.0629693460750584;  // lim (T20 + T01) at (-1/2, 2/3)

// ---- W-chart expansion coefficients ----
inline constexpr double kT00_m12_14 = 3.2462518582834288;  // T00 at (-1.2, 1.4)
inline constexpr double kT01_m12_14 = -5.255238199025822;  // T01 at (-1.2, 1.4)
inline constexpr double kT10_m12_14 = 1.7653202779672235;  // T10 at (-1.2, 1.4)
inline constexpr double kT20_m12_14 = 0.5892195496556176;  // T20 at (-1.2, 1.4)
inline constexpr double kRho_m12_14[4] = {3.6551357169148955, 2.582566313075369, 6.9182385613395345, -3.44145387341741};  // rho1..rho4 at (-1.2, 1.4)
inline constexpr double kT00_m08_12 = 2.663660987648891;  // T00 at (-0.8, 1.2)
inline constexpr double kT10_m08_12 = 1.4602718441753708;  // T10 at (-0.8, 1.2)
inline constexpr double kT20_m08_12 = 28.512639566507595;  // T20 at (-0.8, 1.2)
inline constexpr double kT10_m06_125 = 3.8836945798930085;  // T10 at (-0.6, 5/4): lambda = 2, regularized 2F1 route
inline constexpr double kT201_m1_125 = 10.125;  // lim (2-lambda) T01 at (-1, 5/4)
inline constexpr double kT200_m1_125 = -15.381603809290542;  // lim (T20 + T01) at (-1, 5/4)
inline constexpr double kT101h_m03_2 = -5.187121468721343;  // T101_half at (-0.3, 2); at (-1, 2) it is exactly 27/32
inline constexpr double kGstar_43 = -1.1279186108419348;  // D = G(4/3), the double-criticality abscissa
inline constexpr double kG_F12 = -0.9264530441547532;  // D = G(1.2)
inline constexpr double kG_F145 = -1.3497402521936772;  // D = G(1.45)
inline constexpr double kG_F101 = -0.5793557660864509;  // D = G(1.01)

// ---- positivity pipeline: hypergeometric combination and tangent data ----
inline constexpr double kRho0_a03 = 5.660912631433537;  // rho_0(0.3)
inline constexpr double kRho1_a03 = 13.485942600118477;  // rho_1(0.3)
inline constexpr double kRho2_a03 = 9.22676386667541;  // rho_2(0.3)
inline constexpr double kRho3_a03 = -1.76812409430585;  // rho_3(0.3)
inline constexpr double kRho0_a07 = 4.614177719601333;  // rho_0(0.7)
inline constexpr double kRho1_a07 = 7.464825921356457;  // rho_1(0.7)
inline constexpr double kRho2_a07 = 21.66859744349297;  // rho_2(0.7)
inline constexpr double kRho3_a07 = -8.220478139849417;  // rho_3(0.7)
inline constexpr double kPhi_a03_b04 = 1.8577519476990465;  // Phi(0.3, 0.4)
inline constexpr double kPhi_a07_b08 = 17.16607156233972;  // Phi(0.7, 0.8)
inline constexpr double kPhi_a05_b05 = 2.5478554487664518;  // Phi(0.5, 0.5)
inline constexpr double kProfileF_05 = 2.5926106188679405;  // Gamma-quotient profile at a = 1/2
inline constexpr double kProfileF_03 = 3.3244408103450844;  // Gamma-quotient profile at a = 0.3
inline constexpr double kRquartic_05 = 14651594201.043152;  // quartic resultant profile at (1/2, F(1/2))
inline constexpr double kTangentCross = 0.4507545597604358;  // abscissa where the two tangent lines cross
inline constexpr double kCurvatureBound = 0.45763559124559156;  // lower bound for F''/F on (0,1)
inline constexpr double kP0_at_023 = 1993.555873309924;  // tangent-gap numerator p0 at a = 0.23
inline constexpr double kP1_at_08 = 4726.480759089032;  // tangent-gap numerator p1 at a = 0.8
// p0 real roots in (0, 23/50): 0; in (0, 1): 1
// p1 real roots in (11/25, 1): 0; in (0, 1): 1
inline constexpr double kP0RootsLow = 0.0;  // distinct real roots of p0 in (0, 23/50)
inline constexpr double kP0RootsUnit = 1.0;  // distinct real roots of p0 in (0, 1)
inline constexpr double kP1RootsHigh = 0.0;  // distinct real roots of p1 in (11/25, 1)
inline constexpr double kP1RootsUnit = 1.0;  // distinct real roots of p1 in (0, 1)

} // namespace oracle
