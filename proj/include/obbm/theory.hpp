#pragma once

#include <cstdint>

// Closed-form constants, radii and scale functions of the model, computed
// to high precision. Everything here is a pure function of its inputs.
namespace obbm::theory {

struct ModelConstants {
  int d = 2;          // dimension, >= 1
  double nu = 1.0;    // trap intensity (atoms per unit volume), > 0
  double beta = 1.0;  // branching rate, > 0
};

// throws std::invalid_argument on d < 1, nu <= 0, beta <= 0
ModelConstants make_model_constants(int d, double nu, double beta);

struct DerivedConstants {
  double omega_d;   // unit-ball volume
  double lambda_d;  // principal Dirichlet eigenvalue of -1/2 Laplacian on B(0,1)
  double R0;        // (d / (nu * omega_d))^(1/d)
  double c_dnu;     // lambda_d / R0^2
  double R_cr;      // critical clearing radius: lambda_{d,R_cr} = beta
};

double unit_ball_volume(int d);

// Bessel function of the first kind, power series (fine for 0 < x <= 25).
double bessel_j(double nu, double x);

// First positive zero of J_nu, bracketed in (0, 20) and bisected to
// machine precision.
double bessel_j_first_zero(double nu);

// Principal Dirichlet eigenvalue of -1/2 Laplacian on B(0, r):
// j^2 / (2 r^2) with j the first zero of J_{d/2-1} (pi^2/(8 r^2) for d=1).
double principal_eigenvalue(int d, double r);

DerivedConstants derived_constants(const ModelConstants& mc);

enum class ClearingRadiusVariant { prop_b, lemma1 };

// prop_b: R0 (log l)^{1/d} - (log log l)^2, may be negative, returned as-is.
// lemma1: (R0 / 5^{1/d}) (log(c l))^{1/d}, requires c >= 1 and c*l > 1.
double clearing_radius(ClearingRadiusVariant variant, double ell, double c_param,
                       const ModelConstants& mc);

// (1/3) (R0 / 5^{1/d}) (2/3)^{1/d} (log log t)^{1/d}, t > e.
double moderate_clearing_radius(double t, const ModelConstants& mc);

// rho(t) = (log t)^{2/3}, t > 1.
double covering_scale(double t);

// beta t - c(d,nu) t / (log t)^{2/d}, t > 1 (leading-order exponent).
double predicted_log_mass(double t, const ModelConstants& mc);

// -principal_eigenvalue(d, r) * t
double confinement_log_asymptote(double t, double r, int d);

// (log t)^{2/d} (log_n / t - beta); converges to -c(d,nu) given survival.
double lln_statistic(double log_n, double t, const ModelConstants& mc);

}  // namespace obbm::theory
