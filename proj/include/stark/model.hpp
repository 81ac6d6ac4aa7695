#pragma once

#include <span>

#include "stark/errors.hpp"

namespace stark {

// Ambient operator -u'' - x^alpha u on the half line, 0 < alpha < 2, together
// with the constants of the Liouville change of variables
//   xi(x) = x^(1+alpha/2) / (1+alpha/2),   x = c xi^(2/(2+alpha)),
// and the numeric tolerances shared across the pipeline.
struct ModelParams {
    double alpha;
    double c;         // (1+alpha/2)^(2/(2+alpha))
    double tau;       // (2+alpha)/(2(2-alpha)) * (1+alpha/2)^(-2alpha/(2+alpha))
    double xi_start;  // start of the active region; |beta_E| <= 1/2 there
    double tol_ode  = 1e-10;
    double tol_quad = 1e-10;

    explicit ModelParams(double alpha_, double xi_start_ = 1.0,
                         double tol_ode_ = 1e-10, double tol_quad_ = 1e-10);

    // exponent of the weight: 2*alpha/(2+alpha)
    double weight_exponent() const { return 2.0 * alpha / (2.0 + alpha); }
    // exponent in the phase expansion: (2-alpha)/(2+alpha)
    double tau_exponent() const { return (2.0 - alpha) / (2.0 + alpha); }
    // coefficient of the 1/xi^2 term of the transformed potential
    double xi2_coefficient() const {
        const double d = (2.0 + alpha) * (2.0 + alpha);
        return (-1.25 * alpha * alpha + alpha * (alpha - 1.0)) / d;
    }
};

// smallest xi with |beta_E(xi)| <= 1/2 for every listed energy (floor 1e-6)
double default_xi_start(double alpha, std::span<const double> energies);

// xi = int_0^x t^(alpha/2) dt
double forward_map(double x, const ModelParams& p);
// x = c xi^(2/(2+alpha))
double inverse_map(double xi, const ModelParams& p);

// p(xi) = c^-alpha xi^(-2alpha/(2+alpha)), xi > 0
double weight(double xi, const ModelParams& p);

// beta_E(xi) = -E * weight(xi)
double beta(double E, double xi, const ModelParams& p);

// phi(xi) = x^(alpha/4) u(x) at xi = xi(x); these scale function values only
double u_to_phi(double x, double u_value, const ModelParams& p);
double phi_to_u(double xi, double phi_value, const ModelParams& p);

// full (u, u') <-> (phi, dphi/dxi) conversion at one point
struct ValueSlope {
    double value;
    double slope;
};
ValueSlope u_pair_to_phi(double x, ValueSlope u, const ModelParams& p);
ValueSlope phi_pair_to_u(double xi, ValueSlope phi, const ModelParams& p);

}  // namespace stark
