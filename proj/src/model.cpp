#include "stark/model.hpp"

#include <algorithm>
#include <cmath>

namespace stark {

ModelParams::ModelParams(double alpha_, double xi_start_, double tol_ode_, double tol_quad_)
    : alpha(alpha_), xi_start(xi_start_), tol_ode(tol_ode_), tol_quad(tol_quad_) {
    if (!(alpha > 0.0) || !(alpha < 2.0))
        throw InvalidConfig("alpha must lie in (0, 2)");
    if (!(xi_start > 0.0))
        throw InvalidConfig("xi_start must be positive");
    if (!(tol_ode > 0.0) || !(tol_quad > 0.0))
        throw InvalidConfig("tolerances must be positive");
    c = std::pow(1.0 + 0.5 * alpha, 2.0 / (2.0 + alpha));
    tau = (2.0 + alpha) / (2.0 * (2.0 - alpha)) *
          std::pow(1.0 + 0.5 * alpha, -2.0 * alpha / (2.0 + alpha));
}

double default_xi_start(double alpha, std::span<const double> energies) {
    ModelParams p(alpha);
    double xs = 1e-6;
    for (double E : energies) {
        if (E == 0.0) continue;
        // |beta_E(xi)| = |E| c^-alpha xi^-m  <= 1/2
        const double m = p.weight_exponent();
        const double need = std::pow(2.0 * std::fabs(E) * std::pow(p.c, -alpha), 1.0 / m);
        xs = std::max(xs, need);
    }
    return xs;
}

double forward_map(double x, const ModelParams& p) {
    if (x < 0.0) throw InvalidConfig("forward_map: x must be >= 0");
    if (x == 0.0) return 0.0;
    const double k = 1.0 + 0.5 * p.alpha;
    return std::pow(x, k) / k;
}

double inverse_map(double xi, const ModelParams& p) {
    if (xi < 0.0) throw InvalidConfig("inverse_map: xi must be >= 0");
    if (xi == 0.0) return 0.0;
    return p.c * std::pow(xi, 2.0 / (2.0 + p.alpha));
}

double weight(double xi, const ModelParams& p) {
    if (!(xi > 0.0)) throw InvalidConfig("weight: xi must be > 0");
    return std::pow(p.c, -p.alpha) * std::pow(xi, -p.weight_exponent());
}

double beta(double E, double xi, const ModelParams& p) {
    return -E * weight(xi, p);
}

double u_to_phi(double x, double u_value, const ModelParams& p) {
    if (!(x > 0.0)) throw InvalidConfig("u_to_phi: x must be > 0");
    return std::pow(x, 0.25 * p.alpha) * u_value;
}

double phi_to_u(double xi, double phi_value, const ModelParams& p) {
    if (!(xi > 0.0)) throw InvalidConfig("phi_to_u: xi must be > 0");
    const double x = inverse_map(xi, p);
    return phi_value / std::pow(x, 0.25 * p.alpha);
}

ValueSlope u_pair_to_phi(double x, ValueSlope u, const ModelParams& p) {
    // phi = v^(1/4) u,  dphi/dxi = v^(-1/4) u' + (alpha/4) x^(-alpha/4-1) u,
    // with v = x^alpha.
    if (!(x > 0.0)) throw InvalidConfig("u_pair_to_phi: x must be > 0");
    const double q = std::pow(x, 0.25 * p.alpha);
    return {q * u.value, u.slope / q + 0.25 * p.alpha / (x * q) * u.value};
}

ValueSlope phi_pair_to_u(double xi, ValueSlope phi, const ModelParams& p) {
    if (!(xi > 0.0)) throw InvalidConfig("phi_pair_to_u: xi must be > 0");
    const double x = inverse_map(xi, p);
    const double q = std::pow(x, 0.25 * p.alpha);
    const double u = phi.value / q;
    return {u, q * phi.slope - 0.25 * p.alpha / x * u};
}

}  // namespace stark
