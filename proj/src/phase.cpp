#include "stark/phase.hpp"

#include <cmath>

#include "stark/quadrature.hpp"

namespace stark {
namespace {

constexpr double kNodesPerOctave = 64.0;

// sqrt(1-beta) - 1 + beta/2 written without cancellation:
//   r = -beta^2 / (2 (1 + w)^2),   w = sqrt(1 - beta).
double phase_defect(double beta_val) {
    const double w = std::sqrt(1.0 - beta_val);
    const double s = 1.0 + w;
    return -beta_val * beta_val / (2.0 * s * s);
}

}  // namespace

PhaseTable::PhaseTable(const ModelParams& params, double E, double xi_max)
    : params_(params), E_(E) {
    const double lo = params.xi_start;
    if (!(xi_max > lo))
        throw InvalidConfig("PhaseTable: xi_max must exceed xi_start");

    log_ratio_ = std::log(2.0) / kNodesPerOctave;
    const int n_seg = static_cast<int>(std::ceil(std::log(xi_max / lo) / log_ratio_)) + 1;
    nodes_.resize(n_seg + 1);
    for (int k = 0; k <= n_seg; ++k) nodes_[k] = lo * std::exp(log_ratio_ * k);

    const double m = params.weight_exponent();
    auto beta_at = [&](double xi) { return beta(E_, xi, params_); };
    auto integrand = [&](double s) {
        const double b = beta_at(s);
        if (!(b < 1.0))
            throw InvalidConfig("phase_integral: 1 - beta_E <= 0 inside range; "
                                "energy too negative for chosen xi_start");
        return std::sqrt(1.0 - b);
    };

    // prefix sums anchored at Phi(xi_start) = xi_start
    phi_.resize(nodes_.size());
    phi_[0] = lo;
    for (std::size_t k = 1; k < nodes_.size(); ++k) {
        QuadResult q = integrate(integrand, nodes_[k - 1], nodes_[k], 1e-13, 1e-15);
        phi_[k] = phi_[k - 1] + q.value;
    }

    // quintic Hermite coefficients per segment (exact Phi', Phi'' at nodes)
    coeff_.resize(6 * n_seg);
    for (int k = 0; k < n_seg; ++k) {
        const double x0 = nodes_[k], x1 = nodes_[k + 1], h = x1 - x0;
        const double b0 = beta_at(x0), b1 = beta_at(x1);
        const double w0 = std::sqrt(1.0 - b0), w1 = std::sqrt(1.0 - b1);
        const double s0 = m * b0 / (2.0 * x0 * w0);  // Phi'' = m beta / (2 xi w)
        const double s1 = m * b1 / (2.0 * x1 * w1);
        const double f0 = phi_[k], f1 = phi_[k + 1];

        const double A = f1 - f0 - w0 * h - 0.5 * s0 * h * h;
        const double B = (w1 - w0) * h - s0 * h * h;
        const double C = (s1 - s0) * h * h;

        double* c = &coeff_[6 * k];
        c[0] = f0;
        c[1] = w0 * h;
        c[2] = 0.5 * s0 * h * h;
        c[3] = 10.0 * A - 4.0 * B + 0.5 * C;
        c[4] = -15.0 * A + 7.0 * B - C;
        c[5] = 6.0 * A - 3.0 * B + 0.5 * C;
    }
}

int PhaseTable::locate(double xi) const {
    if (xi < nodes_.front() * (1.0 - 1e-12) || xi > nodes_.back() * (1.0 + 1e-12))
        throw InvalidConfig("PhaseTable: xi outside tabulated range");
    int k = static_cast<int>(std::log(xi / nodes_.front()) / log_ratio_);
    const int last = static_cast<int>(nodes_.size()) - 2;
    if (k < 0) k = 0;
    if (k > last) k = last;
    // guard against rounding at segment edges
    while (k > 0 && xi < nodes_[k]) --k;
    while (k < last && xi > nodes_[k + 1]) ++k;
    return k;
}

double PhaseTable::value(double xi) const {
    const int k = locate(xi);
    const double h = nodes_[k + 1] - nodes_[k];
    const double t = (xi - nodes_[k]) / h;
    const double* c = &coeff_[6 * k];
    return c[0] + t * (c[1] + t * (c[2] + t * (c[3] + t * (c[4] + t * c[5]))));
}

double PhaseTable::deriv(double xi) const {
    const double b = beta(E_, xi, params_);
    if (!(b < 1.0))
        throw InvalidConfig("phase_integral: 1 - beta_E <= 0 at xi");
    return std::sqrt(1.0 - b);
}

double tilde_t(const ModelParams& params, double E, double xi_ref) {
    if (!(params.alpha > 2.0 / 3.0))
        throw InvalidConfig("tilde_t: requires alpha > 2/3");
    const double kappa = params.tau_exponent();
    const double lo = params.xi_start;

    double acc = -params.tau * E * std::pow(lo, kappa);
    if (E == 0.0) return acc;

    // integrate the defect on doubling panels up to xi_ref
    auto f = [&](double s) { return phase_defect(beta(E, s, params)); };
    double a = lo;
    while (a < xi_ref) {
        const double b = std::min(2.0 * a, xi_ref);
        acc += integrate(f, a, b, 1e-13, 1e-16).value;
        a = b;
    }

    // analytic tail of the leading -beta^2/8 term beyond xi_ref
    const double p4 = 4.0 * params.alpha / (2.0 + params.alpha);  // > 1 for alpha > 2/3
    const double coef = E * E * std::pow(params.c, -2.0 * params.alpha) / 8.0;
    acc += -coef * std::pow(xi_ref, 1.0 - p4) / (p4 - 1.0);
    return acc;
}

double q_potential(double xi, double E, const std::function<double(double)>& V,
                   const ModelParams& params) {
    if (!(xi > 0.0)) throw InvalidConfig("q_potential: xi must be > 0");
    double q = params.xi2_coefficient() / (xi * xi) + beta(E, xi, params);
    if (V) q += V(xi);
    return q;
}

}  // namespace stark
