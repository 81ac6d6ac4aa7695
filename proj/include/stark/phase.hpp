#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "stark/model.hpp"

namespace stark {

// Accumulated WKB phase Phi_E(xi) = xi_start + int_{xi_start}^xi sqrt(1 - beta_E) ds,
// tabulated once per (E, params) on log-spaced nodes and interpolated with a
// quintic Hermite (exact first and second derivatives at the nodes), so that
// evaluation during ODE stepping is O(1). Read-only after construction.
class PhaseTable {
  public:
    PhaseTable(const ModelParams& params, double E, double xi_max);

    double value(double xi) const;  // Phi_E(xi)
    double deriv(double xi) const;  // sqrt(1 - beta_E(xi)), exact

    double energy() const { return E_; }
    double xi_min() const { return nodes_.front(); }
    double xi_max() const { return nodes_.back(); }
    const ModelParams& params() const { return params_; }

  private:
    ModelParams params_;
    double E_;
    double log_ratio_;
    std::vector<double> nodes_;
    std::vector<double> phi_;      // prefix values at nodes
    std::vector<double> coeff_;    // 6 quintic coefficients per segment
    int locate(double xi) const;
};

using PhaseTablePtr = std::shared_ptr<const PhaseTable>;

// Constant term of the large-xi expansion
//   Phi_E(xi) = xi + tau E xi^((2-alpha)/(2+alpha)) + tilde_t + O(xi^(1-4alpha/(2+alpha))).
// Exists for alpha > 2/3; integrates the O(beta^2) defect up to xi_ref and
// adds the leading tail analytically.
double tilde_t(const ModelParams& params, double E, double xi_ref = 1e6);

// Transformed potential Q(xi, E) = C_alpha/xi^2 + beta_E(xi) + V(xi) with the
// exact 1/xi^2 coefficient carried, not absorbed.
double q_potential(double xi, double E, const std::function<double(double)>& V,
                   const ModelParams& params);

}  // namespace stark
