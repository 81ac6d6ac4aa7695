#pragma once

#include <functional>

namespace stark {

struct QuadResult {
    double value;
    double error_estimate;
    int evaluations;
};

// Adaptive Gauss-Kronrod (G7, K15) panel quadrature on [a, b].
// Stops when the summed error estimate is below rel_tol*|I| + abs_tol.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol = 1e-10, double abs_tol = 1e-14, int max_depth = 30);

// Single non-adaptive K15 panel (value + embedded error estimate).
QuadResult kronrod15(const std::function<double(double)>& f, double a, double b);

}  // namespace stark
