#include "stark/quadrature.hpp"

#include <cmath>
#include <vector>

namespace stark {
namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK values).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

}  // namespace

QuadResult kronrod15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(mid);
    double result_g = fc * kWg[3];
    double result_k = fc * kWgk[7];

    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double fsum = f(mid - dx) + f(mid + dx);
        result_k += kWgk[j] * fsum;
        if (j % 2 == 1)  // nodes 1, 3, 5 are the Gauss nodes
            result_g += kWg[j / 2] * fsum;
    }
    result_g *= half;
    result_k *= half;

    // conservative: the K15 value is far more accurate than |K-G| suggests
    return {result_k, std::fabs(result_k - result_g), 15};
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol, double abs_tol, int max_depth) {
    if (a == b) return {0.0, 0.0, 0};

    struct Panel {
        double a, b, value, err;
        int depth;
    };

    QuadResult first = kronrod15(f, a, b);
    std::vector<Panel> active{{a, b, first.value, first.error_estimate, 0}};
    double total = first.value;
    double total_err = first.error_estimate;
    int evals = first.evaluations;

    while (total_err > rel_tol * std::fabs(total) + abs_tol) {
        // split the worst panel
        std::size_t worst = 0;
        for (std::size_t i = 1; i < active.size(); ++i)
            if (active[i].err > active[worst].err) worst = i;
        Panel p = active[worst];
        if (p.depth >= max_depth) break;  // refinement saturated; report what we have

        const double mid = 0.5 * (p.a + p.b);
        QuadResult left = kronrod15(f, p.a, mid);
        QuadResult right = kronrod15(f, mid, p.b);
        evals += 30;

        total += left.value + right.value - p.value;
        total_err += left.error_estimate + right.error_estimate - p.err;

        active[worst] = {p.a, mid, left.value, left.error_estimate, p.depth + 1};
        active.push_back({mid, p.b, right.value, right.error_estimate, p.depth + 1});
    }

    return {total, total_err, evals};
}

}  // namespace stark
