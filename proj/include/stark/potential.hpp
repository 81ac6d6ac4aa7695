#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stark/phase.hpp"

#include <json.hpp>

namespace stark {

enum class Mode { Thm13, Thm15 };

std::string mode_name(Mode m);
Mode mode_from_name(const std::string& s);

// One target eigenvalue with its potential phase, optional activation cutoff
// (Thm15 mode) and optional prescribed boundary angle.
struct EnergyLevel {
    double E = 0.0;
    double t = 0.0;  // phase in [0, pi)
    std::optional<double> a_cut;
    std::optional<double> theta_bc;
};

// Generalized Wigner-von Neumann potential
//   V(xi) = (4a/xi) sum_j sin(2 Phi_{E_j}(xi) + 2 t_j) [xi >= a_j]
// active above max(1, xi_start), plus optional boundary-matching bumps
// supported on (1, 2). Immutable after construction; evaluation is pure.
class PotentialSpec {
  public:
    PotentialSpec(Mode mode, double a, std::vector<EnergyLevel> levels,
                  ModelParams params, double xi_table_max);

    Mode mode() const { return mode_; }
    double amplitude() const { return a_; }
    int n_levels() const { return static_cast<int>(levels_.size()); }
    const std::vector<EnergyLevel>& levels() const { return levels_; }
    const ModelParams& params() const { return params_; }
    const PhaseTable& table(int j) const { return *tables_[j]; }
    double active_start() const;
    double xi_table_max() const { return xi_table_max_; }

    double eval_V(double xi) const;
    double eval_q(double x) const;

    // 2 Phi_{E_j}(xi) + 2 t_j
    double level_phase(int j, double xi) const;

    // boundary-matching bump amplitudes, one slot per level
    const std::vector<double>& kappas() const { return kappas_; }
    PotentialSpec with_kappa(int j, double kappa) const;

    // 2(2+alpha)a - (2-alpha); positive by the amplitude constraint
    double epsilon() const;
    // Thm13: 48(2-alpha) sqrt(N ln N); Thm15: 2(2+alpha) a N
    double theorem_bound() const;

    nlohmann::json to_json() const;
    static PotentialSpec from_json(const nlohmann::json& j);

  private:
    Mode mode_;
    double a_;
    std::vector<EnergyLevel> levels_;
    ModelParams params_;
    double xi_table_max_;
    std::vector<double> kappas_;
    std::vector<PhaseTablePtr> tables_;
};

// C2 bump on (1, 2), unit mass: 140 (xi-1)^3 (2-xi)^3.
double matching_bump(double xi);

struct Thm13Options {
    double a = 0.0;  // 0 -> the default (2-alpha)/(2+alpha)
    double xi_table_max = 2e5;
    double tol_ode = 1e-10;
    double tol_quad = 1e-10;
};

// Phases come from the minimax search: theta_j in [0,1) for frequencies j/N.
// The built levels carry E_j = j/(N tau) and t_j = (pi theta_j - tilde_t_j) mod pi,
// which aligns the potential's combined phase with the searched one.
PotentialSpec build_thm13_spec(int N, double alpha, const std::vector<double>& theta,
                               const Thm13Options& opts = {});

struct Thm15Options {
    double xi_table_max = 2e5;
    double tol_ode = 1e-10;
    double tol_quad = 1e-10;
};

// Arbitrary distinct energies; default cutoffs a_j = xi_start * 2^j.
PotentialSpec build_thm15_spec(std::vector<EnergyLevel> levels, double a, double alpha,
                               const Thm15Options& opts = {});

// Sup of xi |V(xi)| (resp. x^(1-alpha/2) |q(x)|) over a dense grid, refined
// until two refinements agree within 0.5%.
struct SupEstimate {
    double value = 0.0;
    bool converged = false;
    int refinements = 0;
    double oscillations = 0.0;
    bool window_warning = false;  // fewer than 100 oscillations
};
SupEstimate tail_sup_xi(const PotentialSpec& spec, double xi_lo, double xi_hi,
                        int initial_grid = 1 << 15);
SupEstimate tail_sup_x(const PotentialSpec& spec, double x_lo, double x_hi,
                       int initial_grid = 1 << 15);

}  // namespace stark
