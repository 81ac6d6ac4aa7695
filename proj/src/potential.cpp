#include "stark/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace stark {

std::string mode_name(Mode m) { return m == Mode::Thm13 ? "thm13" : "thm15"; }

Mode mode_from_name(const std::string& s) {
    if (s == "thm13") return Mode::Thm13;
    if (s == "thm15") return Mode::Thm15;
    throw InvalidConfig("unknown mode: " + s);
}

double matching_bump(double xi) {
    if (xi <= 1.0 || xi >= 2.0) return 0.0;
    const double u = xi - 1.0, v = 2.0 - xi;
    return 140.0 * u * u * u * v * v * v;
}

PotentialSpec::PotentialSpec(Mode mode, double a, std::vector<EnergyLevel> levels,
                             ModelParams params, double xi_table_max)
    : mode_(mode), a_(a), levels_(std::move(levels)), params_(params),
      xi_table_max_(xi_table_max), kappas_(levels_.size(), 0.0) {
    if (levels_.empty()) throw InvalidConfig("PotentialSpec: at least one level required");
    if (!(a_ > 0.0)) throw InvalidConfig("PotentialSpec: amplitude must be positive");
    const double amin = (2.0 - params_.alpha) / (2.0 * (2.0 + params_.alpha));
    if (!(a_ > amin))
        throw InvalidConfig("PotentialSpec: amplitude must exceed (2-alpha)/(2(2+alpha))");

    std::set<double> seen;
    for (const auto& lv : levels_) {
        if (!seen.insert(lv.E).second)
            throw InvalidConfig("PotentialSpec: energies must be pairwise distinct");
        if (mode_ == Mode::Thm15 && lv.a_cut && std::isfinite(*lv.a_cut) &&
            *lv.a_cut < params_.xi_start)
            throw InvalidConfig("PotentialSpec: cutoff below xi_start");
    }

    tables_.reserve(levels_.size());
    for (const auto& lv : levels_)
        tables_.push_back(std::make_shared<PhaseTable>(params_, lv.E, xi_table_max_));
}

double PotentialSpec::active_start() const { return std::max(1.0, params_.xi_start); }

double PotentialSpec::level_phase(int j, double xi) const {
    return 2.0 * tables_[j]->value(xi) + 2.0 * levels_[j].t;
}

double PotentialSpec::eval_V(double xi) const {
    if (xi < 0.0) throw InvalidConfig("eval_V: xi must be >= 0");
    double v = 0.0;
    if (xi > active_start()) {
        double s = 0.0;
        for (std::size_t j = 0; j < levels_.size(); ++j) {
            if (mode_ == Mode::Thm15 && levels_[j].a_cut && xi < *levels_[j].a_cut) continue;
            s += std::sin(level_phase(static_cast<int>(j), xi));
        }
        v = 4.0 * a_ / xi * s;
    }
    for (double k : kappas_)
        if (k != 0.0) v += k * matching_bump(xi);
    return v;
}

double PotentialSpec::eval_q(double x) const {
    if (x < 0.0) throw InvalidConfig("eval_q: x must be >= 0");
    if (x == 0.0) return 0.0;
    const double xi = forward_map(x, params_);
    if (xi <= active_start() && std::none_of(kappas_.begin(), kappas_.end(),
                                             [](double k) { return k != 0.0; }))
        return 0.0;
    return std::pow(x, params_.alpha) * eval_V(xi);
}

PotentialSpec PotentialSpec::with_kappa(int j, double kappa) const {
    PotentialSpec out = *this;
    out.kappas_.at(j) = kappa;
    return out;
}

double PotentialSpec::epsilon() const {
    return 2.0 * (2.0 + params_.alpha) * a_ - (2.0 - params_.alpha);
}

double PotentialSpec::theorem_bound() const {
    const double alpha = params_.alpha;
    const double N = static_cast<double>(levels_.size());
    if (mode_ == Mode::Thm13)
        return 48.0 * (2.0 - alpha) * std::sqrt(N * std::log(N));
    return 2.0 * (2.0 + alpha) * a_ * N;
}

nlohmann::json PotentialSpec::to_json() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["mode"] = mode_name(mode_);
    j["alpha"] = params_.alpha;
    j["a"] = a_;
    j["xi_start"] = params_.xi_start;
    j["tol_ode"] = params_.tol_ode;
    j["tol_quad"] = params_.tol_quad;
    j["xi_table_max"] = xi_table_max_;
    j["levels"] = nlohmann::json::array();
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        nlohmann::json lj;
        lj["E"] = levels_[i].E;
        lj["t"] = levels_[i].t;
        if (levels_[i].a_cut) {
            if (std::isfinite(*levels_[i].a_cut))
                lj["a_cut"] = *levels_[i].a_cut;
            else
                lj["a_cut"] = "inf";
        }
        if (levels_[i].theta_bc) lj["theta_bc"] = *levels_[i].theta_bc;
        if (kappas_[i] != 0.0) lj["kappa"] = kappas_[i];
        j["levels"].push_back(lj);
    }
    return j;
}

PotentialSpec PotentialSpec::from_json(const nlohmann::json& j) {
    ModelParams params(j.at("alpha").get<double>(), j.at("xi_start").get<double>(),
                       j.value("tol_ode", 1e-10), j.value("tol_quad", 1e-10));
    std::vector<EnergyLevel> levels;
    std::vector<double> kappas;
    for (const auto& lj : j.at("levels")) {
        EnergyLevel lv;
        lv.E = lj.at("E").get<double>();
        lv.t = lj.value("t", 0.0);
        if (lj.contains("a_cut")) {
            if (lj["a_cut"].is_string())
                lv.a_cut = std::numeric_limits<double>::infinity();
            else
                lv.a_cut = lj["a_cut"].get<double>();
        }
        if (lj.contains("theta_bc")) lv.theta_bc = lj["theta_bc"].get<double>();
        kappas.push_back(lj.value("kappa", 0.0));
        levels.push_back(lv);
    }
    PotentialSpec spec(mode_from_name(j.at("mode").get<std::string>()),
                       j.at("a").get<double>(), std::move(levels), params,
                       j.value("xi_table_max", 2e5));
    for (std::size_t i = 0; i < kappas.size(); ++i)
        if (kappas[i] != 0.0) spec = spec.with_kappa(static_cast<int>(i), kappas[i]);
    return spec;
}

PotentialSpec build_thm13_spec(int N, double alpha, const std::vector<double>& theta,
                               const Thm13Options& opts) {
    if (N < 2)
        throw InvalidConfig("build_thm13_spec: N must be >= 2 (use thm15 mode for N = 1)");
    if (!(alpha > 2.0 / 3.0) || !(alpha < 2.0))
        throw InvalidConfig("build_thm13_spec: alpha must lie in (2/3, 2)");
    if (static_cast<int>(theta.size()) != N)
        throw InvalidConfig("build_thm13_spec: need exactly N phases");

    double a = opts.a > 0.0 ? opts.a : (2.0 - alpha) / (2.0 + alpha);

    ModelParams probe(alpha);
    std::vector<double> energies(N);
    for (int j = 1; j <= N; ++j) energies[j - 1] = j / (N * probe.tau);
    ModelParams params(alpha, std::max(1.0, default_xi_start(alpha, energies)),
                       opts.tol_ode, opts.tol_quad);

    constexpr double kPi = 3.14159265358979323846;
    std::vector<EnergyLevel> levels(N);
    for (int j = 0; j < N; ++j) {
        levels[j].E = energies[j];
        const double tt = tilde_t(params, energies[j]);
        double t = std::fmod(kPi * theta[j] - tt, kPi);
        if (t < 0.0) t += kPi;
        levels[j].t = t;
    }
    return PotentialSpec(Mode::Thm13, a, std::move(levels), params, opts.xi_table_max);
}

PotentialSpec build_thm15_spec(std::vector<EnergyLevel> levels, double a, double alpha,
                               const Thm15Options& opts) {
    if (levels.empty()) throw InvalidConfig("build_thm15_spec: need at least one level");
    std::vector<double> energies;
    for (const auto& lv : levels) energies.push_back(lv.E);
    ModelParams params(alpha, std::max(1.0, default_xi_start(alpha, energies)),
                       opts.tol_ode, opts.tol_quad);
    for (std::size_t j = 0; j < levels.size(); ++j) {
        if (!levels[j].a_cut)
            levels[j].a_cut = params.xi_start * std::pow(2.0, static_cast<double>(j + 1));
    }
    return PotentialSpec(Mode::Thm15, a, std::move(levels), params, opts.xi_table_max);
}

namespace {

SupEstimate dense_sup(const std::function<double(double)>& f, double lo, double hi,
                      int initial_grid) {
    SupEstimate est;
    est.oscillations = (hi - lo) / 3.14159265358979323846;
    est.window_warning = est.oscillations < 100.0;

    int n = std::max(initial_grid, 1024);
    double prev = -1.0;
    for (int pass = 0; pass < 8; ++pass) {
        double sup = 0.0;
        const double step = (hi - lo) / n;
        for (int i = 0; i <= n; ++i) sup = std::max(sup, f(lo + step * i));
        est.value = sup;
        est.refinements = pass + 1;
        if (prev > 0.0 && std::fabs(sup - prev) <= 0.005 * sup) {
            est.converged = true;
            break;
        }
        prev = sup;
        n *= 2;
    }
    return est;
}

}  // namespace

SupEstimate tail_sup_xi(const PotentialSpec& spec, double xi_lo, double xi_hi,
                        int initial_grid) {
    if (!(xi_lo >= spec.active_start()))
        throw InvalidConfig("tail_sup_xi: window must start inside the active region");
    return dense_sup([&](double xi) { return xi * std::fabs(spec.eval_V(xi)); },
                     xi_lo, xi_hi, initial_grid);
}

SupEstimate tail_sup_x(const PotentialSpec& spec, double x_lo, double x_hi,
                       int initial_grid) {
    const double e = 1.0 - 0.5 * spec.params().alpha;
    // sample uniformly in xi so the oscillation stays resolved at large x
    const double xi_lo = forward_map(x_lo, spec.params());
    const double xi_hi = forward_map(x_hi, spec.params());
    if (!(xi_lo >= spec.active_start()))
        throw InvalidConfig("tail_sup_x: window must start inside the active region");
    return dense_sup(
        [&](double xi) {
            const double x = inverse_map(xi, spec.params());
            return std::pow(x, e) * std::fabs(spec.eval_q(x));
        },
        xi_lo, xi_hi, initial_grid);
}

}  // namespace stark
