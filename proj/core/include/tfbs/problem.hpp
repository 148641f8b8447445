#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tfbs {

/// Market inputs of the option-pricing model.
struct MarketParams {
    double r;      // risk-free rate
    double sigma;  // volatility
    double T;      // expiry
};

/// Coefficients of the advection-diffusion-reaction form.
struct Coefficients {
    double a;      // diffusion, sigma^2/2
    double b;      // advection, r - a
    double c;      // reaction, r
    double alpha;  // fractional order in (0, 1]
};

Coefficients coefficients_from_market(const MarketParams& m, double alpha);

/// s = ln S. Rejects S <= 0.
double log_transform(double S);
/// eta = T - tau (time to expiry reversed).
double time_reverse(double tau, double T);

using SpaceFn = std::function<double(double)>;       // s -> value
using TimeFn = std::function<double(double)>;        // eta -> value
using FieldFn = std::function<double(double, double)>;  // (s, eta) -> value

/// A fully-specified solvable instance on [domain_lo, domain_hi] x [0, horizon].
struct ProblemSpec {
    std::string id;
    Coefficients coeffs;
    double domain_lo;
    double domain_hi;
    double horizon;
    TimeFn left_bc;
    TimeFn right_bc;
    SpaceFn initial;
    FieldFn source;
    std::optional<FieldFn> exact;

    void validate() const;  // invariants incl. initial/boundary compatibility
};

/// Manufactured-solution instance with exact (eta+1)^2 s^2 (1-s).
ProblemSpec example1(double alpha);
/// Manufactured-solution instance with exact (eta+1)^2 (s^3 + s^2 + 1),
/// non-homogeneous boundary data.
ProblemSpec example2(double alpha);
/// Call payoff max(e^s - K, 0), zero source; illustrative only, no exact solution.
ProblemSpec european_call_demo(double alpha, double strike = 1.0);

/// Registry keys: "example1", "example2", "european-call-demo".
/// "custom" instances are built from config by the io module.
ProblemSpec make_problem(const std::string& key, double alpha);
std::vector<std::string> problem_keys();

/// Analytic Caputo derivative of eta -> (eta+1)^2 of order alpha,
/// 2 eta^{2-alpha}/Gamma(3-alpha) + 2 eta^{1-alpha}/Gamma(2-alpha).
/// Independent oracle for the manufactured sources.
double caputo_eta_plus_one_squared(double eta, double alpha);

}  // namespace tfbs
