#include "tfbs/problem.hpp"

#include <cmath>
#include <stdexcept>

#include "tfbs/special.hpp"

namespace tfbs {

Coefficients coefficients_from_market(const MarketParams& m, double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::invalid_argument("coefficients_from_market: alpha must be in (0, 1]");
    if (!(m.r > 0.0)) throw std::invalid_argument("coefficients_from_market: r must be positive");
    if (m.sigma < 0.0) throw std::invalid_argument("coefficients_from_market: sigma must be nonnegative");
    if (!(m.T > 0.0)) throw std::invalid_argument("coefficients_from_market: T must be positive");
    const double a = 0.5 * m.sigma * m.sigma;
    if (!(a > 0.0))
        throw std::invalid_argument("coefficients_from_market: diffusion a = sigma^2/2 must be positive");
    return Coefficients{a, m.r - a, m.r, alpha};
}

double log_transform(double S) {
    if (!(S > 0.0)) throw std::invalid_argument("log_transform: asset price must be positive");
    return std::log(S);
}

double time_reverse(double tau, double T) {
    if (tau < 0.0 || tau > T) throw std::invalid_argument("time_reverse: tau outside [0, T]");
    return T - tau;
}

void ProblemSpec::validate() const {
    if (!(coeffs.a > 0.0)) throw std::invalid_argument(id + ": diffusion coefficient must be positive");
    if (!(coeffs.c > 0.0)) throw std::invalid_argument(id + ": reaction coefficient must be positive");
    if (!(coeffs.alpha > 0.0) || coeffs.alpha > 1.0)
        throw std::invalid_argument(id + ": alpha must be in (0, 1]");
    if (!(domain_lo < domain_hi)) throw std::invalid_argument(id + ": empty spatial domain");
    if (!(horizon > 0.0)) throw std::invalid_argument(id + ": horizon must be positive");
    if (std::abs(initial(domain_lo) - left_bc(0.0)) > 1e-12 ||
        std::abs(initial(domain_hi) - right_bc(0.0)) > 1e-12)
        throw std::invalid_argument(id + ": initial data incompatible with boundary data at eta=0");
}

double caputo_eta_plus_one_squared(double eta, double alpha) {
    if (eta == 0.0) return 0.0;
    return 2.0 * std::pow(eta, 2.0 - alpha) / gamma_fn(3.0 - alpha) +
           2.0 * std::pow(eta, 1.0 - alpha) / gamma_fn(2.0 - alpha);
}

ProblemSpec example1(double alpha) {
    const MarketParams m{0.05, 0.25, 1.0};
    const Coefficients co = coefficients_from_market(m, alpha);
    const double a = co.a, b = co.b, c = co.c;
    ProblemSpec p;
    p.id = "example1";
    p.coeffs = co;
    p.domain_lo = 0.0;
    p.domain_hi = 1.0;
    p.horizon = 1.0;
    p.left_bc = [](double) { return 0.0; };
    p.right_bc = [](double) { return 0.0; };
    p.initial = [](double s) { return s * s * (1.0 - s); };
    p.source = [a, b, c, alpha](double s, double eta) {
        const double g = s * s * (1.0 - s);
        const double spatial = a * (2.0 - 6.0 * s) + b * (2.0 * s - 3.0 * s * s) - c * g;
        return caputo_eta_plus_one_squared(eta, alpha) * g - (eta + 1.0) * (eta + 1.0) * spatial;
    };
    p.exact = [](double s, double eta) {
        return (eta + 1.0) * (eta + 1.0) * s * s * (1.0 - s);
    };
    return p;
}

ProblemSpec example2(double alpha) {
    // a = 1 is set directly (no sigma consistent with it); b = r - a, c = r.
    const double r = 0.5, a = 1.0, b = r - a, c = r;
    ProblemSpec p;
    p.id = "example2";
    p.coeffs = Coefficients{a, b, c, alpha};
    p.domain_lo = 0.0;
    p.domain_hi = 1.0;
    p.horizon = 1.0;
    p.left_bc = [](double eta) { return (eta + 1.0) * (eta + 1.0); };
    p.right_bc = [](double eta) { return 3.0 * (eta + 1.0) * (eta + 1.0); };
    p.initial = [](double s) { return s * s * s + s * s + 1.0; };
    p.source = [a, b, c, alpha](double s, double eta) {
        const double g = s * s * s + s * s + 1.0;
        const double spatial = a * (6.0 * s + 2.0) + b * (2.0 * s + 3.0 * s * s) - c * g;
        return caputo_eta_plus_one_squared(eta, alpha) * g - (eta + 1.0) * (eta + 1.0) * spatial;
    };
    p.exact = [](double s, double eta) {
        return (eta + 1.0) * (eta + 1.0) * (s * s * s + s * s + 1.0);
    };
    return p;
}

ProblemSpec european_call_demo(double alpha, double strike) {
    const MarketParams m{0.05, 0.25, 1.0};
    const Coefficients co = coefficients_from_market(m, alpha);
    ProblemSpec p;
    p.id = "european-call-demo";
    p.coeffs = co;
    // log-price window around the strike
    p.domain_lo = std::log(strike) - 2.0;
    p.domain_hi = std::log(strike) + 2.0;
    p.horizon = m.T;
    const double lo = p.domain_lo, hi = p.domain_hi;
    p.left_bc = [strike, lo](double) { return std::max(std::exp(lo) - strike, 0.0); };
    p.right_bc = [strike, hi](double) { return std::max(std::exp(hi) - strike, 0.0); };
    p.initial = [strike](double s) { return std::max(std::exp(s) - strike, 0.0); };
    p.source = [](double, double) { return 0.0; };
    p.exact = std::nullopt;
    return p;
}

ProblemSpec make_problem(const std::string& key, double alpha) {
    if (key == "example1") return example1(alpha);
    if (key == "example2") return example2(alpha);
    if (key == "european-call-demo") return european_call_demo(alpha);
    throw std::invalid_argument("unknown problem key: " + key);
}

std::vector<std::string> problem_keys() {
    return {"example1", "example2", "european-call-demo", "custom"};
}

}  // namespace tfbs
