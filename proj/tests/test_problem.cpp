#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tfbs/problem.hpp"
#include "tfbs/special.hpp"

namespace {

// Caputo derivative of u(tau) = (tau+1)^2 of order alpha, evaluated by
// composite Simpson after the substitution tau = eta - v^{1/(1-alpha)},
// which removes the endpoint singularity. Independent of the Gamma-ratio
// closed form under test.
double caputo_quadrature(double eta, double alpha) {
    // integrand after substitution: (1/Gamma(1-alpha)) * p * uprime(eta - v^p),
    // p = 1/(1-alpha), over v in [0, eta^{1/p}]
    const double p = 1.0 / (1.0 - alpha);
    const double upper = std::pow(eta, 1.0 / p);
    auto f = [&](double v) {
        const double tau = eta - std::pow(v, p);
        return 2.0 * (tau + 1.0);
    };
    const int n = 4000;  // even
    const double dv = upper / n;
    double sum = f(0.0) + f(upper);
    for (int i = 1; i < n; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(i * dv);
    return p * sum * dv / 3.0 / std::tgamma(1.0 - alpha);
}

}  // namespace

TEST_CASE("gamma_fn matches known values and rejects the left half-line") {
    CHECK(tfbs::gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
    CHECK(tfbs::gamma_fn(1.5) == doctest::Approx(0.8862269254527580).epsilon(1e-14));
    CHECK(tfbs::gamma_fn(2.5) == doctest::Approx(1.3293403881791370).epsilon(1e-14));
    CHECK(tfbs::gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    CHECK_THROWS_AS(tfbs::gamma_fn(0.0), std::invalid_argument);
    CHECK_THROWS_AS(tfbs::gamma_fn(-1.5), std::invalid_argument);
}

TEST_CASE("coefficients_from_market reference values") {
    const auto c = tfbs::coefficients_from_market({0.05, 0.25, 1.0}, 0.5);
    CHECK(c.a == doctest::Approx(0.03125).epsilon(1e-15));
    CHECK(c.b == doctest::Approx(0.01875).epsilon(1e-15));
    CHECK(c.c == doctest::Approx(0.05).epsilon(1e-15));
    CHECK(c.alpha == 0.5);
}

TEST_CASE("coefficients_from_market validation") {
    CHECK_THROWS_AS(tfbs::coefficients_from_market({0.05, 0.25, 1.0}, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(tfbs::coefficients_from_market({0.05, 0.25, 1.0}, 1.1),
                    std::invalid_argument);
    CHECK_THROWS_AS(tfbs::coefficients_from_market({-0.01, 0.25, 1.0}, 0.5),
                    std::invalid_argument);
    CHECK_THROWS_AS(tfbs::coefficients_from_market({0.05, 0.0, 1.0}, 0.5),
                    std::invalid_argument);  // a = sigma^2/2 degenerates
    CHECK_NOTHROW(tfbs::coefficients_from_market({0.05, 0.25, 1.0}, 1.0));
}

TEST_CASE("transforms") {
    CHECK(tfbs::log_transform(std::exp(1.0)) == doctest::Approx(1.0));
    CHECK_THROWS_AS(tfbs::log_transform(0.0), std::invalid_argument);
    CHECK_THROWS_AS(tfbs::log_transform(-1.0), std::invalid_argument);
    CHECK(tfbs::time_reverse(0.3, 1.0) == doctest::Approx(0.7));
    CHECK_THROWS_AS(tfbs::time_reverse(1.5, 1.0), std::invalid_argument);
}

TEST_CASE("analytic Caputo factor agrees with independent quadrature") {
    std::mt19937 rng(123);
    std::uniform_real_distribution<double> eta_d(0.05, 1.0);
    std::uniform_real_distribution<double> alpha_d(0.1, 0.95);
    for (int trial = 0; trial < 20; ++trial) {
        const double eta = eta_d(rng);
        const double alpha = alpha_d(rng);
        const double closed = tfbs::caputo_eta_plus_one_squared(eta, alpha);
        const double quad = caputo_quadrature(eta, alpha);
        CHECK(std::abs(closed - quad) < 1e-8 * (1.0 + std::abs(closed)));
    }
    CHECK(tfbs::caputo_eta_plus_one_squared(0.0, 0.5) == 0.0);
}

TEST_CASE("manufactured problems are internally consistent") {
    for (double alpha : {0.3, 0.5, 0.7, 0.9, 1.0}) {
        for (const auto& key : {"example1", "example2"}) {
            const auto p = tfbs::make_problem(key, alpha);
            CHECK_NOTHROW(p.validate());
            REQUIRE(p.exact.has_value());
            // exact at eta=0 coincides with the initial layer
            for (double s : {0.0, 0.25, 0.5, 0.75, 1.0})
                CHECK((*p.exact)(s, 0.0) == doctest::Approx(p.initial(s)).epsilon(1e-13));
            // exact on the boundary coincides with boundary data
            for (double eta : {0.0, 0.5, 1.0}) {
                CHECK((*p.exact)(p.domain_lo, eta) ==
                      doctest::Approx(p.left_bc(eta)).epsilon(1e-13));
                CHECK((*p.exact)(p.domain_hi, eta) ==
                      doctest::Approx(p.right_bc(eta)).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("manufactured source satisfies the PDE residual identity") {
    // Caputo[u] - a u_ss - b u_s + c u - f = 0 with u the exact solution;
    // spatial derivatives taken analytically for u = (eta+1)^2 g(s).
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> s_d(0.0, 1.0), eta_d(0.05, 1.0);
    for (const auto& key : {"example1", "example2"}) {
        for (double alpha : {0.3, 0.7}) {
            const auto p = tfbs::make_problem(key, alpha);
            const bool ex1 = std::string(key) == "example1";
            auto g = [&](double s) {
                return ex1 ? s * s * (1.0 - s) : s * s * s + s * s + 1.0;
            };
            auto gp = [&](double s) { return ex1 ? 2.0 * s - 3.0 * s * s : 3.0 * s * s + 2.0 * s; };
            auto gpp = [&](double s) { return ex1 ? 2.0 - 6.0 * s : 6.0 * s + 2.0; };
            for (int trial = 0; trial < 20; ++trial) {
                const double s = s_d(rng), eta = eta_d(rng);
                const double t2 = (eta + 1.0) * (eta + 1.0);
                const double caputo = tfbs::caputo_eta_plus_one_squared(eta, alpha) * g(s);
                const double spatial = p.coeffs.a * t2 * gpp(s) + p.coeffs.b * t2 * gp(s) -
                                       p.coeffs.c * t2 * g(s);
                const double residual = caputo - spatial - p.source(s, eta);
                CHECK(std::abs(residual) < 1e-10);
            }
        }
    }
}

TEST_CASE("payoff demo has no exact solution and consistent data") {
    const auto p = tfbs::european_call_demo(0.5);
    CHECK_NOTHROW(p.validate());
    CHECK_FALSE(p.exact.has_value());
    CHECK(p.initial(0.0) == doctest::Approx(0.0));  // at the strike, payoff is 0
    CHECK(p.initial(1.0) == doctest::Approx(std::exp(1.0) - 1.0));
}

TEST_CASE("registry") {
    CHECK_THROWS_AS(tfbs::make_problem("no-such-problem", 0.5), std::invalid_argument);
    const auto keys = tfbs::problem_keys();
    CHECK(keys.size() == 4);
}

TEST_CASE("validate rejects incompatible corner data") {
    auto p = tfbs::example1(0.5);
    p.left_bc = [](double) { return 1.0; };  // initial(0) = 0 != 1
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}
