#include "tfbs/l1.hpp"

#include <cmath>
#include <stdexcept>

#include "tfbs/special.hpp"

namespace tfbs {

L1Weights l1_weights(double alpha, int N, double dt) {
    if (!(alpha > 0.0) || alpha > 1.0) throw std::invalid_argument("l1_weights: alpha must be in (0, 1]");
    if (N < 1) throw std::invalid_argument("l1_weights: N must be at least 1");
    if (!(dt > 0.0)) throw std::invalid_argument("l1_weights: dt must be positive");
    L1Weights w;
    w.alpha = alpha;
    w.delta.resize(N + 1);
    const double e = 1.0 - alpha;
    // p^e at p = 0 is taken as 0 (std::pow(0, 0) would give 1 at alpha = 1)
    w.delta[0] = 1.0;
    for (int p = 1; p <= N; ++p)
        w.delta[p] = std::pow(p + 1.0, e) - std::pow(static_cast<double>(p), e);
    w.d = std::pow(dt, alpha) * gamma_fn(2.0 - alpha);
    return w;
}

std::vector<double> history_rhs(const std::vector<std::vector<double>>& history,
                                const L1Weights& w, int k, bool verbatim_u0) {
    if (k < 0 || static_cast<std::size_t>(k) >= history.size())
        throw std::invalid_argument("history_rhs: step index exceeds stored history");
    if (k == 0) return history[0];
    if (static_cast<std::size_t>(k) >= w.delta.size())
        throw std::invalid_argument("history_rhs: step index exceeds weight table");
    const std::size_t n = history[0].size();
    const double u0_coeff = verbatim_u0 ? 1.0 : w.delta[k];
    std::vector<double> rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = u0_coeff * history[0][i];
    for (int p = 0; p < k; ++p) {
        const double cf = w.delta[p] - w.delta[p + 1];
        const std::vector<double>& u = history[k - p];
        for (std::size_t i = 0; i < n; ++i) rhs[i] += cf * u[i];
    }
    return rhs;
}

}  // namespace tfbs
