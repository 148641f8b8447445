#pragma once

#include <vector>

namespace tfbs {

/// L1 coefficients delta_p = (p+1)^{1-alpha} - p^{1-alpha} and the scale
/// d = dt^alpha * Gamma(2-alpha).
struct L1Weights {
    double alpha;
    std::vector<double> delta;  // delta_0 .. delta_N
    double d;
};

L1Weights l1_weights(double alpha, int N, double dt);

/// Memory term of the implicit step k -> k+1:
///   sum_{p=0}^{k-1} (delta_p - delta_{p+1}) U^{k-p} + delta_k U^0
/// (U^0 alone for k = 0). With verbatim_u0 the delta_k factor on U^0 is
/// dropped, matching the printed recursion; that variant does not preserve
/// constant histories.
std::vector<double> history_rhs(const std::vector<std::vector<double>>& history,
                                const L1Weights& w, int k, bool verbatim_u0 = false);

}  // namespace tfbs
