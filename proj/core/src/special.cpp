#include "tfbs/special.hpp"

#include <cmath>
#include <stdexcept>

namespace tfbs {

double gamma_fn(double z) {
    if (!(z > 0.0)) throw std::invalid_argument("gamma_fn: argument must be positive");
    return std::tgamma(z);
}

}  // namespace tfbs
