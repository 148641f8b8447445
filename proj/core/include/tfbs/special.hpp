#pragma once

namespace tfbs {

/// Gamma function for positive arguments. Rejects z <= 0.
double gamma_fn(double z);

}  // namespace tfbs
