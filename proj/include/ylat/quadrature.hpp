#pragma once

#include <functional>

#include "ylat/rational.hpp"

namespace ylat {

struct QuadratureError : Error {
    using Error::Error;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int segments = 0;
};

/// Adaptive Gauss-Kronrod 7/15 bisection on [a, b]. The integrand is never
/// evaluated at the endpoints, so integrable endpoint singularities are
/// tolerated. Throws QuadratureError when the segment budget is exhausted
/// before the error estimate drops below abs_tol.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, int max_segments = 4000);

}  // namespace ylat
