#pragma once

#include <functional>
#include <span>

namespace metricerr {

struct QuadratureResult {
    double value = 0.0;
    double error_bound = 0.0;  // accumulated interval error estimate
    int subdivisions = 0;      // number of bisections performed
};

// Adaptive Gauss-Kronrod (G7, K15) integration of f over [a, b] with pairwise
// bisection until every interval's |K15 - G7| estimate fits its share of
// abs_tolerance. Throws std::runtime_error naming the achieved bound when
// max_depth is hit before the tolerance is met.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tolerance, int max_depth);

// Same, but the domain is pre-split at the given breakpoints (sorted, each
// inside (a, b) entries outside are ignored). Use for integrands with kinks.
QuadratureResult integrate_split(const std::function<double(double)>& f, double a, double b,
                                 std::span<const double> breakpoints, double abs_tolerance,
                                 int max_depth);

}  // namespace metricerr
