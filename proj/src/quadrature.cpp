#include "metricerr/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace metricerr {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
    double kronrod;
    double error;  // |K15 - G7|
};

PanelEstimate gauss_kronrod_15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double f_center = f(center);
    double kronrod = kKronrodWeights[7] * f_center;
    double gauss = kGaussWeights[3] * f_center;

    for (int i = 0; i < 7; ++i) {
        const double offset = half * kNodes[i];
        const double pair = f(center - offset) + f(center + offset);
        kronrod += kKronrodWeights[i] * pair;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return {kronrod, std::abs(kronrod - gauss)};
}

struct Panel {
    double a;
    double b;
    double tolerance;
    int depth;
};

}  // namespace

QuadratureResult integrate_split(const std::function<double(double)>& f, double a, double b,
                                 std::span<const double> breakpoints, double abs_tolerance,
                                 int max_depth) {
    if (!(b > a)) throw std::invalid_argument("integrate: empty interval");
    if (!(abs_tolerance > 0.0)) throw std::invalid_argument("integrate: tolerance must be > 0");

    std::vector<double> edges{a};
    for (double p : breakpoints) {
        if (p > a && p < b) edges.push_back(p);
    }
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());

    std::vector<Panel> stack;
    const double panel_tolerance = abs_tolerance / static_cast<double>(edges.size() - 1);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        stack.push_back({edges[i], edges[i + 1], panel_tolerance, 0});
    }

    QuadratureResult result;
    bool tolerance_met = true;
    while (!stack.empty()) {
        const Panel panel = stack.back();
        stack.pop_back();
        const auto estimate = gauss_kronrod_15(f, panel.a, panel.b);
        if (estimate.error <= panel.tolerance) {
            result.value += estimate.kronrod;
            result.error_bound += estimate.error;
            continue;
        }
        if (panel.depth >= max_depth) {
            result.value += estimate.kronrod;
            result.error_bound += estimate.error;
            tolerance_met = false;
            continue;
        }
        const double mid = 0.5 * (panel.a + panel.b);
        ++result.subdivisions;
        stack.push_back({panel.a, mid, 0.5 * panel.tolerance, panel.depth + 1});
        stack.push_back({mid, panel.b, 0.5 * panel.tolerance, panel.depth + 1});
    }

    if (!tolerance_met && result.error_bound > abs_tolerance) {
        throw std::runtime_error("integrate: tolerance " + std::to_string(abs_tolerance) +
                                 " unreachable at max depth " + std::to_string(max_depth) +
                                 "; achieved error bound " +
                                 std::to_string(result.error_bound));
    }
    return result;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tolerance, int max_depth) {
    return integrate_split(f, a, b, {}, abs_tolerance, max_depth);
}

}  // namespace metricerr
