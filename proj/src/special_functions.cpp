#include "metricerr/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace metricerr {

namespace {

void require_finite(double x, const char* fn) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument(std::string(fn) + ": non-finite input");
    }
}

// Rational minimax coefficients from Cody's SPECFUN CALERF. Three regimes:
// |x| <= 0.46875 (erf directly), 0.46875 < |x| <= 4 and |x| > 4 (erfc with
// the exp(-x^2) factor split as exp(-ysq^2) * exp(-(x-ysq)(x+ysq)), ysq the
// argument truncated to 1/16, which preserves relative accuracy of the
// exponential).
constexpr double kA[5] = {3.1611237438705656, 113.864154151050156, 377.485237685302021,
                          3209.37758913846947, 0.185777706184603153};
constexpr double kB[4] = {23.6012909523441209, 244.024637934444173, 1282.61652607737228,
                          2844.23683343917062};
constexpr double kC[9] = {0.564188496988670089, 8.88314979438837594, 66.1191906371416295,
                          298.635138197400131,  881.95222124176909,  1712.04761263407058,
                          2051.07837782607147,  1230.33935479799725, 2.15311535474403846e-8};
constexpr double kD[8] = {15.7449261107098347, 117.693950891312499, 537.181101862009858,
                          1621.38957456669019, 3290.79923573345963, 4362.61909014324716,
                          3439.36767414372164, 1230.33935480374942};
constexpr double kP[6] = {0.305326634961232344, 0.360344899949804439, 0.125781726111229246,
                          0.0160837851487422766, 6.58749161529837803e-4, 0.0163153871373020978};
constexpr double kQ[5] = {2.56852019228982242, 1.87295284992346047, 0.527905102951428412,
                          0.0605183413124413191, 0.00233520497626869185};

constexpr double kInvSqrtPi = 0.56418958354775628695;
constexpr double kThresh = 0.46875;
constexpr double kXSmall = 1.11e-16;
constexpr double kXBig = 26.543;  // erfc underflows past this

double erf_small(double x) {
    // |x| <= 0.46875
    const double ysq = std::abs(x) > kXSmall ? x * x : 0.0;
    double xnum = kA[4] * ysq;
    double xden = ysq;
    for (int i = 0; i < 3; ++i) {
        xnum = (xnum + kA[i]) * ysq;
        xden = (xden + kB[i]) * ysq;
    }
    return x * (xnum + kA[3]) / (xden + kB[3]);
}

double scaled_exp_neg_sq(double y) {
    // exp(-y^2) with the truncation split that keeps relative accuracy.
    const double ysq = std::trunc(y * 16.0) / 16.0;
    const double del = (y - ysq) * (y + ysq);
    return std::exp(-ysq * ysq) * std::exp(-del);
}

double erfc_positive(double y) {
    // erfc(y) for y > 0.46875
    if (y >= kXBig) return 0.0;
    if (y <= 4.0) {
        double xnum = kC[8] * y;
        double xden = y;
        for (int i = 0; i < 7; ++i) {
            xnum = (xnum + kC[i]) * y;
            xden = (xden + kD[i]) * y;
        }
        return scaled_exp_neg_sq(y) * (xnum + kC[7]) / (xden + kD[7]);
    }
    const double ysq = 1.0 / (y * y);
    double xnum = kP[5] * ysq;
    double xden = ysq;
    for (int i = 0; i < 4; ++i) {
        xnum = (xnum + kP[i]) * ysq;
        xden = (xden + kQ[i]) * ysq;
    }
    double r = ysq * (xnum + kP[4]) / (xden + kQ[4]);
    r = (kInvSqrtPi - r) / y;
    return scaled_exp_neg_sq(y) * r;
}

}  // namespace

double erf(double x) {
    require_finite(x, "erf");
    const double y = std::abs(x);
    if (y <= kThresh) return erf_small(x);
    const double r = 1.0 - erfc_positive(y);
    return x < 0.0 ? -r : r;
}

double erfc(double x) {
    require_finite(x, "erfc");
    const double y = std::abs(x);
    if (y <= kThresh) return 1.0 - erf_small(x);
    const double r = erfc_positive(y);
    return x < 0.0 ? 2.0 - r : r;
}

double normal_cdf(double x) {
    require_finite(x, "normal_cdf");
    return 0.5 * erfc(-x / std::sqrt(2.0));
}

namespace {

void require_valid(const FoldedNormalParams& p, const char* fn) {
    if (!std::isfinite(p.mu)) {
        throw std::invalid_argument(std::string(fn) + ": mu must be finite");
    }
    if (!std::isfinite(p.sigma) || p.sigma <= 0.0) {
        throw std::invalid_argument(std::string(fn) + ": sigma must be finite and > 0");
    }
}

}  // namespace

double folded_normal_mean(const FoldedNormalParams& p) {
    require_valid(p, "folded_normal_mean");
    const double t = p.mu / (std::sqrt(2.0) * p.sigma);
    constexpr double kSqrt2OverPi = 0.7978845608028653558798921198687637;
    return p.sigma * kSqrt2OverPi * std::exp(-t * t) + p.mu * erf(t);
}

double folded_normal_variance(const FoldedNormalParams& p) {
    require_valid(p, "folded_normal_variance");
    const double m = folded_normal_mean(p);
    const double v = p.mu * p.mu + p.sigma * p.sigma - m * m;
    if (v >= 0.0) return v;
    const double floor = -1e-12 * p.sigma * p.sigma;
    if (v >= floor) return 0.0;
    throw std::runtime_error("folded_normal_variance: cancellation produced variance " +
                             std::to_string(v) + " below the rounding floor");
}

namespace {

void require_valid(const NoncentralChiSquareParams& p, const char* fn) {
    if (p.dof < 1) {
        throw std::invalid_argument(std::string(fn) + ": dof must be >= 1");
    }
    if (!std::isfinite(p.lambda) || p.lambda < 0.0) {
        throw std::invalid_argument(std::string(fn) + ": lambda must be finite and >= 0");
    }
}

}  // namespace

double noncentral_chisq_mean(const NoncentralChiSquareParams& p) {
    require_valid(p, "noncentral_chisq_mean");
    return static_cast<double>(p.dof) + p.lambda;
}

double noncentral_chisq_variance(const NoncentralChiSquareParams& p) {
    require_valid(p, "noncentral_chisq_variance");
    return 2.0 * static_cast<double>(p.dof) + 4.0 * p.lambda;
}

}  // namespace metricerr
