#pragma once

#include <cstdint>

namespace metricerr {

// Parameters of the folded normal distribution: |X| where X ~ N(mu, sigma^2).
struct FoldedNormalParams {
    double mu = 0.0;
    double sigma = 1.0;
};

// Parameters of the noncentral chi-square distribution: sum of dof squared
// unit-variance normals with noncentrality lambda = sum of squared means.
struct NoncentralChiSquareParams {
    std::int64_t dof = 1;
    double lambda = 0.0;
};

// Error function, evaluated with Cody's rational minimax approximations
// (W. J. Cody, Math. Comp. 23 (1969), 631-638). Absolute error below 1e-14
// everywhere; odd symmetry erf(-x) == -erf(x) holds bitwise.
double erf(double x);

// Complementary error function. Computed directly, not as 1 - erf, so the
// relative error stays below 1e-12 up to x = 25 (underflows to 0 past 26.543).
double erfc(double x);

// Standard normal CDF, Phi(x) = (1 + erf(x / sqrt(2))) / 2, evaluated through
// erfc so both tails keep full relative accuracy.
double normal_cdf(double x);

// E|X| for X ~ N(mu, sigma^2):
//   sigma * sqrt(2/pi) * exp(-mu^2 / (2 sigma^2)) + mu * erf(mu / (sqrt(2) sigma)).
double folded_normal_mean(const FoldedNormalParams& p);

// Var|X| = mu^2 + sigma^2 - E|X|^2. Results in [-1e-12 * sigma^2, 0) are
// rounding residue near sigma -> 0 and clamp to 0; anything lower throws.
double folded_normal_variance(const FoldedNormalParams& p);

// E(X) = dof + lambda for X ~ noncentral chi-square.
double noncentral_chisq_mean(const NoncentralChiSquareParams& p);

// Var(X) = 2 dof + 4 lambda.
double noncentral_chisq_variance(const NoncentralChiSquareParams& p);

}  // namespace metricerr
