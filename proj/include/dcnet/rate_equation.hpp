#pragma once

#include <vector>

namespace dcnet {

struct RateEqParams {
    int r;             // >= 2
    int c;             // >= 1
    int k_max;         // truncation degree, >= 10*c

    void validate() const;
};

// Stationary degree distribution of the growth-deletion model, from the
// balance equation
//
//   0 = r*d(k,c) + r*c*pi(k-1)*p(k-1) - p(k)*(r + r*c*pi(k) + k) + (k+1)*p(k+1)
//
// with pi(k) = k/<k> and <k> = 2rc/(1+r). Solved for k = 1..k_max as a
// tridiagonal system with absorbing truncation p(k_max+1) = 0.
//
// The balance equation leaks probability at k = 0: nodes isolated by a
// deletion stop interacting (pi(0) = 0) and sit at degree zero until they are
// themselves deleted, which pins the isolate mass to p0 = p1/r. With that
// mass included, the distribution sums to one and its mean is 2rc/(1+r)
// up to truncation, matching the simulator, which keeps isolated nodes.
struct StationaryDistribution {
    int r = 0;
    int c = 0;
    int k_max = 0;
    double gamma = 0.0;
    double alpha = 0.0;
    std::vector<double> p;     // p[k-1] = p_k for k = 1..k_max, normalized with p0 included
    double p0 = 0.0;           // normalized isolate mass, p1/r
    double raw_total = 0.0;    // pre-normalization mass p0 + sum p_k (1 minus truncation loss)
    double max_residual = 0.0; // max |balance residual| over k = 1..k_max-1, raw solution

    double total_mass() const; // p0 + sum of p, ~1 by construction
    double mean_degree() const;
};

StationaryDistribution solve_stationary(const RateEqParams& params);

// Pointwise residual of the balance equation at degree k for an unnormalized
// solution vector (p_raw[k-1] = p_k). Exposed for verification.
double balance_residual(const RateEqParams& params, const std::vector<double>& p_raw, int k);

// Closed-form asymptotic tail Gamma(g) * (1-a)^{-(g-1)} * k^{-g} with
// g = (3r-1)/(r-1) and a = 2/(r+1). Valid for r >= 2, k >= 1.
double asymptotic_pk(int k, int r);

} // namespace dcnet
