#include "dcnet/rate_equation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dcnet/simulate.hpp"

namespace dcnet {

void RateEqParams::validate() const {
    if (r < 2) throw std::invalid_argument("RateEqParams: r must be >= 2");
    if (c < 1) throw std::invalid_argument("RateEqParams: c must be >= 1");
    if (k_max < 10 * c)
        throw std::invalid_argument("RateEqParams: k_max must be >= 10*c (got " +
                                    std::to_string(k_max) + ")");
}

namespace {

// Attachment outflow r*c*pi(k) with pi(k) = k/<k> and <k> = 2rc/(1+r)
// reduces to k*(1+r)/2, independent of c.
inline double attach_rate(int k, int r) { return 0.5 * k * (1.0 + r); }

} // namespace

double balance_residual(const RateEqParams& params, const std::vector<double>& p_raw, int k) {
    if (k < 1 || static_cast<std::size_t>(k) >= p_raw.size() + 1)
        throw std::invalid_argument("balance_residual: k out of range");
    auto pk = [&](int j) -> double {
        if (j < 1 || static_cast<std::size_t>(j) > p_raw.size()) return 0.0;
        return p_raw[static_cast<std::size_t>(j) - 1];
    };
    double source = (k == params.c) ? static_cast<double>(params.r) : 0.0;
    return source + attach_rate(k - 1, params.r) * pk(k - 1) -
           pk(k) * (params.r + attach_rate(k, params.r) + k) + (k + 1) * pk(k + 1);
}

StationaryDistribution solve_stationary(const RateEqParams& params) {
    params.validate();
    const int r = params.r;
    const int n = params.k_max;

    // Tridiagonal rows k = 1..k_max:
    //   attach(k-1)*p(k-1) - (r + attach(k) + k)*p(k) + (k+1)*p(k+1) = -r*d(k,c)
    // with p(0) = 0 and p(k_max+1) = 0. Strictly diagonally dominant
    // (margin (3r-1)/2), so the Thomas sweep is stable.
    std::vector<double> upper_ratio(static_cast<std::size_t>(n));
    std::vector<double> rhs_ratio(static_cast<std::size_t>(n));
    double prev_ratio = 0.0, prev_rhs = 0.0;
    for (int k = 1; k <= n; ++k) {
        double sub = attach_rate(k - 1, r);
        double diag = -(r + attach_rate(k, r) + k);
        double sup = k + 1.0;
        double rhs = (k == params.c) ? -static_cast<double>(r) : 0.0;
        double denom = diag - sub * prev_ratio;
        if (std::abs(denom) < 1e-300)
            throw std::runtime_error("solve_stationary: singular truncation at k=" +
                                     std::to_string(k));
        prev_ratio = sup / denom;
        prev_rhs = (rhs - sub * prev_rhs) / denom;
        upper_ratio[static_cast<std::size_t>(k) - 1] = prev_ratio;
        rhs_ratio[static_cast<std::size_t>(k) - 1] = prev_rhs;
    }
    std::vector<double> p_raw(static_cast<std::size_t>(n));
    p_raw[static_cast<std::size_t>(n) - 1] = rhs_ratio[static_cast<std::size_t>(n) - 1];
    for (int k = n - 1; k >= 1; --k)
        p_raw[static_cast<std::size_t>(k) - 1] =
            rhs_ratio[static_cast<std::size_t>(k) - 1] -
            upper_ratio[static_cast<std::size_t>(k) - 1] * p_raw[static_cast<std::size_t>(k)];

    StationaryDistribution out;
    out.r = r;
    out.c = params.c;
    out.k_max = n;
    out.gamma = theoretical_gamma(r);
    out.alpha = theoretical_alpha(r);

    double p0_raw = p_raw[0] / r;
    double total = p0_raw;
    for (double v : p_raw) total += v;
    if (!(total > 0.0))
        throw std::runtime_error("solve_stationary: non-positive total mass, truncation failed");
    out.raw_total = total;

    double max_res = 0.0;
    for (int k = 1; k <= n - 1; ++k)
        max_res = std::max(max_res, std::abs(balance_residual(params, p_raw, k)));
    out.max_residual = max_res;

    out.p.resize(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        out.p[static_cast<std::size_t>(k) - 1] = p_raw[static_cast<std::size_t>(k) - 1] / total;
    out.p0 = p0_raw / total;
    return out;
}

double StationaryDistribution::total_mass() const {
    double s = p0;
    for (double v : p) s += v;
    return s;
}

double StationaryDistribution::mean_degree() const {
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) s += static_cast<double>(i + 1) * p[i];
    return s;
}

double asymptotic_pk(int k, int r) {
    if (r < 2) throw std::invalid_argument("asymptotic_pk: defined for r >= 2");
    if (k < 1) throw std::invalid_argument("asymptotic_pk: k must be >= 1");
    double gamma = theoretical_gamma(r);
    double alpha = theoretical_alpha(r);
    double prefactor = std::tgamma(gamma) * std::pow(1.0 - alpha, -(gamma - 1.0));
    return prefactor * std::pow(static_cast<double>(k), -gamma);
}

} // namespace dcnet
