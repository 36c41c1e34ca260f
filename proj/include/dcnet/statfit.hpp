#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dcnet/dates.hpp"
#include "dcnet/graph.hpp"
#include "dcnet/ledger.hpp"

namespace dcnet {

enum class FitMethod { ols_no_intercept, ols_with_intercept, ccdf_tail };

std::string to_string(FitMethod m);
FitMethod fit_method_from_string(const std::string& name);

struct FitResult {
    double gamma = 0.0;
    int n_points = 0;
    std::int64_t k_min = 0; // smallest degree used
    std::int64_t k_max = 0; // largest degree used
    double residual_sse = 0.0;
    FitMethod method = FitMethod::ols_no_intercept;
};

// Degree counts with real-valued weights, so exactly normalized spectra
// (n = 1, counts = p_k) can be fitted as well as raw node histograms.
struct DegreeSpectrum {
    std::map<std::int64_t, double> counts;
    double n = 0.0;
};

DegreeSpectrum spectrum_from(const DegreeHistogram& hist);

// Power-law exponent of p_k ~ k^(-gamma) from a degree spectrum.
//   ols_no_intercept:  minimizes sum (ln(n_k/n) + gamma*ln k)^2, the
//                      closed form gamma = -sum(x*y)/sum(x^2)
//   ols_with_intercept: gamma = -slope of ln(n_k/n) on ln k
//   ccdf_tail:          gamma = |slope of ln CCDF on ln k| + 1
// Degrees below max(k_min, 1) and empty bins are excluded; degree-0 nodes
// count toward n but never provide a point. Throws on fewer than two usable
// points or a degenerate design.
FitResult fit_power_law(const DegreeSpectrum& spectrum, FitMethod method, std::int64_t k_min);
FitResult fit_power_law(const DegreeHistogram& hist, FitMethod method, std::int64_t k_min);

struct DailyFit {
    Date date;
    std::optional<FitResult> fit; // empty = skipped
    std::string skip_reason;
};

// Per-day exponent fits; days whose histogram cannot be fitted produce a
// skip marker instead of failing the whole series.
std::vector<DailyFit> fit_series(const std::vector<DailySnapshot>& snapshots, FitMethod method,
                                 std::int64_t k_min);

struct RegressionRow {
    double gamma; // gamma_t
    double rate;  // R_t
    double term;  // M_t
    double nodes; // n_t (entered as ln in the design matrix)
};

struct RegressionResult {
    // Order: intercept, R_t, M_t, ln(n_t).
    std::array<double, 4> coefficients{};
    std::array<double, 4> std_errors{};
    std::array<double, 4> t_stats{};
    double r_squared = 0.0;
    int n_obs = 0;
    int filtered_out = 0; // rows dropped because R_t = 0 or M_t = 0
};

// OLS of gamma_t on (1, R_t, M_t, ln n_t) via the normal equations, with
// classical homoskedastic standard errors. Rows with R_t = 0 or M_t = 0 are
// dropped before fitting; at least 5 rows must remain.
RegressionResult regress_gamma(const std::vector<RegressionRow>& rows);

// Pearson correlation matrix of equally long series. Throws on series
// shorter than 2 or with zero variance.
std::vector<std::vector<double>> pearson_correlations(
    const std::vector<std::vector<double>>& columns);

struct SeriesSummary {
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    double std_dev = 0.0; // sample, divisor n-1; 0 when n < 2
    double median = 0.0;
    std::int64_t n = 0;
};

SeriesSummary summarize(const std::vector<double>& series);

// One summary per calendar year present, in ascending year order.
std::vector<std::pair<int, SeriesSummary>> summarize_by_year(
    const std::vector<std::pair<Date, double>>& series);

} // namespace dcnet
