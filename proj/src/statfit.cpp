#include "dcnet/statfit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dcnet {

std::string to_string(FitMethod m) {
    switch (m) {
        case FitMethod::ols_no_intercept: return "ols_no_intercept";
        case FitMethod::ols_with_intercept: return "ols_with_intercept";
        case FitMethod::ccdf_tail: return "ccdf_tail";
    }
    return "?";
}

FitMethod fit_method_from_string(const std::string& name) {
    if (name == "ols0" || name == "ols_no_intercept") return FitMethod::ols_no_intercept;
    if (name == "ols1" || name == "ols_with_intercept") return FitMethod::ols_with_intercept;
    if (name == "ccdf" || name == "ccdf_tail") return FitMethod::ccdf_tail;
    throw std::invalid_argument("unknown fit method '" + name + "'");
}

DegreeSpectrum spectrum_from(const DegreeHistogram& hist) {
    DegreeSpectrum s;
    s.n = static_cast<double>(hist.n);
    for (const auto& [k, count] : hist.counts)
        s.counts.emplace(k, static_cast<double>(count));
    return s;
}

namespace {

struct LinePoints {
    std::vector<double> x;
    std::vector<double> y;
};

// (slope, intercept, sse) of y on x with intercept.
std::array<double, 3> ols_line(const LinePoints& pts) {
    std::size_t n = pts.x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += pts.x[i];
        my += pts.y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (pts.x[i] - mx) * (pts.x[i] - mx);
        sxy += (pts.x[i] - mx) * (pts.y[i] - my);
    }
    if (sxx <= 0.0) throw std::runtime_error("fit_power_law: all points share one ln k value");
    double slope = sxy / sxx;
    double intercept = my - slope * mx;
    double sse = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double e = pts.y[i] - (intercept + slope * pts.x[i]);
        sse += e * e;
    }
    return {slope, intercept, sse};
}

} // namespace

FitResult fit_power_law(const DegreeSpectrum& spectrum, FitMethod method, std::int64_t k_min) {
    std::int64_t k_lo = std::max<std::int64_t>(k_min, 1);
    if (!(spectrum.n > 0.0)) throw std::runtime_error("fit_power_law: empty spectrum");

    std::vector<std::pair<std::int64_t, double>> bins; // (k, n_k) with n_k > 0, k >= k_lo
    for (const auto& [k, count] : spectrum.counts)
        if (k >= k_lo && count > 0.0) bins.emplace_back(k, count);
    if (bins.size() < 2)
        throw std::runtime_error("fit_power_law: need at least 2 nonempty degrees >= " +
                                 std::to_string(k_lo) + ", have " + std::to_string(bins.size()));

    FitResult result;
    result.method = method;
    result.n_points = static_cast<int>(bins.size());
    result.k_min = bins.front().first;
    result.k_max = bins.back().first;

    if (method == FitMethod::ccdf_tail) {
        // Complementary CDF over the full spectrum, recorded at the occupied
        // degrees of the fit window (descending walk, accumulating mass).
        std::vector<double> ccdf(bins.size());
        double tail = 0.0;
        std::size_t bi = bins.size();
        for (auto rit = spectrum.counts.rbegin(); rit != spectrum.counts.rend(); ++rit) {
            tail += rit->second / spectrum.n;
            if (bi > 0 && bins[bi - 1].first == rit->first) ccdf[--bi] = tail;
        }
        LinePoints pts;
        for (std::size_t i = 0; i < bins.size(); ++i) {
            pts.x.push_back(std::log(static_cast<double>(bins[i].first)));
            pts.y.push_back(std::log(ccdf[i]));
        }
        auto [slope, intercept, sse] = ols_line(pts);
        result.gamma = std::abs(slope) + 1.0;
        result.residual_sse = sse;
        return result;
    }

    LinePoints pts;
    for (const auto& [k, count] : bins) {
        pts.x.push_back(std::log(static_cast<double>(k)));
        pts.y.push_back(std::log(count / spectrum.n));
    }
    if (method == FitMethod::ols_no_intercept) {
        double sxx = 0.0, sxy = 0.0;
        for (std::size_t i = 0; i < pts.x.size(); ++i) {
            sxx += pts.x[i] * pts.x[i];
            sxy += pts.x[i] * pts.y[i];
        }
        if (sxx <= 0.0)
            throw std::runtime_error(
                "fit_power_law: no-intercept fit needs a point with k >= 2");
        result.gamma = -sxy / sxx;
        double sse = 0.0;
        for (std::size_t i = 0; i < pts.x.size(); ++i) {
            double e = pts.y[i] + result.gamma * pts.x[i];
            sse += e * e;
        }
        result.residual_sse = sse;
    } else {
        auto [slope, intercept, sse] = ols_line(pts);
        result.gamma = -slope;
        result.residual_sse = sse;
    }
    return result;
}

FitResult fit_power_law(const DegreeHistogram& hist, FitMethod method, std::int64_t k_min) {
    return fit_power_law(spectrum_from(hist), method, k_min);
}

std::vector<DailyFit> fit_series(const std::vector<DailySnapshot>& snapshots, FitMethod method,
                                 std::int64_t k_min) {
    std::vector<DailyFit> out;
    out.reserve(snapshots.size());
    for (const DailySnapshot& snap : snapshots) {
        DailyFit day;
        day.date = snap.date;
        try {
            day.fit = fit_power_law(snap.histogram, method, k_min);
        } catch (const std::exception& e) {
            day.skip_reason = e.what();
        }
        out.push_back(std::move(day));
    }
    return out;
}

namespace {

// Gauss-Jordan inverse with partial pivoting; fine at 4x4 scale.
template <std::size_t N>
std::array<std::array<double, N>, N> invert(std::array<std::array<double, N>, N> a) {
    std::array<std::array<double, N>, N> inv{};
    for (std::size_t i = 0; i < N; ++i) inv[i][i] = 1.0;
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < N; ++row)
            if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
        if (std::abs(a[pivot][col]) < 1e-12)
            throw std::runtime_error("regress_gamma: design matrix is rank deficient");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        double d = a[col][col];
        for (std::size_t j = 0; j < N; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t row = 0; row < N; ++row) {
            if (row == col) continue;
            double f = a[row][col];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < N; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace

RegressionResult regress_gamma(const std::vector<RegressionRow>& rows) {
    std::vector<std::array<double, 4>> design;
    std::vector<double> y;
    int filtered = 0;
    for (const RegressionRow& row : rows) {
        if (row.rate == 0.0 || row.term == 0.0) {
            ++filtered;
            continue;
        }
        if (!(row.nodes > 0.0))
            throw std::invalid_argument("regress_gamma: n_t must be positive for ln(n_t)");
        design.push_back({1.0, row.rate, row.term, std::log(row.nodes)});
        y.push_back(row.gamma);
    }
    int n = static_cast<int>(design.size());
    if (n < 5)
        throw std::runtime_error("regress_gamma: need at least 5 usable rows, have " +
                                 std::to_string(n));

    std::array<std::array<double, 4>, 4> xtx{};
    std::array<double, 4> xty{};
    for (int i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < 4; ++a) {
            xty[a] += design[static_cast<std::size_t>(i)][a] * y[static_cast<std::size_t>(i)];
            for (std::size_t b = 0; b < 4; ++b)
                xtx[a][b] += design[static_cast<std::size_t>(i)][a] *
                             design[static_cast<std::size_t>(i)][b];
        }
    }
    auto xtx_inv = invert(xtx);

    RegressionResult res;
    res.n_obs = n;
    res.filtered_out = filtered;
    for (std::size_t a = 0; a < 4; ++a) {
        double v = 0.0;
        for (std::size_t b = 0; b < 4; ++b) v += xtx_inv[a][b] * xty[b];
        res.coefficients[a] = v;
    }

    double sse = 0.0, sst = 0.0, ybar = 0.0;
    for (double v : y) ybar += v;
    ybar /= static_cast<double>(n);
    for (int i = 0; i < n; ++i) {
        double fit = 0.0;
        for (std::size_t a = 0; a < 4; ++a)
            fit += design[static_cast<std::size_t>(i)][a] * res.coefficients[a];
        double e = y[static_cast<std::size_t>(i)] - fit;
        sse += e * e;
        sst += (y[static_cast<std::size_t>(i)] - ybar) * (y[static_cast<std::size_t>(i)] - ybar);
    }
    double sigma2 = sse / static_cast<double>(n - 4);
    for (std::size_t a = 0; a < 4; ++a) {
        res.std_errors[a] = std::sqrt(sigma2 * xtx_inv[a][a]);
        res.t_stats[a] = res.std_errors[a] > 0.0 ? res.coefficients[a] / res.std_errors[a] : 0.0;
    }
    res.r_squared = sst > 0.0 ? 1.0 - sse / sst : 1.0;
    return res;
}

std::vector<std::vector<double>> pearson_correlations(
    const std::vector<std::vector<double>>& columns) {
    std::size_t p = columns.size();
    if (p == 0) throw std::invalid_argument("pearson_correlations: no series");
    std::size_t n = columns[0].size();
    if (n < 2) throw std::invalid_argument("pearson_correlations: series shorter than 2");
    for (const auto& col : columns)
        if (col.size() != n)
            throw std::invalid_argument("pearson_correlations: unequal series lengths");

    std::vector<double> mean(p, 0.0), sd(p, 0.0);
    for (std::size_t j = 0; j < p; ++j) {
        for (double v : columns[j]) mean[j] += v;
        mean[j] /= static_cast<double>(n);
        for (double v : columns[j]) sd[j] += (v - mean[j]) * (v - mean[j]);
        if (sd[j] <= 0.0)
            throw std::runtime_error("pearson_correlations: zero-variance series " +
                                     std::to_string(j));
        sd[j] = std::sqrt(sd[j]);
    }
    std::vector<std::vector<double>> corr(p, std::vector<double>(p, 1.0));
    for (std::size_t a = 0; a < p; ++a) {
        for (std::size_t b = a + 1; b < p; ++b) {
            double cov = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                cov += (columns[a][i] - mean[a]) * (columns[b][i] - mean[b]);
            corr[a][b] = corr[b][a] = cov / (sd[a] * sd[b]);
        }
    }
    return corr;
}

SeriesSummary summarize(const std::vector<double>& series) {
    if (series.empty()) throw std::invalid_argument("summarize: empty series");
    SeriesSummary s;
    s.n = static_cast<std::int64_t>(series.size());
    std::vector<double> sorted = series;
    std::sort(sorted.begin(), sorted.end());
    s.min = sorted.front();
    s.max = sorted.back();
    for (double v : series) s.mean += v;
    s.mean /= static_cast<double>(series.size());
    if (series.size() > 1) {
        double acc = 0.0;
        for (double v : series) acc += (v - s.mean) * (v - s.mean);
        s.std_dev = std::sqrt(acc / static_cast<double>(series.size() - 1));
    }
    std::size_t mid = sorted.size() / 2;
    s.median = sorted.size() % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
    return s;
}

std::vector<std::pair<int, SeriesSummary>> summarize_by_year(
    const std::vector<std::pair<Date, double>>& series) {
    std::map<int, std::vector<double>> by_year;
    for (const auto& [date, value] : series) by_year[year_of(date)].push_back(value);
    std::vector<std::pair<int, SeriesSummary>> out;
    out.reserve(by_year.size());
    for (const auto& [year, values] : by_year) out.emplace_back(year, summarize(values));
    return out;
}

} // namespace dcnet
