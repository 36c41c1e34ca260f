// Command-line front end: reproducible batch runs of the simulator, the
// stationary solver, ledger replay and the estimation pipeline, emitting
// plot-ready CSV/JSON plus a manifest with content hashes of all inputs.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dcnet/csv.hpp"
#include "dcnet/dates.hpp"
#include "dcnet/ledger.hpp"
#include "dcnet/rate_equation.hpp"
#include "dcnet/simulate.hpp"
#include "dcnet/statfit.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace dcnet;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// Collects outputs for one subcommand run and writes the manifest last.
class RunOutput {
public:
    RunOutput(std::string command, fs::path dir) : dir_(std::move(dir)) {
        fs::create_directories(dir_);
        manifest_["command"] = std::move(command);
        manifest_["config"] = json::object();
        manifest_["inputs"] = json::object();
        manifest_["outputs"] = json::array();
    }

    json& config() { return manifest_["config"]; }

    void note_input(const fs::path& path) {
        manifest_["inputs"][path.string()] = fnv1a_hex(read_file(path));
    }

    void write(const std::string& name, const std::string& content) {
        std::ofstream out(dir_ / name, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + (dir_ / name).string());
        out << content;
        manifest_["outputs"].push_back(name);
    }

    void finish() {
        std::ofstream out(dir_ / "manifest.json", std::ios::binary);
        out << manifest_.dump(2) << "\n";
    }

    const fs::path& dir() const { return dir_; }

private:
    fs::path dir_;
    json manifest_;
};

std::string fmt(double v) { return format_double(v); }

// ---------------------------------------------------------------- simulate

int cmd_simulate(const SimParams& params, const std::string& method_name, std::int64_t k_min,
                 const fs::path& out_dir) {
    params.validate();
    FitMethod method = fit_method_from_string(method_name);
    SimResult result = run(params);

    RunOutput out("simulate", out_dir);
    out.config() = {{"r", params.r},
                    {"c", params.c},
                    {"steps", params.steps},
                    {"burn_in", params.effective_burn_in()},
                    {"seed", params.seed},
                    {"init_size", params.effective_init_size()},
                    {"method", to_string(method)},
                    {"kmin", k_min}};

    std::string hist = "k,count\n";
    for (const auto& [k, count] : result.histogram.counts)
        hist += std::to_string(k) + "," + std::to_string(count) + "\n";
    out.write("hist.csv", hist);

    std::string trace = "step,avg_degree\n";
    for (std::size_t i = 0; i < result.mean_degree_trace.size(); ++i)
        trace += std::to_string(i + 1) + "," + fmt(result.mean_degree_trace[i]) + "\n";
    out.write("trace.csv", trace);

    json theory = {{"r", params.r},
                   {"c", params.c},
                   {"gamma_theory", result.theory.gamma},
                   {"alpha", result.theory.alpha},
                   {"mean_degree_theory", result.theory.mean_degree},
                   {"mean_degree_post_burn_in", result.post_burn_in_mean_degree},
                   {"isolation_events", result.isolation_events},
                   {"final_nodes", result.final_nodes},
                   {"final_edges", result.final_edges}};
    try {
        FitResult fit = fit_power_law(result.histogram, method, k_min);
        theory["gamma_estimate"] = {{"method", to_string(fit.method)},
                                    {"k_min", fit.k_min},
                                    {"k_max", fit.k_max},
                                    {"n_points", fit.n_points},
                                    {"value", fit.gamma}};
    } catch (const std::exception& e) {
        theory["gamma_estimate"] = nullptr;
        theory["gamma_estimate_error"] = e.what();
    }
    out.write("theory.json", theory.dump(2) + "\n");
    out.finish();
    return 0;
}

// ------------------------------------------------------------------- rateq

int cmd_rateq(int r, int c, int k_max, const fs::path& out_dir) {
    RateEqParams params{r, c, k_max};
    StationaryDistribution dist = solve_stationary(params);

    RunOutput out("rateq", out_dir);
    out.config() = {{"r", r}, {"c", c}, {"kmax", k_max}};

    // Row k=0 carries the isolate mass; the asymptotic column starts at k=1.
    std::string pk = "k,p_solved,p_asymptotic\n";
    pk += "0," + fmt(dist.p0) + ",\n";
    for (int k = 1; k <= k_max; ++k)
        pk += std::to_string(k) + "," + fmt(dist.p[static_cast<std::size_t>(k) - 1]) + "," +
              fmt(asymptotic_pk(k, r)) + "\n";
    out.write("pk.csv", pk);

    json info = {{"r", r},
                 {"c", c},
                 {"kmax", k_max},
                 {"gamma", dist.gamma},
                 {"alpha", dist.alpha},
                 {"p0", dist.p0},
                 {"mean_degree", dist.mean_degree()},
                 {"mean_degree_theory", theoretical_mean_degree(r, c)},
                 {"max_residual", dist.max_residual},
                 {"raw_total", dist.raw_total}};
    out.write("solution.json", info.dump(2) + "\n");
    out.finish();
    return 0;
}

// ------------------------------------------------------------------ replay

int cmd_replay(const fs::path& loans_path, const fs::path& fundings_path, bool histograms,
               const fs::path& out_dir) {
    std::ifstream loans_in(loans_path);
    if (!loans_in) throw std::runtime_error("cannot open " + loans_path.string());
    std::ifstream fundings_in(fundings_path);
    if (!fundings_in) throw std::runtime_error("cannot open " + fundings_path.string());

    Ledger ledger =
        parse_ledger(loans_in, fundings_in, loans_path.string(), fundings_path.string());
    if (ledger.loans.empty()) throw std::runtime_error("no loans in " + loans_path.string());

    std::vector<LedgerEvent> events = build_events(ledger);
    ReplayResult result = replay(ledger, events);

    RunOutput out("replay", out_dir);
    out.config() = {{"loans", loans_path.string()},
                    {"fundings", fundings_path.string()},
                    {"histograms", histograms}};
    out.note_input(loans_path);
    out.note_input(fundings_path);

    std::string daily =
        "date,n,m,added_nodes,added_edges,deleted_nodes,deleted_edges,"
        "avg_degree,avg_degree_added,R,M\n";
    for (const DailySnapshot& s : result.snapshots) {
        daily += format_date(s.date) + "," + std::to_string(s.n) + "," + std::to_string(s.m) +
                 "," + std::to_string(s.added_nodes) + "," + std::to_string(s.added_edges) + "," +
                 std::to_string(s.deleted_nodes) + "," + std::to_string(s.deleted_edges) + "," +
                 fmt(s.avg_degree) + "," + fmt(s.avg_degree_added) + "," + fmt(s.mean_rate) +
                 "," + fmt(s.mean_term) + "\n";
        if (histograms) {
            std::string hist = "k,count\n";
            for (const auto& [k, count] : s.histogram.counts)
                hist += std::to_string(k) + "," + std::to_string(count) + "\n";
            out.write("hist_" + format_date(s.date) + ".csv", hist);
        }
    }
    out.write("daily.csv", daily);

    std::string overlap = "date,borrowers,lenders,dual\n";
    for (const OverlapRow& row : participant_overlap_report(result))
        overlap += format_date(row.date) + "," + std::to_string(row.borrowers) + "," +
                   std::to_string(row.lenders) + "," + std::to_string(row.dual) + "\n";
    out.write("overlap.csv", overlap);
    out.finish();
    return 0;
}

// ------------------------------------------------------- shared CSV loading

struct DailyRow {
    Date date;
    std::int64_t n = 0;
    double avg_degree = 0.0;
    double rate = 0.0;
    double term = 0.0;
};

std::vector<DailyRow> load_daily(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string() + " (run replay first)");
    CsvReader reader(in,
                     "date,n,m,added_nodes,added_edges,deleted_nodes,deleted_edges,"
                     "avg_degree,avg_degree_added,R,M",
                     path.string());
    std::vector<DailyRow> rows;
    std::vector<std::string> f;
    while (reader.next(f)) {
        DailyRow row;
        row.date = parse_date(f[0]);
        row.n = std::stoll(f[1]);
        row.avg_degree = std::stod(f[7]);
        row.rate = std::stod(f[9]);
        row.term = std::stod(f[10]);
        rows.push_back(row);
    }
    return rows;
}

struct GammaRow {
    Date date;
    std::optional<double> gamma;
};

std::vector<GammaRow> load_gamma_daily(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string() + " (run fit first)");
    CsvReader reader(in, "date,gamma,n_points,k_min,k_max,sse,method", path.string());
    std::vector<GammaRow> rows;
    std::vector<std::string> f;
    while (reader.next(f)) {
        GammaRow row;
        row.date = parse_date(f[0]);
        if (!f[1].empty()) row.gamma = std::stod(f[1]);
        rows.push_back(row);
    }
    return rows;
}

DegreeHistogram load_histogram(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    CsvReader reader(in, "k,count", path.string());
    DegreeHistogram hist;
    std::vector<std::string> f;
    while (reader.next(f)) {
        std::int64_t k = std::stoll(f[0]);
        std::int64_t count = std::stoll(f[1]);
        hist.counts[k] = count;
        hist.n += count;
    }
    return hist;
}

// --------------------------------------------------------------------- fit

int cmd_fit(const fs::path& in_dir, const std::string& method_name, std::int64_t k_min,
            const fs::path& out_dir) {
    FitMethod method = fit_method_from_string(method_name);
    fs::path daily_path = in_dir / "daily.csv";
    std::vector<DailyRow> daily = load_daily(daily_path);

    RunOutput out("fit", out_dir);
    out.config() = {{"in", in_dir.string()}, {"method", to_string(method)}, {"kmin", k_min}};
    out.note_input(daily_path);

    std::string rows = "date,gamma,n_points,k_min,k_max,sse,method\n";
    for (const DailyRow& day : daily) {
        std::string date = format_date(day.date);
        fs::path hist_path = in_dir / ("hist_" + date + ".csv");
        std::string line;
        if (!fs::exists(hist_path)) {
            line = date + ",,,,,,skip\n";
        } else {
            out.note_input(hist_path);
            try {
                FitResult fit = fit_power_law(load_histogram(hist_path), method, k_min);
                line = date + "," + fmt(fit.gamma) + "," + std::to_string(fit.n_points) + "," +
                       std::to_string(fit.k_min) + "," + std::to_string(fit.k_max) + "," +
                       fmt(fit.residual_sse) + "," + to_string(fit.method) + "\n";
            } catch (const std::exception&) {
                line = date + ",,,,,,skip\n";
            }
        }
        rows += line;
    }
    out.write("gamma_daily.csv", rows);
    out.finish();
    return 0;
}

// ----------------------------------------------------------------- regress

int cmd_regress(const fs::path& in_dir, const fs::path& out_dir) {
    fs::path daily_path = in_dir / "daily.csv";
    fs::path gamma_path = in_dir / "gamma_daily.csv";
    std::vector<DailyRow> daily = load_daily(daily_path);
    std::vector<GammaRow> gammas = load_gamma_daily(gamma_path);

    std::map<Date, DailyRow> by_date;
    for (const DailyRow& row : daily) by_date[row.date] = row;

    std::vector<RegressionRow> rows;
    int skipped_days = 0;
    for (const GammaRow& g : gammas) {
        if (!g.gamma) {
            ++skipped_days;
            continue;
        }
        auto it = by_date.find(g.date);
        if (it == by_date.end()) continue;
        rows.push_back({*g.gamma, it->second.rate, it->second.term,
                        static_cast<double>(it->second.n)});
    }
    RegressionResult reg = regress_gamma(rows);

    RunOutput out("regress", out_dir);
    out.config() = {{"in", in_dir.string()}};
    out.note_input(daily_path);
    out.note_input(gamma_path);

    json doc = {{"model", "gamma_t = c + a*R_t + b*M_t + phi*ln(n_t)"},
                {"coefficients",
                 {{"intercept", reg.coefficients[0]},
                  {"R", reg.coefficients[1]},
                  {"M", reg.coefficients[2]},
                  {"ln_n", reg.coefficients[3]}}},
                {"std_errors",
                 {{"intercept", reg.std_errors[0]},
                  {"R", reg.std_errors[1]},
                  {"M", reg.std_errors[2]},
                  {"ln_n", reg.std_errors[3]}}},
                {"t_stats",
                 {{"intercept", reg.t_stats[0]},
                  {"R", reg.t_stats[1]},
                  {"M", reg.t_stats[2]},
                  {"ln_n", reg.t_stats[3]}}},
                {"r_squared", reg.r_squared},
                {"n_obs", reg.n_obs},
                {"filtered_zero_rate_or_term", reg.filtered_out},
                {"skipped_days_without_fit", skipped_days}};
    out.write("regression.json", doc.dump(2) + "\n");
    out.finish();
    return 0;
}

// ------------------------------------------------------------------ report

std::string growth_cell(std::int64_t current, std::optional<std::int64_t> previous) {
    if (!previous || *previous == 0) return "---";
    double pct = 100.0 * (static_cast<double>(current) - static_cast<double>(*previous)) /
                 static_cast<double>(*previous);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f%%", pct);
    return buf;
}

int cmd_report(const fs::path& in_dir, const std::string& format, const fs::path& out_dir) {
    fs::path daily_path = in_dir / "daily.csv";
    fs::path gamma_path = in_dir / "gamma_daily.csv";

    std::ifstream daily_in(daily_path);
    if (!daily_in) throw std::runtime_error("cannot open " + daily_path.string());
    CsvReader daily_reader(daily_in,
                           "date,n,m,added_nodes,added_edges,deleted_nodes,deleted_edges,"
                           "avg_degree,avg_degree_added,R,M",
                           daily_path.string());
    struct FullDaily {
        Date date;
        std::int64_t n, m;
        double avg_degree, rate, term;
    };
    std::vector<FullDaily> daily;
    std::vector<std::string> f;
    while (daily_reader.next(f))
        daily.push_back({parse_date(f[0]), std::stoll(f[1]), std::stoll(f[2]), std::stod(f[7]),
                         std::stod(f[9]), std::stod(f[10])});
    if (daily.empty()) throw std::runtime_error("report: daily.csv has no rows");

    std::vector<GammaRow> gammas = load_gamma_daily(gamma_path);
    std::map<Date, double> gamma_by_date;
    for (const GammaRow& g : gammas)
        if (g.gamma) gamma_by_date[g.date] = *g.gamma;

    RunOutput out("report", out_dir);
    out.config() = {{"in", in_dir.string()}, {"format", format}};
    out.note_input(daily_path);
    out.note_input(gamma_path);

    // Table 1: per-year summary of the daily exponent.
    std::vector<std::pair<Date, double>> gamma_series(gamma_by_date.begin(), gamma_by_date.end());
    auto table1 = summarize_by_year(gamma_series);

    // Table 2: year-end network size with year-over-year growth.
    std::map<int, FullDaily> year_end;
    for (const FullDaily& row : daily) year_end[year_of(row.date)] = row;
    struct T2Row {
        std::string date;
        std::int64_t nodes, edges;
        std::string node_growth, edge_growth;
    };
    std::vector<T2Row> table2;
    std::optional<std::int64_t> prev_n, prev_m;
    for (const auto& [year, row] : year_end) {
        table2.push_back({format_date(row.date), row.n, row.m, growth_cell(row.n, prev_n),
                          growth_cell(row.m, prev_m)});
        prev_n = row.n;
        prev_m = row.m;
    }

    // Table 3: per-year summary of the network average degree.
    std::vector<std::pair<Date, double>> degree_series;
    for (const FullDaily& row : daily) degree_series.emplace_back(row.date, row.avg_degree);
    auto table3 = summarize_by_year(degree_series);

    // Tables 4-5 use the regression sample: days with a fitted exponent and
    // nonzero R_t and M_t.
    std::vector<double> sample_gamma, sample_n, sample_rate, sample_term;
    for (const FullDaily& row : daily) {
        auto it = gamma_by_date.find(row.date);
        if (it == gamma_by_date.end()) continue;
        if (row.rate == 0.0 || row.term == 0.0) continue;
        sample_gamma.push_back(it->second);
        sample_n.push_back(static_cast<double>(row.n));
        sample_rate.push_back(row.rate);
        sample_term.push_back(row.term);
    }

    const std::vector<std::string> var_names = {"gamma_t", "n_t", "R_t", "M_t"};
    std::vector<SeriesSummary> table4;
    std::vector<std::vector<double>> corr;
    if (sample_gamma.size() >= 2) {
        table4 = {summarize(sample_gamma), summarize(sample_n), summarize(sample_rate),
                  summarize(sample_term)};
        // Paper order for the correlation table: gamma, R, n, M.
        corr = pearson_correlations({sample_gamma, sample_rate, sample_n, sample_term});
    }

    auto year_table_csv = [](const std::vector<std::pair<int, SeriesSummary>>& table) {
        std::string s = "year,min,max,mean,std_dev\n";
        for (const auto& [year, sum] : table)
            s += std::to_string(year) + "," + fmt(sum.min) + "," + fmt(sum.max) + "," +
                 fmt(sum.mean) + "," + fmt(sum.std_dev) + "\n";
        return s;
    };

    if (format == "csv") {
        out.write("table1_gamma_by_year.csv", year_table_csv(table1));

        std::string t2 = "date,nodes,edges,node_growth,edge_growth\n";
        for (const T2Row& row : table2)
            t2 += row.date + "," + std::to_string(row.nodes) + "," + std::to_string(row.edges) +
                  "," + row.node_growth + "," + row.edge_growth + "\n";
        out.write("table2_nodes_edges.csv", t2);

        out.write("table3_avg_degree_by_year.csv", year_table_csv(table3));

        std::string t4 = "variable,mean,median,max,min,std_dev,n_obs\n";
        for (std::size_t i = 0; i < table4.size(); ++i) {
            const SeriesSummary& s = table4[i];
            t4 += var_names[i] + "," + fmt(s.mean) + "," + fmt(s.median) + "," + fmt(s.max) +
                  "," + fmt(s.min) + "," + fmt(s.std_dev) + "," + std::to_string(s.n) + "\n";
        }
        out.write("table4_summary.csv", t4);

        const std::vector<std::string> corr_names = {"gamma_t", "R_t", "n_t", "M_t"};
        std::string t5 = "variable,gamma_t,R_t,n_t,M_t\n";
        for (std::size_t i = 0; i < corr.size(); ++i) {
            t5 += corr_names[i];
            for (std::size_t j = 0; j < corr.size(); ++j) t5 += "," + fmt(corr[i][j]);
            t5 += "\n";
        }
        out.write("table5_correlations.csv", t5);
    } else {
        json doc;
        doc["table1_gamma_by_year"] = json::array();
        for (const auto& [year, s] : table1)
            doc["table1_gamma_by_year"].push_back({{"year", year},
                                                   {"min", s.min},
                                                   {"max", s.max},
                                                   {"mean", s.mean},
                                                   {"std_dev", s.std_dev}});
        doc["table2_nodes_edges"] = json::array();
        for (const T2Row& row : table2)
            doc["table2_nodes_edges"].push_back({{"date", row.date},
                                                 {"nodes", row.nodes},
                                                 {"edges", row.edges},
                                                 {"node_growth", row.node_growth},
                                                 {"edge_growth", row.edge_growth}});
        doc["table3_avg_degree_by_year"] = json::array();
        for (const auto& [year, s] : table3)
            doc["table3_avg_degree_by_year"].push_back({{"year", year},
                                                        {"min", s.min},
                                                        {"max", s.max},
                                                        {"mean", s.mean},
                                                        {"std_dev", s.std_dev}});
        doc["table4_summary"] = json::array();
        for (std::size_t i = 0; i < table4.size(); ++i) {
            const SeriesSummary& s = table4[i];
            doc["table4_summary"].push_back({{"variable", var_names[i]},
                                             {"mean", s.mean},
                                             {"median", s.median},
                                             {"max", s.max},
                                             {"min", s.min},
                                             {"std_dev", s.std_dev},
                                             {"n_obs", s.n}});
        }
        const std::vector<std::string> corr_names = {"gamma_t", "R_t", "n_t", "M_t"};
        doc["table5_correlations"] = json::object();
        for (std::size_t i = 0; i < corr.size(); ++i) {
            json row = json::object();
            for (std::size_t j = 0; j < corr.size(); ++j) row[corr_names[j]] = corr[i][j];
            doc["table5_correlations"][corr_names[i]] = row;
        }
        out.write("report.json", doc.dump(2) + "\n");
    }
    out.finish();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Debtor-creditor network model: simulation, stationary solution, "
                 "ledger replay and exponent estimation"};
    app.require_subcommand(1);

    // simulate
    SimParams sim_params;
    std::string sim_method = "ccdf";
    std::int64_t sim_kmin = 20;
    std::string sim_out;
    auto* simulate_cmd = app.add_subcommand("simulate", "Run the growth-deletion model");
    simulate_cmd->add_option("--r", sim_params.r, "Nodes added per step (>= 2)");
    simulate_cmd->add_option("--c", sim_params.c, "Edges per new node (>= 1)");
    simulate_cmd->add_option("--steps", sim_params.steps, "Steps to run");
    simulate_cmd->add_option("--burn-in", sim_params.burn_in, "Steps discarded (default steps/4)");
    simulate_cmd->add_option("--seed", sim_params.seed, "RNG seed");
    simulate_cmd->add_option("--init-size", sim_params.init_size,
                             "Seed clique size (default max(c+1,5))");
    simulate_cmd->add_option("--method", sim_method, "Exponent estimator: ols0|ols1|ccdf");
    simulate_cmd->add_option("--kmin", sim_kmin, "Smallest degree used by the estimator");
    simulate_cmd->add_option("--out", sim_out, "Output directory")->required();

    // rateq
    int rq_r = 3, rq_c = 2, rq_kmax = 2000;
    std::string rq_out;
    auto* rateq_cmd = app.add_subcommand("rateq", "Solve the stationary degree distribution");
    rateq_cmd->add_option("--r", rq_r, "Nodes added per step (>= 2)");
    rateq_cmd->add_option("--c", rq_c, "Edges per new node (>= 1)");
    rateq_cmd->add_option("--kmax", rq_kmax, "Truncation degree (>= 10c)");
    rateq_cmd->add_option("--out", rq_out, "Output directory")->required();

    // replay
    std::string rp_loans, rp_fundings, rp_out;
    bool rp_no_hist = false;
    auto* replay_cmd = app.add_subcommand("replay", "Replay a loan ledger into daily snapshots");
    replay_cmd->add_option("--loans", rp_loans, "loans.csv path")->required();
    replay_cmd->add_option("--fundings", rp_fundings, "fundings.csv path")->required();
    replay_cmd->add_flag("--no-histograms", rp_no_hist, "Skip per-day histogram files");
    replay_cmd->add_option("--out", rp_out, "Output directory")->required();

    // fit
    std::string ft_in, ft_out, ft_method = "ols0";
    std::int64_t ft_kmin = 1;
    auto* fit_cmd = app.add_subcommand("fit", "Fit the daily power-law exponent series");
    fit_cmd->add_option("--in", ft_in, "Directory with daily.csv and hist_*.csv")->required();
    fit_cmd->add_option("--method", ft_method, "ols0|ols1|ccdf");
    fit_cmd->add_option("--kmin", ft_kmin, "Smallest degree included");
    fit_cmd->add_option("--out", ft_out, "Output directory")->required();

    // regress
    std::string rg_in, rg_out;
    auto* regress_cmd =
        app.add_subcommand("regress", "Regress gamma_t on R_t, M_t and ln(n_t)");
    regress_cmd->add_option("--in", rg_in, "Directory with daily.csv and gamma_daily.csv")
        ->required();
    regress_cmd->add_option("--out", rg_out, "Output directory")->required();

    // report
    std::string rt_in, rt_out, rt_format = "csv";
    auto* report_cmd = app.add_subcommand("report", "Emit summary tables");
    report_cmd->add_option("--in", rt_in, "Directory with daily.csv and gamma_daily.csv")
        ->required();
    report_cmd->add_option("--format", rt_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    report_cmd->add_option("--out", rt_out, "Output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate_cmd->parsed())
            return cmd_simulate(sim_params, sim_method, sim_kmin, sim_out);
        if (rateq_cmd->parsed()) return cmd_rateq(rq_r, rq_c, rq_kmax, rq_out);
        if (replay_cmd->parsed()) return cmd_replay(rp_loans, rp_fundings, !rp_no_hist, rp_out);
        if (fit_cmd->parsed()) return cmd_fit(ft_in, ft_method, ft_kmin, ft_out);
        if (regress_cmd->parsed()) return cmd_regress(rg_in, rg_out);
        if (report_cmd->parsed()) return cmd_report(rt_in, rt_format, rt_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
