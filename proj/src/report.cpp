#include "fleetmaint/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fleetmaint {

namespace fs = std::filesystem;

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    std::string s(buf);
    if (s == "-0") s = "0";
    return s;
}

PolicySummary summarize_policy(const std::string& name, const Schedule& schedule,
                               const EvaluationMatrix& matrix, double alpha, const FleetSpec& fleet,
                               const ScenarioSet& set, const RiskParams& params) {
    const auto dist = schedule_cost_distribution(matrix, schedule);
    PolicySummary s;
    s.policy = name;
    s.alpha = alpha;
    s.expected_cost = expected_cost(dist);
    s.cvar = cvar_alpha(dist, alpha);
    double sum = 0.0;
    for (const auto& a : fleet.assets) {
        const auto date = schedule.date_for(a.id);
        if (date.is_none()) {
            s.counts_none = true;
            sum += fleet.horizon + 1;
        } else {
            sum += date.period();
        }
    }
    s.mean_maintenance_time = sum / static_cast<double>(fleet.size());
    s.mean_failure_proxy = failure_proxy(schedule, fleet, set, params);
    return s;
}

EcdfCurve ecdf(const CostDistribution& dist) {
    dist.validate();
    std::vector<std::pair<double, double>> pairs(dist.values.size());
    for (std::size_t k = 0; k < pairs.size(); ++k) pairs[k] = {dist.values[k], dist.weights[k]};
    std::stable_sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    EcdfCurve curve;
    double cum = 0.0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        cum += pairs[k].second;
        const bool run_end = k + 1 == pairs.size() || pairs[k + 1].first != pairs[k].first;
        if (!run_end) continue;
        // zero-weight atoms add no step
        if (!curve.steps.empty() && cum <= curve.steps.back().cum_prob) continue;
        curve.steps.push_back({pairs[k].first, cum});
    }
    if (!curve.steps.empty()) curve.steps.back().cum_prob = 1.0;
    return curve;
}

namespace {

class OutputSet {
public:
    explicit OutputSet(fs::path dir) : dir_(std::move(dir)) {}

    ~OutputSet() {
        if (committed_) return;
        std::error_code ec;
        for (const auto& p : written_) fs::remove(p, ec);
    }

    void write(const std::string& name, const std::string& content) {
        const auto path = dir_ / name;
        written_.push_back(path);
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed: " + path.string());
    }

    std::vector<fs::path> commit() {
        committed_ = true;
        return written_;
    }

private:
    fs::path dir_;
    std::vector<fs::path> written_;
    bool committed_ = false;
};

}  // namespace

std::vector<fs::path> emit_outputs(const std::vector<PolicyOutput>& outputs, const FleetSpec& fleet,
                                   const nlohmann::json& run_meta, const fs::path& out_dir) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory " + out_dir.string() + ": " + ec.message());

    OutputSet files(out_dir);

    std::ostringstream summary;
    summary << "policy,expected_cost,cvar,alpha,mean_maintenance_time,mean_failure_proxy\n";
    for (const auto& o : outputs) {
        const auto& s = o.summary;
        summary << o.name << ',' << format_number(s.expected_cost) << ',' << format_number(s.cvar) << ','
                << format_number(s.alpha) << ',' << format_number(s.mean_maintenance_time) << ','
                << format_number(s.mean_failure_proxy) << '\n';
    }
    files.write("summary.csv", summary.str());

    for (const auto& o : outputs) {
        std::ostringstream curve;
        curve << "cost,cum_prob\n";
        for (const auto& step : o.curve.steps) {
            curve << format_number(step.cost) << ',' << format_number(step.cum_prob) << '\n';
        }
        files.write("ecdf_" + o.name + ".csv", curve.str());
    }

    std::ostringstream schedules;
    schedules << "policy,asset_id,date\n";
    for (const auto& o : outputs) {
        for (const auto& a : fleet.assets) {
            schedules << o.name << ',' << a.id << ',' << o.schedule.date_for(a.id).to_string() << '\n';
        }
    }
    files.write("schedules.csv", schedules.str());

    files.write("run_meta.json", run_meta.dump(2) + "\n");
    return files.commit();
}

std::string format_summary_table(const std::vector<PolicySummary>& summaries) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%-26s %14s %14s %18s %20s\n", "Policy", "Expected cost",
                  summaries.empty() ? "CVaR" : ("CVaR_" + format_number(summaries.front().alpha)).c_str(),
                  "Mean maint. time", "Mean failure proxy");
    out << line;
    for (const auto& s : summaries) {
        std::snprintf(line, sizeof line, "%-26s %14.2f %14.2f %18.1f %20.3f%s\n", s.policy.c_str(), s.expected_cost,
                      s.cvar, s.mean_maintenance_time, s.mean_failure_proxy, s.counts_none ? "  (*)" : "");
        out << line;
    }
    if (std::any_of(summaries.begin(), summaries.end(), [](const auto& s) { return s.counts_none; })) {
        out << "(*) at least one asset not maintained; counted as T+1 in mean maintenance time\n";
    }
    return out.str();
}

}  // namespace fleetmaint
