#include "fleetmaint/config.hpp"

#include <fstream>
#include <set>

#include "fleetmaint/error.hpp"

namespace fleetmaint {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Strict reader over one JSON object: every key must be consumed or known.
class Section {
public:
    Section(const json& node, std::string path) : node_(node), path_(std::move(path)) {
        if (!node_.is_object()) throw ConfigError(where() + ": expected an object");
    }

    std::string key_path(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

    bool has(const std::string& key) const { return node_.contains(key); }

    const json* get(const std::string& key) {
        known_.insert(key);
        auto it = node_.find(key);
        return it == node_.end() ? nullptr : &*it;
    }

    void number(const std::string& key, double& out) {
        if (const json* v = get(key)) {
            if (!v->is_number()) throw ConfigError(key_path(key) + ": expected a number");
            out = v->get<double>();
        }
    }

    void optional_number(const std::string& key, std::optional<double>& out) {
        if (const json* v = get(key)) {
            if (!v->is_number()) throw ConfigError(key_path(key) + ": expected a number");
            out = v->get<double>();
        }
    }

    template <typename Int>
    void integer(const std::string& key, Int& out, long double min_value) {
        if (const json* v = get(key)) {
            if (!v->is_number_integer()) throw ConfigError(key_path(key) + ": expected an integer");
            if (v->is_number_unsigned()) {
                out = static_cast<Int>(v->get<std::uint64_t>());
                if (static_cast<long double>(v->get<std::uint64_t>()) < min_value) {
                    throw ConfigError(key_path(key) + ": must be >= " + std::to_string(static_cast<long long>(min_value)));
                }
            } else {
                const auto raw = v->get<std::int64_t>();
                if (static_cast<long double>(raw) < min_value) {
                    throw ConfigError(key_path(key) + ": must be >= " + std::to_string(static_cast<long long>(min_value)));
                }
                out = static_cast<Int>(raw);
            }
        }
    }

    void range(const std::string& key, Range& out) {
        if (const json* v = get(key)) {
            if (!v->is_array() || v->size() != 2 || !(*v)[0].is_number() || !(*v)[1].is_number()) {
                throw ConfigError(key_path(key) + ": expected [lo, hi]");
            }
            out = {(*v)[0].get<double>(), (*v)[1].get<double>()};
            if (!(out.lo >= 0.0 && out.lo <= out.hi)) throw ConfigError(key_path(key) + ": expected 0 <= lo <= hi");
        }
    }

    void text(const std::string& key, std::string& out) {
        if (const json* v = get(key)) {
            if (!v->is_string()) throw ConfigError(key_path(key) + ": expected a string");
            out = v->get<std::string>();
        }
    }

    /// Rejects keys that no accessor asked for.
    void finish() const {
        for (auto it = node_.begin(); it != node_.end(); ++it) {
            if (!known_.count(it.key())) throw ConfigError("unknown key '" + key_path(it.key()) + "'");
        }
    }

private:
    std::string where() const { return path_.empty() ? "config" : path_; }

    const json& node_;
    std::string path_;
    std::set<std::string> known_;
};

void read_costs(Section& s, CostCoefficients& c) {
    s.number("pm", c.pm);
    s.number("fail", c.fail);
    s.number("perf", c.perf);
    s.number("early", c.early);
}

void check_costs(const CostCoefficients& c, const std::string& path) {
    if (!(c.pm >= 0.0)) throw ConfigError(path + ".pm: must be >= 0");
    if (!(c.fail >= 0.0)) throw ConfigError(path + ".fail: must be >= 0");
    if (!(c.perf >= 0.0)) throw ConfigError(path + ".perf: must be >= 0");
    if (!(c.early >= 0.0)) throw ConfigError(path + ".early: must be >= 0");
}

json costs_json(const CostCoefficients& c) {
    return json{{"pm", c.pm}, {"fail", c.fail}, {"perf", c.perf}, {"early", c.early}};
}

json range_json(const Range& r) { return json::array({r.lo, r.hi}); }

}  // namespace

void RunConfig::set_seed(std::uint64_t s) {
    seed = s;
    if (!fleet_seed_set) fleet_gen.seed = s;
}

RunConfig parse_config(const json& doc) {
    RunConfig cfg;
    Section root(doc, "");

    if (const json* node = root.get("costs")) {
        Section s(*node, "costs");
        read_costs(s, cfg.costs);
        check_costs(cfg.costs, "costs");
        if (const json* ov = s.get("overrides")) {
            if (!ov->is_object()) throw ConfigError("costs.overrides: expected an object");
            for (auto it = ov->begin(); it != ov->end(); ++it) {
                Section o(it.value(), "costs.overrides." + it.key());
                CostOverride entry;
                o.optional_number("pm", entry.pm);
                o.optional_number("fail", entry.fail);
                o.optional_number("perf", entry.perf);
                o.optional_number("early", entry.early);
                o.finish();
                for (const auto& [name, v] : {std::pair{"pm", entry.pm}, std::pair{"fail", entry.fail},
                                              std::pair{"perf", entry.perf}, std::pair{"early", entry.early}}) {
                    if (v && !(*v >= 0.0)) throw ConfigError(o.key_path(name) + ": must be >= 0");
                }
                cfg.cost_overrides[it.key()] = entry;
            }
        }
        s.finish();
    }
    cfg.fleet_gen.costs = cfg.costs;

    if (const json* node = root.get("scenarios")) {
        Section s(*node, "scenarios");
        s.integer("n_scenarios", cfg.n_scenarios, 1);
        s.integer("seed", cfg.seed, 0);
        s.finish();
    }
    cfg.fleet_gen.seed = cfg.seed;

    if (const json* node = root.get("fleet")) {
        Section s(*node, "fleet");
        s.integer("horizon", cfg.fleet_gen.horizon, 1);
        if (s.has("seed")) {
            s.integer("seed", cfg.fleet_gen.seed, 0);
            cfg.fleet_seed_set = true;
        }
        if (const json* assets = s.get("assets")) {
            for (const char* key : {"n_assets", "calendar_limit_range", "usage_limit_range", "rul_mean_range",
                                    "rul_std_range", "usage_mean_range", "usage_cv_range",
                                    "initial_fraction_range"}) {
                if (s.has(key)) throw ConfigError(s.key_path(key) + ": not allowed together with fleet.assets");
            }
            if (!assets->is_array() || assets->empty()) throw ConfigError("fleet.assets: expected a non-empty array");
            for (std::size_t k = 0; k < assets->size(); ++k) {
                const std::string path = "fleet.assets[" + std::to_string(k) + "]";
                Section a(assets->at(k), path);
                AssetSpec spec;
                a.text("id", spec.id);
                if (spec.id.empty()) throw ConfigError(path + ".id: required non-empty string");
                const char* required[] = {"calendar_limit", "usage_limit", "rul_mean", "rul_std",
                                          "usage_mean_per_period", "usage_cv", "initial_age", "initial_usage"};
                for (const char* key : required) {
                    if (!a.has(key)) throw ConfigError(a.key_path(key) + ": required");
                }
                a.number("calendar_limit", spec.calendar_limit);
                a.number("usage_limit", spec.usage_limit);
                a.number("rul_mean", spec.rul_mean);
                a.number("rul_std", spec.rul_std);
                a.number("usage_mean_per_period", spec.usage_mean_per_period);
                a.number("usage_cv", spec.usage_cv);
                a.number("initial_age", spec.initial_age);
                a.number("initial_usage", spec.initial_usage);
                spec.costs = cfg.costs;
                if (const json* c = a.get("costs")) {
                    Section cs(*c, path + ".costs");
                    read_costs(cs, spec.costs);
                    cs.finish();
                }
                a.finish();
                try {
                    spec.validate();
                } catch (const ConfigError& e) {
                    throw ConfigError(path + ": " + e.what());
                }
                cfg.explicit_assets.push_back(std::move(spec));
            }
            cfg.fleet_gen.n_assets = static_cast<int>(cfg.explicit_assets.size());
        } else {
            s.integer("n_assets", cfg.fleet_gen.n_assets, 1);
            s.range("calendar_limit_range", cfg.fleet_gen.calendar_limit_range);
            s.range("usage_limit_range", cfg.fleet_gen.usage_limit_range);
            s.range("rul_mean_range", cfg.fleet_gen.rul_mean_range);
            s.range("rul_std_range", cfg.fleet_gen.rul_std_range);
            s.range("usage_mean_range", cfg.fleet_gen.usage_mean_range);
            s.range("usage_cv_range", cfg.fleet_gen.usage_cv_range);
            s.range("initial_fraction_range", cfg.fleet_gen.initial_fraction_range);
        }
        s.finish();
    }

    if (const json* node = root.get("risk")) {
        Section s(*node, "risk");
        s.number("p_max", cfg.risk.p_max);
        s.number("decay_rate", cfg.risk.decay_rate);
        s.number("perf_window", cfg.risk.perf_window);
        s.finish();
    }

    if (const json* node = root.get("policies")) {
        Section s(*node, "policies");
        s.number("trigger_prob", cfg.policies.trigger_prob);
        s.number("alpha", cfg.policies.alpha);
        s.integer("exhaustive_budget", cfg.policies.exhaustive_budget, 1);
        s.finish();
    }

    if (const json* node = root.get("output")) {
        Section s(*node, "output");
        s.text("directory", cfg.output_dir);
        if (const json* f = s.get("formats")) {
            if (!f->is_array()) throw ConfigError("output.formats: expected an array of strings");
            cfg.formats.clear();
            for (const auto& item : *f) {
                if (!item.is_string() || item.get<std::string>() != "csv") {
                    throw ConfigError("output.formats: only \"csv\" is supported");
                }
                cfg.formats.push_back("csv");
            }
        }
        s.finish();
    }
    root.finish();

    // cross-module validity; ConfigError messages already carry the key path
    cfg.risk.validate();
    cfg.policies.validate();
    if (cfg.explicit_assets.empty()) {
        cfg.fleet_gen.validate();
    } else {
        std::set<std::string> ids;
        for (const auto& a : cfg.explicit_assets) {
            if (!ids.insert(a.id).second) throw ConfigError("fleet.assets: duplicate id '" + a.id + "'");
        }
    }
    return cfg;
}

RunConfig load_config(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(path.string() + ": parse error: " + e.what());
    }
    return parse_config(doc);
}

json to_json(const RunConfig& c) {
    json fleet;
    fleet["horizon"] = c.fleet_gen.horizon;
    if (c.fleet_seed_set) fleet["seed"] = c.fleet_gen.seed;
    if (c.explicit_assets.empty()) {
        const auto& g = c.fleet_gen;
        fleet["n_assets"] = g.n_assets;
        fleet["calendar_limit_range"] = range_json(g.calendar_limit_range);
        fleet["usage_limit_range"] = range_json(g.usage_limit_range);
        fleet["rul_mean_range"] = range_json(g.rul_mean_range);
        fleet["rul_std_range"] = range_json(g.rul_std_range);
        fleet["usage_mean_range"] = range_json(g.usage_mean_range);
        fleet["usage_cv_range"] = range_json(g.usage_cv_range);
        fleet["initial_fraction_range"] = range_json(g.initial_fraction_range);
    } else {
        json assets = json::array();
        for (const auto& a : c.explicit_assets) {
            assets.push_back({{"id", a.id},
                              {"calendar_limit", a.calendar_limit},
                              {"usage_limit", a.usage_limit},
                              {"rul_mean", a.rul_mean},
                              {"rul_std", a.rul_std},
                              {"usage_mean_per_period", a.usage_mean_per_period},
                              {"usage_cv", a.usage_cv},
                              {"initial_age", a.initial_age},
                              {"initial_usage", a.initial_usage},
                              {"costs", costs_json(a.costs)}});
        }
        fleet["assets"] = std::move(assets);
    }

    json costs = costs_json(c.costs);
    if (!c.cost_overrides.empty()) {
        json ov = json::object();
        for (const auto& [id, o] : c.cost_overrides) {
            json entry = json::object();
            if (o.pm) entry["pm"] = *o.pm;
            if (o.fail) entry["fail"] = *o.fail;
            if (o.perf) entry["perf"] = *o.perf;
            if (o.early) entry["early"] = *o.early;
            ov[id] = std::move(entry);
        }
        costs["overrides"] = std::move(ov);
    }

    return json{
        {"fleet", std::move(fleet)},
        {"scenarios", {{"n_scenarios", c.n_scenarios}, {"seed", c.seed}}},
        {"risk", {{"p_max", c.risk.p_max}, {"decay_rate", c.risk.decay_rate}, {"perf_window", c.risk.perf_window}}},
        {"costs", std::move(costs)},
        {"policies",
         {{"trigger_prob", c.policies.trigger_prob},
          {"alpha", c.policies.alpha},
          {"exhaustive_budget", c.policies.exhaustive_budget}}},
        {"output", {{"directory", c.output_dir}, {"formats", c.formats}}},
    };
}

FleetSpec build_fleet(const RunConfig& config) {
    FleetSpec fleet;
    if (config.explicit_assets.empty()) {
        FleetGenConfig gen = config.fleet_gen;
        gen.seed = config.fleet_seed();
        gen.costs = config.costs;
        fleet = generate_fleet(gen);
    } else {
        fleet.assets = config.explicit_assets;
        fleet.horizon = config.fleet_gen.horizon;
    }
    for (const auto& [id, o] : config.cost_overrides) {
        auto idx = fleet.index_of(id);
        if (!idx) throw ConfigError("costs.overrides." + id + ": unknown asset id");
        auto& c = fleet.assets[*idx].costs;
        if (o.pm) c.pm = *o.pm;
        if (o.fail) c.fail = *o.fail;
        if (o.perf) c.perf = *o.perf;
        if (o.early) c.early = *o.early;
    }
    fleet.validate();
    return fleet;
}

}  // namespace fleetmaint
