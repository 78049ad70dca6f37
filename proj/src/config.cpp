#include "cqed/config.hpp"

#include <fstream>
#include <set>

namespace cqed {

using nlohmann::json;

namespace {

const std::set<std::string> kTopKeys = {"experiment", "output",    "seed",  "jobs",
                                        "constants",  "grid",      "fock",  "modes",
                                        "quantization_volume",     "potential",
                                        "include_dip", "scan"};
const std::set<std::string> kConstantKeys = {"hbar", "m", "e", "c", "eps0"};
const std::set<std::string> kGridKeys = {"x_min", "x_max", "n_points", "boundary",
                                         "stencil_order"};
const std::set<std::string> kFockKeys = {"n_max"};
const std::set<std::string> kModeKeys = {"omega", "lambda", "epsilon_sign"};
const std::set<std::string> kPotentialKeys = {"kind",   "omega",     "depth", "width",
                                              "charge", "softening", "values"};

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where,
                std::vector<std::string>& diag) {
    if (!j.is_object()) {
        diag.push_back(where + ": expected an object");
        return;
    }
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            diag.push_back(where + ": unknown key '" + it.key() + "'");
}

bool expect_number(const json& j, const std::string& key, const std::string& where,
                   std::vector<std::string>& diag) {
    if (!j.contains(key)) return false;
    if (!j[key].is_number()) {
        diag.push_back(where + "." + key + ": expected a number");
        return false;
    }
    return true;
}

ExternalPotential parse_potential(const json& j) {
    ExternalPotential v;
    const std::string kind = j.value("kind", "zero");
    if (kind == "zero") {
        v = ExternalPotential::zero();
    } else if (kind == "harmonic") {
        v = ExternalPotential::harmonic_well(j.value("omega", 1.0));
    } else if (kind == "gaussian_well") {
        v = ExternalPotential::gaussian(j.value("depth", 1.0), j.value("width", 1.0));
    } else if (kind == "soft_coulomb") {
        v = ExternalPotential::soft_coulomb_well(j.value("charge", 1.0), j.value("softening", 1.0));
    } else if (kind == "tabulated") {
        v = ExternalPotential::tabulated_values(j.value("values", std::vector<double>{}));
    } else {
        throw config_error("potential.kind: unknown kind '" + kind + "'");
    }
    return v;
}

}  // namespace

CompositeBasis ExperimentConfig::basis() const {
    CompositeBasis b;
    b.grid = grid;
    for (int i = 0; i < modes.size(); ++i) {
        const int nm = fock_n_max.size() == 1 ? fock_n_max[0]
                                              : fock_n_max[static_cast<std::size_t>(i)];
        b.focks.push_back({nm});
    }
    return b;
}

const std::vector<std::string>& ExperimentConfig::known_experiments() {
    static const std::vector<std::string> names = {
        "gauge-equivalence", "unboundedness-scan", "slater-scan",      "depolarization",
        "maxwell-eom",       "box-instability",    "model-zoo",        "stark",
        "field-energy-demo", "translation-check"};
    return names;
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
    const auto diags = validate_json(j);
    if (!diags.empty()) throw config_error("config invalid: " + diags.front());

    ExperimentConfig cfg;
    cfg.experiment = j.at("experiment").get<std::string>();
    cfg.output = j.value("output", cfg.output);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.jobs = j.value("jobs", cfg.jobs);

    if (j.contains("constants")) {
        const json& c = j["constants"];
        cfg.constants.hbar = c.value("hbar", cfg.constants.hbar);
        cfg.constants.m = c.value("m", cfg.constants.m);
        cfg.constants.e = c.value("e", cfg.constants.e);
        cfg.constants.c = c.value("c", cfg.constants.c);
        cfg.constants.eps0 = c.value("eps0", cfg.constants.eps0);
        cfg.constants.validate();
    }
    if (j.contains("grid")) {
        const json& g = j["grid"];
        cfg.grid.x_min = g.value("x_min", cfg.grid.x_min);
        cfg.grid.x_max = g.value("x_max", cfg.grid.x_max);
        cfg.grid.n_points = g.value("n_points", cfg.grid.n_points);
        cfg.grid.stencil_order = g.value("stencil_order", cfg.grid.stencil_order);
        if (g.contains("boundary"))
            cfg.grid.boundary = boundary_from_string(g["boundary"].get<std::string>());
        cfg.grid.validate();
    }
    if (j.contains("fock")) {
        cfg.fock_n_max.clear();
        const json& f = j["fock"]["n_max"];
        if (f.is_array())
            for (const auto& v : f) cfg.fock_n_max.push_back(v.get<int>());
        else
            cfg.fock_n_max.push_back(f.get<int>());
    }
    if (j.contains("modes")) {
        cfg.modes.modes.clear();
        for (const auto& m : j["modes"]) {
            Mode mode;
            mode.omega = m.value("omega", 1.0);
            mode.lambda = m.value("lambda", 0.0);
            mode.epsilon_sign = m.value("epsilon_sign", 1);
            cfg.modes.modes.push_back(mode);
        }
    } else {
        cfg.modes.modes.push_back({1.0, 0.0, 1});
    }
    if (j.contains("quantization_volume"))
        cfg.modes.quantization_volume = j["quantization_volume"].get<double>();
    cfg.modes.validate(cfg.constants);
    if (cfg.fock_n_max.size() != 1 &&
        cfg.fock_n_max.size() != static_cast<std::size_t>(cfg.modes.size()))
        throw config_error("fock.n_max: need one value or one per mode");

    if (j.contains("potential")) cfg.potential = parse_potential(j["potential"]);
    cfg.include_dip = j.value("include_dip", true);
    cfg.scan = j.value("scan", json::object());
    return cfg;
}

std::vector<std::string> ExperimentConfig::validate_json(const json& j) {
    std::vector<std::string> diag;
    if (!j.is_object()) {
        diag.push_back("top level: expected a JSON object");
        return diag;
    }
    check_keys(j, kTopKeys, "top level", diag);

    if (!j.contains("experiment")) {
        diag.push_back("experiment: required key missing");
    } else if (!j["experiment"].is_string()) {
        diag.push_back("experiment: expected a string");
    } else {
        const std::string name = j["experiment"].get<std::string>();
        const auto& known = known_experiments();
        if (std::find(known.begin(), known.end(), name) == known.end()) {
            std::string valid;
            for (const auto& k : known) valid += (valid.empty() ? "" : ", ") + k;
            diag.push_back("experiment: unknown experiment '" + name + "' (valid: " + valid + ")");
        }
    }

    if (j.contains("constants")) {
        check_keys(j["constants"], kConstantKeys, "constants", diag);
        for (const std::string key : kConstantKeys)
            if (expect_number(j["constants"], key, "constants", diag) &&
                j["constants"][key].get<double>() <= 0)
                diag.push_back("constants." + key + ": must be > 0");
    }
    if (j.contains("grid")) {
        const json& g = j["grid"];
        check_keys(g, kGridKeys, "grid", diag);
        if (g.is_object()) {
            if (expect_number(g, "n_points", "grid", diag) && g["n_points"].get<int>() < 3)
                diag.push_back("grid.n_points: must be >= 3");
            if (g.contains("stencil_order") && g["stencil_order"].is_number() &&
                g["stencil_order"].get<int>() != 2 && g["stencil_order"].get<int>() != 4)
                diag.push_back("grid.stencil_order: must be 2 or 4");
            if (g.contains("boundary")) {
                const std::string b = g["boundary"].is_string() ? g["boundary"].get<std::string>() : "?";
                if (b != "dirichlet" && b != "periodic")
                    diag.push_back("grid.boundary: must be dirichlet or periodic");
            }
            if (g.contains("x_min") && g.contains("x_max") && g["x_min"].is_number() &&
                g["x_max"].is_number() &&
                g["x_max"].get<double>() <= g["x_min"].get<double>())
                diag.push_back("grid.x_max: must exceed grid.x_min");
        }
    }
    if (j.contains("fock")) {
        check_keys(j["fock"], kFockKeys, "fock", diag);
        if (j["fock"].is_object() && j["fock"].contains("n_max")) {
            const json& f = j["fock"]["n_max"];
            auto check_one = [&](const json& v, const std::string& where) {
                if (!v.is_number_integer() || v.get<int>() < 1)
                    diag.push_back(where + ": must be an integer >= 1");
            };
            if (f.is_array()) {
                for (std::size_t i = 0; i < f.size(); ++i)
                    check_one(f[i], "fock.n_max[" + std::to_string(i) + "]");
            } else {
                check_one(f, "fock.n_max");
            }
        } else if (j["fock"].is_object()) {
            diag.push_back("fock.n_max: required when a fock section is given");
        }
    }
    if (j.contains("modes")) {
        if (!j["modes"].is_array() || j["modes"].empty()) {
            diag.push_back("modes: expected a non-empty array");
        } else {
            for (std::size_t i = 0; i < j["modes"].size(); ++i) {
                const std::string where = "modes[" + std::to_string(i) + "]";
                check_keys(j["modes"][i], kModeKeys, where, diag);
                if (expect_number(j["modes"][i], "omega", where, diag) &&
                    j["modes"][i]["omega"].get<double>() <= 0)
                    diag.push_back(where + ".omega: must be > 0");
                if (j["modes"][i].contains("epsilon_sign")) {
                    const json& s = j["modes"][i]["epsilon_sign"];
                    if (!s.is_number_integer() || (s.get<int>() != 1 && s.get<int>() != -1))
                        diag.push_back(where + ".epsilon_sign: must be +1 or -1");
                }
            }
        }
    }
    if (j.contains("potential")) {
        check_keys(j["potential"], kPotentialKeys, "potential", diag);
        if (j["potential"].is_object()) {
            const std::string kind = j["potential"].value("kind", "zero");
            if (kind != "zero" && kind != "harmonic" && kind != "gaussian_well" &&
                kind != "soft_coulomb" && kind != "tabulated")
                diag.push_back("potential.kind: unknown kind '" + kind + "'");
            try {
                if (diag.empty()) parse_potential(j["potential"]).validate();
            } catch (const config_error& err) {
                diag.push_back(std::string("potential: ") + err.what());
            }
        }
    }
    if (j.contains("scan") && !j["scan"].is_object())
        diag.push_back("scan: expected an object");
    if (j.contains("seed") && (!j["seed"].is_number_integer() || j["seed"].get<long long>() < 0))
        diag.push_back("seed: expected a non-negative integer");
    if (j.contains("jobs") && !j["jobs"].is_number_integer())
        diag.push_back("jobs: expected an integer");
    return diag;
}

json load_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw config_error("cannot read config file '" + path + "'");
    try {
        return json::parse(f);
    } catch (const json::parse_error& err) {
        throw config_error("config file '" + path + "' is not valid JSON: " + err.what());
    }
}

void apply_override(json& j, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw config_error("override '" + assignment + "' is not of the form key=value");
    const std::string path = assignment.substr(0, eq);
    const std::string raw = assignment.substr(eq + 1);

    json* node = &j;
    std::size_t pos = 0;
    while (pos < path.size()) {
        std::size_t dot = path.find('.', pos);
        std::string token = path.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
        pos = dot == std::string::npos ? path.size() : dot + 1;

        std::size_t bracket = token.find('[');
        long index = -1;
        if (bracket != std::string::npos) {
            if (token.back() != ']')
                throw config_error("override path '" + path + "' has a malformed index");
            index = std::stol(token.substr(bracket + 1, token.size() - bracket - 2));
            token = token.substr(0, bracket);
        }
        node = &(*node)[token];
        if (index >= 0) {
            if (!node->is_array() || index >= static_cast<long>(node->size()))
                throw config_error("override path '" + path + "' indexes past the end");
            node = &(*node)[index];
        }
    }
    try {
        *node = json::parse(raw);
    } catch (const json::parse_error&) {
        *node = raw;  // plain string value
    }
}

}  // namespace cqed
