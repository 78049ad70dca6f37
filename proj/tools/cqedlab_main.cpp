#include <CLI11.hpp>
#include <iostream>

#include "cqed/errors.hpp"
#include "cqed/experiments.hpp"

namespace {

// exit codes: 0 ok, 2 configuration, 3 numerical non-convergence, 4 internal
constexpr int kOk = 0;
constexpr int kConfigError = 2;
constexpr int kNumericalError = 3;
constexpr int kInternalError = 4;

int do_run(const std::string& path, const std::vector<std::string>& overrides) {
    nlohmann::json j = cqed::load_json_file(path);
    for (const auto& ov : overrides) cqed::apply_override(j, ov);

    const auto diagnostics = cqed::ExperimentConfig::validate_json(j);
    if (!diagnostics.empty()) {
        for (const auto& d : diagnostics) std::cerr << "config: " << d << "\n";
        return kConfigError;
    }
    const auto cfg = cqed::ExperimentConfig::from_json(j);
    const cqed::ResultTable table = cqed::run_experiment(cfg);
    table.write(cfg.output);

    std::cout << "wrote " << cfg.output << " (" << table.rows.size() << " rows)\n";
    for (const auto& v : table.verdicts) std::cout << "verdict: " << v << "\n";
    return kOk;
}

int do_validate(const std::string& path) {
    const auto diagnostics = cqed::ExperimentConfig::validate_json(cqed::load_json_file(path));
    if (diagnostics.empty()) {
        std::cout << "ok: " << path << " is a valid experiment config\n";
        return kOk;
    }
    for (const auto& d : diagnostics) std::cout << d << "\n";
    return kConfigError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cqedlab - coupled light-matter numerics in the long-wavelength limit"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> overrides;
    auto* run = app.add_subcommand("run", "run an experiment from a config file");
    run->add_option("config", config_path, "path to the JSON experiment config")->required();
    run->add_option("overrides", overrides, "key=value overrides, e.g. grid.n_points=400");

    std::string validate_path;
    auto* validate = app.add_subcommand("validate", "check a config against the schema");
    validate->add_option("config", validate_path, "path to the JSON experiment config")->required();

    auto* list = app.add_subcommand("list-experiments", "print the experiment names");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return do_run(config_path, overrides);
        if (validate->parsed()) return do_validate(validate_path);
        if (list->parsed()) {
            for (const auto& [name, desc] : cqed::experiment_catalog())
                std::cout << name << "  -  " << desc << "\n";
            return kOk;
        }
    } catch (const cqed::config_error& err) {
        std::cerr << "config error: " << err.what() << "\n";
        return kConfigError;
    } catch (const cqed::convergence_error& err) {
        std::cerr << "numerical error: " << err.what() << "\n";
        return kNumericalError;
    } catch (const cqed::invariant_error& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return kInternalError;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return kInternalError;
    }
    return kOk;
}
