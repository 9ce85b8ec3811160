#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "pv/cli.hpp"

using nlohmann::json;

int main(int argc, char** argv) {
    CLI::App app{"pvlab: numerical laboratory for a position-verification game"};
    app.require_subcommand(1);

    const std::vector<std::string> commands = {"honest", "eval",    "zoo",    "sigma",
                                               "pisier", "gap",     "norm",   "type2",
                                               "radnorm", "gaussnorm", "seesaw", "report"};
    struct Args {
        std::string config_path, out_path, csv_path;
        std::vector<std::string> sets;
    };
    std::map<std::string, Args> args;
    for (const auto& cmd : commands) {
        auto* sub = app.add_subcommand(cmd);
        auto& a = args[cmd];
        sub->add_option("--config", a.config_path, "JSON config file");
        sub->add_option("--set", a.sets, "key=value config overrides")->take_all();
        sub->add_option("--out", a.out_path, "report JSON path (default: stdout)");
        sub->add_option("--csv", a.csv_path, "also write sweep rows as CSV");
    }
    CLI11_PARSE(app, argc, argv);

    const std::string cmd = app.get_subcommands().front()->get_name();
    const Args& a = args[cmd];
    try {
        json config = json::object();
        if (!a.config_path.empty()) {
            std::ifstream in(a.config_path);
            if (!in) {
                std::cerr << "error: cannot read config file " << a.config_path << "\n";
                return 2;
            }
            config = json::parse(in);
        }
        config = pv::cli::apply_overrides(config, a.sets);
        if (config.contains("command") && config.at("command") != cmd) {
            std::cerr << "error: config command '" << config.at("command").get<std::string>()
                      << "' does not match subcommand '" << cmd << "'\n";
            return 2;
        }
        config["command"] = cmd;
        json report = pv::cli::run(config);
        std::string out_path = a.out_path;
        if (out_path.empty() && config.contains("output") && config.at("output").is_string())
            out_path = config.at("output").get<std::string>();
        if (out_path.empty()) {
            std::cout << report.dump(2) << "\n";
        } else {
            std::ofstream out(out_path);
            out << report.dump(2) << "\n";
            if (!out) {
                std::cerr << "error: failed to write report to " << out_path << "\n";
                return 2;
            }
        }
        if (!a.csv_path.empty()) {
            std::ofstream csv(a.csv_path);
            csv << pv::cli::csv_rows(report);
        }
        return 0;
    } catch (const pv::cli::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
