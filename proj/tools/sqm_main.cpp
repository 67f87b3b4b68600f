#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sqm/app.hpp"
#include "sqm/config.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Symplectic phase-space charmonium model"};
    std::string command;
    std::string config_path;
    std::string out_dir;
    app.add_option("command", command, "spectrum | wigner | negativity | verify | report | diagnose")
        ->required()
        ->check(CLI::IsMember({"spectrum", "wigner", "negativity", "verify", "report", "diagnose"}));
    app.add_option("--config", config_path, "flat key=value configuration file")->required();
    app.add_option("--out", out_dir, "output directory (overrides out_dir)");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "ERROR USAGE: " << e.what() << "\n";
        return sqm::kExitConfig;
    }

    try {
        sqm::RunConfig cfg = sqm::load_config(config_path);
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        return sqm::run_command(command, cfg, std::cout, std::cerr);
    } catch (const sqm::Error& e) {
        std::cerr << "ERROR " << sqm::to_string(e.code()) << ": " << e.what() << "\n";
        return sqm::exit_code_for(e.code());
    }
}
