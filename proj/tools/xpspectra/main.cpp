#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "commands.hpp"

using namespace xpcli;

int main(int argc, char** argv) {
    CLI::App app{"Spectra and wave functions of the xp model with boundary pairs."};
    app.name("xpspectra");
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string truncation = "rs", format = "csv";

    auto* o_emin = app.add_option("--e-min", cfg.e_min, "lower end of the energy range");
    auto* o_emax = app.add_option("--e-max", cfg.e_max, "upper end of the energy range");
    auto* o_step = app.add_option("--step", cfg.step, "grid step (zeros/wavefn: root scan step)");
    app.add_option("--kind", cfg.kind, "zeros/wavefn: smooth|riemann|trap; boundary: bk|synthetic");
    auto* o_eps = app.add_option("--epsilon", cfg.epsilon, "sign of a0 b0 (1 or -1)");
    app.add_option("--q-ab", cfg.q_ab, "trap separation q_a - q_b")->capture_default_str();
    app.add_option("--lambda", cfg.lambda, "energy cutoff of the wave-function integral")->capture_default_str();
    app.add_option("--k-smooth", cfg.k_smooth, "width of the smoothed sum")->capture_default_str();
    app.add_option("--truncation", truncation, "f(t): Riemann-Siegel main sum or smoothed sum")
        ->check(CLI::IsMember({"rs", "bk"}))
        ->capture_default_str();
    app.add_option("--format", format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--out", cfg.out, "output file (default stdout)");
    app.add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();
    app.add_option("--energy", cfg.energy, "wavefn: bound-state energy; boundary: trajectory energy");
    app.add_option("--index", cfg.index, "wavefn: 1-based root index in the range");
    app.add_option("--x-max", cfg.x_max, "upper end of the x grid")->capture_default_str();
    app.set_config("--config", "", "flat key = value file; keys are the long flag names")
        ->envname("XP_SPECTRA_CONFIG");
    app.allow_config_extras(false);

    const std::map<std::string, Command> commands{
        {"count", Command::count},   {"zeros", Command::zeros}, {"wavefn", Command::wavefn},
        {"euler", Command::euler},   {"trap", Command::trap},   {"boundary", Command::boundary}};
    const std::map<std::string, std::string> help{
        {"count", "zero counts N_R, N_smooth, N_QM and the fluctuation phase on an energy grid"},
        {"zeros", "bound states (zeros of the Jost function) in a range"},
        {"wavefn", "normalised bound-state wave functions on a hybrid x grid"},
        {"euler", "truncated sum f against the truncated Euler product"},
        {"trap", "Jost function and scattering phase of the trap spectrum"},
        {"boundary", "phase-space boundary rebuilt from a fluctuation profile"}};
    for (const auto& [name, c] : commands) app.add_subcommand(name, help.at(name));

    try {
        // a missing file named by the environment is an error, not a silent default
        if (const char* p = std::getenv("XP_SPECTRA_CONFIG"); p && *p && !std::filesystem::exists(p))
            throw CLI::FileError::Missing(p);
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    for (const auto& [name, c] : commands)
        if (app.got_subcommand(name)) cfg.command = c;
    cfg.truncation = truncation == "bk" ? xps::Truncation::bk_smoothed : xps::Truncation::rs_main;
    cfg.format = format == "json" ? Format::json : Format::csv;
    const char* cmd = command_name(cfg.command);

    try {
        finalize(cfg, o_emin->count() > 0, o_emax->count() > 0, o_step->count() > 0, o_eps->count() > 0);
        const Table t = run(cfg);
        std::ostringstream buf;
        if (cfg.format == Format::json)
            t.write_json(buf);
        else
            t.write_csv(buf);
        if (cfg.out.empty()) {
            std::cout << buf.str();
        } else {
            std::ofstream f(cfg.out, std::ios::binary);
            if (!(f << buf.str()) || !f.flush()) throw usage_error("cannot write " + cfg.out);
        }
    } catch (const usage_error& e) {
        std::cerr << "xpspectra " << cmd << ": " << e.what() << "\n" << app.help();
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "xpspectra " << cmd << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "xpspectra " << cmd << ": numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
