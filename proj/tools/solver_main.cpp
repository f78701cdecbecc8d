#include <cstddef>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trabox/commands.hpp"
#include "trabox/errors.hpp"

namespace {

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> sizes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &pos);
        } catch (const std::exception&) {
            throw trabox::ConfigError("--sizes: cannot parse \"" + item + "\"");
        }
        if (pos != item.size() || v == 0)
            throw trabox::ConfigError("--sizes: bad basis size \"" + item + "\"");
        sizes.push_back(v);
    }
    if (sizes.empty()) throw trabox::ConfigError("--sizes: empty list");
    return sizes;
}

trabox::ReconstructionMethod parse_method(const std::string& text) {
    if (text == "recursion") return trabox::ReconstructionMethod::recursion;
    if (text == "eigenvector") return trabox::ReconstructionMethod::eigenvector;
    throw trabox::ConfigError("--method must be recursion or eigenvector");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bound-state solver for the five-parameter singular potential box"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::string sizes_text = "15,20,30,100";
    std::string method_text = "eigenvector";
    std::size_t level = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON configuration file")
            ->required();
        sub->add_option("--out", out_dir, "override the output directory");
    };

    CLI::App* spectrum = app.add_subcommand("spectrum", "energy spectrum table");
    add_common(spectrum);

    CLI::App* converge =
        app.add_subcommand("converge", "spectrum vs basis size");
    add_common(converge);
    converge->add_option("--sizes", sizes_text,
                         "comma-separated ascending basis sizes");

    CLI::App* potential =
        app.add_subcommand("potential", "potential profile for plotting");
    add_common(potential);

    CLI::App* wavefunction =
        app.add_subcommand("wavefunction", "bound-state reconstruction");
    add_common(wavefunction);
    wavefunction->add_option("--level", level, "energy level m");
    wavefunction->add_option("--method", method_text,
                             "recursion or eigenvector");

    CLI::App* oracle = app.add_subcommand(
        "oracle-compare", "spectral vs finite-difference eigenvalues");
    add_common(oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        trabox::RunConfig cfg = trabox::load_run_config(config_path);
        if (!out_dir.empty()) cfg.output_dir = out_dir;

        if (spectrum->parsed())
            trabox::commands::cmd_spectrum(cfg, std::cout);
        else if (converge->parsed())
            trabox::commands::cmd_converge(cfg, parse_sizes(sizes_text),
                                           std::cout);
        else if (potential->parsed())
            trabox::commands::cmd_potential(cfg, std::cout);
        else if (wavefunction->parsed())
            trabox::commands::cmd_wavefunction(cfg, level,
                                               parse_method(method_text),
                                               std::cout);
        else if (oracle->parsed())
            trabox::commands::cmd_oracle_compare(cfg, std::cout);
    } catch (const trabox::ConfigError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::domain_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "numeric error: " << ex.what() << "\n";
        return 3;
    }
    return 0;
}
