// fsscoex: FSS earth-station to 5G UE coexistence calculator.
//
//   fsscoex sweep       SINR vs distance (csv | svg | table)
//   fsscoex separation  minimum separation distance per class and lobe
//   fsscoex eirp-table  ES EIRP densities per class and lobe

#include "fsscoex/config.hpp"
#include "fsscoex/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct FlagSpec {
    const char* flag;
    const char* key;
    const char* help;
};

constexpr FlagSpec flag_specs[] = {
    {"--class", "class", "ES class {1|2|3}"},
    {"--lobe", "lobe", "{mainlobe|sidelobe}"},
    {"--count", "count", "number of equidistant ES transmitters"},
    {"--counts", "counts", "comma-separated counts, one series each (e.g. 1,5,10)"},
    {"--rsrp-dbm", "rsrp", "victim RSRP in dBm"},
    {"--nf-db", "noise_figure", "victim noise figure in dB"},
    {"--temperature-k", "temperature", "victim noise temperature in K"},
    {"--freq-hz", "frequency", "carrier frequency in Hz"},
    {"--bw-hz", "bandwidth", "victim bandwidth in Hz"},
    {"--d-start", "d_start", "first sweep distance in m"},
    {"--d-stop", "d_stop", "last sweep distance in m"},
    {"--step", "step", "sweep step in m"},
    {"--threshold-db", "threshold", "SINR threshold in dB"},
    {"--format", "format", "{csv|svg|table}"},
    {"--out", "out", "output path (default: stdout)"},
};

struct CommandFlags {
    std::string config_path;
    std::vector<std::string> values = std::vector<std::string>(std::size(flag_specs));
    std::vector<CLI::Option*> options;
};

void register_flags(CLI::App* cmd, CommandFlags& f)
{
    cmd->add_option("--config", f.config_path, "key = value config file");
    for (std::size_t i = 0; i < std::size(flag_specs); ++i)
        f.options.push_back(cmd->add_option(flag_specs[i].flag, f.values[i], flag_specs[i].help));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"FSS earth-station to 5G UE interference and separation-distance calculator"};
    app.require_subcommand(1);

    CommandFlags sweep_flags, sep_flags, eirp_flags;
    auto* sweep_cmd = app.add_subcommand("sweep", "SINR vs distance sweep");
    auto* sep_cmd = app.add_subcommand("separation", "minimum separation distance table");
    auto* eirp_cmd = app.add_subcommand("eirp-table", "ES EIRP density table");
    register_flags(sweep_cmd, sweep_flags);
    register_flags(sep_cmd, sep_flags);
    register_flags(eirp_cmd, eirp_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return fsscoex::ExitValidation;
    }

    CommandFlags& f = sweep_cmd->parsed() ? sweep_flags : sep_cmd->parsed() ? sep_flags : eirp_flags;

    std::string config_text;
    if (!f.config_path.empty()) {
        std::ifstream in(f.config_path, std::ios::binary);
        if (!in) {
            std::cerr << "error: cannot read config file '" << f.config_path << "'\n";
            return fsscoex::ExitIo;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        config_text = ss.str();
    }

    std::vector<fsscoex::ConfigOverride> overrides;
    for (std::size_t i = 0; i < f.options.size(); ++i)
        if (f.options[i]->count() > 0)
            overrides.emplace_back(flag_specs[i].key, f.values[i]);

    fsscoex::RunConfig cfg;
    try {
        cfg = fsscoex::parse_config(config_text, overrides);
    } catch (const fsscoex::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return fsscoex::ExitValidation;
    }

    if (sweep_cmd->parsed())
        return fsscoex::run_sweep_command(cfg, std::cout, std::cerr);
    if (sep_cmd->parsed())
        return fsscoex::run_separation_command(cfg, std::cout, std::cerr);
    return fsscoex::run_eirp_table_command(cfg, std::cout, std::cerr);
}
