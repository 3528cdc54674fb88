// Command-line front end; links only the C API.
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ricci_disk.h"

int main(int argc, char** argv) {
    CLI::App app{"Boundary-value Ricci flow laboratory on the rotationally "
                 "symmetric 2-ball"};
    app.require_subcommand(1);

    std::string configPath, resumePath;
    auto* run = app.add_subcommand("run", "Evolve a configured initial metric");
    run->add_option("--config", configPath, "JSON run configuration")
        ->required();
    run->add_option("--resume", resumePath, "snapshot JSON to resume from");

    double epsilon = 0.05;
    int gridN = 512;
    std::string familyOut;
    auto* family =
        app.add_subcommand("family", "Emit an interpolated family profile");
    family->add_option("--epsilon", epsilon, "family parameter in (0, 1)")
        ->required();
    family->add_option("--grid", gridN, "grid intervals");
    family->add_option("--out", familyOut, "output path (default stdout)");

    bool cigarEntropy = false;
    std::vector<double> rList;
    double cutoffMult = 8.0;
    std::string probeOut;
    auto* probe = app.add_subcommand("probe", "Entropy probes");
    probe->add_flag("--cigar-entropy", cigarEntropy,
                    "plateau entropy probe on the cigar");
    probe->add_option("--r-list", rList, "probe scales (comma separated)")
        ->required()
        ->delimiter(',');
    probe->add_option("--cutoff-mult", cutoffMult,
                      "truncation radius as a multiple of r");
    probe->add_option("--out", probeOut, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (run->parsed())
        return rd_cmd_run(configPath.c_str(),
                          resumePath.empty() ? nullptr : resumePath.c_str());
    if (family->parsed())
        return rd_cmd_family(epsilon, gridN,
                             familyOut.empty() ? nullptr : familyOut.c_str());
    if (probe->parsed()) {
        if (!cigarEntropy) return 1;
        return rd_cmd_probe(rList.data(), rList.size(), cutoffMult,
                            probeOut.empty() ? nullptr : probeOut.c_str());
    }
    return 1;
}
