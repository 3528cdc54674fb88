#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ricci/entropy.hpp"
#include "ricci/flow.hpp"
#include "ricci/geometry.hpp"

namespace ricci::io {

/// Snapshot interchange format: {"h": number, "f": [numbers]}.
std::string metric_to_json(const RadialMetric& m);
RadialMetric metric_from_json(const std::string& text);
void write_metric(const std::string& path, const RadialMetric& m);
RadialMetric read_metric(const std::string& path);

/// Initial-condition variants accepted by the run config.
struct InitialCondition {
    enum class Kind { Hemisphere, Cap, FlatDisk, Cigar, Family, File };
    Kind kind = Kind::Hemisphere;
    double K = 1.0;        // cap
    double rhoMax = 0.0;   // cap
    double rho0 = 1.0;     // flat disk
    double L = 10.0;       // cigar
    double epsilon = 0.05; // family
    std::string path;      // file
};

struct EntropyScheduleConfig {
    int cadence = 10;          ///< mu every this many records
    double tau = -1.0;         ///< fixed tau, or <= 0 for "remaining time"
    entropy::EntropyOptions options;
};

struct RunConfig {
    InitialCondition initial;
    SolverConfig solver;
    int diagnosticsCadence = 1;
    std::optional<EntropyScheduleConfig> entropySchedule;
    std::string outDir;
    std::uint64_t seed = 1;
    std::string rawJson;  ///< config echo for the manifest
};

/// Parses and validates; throws on malformed input (no filesystem mutation).
RunConfig parse_run_config(const std::string& path);

RadialMetric build_initial_metric(const InitialCondition& init, int N);

/// CSV schema of the diagnostics table; NaN serializes as an empty field.
void write_diagnostics_csv(const std::string& path,
                           const std::vector<DiagnosticsRecord>& records);

void write_snapshot(const std::string& path, const Snapshot& snap,
                    const std::string& baseRef);
Snapshot read_snapshot(const std::string& path);

/// Full run pipeline: build, evolve, normalize, schedule mu, persist.
/// Returns the process exit status (0 ok, 2 solver breakdown).
int cmd_run(const std::string& configPath,
            const std::optional<std::string>& resumePath);

/// Family profile + provenance emission; exit 3 when no root certifies.
int cmd_family(double epsilon, int gridN,
               const std::optional<std::string>& outPath);

/// Cigar entropy probe CSV (r, c, W); exit 2 on tail-mass failure.
int cmd_probe(const std::vector<double>& rList, double cutoffMult,
              const std::optional<std::string>& outPath);

} // namespace ricci::io
