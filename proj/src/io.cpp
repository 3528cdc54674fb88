#include "ricci/io.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "ricci/diagnostics.hpp"
#include "ricci/exact.hpp"
#include "ricci/family.hpp"

namespace ricci::io {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_cell(double v) { return std::isnan(v) ? "" : format_double(v); }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::Io, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::Io, "cannot write " + path);
    out << text;
}

json metric_json(const RadialMetric& m) {
    return json{{"h", m.h}, {"f", m.f}};
}

RadialMetric metric_from(const json& j) {
    RadialMetric m;
    m.h = j.at("h").get<double>();
    m.f = j.at("f").get<std::vector<double>>();
    validate_metric(m);
    return m;
}

} // namespace

std::string metric_to_json(const RadialMetric& m) {
    return metric_json(m).dump(2) + "\n";
}

RadialMetric metric_from_json(const std::string& text) {
    return metric_from(json::parse(text));
}

void write_metric(const std::string& path, const RadialMetric& m) {
    spill(path, metric_to_json(m));
}

RadialMetric read_metric(const std::string& path) {
    return metric_from_json(slurp(path));
}

RadialMetric build_initial_metric(const InitialCondition& init, int N) {
    using Kind = InitialCondition::Kind;
    switch (init.kind) {
        case Kind::Hemisphere: return exact::hemisphere_metric(N);
        case Kind::Cap: return exact::spherical_cap_metric(init.K, init.rhoMax, N);
        case Kind::FlatDisk: return exact::flat_disk_metric(init.rho0, N);
        case Kind::Cigar: return exact::cigar_metric(init.L, N);
        case Kind::Family:
            return family::family_metric({.epsilon = init.epsilon}, N);
        case Kind::File: return read_metric(init.path);
    }
    fail(ErrorCode::InvalidArgument, "unknown initial condition");
}

RunConfig parse_run_config(const std::string& path) {
    RunConfig cfg;
    cfg.rawJson = slurp(path);
    const json j = json::parse(cfg.rawJson);

    const json& init = j.at("initial");
    const std::string type = init.at("type").get<std::string>();
    using Kind = InitialCondition::Kind;
    if (type == "hemisphere") {
        cfg.initial.kind = Kind::Hemisphere;
    } else if (type == "cap") {
        cfg.initial.kind = Kind::Cap;
        cfg.initial.K = init.at("K").get<double>();
        cfg.initial.rhoMax = init.at("rhoMax").get<double>();
    } else if (type == "flatDisk") {
        cfg.initial.kind = Kind::FlatDisk;
        cfg.initial.rho0 = init.at("rho0").get<double>();
    } else if (type == "cigar") {
        cfg.initial.kind = Kind::Cigar;
        cfg.initial.L = init.at("L").get<double>();
    } else if (type == "family") {
        cfg.initial.kind = Kind::Family;
        cfg.initial.epsilon = init.at("epsilon").get<double>();
    } else if (type == "file") {
        cfg.initial.kind = Kind::File;
        cfg.initial.path = init.at("path").get<std::string>();
    } else {
        fail(ErrorCode::InvalidArgument, "unknown initial type: " + type);
    }

    if (j.contains("solver")) {
        const json& s = j.at("solver");
        if (s.contains("N")) cfg.solver.N = s.at("N").get<int>();
        if (s.contains("cflSafety"))
            cfg.solver.cflSafety = s.at("cflSafety").get<double>();
        if (s.contains("tMax")) cfg.solver.tMax = s.at("tMax").get<double>();
        if (s.contains("rBlowup"))
            cfg.solver.rBlowup = s.at("rBlowup").get<double>();
        if (s.contains("dtMin")) cfg.solver.dtMin = s.at("dtMin").get<double>();
        if (s.contains("outputEvery"))
            cfg.solver.outputEvery = s.at("outputEvery").get<int>();
    }
    cfg.solver.validate();

    cfg.diagnosticsCadence = j.value("diagnosticsCadence", 1);
    if (cfg.diagnosticsCadence < 1)
        fail(ErrorCode::InvalidArgument, "diagnosticsCadence < 1");

    if (j.contains("entropy")) {
        const json& e = j.at("entropy");
        EntropyScheduleConfig sched;
        sched.cadence = e.value("cadence", 10);
        if (e.contains("tau") && e.at("tau").is_number())
            sched.tau = e.at("tau").get<double>();
        if (e.contains("maxIters"))
            sched.options.maxIters = e.at("maxIters").get<int>();
        if (e.contains("restarts"))
            sched.options.restarts = e.at("restarts").get<int>();
        sched.options.validate();
        if (sched.cadence < 1)
            fail(ErrorCode::InvalidArgument, "entropy cadence < 1");
        cfg.entropySchedule = sched;
    }

    cfg.outDir = j.at("outDir").get<std::string>();
    if (cfg.outDir.empty())
        fail(ErrorCode::InvalidArgument, "outDir must be nonempty");
    cfg.seed = j.value("seed", 1ull);

    if (const char* env = std::getenv("RICCI_DISK_SEED"))
        cfg.seed = std::strtoull(env, nullptr, 10);
    return cfg;
}

void write_diagnostics_csv(const std::string& path,
                           const std::vector<DiagnosticsRecord>& records) {
    std::ostringstream out;
    out << "t,t_normalized,r_max,r_min,r_avg,area,boundary_length,iso_ratio,"
           "k_measured,w_max,shi_ratio,boundary_identity_residual,"
           "area_rate_residual,mu\n";
    for (const auto& r : records) {
        out << csv_cell(r.t) << ',' << csv_cell(r.tNormalized) << ','
            << csv_cell(r.rMax) << ',' << csv_cell(r.rMin) << ','
            << csv_cell(r.rAvg) << ',' << csv_cell(r.area) << ','
            << csv_cell(r.boundaryLength) << ',' << csv_cell(r.isoRatio) << ','
            << csv_cell(r.kMeasured) << ',' << csv_cell(r.wMax) << ','
            << csv_cell(r.shiRatio) << ','
            << csv_cell(r.boundaryIdentityResidual) << ','
            << csv_cell(r.areaRateResidual) << ',' << csv_cell(r.mu) << '\n';
    }
    spill(path, out.str());
}

void write_snapshot(const std::string& path, const Snapshot& snap,
                    const std::string& baseRef) {
    spill(path, json{{"t", snap.t}, {"u", snap.u}, {"base", baseRef}}.dump(2) +
                    "\n");
}

Snapshot read_snapshot(const std::string& path) {
    const json j = json::parse(slurp(path));
    Snapshot snap;
    snap.t = j.at("t").get<double>();
    snap.u = j.at("u").get<std::vector<double>>();
    return snap;
}

int cmd_run(const std::string& configPath,
            const std::optional<std::string>& resumePath) {
    RunConfig cfg;
    RadialMetric base;
    std::optional<Snapshot> resume;
    try {
        cfg = parse_run_config(configPath);
        base = build_initial_metric(cfg.initial, cfg.solver.N);
        if (resumePath) {
            resume = read_snapshot(*resumePath);
            if (resume->u.size() != base.f.size())
                fail(ErrorCode::InvalidArgument,
                     "resume snapshot grid does not match the configured base");
        }
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }

    const auto started = std::chrono::steady_clock::now();
    json manifest;
    manifest["config"] = json::parse(cfg.rawJson);
    manifest["seed"] = cfg.seed;

    int status = 0;
    try {
        Trajectory traj = run(base, cfg.solver, resume);

        json normalized;
        if (traj.snapshots.size() >= 2) {
            const NormalizedTrajectory norm = normalize(traj);
            std::vector<double> tTilde, kTilde;
            for (size_t j = 0; j < norm.snapshots.size(); ++j) {
                traj.records[j].tNormalized = norm.snapshots[j].tTilde;
                tTilde.push_back(norm.snapshots[j].tTilde);
                kTilde.push_back(norm.snapshots[j].kTilde);
            }
            normalized = json{{"tTilde", tTilde}, {"kTilde", kTilde}};
        }

        std::vector<size_t> kept;
        for (size_t j = 0; j < traj.records.size();
             j += static_cast<size_t>(cfg.diagnosticsCadence))
            kept.push_back(j);
        if (!traj.records.empty() && kept.back() != traj.records.size() - 1)
            kept.push_back(traj.records.size() - 1);

        if (cfg.entropySchedule) {
            const EntropyScheduleConfig& sched = *cfg.entropySchedule;
            entropy::EntropyOptions opts = sched.options;
            opts.seed = cfg.seed;
            const double tRef =
                std::isfinite(traj.blowupTimeEstimate)
                    ? traj.blowupTimeEstimate
                    : cfg.solver.tMax;
            for (size_t i = 0; i < kept.size();
                 i += static_cast<size_t>(sched.cadence)) {
                const size_t j = kept[i];
                const double tau =
                    sched.tau > 0.0
                        ? sched.tau
                        : std::max(tRef - traj.records[j].t, 1e-6);
                const RadialMetric realized =
                    realize_conformal(base, traj.snapshots[j].u);
                traj.records[j].mu = entropy::mu(realized, tau, opts).mu;
            }
        }

        fs::create_directories(cfg.outDir);
        fs::create_directories(cfg.outDir + "/snapshots");
        write_metric(cfg.outDir + "/base.json", base);
        for (size_t j = 0; j < traj.snapshots.size(); ++j) {
            char name[32];
            std::snprintf(name, sizeof(name), "%04zu.json", j);
            write_snapshot(cfg.outDir + "/snapshots/" + name,
                           traj.snapshots[j], "../base.json");
        }
        std::vector<DiagnosticsRecord> rows;
        rows.reserve(kept.size());
        for (size_t j : kept) rows.push_back(traj.records[j]);
        write_diagnostics_csv(cfg.outDir + "/diagnostics.csv", rows);

        manifest["termination"] = to_string(traj.termination);
        manifest["k0"] = traj.k0;
        manifest["stepsAccepted"] = traj.stepsAccepted;
        manifest["shiRatioSup"] = traj.shiRatioSup;
        manifest["snapshotCount"] = traj.snapshots.size();
        if (std::isfinite(traj.blowupTimeEstimate))
            manifest["blowupTimeEstimate"] = traj.blowupTimeEstimate;
        if (!normalized.is_null()) manifest["normalized"] = normalized;

        status = (traj.termination == Termination::ReachedTMax ||
                  traj.termination == Termination::BlowupDetected)
                     ? 0
                     : 2;
    } catch (const std::exception& e) {
        manifest["error"] = e.what();
        status = 2;
    }

    manifest["runtimeSeconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      started)
            .count();
    try {
        fs::create_directories(cfg.outDir);
        spill(cfg.outDir + "/manifest.json", manifest.dump(2) + "\n");
    } catch (const std::exception& e) {
        std::cerr << "manifest write failed: " << e.what() << "\n";
        return 2;
    }
    return status;
}

int cmd_family(double epsilon, int gridN,
               const std::optional<std::string>& outPath) {
    family::FamilyParams params;
    params.epsilon = epsilon;
    family::RootCertificate cert;
    try {
        params.validate();
        if (gridN < 16) fail(ErrorCode::InvalidArgument, "grid N < 16");
        cert = family::family_boundary_radius(params);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NoRoot) {
            std::cerr << "no root: " << e.what() << "\n";
            return 3;
        }
        std::cerr << "invalid family request: " << e.what() << "\n";
        return 1;
    }

    const RadialMetric m = family::family_metric(params, gridN);
    json out = json::parse(metric_to_json(m));
    out["provenance"] = {{"epsilon", epsilon},
                         {"r0", cert.r0},
                         {"bracket", {cert.bracketLo, cert.bracketHi}},
                         {"residual", cert.residual}};
    const std::string text = out.dump(2) + "\n";
    if (outPath)
        spill(*outPath, text);
    else
        std::cout << text;
    return 0;
}

int cmd_probe(const std::vector<double>& rList, double cutoffMult,
              const std::optional<std::string>& outPath) {
    if (rList.empty()) {
        std::cerr << "probe: empty r-list\n";
        return 1;
    }
    for (double r : rList) {
        if (!(r >= 4.0)) {
            std::cerr << "probe: r values must be >= 4\n";
            return 1;
        }
    }
    if (!(cutoffMult >= 8.0)) {
        std::cerr << "probe: cutoff multiplier must be >= 8\n";
        return 1;
    }

    std::ostringstream csv;
    csv << "r,c,W\n";
    for (double r : rList) {
        try {
            const entropy::ProbeResult res =
                entropy::cigar_entropy_probe(r, cutoffMult * r);
            csv << format_double(r) << ',' << format_double(res.c) << ','
                << format_double(res.W) << '\n';
        } catch (const Error& e) {
            std::cerr << "probe failed at r = " << r << ": " << e.what()
                      << "\n";
            return e.code() == ErrorCode::TailMass ? 2 : 1;
        }
    }
    if (outPath)
        spill(*outPath, csv.str());
    else
        std::cout << csv.str();
    return 0;
}

} // namespace ricci::io
