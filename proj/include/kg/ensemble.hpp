#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "kg/fits.hpp"
#include "kg/graphs.hpp"

namespace kg {

inline constexpr int kSchemaVersion = 1;

struct RunConfig {
    std::string kind; // free-krylov | int-krylov | free-entanglement |
                      // int-entanglement | dimension | otoc
    std::vector<int> sizes;
    int degree = 3;
    int samples = 100; // -1 enumerates all non-isomorphic graphs
    double j = 1.0;
    double disorder_w = 0.0;  // box width of uniform site energies
    bool quasiperiodic = false;
    bool interacting = false;
    double tmin = 0.1, tmax = 1000.0;
    int tpoints = 400;
    bool log_time = true;
    uint64_t seed = 1;
    double tol = 1e-8;
    int workers = 1;
    bool raw = false;
    bool stamp = false;
    int typicality_samples = 4;
    int site_o = 0, site_q = -1; // -1 resolves to N/2 - 1
    double fit_tmin = -1e300, fit_tmax = 1e300;
};

struct SizeSummary {
    int n = 0;
    double mean = 0.0;
    double stderr_two_stage = 0.0;
    double stderr_pooled = 0.0;
    int count = 0;
    int failures = 0;
    nlohmann::json extra;                    // kind-specific aggregates
    std::vector<nlohmann::json> raw_records; // populated when cfg.raw
    std::vector<std::string> certificates;
};

struct ExperimentResult {
    RunConfig cfg;
    std::vector<SizeSummary> sizes;
    FitResult fit; // log-log fit of mean vs N across sizes

    std::vector<nlohmann::json> records() const; // one per size, plus the fit
    std::string summary_csv_text() const;
};

ExperimentResult run_experiment(const RunConfig& cfg);

// Deterministic graph set for one size: partitions for d = 2 "all",
// certificate-deduped sampling for d = 3 "all", configuration-model draws
// otherwise (one independent seed per index).
std::vector<Graph> experiment_graphs(const RunConfig& cfg, int n);

} // namespace kg
