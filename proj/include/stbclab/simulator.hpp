#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stbclab/decoders.hpp"

namespace stbc {

struct SimConfig {
    std::string code_id = "proposed";
    std::string decoder_id = "sphere";  // exhaustive | conditional | sphere
    int m = 4;
    std::vector<double> snr_db;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    int threads = 0;  // 0 = hardware concurrency
};

struct CerPoint {
    std::string code_id;
    std::string decoder_id;
    int m = 0;
    double snr_db = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t errors = 0;
    double cer = 0.0;
    double ci95_lo = 0.0;  // Wilson interval
    double ci95_hi = 0.0;
    double mean_metric_evals = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t channel_redraws = 0;  // rank-deficient H redraws (logged)
};

// Wilson 95% score interval for a binomial proportion.
void wilson_interval(std::uint64_t errors, std::uint64_t trials, double& lo, double& hi);

// Noise variance per complex entry for the per-receive-antenna SNR
// convention: SNR = n_t / N0 with codewords normalized to E||S||_F^2 = 4.
double n0_from_snr_db(double snr_db);

// One Monte Carlo point. Deterministic given (config, snr_db) regardless of
// the thread count. Throws UnsupportedCode / UnsupportedSize up front.
CerPoint run_point(const SimConfig& cfg, double snr_db);

// Maps run_point over the SNR list. Throws EmptySweep for an empty list.
std::vector<CerPoint> run_sweep(const SimConfig& cfg);

// CSV emission (UTF-8, LF). Exact column set pinned by the CLI contract.
std::string csv_header();
std::string csv_row(const CerPoint& p);

// Writes header + rows to `path` ("-" = stdout). Existing rows for the same
// (code, decoder, M, trials, seed) are reused, making sweeps resumable.
void write_csv(const std::string& path, const SimConfig& cfg,
               const std::vector<CerPoint>& points);

// Runs the sweep with per-point resume against `path`, then writes the file.
std::vector<CerPoint> run_sweep_to_csv(const SimConfig& cfg, const std::string& path);

}  // namespace stbc
