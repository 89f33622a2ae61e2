#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "stbclab/simulator.hpp"

using namespace stbc;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("wilson interval endpoints") {
    double lo, hi;
    wilson_interval(0, 1000, lo, hi);
    CHECK(lo == 0.0);
    CHECK(hi > 0.0);
    CHECK(hi < 0.01);

    wilson_interval(1000, 1000, lo, hi);
    CHECK(hi == 1.0);
    CHECK(lo > 0.99);

    // reference value for 5 successes out of 100
    wilson_interval(5, 100, lo, hi);
    CHECK(lo == doctest::Approx(0.0215).epsilon(0.02));
    CHECK(hi == doctest::Approx(0.1118).epsilon(0.02));
    CHECK(lo < 0.05);
    CHECK(hi > 0.05);
}

TEST_CASE("snr convention") {
    CHECK(n0_from_snr_db(0.0) == doctest::Approx(2.0));
    CHECK(n0_from_snr_db(10.0) == doctest::Approx(0.2));
    CHECK(n0_from_snr_db(20.0) == doctest::Approx(0.02));
}

TEST_CASE("noiseless point has zero error rate") {
    SimConfig cfg;
    cfg.code_id = "proposed";
    cfg.decoder_id = "sphere";
    cfg.m = 4;
    cfg.trials = 2000;
    cfg.seed = 99;
    const CerPoint p = run_point(cfg, 60.0);
    CHECK(p.errors == 0);
    CHECK(p.cer == 0.0);
    CHECK(p.ci95_lo == 0.0);
    CHECK(p.trials == 2000);
}

TEST_CASE("results are identical for any thread count") {
    SimConfig cfg;
    cfg.code_id = "proposed";
    cfg.decoder_id = "conditional";
    cfg.m = 4;
    cfg.trials = 4000;
    cfg.seed = 7;
    std::string rows[3];
    int i = 0;
    for (int threads : {1, 3, 8}) {
        cfg.threads = threads;
        rows[i++] = csv_row(run_point(cfg, 10.0));
    }
    CHECK(rows[0] == rows[1]);
    CHECK(rows[1] == rows[2]);
}

TEST_CASE("same seed gives identical error counts across exact decoders") {
    SimConfig cfg;
    cfg.code_id = "proposed";
    cfg.m = 4;
    cfg.trials = 3000;
    cfg.seed = 31;
    cfg.decoder_id = "exhaustive";
    const CerPoint a = run_point(cfg, 10.0);
    cfg.decoder_id = "sphere";
    const CerPoint b = run_point(cfg, 10.0);
    cfg.decoder_id = "conditional";
    const CerPoint c = run_point(cfg, 10.0);
    CHECK(a.errors == b.errors);
    CHECK(a.errors == c.errors);
    CHECK(a.errors > 0);  // the operating point is genuinely noisy
    CHECK(b.mean_metric_evals < a.mean_metric_evals);
}

TEST_CASE("decoder and code validation happens up front") {
    SimConfig cfg;
    cfg.code_id = "golden";
    cfg.decoder_id = "conditional";
    cfg.trials = 10;
    CHECK_THROWS_AS(run_point(cfg, 10.0), UnsupportedCode);
    cfg.code_id = "ciod";
    cfg.decoder_id = "sphere";
    CHECK_THROWS_AS(run_point(cfg, 10.0), UnsupportedCode);
    cfg.code_id = "proposed";
    cfg.decoder_id = "zigzag";
    CHECK_THROWS_AS(run_point(cfg, 10.0), UnsupportedCode);
    cfg.decoder_id = "sphere";
    cfg.m = 5;
    CHECK_THROWS_AS(run_point(cfg, 10.0), UnsupportedSize);
}

TEST_CASE("sweep contract") {
    SimConfig cfg;
    CHECK_THROWS_AS(run_sweep(cfg), EmptySweep);  // no SNR points
    CHECK(csv_header() ==
          "code,decoder,M,snr_db,trials,errors,cer,ci95_lo,ci95_hi,mean_metric_evals,seed");
}

TEST_CASE("csv files are byte-identical across runs and resumable") {
    SimConfig cfg;
    cfg.code_id = "proposed";
    cfg.decoder_id = "sphere";
    cfg.m = 4;
    cfg.snr_db = {8.0, 12.0};
    cfg.trials = 1500;
    cfg.seed = 5;
    const std::string path = "test_sweep_tmp.csv";
    std::remove(path.c_str());
    run_sweep_to_csv(cfg, path);
    const std::string first = read_file(path);
    CHECK(first.rfind(csv_header() + "\n", 0) == 0);
    CHECK(std::count(first.begin(), first.end(), '\n') == 3);  // header + 2 rows

    // second run resumes from the file and must reproduce it exactly
    run_sweep_to_csv(cfg, path);
    CHECK(read_file(path) == first);

    // a wider sweep keeps the old points and appends the new one
    cfg.snr_db = {8.0, 12.0, 14.0};
    run_sweep_to_csv(cfg, path);
    const std::string wider = read_file(path);
    CHECK(wider.compare(0, first.size(), first) == 0);
    CHECK(std::count(wider.begin(), wider.end(), '\n') == 4);
    std::remove(path.c_str());
}
