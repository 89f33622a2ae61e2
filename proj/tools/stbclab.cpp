// stbclab: analysis, verification and simulation driver for the 2x2 STBC
// library. Subcommands: analyze | verify | simulate | codes.
// Exit codes: 0 success, 1 check/invariant failure, 2 usage or domain error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stbclab/analysis.hpp"
#include "stbclab/channel.hpp"
#include "stbclab/decoders.hpp"
#include "stbclab/simulator.hpp"

using nlohmann::json;

namespace {

std::vector<double> parse_snr(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    std::vector<double> out;
    try {
        if (parts.size() == 1) {
            out.push_back(std::stod(parts[0]));
            return out;
        }
        if (parts.size() == 3) {
            const double start = std::stod(parts[0]);
            const double step = std::stod(parts[1]);
            const double stop = std::stod(parts[2]);
            if (step <= 0.0) throw stbc::Error("--snr: step must be > 0");
            if (stop < start) throw stbc::Error("--snr: stop must be >= start");
            for (double v = start; v <= stop + 1e-9; v += step) out.push_back(v);
            return out;
        }
    } catch (const std::invalid_argument&) {
        throw stbc::Error("--snr: cannot parse '" + text + "'");
    }
    throw stbc::Error("--snr: expected 'value' or 'start:step:stop', got '" + text + "'");
}

int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("STBC_LAB_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0;  // library default: hardware concurrency
}

json argmin_json(const std::vector<stbc::Complex>& v) {
    json arr = json::array();
    for (const auto& z : v) arr.push_back({z.real(), z.imag()});
    return arr;
}

void emit(const std::string& path, const json& doc) {
    const std::string text = doc.dump(2) + "\n";
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw stbc::Error("cannot open output file: " + path);
    out << text;
}

int cmd_analyze(const std::string& code, int qam, const std::string& out_path) {
    std::cerr << "analyze: code=" << code << " qam=" << qam << " out=" << out_path << "\n";
    const stbc::CodeAnalysisReport rep = stbc::analyze_code(code, qam);
    json doc = {
        {"code", rep.code_id},
        {"qam", rep.m},
        {"min_det", rep.min_det},
        {"coding_gain", rep.coding_gain},
        {"argmin", argmin_json(rep.argmin)},
        {"is_full_rank", rep.is_full_rank},
        {"generator_unitary", rep.generator_unitary},
        {"checks_passed", rep.checks_passed},
        {"checks_failed", rep.checks_failed},
    };
    emit(out_path, doc);
    return rep.all_passed() ? 0 : 1;
}

// One decoder-equivalence instance at the given SNR; mirrors the simulator's
// trial structure so the verifier exercises the same code paths.
bool decoders_agree(const stbc::CodeSpec& spec, const stbc::QamAlphabet& alphabet,
                    double snr_db, stbc::Rng& rng) {
    const double kappa = std::sqrt(alphabet.energy() * spec.gen_energy_sq / 8.0);
    std::vector<stbc::Complex> x(spec.k);
    for (auto& s : x) {
        const int i = rng.uniform_int(alphabet.size);
        s = alphabet[i];
    }
    const stbc::CMat2 s = stbc::encode(spec, x);
    for (;;) {
        const stbc::CMat2 h =
            stbc::sample_channel(rng) * stbc::Complex{1.0 / kappa, 0.0};
        const stbc::CMat2 y = stbc::transmit(s, h, stbc::n0_from_snr_db(snr_db), rng);
        try {
            const auto a = stbc::decode_exhaustive(y, h, spec, alphabet);
            const auto b = stbc::decode_conditional(y, h, spec, alphabet);
            const auto model = stbc::build_real_model(y, h, spec);
            const auto c = stbc::decode_sphere(model, spec, alphabet);
            return a.labels == b.labels && b.labels == c.labels;
        } catch (const stbc::RankDeficient&) {
            continue;  // singular draw, retry
        }
    }
}

int cmd_verify(int trials, std::uint64_t seed, const std::string& fault,
               const std::string& out_path) {
    std::cerr << "verify: trials=" << trials << " seed=" << seed
              << " fault=" << (fault.empty() ? "none" : fault) << " out=" << out_path
              << "\n";
    if (trials == 0) throw stbc::EmptySuite("verify: trials must be >= 1");
    if (trials < 0) throw stbc::Error("verify: trials must be >= 1");
    if (!fault.empty() && fault != "shuffle-generator")
        throw stbc::Error("verify: unknown fault mode: " + fault);
    const bool shuffle = fault == "shuffle-generator";

    json suites = json::array();
    bool all_pass = true;
    auto record = [&](const std::string& name, bool pass, const json& detail) {
        suites.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
        all_pass = all_pass && pass;
        std::cerr << (pass ? "PASS " : "FAIL ") << name << "\n";
    };

    const stbc::CodeSpec& proposed = stbc::get_code("proposed");

    // generator orthonormality
    record("generator_unitary", proposed.generator_unitary(), json::object());

    // quasi-orthogonality of the first four weight matrices
    {
        const auto rep = stbc::verify_weight_identities(proposed);
        record("weight_identities", rep.pass, {{"max_violation", rep.max_violation}});
    }

    // QR residuals on random channels
    {
        double max_resid = 0.0, max_orth = 0.0;
        for (int t = 0; t < trials; ++t) {
            stbc::Rng rng(stbc::mix_seed(seed, 101, static_cast<std::uint64_t>(t)));
            const stbc::RMat8 a = stbc::equivalent_channel(stbc::sample_channel(rng), proposed);
            const stbc::QrResult qr = stbc::gram_schmidt_qr(a);
            const stbc::RMat8 recon = qr.q * qr.r;
            const stbc::RMat8 gram = qr.q.transpose() * qr.q;
            for (int r = 0; r < 8; ++r)
                for (int c = 0; c < 8; ++c) {
                    max_resid = std::max(max_resid, std::abs(recon(r, c) - a(r, c)));
                    const double id = r == c ? 1.0 : 0.0;
                    max_orth = std::max(max_orth, std::abs(gram(r, c) - id));
                }
        }
        const bool pass = max_resid < 1e-10 && max_orth < 1e-10;
        record("qr_residuals", pass,
               {{"max_reconstruction_error", max_resid}, {"max_orthonormality_error", max_orth}});
    }

    // R-matrix structural zeros (fault mode shuffles the symbol ordering)
    for (const std::string code : {"proposed", "golden"}) {
        json detail = json::object();
        bool pass = false;
        try {
            const auto rep =
                stbc::verify_r_pattern(stbc::get_code(code), trials, seed, shuffle);
            detail["max_structural_zero"] = rep.max_structural_zero;
            pass = true;
        } catch (const stbc::PatternViolation& e) {
            detail = {{"trial", e.trial}, {"row", e.row}, {"col", e.col}, {"value", e.value}};
        }
        record("r_pattern_" + code, pass, detail);
    }

    // exhaustive / conditional / sphere return the same symbol vector
    {
        const stbc::QamAlphabet alphabet = stbc::make_qam(4);
        int agree = 0;
        for (int t = 0; t < trials; ++t) {
            stbc::Rng rng(stbc::mix_seed(seed, 202, static_cast<std::uint64_t>(t)));
            if (decoders_agree(proposed, alphabet, 10.0, rng)) ++agree;
        }
        record("decoder_equivalence", agree == trials,
               {{"agreed", agree}, {"trials", trials}});
    }

    // non-vanishing determinant over the unit Gaussian-integer box
    {
        const auto rep = stbc::nvd_scan(proposed, 1);
        const double bound = 1.0 / std::sqrt(5.0);
        const bool pass = rep.min_abs_det >= bound - 1e-9 &&
                          std::abs(rep.min_abs_det - bound) < 1e-9;
        record("nvd_bound", pass,
               {{"min_abs_det", rep.min_abs_det}, {"bound", bound}});
    }

    // determinant identity on random integer symbol vectors
    {
        double max_resid = 0.0;
        stbc::Rng rng(stbc::mix_seed(seed, 303));
        for (int t = 0; t < trials; ++t) {
            std::array<stbc::Complex, 4> x;
            for (auto& s : x)
                s = {static_cast<double>(rng.uniform_int(17) - 8),
                     static_cast<double>(rng.uniform_int(17) - 8)};
            max_resid = std::max(max_resid, stbc::det_identity_residual(x));
        }
        record("det_identity", max_resid < 1e-9, {{"max_residual", max_resid}});
    }

    json doc = {{"trials", trials}, {"seed", seed}, {"all_pass", all_pass}, {"suites", suites}};
    emit(out_path, doc);
    return all_pass ? 0 : 1;
}

int cmd_simulate(const stbc::SimConfig& cfg, const std::string& out_path) {
    std::cerr << "simulate: code=" << cfg.code_id << " decoder=" << cfg.decoder_id
              << " qam=" << cfg.m << " points=" << cfg.snr_db.size()
              << " trials=" << cfg.trials << " seed=" << cfg.seed
              << " threads=" << cfg.threads << " out=" << out_path << "\n";
    stbc::run_sweep_to_csv(cfg, out_path);
    return 0;
}

int cmd_codes() {
    json arr = json::array();
    for (const auto& id : stbc::code_ids()) {
        const stbc::CodeSpec& spec = stbc::get_code(id);
        arr.push_back({{"id", id},
                       {"symbols", spec.k},
                       {"rotated", spec.uses_rotation},
                       {"conditional_decodable", spec.conditional_decodable}});
    }
    std::cout << arr.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2x2 space-time block code analysis, verification and simulation"};
    app.require_subcommand(1);

    std::string an_code = "proposed", an_out = "-";
    int an_qam = 4;
    auto* analyze = app.add_subcommand("analyze", "Brute-force code analysis (JSON report)");
    analyze->add_option("code", an_code, "Code identifier")->capture_default_str();
    analyze->add_option("--qam", an_qam, "QAM size")->capture_default_str();
    analyze->add_option("--out", an_out, "Output path, - for stdout")->capture_default_str();

    int ve_trials = 100;
    std::uint64_t ve_seed = 1;
    std::string ve_fault, ve_out = "-";
    auto* verify = app.add_subcommand("verify", "Run the invariant suites");
    verify->add_option("--trials", ve_trials, "Random trials per suite")->capture_default_str();
    verify->add_option("--seed", ve_seed, "Master seed")->capture_default_str();
    verify->add_option("--fault", ve_fault, "Fault injection: shuffle-generator");
    verify->add_option("--out", ve_out, "JSON output path, - for stdout")->capture_default_str();

    stbc::SimConfig sim;
    std::string si_snr = "4:2:20", si_out = "-";
    int si_threads = 0;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo CER sweep (CSV)");
    simulate->add_option("--code", sim.code_id, "Code identifier")->capture_default_str();
    simulate->add_option("--decoder", sim.decoder_id, "exhaustive | conditional | sphere")
        ->capture_default_str();
    simulate->add_option("--qam", sim.m, "QAM size")->capture_default_str();
    simulate->add_option("--snr", si_snr, "SNR dB: value or start:step:stop")
        ->capture_default_str();
    simulate->add_option("--trials", sim.trials, "Trials per SNR point")->capture_default_str();
    simulate->add_option("--seed", sim.seed, "Master seed")->capture_default_str();
    simulate->add_option("--threads", si_threads,
                         "Worker threads (0 = all cores; env STBC_LAB_THREADS)")
        ->capture_default_str();
    simulate->add_option("--out", si_out, "CSV path, - for stdout")->capture_default_str();

    auto* codes = app.add_subcommand("codes", "List registered codes");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(an_code, an_qam, an_out);
        if (verify->parsed()) return cmd_verify(ve_trials, ve_seed, ve_fault, ve_out);
        if (simulate->parsed()) {
            sim.snr_db = parse_snr(si_snr);
            sim.threads = resolve_threads(si_threads);
            return cmd_simulate(sim, si_out);
        }
        if (codes->parsed()) return cmd_codes();
    } catch (const stbc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
