#include "stbclab/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace stbc {

namespace {

enum class DecoderKind { kExhaustive, kConditional, kSphere };

DecoderKind parse_decoder(const std::string& id, const CodeSpec& spec) {
    if (id == "exhaustive") return DecoderKind::kExhaustive;
    if (id == "conditional") {
        if (!spec.conditional_decodable)
            throw UnsupportedCode("decoder 'conditional' is specific to the proposed code");
        return DecoderKind::kConditional;
    }
    if (id == "sphere") {
        if (spec.k != 4)
            throw UnsupportedCode("decoder 'sphere' needs a 4-symbol code");
        return DecoderKind::kSphere;
    }
    throw UnsupportedCode("unknown decoder: " + id);
}

struct TrialTally {
    std::uint64_t errors = 0;
    std::uint64_t metric_evals = 0;
    std::uint64_t redraws = 0;
};

void run_trials(const CodeSpec& spec, const QamAlphabet& alphabet, DecoderKind kind,
                double n0, double inv_kappa, std::uint64_t seed, std::uint64_t snr_key,
                std::uint64_t lo, std::uint64_t hi, TrialTally& tally) {
    std::vector<Complex> x(spec.k);
    std::vector<int> tx(spec.k);
    for (std::uint64_t t = lo; t < hi; ++t) {
        Rng rng(mix_seed(seed, snr_key, t));
        for (int i = 0; i < spec.k; ++i) {
            tx[i] = rng.uniform_int(alphabet.size);
            x[i] = alphabet[tx[i]];
        }
        const CMat2 s = encode(spec, x);
        DecodeResult dec;
        for (;;) {
            const CMat2 h_eff = sample_channel(rng) * Complex{inv_kappa, 0.0};
            const CMat2 y = transmit(s, h_eff, n0, rng);
            try {
                switch (kind) {
                    case DecoderKind::kExhaustive:
                        dec = decode_exhaustive(y, h_eff, spec, alphabet);
                        break;
                    case DecoderKind::kConditional:
                        dec = decode_conditional(y, h_eff, spec, alphabet);
                        break;
                    case DecoderKind::kSphere: {
                        const RealModel model = build_real_model(y, h_eff, spec);
                        dec = spec.conditional_decodable
                                  ? decode_sphere(model, spec, alphabet)
                                  : decode_sphere_generic(model, spec, alphabet);
                        break;
                    }
                }
            } catch (const RankDeficient&) {
                ++tally.redraws;  // numerically singular H: redraw and retry
                continue;
            }
            break;
        }
        tally.metric_evals += dec.metric_evals;
        if (!std::equal(tx.begin(), tx.end(), dec.labels.begin())) ++tally.errors;
    }
}

}  // namespace

void wilson_interval(std::uint64_t errors, std::uint64_t trials, double& lo, double& hi) {
    const double z = 1.959963984540054;
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(errors) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    lo = errors == 0 ? 0.0 : std::max(0.0, center - half);
    hi = errors == trials ? 1.0 : std::min(1.0, center + half);
}

double n0_from_snr_db(double snr_db) { return 2.0 / std::pow(10.0, snr_db / 10.0); }

CerPoint run_point(const SimConfig& cfg, double snr_db) {
    const CodeSpec& spec = get_code(cfg.code_id);
    const QamAlphabet alphabet = make_qam(cfg.m);
    const DecoderKind kind = parse_decoder(cfg.decoder_id, spec);
    if (cfg.trials < 1) throw Error("run_point: trials must be >= 1");

    // scale so that E||S||_F^2 = n_t * T = 4 under uniform symbols
    const double kappa =
        std::sqrt(alphabet.energy() * spec.gen_energy_sq / 8.0);
    const double n0 = n0_from_snr_db(snr_db);
    const std::uint64_t snr_key =
        static_cast<std::uint64_t>(static_cast<std::int64_t>(std::llround(snr_db * 1000.0)));

    unsigned n_threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                         : std::max(1u, std::thread::hardware_concurrency());
    n_threads = static_cast<unsigned>(
        std::min<std::uint64_t>(n_threads, cfg.trials));

    std::vector<TrialTally> tallies(n_threads);
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (cfg.trials + n_threads - 1) / n_threads;
    for (unsigned w = 0; w < n_threads; ++w) {
        const std::uint64_t lo = w * chunk;
        const std::uint64_t hi = std::min(cfg.trials, lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([&, w, lo, hi] {
            run_trials(spec, alphabet, kind, n0, 1.0 / kappa, cfg.seed, snr_key, lo, hi,
                       tallies[w]);
        });
    }
    for (auto& t : workers) t.join();

    TrialTally total;
    for (const auto& t : tallies) {
        total.errors += t.errors;
        total.metric_evals += t.metric_evals;
        total.redraws += t.redraws;
    }

    CerPoint p;
    p.code_id = cfg.code_id;
    p.decoder_id = cfg.decoder_id;
    p.m = cfg.m;
    p.snr_db = snr_db;
    p.trials = cfg.trials;
    p.errors = total.errors;
    p.cer = static_cast<double>(total.errors) / static_cast<double>(cfg.trials);
    wilson_interval(total.errors, cfg.trials, p.ci95_lo, p.ci95_hi);
    p.mean_metric_evals =
        static_cast<double>(total.metric_evals) / static_cast<double>(cfg.trials);
    p.seed = cfg.seed;
    p.channel_redraws = total.redraws;
    return p;
}

std::vector<CerPoint> run_sweep(const SimConfig& cfg) {
    if (cfg.snr_db.empty()) throw EmptySweep("run_sweep: empty SNR list");
    std::vector<CerPoint> points;
    for (double snr : cfg.snr_db) points.push_back(run_point(cfg, snr));
    return points;
}

std::string csv_header() {
    return "code,decoder,M,snr_db,trials,errors,cer,ci95_lo,ci95_hi,mean_metric_evals,seed";
}

std::string csv_row(const CerPoint& p) {
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "%s,%s,%d,%.6g,%llu,%llu,%.8e,%.8e,%.8e,%.6f,%llu",
                  p.code_id.c_str(), p.decoder_id.c_str(), p.m, p.snr_db,
                  static_cast<unsigned long long>(p.trials),
                  static_cast<unsigned long long>(p.errors), p.cer, p.ci95_lo, p.ci95_hi,
                  p.mean_metric_evals, static_cast<unsigned long long>(p.seed));
    return buf;
}

namespace {

bool parse_csv_row(const std::string& line, CerPoint& p) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) f.push_back(item);
    if (f.size() != 11) return false;
    try {
        p.code_id = f[0];
        p.decoder_id = f[1];
        p.m = std::stoi(f[2]);
        p.snr_db = std::stod(f[3]);
        p.trials = std::stoull(f[4]);
        p.errors = std::stoull(f[5]);
        p.cer = std::stod(f[6]);
        p.ci95_lo = std::stod(f[7]);
        p.ci95_hi = std::stod(f[8]);
        p.mean_metric_evals = std::stod(f[9]);
        p.seed = std::stoull(f[10]);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

std::string snr_text(double snr_db) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", snr_db);
    return buf;
}

}  // namespace

void write_csv(const std::string& path, const SimConfig&, const std::vector<CerPoint>& points) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (path != "-") {
        file.open(path, std::ios::binary | std::ios::trunc);
        if (!file) throw Error("cannot open output file: " + path);
        out = &file;
    }
    *out << csv_header() << "\n";
    for (const auto& p : points) *out << csv_row(p) << "\n";
    out->flush();
    if (path != "-" && !file) throw Error("write failed: " + path);
}

std::vector<CerPoint> run_sweep_to_csv(const SimConfig& cfg, const std::string& path) {
    if (cfg.snr_db.empty()) throw EmptySweep("run_sweep: empty SNR list");

    // resume: reuse rows already computed with the same configuration
    std::vector<CerPoint> existing;
    if (path != "-") {
        std::ifstream in(path);
        std::string line;
        bool first = true;
        while (in && std::getline(in, line)) {
            if (first) {
                first = false;
                continue;
            }
            CerPoint p;
            if (parse_csv_row(line, p)) existing.push_back(p);
        }
    }
    auto find_existing = [&](double snr) -> const CerPoint* {
        for (const auto& p : existing) {
            if (p.code_id == cfg.code_id && p.decoder_id == cfg.decoder_id &&
                p.m == cfg.m && p.trials == cfg.trials && p.seed == cfg.seed &&
                snr_text(p.snr_db) == snr_text(snr))
                return &p;
        }
        return nullptr;
    };

    std::vector<CerPoint> points;
    for (double snr : cfg.snr_db) {
        if (const CerPoint* p = find_existing(snr)) {
            points.push_back(*p);
            std::cerr << "point snr=" << snr_text(snr) << " dB: reused\n";
        } else {
            points.push_back(run_point(cfg, snr));
            const CerPoint& q = points.back();
            std::cerr << "point snr=" << snr_text(snr) << " dB: cer=" << q.cer
                      << " errors=" << q.errors << "/" << q.trials << "\n";
        }
    }
    write_csv(path, cfg, points);
    return points;
}

}  // namespace stbc
