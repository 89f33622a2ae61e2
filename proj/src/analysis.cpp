#include "stbclab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "stbclab/channel.hpp"

namespace stbc {

namespace {

// Lexicographic comparison on the interleaved real coordinates.
bool lex_less(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
        if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
    }
    return false;
}

// Recursively enumerate one complex coordinate per level, accumulating the
// partial codeword, and fold f over every complete nonzero vector.
template <typename F>
void enumerate_grid(const CodeSpec& spec, const std::vector<double>& values, int sym,
                    const CMat2& partial, std::vector<Complex>& x, bool all_zero, F&& f) {
    if (sym == spec.k) {
        if (!all_zero) f(partial, x);
        return;
    }
    for (double re : values) {
        for (double im : values) {
            CMat2 s = partial;
            if (re != 0.0) s = s + spec.dispersion[2 * sym] * Complex{re, 0.0};
            if (im != 0.0) s = s + spec.dispersion[2 * sym + 1] * Complex{im, 0.0};
            x[sym] = {re, im};
            enumerate_grid(spec, values, sym + 1, s, x, all_zero && re == 0.0 && im == 0.0,
                           f);
        }
    }
}

}  // namespace

MinDetResult min_determinant(const CodeSpec& spec, int m) {
    const auto levels = pam_levels(m);  // throws UnsupportedSize
    const int side = static_cast<int>(levels.size());
    // Pairwise differences of PAM levels: {-2(side-1), ..., 0, ..., 2(side-1)} step 2.
    std::vector<double> diffs;
    for (int d = -2 * (side - 1); d <= 2 * (side - 1); d += 2)
        diffs.push_back(static_cast<double>(d));

    MinDetResult res;
    res.min_det = std::numeric_limits<double>::infinity();
    std::vector<Complex> x(spec.k);
    enumerate_grid(spec, diffs, 0, CMat2::zero(), x, true,
                   [&](const CMat2& ds, const std::vector<Complex>& v) {
                       ++res.evaluations;
                       const double det = std::norm(ds.det());  // det[dS dS^H] = |det dS|^2
                       if (det < res.min_det ||
                           (det == res.min_det && lex_less(v, res.argmin))) {
                           res.min_det = det;
                           res.argmin = v;
                       }
                   });
    return res;
}

NvdScanResult nvd_scan(const CodeSpec& spec, int bound, int step) {
    if (bound < 1) throw Error("nvd_scan: bound must be >= 1 (empty search box)");
    if (step < 1) throw Error("nvd_scan: step must be >= 1");
    std::vector<double> values;
    for (int v = -bound * step; v <= bound * step; v += step)
        values.push_back(static_cast<double>(v));

    NvdScanResult res;
    res.min_abs_det = std::numeric_limits<double>::infinity();
    std::vector<Complex> x(spec.k);
    enumerate_grid(spec, values, 0, CMat2::zero(), x, true,
                   [&](const CMat2& s, const std::vector<Complex>& v) {
                       ++res.evaluations;
                       const double det = std::abs(s.det());
                       if (det < res.min_abs_det ||
                           (det == res.min_abs_det && lex_less(v, res.argmin))) {
                           res.min_abs_det = det;
                           res.argmin = v;
                       }
                   });
    return res;
}

bool r_pattern_mask(RPattern p, int row, int col) {
    if (col < row) return false;  // below diagonal
    if (p == RPattern::kProposed) {
        // rows 1-2 decouple from the x2 coordinates (cols 3-4)
        if ((row == 0 || row == 1) && (col == 2 || col == 3)) return false;
        return true;
    }
    // Golden-type: Re/Im of each of x1, x2 decouple pairwise up top.
    if (row == 0 && (col == 1 || col == 3)) return false;
    if (row == 1 && col == 2) return false;
    if (row == 2 && col == 3) return false;
    return true;
}

RPattern r_pattern_for(const CodeSpec& spec) {
    if (spec.name == "proposed") return RPattern::kProposed;
    if (spec.name == "golden") return RPattern::kGoldenType;
    throw UnsupportedCode("no published R pattern for code: " + spec.name);
}

RPatternReport verify_r_pattern(const CodeSpec& spec, int trials, std::uint64_t seed,
                                bool shuffle_columns) {
    const RPattern pattern = r_pattern_for(spec);
    CodeSpec probe = spec;
    if (shuffle_columns) {
        // Rotate the symbol ordering by one: breaks the structural zeros.
        std::rotate(probe.gx_cols.begin(), probe.gx_cols.begin() + 1, probe.gx_cols.end());
    }
    RPatternReport report;
    report.trials = trials;
    for (int t = 0; t < trials; ++t) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
        const CMat2 h = sample_channel(rng);
        const QrResult qr = gram_schmidt_qr(equivalent_channel(h, probe));
        for (int r = 0; r < 8; ++r)
            for (int c = r; c < 8; ++c) {
                if (r_pattern_mask(pattern, r, c)) continue;
                const double v = std::abs(qr.r(r, c));
                report.max_structural_zero = std::max(report.max_structural_zero, v);
                if (v >= 1e-10)
                    throw PatternViolation("R pattern violated for " + spec.name, t, r, c, v);
            }
    }
    return report;
}

WeightIdentityReport verify_weight_identities(const CodeSpec& spec) {
    WeightIdentityReport rep;
    if (spec.dispersion.size() < 4) return rep;
    for (int m = 0; m < 4; ++m) {
        const int partner = (m % 2 == 0) ? m + 1 : m - 1;
        for (int l = 0; l < 4; ++l) {
            if (l == m || l == partner) continue;
            const CMat2& am = spec.dispersion[m];
            const CMat2& al = spec.dispersion[l];
            const CMat2 sum = am * al.adjoint() + al * am.adjoint();
            for (const auto& e : sum.e)
                rep.max_violation = std::max(rep.max_violation, std::abs(e));
        }
    }
    rep.pass = rep.max_violation < 1e-14;
    return rep;
}

double det_identity_residual(const std::array<Complex, 4>& x) {
    const Complex a = x[0] + x[1];
    const Complex b = std::conj(x[0] - x[1]);
    const Complex c = x[2] + x[3];
    const Complex d = std::conj(x[2] - x[3]);
    const Complex j{0.0, 1.0};
    const Complex rhs =
        Complex{1.0, 2.0} * (a * a - j * c * c) - Complex{1.0, -2.0} * (b * b - j * d * d);
    const Complex lhs = 4.0 * std::sqrt(5.0) * encode_proposed(x).det();
    return std::abs(lhs - rhs);
}

CodeAnalysisReport analyze_code(const std::string& code_id, int m) {
    const CodeSpec& spec = get_code(code_id);  // throws UnknownCode
    CodeAnalysisReport rep;
    rep.code_id = code_id;
    rep.m = m;

    const MinDetResult md = min_determinant(spec, m);  // throws UnsupportedSize
    rep.min_det = md.min_det;
    rep.coding_gain = std::sqrt(md.min_det);  // n_t = 2
    rep.argmin = md.argmin;
    rep.is_full_rank = md.min_det > 0.0;
    rep.generator_unitary = spec.generator_unitary();

    auto record = [&](const std::string& name, bool ok) {
        (ok ? rep.checks_passed : rep.checks_failed).push_back(name);
    };
    record("full_rank", rep.is_full_rank);
    record("coding_gain_consistent", std::abs(rep.coding_gain * rep.coding_gain - rep.min_det) < 1e-9);
    record("generator_unitary", rep.generator_unitary);
    if (spec.conditional_decodable)
        record("weight_identities", verify_weight_identities(spec).pass);
    return rep;
}

}  // namespace stbc
