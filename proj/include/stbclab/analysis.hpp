#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stbclab/codes.hpp"

namespace stbc {

struct MinDetResult {
    double min_det = 0.0;            // min det[(dS)(dS)^H] over nonzero differences
    std::vector<Complex> argmin;     // lexicographically first minimizing difference vector
    std::uint64_t evaluations = 0;
};

// Exact search over the difference set of the M-QAM alphabet (no sampling).
// Codes are linear in the real symbol coordinates, so codeword-pair search
// reduces to the difference set.
MinDetResult min_determinant(const CodeSpec& spec, int m);

struct NvdScanResult {
    double min_abs_det = 0.0;        // min |det(S)| over the box
    std::vector<Complex> argmin;
    std::uint64_t evaluations = 0;
};

// Scans nonzero Gaussian-integer symbol vectors with |Re|,|Im| <= bound,
// coordinates stepped by `step`. bound >= 1 required.
NvdScanResult nvd_scan(const CodeSpec& spec, int bound, int step = 1);

// Upper-triangular zero patterns of R claimed for the registered codes.
// mask(r,c) == true means the entry may be nonzero.
enum class RPattern { kProposed, kGoldenType };
bool r_pattern_mask(RPattern p, int row, int col);
RPattern r_pattern_for(const CodeSpec& spec);  // throws UnsupportedCode

struct RPatternReport {
    int trials = 0;
    double max_structural_zero = 0.0;  // largest |entry| seen at a structural zero
};

// Draws `trials` random channels, QR-decomposes H_eq' and checks every
// structurally-zero position stays below 1e-10. Throws PatternViolation on
// the first offending entry. shuffle_columns deliberately permutes the
// symbol ordering (negative control).
RPatternReport verify_r_pattern(const CodeSpec& spec, int trials, std::uint64_t seed,
                                bool shuffle_columns = false);

struct WeightIdentityReport {
    bool pass = false;
    double max_violation = 0.0;
};

// Quasi-orthogonality of the first four weight matrices:
// A_m A_l^H + A_l A_m^H = 0 for l,m in [1,4], l outside {m, partner(m)},
// partner pairs (1,2) and (3,4).
WeightIdentityReport verify_weight_identities(const CodeSpec& spec);

struct CodeAnalysisReport {
    std::string code_id;
    int m = 0;
    double min_det = 0.0;
    double coding_gain = 0.0;        // min_det^(1/2) for 2 transmit antennas
    std::vector<Complex> argmin;
    bool is_full_rank = false;
    bool generator_unitary = false;
    std::vector<std::string> checks_passed;
    std::vector<std::string> checks_failed;
    bool all_passed() const { return checks_failed.empty(); }
};

CodeAnalysisReport analyze_code(const std::string& code_id, int m);

// Identity behind the NVD proof for the proposed code:
// 4*sqrt(5)*det(S) = (1+2j)(A^2 - jC^2) - (1-2j)(B^2 - jD^2)
// with A = x1+x2, B = (x1-x2)*, C = x3+x4, D = (x3-x4)*.
// Returns the modulus of the mismatch for one symbol vector.
double det_identity_residual(const std::array<Complex, 4>& x);

}  // namespace stbc
