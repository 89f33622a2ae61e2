#pragma once

#include <string>
#include <vector>

#include "stbclab/constellation.hpp"
#include "stbclab/linalg.hpp"

namespace stbc {

// Linear-dispersion description of one 2x2 STBC. All registered codes are
// linear over the real coordinates of the information symbols, so a codeword
// is fully described by 2k basis matrices (equivalently an 8 x 2k generator).
struct CodeSpec {
    std::string name;
    int k = 4;                 // information symbols per codeword
    bool uses_rotation = false;  // theta_g pre-rotation of the QAM symbols

    // G: vec_tilde(S) = G * s_tilde, one column per real coordinate of s.
    std::vector<RVec8> generator_cols;
    // G*F: same map but from the unrotated integer-grid coordinates x_tilde.
    std::vector<RVec8> gx_cols;
    // Weight matrices A_i w.r.t. x_tilde (columns of G*F read back as matrices).
    std::vector<CMat2> dispersion;

    // ||G*F||_F^2; drives the simulator's power normalization.
    double gen_energy_sq = 0.0;

    // True for the proposed code: the metric decomposes so that x1 and x2 are
    // decoded independently once (x3, x4) are fixed.
    bool conditional_decodable = false;

    bool generator_unitary(double tol = 1e-12) const;
};

// Explicit codeword formulas.
CMat2 encode_ciod(Complex s1, Complex s2);
CMat2 encode_proposed(const std::array<Complex, 4>& x);  // rotates internally
CMat2 encode_golden(const std::array<Complex, 4>& x);
CMat2 encode_htw_pga(const std::array<Complex, 4>& x);
CMat2 encode_sezginer_sari(const std::array<Complex, 4>& x);

// Generic dispersion encoding; x holds spec.k complex symbols (unrotated).
CMat2 encode(const CodeSpec& spec, const std::vector<Complex>& x);
CMat2 encode(const CodeSpec& spec, const std::array<Complex, 4>& x);

// Registry, keyed by: proposed | golden | htw-pga | sezginer-sari | ciod.
const CodeSpec& get_code(const std::string& id);  // throws UnknownCode
std::vector<std::string> code_ids();

const std::vector<CMat2>& weight_matrices(const std::string& id);

// The Eq-style 8x8 generator of the proposed code (orthonormal).
RMat8 proposed_generator();

// F = diag[J,J,J,J], J the 2x2 rotation by theta_g (identity when the code
// does not rotate its constellation).
RMat8 rotation_matrix_f();

}  // namespace stbc
