#pragma once

#include <vector>

#include "stbclab/linalg.hpp"

namespace stbc {

// Optimal CIOD rotation angle: 0.5*atan(2), so that e^{2j*theta} = (1+2j)/sqrt(5).
double theta_g();
Complex rotation_phasor();  // e^{j*theta_g}

// Rotate a point by theta_g.
Complex rotate(Complex x);

// Square M-QAM on the odd-integer grid, spacing 2, unnormalized.
// Points ordered row-major by (Re, Im).
struct QamAlphabet {
    int size = 0;
    std::vector<Complex> points;

    const Complex& operator[](int i) const { return points[i]; }

    // mean |x|^2 over the alphabet
    double energy() const;
};

// M must be one of {4, 16, 64}; throws UnsupportedSize otherwise.
QamAlphabet make_qam(int m);

// Per-axis PAM levels {±1, ±3, ..., ±(sqrt(M)-1)} of a square QAM, ascending.
std::vector<int> pam_levels(int m);

}  // namespace stbc
