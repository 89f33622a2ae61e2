#pragma once

#include <array>
#include <complex>

#include "stbclab/errors.hpp"

namespace stbc {

using Complex = std::complex<double>;

// 2x2 complex matrix, row-major. Holds codewords, channels and observations.
struct CMat2 {
    std::array<Complex, 4> e{};

    Complex& operator()(int r, int c) { return e[2 * r + c]; }
    const Complex& operator()(int r, int c) const { return e[2 * r + c]; }

    static CMat2 identity();
    static CMat2 zero() { return CMat2{}; }

    CMat2 operator+(const CMat2& o) const;
    CMat2 operator-(const CMat2& o) const;
    CMat2 operator*(const CMat2& o) const;
    CMat2 operator*(Complex s) const;
    CMat2 adjoint() const;

    Complex det() const { return e[0] * e[3] - e[1] * e[2]; }
    double frob_norm_sq() const;
};

using RVec8 = std::array<double, 8>;

// 4x4 real matrix (image of a 2x2 complex matrix under the check operator).
struct RMat4 {
    std::array<double, 16> e{};
    double& operator()(int r, int c) { return e[4 * r + c]; }
    const double& operator()(int r, int c) const { return e[4 * r + c]; }
};

// 8x8 real matrix, row-major.
struct RMat8 {
    std::array<double, 64> e{};

    double& operator()(int r, int c) { return e[8 * r + c]; }
    const double& operator()(int r, int c) const { return e[8 * r + c]; }

    static RMat8 identity();

    RMat8 operator*(const RMat8& o) const;
    RVec8 operator*(const RVec8& v) const;
    RMat8 transpose() const;
    double frob_norm_sq() const;

    RVec8 col(int c) const;
    void set_col(int c, const RVec8& v);
};

double dot(const RVec8& a, const RVec8& b);
double norm_sq(const RVec8& a);
RVec8 operator-(const RVec8& a, const RVec8& b);

// Columnwise stacking with per-entry Re/Im interleaving:
// [Re X11, Im X11, Re X21, Im X21, Re X12, Im X12, Re X22, Im X22].
RVec8 vec_tilde(const CMat2& x);
CMat2 vec_tilde_inv(const RVec8& v);

// Each complex entry s becomes the 2x2 block [Re -Im; Im Re].
RMat4 check_op(const CMat2& x);

// I2 kron check_op(H): block diagonal embedding into 8x8.
RMat8 check_embed_i2(const CMat2& h);

// ||Y - H*S||_F^2, the ML decoding metric.
double frob_metric(const CMat2& y, const CMat2& h, const CMat2& s);

struct QrResult {
    RMat8 q;
    RMat8 r;
};

// Classical Gram-Schmidt with the diagonal of R forced nonnegative.
// Throws RankDeficient when a residual column norm drops below 1e-12.
QrResult gram_schmidt_qr(const RMat8& m);

}  // namespace stbc
