#include "stbclab/linalg.hpp"

#include <cmath>

namespace stbc {

CMat2 CMat2::identity() {
    CMat2 m;
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    return m;
}

CMat2 CMat2::operator+(const CMat2& o) const {
    CMat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = e[i] + o.e[i];
    return r;
}

CMat2 CMat2::operator-(const CMat2& o) const {
    CMat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = e[i] - o.e[i];
    return r;
}

CMat2 CMat2::operator*(const CMat2& o) const {
    CMat2 r;
    r(0, 0) = (*this)(0, 0) * o(0, 0) + (*this)(0, 1) * o(1, 0);
    r(0, 1) = (*this)(0, 0) * o(0, 1) + (*this)(0, 1) * o(1, 1);
    r(1, 0) = (*this)(1, 0) * o(0, 0) + (*this)(1, 1) * o(1, 0);
    r(1, 1) = (*this)(1, 0) * o(0, 1) + (*this)(1, 1) * o(1, 1);
    return r;
}

CMat2 CMat2::operator*(Complex s) const {
    CMat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = e[i] * s;
    return r;
}

CMat2 CMat2::adjoint() const {
    CMat2 r;
    r(0, 0) = std::conj((*this)(0, 0));
    r(0, 1) = std::conj((*this)(1, 0));
    r(1, 0) = std::conj((*this)(0, 1));
    r(1, 1) = std::conj((*this)(1, 1));
    return r;
}

double CMat2::frob_norm_sq() const {
    double s = 0.0;
    for (const auto& v : e) s += std::norm(v);
    return s;
}

RMat8 RMat8::identity() {
    RMat8 m;
    for (int i = 0; i < 8; ++i) m(i, i) = 1.0;
    return m;
}

RMat8 RMat8::operator*(const RMat8& o) const {
    RMat8 r;
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) {
            const double a = (*this)(i, k);
            if (a == 0.0) continue;
            for (int j = 0; j < 8; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

RVec8 RMat8::operator*(const RVec8& v) const {
    RVec8 r{};
    for (int i = 0; i < 8; ++i) {
        double s = 0.0;
        for (int j = 0; j < 8; ++j) s += (*this)(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

RMat8 RMat8::transpose() const {
    RMat8 r;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) r(i, j) = (*this)(j, i);
    return r;
}

double RMat8::frob_norm_sq() const {
    double s = 0.0;
    for (double v : e) s += v * v;
    return s;
}

RVec8 RMat8::col(int c) const {
    RVec8 v;
    for (int i = 0; i < 8; ++i) v[i] = (*this)(i, c);
    return v;
}

void RMat8::set_col(int c, const RVec8& v) {
    for (int i = 0; i < 8; ++i) (*this)(i, c) = v[i];
}

double dot(const RVec8& a, const RVec8& b) {
    double s = 0.0;
    for (int i = 0; i < 8; ++i) s += a[i] * b[i];
    return s;
}

double norm_sq(const RVec8& a) { return dot(a, a); }

RVec8 operator-(const RVec8& a, const RVec8& b) {
    RVec8 r;
    for (int i = 0; i < 8; ++i) r[i] = a[i] - b[i];
    return r;
}

RVec8 vec_tilde(const CMat2& x) {
    // column-major stacking, Re/Im interleaved
    return {x(0, 0).real(), x(0, 0).imag(), x(1, 0).real(), x(1, 0).imag(),
            x(0, 1).real(), x(0, 1).imag(), x(1, 1).real(), x(1, 1).imag()};
}

CMat2 vec_tilde_inv(const RVec8& v) {
    CMat2 x;
    x(0, 0) = {v[0], v[1]};
    x(1, 0) = {v[2], v[3]};
    x(0, 1) = {v[4], v[5]};
    x(1, 1) = {v[6], v[7]};
    return x;
}

RMat4 check_op(const CMat2& x) {
    RMat4 m;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            const Complex s = x(r, c);
            m(2 * r, 2 * c) = s.real();
            m(2 * r, 2 * c + 1) = -s.imag();
            m(2 * r + 1, 2 * c) = s.imag();
            m(2 * r + 1, 2 * c + 1) = s.real();
        }
    return m;
}

RMat8 check_embed_i2(const CMat2& h) {
    const RMat4 hc = check_op(h);
    RMat8 m;
    for (int b = 0; b < 2; ++b)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m(4 * b + i, 4 * b + j) = hc(i, j);
    return m;
}

double frob_metric(const CMat2& y, const CMat2& h, const CMat2& s) {
    return (y - h * s).frob_norm_sq();
}

QrResult gram_schmidt_qr(const RMat8& m) {
    QrResult qr;
    for (int i = 0; i < 8; ++i) {
        RVec8 v = m.col(i);
        for (int j = 0; j < i; ++j) {
            const RVec8 qj = qr.q.col(j);
            const double proj = dot(m.col(i), qj);
            qr.r(j, i) = proj;
            for (int k = 0; k < 8; ++k) v[k] -= proj * qj[k];
        }
        const double nrm = std::sqrt(norm_sq(v));
        if (nrm < 1e-12) throw RankDeficient("gram_schmidt_qr: column " + std::to_string(i));
        qr.r(i, i) = nrm;
        for (int k = 0; k < 8; ++k) v[k] /= nrm;
        qr.q.set_col(i, v);
    }
    return qr;
}

}  // namespace stbc
