#include "stbclab/channel.hpp"

#include <cmath>

namespace stbc {

namespace {

std::uint64_t splitmix_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Rng::next_u64() { return splitmix_next(state_); }

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * M_PI * u2;
    spare_ = r * std::sin(phi);
    has_spare_ = true;
    return r * std::cos(phi);
}

int Rng::uniform_int(int n) {
    const int v = static_cast<int>(uniform() * static_cast<double>(n));
    return v < n ? v : n - 1;
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a ^ (b + 0x9E3779B97F4A7C15ULL + (a << 6) + (a >> 2));
    return splitmix_next(s);
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix_seed(mix_seed(a, b), c);
}

CMat2 sample_channel(Rng& rng) {
    const double sigma = std::sqrt(0.5);  // per real dimension
    CMat2 h;
    for (int i = 0; i < 4; ++i) {
        const double re = sigma * rng.gaussian();
        const double im = sigma * rng.gaussian();
        h.e[i] = {re, im};
    }
    return h;
}

CMat2 transmit(const CMat2& s, const CMat2& h, double n0, Rng& rng) {
    CMat2 y = h * s;
    if (n0 > 0.0) {
        const double sigma = std::sqrt(n0 / 2.0);
        for (int i = 0; i < 4; ++i) {
            y.e[i] += Complex{sigma * rng.gaussian(), sigma * rng.gaussian()};
        }
    }
    return y;
}

RMat8 equivalent_channel(const CMat2& h, const CodeSpec& spec) {
    if (spec.k != 4)
        throw UnsupportedCode("equivalent_channel: needs a 4-symbol code, got " + spec.name);
    const RMat8 hc = check_embed_i2(h);
    RMat8 heq;
    for (int c = 0; c < 8; ++c) heq.set_col(c, hc * spec.gx_cols[c]);
    return heq;
}

RealModel build_real_model(const CMat2& y, const CMat2& h, const CodeSpec& spec) {
    RealModel m;
    m.h_eq_prime = equivalent_channel(h, spec);
    m.y_tilde = vec_tilde(y);
    const QrResult qr = gram_schmidt_qr(m.h_eq_prime);
    m.q = qr.q;
    m.r = qr.r;
    m.qty = qr.q.transpose() * m.y_tilde;
    return m;
}

}  // namespace stbc
