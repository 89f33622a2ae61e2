#pragma once

#include <cstdint>

#include "stbclab/codes.hpp"

namespace stbc {

// Small counter-seeded generator (splitmix64 core, Box-Muller normals).
// Each simulation trial owns its own stream, so results do not depend on
// the thread schedule.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    double uniform();          // [0, 1)
    double gaussian();         // N(0, 1)
    int uniform_int(int n);    // {0, ..., n-1}

  private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Stream derivation for (master seed, point, trial) triples.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c);

// 2x2 i.i.d. circularly symmetric complex Gaussian, unit variance per entry.
CMat2 sample_channel(Rng& rng);

// Y = H*S + N, noise variance n0 per complex entry. n0 = 0 is exact.
CMat2 transmit(const CMat2& s, const CMat2& h, double n0, Rng& rng);

// Real-valued equivalent of Y = HS + N for a k=4 code:
// y_tilde = H_eq' x_tilde + n_tilde with H_eq' = (I2 kron check(H)) G F.
struct RealModel {
    RMat8 h_eq_prime;
    RVec8 y_tilde{};
    RMat8 q;
    RMat8 r;
    RVec8 qty{};  // Q^T y_tilde
};

// Throws UnsupportedCode for k != 4 codes, RankDeficient from the QR step.
RealModel build_real_model(const CMat2& y, const CMat2& h, const CodeSpec& spec);

// H_eq' without the QR (also used by the R-pattern verifier).
RMat8 equivalent_channel(const CMat2& h, const CodeSpec& spec);

}  // namespace stbc
