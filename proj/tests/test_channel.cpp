#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "stbclab/channel.hpp"

using namespace stbc;

TEST_CASE("rng streams are deterministic and seed-separated") {
    Rng a(12345), b(12345), c(54321);
    bool all_equal = true;
    bool any_equal_cross = false;
    for (int i = 0; i < 100; ++i) {
        const auto va = a.next_u64();
        all_equal = all_equal && va == b.next_u64();
        any_equal_cross = any_equal_cross || va == c.next_u64();
    }
    CHECK(all_equal);
    CHECK_FALSE(any_equal_cross);

    CHECK(mix_seed(1, 2) != mix_seed(2, 1));
    CHECK(mix_seed(1, 2, 3) != mix_seed(1, 3, 2));
}

TEST_CASE("uniform and uniform_int stay in range") {
    Rng rng(9);
    std::array<int, 7> hits{};
    for (int i = 0; i < 7000; ++i) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        ++hits[rng.uniform_int(7)];
    }
    for (int h : hits) CHECK(h > 700);  // roughly uniform
}

TEST_CASE("gaussian moments") {
    Rng rng(2024);
    const int n = 200000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double g = rng.gaussian();
        sum += g;
        sum2 += g * g;
    }
    CHECK(std::abs(sum / n) < 0.01);
    CHECK(sum2 / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("channel entries have unit variance per complex coefficient") {
    Rng rng(31);
    double sum2 = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) sum2 += sample_channel(rng).frob_norm_sq();
    CHECK(sum2 / (4.0 * n) == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("noiseless transmission is exact") {
    Rng rng(3);
    const CMat2 h = sample_channel(rng);
    const CMat2 s = encode_proposed({Complex{1, -1}, {3, 1}, {-1, 3}, {1, 1}});
    const CMat2 y = transmit(s, h, 0.0, rng);
    const CMat2 hs = h * s;
    for (int i = 0; i < 4; ++i) CHECK(y.e[i] == hs.e[i]);
}

TEST_CASE("noise variance matches n0") {
    Rng rng(8);
    const CMat2 s = CMat2::zero();
    const CMat2 h = CMat2::identity();
    const double n0 = 0.4;
    double sum2 = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) sum2 += transmit(s, h, n0, rng).frob_norm_sq();
    CHECK(sum2 / (4.0 * n) == doctest::Approx(n0).epsilon(0.03));
}

TEST_CASE("equivalent channel realizes the real-valued model") {
    const CodeSpec& spec = get_code("proposed");
    Rng rng(17);
    const QamAlphabet q = make_qam(16);
    for (int t = 0; t < 20; ++t) {
        const CMat2 h = sample_channel(rng);
        std::vector<Complex> x(4);
        RVec8 xt{};
        for (int m = 0; m < 4; ++m) {
            x[m] = q[rng.uniform_int(q.size)];
            xt[2 * m] = x[m].real();
            xt[2 * m + 1] = x[m].imag();
        }
        const RVec8 lhs = equivalent_channel(h, spec) * xt;
        const RVec8 rhs = vec_tilde(h * encode(spec, x));
        for (int i = 0; i < 8; ++i) CHECK(lhs[i] == doctest::Approx(rhs[i]).epsilon(1e-12));
    }
}

TEST_CASE("real model carries a consistent qr factorization") {
    const CodeSpec& spec = get_code("proposed");
    Rng rng(23);
    const CMat2 h = sample_channel(rng);
    const CMat2 y = transmit(encode_proposed({Complex{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}), h,
                             0.1, rng);
    const RealModel model = build_real_model(y, h, spec);
    const RMat8 recon = model.q * model.r;
    const RMat8 heq = model.h_eq_prime;
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
            CHECK(recon(r, c) == doctest::Approx(heq(r, c)).epsilon(1e-9));
    const RVec8 qty = model.q.transpose() * model.y_tilde;
    for (int i = 0; i < 8; ++i) CHECK(model.qty[i] == doctest::Approx(qty[i]).epsilon(1e-12));

    CHECK_THROWS_AS(build_real_model(y, h, get_code("ciod")), UnsupportedCode);
}
