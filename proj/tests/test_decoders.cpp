#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "stbclab/decoders.hpp"

using namespace stbc;

namespace {

struct Instance {
    std::vector<int> tx;
    CMat2 h;
    CMat2 y;
};

// Same generation scheme as the simulator: unit-energy normalization folded
// into H, noise level from the per-receive-antenna SNR.
Instance draw_instance(const CodeSpec& spec, const QamAlphabet& q, double snr_db, Rng& rng) {
    Instance inst;
    std::vector<Complex> x(spec.k);
    for (int i = 0; i < spec.k; ++i) {
        inst.tx.push_back(rng.uniform_int(q.size));
        x[i] = q[inst.tx.back()];
    }
    const double kappa = std::sqrt(q.energy() * spec.gen_energy_sq / 8.0);
    inst.h = sample_channel(rng) * Complex{1.0 / kappa, 0.0};
    const double n0 = 2.0 / std::pow(10.0, snr_db / 10.0);
    inst.y = transmit(encode(spec, x), inst.h, n0, rng);
    return inst;
}

}  // namespace

TEST_CASE("noiseless instances decode to the transmitted vector") {
    const CodeSpec& spec = get_code("proposed");
    for (int m : {4, 16}) {
        const QamAlphabet q = make_qam(m);
        Rng rng(100 + m);
        for (int t = 0; t < (m == 4 ? 40 : 10); ++t) {
            const Instance inst = draw_instance(spec, q, 300.0, rng);
            CHECK(decode_exhaustive(inst.y, inst.h, spec, q).labels == inst.tx);
            CHECK(decode_conditional(inst.y, inst.h, spec, q).labels == inst.tx);
            const RealModel model = build_real_model(inst.y, inst.h, spec);
            CHECK(decode_sphere(model, spec, q).labels == inst.tx);
            CHECK(decode_sphere_generic(model, spec, q).labels == inst.tx);
        }
    }
}

TEST_CASE("all three decoders agree on noisy instances") {
    const CodeSpec& spec = get_code("proposed");
    const QamAlphabet q = make_qam(4);
    Rng rng(2711);
    int checked = 0;
    for (int t = 0; t < 300; ++t) {
        const Instance inst = draw_instance(spec, q, 10.0, rng);
        const auto a = decode_exhaustive(inst.y, inst.h, spec, q);
        const auto b = decode_conditional(inst.y, inst.h, spec, q);
        const auto c = decode_sphere(build_real_model(inst.y, inst.h, spec), spec, q);
        CHECK(a.labels == b.labels);
        CHECK(b.labels == c.labels);
        CHECK(a.metric == doctest::Approx(b.metric).epsilon(1e-9));
        ++checked;
    }
    CHECK(checked == 300);
}

TEST_CASE("metric evaluation counts match the complexity claims") {
    const CodeSpec& spec = get_code("proposed");
    for (int m : {4, 16}) {
        const QamAlphabet q = make_qam(m);
        Rng rng(m);
        const Instance inst = draw_instance(spec, q, 12.0, rng);
        const auto ex = decode_exhaustive(inst.y, inst.h, spec, q);
        CHECK(ex.metric_evals ==
              static_cast<std::uint64_t>(m) * m * m * m);
        const auto co = decode_conditional(inst.y, inst.h, spec, q);
        CHECK(co.metric_evals == 2ull * m * m * m);
        const auto sp = decode_sphere(build_real_model(inst.y, inst.h, spec), spec, q);
        CHECK(sp.metric_evals <= 2ull * m * m * m);
        CHECK(sp.node_visits > 0);
    }
}

TEST_CASE("generic sphere decoder is exact on the reference codes") {
    for (const char* id : {"golden", "htw-pga", "sezginer-sari"}) {
        const CodeSpec& spec = get_code(id);
        const QamAlphabet q = make_qam(4);
        Rng rng(900);
        for (int t = 0; t < 60; ++t) {
            const Instance inst = draw_instance(spec, q, 10.0, rng);
            const auto a = decode_exhaustive(inst.y, inst.h, spec, q);
            const auto b = decode_sphere_generic(build_real_model(inst.y, inst.h, spec), spec, q);
            CHECK(a.labels == b.labels);
        }
    }
}

TEST_CASE("structured decoders reject unsupported codes") {
    const CodeSpec& golden = get_code("golden");
    const QamAlphabet q = make_qam(4);
    Rng rng(1);
    const Instance inst = draw_instance(golden, q, 10.0, rng);
    CHECK_THROWS_AS(decode_conditional(inst.y, inst.h, golden, q), UnsupportedCode);
    const RealModel model = build_real_model(inst.y, inst.h, golden);
    CHECK_THROWS_AS(decode_sphere(model, golden, q), UnsupportedCode);
}

TEST_CASE("ties resolve to the lexicographically first label tuple") {
    // H = 0 makes every candidate metric identical.
    const CodeSpec& spec = get_code("proposed");
    const QamAlphabet q = make_qam(4);
    CMat2 y;
    y(0, 0) = {0.3, -0.2};
    const CMat2 h = CMat2::zero();
    const std::vector<int> first{0, 0, 0, 0};
    CHECK(decode_exhaustive(y, h, spec, q).labels == first);
    CHECK(decode_conditional(y, h, spec, q).labels == first);
}

TEST_CASE("decode result carries the decoded symbols") {
    const CodeSpec& spec = get_code("proposed");
    const QamAlphabet q = make_qam(4);
    Rng rng(55);
    const Instance inst = draw_instance(spec, q, 300.0, rng);
    const auto res = decode_exhaustive(inst.y, inst.h, spec, q);
    for (int i = 0; i < 4; ++i) CHECK(res.x[i] == q[res.labels[i]]);
    CHECK(res.metric == doctest::Approx(frob_metric(inst.y, inst.h, encode(spec, res.x))));
}
