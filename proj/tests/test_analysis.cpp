#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "stbclab/analysis.hpp"
#include "stbclab/channel.hpp"

using namespace stbc;

namespace {

// Independent oracle: enumerate every 4-QAM codeword of the code and take the
// minimum |det(S_i - S_j)|^2 over all distinct pairs. No difference-set
// shortcut, so it cross-checks min_determinant end to end.
double pairwise_min_det(const CodeSpec& spec, int m) {
    const QamAlphabet q = make_qam(m);
    std::vector<CMat2> words;
    std::vector<Complex> x(spec.k);
    std::vector<int> idx(spec.k, 0);
    for (;;) {
        for (int i = 0; i < spec.k; ++i) x[i] = q[idx[i]];
        words.push_back(encode(spec, x));
        int level = spec.k - 1;
        while (level >= 0 && ++idx[level] == q.size) idx[level--] = 0;
        if (level < 0) break;
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            best = std::min(best, std::norm((words[i] - words[j]).det()));
    return best;
}

}  // namespace

TEST_CASE("difference-set search agrees with the all-pairs oracle at 4-QAM") {
    const CodeSpec& spec = get_code("proposed");
    const MinDetResult res = min_determinant(spec, 4);
    CHECK(res.min_det == doctest::Approx(pairwise_min_det(spec, 4)).epsilon(1e-12));
    CHECK(res.evaluations == 6560);  // 3^8 - 1 nonzero difference vectors
    CHECK(res.argmin.size() == 4);
}

TEST_CASE("minimum determinants of the registered codes at 4-QAM") {
    CHECK(min_determinant(get_code("proposed"), 4).min_det == doctest::Approx(3.2).epsilon(1e-9));
    CHECK(min_determinant(get_code("golden"), 4).min_det == doctest::Approx(3.2).epsilon(1e-9));
    CHECK(min_determinant(get_code("htw-pga"), 4).min_det ==
          doctest::Approx(16.0 / 7.0).epsilon(1e-6));
    CHECK(min_determinant(get_code("sezginer-sari"), 4).min_det ==
          doctest::Approx(2.0).epsilon(1e-9));
    CHECK(min_determinant(get_code("ciod"), 4).min_det == doctest::Approx(3.2).epsilon(1e-9));
}

TEST_CASE("unsupported alphabet size propagates") {
    CHECK_THROWS_AS(min_determinant(get_code("proposed"), 5), UnsupportedSize);
    CHECK_THROWS_AS(analyze_code("proposed", 5), UnsupportedSize);
}

TEST_CASE("nvd scan hits the 1/sqrt(5) bound on the unit box") {
    const NvdScanResult res = nvd_scan(get_code("proposed"), 1);
    CHECK(res.min_abs_det == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-9));
    CHECK_THROWS_AS(nvd_scan(get_code("proposed"), 0), Error);
}

TEST_CASE("r pattern masks") {
    int proposed_zeros = 0, golden_zeros = 0;
    for (int r = 0; r < 8; ++r)
        for (int c = r; c < 8; ++c) {
            if (!r_pattern_mask(RPattern::kProposed, r, c)) ++proposed_zeros;
            if (!r_pattern_mask(RPattern::kGoldenType, r, c)) ++golden_zeros;
        }
    CHECK(proposed_zeros == 4);
    CHECK(golden_zeros == 4);
    CHECK_FALSE(r_pattern_mask(RPattern::kProposed, 0, 2));
    CHECK(r_pattern_mask(RPattern::kProposed, 0, 1));
    CHECK_FALSE(r_pattern_mask(RPattern::kGoldenType, 0, 1));
}

TEST_CASE("r structure holds on random channels and breaks under shuffling") {
    for (const char* id : {"proposed", "golden"}) {
        const RPatternReport rep = verify_r_pattern(get_code(id), 50, 123);
        CHECK(rep.max_structural_zero < 1e-10);
        CHECK_THROWS_AS(verify_r_pattern(get_code(id), 50, 123, true), PatternViolation);
    }
    CHECK_THROWS_AS(verify_r_pattern(get_code("sezginer-sari"), 1, 1), UnsupportedCode);
}

TEST_CASE("weight identities hold for the proposed code") {
    const WeightIdentityReport rep = verify_weight_identities(get_code("proposed"));
    CHECK(rep.pass);
    CHECK(rep.max_violation < 1e-14);
}

TEST_CASE("determinant identity on random integer vectors") {
    Rng rng(77);
    for (int t = 0; t < 200; ++t) {
        std::array<Complex, 4> x;
        for (auto& s : x)
            s = {static_cast<double>(rng.uniform_int(17) - 8),
                 static_cast<double>(rng.uniform_int(17) - 8)};
        CHECK(det_identity_residual(x) < 1e-9);
    }
}

TEST_CASE("analysis report aggregates the checks") {
    const CodeAnalysisReport rep = analyze_code("proposed", 4);
    CHECK(rep.all_passed());
    CHECK(rep.coding_gain == doctest::Approx(std::sqrt(3.2)).epsilon(1e-9));
    CHECK(rep.is_full_rank);
    CHECK(rep.generator_unitary);
    CHECK_THROWS_AS(analyze_code("nonesuch", 4), UnknownCode);
}
