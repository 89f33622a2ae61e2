#include "stbclab/codes.hpp"

#include <cmath>
#include <map>

namespace stbc {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt5 = std::sqrt(5.0);
const double kSqrt7 = std::sqrt(7.0);

Complex phasor_pi4() { return {1.0 / kSqrt2, 1.0 / kSqrt2}; }

}  // namespace

bool CodeSpec::generator_unitary(double tol) const {
    const int n = static_cast<int>(generator_cols.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double want = (i == j) ? 1.0 : 0.0;
            if (std::abs(dot(generator_cols[i], generator_cols[j]) - want) > tol) return false;
        }
    return true;
}

CMat2 encode_ciod(Complex s1, Complex s2) {
    CMat2 s;
    s(0, 0) = {s1.real(), s2.imag()};
    s(1, 1) = {s2.real(), s1.imag()};
    return s;
}

CMat2 encode_proposed(const std::array<Complex, 4>& x) {
    const Complex s1 = rotate(x[0]);
    const Complex s2 = rotate(x[1]);
    const Complex s3 = rotate(x[2]);
    const Complex s4 = rotate(x[3]);
    const Complex w = phasor_pi4();
    CMat2 s;
    s(0, 0) = {s1.real(), s2.imag()};
    s(0, 1) = w * Complex{s3.real(), s4.imag()};
    s(1, 0) = w * Complex{s4.real(), s3.imag()};
    s(1, 1) = {s2.real(), s1.imag()};
    return s;
}

CMat2 encode_golden(const std::array<Complex, 4>& x) {
    const double th = (1.0 + kSqrt5) / 2.0;
    const double sth = (1.0 - kSqrt5) / 2.0;
    const Complex al{1.0, 1.0 - th};
    const Complex sal{1.0, 1.0 - sth};
    CMat2 s;
    s(0, 0) = al * (x[0] + th * x[1]) / kSqrt5;
    s(0, 1) = al * (x[2] + th * x[3]) / kSqrt5;
    s(1, 0) = Complex{0.0, 1.0} * sal * (x[2] + sth * x[3]) / kSqrt5;
    s(1, 1) = sal * (x[0] + sth * x[1]) / kSqrt5;
    return s;
}

CMat2 encode_htw_pga(const std::array<Complex, 4>& x) {
    // Alamouti block plus a twisted Alamouti block of unitarily mixed symbols.
    const Complex z1 = (Complex{1.0, 1.0} * x[2] + Complex{-1.0, 2.0} * x[3]) / kSqrt7;
    const Complex z2 = (Complex{1.0, 2.0} * x[2] + Complex{1.0, -1.0} * x[3]) / kSqrt7;
    CMat2 s;
    s(0, 0) = (x[0] + z1) / kSqrt2;
    s(0, 1) = -std::conj(x[1] + z2) / kSqrt2;
    s(1, 0) = (x[1] - z2) / kSqrt2;
    s(1, 1) = std::conj(x[0] - z1) / kSqrt2;
    return s;
}

CMat2 encode_sezginer_sari(const std::array<Complex, 4>& x) {
    const double a = 1.0 / kSqrt2;
    const Complex b = Complex{1.0 + kSqrt7, 1.0 - kSqrt7} / (4.0 * kSqrt2);
    const Complex d = Complex{1.0 - kSqrt7, 1.0 + kSqrt7} / (4.0 * kSqrt2);
    CMat2 s;
    s(0, 0) = a * x[0] + b * x[2];
    s(0, 1) = -std::conj(a * x[1] + d * x[3]);
    s(1, 0) = a * x[1] + b * x[3];
    s(1, 1) = std::conj(a * x[0] + d * x[2]);
    return s;
}

RMat8 proposed_generator() {
    const double h = 1.0 / kSqrt2;
    RMat8 g;
    g(0, 0) = 1.0;
    g(1, 3) = 1.0;
    g(2, 5) = -h;
    g(2, 6) = h;
    g(3, 5) = h;
    g(3, 6) = h;
    g(4, 4) = h;
    g(4, 7) = -h;
    g(5, 4) = h;
    g(5, 7) = h;
    g(6, 2) = 1.0;
    g(7, 1) = 1.0;
    return g;
}

RMat8 rotation_matrix_f() {
    const double c = std::cos(theta_g());
    const double s = std::sin(theta_g());
    RMat8 f;
    for (int m = 0; m < 4; ++m) {
        f(2 * m, 2 * m) = c;
        f(2 * m, 2 * m + 1) = -s;
        f(2 * m + 1, 2 * m) = s;
        f(2 * m + 1, 2 * m + 1) = c;
    }
    return f;
}

namespace {

// Probe an encoder with unit real coordinates to recover its dispersion data.
template <typename Enc>
std::vector<RVec8> columns_from_encoder(int k, Enc enc) {
    std::vector<RVec8> cols;
    for (int i = 0; i < 2 * k; ++i) {
        std::array<Complex, 4> x{};
        x[i / 2] = (i % 2 == 0) ? Complex{1.0, 0.0} : Complex{0.0, 1.0};
        cols.push_back(vec_tilde(enc(x)));
    }
    return cols;
}

void finish_spec(CodeSpec& spec) {
    // gx = G*F column-combine when the code rotates, otherwise gx = G
    if (spec.uses_rotation) {
        const double c = std::cos(theta_g());
        const double s = std::sin(theta_g());
        spec.gx_cols.resize(spec.generator_cols.size());
        for (int m = 0; m < spec.k; ++m) {
            const RVec8& gre = spec.generator_cols[2 * m];
            const RVec8& gim = spec.generator_cols[2 * m + 1];
            for (int r = 0; r < 8; ++r) {
                spec.gx_cols[2 * m][r] = c * gre[r] + s * gim[r];
                spec.gx_cols[2 * m + 1][r] = -s * gre[r] + c * gim[r];
            }
        }
    } else {
        spec.gx_cols = spec.generator_cols;
    }
    spec.dispersion.clear();
    spec.gen_energy_sq = 0.0;
    for (const auto& col : spec.gx_cols) {
        spec.dispersion.push_back(vec_tilde_inv(col));
        spec.gen_energy_sq += norm_sq(col);
    }
}

std::map<std::string, CodeSpec> build_registry() {
    std::map<std::string, CodeSpec> reg;

    {
        CodeSpec spec;
        spec.name = "proposed";
        spec.k = 4;
        spec.uses_rotation = true;
        spec.conditional_decodable = true;
        const RMat8 g = proposed_generator();
        for (int i = 0; i < 8; ++i) spec.generator_cols.push_back(g.col(i));
        finish_spec(spec);
        reg.emplace(spec.name, std::move(spec));
    }
    {
        CodeSpec spec;
        spec.name = "golden";
        spec.k = 4;
        spec.generator_cols = columns_from_encoder(4, encode_golden);
        finish_spec(spec);
        reg.emplace(spec.name, std::move(spec));
    }
    {
        CodeSpec spec;
        spec.name = "htw-pga";
        spec.k = 4;
        spec.generator_cols = columns_from_encoder(4, encode_htw_pga);
        finish_spec(spec);
        reg.emplace(spec.name, std::move(spec));
    }
    {
        CodeSpec spec;
        spec.name = "sezginer-sari";
        spec.k = 4;
        spec.generator_cols = columns_from_encoder(4, encode_sezginer_sari);
        finish_spec(spec);
        reg.emplace(spec.name, std::move(spec));
    }
    {
        CodeSpec spec;
        spec.name = "ciod";
        spec.k = 2;
        spec.uses_rotation = true;
        spec.generator_cols = columns_from_encoder(
            2, [](const std::array<Complex, 4>& s) { return encode_ciod(s[0], s[1]); });
        finish_spec(spec);
        reg.emplace(spec.name, std::move(spec));
    }
    return reg;
}

const std::map<std::string, CodeSpec>& registry() {
    static const std::map<std::string, CodeSpec> reg = build_registry();
    return reg;
}

}  // namespace

const CodeSpec& get_code(const std::string& id) {
    const auto& reg = registry();
    auto it = reg.find(id);
    if (it == reg.end()) throw UnknownCode("unknown code: " + id);
    return it->second;
}

std::vector<std::string> code_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, spec] : registry()) ids.push_back(id);
    return ids;
}

const std::vector<CMat2>& weight_matrices(const std::string& id) { return get_code(id).dispersion; }

CMat2 encode(const CodeSpec& spec, const std::vector<Complex>& x) {
    CMat2 s;
    for (int m = 0; m < spec.k; ++m) {
        s = s + spec.dispersion[2 * m] * Complex{x[m].real(), 0.0};
        s = s + spec.dispersion[2 * m + 1] * Complex{x[m].imag(), 0.0};
    }
    return s;
}

CMat2 encode(const CodeSpec& spec, const std::array<Complex, 4>& x) {
    return encode(spec, std::vector<Complex>(x.begin(), x.begin() + spec.k));
}

}  // namespace stbc
