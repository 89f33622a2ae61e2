#include "stbclab/constellation.hpp"

#include <cmath>

namespace stbc {

double theta_g() { return 0.5 * std::atan(2.0); }

Complex rotation_phasor() {
    const double t = theta_g();
    return {std::cos(t), std::sin(t)};
}

Complex rotate(Complex x) { return rotation_phasor() * x; }

double QamAlphabet::energy() const {
    double s = 0.0;
    for (const auto& p : points) s += std::norm(p);
    return s / static_cast<double>(size);
}

std::vector<int> pam_levels(int m) {
    const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(m))));
    if (side * side != m) throw UnsupportedSize("pam_levels: M=" + std::to_string(m) + " is not square");
    std::vector<int> levels;
    for (int a = -(side - 1); a <= side - 1; a += 2) levels.push_back(a);
    return levels;
}

QamAlphabet make_qam(int m) {
    if (m != 4 && m != 16 && m != 64)
        throw UnsupportedSize("make_qam: unsupported constellation size M=" + std::to_string(m));
    const auto levels = pam_levels(m);
    QamAlphabet a;
    a.size = m;
    a.points.reserve(m);
    for (int re : levels)
        for (int im : levels) a.points.emplace_back(static_cast<double>(re), static_cast<double>(im));
    return a;
}

}  // namespace stbc
