#include "stbclab/decoders.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace stbc {

namespace {

bool tuple_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<CMat2> premultiply(const CMat2& h, const CodeSpec& spec) {
    std::vector<CMat2> ha;
    ha.reserve(spec.dispersion.size());
    for (const auto& a : spec.dispersion) ha.push_back(h * a);
    return ha;
}

void finalize(DecodeResult& res, const CodeSpec& spec, const QamAlphabet& alphabet) {
    res.x.clear();
    for (int i = 0; i < spec.k; ++i) res.x.push_back(alphabet[res.labels[i]]);
}

// label of the alphabet point with the given odd-integer coordinates
int label_of(int re, int im, int side) {
    return ((re + side - 1) / 2) * side + (im + side - 1) / 2;
}

}  // namespace

DecodeResult decode_exhaustive(const CMat2& y, const CMat2& h, const CodeSpec& spec,
                               const QamAlphabet& alphabet) {
    const auto ha = premultiply(h, spec);
    const int m = alphabet.size;

    DecodeResult res;
    res.metric = std::numeric_limits<double>::infinity();
    std::vector<int> labels(spec.k, 0);

    // lexicographic odometer over label vectors
    std::vector<CMat2> partial(spec.k + 1);
    partial[0] = y;  // accumulate Y - sum H*A_i*coord
    int level = 0;
    while (level >= 0) {
        if (level == spec.k) {
            ++res.metric_evals;
            const double metric = partial[spec.k].frob_norm_sq();
            if (metric < res.metric) {  // strict: first (lexicographic) wins ties
                res.metric = metric;
                res.labels = labels;
            }
            --level;
            ++labels[level];
            continue;
        }
        if (labels[level] >= m) {
            labels[level] = 0;
            --level;
            if (level >= 0) ++labels[level];
            continue;
        }
        const Complex p = alphabet[labels[level]];
        partial[level + 1] = partial[level] - ha[2 * level] * Complex{p.real(), 0.0} -
                             ha[2 * level + 1] * Complex{p.imag(), 0.0};
        ++level;
    }
    finalize(res, spec, alphabet);
    return res;
}

DecodeResult decode_conditional(const CMat2& y, const CMat2& h, const CodeSpec& spec,
                                const QamAlphabet& alphabet) {
    if (!spec.conditional_decodable)
        throw UnsupportedCode("decode_conditional: metric decomposition not valid for " +
                              spec.name);
    const auto ha = premultiply(h, spec);
    const int m = alphabet.size;

    DecodeResult res;
    res.metric = std::numeric_limits<double>::infinity();
    std::vector<int> best(4, -1);

    for (int i3 = 0; i3 < m; ++i3) {
        const Complex p3 = alphabet[i3];
        const CMat2 hs3 =
            ha[4] * Complex{p3.real(), 0.0} + ha[5] * Complex{p3.imag(), 0.0};
        for (int i4 = 0; i4 < m; ++i4) {
            const Complex p4 = alphabet[i4];
            const CMat2 y2 = y - hs3 - ha[6] * Complex{p4.real(), 0.0} -
                             ha[7] * Complex{p4.imag(), 0.0};
            const double base = y2.frob_norm_sq();

            // x1 and x2 decouple once (x3, x4) are fixed
            double g[2];
            int gi[2];
            for (int sym = 0; sym < 2; ++sym) {
                g[sym] = std::numeric_limits<double>::infinity();
                gi[sym] = -1;
                for (int i = 0; i < m; ++i) {
                    const Complex p = alphabet[i];
                    const CMat2 r = y2 - ha[2 * sym] * Complex{p.real(), 0.0} -
                                    ha[2 * sym + 1] * Complex{p.imag(), 0.0};
                    const double v = r.frob_norm_sq();
                    ++res.metric_evals;
                    if (v < g[sym]) {
                        g[sym] = v;
                        gi[sym] = i;
                    }
                }
            }
            const double total = g[0] + g[1] - base;
            const std::vector<int> cand{gi[0], gi[1], i3, i4};
            if (total < res.metric ||
                (total == res.metric && tuple_less(cand, best))) {
                res.metric = total;
                best = cand;
            }
        }
    }
    res.labels = best;
    finalize(res, spec, alphabet);
    return res;
}

namespace {

struct SphereState {
    const RMat8* r;
    RVec8 y;
    std::vector<double> levels;  // PAM levels as doubles, ascending
    int side = 0;
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> best_labels;
    std::array<double, 8> x{};
    DecodeResult* res;
};

// Schnorr-Euchner visiting order for one coordinate: levels sorted by
// distance to the unconstrained center, nearest first, smaller level on ties.
std::vector<int> se_order(const std::vector<double>& levels, double center) {
    std::vector<int> order(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::abs(levels[a] - center) < std::abs(levels[b] - center);
    });
    return order;
}

// 2-dimensional search for symbol `sym` (0 or 1) of the proposed code:
// rows 2*sym, 2*sym+1 of R couple only (Re, Im) of that symbol with the
// already-fixed coordinates 4..7.
void solve_pair(const SphereState& st, const QamAlphabet& alphabet, int sym, double& gmin,
                int& imin, std::uint64_t& evals) {
    const RMat8& r = *st.r;
    const int r0 = 2 * sym, r1 = 2 * sym + 1;
    double t0 = st.y[r0], t1 = st.y[r1];
    for (int j = 4; j < 8; ++j) {
        t0 -= r(r0, j) * st.x[j];
        t1 -= r(r1, j) * st.x[j];
    }
    gmin = std::numeric_limits<double>::infinity();
    imin = -1;
    for (int i = 0; i < alphabet.size; ++i) {
        const Complex p = alphabet[i];
        const double e0 = t0 - r(r0, r0) * p.real() - r(r0, r1) * p.imag();
        const double e1 = t1 - r(r1, r1) * p.imag();
        const double g = e0 * e0 + e1 * e1;
        ++evals;
        if (g < gmin) {
            gmin = g;
            imin = i;
        }
    }
}

void sphere_descend(SphereState& st, const QamAlphabet& alphabet, int coord, double cost) {
    const RMat8& r = *st.r;
    if (coord == 3) {
        // coordinates 4..7 fixed; finish with the two independent 2-dim searches
        double g1, g2;
        int i1, i2;
        solve_pair(st, alphabet, 0, g1, i1, st.res->metric_evals);
        solve_pair(st, alphabet, 1, g2, i2, st.res->metric_evals);
        const double total = cost + g1 + g2;
        const int i3 = label_of(static_cast<int>(st.x[4]), static_cast<int>(st.x[5]), st.side);
        const int i4 = label_of(static_cast<int>(st.x[6]), static_cast<int>(st.x[7]), st.side);
        const std::vector<int> cand{i1, i2, i3, i4};
        if (total < st.best || (total == st.best && tuple_less(cand, st.best_labels))) {
            st.best = total;
            st.best_labels = cand;
        }
        return;
    }
    double resid = st.y[coord];
    for (int j = coord + 1; j < 8; ++j) resid -= r(coord, j) * st.x[j];
    const double center = resid / r(coord, coord);
    for (int idx : se_order(st.levels, center)) {
        const double v = st.levels[idx];
        const double e = resid - r(coord, coord) * v;
        const double c2 = cost + e * e;
        ++st.res->node_visits;
        if (c2 > st.best) break;  // SE order: later values only get worse
        st.x[coord] = v;
        sphere_descend(st, alphabet, coord - 1, c2);
    }
}

}  // namespace

DecodeResult decode_sphere(const RealModel& model, const CodeSpec& spec,
                           const QamAlphabet& alphabet) {
    if (!spec.conditional_decodable)
        throw UnsupportedCode("decode_sphere: structured search requires the proposed code");
    RMat8 r = model.r;
    // structural zeros of the R pattern: rows 1-2 do not touch the x2 coordinates
    for (int row : {0, 1})
        for (int col : {2, 3}) {
            const double v = std::abs(r(row, col));
            if (v >= 1e-10)
                throw PatternViolation("decode_sphere: unexpected R coupling", 0, row, col, v);
            r(row, col) = 0.0;
        }

    DecodeResult res;
    SphereState st;
    st.r = &r;
    st.y = model.qty;
    for (int lv : pam_levels(alphabet.size)) st.levels.push_back(static_cast<double>(lv));
    st.side = static_cast<int>(st.levels.size());
    st.res = &res;
    st.best_labels.assign(4, -1);

    sphere_descend(st, alphabet, 7, 0.0);

    res.labels = st.best_labels;
    res.metric = st.best;
    finalize(res, spec, alphabet);
    return res;
}

DecodeResult decode_sphere_generic(const RealModel& model, const CodeSpec& spec,
                                   const QamAlphabet& alphabet) {
    const RMat8& r = model.r;
    DecodeResult res;
    std::vector<double> levels;
    for (int lv : pam_levels(alphabet.size)) levels.push_back(static_cast<double>(lv));
    const int side = static_cast<int>(levels.size());

    double best = std::numeric_limits<double>::infinity();
    std::vector<int> best_labels(4, -1);
    std::array<double, 8> x{};

    auto labels_of = [&]() {
        std::vector<int> lab(4);
        for (int m = 0; m < 4; ++m)
            lab[m] = label_of(static_cast<int>(x[2 * m]), static_cast<int>(x[2 * m + 1]), side);
        return lab;
    };

    // plain depth-first Schnorr-Euchner over all 8 real coordinates
    auto descend = [&](auto&& self, int coord, double cost) -> void {
        double resid = model.qty[coord];
        for (int j = coord + 1; j < 8; ++j) resid -= r(coord, j) * x[j];
        const double diag = r(coord, coord);
        const double center = resid / diag;
        for (int idx : se_order(levels, center)) {
            const double v = levels[idx];
            const double e = resid - diag * v;
            const double c2 = cost + e * e;
            ++res.node_visits;
            if (c2 > best) break;
            x[coord] = v;
            if (coord == 0) {
                ++res.metric_evals;
                const auto cand = labels_of();
                if (c2 < best || (c2 == best && tuple_less(cand, best_labels))) {
                    best = c2;
                    best_labels = cand;
                }
            } else {
                self(self, coord - 1, c2);
            }
        }
    };
    descend(descend, 7, 0.0);

    res.labels = best_labels;
    res.metric = best;
    finalize(res, spec, alphabet);
    return res;
}

}  // namespace stbc
