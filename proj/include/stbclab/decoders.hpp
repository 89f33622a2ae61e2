#pragma once

#include <cstdint>
#include <vector>

#include "stbclab/channel.hpp"
#include "stbclab/codes.hpp"
#include "stbclab/constellation.hpp"

namespace stbc {

struct DecodeResult {
    std::vector<int> labels;     // alphabet indices, one per information symbol
    std::vector<Complex> x;      // decoded unrotated symbols
    double metric = 0.0;         // achieved ||Y - HS||_F^2
    std::uint64_t metric_evals = 0;
    std::uint64_t node_visits = 0;  // sphere decoder tree nodes
};

// Global minimizer over all M^k symbol vectors; metric_evals = M^k.
// Ties broken lexicographically on the label tuple.
DecodeResult decode_exhaustive(const CMat2& y, const CMat2& h, const CodeSpec& spec,
                               const QamAlphabet& alphabet);

// Exact ML via the metric decomposition: for each (x3, x4) pair, x1 and x2
// are minimized independently. metric_evals <= 2*M^3. Only valid for codes
// whose weight matrices satisfy the quasi-orthogonality identities
// (the proposed code); throws UnsupportedCode otherwise.
DecodeResult decode_conditional(const CMat2& y, const CMat2& h, const CodeSpec& spec,
                                const QamAlphabet& alphabet);

// Structured sphere decoder for the proposed code: depth-first
// Schnorr-Euchner search over the (x3, x4) real coordinates, then two
// independent 2-dimensional searches for x1 and x2. Exact ML, same
// tie-break as the other decoders. Throws UnsupportedCode for other codes
// and PatternViolation if R does not match the expected structure.
DecodeResult decode_sphere(const RealModel& model, const CodeSpec& spec,
                           const QamAlphabet& alphabet);

// Generic 8-dimensional real sphere decoder over H_eq' for any 4-symbol
// code (used for the reference codes; correctness, not complexity).
DecodeResult decode_sphere_generic(const RealModel& model, const CodeSpec& spec,
                                   const QamAlphabet& alphabet);

}  // namespace stbc
