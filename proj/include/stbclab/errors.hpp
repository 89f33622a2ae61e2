#pragma once

#include <stdexcept>
#include <string>

namespace stbc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerically singular matrix handed to the QR step; the simulator reacts
// by redrawing the channel.
struct RankDeficient : Error {
    using Error::Error;
};

struct UnsupportedSize : Error {
    using Error::Error;
};

struct UnknownCode : Error {
    using Error::Error;
};

struct UnsupportedCode : Error {
    using Error::Error;
};

struct PatternViolation : Error {
    int trial = -1;
    int row = -1;
    int col = -1;
    double value = 0.0;
    PatternViolation(const std::string& msg, int trial_, int row_, int col_, double value_)
        : Error(msg), trial(trial_), row(row_), col(col_), value(value_) {}
};

struct EmptySweep : Error {
    using Error::Error;
};

struct EmptySuite : Error {
    using Error::Error;
};

}  // namespace stbc
