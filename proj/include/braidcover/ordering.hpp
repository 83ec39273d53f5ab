#pragma once

#include "braidcover/braid.hpp"
#include "braidcover/rational.hpp"

#include <optional>

namespace braidcover {

inline constexpr long long kDefaultStepLimit = 1'000'000;

// Dehornoy class of a braid: trivial, or sigma-positive/negative with the
// main (lowest occurring) generator index of a witness word. main_index is 0
// for the trivial class.
struct SigmaClass {
    int sign = 0; // -1, 0, +1
    int main_index = 0;
};

struct HandleReduction {
    BraidWord word; // handle-free representative
    SigmaClass cls;
    long long steps = 0;
};

// Dehornoy handle reduction. Repeatedly rewrites the earliest-closing handle
// (a subword s_i^e v s_i^-e with v using only indices > i) until the word is
// handle-free, then classifies by the sign of the lowest occurring index.
// Throws StepLimitError when more than step_limit handles are rewritten.
HandleReduction handle_reduce(const BraidWord& w, long long step_limit = kDefaultStepLimit);

enum class OrderRel { Less, Equal, Greater };

// Dehornoy order: a < b when a^-1 b is sigma-positive. Total, left-invariant,
// with sigma-positive braids > identity.
OrderRel compare_dehornoy(const BraidWord& a, const BraidWord& b,
                          long long step_limit = kDefaultStepLimit);

// Unique m with D2^m <= w < D2^(m+1) in the Dehornoy order, D2 the full
// twist. Satisfies floor(w * D2^c) = floor(w) + c and the quasimorphism
// bounds floor(a) + floor(b) <= floor(ab) <= floor(a) + floor(b) + 1.
long long dehornoy_floor(const BraidWord& w, long long step_limit = kDefaultStepLimit);

// Floor plus exactness: exact means w = D2^floor in the group.
struct FloorResult {
    long long floor = 0;
    bool exact = false;
};
FloorResult dehornoy_floor_detail(const BraidWord& w, long long step_limit = kDefaultStepLimit);

// Verified enclosure of the fractional Dehn twist coefficient. pinned is set
// when the enclosure determines a unique value: either the interval collapsed
// to a point (an exact power relation w^N = D2^m was detected, or matching
// bounds were found), or exactly one rational with denominator <= the given
// bound lies in [lower, upper]. power_used is the highest power of w whose
// floor entered the enclosure.
struct FdtcEstimate {
    Rational lower;
    Rational upper;
    std::optional<Rational> pinned;
    int power_used = 0;
};

// Bounds come from the floor sandwich floor(v^N)/N <= fdtc(w) <=
// (floor(v^N)+1)/N applied to powers N <= max_power of w and of its cyclic
// rotations v (conjugates, so they share the same fdtc). rotation_limit caps
// how many rotations are tried per power.
FdtcEstimate fdtc(const BraidWord& w, int max_power = 6,
                  std::optional<long long> denominator_bound = std::nullopt,
                  long long step_limit = kDefaultStepLimit, int rotation_limit = 256);

// Birman-Hilden transfer to the double branched cover: halves an estimate.
// Requires an odd strand count.
FdtcEstimate bh_fdtc(const FdtcEstimate& e, int strands);

} // namespace braidcover
