#pragma once

#include <cstdint>

#include "qmcnet/sobol.hpp"

namespace qmcnet {

// Nested uniform scrambling in base 2.
//
// A base-2 nested uniform scramble flips digit k of a coordinate by a bit
// drawn independently per node of the binary digit tree; the node is
// identified by (seed, replicate, dimension, digits 1..k-1). Instead of
// materializing the tree, the flip bit is a keyed counter-based function:
//
//     state_1 = mix(mix(mix(seed ^ C0) ^ replicate) ^ dimension)
//     flip_k  = top bit of mix(state_k ^ C1)
//     state_{k+1} = mix(state_k ^ (digit_k ? C2 : C3))
//
// with mix = the SplitMix64 finalizer (Stafford mix13). This is fixed,
// platform-independent 64-bit arithmetic, so scrambles are bit-identical
// across runs and platforms, and a coordinate's scramble depends on its
// value only, never on its index.

struct ScrambleConfig {
    uint64_t seed = 0;
    uint64_t replicate = 0;
    int in_precision = DirectionTable::kBitPrecision;
    int out_precision = 53;  // >= in_precision; 53 keeps doubles exact
};

// Identifies one permutation bit: the flip applied at digit depth
// path_length+1 of coordinate `dimension`, below input digits 1..path_length
// (most significant digit first) stored in the low bits of digit_path.
struct ScrambleKey {
    uint64_t seed = 0;
    uint64_t replicate = 0;
    uint32_t dimension = 1;  // 1-based
    uint64_t digit_path = 0;
    int path_length = 0;
};

// The canonical permutation-bit function; scramble_coordinate applies it
// incrementally digit by digit.
int permutation_bit(const ScrambleKey& key);

// Scrambles one coordinate numerator (in_precision bits -> out_precision
// bits); digits past in_precision are scrambled zeros.
uint64_t scramble_coordinate(uint64_t numerator, uint32_t dimension, const ScrambleConfig& cfg);

DigitalPoint scramble_point(const DigitalPoint& u, const ScrambleConfig& cfg);
PointMatrix scramble_block(const PointMatrix& pm, const ScrambleConfig& cfg);

}  // namespace qmcnet
