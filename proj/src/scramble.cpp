#include "qmcnet/scramble.hpp"

#include <stdexcept>

#include "qmcnet/util.hpp"

namespace qmcnet {

namespace {

constexpr uint64_t kSeedSalt = 0x5bf0f3c6aa1d8f21ULL;
constexpr uint64_t kFlipSalt = 0x7f4a7c15eb3d1b09ULL;
constexpr uint64_t kZeroSalt = 0x2545f4914f6cdd1dULL;
constexpr uint64_t kOneSalt = 0x9e6c63d0a1b2c3f5ULL;

uint64_t base_state(uint64_t seed, uint64_t replicate, uint32_t dimension) {
    uint64_t s = mix64(seed ^ kSeedSalt);
    s = mix64(s ^ replicate);
    return mix64(s ^ dimension);
}

inline int flip_bit(uint64_t state) {
    return static_cast<int>(mix64(state ^ kFlipSalt) >> 63);
}

inline uint64_t absorb(uint64_t state, int digit) {
    return mix64(state ^ (digit ? kOneSalt : kZeroSalt));
}

void check_config(const ScrambleConfig& cfg) {
    if (cfg.in_precision < 1 || cfg.in_precision > 63 || cfg.out_precision > 63 ||
        cfg.out_precision < cfg.in_precision) {
        throw std::invalid_argument("scramble: need 1 <= in_precision <= out_precision <= 63");
    }
}

}  // namespace

int permutation_bit(const ScrambleKey& key) {
    if (key.path_length < 0 || key.path_length > 63) {
        throw std::invalid_argument("scramble key: path length out of range");
    }
    uint64_t state = base_state(key.seed, key.replicate, key.dimension);
    for (int k = key.path_length - 1; k >= 0; --k) {
        state = absorb(state, (key.digit_path >> k) & 1);
    }
    return flip_bit(state);
}

uint64_t scramble_coordinate(uint64_t numerator, uint32_t dimension, const ScrambleConfig& cfg) {
    check_config(cfg);
    if (numerator >> cfg.in_precision) {
        throw std::invalid_argument("scramble: numerator exceeds input precision");
    }
    uint64_t state = base_state(cfg.seed, cfg.replicate, dimension);
    uint64_t out = 0;
    for (int k = 0; k < cfg.out_precision; ++k) {
        int digit = k < cfg.in_precision
            ? static_cast<int>((numerator >> (cfg.in_precision - 1 - k)) & 1)
            : 0;
        out = (out << 1) | uint64_t(digit ^ flip_bit(state));
        state = absorb(state, digit);
    }
    return out;
}

DigitalPoint scramble_point(const DigitalPoint& u, const ScrambleConfig& cfg) {
    check_config(cfg);
    if (u.precision != cfg.in_precision) {
        throw std::invalid_argument("scramble: point precision does not match config");
    }
    DigitalPoint x;
    x.precision = cfg.out_precision;
    x.coords.resize(u.coords.size());
    for (size_t j = 0; j < u.coords.size(); ++j) {
        x.coords[j] = scramble_coordinate(u.coords[j], static_cast<uint32_t>(j + 1), cfg);
    }
    return x;
}

PointMatrix scramble_block(const PointMatrix& pm, const ScrambleConfig& cfg) {
    check_config(cfg);
    if (pm.precision() != cfg.in_precision) {
        throw std::invalid_argument("scramble: block precision does not match config");
    }
    std::vector<uint64_t> data(pm.n() * pm.d());
    for (uint64_t i = 0; i < pm.n(); ++i) {
        for (uint32_t j = 0; j < pm.d(); ++j) {
            data[i * pm.d() + j] = scramble_coordinate(pm.coord(i, j), j + 1, cfg);
        }
    }
    return pm.with_data(std::move(data), cfg.out_precision);
}

}  // namespace qmcnet
