#pragma once

#include <cmath>
#include <cstdint>

namespace qmcnet {

// Neumaier compensated accumulator; keeps long averages exact to a few ulp.
class CompensatedSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// SplitMix64 finalizer (Stafford mix13); the only mixing primitive used by
// the scramble PRF.
inline uint64_t mix64(uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

inline bool is_power_of_two(uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline int log2_exact(uint64_t n) {
    int m = 0;
    while ((uint64_t(1) << m) < n) ++m;
    return m;
}

inline uint64_t gray_code(uint64_t i) { return i ^ (i >> 1); }

}  // namespace qmcnet
