#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qmcnet/sobol.hpp"

namespace qmcnet {

// The elementary interval E(k,c) = prod_j [c_j/2^k_j, (c_j+1)/2^k_j).
struct IntervalSpec {
    std::vector<uint32_t> k;
    std::vector<uint64_t> c;  // c[j] < 2^k[j]
};

struct IntervalWitness {
    IntervalSpec interval;
    uint64_t observed = 0;
    uint64_t expected = 0;
};

struct NetVerdict {
    bool is_net = false;
    int t_checked = 0;
    std::optional<IntervalWitness> witness;  // present iff !is_net
};

struct StrictT {
    int t = 0;
    int m = 0;
    uint32_t d = 0;
};

// Exact count of points inside E(k,c), decided on fixed-point digits.
uint64_t count_in_interval(const PointMatrix& pm, const IntervalSpec& iv);

// All k-vectors with sum m-t: compositions of m-t into d parts, ordered by
// max depth first (max_j k_j ascending), then lexicographically. The square
// grid shapes come first, so witnesses favor the coarsest balanced boxes.
std::vector<std::vector<uint32_t>> enumerate_shapes(int m, int t, uint32_t d);

// Checks the (t,m,d)-net property by one bucket-counting pass per shape.
// n must be a power of two (n = 2^m); the witness, when present, is the
// first violating interval in enumeration order.
NetVerdict is_tmd_net(const PointMatrix& pm, int t);

// Smallest t for which pm is a (t,m,d)-net; t=m always passes.
StrictT strict_t(const PointMatrix& pm);

}  // namespace qmcnet
