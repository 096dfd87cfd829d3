#include "qmcnet/net_verifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "qmcnet/util.hpp"

namespace qmcnet {

uint64_t count_in_interval(const PointMatrix& pm, const IntervalSpec& iv) {
    const uint32_t d = pm.d();
    if (iv.k.size() != d || iv.c.size() != d) {
        throw std::invalid_argument("count_in_interval: interval dimension mismatch");
    }
    const int prec = pm.precision();
    for (uint32_t j = 0; j < d; ++j) {
        if (iv.k[j] > static_cast<uint32_t>(prec)) {
            throw std::invalid_argument("count_in_interval: interval finer than point precision");
        }
        if (iv.k[j] < 64 && iv.c[j] >= (uint64_t(1) << iv.k[j])) {
            throw std::invalid_argument("count_in_interval: corner index out of range");
        }
    }
    uint64_t count = 0;
    for (uint64_t i = 0; i < pm.n(); ++i) {
        bool inside = true;
        for (uint32_t j = 0; j < d; ++j) {
            if ((pm.coord(i, j) >> (prec - iv.k[j])) != iv.c[j]) {
                inside = false;
                break;
            }
            // k_j == prec shifts by zero; coordinates are already < 2^prec
        }
        count += inside;
    }
    return count;
}

std::vector<std::vector<uint32_t>> enumerate_shapes(int m, int t, uint32_t d) {
    if (t < 0 || t > m) throw std::invalid_argument("enumerate_shapes: need 0 <= t <= m");
    if (d == 0) throw std::invalid_argument("enumerate_shapes: dimension must be positive");
    const int width = m - t;
    std::vector<std::vector<uint32_t>> shapes;
    std::vector<uint32_t> cur(d);

    auto rec = [&](auto&& self, uint32_t j, int rem) -> void {
        if (j == d - 1) {
            cur[j] = static_cast<uint32_t>(rem);
            shapes.push_back(cur);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[j] = static_cast<uint32_t>(v);
            self(self, j + 1, rem - v);
        }
    };
    rec(rec, 0, width);

    // Coarsest (smallest max depth) shapes first, ties broken lexicographically,
    // so the square-grid boxes are inspected before thin slabs.
    std::stable_sort(shapes.begin(), shapes.end(),
                     [](const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
                         uint32_t ma = *std::max_element(a.begin(), a.end());
                         uint32_t mb = *std::max_element(b.begin(), b.end());
                         if (ma != mb) return ma < mb;
                         return a < b;
                     });
    return shapes;
}

NetVerdict is_tmd_net(const PointMatrix& pm, int t) {
    const uint64_t n = pm.n();
    if (!is_power_of_two(n)) {
        throw std::invalid_argument("net property undefined for this n (need n = 2^m)");
    }
    const int m = log2_exact(n);
    if (t < 0 || t > m) {
        throw std::invalid_argument("is_tmd_net: need 0 <= t <= m");
    }
    const uint32_t d = pm.d();
    const int prec = pm.precision();
    if (m - t > prec) {
        throw std::invalid_argument("is_tmd_net: interval depth exceeds point precision");
    }

    NetVerdict verdict;
    verdict.t_checked = t;
    const uint64_t expected = uint64_t(1) << t;
    const int width = m - t;
    std::vector<uint32_t> buckets(uint64_t(1) << width);

    for (const auto& shape : enumerate_shapes(m, t, d)) {
        std::fill(buckets.begin(), buckets.end(), 0u);
        for (uint64_t i = 0; i < n; ++i) {
            uint64_t key = 0;
            for (uint32_t j = 0; j < d; ++j) {
                key = (key << shape[j]) | (pm.coord(i, j) >> (prec - shape[j]));
            }
            ++buckets[key];
        }
        for (uint64_t b = 0; b < buckets.size(); ++b) {
            if (buckets[b] != expected) {
                IntervalSpec iv;
                iv.k = shape;
                iv.c.resize(d);
                int rem = width;
                uint64_t bits = b;
                for (uint32_t j = 0; j < d; ++j) {
                    rem -= static_cast<int>(shape[j]);
                    iv.c[j] = bits >> rem;
                    bits &= (uint64_t(1) << rem) - 1;
                }
                verdict.is_net = false;
                verdict.witness = IntervalWitness{std::move(iv), buckets[b], expected};
                return verdict;
            }
        }
    }
    verdict.is_net = true;
    return verdict;
}

StrictT strict_t(const PointMatrix& pm) {
    const uint64_t n = pm.n();
    if (!is_power_of_two(n)) {
        throw std::invalid_argument("net property undefined for this n (need n = 2^m)");
    }
    const int m = log2_exact(n);
    for (int t = 0; t <= m; ++t) {
        if (m - t > pm.precision()) continue;
        if (is_tmd_net(pm, t).is_net) {
            return StrictT{t, m, pm.d()};
        }
    }
    return StrictT{m, m, pm.d()};  // unreachable: t = m always passes
}

}  // namespace qmcnet
