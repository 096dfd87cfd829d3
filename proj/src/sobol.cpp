#include "qmcnet/sobol.hpp"

#include <stdexcept>

#include "qmcnet/util.hpp"

namespace qmcnet {

PointMatrix::PointMatrix(uint32_t d, int precision, uint64_t start_index, PointOrder order,
                         std::vector<uint64_t> data)
    : d_(d), precision_(precision), start_index_(start_index), order_(order),
      data_(std::move(data)) {
    if (d_ == 0) throw std::invalid_argument("point matrix: dimension must be positive");
    if (data_.empty() || data_.size() % d_ != 0) {
        throw std::invalid_argument("point matrix: need at least one full point");
    }
    const uint64_t limit = uint64_t(1) << precision_;
    for (uint64_t v : data_) {
        if (v >= limit) throw std::invalid_argument("point matrix: coordinate out of [0,1)");
    }
}

DigitalPoint PointMatrix::point_at(uint64_t i) const {
    auto r = row(i);
    return DigitalPoint{{r.begin(), r.end()}, precision_};
}

PointMatrix PointMatrix::with_data(std::vector<uint64_t> data, int precision) const {
    return PointMatrix(d_, precision, start_index_, order_, std::move(data));
}

uint64_t van_der_corput_bits(uint64_t i, int precision) {
    if (precision < 1 || precision > 63) {
        throw std::invalid_argument("van_der_corput: precision must be in [1, 63]");
    }
    if (i >> precision) throw std::out_of_range("van_der_corput: index overflow");
    uint64_t x = 0;
    for (int k = 0; k < precision; ++k) {
        x = (x << 1) | (i & 1);
        i >>= 1;
    }
    return x;
}

double van_der_corput(uint64_t i) {
    return std::ldexp(double(van_der_corput_bits(i)), -DirectionTable::kBitPrecision);
}

SobolEngine::SobolEngine(SequenceConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.d == 0) throw std::invalid_argument("sobol engine: dimension must be positive");
    if (cfg_.precision < 1 || cfg_.precision > 63) {
        throw std::invalid_argument("sobol engine: precision must be in [1, 63]");
    }
    if (cfg_.d > 1 && cfg_.d > cfg_.table.max_dimension()) {
        throw std::out_of_range("sobol engine: dimension exceeds direction table");
    }
    columns_.reserve(cfg_.d);
    for (uint32_t dim = 1; dim <= cfg_.d; ++dim) {
        std::vector<uint64_t> cols = dim == 1
            ? identity_matrix(cfg_.precision)
            : generating_matrix(cfg_.table.entry(dim), cfg_.precision);
        columns_.push_back(std::move(cols));
    }
}

uint64_t SobolEngine::index_for(uint64_t i) const {
    if (cfg_.precision < 64 && (i >> cfg_.precision)) {
        throw std::out_of_range("sobol engine: index overflow for this precision");
    }
    return cfg_.order == PointOrder::gray ? gray_code(i) : i;
}

uint64_t SobolEngine::coordinate_bits(uint64_t i, uint32_t dim) const {
    if (dim < 1 || dim > cfg_.d) throw std::out_of_range("sobol engine: dimension out of range");
    uint64_t idx = index_for(i);
    const auto& cols = columns_[dim - 1];
    uint64_t x = 0;
    for (int k = 0; idx; ++k, idx >>= 1) {
        if (idx & 1) x ^= cols[k];
    }
    return x;
}

DigitalPoint SobolEngine::point(uint64_t i) const {
    DigitalPoint p;
    p.precision = cfg_.precision;
    p.coords.resize(cfg_.d);
    uint64_t idx = index_for(i);
    for (uint32_t j = 0; j < cfg_.d; ++j) {
        uint64_t x = 0;
        uint64_t bits = idx;
        for (int k = 0; bits; ++k, bits >>= 1) {
            if (bits & 1) x ^= columns_[j][k];
        }
        p.coords[j] = x;
    }
    return p;
}

PointMatrix SobolEngine::block(uint64_t start, uint64_t count) const {
    if (count == 0) throw std::invalid_argument("sobol engine: block needs at least one point");
    if (cfg_.precision < 64) {
        uint64_t limit = uint64_t(1) << cfg_.precision;
        if (start > limit - count) throw std::out_of_range("sobol engine: block overflows index range");
    }
    std::vector<uint64_t> data(count * cfg_.d);
    for (uint64_t i = 0; i < count; ++i) {
        uint64_t idx = index_for(start + i);
        for (uint32_t j = 0; j < cfg_.d; ++j) {
            uint64_t x = 0;
            uint64_t bits = idx;
            for (int k = 0; bits; ++k, bits >>= 1) {
                if (bits & 1) x ^= columns_[j][k];
            }
            data[i * cfg_.d + j] = x;
        }
    }
    return PointMatrix(cfg_.d, cfg_.precision, start, cfg_.order, std::move(data));
}

}  // namespace qmcnet
