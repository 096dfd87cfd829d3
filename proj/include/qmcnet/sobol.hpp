#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "qmcnet/direction_numbers.hpp"

namespace qmcnet {

enum class PointOrder { natural, gray };

// A point of [0,1)^d in exact base-2 fixed point: coords[j] is the
// numerator over 2^precision.
struct DigitalPoint {
    std::vector<uint64_t> coords;
    int precision = 32;

    double value(size_t j) const { return std::ldexp(double(coords[j]), -precision); }
    size_t dimension() const { return coords.size(); }
};

// n points sharing one dimension and precision, stored row-major with the
// index and ordering they were generated from.
class PointMatrix {
public:
    PointMatrix(uint32_t d, int precision, uint64_t start_index, PointOrder order,
                std::vector<uint64_t> data);

    uint64_t n() const { return data_.size() / d_; }
    uint32_t d() const { return d_; }
    int precision() const { return precision_; }
    uint64_t start_index() const { return start_index_; }
    PointOrder order() const { return order_; }

    // numerator of coordinate j (0-based) of point i
    uint64_t coord(uint64_t i, uint32_t j) const { return data_[i * d_ + j]; }
    double coord_value(uint64_t i, uint32_t j) const {
        return std::ldexp(double(coord(i, j)), -precision_);
    }
    std::span<const uint64_t> row(uint64_t i) const {
        return {data_.data() + i * d_, d_};
    }
    DigitalPoint point_at(uint64_t i) const;

    PointMatrix with_data(std::vector<uint64_t> data, int precision) const;

private:
    uint32_t d_;
    int precision_;
    uint64_t start_index_;
    PointOrder order_;
    std::vector<uint64_t> data_;
};

struct SequenceConfig {
    uint32_t d = 1;
    DirectionTable table;  // dimension 1 never consults it
    PointOrder order = PointOrder::natural;
    int precision = DirectionTable::kBitPrecision;
};

// Base-2 radical inverse of i, scaled by 2^precision.
uint64_t van_der_corput_bits(uint64_t i, int precision = DirectionTable::kBitPrecision);
double van_der_corput(uint64_t i);

// Generates unscrambled digital-sequence points. Index 0 is the all-zeros
// point. Pure function of (index, config); concurrent use is safe.
class SobolEngine {
public:
    explicit SobolEngine(SequenceConfig cfg);

    const SequenceConfig& config() const { return cfg_; }
    uint32_t dimension() const { return cfg_.d; }

    // numerator of coordinate `dim` (1-based) of point i
    uint64_t coordinate_bits(uint64_t i, uint32_t dim) const;
    DigitalPoint point(uint64_t i) const;
    PointMatrix block(uint64_t start, uint64_t count) const;

private:
    SequenceConfig cfg_;
    std::vector<std::vector<uint64_t>> columns_;  // per dimension, cfg_.precision columns

    uint64_t index_for(uint64_t i) const;
};

}  // namespace qmcnet
