#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qmcnet {

// One row of a Joe-Kuo style direction-number table. Dimension 1 is never
// stored: its generating matrix is the identity (van der Corput).
struct DirectionEntry {
    uint32_t dimension_index = 0;  // >= 2
    uint32_t degree_s = 0;         // degree of the primitive polynomial over GF(2)
    uint32_t poly_a = 0;           // interior polynomial coefficients, poly_a < 2^(degree_s-1)
    std::vector<uint32_t> initial_m;  // degree_s odd integers, initial_m[k] < 2^(k+1)
};

// Immutable table of direction-number rows for dimensions 2..max_dimension,
// contiguous and sorted. Safe for unrestricted concurrent reads.
class DirectionTable {
public:
    static constexpr int kBitPrecision = 32;

    DirectionTable() = default;  // dimension 1 only
    explicit DirectionTable(std::vector<DirectionEntry> entries);

    uint32_t max_dimension() const { return max_dimension_; }
    const std::vector<DirectionEntry>& entries() const { return entries_; }
    // dimension in [2, max_dimension]
    const DirectionEntry& entry(uint32_t dimension) const;

private:
    std::vector<DirectionEntry> entries_;
    uint32_t max_dimension_ = 1;
};

inline constexpr uint32_t kNoDimensionCap = 0xffffffffu;

// Parses "d s a m_1 ... m_s" rows (one optional non-digit header line),
// validating oddness, m-value bounds, arity and dimension contiguity.
// Rows with d > max_dimension are skipped.
DirectionTable parse_direction_file(std::istream& in, uint32_t max_dimension = kNoDimensionCap);
DirectionTable parse_direction_file(const std::string& text, uint32_t max_dimension = kNoDimensionCap);

// Canonical single-space row format; parse(serialize(t)) == t.
std::string serialize_direction_table(const DirectionTable& table);

// Columns v_1..v_bits as fixed-point fractions scaled by 2^bits, following
// the Joe-Kuo recurrence v_k = a_1 v_{k-1} ^ ... ^ a_{s-1} v_{k-s+1}
//                              ^ v_{k-s} ^ (v_{k-s} >> s).
// Requires 1 <= bits and degree_s <= bits <= 63.
std::vector<uint64_t> generating_matrix(const DirectionEntry& entry, int bits);

// Dimension 1: columns 2^(bits-1-k), i.e. the van der Corput matrix.
std::vector<uint64_t> identity_matrix(int bits);

// Embedded copy of the published Joe-Kuo table (new-joe-kuo-6).
uint32_t embedded_max_dimension();
DirectionTable default_table(uint32_t d);

namespace detail {
extern const char* const kJoeKuoTable;
}

}  // namespace qmcnet
