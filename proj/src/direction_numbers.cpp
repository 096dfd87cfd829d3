#include "qmcnet/direction_numbers.hpp"

#include <cctype>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace qmcnet {

namespace {

void validate_entry(const DirectionEntry& e) {
    if (e.dimension_index < 2) {
        throw std::invalid_argument("direction entry: dimension index must be >= 2");
    }
    if (e.degree_s == 0) {
        throw std::invalid_argument("direction entry: degree must be positive");
    }
    if (e.degree_s >= 2 && e.poly_a >= (uint32_t(1) << (e.degree_s - 1))) {
        throw std::invalid_argument("direction entry: polynomial coefficients out of range");
    }
    if (e.degree_s == 1 && e.poly_a != 0) {
        throw std::invalid_argument("direction entry: polynomial coefficients out of range");
    }
    if (e.initial_m.size() != e.degree_s) {
        throw std::invalid_argument("direction entry: wrong number of m-values");
    }
    for (size_t k = 0; k < e.initial_m.size(); ++k) {
        uint32_t m = e.initial_m[k];
        if (m % 2 == 0) {
            throw std::invalid_argument("direction entry: even m-value");
        }
        if (m >= (uint64_t(1) << (k + 1))) {
            throw std::invalid_argument("direction entry: m-value out of range");
        }
    }
}

}  // namespace

DirectionTable::DirectionTable(std::vector<DirectionEntry> entries)
    : entries_(std::move(entries)) {
    uint32_t expected = 2;
    for (const auto& e : entries_) {
        validate_entry(e);
        if (e.dimension_index != expected) {
            throw std::invalid_argument("direction table: dimensions must be contiguous from 2");
        }
        ++expected;
    }
    max_dimension_ = entries_.empty() ? 1 : entries_.back().dimension_index;
}

const DirectionEntry& DirectionTable::entry(uint32_t dimension) const {
    if (dimension < 2 || dimension > max_dimension_) {
        throw std::out_of_range("direction table: dimension out of range");
    }
    return entries_[dimension - 2];
}

DirectionTable parse_direction_file(std::istream& in, uint32_t max_dimension) {
    std::vector<DirectionEntry> entries;
    std::string line;
    bool first = true;
    size_t lineno = 0;
    uint32_t expected = 2;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream row(line);
        std::string tok;
        if (!(row >> tok)) continue;  // blank line
        if (first && !std::isdigit(static_cast<unsigned char>(tok[0]))) {
            first = false;
            continue;  // header line
        }
        first = false;

        auto bad = [&](const std::string& what) {
            throw std::invalid_argument("direction file line " + std::to_string(lineno) +
                                        ": " + what);
        };
        auto to_u32 = [&](const std::string& s) -> uint32_t {
            try {
                size_t pos = 0;
                unsigned long v = std::stoul(s, &pos);
                if (pos != s.size() || v > 0xffffffffUL) bad("malformed integer '" + s + "'");
                return static_cast<uint32_t>(v);
            } catch (const std::invalid_argument&) {
                bad("malformed integer '" + s + "'");
            } catch (const std::out_of_range&) {
                bad("malformed integer '" + s + "'");
            }
            return 0;
        };

        DirectionEntry e;
        e.dimension_index = to_u32(tok);
        std::string s_tok, a_tok;
        if (!(row >> s_tok >> a_tok)) bad("malformed row");
        e.degree_s = to_u32(s_tok);
        e.poly_a = to_u32(a_tok);
        while (row >> tok) e.initial_m.push_back(to_u32(tok));

        if (e.dimension_index != expected) bad("non-monotone or non-contiguous dimension index");
        if (e.initial_m.size() != e.degree_s) bad("wrong count of m-values");
        try {
            validate_entry(e);
        } catch (const std::invalid_argument& ex) {
            bad(ex.what());
        }
        ++expected;
        if (e.dimension_index > max_dimension) continue;  // past the cap
        entries.push_back(std::move(e));
    }
    return DirectionTable(std::move(entries));
}

DirectionTable parse_direction_file(const std::string& text, uint32_t max_dimension) {
    std::istringstream in(text);
    return parse_direction_file(in, max_dimension);
}

std::string serialize_direction_table(const DirectionTable& table) {
    std::ostringstream out;
    out << "d s a m_i\n";
    for (const auto& e : table.entries()) {
        out << e.dimension_index << ' ' << e.degree_s << ' ' << e.poly_a;
        for (uint32_t m : e.initial_m) out << ' ' << m;
        out << '\n';
    }
    return out.str();
}

std::vector<uint64_t> generating_matrix(const DirectionEntry& entry, int bits) {
    validate_entry(entry);
    if (bits < 1 || bits > 63) {
        throw std::invalid_argument("generating_matrix: bits must be in [1, 63]");
    }
    if (static_cast<uint32_t>(bits) < entry.degree_s) {
        throw std::invalid_argument("generating_matrix: bits < polynomial degree");
    }
    const uint32_t s = entry.degree_s;
    std::vector<uint64_t> v(bits);
    for (uint32_t k = 0; k < s && static_cast<int>(k) < bits; ++k) {
        v[k] = uint64_t(entry.initial_m[k]) << (bits - k - 1);
    }
    for (int k = static_cast<int>(s); k < bits; ++k) {
        uint64_t vk = v[k - s] ^ (v[k - s] >> s);
        for (uint32_t j = 1; j < s; ++j) {
            if ((entry.poly_a >> (s - 1 - j)) & 1u) vk ^= v[k - j];
        }
        v[k] = vk;
    }
    return v;
}

std::vector<uint64_t> identity_matrix(int bits) {
    if (bits < 1 || bits > 63) {
        throw std::invalid_argument("identity_matrix: bits must be in [1, 63]");
    }
    std::vector<uint64_t> v(bits);
    for (int k = 0; k < bits; ++k) v[k] = uint64_t(1) << (bits - 1 - k);
    return v;
}

namespace {
const DirectionTable& embedded_table() {
    static const DirectionTable table = parse_direction_file(std::string(detail::kJoeKuoTable));
    return table;
}
}  // namespace

uint32_t embedded_max_dimension() { return embedded_table().max_dimension(); }

DirectionTable default_table(uint32_t d) {
    if (d < 1) throw std::invalid_argument("default_table: dimension must be positive");
    if (d > embedded_max_dimension()) {
        throw std::out_of_range("default_table: dimension exceeds embedded maximum (" +
                                std::to_string(embedded_max_dimension()) + ")");
    }
    const auto& all = embedded_table().entries();
    std::vector<DirectionEntry> keep;
    for (const auto& e : all) {
        if (e.dimension_index <= d) keep.push_back(e);
    }
    return DirectionTable(std::move(keep));
}

}  // namespace qmcnet
