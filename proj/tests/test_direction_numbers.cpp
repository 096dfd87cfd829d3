#include <doctest.h>

#include <stdexcept>

#include <sstream>

#include "qmcnet/direction_numbers.hpp"
#include "qmcnet/sobol.hpp"

using namespace qmcnet;

TEST_CASE("parse accepts the published row format") {
    DirectionTable t = parse_direction_file("d s a m_i\n2 1 0 1\n3 2 1 1 3\n");
    REQUIRE(t.max_dimension() == 3);
    const DirectionEntry& e2 = t.entry(2);
    CHECK(e2.dimension_index == 2);
    CHECK(e2.degree_s == 1);
    CHECK(e2.poly_a == 0);
    CHECK(e2.initial_m == std::vector<uint32_t>{1});
    const DirectionEntry& e3 = t.entry(3);
    CHECK(e3.degree_s == 2);
    CHECK(e3.poly_a == 1);
    CHECK(e3.initial_m == std::vector<uint32_t>{1, 3});
}

TEST_CASE("parse without header and with a dimension cap") {
    DirectionTable t = parse_direction_file("2 1 0 1\n3 2 1 1 3\n4 3 1 1 3 1\n", 3);
    CHECK(t.max_dimension() == 3);
}

TEST_CASE("parse rejects malformed rows") {
    // arity mismatch: s=3 but only 2 m-values
    CHECK_THROWS_AS(parse_direction_file("4 3 1 1 3\n"), std::invalid_argument);
    // even m-value
    CHECK_THROWS_AS(parse_direction_file("2 1 0 2\n"), std::invalid_argument);
    // m-value >= 2^{k+1}
    CHECK_THROWS_AS(parse_direction_file("3 2 1 1 5\n"), std::invalid_argument);
    // non-monotone dimension index
    CHECK_THROWS_AS(parse_direction_file("2 1 0 1\n4 3 1 1 3 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_direction_file("3 2 1 1 3\n"), std::invalid_argument);
    // polynomial coefficients out of range
    CHECK_THROWS_AS(parse_direction_file("2 1 1 1\n"), std::invalid_argument);
    // garbage token
    CHECK_THROWS_AS(parse_direction_file("2 1 x 1\n"), std::invalid_argument);
}

TEST_CASE("serialize round-trips the embedded table byte for byte") {
    DirectionTable t = parse_direction_file(std::string(detail::kJoeKuoTable));
    CHECK(serialize_direction_table(t) == detail::kJoeKuoTable);
}

TEST_CASE("generating matrix follows the published recurrence") {
    // dimension-2 row "2 1 0 1": m = 1, 3, 5, 15, ... so v = 1/2, 3/4, 5/8, 15/16
    DirectionEntry e2{2, 1, 0, {1}};
    CHECK(generating_matrix(e2, 4) == std::vector<uint64_t>{8, 12, 10, 15});
    // dimension-3 row "3 2 1 1 3": m_3 = 2*3 ^ 4*1 ^ 1 = 3
    DirectionEntry e3{3, 2, 1, {1, 3}};
    CHECK(generating_matrix(e3, 3) == std::vector<uint64_t>{4, 6, 3});

    SUBCASE("columns start at shifted m-values") {
        auto v = generating_matrix(e3, 10);
        CHECK(v[0] == uint64_t(1) << 9);
        CHECK(v[1] == uint64_t(3) << 8);
    }
    SUBCASE("bits below the degree are rejected") {
        CHECK_THROWS_AS(generating_matrix(e3, 1), std::invalid_argument);
        CHECK_THROWS_AS(generating_matrix(e3, 0), std::invalid_argument);
    }
}

TEST_CASE("default table matches parsing the embedded data") {
    CHECK(default_table(1).entries().empty());
    DirectionTable t2 = default_table(2);
    REQUIRE(t2.max_dimension() == 2);
    CHECK(t2.entry(2).initial_m == std::vector<uint32_t>{1});
    CHECK(t2.entry(2).poly_a == 0);

    CHECK(embedded_max_dimension() >= 64);
    CHECK_THROWS_AS(default_table(1000000), std::out_of_range);

    DirectionTable full = default_table(embedded_max_dimension());
    DirectionTable reparsed = parse_direction_file(std::string(detail::kJoeKuoTable));
    REQUIRE(full.entries().size() == reparsed.entries().size());
    for (size_t i = 0; i < full.entries().size(); ++i) {
        CHECK(full.entries()[i].initial_m == reparsed.entries()[i].initial_m);
        CHECK(full.entries()[i].poly_a == reparsed.entries()[i].poly_a);
    }
}

namespace {
// GF(2) rank of the top `rows` rows of the first `rows` columns.
int gf2_rank_top_rows(const std::vector<uint64_t>& cols, int bits, int rows) {
    std::vector<uint64_t> basis;
    int rank = 0;
    for (int c = 0; c < rows; ++c) {
        uint64_t v = cols[c] >> (bits - rows);
        for (uint64_t b : basis) {
            uint64_t reduced = v ^ b;
            if (reduced < v) v = reduced;
        }
        if (v) {
            basis.push_back(v);
            ++rank;
        }
    }
    return rank;
}
}  // namespace

TEST_CASE("leading columns are linearly independent over GF(2)") {
    const int bits = DirectionTable::kBitPrecision;
    DirectionTable table = default_table(64);
    for (uint32_t dim = 2; dim <= 64; ++dim) {
        const DirectionEntry& e = table.entry(dim);
        auto cols = generating_matrix(e, bits);
        int s = static_cast<int>(e.degree_s);
        CHECK(gf2_rank_top_rows(cols, bits, s) == s);
        for (auto v : cols) CHECK(v != 0);
    }
}

TEST_CASE("dimension 1 is the van der Corput sequence") {
    CHECK(identity_matrix(4) == std::vector<uint64_t>{8, 4, 2, 1});

    SequenceConfig cfg;
    cfg.d = 1;
    SobolEngine engine(cfg);
    for (uint64_t i = 0; i < 1024; ++i) {
        CHECK(engine.coordinate_bits(i, 1) == van_der_corput_bits(i));
    }
}
