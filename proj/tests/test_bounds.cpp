#include <algorithm>
#include <stdexcept>
#include "doctest.h"
#include "kzd/bounds.hpp"

using namespace kzd;

TEST_CASE("product-set bounds") {
    CHECK(product_bound(3, 4, Regime::Kemperman).bound == 6);
    CHECK(product_bound(3, 4, Regime::Hamidoune).bound == 8);
    CHECK_THROWS_AS(product_bound(3, 3, Regime::Hamidoune), std::invalid_argument);
    HamidouneContext abelian;
    abelian.nonabelian = false;
    CHECK_THROWS_AS(product_bound(3, 5, Regime::Hamidoune, abelian), std::invalid_argument);
}

TEST_CASE("block profiles partition the cells") {
    for (const auto& p : block_profiles(12, 5, 2)) {
        int s = 0;
        for (int x : p) s += x;
        CHECK(s == 12);
        CHECK(p.size() == 5);
        CHECK(std::is_sorted(p.rbegin(), p.rend()));
    }
    CHECK(block_profiles(6, 3, 2).size() == 1);
    CHECK(block_profiles(5, 3, 2).empty());
}

TEST_CASE("all trails are infeasible with every oracle") {
    auto rep = run_bounds();
    CHECK(rep.zero_divisor.size() == 7);
    CHECK(rep.unit.size() == 6);
    CHECK(rep.all_infeasible());
    for (const auto& t : rep.zero_divisor) CHECK(t.infeasible());
    for (const auto& t : rep.unit) CHECK(t.infeasible());
}

TEST_CASE("disabling an oracle surfaces the dependency") {
    OracleSet o;
    o.disabled.insert("census-bound");
    auto zd = zero_divisor_infeasible(8, o);
    CHECK_FALSE(zd.infeasible());
    bool blocked = false;
    for (const auto& s : zd.steps) blocked = blocked || s.blocked;
    CHECK(blocked);
    CHECK(zero_divisor_infeasible(7, o).infeasible());

    OracleSet literal;
    literal.odd_unit_reading = OracleSet::OddUnitReading::Literal;
    CHECK_FALSE(unit_infeasible(3, literal).infeasible());
    CHECK_FALSE(unit_infeasible(7, literal).infeasible());
    CHECK_FALSE(zero_divisor_infeasible(9, literal).infeasible());
    CHECK(literal.odd_unit_covers(13));
    CHECK_FALSE(literal.odd_unit_covers(9));
}

TEST_CASE("order-8 unit search and its negative control") {
    auto seed = unit_order8_seed();
    CHECK(seed.order() == 8);
    CHECK(seed.triangle_count() == 1);
    CHECK(search_unit_order8(true).completions.empty());
    auto relaxed = search_unit_order8(false);
    CHECK_FALSE(relaxed.completions.empty());
    for (const auto& g : relaxed.completions) CHECK(g.triangle_count() == 1);
}

TEST_CASE("trail serialization") {
    auto t = unit_infeasible(5);
    CHECK(t.text().find("infeasible") != std::string::npos);
    CHECK(t.json().find("\"n\"") != std::string::npos);
    CHECK_THROWS(zero_divisor_infeasible(2));
    CHECK_THROWS(unit_infeasible(9));
}
