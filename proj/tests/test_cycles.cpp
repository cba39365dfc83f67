#include <stdexcept>
#include <algorithm>
#include <array>
#include <set>

#include "doctest.h"
#include "kzd/cycles.hpp"

using namespace kzd;

namespace {

// Independent oracle: a labeled k-cycle is a proper 3-colouring of the 2k-cycle of ports
// [a1,b1,...,ak,bk]; the symmetry group is the dihedral group acting on the k vertices.
std::set<std::vector<int8_t>> port_colourings(int k) {
    std::set<std::vector<int8_t>> out;
    int m = 2 * k;
    std::vector<int8_t> t(static_cast<size_t>(m));
    long total = 1;
    for (int i = 0; i < m; ++i) total *= 3;
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (int i = 0; i < m; ++i, c /= 3) t[static_cast<size_t>(i)] = kLabels[c % 3];
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) ok = t[static_cast<size_t>(i)] != t[static_cast<size_t>((i + 1) % m)];
        if (ok) out.insert(t);
    }
    return out;
}

std::vector<int8_t> least_image(const std::vector<int8_t>& t) {
    size_t m = t.size();
    std::vector<int8_t> best = t;
    for (size_t r = 0; r < m; r += 2) {
        std::vector<int8_t> rot(m), rev(m);
        for (size_t i = 0; i < m; ++i) rot[i] = t[(i + r) % m];
        for (size_t i = 0; i < m; ++i) rev[i] = rot[m - 1 - i];
        best = std::min({best, rot, rev});
    }
    return best;
}

long dihedral_orbits(int k) {
    std::set<std::vector<int8_t>> reps;
    for (const auto& t : port_colourings(k)) reps.insert(least_image(t));
    return static_cast<long>(reps.size());
}

Word oracle_relation(const std::vector<int8_t>& t) {
    auto g = [](int8_t l) { return l == 0 ? Word() : Word::gen(l); };
    Word w;
    for (size_t i = 0; i < t.size(); i += 2) w = w * g(t[i]).inverse() * g(t[i + 1]);
    return w;
}

void set_cycle(const CycleConfig& cfg, PortLabeling& lab, const std::vector<int>& verts,
               const std::array<int8_t, 8>& tuple) {
    for (size_t i = 0; i < verts.size(); ++i) {
        int u = verts[i], v = verts[(i + 1) % verts.size()];
        int e = cfg.edge_index(u, v);
        REQUIRE(e >= 0);
        bool forward = cfg.edges()[static_cast<size_t>(e)].first == u;
        lab[static_cast<size_t>(2 * e + (forward ? 0 : 1))] = tuple[2 * i];
        lab[static_cast<size_t>(2 * e + (forward ? 1 : 0))] = tuple[2 * i + 1];
    }
}

PortLabeling orbit_min(const CycleConfig& cfg, const std::vector<std::vector<int>>& autos, const PortLabeling& lab) {
    PortLabeling best = lab;
    for (const auto& p : autos) best = std::min(best, act(cfg, p, lab));
    return best;
}

}  // namespace

TEST_CASE("single cycles: raw counts and orbit counts match the colouring oracle") {
    for (int k = 3; k <= 6; ++k) {
        auto cfg = CycleConfig::single_cycle(k);
        EnumerationOptions opt;
        CHECK(count_raw_labelings(cfg, opt) == static_cast<long>(port_colourings(k).size()));
        CHECK(static_cast<long>(enumerate_labelings(cfg, opt).size()) == dihedral_orbits(k));
    }
    CHECK(count_raw_labelings(CycleConfig::single_cycle(3), {}) == 66);
    CHECK(dihedral_orbits(3) == 13);
    CHECK(count_raw_labelings(CycleConfig::single_cycle(4), {}) == 258);
    CHECK(dihedral_orbits(4) == 36);
}

TEST_CASE("orbit sizes add up to the raw count") {
    for (int k = 3; k <= 5; ++k) {
        auto cfg = CycleConfig::single_cycle(k);
        long sum = 0;
        for (const auto& c : enumerate_labelings(cfg, LabelMode::ZeroDivisorF2)) sum += c.orbit_size;
        CHECK(sum == count_raw_labelings(cfg, {}));
    }
}

TEST_CASE("cycle relations agree with the oracle word") {
    auto cfg = CycleConfig::single_cycle(4);
    for (const auto& c : enumerate_labelings(cfg, LabelMode::ZeroDivisorF2)) {
        auto t = cycle_tuple(cfg, c.representative, 0);
        CHECK(cycle_relation(cfg, c.representative, 0).cyclic_canonical() == oracle_relation(t).cyclic_canonical());
        CHECK(c.relations.at(0) == oracle_relation(t).cyclic_canonical());
    }
}

TEST_CASE("triangle relations are the thirteen listed words") {
    std::set<Word> want;
    for (const char* s : {"h2^3", "h2^2 h3", "h2^2 h3^-1 h2", "h2 h3^2", "h2 h3 h2^-1 h3", "h2 h3^-1 h2^-1 h3",
                          "h2 h3^-2 h2", "h2 h3^-1 h2 h3", "(h2 h3^-1)^2 h2", "h3^3", "h3^2 h2^-1 h3",
                          "(h3 h2^-1)^2 h3", "(h2^-1 h3)^3"})
        want.insert(Word::parse(s).cyclic_canonical());
    std::set<Word> got;
    for (const auto& c : enumerate_labelings(CycleConfig::single_cycle(3), LabelMode::ZeroDivisorF2))
        got.insert(c.relations.at(0));
    CHECK(got == want);
}

TEST_CASE("square relations are the 36 listed rows") {
    std::set<Word> want;
    for (const auto& r : table1_relations()) want.insert(Word::parse(r).cyclic_canonical());
    CHECK(want.size() == 36);
    std::set<Word> got;
    for (const auto& c : enumerate_labelings(CycleConfig::single_cycle(4), LabelMode::ZeroDivisorF2))
        got.insert(c.relations.at(0));
    CHECK(got == want);
}

TEST_CASE("single-cycle elimination counts") {
    // Frozen after cross-checking the class totals against the colouring oracle above.
    const long elim[] = {13, 27, 29, 46};
    for (int k = 3; k <= 6; ++k) {
        auto r = analyze_configuration(CycleConfig::single_cycle(k), {});
        CHECK(r.total_classes == dihedral_orbits(k));
        CHECK(r.eliminated == elim[k - 3]);
        CHECK(static_cast<long>(r.surviving.size()) == r.total_classes - r.eliminated);
    }
}

TEST_CASE("general-field labelings relax the port condition") {
    auto cfg = CycleConfig::single_cycle(3);
    EnumerationOptions opt;
    opt.mode = LabelMode::GeneralField;
    CHECK(count_raw_labelings(cfg, opt) > count_raw_labelings(cfg, {}));
    CHECK(count_raw_labelings(cfg, opt) == 216);
}

TEST_CASE("two squares sharing an edge") {
    auto cfg = two_squares_one_edge();
    auto r = analyze_configuration(cfg, {});
    CHECK(r.total_classes == 693);
    std::set<Word> allowed;
    for (int row : {14, 22, 26}) allowed.insert(Word::parse(table1_relations()[static_cast<size_t>(row) - 1]).cyclic_canonical());
    std::set<PortLabeling> survivors;
    for (const auto& c : r.surviving) {
        for (const auto& w : c.relations) CHECK(allowed.count(w) == 1);
        survivors.insert(c.representative);
    }
    CHECK(survivors.size() == 3);

    auto autos = cycle_automorphisms(cfg);
    std::set<PortLabeling> from_seeds;
    for (const auto& [t, u] : shared_edge_seeds()) {
        PortLabeling lab(2 * cfg.edges().size(), -1);
        set_cycle(cfg, lab, {0, 1, 2, 3}, t);
        set_cycle(cfg, lab, {0, 1, 4, 5}, u);
        REQUIRE(labeling_valid(cfg, lab, LabelMode::ZeroDivisorF2));
        from_seeds.insert(orbit_min(cfg, autos, lab));
    }
    CHECK(from_seeds == survivors);
}

TEST_CASE("ladder closures are contradictory") {
    for (int m = 2; m <= 6; ++m)
        for (auto cl : {LadderClosure::Prism, LadderClosure::Moebius}) {
            auto trails = verify_ladder_exclusion(m, cl);
            CHECK(trails.size() == 12);
            for (const auto& t : trails) {
                CHECK(t.contradiction);
                CHECK(t.squares.size() == static_cast<size_t>(m));
            }
        }
    CHECK_THROWS(verify_ladder_exclusion(1, LadderClosure::Prism));
}

TEST_CASE("configuration validation") {
    CHECK_THROWS_AS(CycleConfig(4, {{0, 1}, {1, 2}, {2, 3}}, {{0, 1, 2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(CycleConfig(3, {{0, 1}, {1, 1}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(CycleConfig(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, {}), std::invalid_argument);
}

TEST_CASE("relation cache matches direct classification") {
    RelationCache cache;
    for (const auto& r : table1_relations()) {
        Word w = Word::parse(r);
        CHECK(cache.classify_word(w).eliminated() == classify(Presentation::from_words({w})).eliminated());
    }
}
