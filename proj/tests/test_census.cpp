#include <stdexcept>
#include <filesystem>

#include "doctest.h"
#include "kzd/census.hpp"

using namespace kzd;

TEST_CASE("census counts for small orders") {
    const long want[] = {0, 1, 2, 6, 22, 110, 792};
    for (int n = 4, i = 0; n <= 16; n += 2, ++i) CHECK(static_cast<long>(generate(n).size()) == want[i]);
}

TEST_CASE("generated graphs are cubic, connected, triangle-free and pairwise distinct") {
    auto gs = generate(14);
    for (size_t i = 0; i < gs.size(); ++i) {
        CHECK(gs[i].is_regular(3));
        CHECK(gs[i].is_connected());
        CHECK(gs[i].is_triangle_free());
        if (i) CHECK(certificate(gs[i - 1]) != certificate(gs[i]));
    }
}

TEST_CASE("augmentation agrees with brute force") {
    for (int n : {4, 6, 8}) {
        CHECK(generate_bruteforce(n, true).size() == generate(n).size());
        CHECK(generate_bruteforce(n, false).size() == generate_connected_cubic(n, false).size());
    }
    CHECK(generate_connected_cubic(8, false).size() == 5);
    CHECK(generate_connected_cubic(10, false).size() == 19);
}

TEST_CASE("cache round trip is byte-identical") {
    auto dir = std::filesystem::temp_directory_path() / "kzd-census-test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    auto cold = generate(12, dir.string());
    auto warm = generate(12, dir.string());
    CHECK(cold == warm);
    CHECK(cold == generate(12));
    write_graph6_file((dir / "x.g6").string(), cold);
    CHECK(read_graph6_file((dir / "x.g6").string()) == cold);
    std::filesystem::remove_all(dir);
}

TEST_CASE("ladder recognition") {
    for (int m = 3; m <= 10; ++m) {
        auto p = recognize_ladder(prism_graph(m));
        CHECK(p.kind == LadderKind::Prism);
        CHECK(p.m == m);
        auto q = recognize_ladder(moebius_graph(m));
        CHECK(q.kind == LadderKind::Moebius);
        CHECK(q.m == m);
    }
    CHECK(recognize_ladder(petersen_graph()).kind == LadderKind::Neither);
    CHECK(recognize_ladder(complete_bipartite(3, 3)).kind == LadderKind::Moebius);
}

TEST_CASE("pipeline conservation") {
    std::vector<NamedPattern> pats = {{"K2,3", complete_bipartite(2, 3)}, {"C4", cycle_graph(4)}};
    for (int n = 4; n <= 16; n += 2) {
        auto r = run_pipeline(n, generate(n), pats);
        long sum = r.prism_hits + r.moebius_hits + r.remains;
        for (long x : r.removed) sum += x;
        CHECK(sum == r.total);
        CHECK(r.removed_by.size() == static_cast<size_t>(r.total));
        CHECK(r.survivors.size() == static_cast<size_t>(r.remains));
    }
}

TEST_CASE("invalid orders are rejected") {
    CHECK_THROWS_AS(generate(7), std::invalid_argument);
    CHECK_THROWS_AS(generate(22), std::invalid_argument);
}
