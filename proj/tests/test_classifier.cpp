#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "kzd/classifier.hpp"

using namespace kzd;

namespace {

Classification run(const char* rel) { return classify(Presentation::parse(rel)); }

}  // namespace

TEST_CASE("coset enumeration recovers known finite groups") {
    CHECK(coset_enumerate(Presentation::parse("h2^2, h3^3, (h2 h3)^2"), 1000).order == 6);
    CHECK(coset_enumerate(Presentation::parse("h2^2, h3^3, (h2 h3)^3"), 1000).order == 12);
    CHECK(coset_enumerate(Presentation::parse("h2^2, h3^3, (h2 h3)^4"), 1000).order == 24);
    CHECK(coset_enumerate(Presentation::parse("h2^2, h3^3, (h2 h3)^5"), 10000).order == 60);
    CHECK(coset_enumerate(Presentation::parse("h2^4, h3^4, h2 h3 h2^-1 h3"), 10000).order == 16);
    auto t = coset_enumerate(Presentation::parse("h2^3, h3^2, h2 h3 h2 h3"), 1000, true);
    REQUIRE(t.finite);
    CHECK(t.table.size() == 6);
}

TEST_CASE("coset enumeration gives up on infinite groups") {
    auto r = coset_enumerate(Presentation::parse("h2 h3 h2^-1 h3^-1"), 2000);
    CHECK_FALSE(r.finite);
    CHECK(r.peak_cosets >= 2000);
}

TEST_CASE("subgroup index") {
    Presentation s3 = Presentation::parse("h2^2, h3^3, (h2 h3)^2");
    CHECK(subgroup_cosets(s3, {Word::gen(2)}, 1000).order == 3);
    CHECK(subgroup_cosets(s3, {Word::gen(3)}, 1000).order == 2);
    CHECK(detect_cyclic_by_cosets(Presentation::parse("h3 h2^-2"), 1000).has_value());
    CHECK_FALSE(detect_cyclic_by_cosets(s3, 1000).has_value());
}

TEST_CASE("abelianization via Smith normal form") {
    CHECK(abelianization(Presentation::parse("h2^2 h3^3")).free_rank == 1);
    auto a = abelianization(Presentation::parse("h2^2, h3^3"));
    CHECK(a.free_rank == 0);
    CHECK(a.factors == std::vector<long>{1, 6});
    auto b = abelianization(Presentation::parse("h2^4, h3^6"));
    CHECK(b.factors == std::vector<long>{2, 12});
    CHECK(abelianization(Presentation::parse("h2 h3 h2^-1 h3^-1")).free_rank == 2);
}

TEST_CASE("individual routes") {
    NontrivialityOracle oracle;
    CHECK(oracle.contains(Word::parse("h3 h2^-1")));
    CHECK(oracle.contains(Word::parse("h2 h3 h2^-1")));
    CHECK_FALSE(oracle.contains(Word::parse("h2 h3")));

    auto tw = detect_torsion(Presentation::parse("h3^4"), oracle);
    REQUIRE(tw.verdict);
    CHECK(tw.verdict->verdict == Verdict::TorsionWitness);
    CHECK(tw.verdict->exponent == 4);

    auto rewritten = detect_torsion(Presentation::parse("(h2 h3)^3"), oracle);
    CHECK_FALSE(rewritten.verdict);
    CHECK(rewritten.changed);

    auto ab = detect_abelian_or_cyclic(Presentation::parse("h2^2 h3"));
    REQUIRE(ab);
    CHECK(ab->verdict == Verdict::AbelianOrCyclic);

    auto bs = detect_bs_quotient(Presentation::parse("h3 h2 h3^-1 h2^-2"));
    REQUIRE(bs);
    CHECK(bs->verdict == Verdict::BSQuotient);
    CHECK(std::abs(bs->m) == 1);
    CHECK(std::abs(bs->n) == 2);
}

TEST_CASE("square relations: 27 eliminated, 9 survive") {
    const auto& rels = table1_relations();
    REQUIRE(rels.size() == 36);
    std::vector<int> surv;
    for (size_t i = 0; i < rels.size(); ++i)
        if (!run(rels[i].c_str()).eliminated()) surv.push_back(static_cast<int>(i) + 1);
    CHECK(surv == std::vector<int>{5, 7, 14, 17, 21, 22, 25, 26, 29});
    CHECK(table1_survivor_rows() == surv);
}

TEST_CASE("verdicts are stable under conjugation and inversion of the relator") {
    for (const auto& r : table1_relations()) {
        Word w = Presentation::parse(r).relators()[0];
        Word g = Word::parse("h2 h3^-1");
        Word conj = g * w * g.inverse();
        CHECK(run(r.c_str()).eliminated() == classify(Presentation::from_words({conj})).eliminated());
        CHECK(run(r.c_str()).eliminated() == classify(Presentation::from_words({w.inverse()})).eliminated());
    }
}

TEST_CASE("x^2 = y^3 witnesses for the survivors") {
    for (int row : table1_survivor_rows()) {
        auto w = derive_x2_y3_witness(row);
        CHECK(w.row == row);
        CHECK(is_basis(w.x, w.y));
        Word rel = Presentation::parse(table1_relations()[static_cast<size_t>(row) - 1]).relators()[0];
        CHECK(certify_consequence(w.x.pow(2) * w.y.pow(-3), rel, 3, 4) > 0);
    }
    CHECK_THROWS(derive_x2_y3_witness(1));
}

TEST_CASE("presentation parsing errors") {
    CHECK_THROWS_AS(Presentation::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Presentation::parse("h2 h2^-1"), std::invalid_argument);
    CHECK(Presentation::parse("h2^2; h3^3").relators().size() == 2);
}
