// Prints one PASS/FAIL line per acceptance criterion.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kzd/algebra.hpp"
#include "kzd/bounds.hpp"
#include "kzd/catalog.hpp"
#include "kzd/census.hpp"
#include "kzd/classifier.hpp"
#include "kzd/cycles.hpp"
#include "kzd/reports.hpp"

using namespace kzd;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
};

struct Options {
    bool extended = false;
    std::string cache_dir;
};

Word row_word(int row) { return Word::parse(table1_relations()[static_cast<size_t>(row) - 1]); }

// ---- criterion 1
Outcome triangle(const Options&) {
    Outcome o;
    auto r = analyze_configuration(CycleConfig::single_cycle(3), {});
    o.require(r.total_classes == 13, "classes = " + std::to_string(r.total_classes) + ", want 13");
    std::set<Word> want, got;
    for (const char* s : {"h2^3", "h2^2 h3", "h2^2 h3^-1 h2", "h2 h3^2", "h2 h3 h2^-1 h3", "h2 h3^-1 h2^-1 h3",
                          "h2 h3^-2 h2", "h2 h3^-1 h2 h3", "(h2 h3^-1)^2 h2", "h3^3", "h3^2 h2^-1 h3",
                          "(h3 h2^-1)^2 h3", "(h2^-1 h3)^3"})
        want.insert(Word::parse(s).cyclic_canonical());
    for (const auto& c : enumerate_labelings(CycleConfig::single_cycle(3), LabelMode::ZeroDivisorF2))
        got.insert(c.relations.at(0));
    o.require(got == want, "relation set differs from the 13 listed words");
    o.require(r.eliminated == 13, "eliminated = " + std::to_string(r.eliminated) + ", want 13");
    return o;
}

// ---- criterion 2
Outcome square(const Options&) {
    Outcome o;
    auto cls = enumerate_labelings(CycleConfig::single_cycle(4), LabelMode::ZeroDivisorF2);
    o.require(cls.size() == 36, "classes = " + std::to_string(cls.size()) + ", want 36");
    std::set<Word> got, want;
    for (const auto& c : cls) got.insert(c.relations.at(0));
    for (int row = 1; row <= 36; ++row) want.insert(row_word(row).cyclic_canonical());
    o.require(got == want, "relations differ from the 36 table rows");
    std::vector<int> surv;
    for (int row = 1; row <= 36; ++row)
        if (!classify(Presentation::from_words({row_word(row)})).eliminated()) surv.push_back(row);
    o.require(surv == std::vector<int>{5, 7, 14, 17, 21, 22, 25, 26, 29}, "survivor set differs");
    return o;
}

// ---- criterion 3
Outcome square_pairs(const Options&) {
    Outcome o;
    const auto& rows = table1_survivor_rows();
    int finite = 0;
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = i + 1; j < rows.size(); ++j) {
            auto r = coset_enumerate(Presentation::from_words({row_word(rows[i]), row_word(rows[j])}), 100000);
            if (r.finite) ++finite;
            else o.require(false, "pair " + std::to_string(rows[i]) + "," + std::to_string(rows[j]) + " inconclusive");
        }
    o.require(finite == 36, std::to_string(finite) + "/36 finite");
    return o;
}

void set_cycle(const CycleConfig& cfg, PortLabeling& lab, const std::vector<int>& verts,
               const std::array<int8_t, 8>& tuple) {
    for (size_t i = 0; i < verts.size(); ++i) {
        int u = verts[i], v = verts[(i + 1) % verts.size()];
        int e = cfg.edge_index(u, v);
        bool forward = cfg.edges()[static_cast<size_t>(e)].first == u;
        lab[static_cast<size_t>(2 * e + (forward ? 0 : 1))] = tuple[2 * i];
        lab[static_cast<size_t>(2 * e + (forward ? 1 : 0))] = tuple[2 * i + 1];
    }
}

// ---- criterion 4
Outcome shared_edge(const Options&) {
    Outcome o;
    auto cfg = two_squares_one_edge();
    auto r = analyze_configuration(cfg, {});
    std::set<Word> allowed;
    for (int row : {14, 22, 26}) allowed.insert(row_word(row).cyclic_canonical());
    std::set<PortLabeling> survivors;
    for (const auto& c : r.surviving) {
        for (const auto& w : c.relations) o.require(allowed.count(w) == 1, "surviving relation " + w.str());
        survivors.insert(c.representative);
    }
    auto autos = cycle_automorphisms(cfg);
    std::set<PortLabeling> seeds;
    for (const auto& [t, u] : shared_edge_seeds()) {
        PortLabeling lab(2 * cfg.edges().size(), -1);
        set_cycle(cfg, lab, {0, 1, 2, 3}, t);
        set_cycle(cfg, lab, {0, 1, 4, 5}, u);
        o.require(labeling_valid(cfg, lab, LabelMode::ZeroDivisorF2), "seed is not a valid labeling");
        PortLabeling best = lab;
        for (const auto& p : autos) best = std::min(best, act(cfg, p, lab));
        seeds.insert(best);
    }
    o.require(shared_edge_seeds().size() == 6, "seed count");
    o.require(seeds == survivors, "surviving classes are not exactly the orbits of the six seeds");
    o.notes.push_back(std::to_string(r.total_classes) + " classes, " + std::to_string(r.surviving.size()) +
                      " surviving");
    return o;
}

// ---- criterion 5
Outcome ladders(const Options&) {
    Outcome o;
    int total = 0, ok = 0;
    for (int m = 2; m <= 10; ++m)
        for (auto cl : {LadderClosure::Prism, LadderClosure::Moebius})
            for (const auto& t : verify_ladder_exclusion(m, cl)) {
                ++total;
                ok += t.contradiction;
            }
    o.require(total == ok, std::to_string(ok) + "/" + std::to_string(total) + " trails contradictory");
    return o;
}

// ---- criterion 6
// Non-provisional entries only, checked one by one so the wall-clock budget can cut the run short.
Outcome configuration_counts(const Options&) {
    Outcome o;
    auto cat = Catalog::load(Catalog::default_path());
    auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };
    std::vector<EntryCheck> checks;
    std::vector<std::string> skipped;
    for (const auto& e : cat.entries()) {
        if (e.provisional) continue;
        if (elapsed() > 600) {
            skipped.push_back(e.name);
            continue;
        }
        checks.push_back(check_entry(e, CatalogCheckOptions{}));
    }
    std::map<std::string, const EntryCheck*> by_name;
    for (const auto& c : checks) by_name[c.name] = &c;
    struct Want {
        const char* name;
        long total, eliminated, surviving;
    };
    for (const Want& w : {Want{"C4--C5", 121, 111, 10}, Want{"C4-C5(-C4-)", 4, 4, 0},
                          Want{"C5--C5(--C5)", 192, 188, 4}, Want{"C4-C6(-C6--)(-C4-)", 0, 0, 0}}) {
        auto it = by_name.find(w.name);
        if (it == by_name.end()) {
            o.require(false, std::string(w.name) + " missing");
            continue;
        }
        const auto& c = *it->second;
        if (!c.counted) {
            o.require(false, std::string(w.name) + " not counted");
            continue;
        }
        long s = static_cast<long>(c.report.surviving.size());
        bool match = c.report.total_classes == w.total && (w.total == 0 || (c.report.eliminated == w.eliminated &&
                                                                              s == w.surviving));
        o.require(match, std::string(w.name) + ": " + std::to_string(c.report.total_classes) + "/" +
                             std::to_string(c.report.eliminated) + "/" + std::to_string(s) + ", want " +
                             std::to_string(w.total) + "/" + std::to_string(w.eliminated) + "/" +
                             std::to_string(w.surviving));
    }
    int fails = 0;
    for (const auto& c : checks)
        if (!c.pass()) {
            ++fails;
            o.notes.push_back(c.name + (c.budget_exceeded ? ": labeling budget exceeded" : ": counts differ"));
        }
    o.require(fails == 0, std::to_string(fails) + "/" + std::to_string(checks.size()) +
                              " non-provisional entries fail");
    for (const auto& n : skipped) o.require(false, n + ": not reached within the time budget");
    return o;
}

// ---- criteria 7 and 8
Outcome census_totals(const Options& opt) {
    Outcome o;
    const long want[] = {0, 1, 2, 6, 22, 110, 792, 7805, 97546};
    int top = opt.extended ? 20 : 16;
    for (int n = 4, i = 0; n <= top; n += 2, ++i) {
        long got = static_cast<long>(generate(n, opt.cache_dir).size());
        o.require(got == want[i], "n=" + std::to_string(n) + ": " + std::to_string(got));
    }
    return o;
}

Outcome pipeline(const Options& opt) {
    Outcome o;
    auto cat = Catalog::load(Catalog::default_path());
    auto expected = Table3Expected::load(Table3Expected::default_path());
    RunConfig cfg;
    cfg.cache_dir = opt.cache_dir;
    std::vector<int> ns;
    for (int n = 4; n <= (opt.extended ? 20 : 16); n += 2) ns.push_back(n);
    auto rep = run_census(ns, cat, &expected, cfg);
    for (const auto& c : rep.columns) {
        for (const auto& m : c.mismatches) o.require(false, "n=" + std::to_string(c.result.n) + " " + m);
        long sum = c.result.prism_hits + c.result.moebius_hits + c.result.remains;
        for (long x : c.result.removed) sum += x;
        o.require(sum == c.result.total, "conservation fails at n=" + std::to_string(c.result.n));
    }
    if (o.notes.size() > 6) {
        size_t extra = o.notes.size() - 6;
        o.notes.resize(6);
        o.notes.push_back("... " + std::to_string(extra) + " more");
    }
    return o;
}

// ---- criterion 9
std::vector<int> multiplicities(const SupportGraph& g) {
    std::map<std::pair<int, int>, int> m;
    for (const auto& e : g.edges) ++m[{std::min(e.g, e.g2), std::max(e.g, e.g2)}];
    std::vector<int> out;
    for (auto& kv : m) out.push_back(kv.second);
    std::sort(out.begin(), out.end());
    return out;
}

Outcome worked_examples(const Options&) {
    Outcome o;
    struct Example {
        const char* label;
        int order, p;
        const char *a, *b;
        GraphKind kind;
        size_t vertices;
        std::vector<int> mult;
    };
    std::vector<int> fig5(12, 4);
    fig5.insert(fig5.end(), 3, 6);
    std::vector<Example> ex = {
        {"example 1", 7, 2, "1+x^2+x^3+x^4", "1+x+x^5", GraphKind::ZeroDivisor, 3, {2, 2, 2}},
        {"example 2", 7, 2, "1+x+x^5", "1+x^2+x^3+x^4", GraphKind::ZeroDivisor, 4, {1, 1, 1, 1, 1, 1}},
        {"example 3", 3, 3, "-1+x-x^2", "1+x", GraphKind::Unit, 2, {3}},
        {"example 4", 3, 3, "1+x", "-1+x-x^2", GraphKind::Unit, 3, {1, 1, 1}},
        {"example 5 U(a,b)", 8, 3, "-1-x+x^3+2*x^4+x^5-x^7", "-1+x-x^3+2*x^4-x^5+x^7", GraphKind::Unit, 6, fig5},
        {"example 5 U(b,a)", 8, 3, "-1+x-x^3+2*x^4-x^5+x^7", "-1-x+x^3+2*x^4+x^5-x^7", GraphKind::Unit, 6, fig5},
    };
    for (const auto& e : ex) {
        auto grp = FiniteGroupModel::cyclic(e.order);
        auto a = GroupAlgebraElement::parse(e.a, grp, e.p);
        auto b = GroupAlgebraElement::parse(e.b, grp, e.p);
        auto g = build_support_graph(a, b, e.kind);
        o.require(g.vertices.size() == e.vertices && multiplicities(g) == e.mult,
                  std::string(e.label) + ": vertex/edge multiplicities differ");
        for (int x = 0; x < e.order; ++x) {
            int y = e.kind == GraphKind::Unit ? grp->inv(x) : (x * 3 + 1) % e.order;
            if (!translate(a, b, x, y, e.kind).verified)
                o.require(false, std::string(e.label) + ": translation by " + grp->name(x) + " not certified");
        }
    }
    return o;
}

// ---- criterion 10
Outcome bounds(const Options&) {
    Outcome o;
    auto rep = run_bounds();
    for (const auto& t : rep.zero_divisor)
        o.require(t.infeasible(), "zero-divisor n=" + std::to_string(t.n) + " open");
    for (const auto& t : rep.unit) o.require(t.infeasible(), "unit n=" + std::to_string(t.n) + " open");
    o.require(rep.zero_divisor.size() == 7 && rep.unit.size() == 6, "trail count");
    o.require(search_unit_order8(true).completions.empty(), "order-8 search found a completion");
    o.require(!search_unit_order8(false).completions.empty(), "negative control found nothing");
    return o;
}

// ---- criterion 11
Word random_word(std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len), pick(0, 3);
    const int8_t codes[4] = {2, -2, 3, -3};
    std::vector<int8_t> raw;
    for (int i = len(rng); i > 0; --i) raw.push_back(codes[pick(rng)]);
    return Word::from_codes(raw);
}

// Proper 3-colourings of the 2k port cycle, and their orbits under the dihedral group on k vertices.
std::pair<long, long> colouring_oracle(int k) {
    int m = 2 * k;
    long total = 1;
    for (int i = 0; i < m; ++i) total *= 3;
    long raw = 0;
    std::set<std::vector<int>> reps;
    std::vector<int> t(static_cast<size_t>(m));
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (int i = 0; i < m; ++i, c /= 3) t[static_cast<size_t>(i)] = static_cast<int>(c % 3);
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) ok = t[static_cast<size_t>(i)] != t[static_cast<size_t>((i + 1) % m)];
        if (!ok) continue;
        ++raw;
        std::vector<int> best = t;
        for (int r = 0; r < m; r += 2) {
            std::vector<int> rot(static_cast<size_t>(m)), rev(static_cast<size_t>(m));
            for (int i = 0; i < m; ++i) rot[static_cast<size_t>(i)] = t[static_cast<size_t>((i + r) % m)];
            for (int i = 0; i < m; ++i) rev[static_cast<size_t>(i)] = rot[static_cast<size_t>(m - 1 - i)];
            best = std::min({best, rot, rev});
        }
        reps.insert(best);
    }
    return {raw, static_cast<long>(reps.size())};
}

Outcome properties(const Options& opt) {
    Outcome o;
    std::mt19937 rng(2024);
    int bad = 0;
    for (int t = 0; t < 2000; ++t) {
        Word a = random_word(rng, 8), b = random_word(rng, 8), c = random_word(rng, 8);
        bad += (a * b) * c != a * (b * c);
        bad += !(a * a.inverse()).is_identity();
        bad += (a * b).inverse() != b.inverse() * a.inverse();
        bad += (c * a * c.inverse()).conjugacy_canonical() != a.conjugacy_canonical();
    }
    o.require(bad == 0, "word laws: " + std::to_string(bad) + " violations");

    for (auto [k, raw, orbits] : {std::array<long, 3>{3, 66, 13}, std::array<long, 3>{4, 258, 36}}) {
        auto [oraw, oorb] = colouring_oracle(static_cast<int>(k));
        auto cfg = CycleConfig::single_cycle(static_cast<int>(k));
        long lraw = count_raw_labelings(cfg, {});
        long lorb = static_cast<long>(enumerate_labelings(cfg, LabelMode::ZeroDivisorF2).size());
        o.require(oraw == raw && oorb == orbits && lraw == raw && lorb == orbits,
                  "Burnside k=" + std::to_string(k) + ": oracle " + std::to_string(oraw) + "/" + std::to_string(oorb) +
                      ", library " + std::to_string(lraw) + "/" + std::to_string(lorb));
    }

    int cert_bad = 0;
    for (int n = 8; n <= 14; n += 2)
        for (const auto& g : generate(n, opt.cache_dir)) {
            std::vector<int> perm(static_cast<size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            cert_bad += certificate(g) != certificate(g.relabel(perm));
        }
    o.require(cert_bad == 0, "certificate invariance: " + std::to_string(cert_bad) + " violations");

    std::vector<SimpleGraph> pats = {cycle_graph(4), cycle_graph(5), cycle_graph(6), complete_bipartite(2, 3)};
    auto cat = Catalog::load(Catalog::default_path());
    for (const auto* e : cat.table3())
        if (e->vertices <= 7) pats.push_back(e->graph());
    int iso_bad = 0;
    std::bernoulli_distribution coin(0.45);
    for (int t = 0; t < 300; ++t) {
        int n = 5 + t % 6;
        SimpleGraph host(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) host.add_edge(u, v);
        for (const auto& p : pats)
            if (p.order() <= n) iso_bad += contains_subgraph(host, p) != contains_subgraph_bruteforce(host, p);
    }
    o.require(iso_bad == 0, "subgraph search vs exhaustive mapping: " + std::to_string(iso_bad) + " disagreements");

    auto named = table3_patterns(cat);
    for (int n = 4; n <= 16; n += 2) {
        auto r = run_pipeline(n, generate(n, opt.cache_dir), named);
        long sum = r.prism_hits + r.moebius_hits + r.remains;
        for (long x : r.removed) sum += x;
        o.require(sum == r.total, "conservation fails at n=" + std::to_string(n));
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    Options opt;
    std::vector<int> expect_fail, only;
    app.add_flag("--extended", opt.extended, "include n = 18 and 20");
    app.add_option("--cache-dir", opt.cache_dir, "census cache directory");
    app.add_option("--expect-fail", expect_fail, "criteria documented as unattainable");
    app.add_option("--only", only, "run only these criteria");
    CLI11_PARSE(app, argc, argv);

    struct Criterion {
        int id;
        const char* what;
        double budget_s;
        std::function<Outcome(const Options&)> run;
    };
    std::vector<Criterion> all = {
        {1, "triangle enumeration: 13 classes, listed relation set (exact)", 1, triangle},
        {2, "square enumeration: 36 classes, table rows, survivors {5,7,14,17,21,22,25,26,29} (exact)", 5, square},
        {3, "36 survivor pairs finite under coset enumeration, max_cosets 100000 (exact)", 30, square_pairs},
        {4, "shared-edge squares: relations in {14,22,26}, six seeds recovered (exact)", 10, shared_edge},
        {5, "ladder exclusion, prism and Moebius, m = 2..10 (exact)", 5, ladders},
        {6, "configuration counts against the catalog totals (exact)", 600, configuration_counts},
        {7, "census totals 0,1,2,6,22,110,792 for n = 4..16 (exact)", 120, census_totals},
        {8, "filter pipeline matches the expected removal table, Remains = 0 for n <= 16 (exact)", 120, pipeline},
        {9, "worked examples: vertex/edge multiplicities and translation isomorphisms (exact)", 1, worked_examples},
        {10, "bounds: zero-divisor n = 3..9, unit n = 3..8 infeasible; order-8 search and control (exact)", 30,
         bounds},
        {11, "property suites: word laws, Burnside 66/13 and 258/36, certificates, subgraph search, conservation", 300,
         properties},
    };
    if (opt.extended) {
        all[6].budget_s = all[7].budget_s = 3600;
        all[6].what = "census totals through n = 20, including 7805 and 97546 (exact)";
        all[7].what = "filter pipeline through n = 20, Remains 0 at 18 and 1120 at 20 (exact)";
    }

    int unexpected = 0;
    for (const auto& c : all) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run(opt);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (s > c.budget_s) o.require(false, "over time budget");
        bool expected_fail = std::find(expect_fail.begin(), expect_fail.end(), c.id) != expect_fail.end();
        std::printf("criterion %2d: %s  %s  [%.2fs / %.0fs]%s\n", c.id, o.pass ? "PASS" : "FAIL", c.what, s, c.budget_s,
                    !o.pass && expected_fail ? "  (documented as unattainable)" : "");
        for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
        std::fflush(stdout);
        if (!o.pass && !expected_fail) ++unexpected;
    }
    return unexpected == 0 ? 0 : 1;
}
