#include "kzd/bounds.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace kzd {

ProductSetBound product_bound(int b, int c, Regime regime, const HamidouneContext& ctx) {
    if (b < 1 || c < 1) throw std::invalid_argument("set sizes must be positive");
    ProductSetBound r{b, c, regime, 0};
    if (regime == Regime::Kemperman) {
        if (!ctx.torsion_free) throw std::invalid_argument("kemperman bound needs a torsion-free group");
        r.bound = b + c - 1;
    } else {
        if (c < 4) throw std::invalid_argument("hamidoune bound needs |C| >= 4");
        if (b < 3) throw std::invalid_argument("hamidoune bound needs |B| >= 3");
        if (!ctx.one_in_c) throw std::invalid_argument("hamidoune bound needs 1 in C");
        if (!ctx.nonabelian || !ctx.torsion_free)
            throw std::invalid_argument("hamidoune bound needs a nonabelian torsion-free group");
        r.bound = b + c + 1;
    }
    return r;
}

bool OracleSet::odd_unit_covers(int size) const {
    if (size % 2 == 0) return false;
    if (size >= 13) return true;
    return odd_unit_reading == OddUnitReading::AsApplied && (size == 3 || size == 7 || size == 9);
}

std::vector<std::vector<int>> block_profiles(int cells, int blocks, int min_size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int, int)> rec = [&](int left, int parts, int cap) {
        if (parts == 0) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int s = std::min(cap, left - min_size * (parts - 1)); s >= min_size; --s) {
            cur.push_back(s);
            rec(left - s, parts - 1, s);
            cur.pop_back();
        }
    };
    if (blocks > 0) rec(cells, blocks, cells);
    return out;
}

namespace {

std::string profile_str(const std::vector<int>& p) {
    std::map<int, int> m;
    for (int s : p) ++m[s];
    std::ostringstream os;
    bool first = true;
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        if (!first) os << " + ";
        os << it->second << "x" << it->first;
        first = false;
    }
    return os.str();
}

class TrailBuilder {
public:
    TrailBuilder(ContradictionTrail::Mode mode, int n, const OracleSet& o) : o_(o) {
        t_.mode = mode;
        t_.n = n;
    }

    void step(const std::string& kind, const std::string& cites, const std::string& detail, bool blocked = false) {
        t_.steps.push_back({kind, cites, detail, blocked});
    }

    // Applies an oracle; returns false (and records a blocked step) when it is unavailable.
    bool oracle(const std::string& name, bool applies, const std::string& detail) {
        bool ok = o_.enabled(name) && applies;
        std::string why = !o_.enabled(name) ? " [oracle disabled]" : !applies ? " [oracle does not apply]" : "";
        step("oracle", name, detail + why, !ok);
        if (ok) t_.oracles_used.push_back(name);
        return ok;
    }

    ContradictionTrail done(bool infeasible) {
        t_.verdict = infeasible ? TrailVerdict::Infeasible : TrailVerdict::Open;
        return t_;
    }

    const OracleSet& oracles() const { return o_; }

private:
    const OracleSet& o_;
    ContradictionTrail t_;
};

// Lower bound on |supp(a) supp(b)| with |supp(a)| = 3, |supp(b)| = n; 0 when no oracle is usable.
int product_lower_bound(TrailBuilder& tb, int n) {
    if (n >= 4) {
        auto r = product_bound(3, n, Regime::Hamidoune);
        if (tb.oracle("hamidoune", true,
                      "G nonabelian (abelian torsion-free groups satisfy the conjecture), 1 in supp, |supp| = 3: |AB| >= " +
                          std::to_string(r.bound)))
            return r.bound;
    }
    auto r = product_bound(3, n, Regime::Kemperman);
    if (tb.oracle("kemperman", true, "torsion-free: |AB| >= 3 + " + std::to_string(n) + " - 1 = " + std::to_string(r.bound)))
        return r.bound;
    return 0;
}

}  // namespace

ContradictionTrail zero_divisor_infeasible(int n, const OracleSet& oracles) {
    if (n < 3 || n > 9) throw std::out_of_range("zero-divisor trail covers n = 3..9");
    TrailBuilder tb(ContradictionTrail::Mode::ZeroDivisor, n, oracles);
    const int cells = 3 * n;
    int lo = product_lower_bound(tb, n);
    if (lo == 0) return tb.done(false);
    // Every product h_i g_j must coincide with another one: blocks of size >= 2.
    const int hi = cells / 2;
    tb.step("bound", "|A| = 3n", "|AB| <= " + std::to_string(cells) + " and every block has size >= 2, so |AB| <= " +
                                     std::to_string(hi));
    if (lo > hi) {
        tb.step("pigeonhole", "slack", std::to_string(cells) + " - " + std::to_string(lo) + " = " + std::to_string(cells - lo) +
                                           " < " + std::to_string(lo) + " blocks: some product is unmatched");
        return tb.done(true);
    }
    bool all_closed = true;
    for (int m = lo; m <= hi; ++m) {
        for (const auto& prof : block_profiles(cells, m, 2)) {
            tb.step("profiles", "exhaustive", "|AB| = " + std::to_string(m) + ": blocks " + profile_str(prof));
            bool pairs_only = prof.front() == 2;
            bool one_triple = prof.front() == 3 && (prof.size() < 2 || prof[1] == 2);
            if (pairs_only) {
                tb.step("reduction", "all blocks are pairs",
                        "sum of supports over F2 gives a zero divisor with supports 3 and " + std::to_string(n));
                if (!tb.oracle("census-bound", n < 20, "no such F2 zero divisor with |supp| < 20")) all_closed = false;
            } else if (one_triple) {
                tb.step("reduction", "one block of size 3",
                        "sum of supports times x^-1 (x the common product of the triple) gives an F2 unit with supports 3 and " +
                            std::to_string(n));
                if (!tb.oracle("odd-unit", tb.oracles().odd_unit_covers(n),
                               "no F2 unit with supports 3 and " + std::to_string(n)))
                    all_closed = false;
            } else {
                tb.step("profiles", "unhandled", "no argument for this profile", true);
                all_closed = false;
            }
        }
    }
    return tb.done(all_closed);
}

ContradictionTrail unit_infeasible(int n, const OracleSet& oracles) {
    if (n < 3 || n > 8) throw std::out_of_range("unit trail covers n = 3..8");
    TrailBuilder tb(ContradictionTrail::Mode::Unit, n, oracles);
    const int cells = 3 * n;
    int lo = product_lower_bound(tb, n);
    if (lo == 0) return tb.done(false);
    // E1 (containing (1,1)) sums to 1 and may be a singleton; every other block sums to 0.
    const int hi = (cells + 1) / 2;
    tb.step("bound", "|A| = 3n", "blocks other than E1 have size >= 2, so |AB| <= " + std::to_string(hi));
    if (lo > hi) {
        tb.step("pigeonhole", "slack", std::to_string(cells) + " - " + std::to_string(lo) + " = " + std::to_string(cells - lo) +
                                           ": some block other than E1 has size <= 1");
        return tb.done(true);
    }
    bool all_closed = true;
    for (int m = lo; m <= hi; ++m) {
        for (int e1 = 1; e1 <= cells; ++e1) {
            for (const auto& rest : block_profiles(cells - e1, m - 1, 2)) {
                std::string prof = "|E1| = " + std::to_string(e1) + ", others " + profile_str(rest);
                tb.step("profiles", "exhaustive", "|AB| = " + std::to_string(m) + ": " + prof);
                bool pairs_only = rest.empty() || rest.front() == 2;
                if (e1 == 1 && pairs_only) {
                    tb.step("reduction", "E1 singleton, other blocks pairs",
                            "sum of supports over F2 gives a unit with supports 3 and " + std::to_string(n));
                    if (!tb.oracle("odd-unit", tb.oracles().odd_unit_covers(n),
                                   "no F2 unit with supports 3 and " + std::to_string(n)))
                        all_closed = false;
                } else if (e1 == 2 && pairs_only) {
                    tb.step("reduction", "all blocks are pairs",
                            "sum of supports over F2 gives a zero divisor with supports 3 and " + std::to_string(n));
                    if (!tb.oracle("census-bound", n < 20, "no such F2 zero divisor with |supp| < 20")) all_closed = false;
                } else if (e1 == 1 && rest.front() == 3 && (rest.size() < 2 || rest[1] == 2) && n == 8) {
                    tb.step("reduction", "E1 singleton, one triple",
                            "unit graph is simple with one triangle, g1 of degree 3: seed H on 8 vertices");
                    auto s = search_unit_order8(true);
                    tb.step("search", "unit graph completion",
                            std::to_string(s.completions.size()) + " completions of H (" + std::to_string(s.nodes) +
                                " nodes); K_{2,3} and edge-sharing triangles forbidden");
                    if (!s.completions.empty()) all_closed = false;
                } else {
                    tb.step("profiles", "unhandled", "no argument for this profile", true);
                    all_closed = false;
                }
            }
        }
    }
    return tb.done(all_closed);
}

SimpleGraph unit_order8_seed() {
    // g1..g8 -> 0..7
    return SimpleGraph::from_edges(8, {{0, 2}, {0, 3}, {2, 3}, {0, 1}, {2, 6}, {2, 7}, {3, 4}, {3, 5}});
}

Order8Search search_unit_order8(bool ban_k23) {
    Order8Search res;
    const SimpleGraph seed = unit_order8_seed();
    const int target[8] = {3, 3, 4, 4, 3, 3, 3, 3};
    const SimpleGraph k23 = complete_bipartite(2, 3);
    std::vector<std::pair<int, int>> free;
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v)
            if (!seed.has_edge(u, v)) free.push_back({u, v});
    std::map<std::string, long> rejects;
    SimpleGraph g = seed;
    std::function<void(size_t)> rec = [&](size_t i) {
        ++res.nodes;
        // Prune: an extra triangle never disappears.
        if (g.triangle_count() > 1) {
            ++rejects["second triangle"];
            return;
        }
        if (ban_k23 && contains_subgraph(g, k23)) {
            ++rejects["K_{2,3}"];
            return;
        }
        if (i == free.size()) {
            for (int v = 0; v < 8; ++v)
                if (g.degree(v) != target[v]) {
                    ++rejects["degree"];
                    return;
                }
            res.completions.push_back(g);
            return;
        }
        auto [u, v] = free[i];
        if (g.degree(u) < target[u] && g.degree(v) < target[v]) {
            g.add_edge(u, v);
            rec(i + 1);
            g.remove_edge(u, v);
        }
        rec(i + 1);
    };
    rec(0);
    // Branch summary along the g5 ~ g2 split.
    for (bool adj : {false, true}) {
        long c = 0;
        for (const auto& h : res.completions) c += h.has_edge(1, 4) == adj;
        res.log.push_back(std::string(adj ? "g5 ~ g2" : "g5 !~ g2") + ": " + std::to_string(c) + " completions");
    }
    for (const auto& [why, c] : rejects) res.log.push_back("rejected (" + why + "): " + std::to_string(c));
    return res;
}

namespace {

nlohmann::json trail_json(const ContradictionTrail& t) {
    nlohmann::json j;
    j["mode"] = t.mode == ContradictionTrail::Mode::ZeroDivisor ? "zero-divisor" : "unit";
    j["n"] = t.n;
    j["verdict"] = t.infeasible() ? "infeasible" : "open";
    j["oracles"] = t.oracles_used;
    j["steps"] = nlohmann::json::array();
    for (const auto& s : t.steps)
        j["steps"].push_back({{"kind", s.kind}, {"cites", s.cites}, {"detail", s.detail}, {"blocked", s.blocked}});
    return j;
}

}  // namespace

std::string ContradictionTrail::text() const {
    std::ostringstream os;
    os << (mode == Mode::ZeroDivisor ? "zero-divisor" : "unit") << " n=" << n << ": "
       << (infeasible() ? "infeasible" : "open") << "\n";
    for (const auto& s : steps)
        os << "  [" << s.kind << "] " << s.cites << ": " << s.detail << (s.blocked ? " (blocked)" : "") << "\n";
    return os.str();
}

std::string ContradictionTrail::json() const { return trail_json(*this).dump(2); }

bool BoundsReport::all_infeasible() const {
    for (const auto& t : zero_divisor)
        if (!t.infeasible()) return false;
    for (const auto& t : unit)
        if (!t.infeasible()) return false;
    return true;
}

std::string BoundsReport::text() const {
    std::ostringstream os;
    for (const auto& t : zero_divisor) os << t.text();
    for (const auto& t : unit) os << t.text();
    bool zd = true, un = true;
    for (const auto& t : zero_divisor) zd = zd && t.infeasible();
    for (const auto& t : unit) un = un && t.infeasible();
    os << "zero divisors: |supp(beta)| >= 10 " << (zd ? "holds" : "not established") << "\n";
    os << "units: |supp(delta)| >= 9 " << (un ? "holds" : "not established") << "\n";
    return os.str();
}

std::string BoundsReport::json() const {
    nlohmann::json j;
    j["zero_divisor"] = nlohmann::json::array();
    j["unit"] = nlohmann::json::array();
    for (const auto& t : zero_divisor) j["zero_divisor"].push_back(trail_json(t));
    for (const auto& t : unit) j["unit"].push_back(trail_json(t));
    j["all_infeasible"] = all_infeasible();
    return j.dump(2);
}

BoundsReport run_bounds(const OracleSet& oracles) {
    BoundsReport r;
    for (int n = 3; n <= 9; ++n) r.zero_divisor.push_back(zero_divisor_infeasible(n, oracles));
    for (int n = 3; n <= 8; ++n) r.unit.push_back(unit_infeasible(n, oracles));
    return r;
}

}  // namespace kzd
