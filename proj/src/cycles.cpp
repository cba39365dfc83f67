#include "kzd/cycles.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace kzd {

Word label_word(int8_t label) { return label == 0 ? Word() : Word::gen(label); }

std::string label_name(int8_t label) { return label == 0 ? "1" : "h" + std::to_string(label); }

CycleConfig::CycleConfig(int n, std::vector<std::pair<int, int>> edges, std::vector<std::vector<int>> cycles)
    : n_(n), edges_(std::move(edges)), cycles_(std::move(cycles)) {
    if (n < 1 || n > SimpleGraph::kMaxVertices) throw std::invalid_argument("cycle config: bad order");
    index_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
    std::vector<int> deg(static_cast<size_t>(n), 0);
    for (size_t e = 0; e < edges_.size(); ++e) {
        auto [u, v] = edges_[e];
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw std::invalid_argument("cycle config: bad edge");
        if (index_[u][v] >= 0) throw std::invalid_argument("cycle config: repeated edge");
        index_[u][v] = index_[v][u] = static_cast<int>(e);
        if (++deg[u] > 3 || ++deg[v] > 3) throw std::invalid_argument("cycle config: degree above 3");
    }
    for (const auto& c : cycles_) {
        if (c.size() < 3) throw std::invalid_argument("cycle config: cycle shorter than 3");
        std::set<int> seen(c.begin(), c.end());
        if (seen.size() != c.size()) throw std::invalid_argument("cycle config: cycle repeats a vertex");
        for (size_t i = 0; i < c.size(); ++i)
            if (edge_index(c[i], c[(i + 1) % c.size()]) < 0)
                throw std::invalid_argument("cycle config: cycle uses a missing edge");
    }
}

CycleConfig CycleConfig::single_cycle(int k) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> cyc;
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(i, (i + 1) % k);
        cyc.push_back(i);
    }
    return CycleConfig(k, edges, {cyc});
}

int CycleConfig::edge_index(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
    return index_[u][v];
}

SimpleGraph CycleConfig::graph() const { return SimpleGraph::from_edges(n_, edges_); }

int8_t port(const CycleConfig& cfg, const PortLabeling& lab, int u, int v) {
    int e = cfg.edge_index(u, v);
    if (e < 0) throw std::invalid_argument("port: not an edge");
    return cfg.edges()[e].first == u ? lab[2 * e] : lab[2 * e + 1];
}

bool labeling_valid(const CycleConfig& cfg, const PortLabeling& lab, LabelMode mode) {
    if (lab.size() != 2 * cfg.edges().size()) return false;
    for (auto l : lab)
        if (l != 0 && l != 2 && l != 3) return false;
    for (size_t e = 0; e < cfg.edges().size(); ++e)
        if (lab[2 * e] == lab[2 * e + 1]) return false;
    if (mode == LabelMode::ZeroDivisorF2) {
        std::vector<int> used(static_cast<size_t>(cfg.order()), 0);
        for (size_t e = 0; e < cfg.edges().size(); ++e) {
            auto [u, v] = cfg.edges()[e];
            int bu = 1 << lab[2 * e], bv = 1 << lab[2 * e + 1];
            if (used[u] & bu || used[v] & bv) return false;
            used[u] |= bu;
            used[v] |= bv;
        }
    }
    return true;
}

std::vector<int8_t> cycle_tuple(const CycleConfig& cfg, const PortLabeling& lab, size_t cycle) {
    const auto& c = cfg.cycles().at(cycle);
    std::vector<int8_t> t;
    for (size_t i = 0; i < c.size(); ++i) {
        int u = c[i], v = c[(i + 1) % c.size()];
        t.push_back(port(cfg, lab, u, v));
        t.push_back(port(cfg, lab, v, u));
    }
    return t;
}

Word tuple_relation(const std::vector<int8_t>& tuple) {
    std::vector<int8_t> codes;
    for (size_t i = 0; i + 1 < tuple.size(); i += 2) {
        if (tuple[i]) codes.push_back(static_cast<int8_t>(-tuple[i]));
        if (tuple[i + 1]) codes.push_back(tuple[i + 1]);
    }
    return Word::from_codes(codes);
}

Word cycle_relation(const CycleConfig& cfg, const PortLabeling& lab, size_t cycle) {
    return tuple_relation(cycle_tuple(cfg, lab, cycle));
}

Presentation relations_of(const PortLabeling& lab, const CycleConfig& cfg) {
    std::vector<Word> ws;
    for (size_t i = 0; i < cfg.cycles().size(); ++i) ws.push_back(cycle_relation(cfg, lab, i));
    Presentation p = Presentation::from_words(ws);
    if (p.empty()) throw std::domain_error("every cycle relation is trivial");
    return p;
}

namespace {

std::vector<int> cycle_edge_set(const CycleConfig& cfg, const std::vector<int>& c, const std::vector<int>* perm) {
    std::vector<int> es;
    for (size_t i = 0; i < c.size(); ++i) {
        int u = c[i], v = c[(i + 1) % c.size()];
        if (perm) u = (*perm)[u], v = (*perm)[v];
        es.push_back(cfg.edge_index(u, v));
    }
    std::sort(es.begin(), es.end());
    return es;
}

}  // namespace

std::vector<std::vector<int>> cycle_automorphisms(const CycleConfig& cfg) {
    std::set<std::vector<int>> target;
    for (const auto& c : cfg.cycles()) target.insert(cycle_edge_set(cfg, c, nullptr));
    std::vector<std::vector<int>> out;
    for (const auto& p : automorphisms(cfg.graph())) {
        std::set<std::vector<int>> img;
        for (const auto& c : cfg.cycles()) img.insert(cycle_edge_set(cfg, c, &p));
        if (img == target) out.push_back(p);
    }
    return out;
}

PortLabeling act(const CycleConfig& cfg, const std::vector<int>& perm, const PortLabeling& lab) {
    PortLabeling out(lab.size());
    for (size_t e = 0; e < cfg.edges().size(); ++e) {
        auto [u, v] = cfg.edges()[e];
        int pu = perm[u], pv = perm[v];
        int f = cfg.edge_index(pu, pv);
        bool same = cfg.edges()[f].first == pu;
        out[2 * f] = same ? lab[2 * e] : lab[2 * e + 1];
        out[2 * f + 1] = same ? lab[2 * e + 1] : lab[2 * e];
    }
    return out;
}

const Classification& RelationCache::classify_word(const Word& w) {
    Word key = w.cyclic_canonical();
    auto it = single_.find(key);
    if (it != single_.end()) return it->second;
    Classification c;
    if (key.is_identity()) {
        c.route_log.push_back("trivial");
    } else {
        c = classify(Presentation::from_words({key}), cfg_);
    }
    return single_.emplace(key, std::move(c)).first->second;
}

Classification RelationCache::classify_set(const std::vector<Word>& ws) {
    Presentation p = Presentation::from_words(ws);
    std::vector<std::string> keys;
    for (const auto& r : p.relators()) keys.push_back(r.cyclic_canonical().str());
    std::sort(keys.begin(), keys.end());
    std::string key;
    for (const auto& k : keys) key += k + ";";
    auto it = joint_.find(key);
    if (it != joint_.end()) return it->second;
    Classification c;
    if (p.empty()) {
        c.route_log.push_back("trivial");
    } else {
        // Every route survives adding relators, so an eliminated relator settles the set.
        bool done = false;
        if (p.relators().size() > 1)
            for (const auto& r : p.relators()) {
                const Classification& s = classify_word(r);
                if (s.eliminated()) {
                    c = s;
                    c.route_log.insert(c.route_log.begin(), "relator " + r.str());
                    done = true;
                    break;
                }
            }
        if (!done) c = classify(p, cfg_);
    }
    joint_.emplace(key, c);
    return c;
}

namespace {

// Backtracking over labelings; edges are visited cycle by cycle so each cycle completes early.
class Enumerator {
public:
    Enumerator(const CycleConfig& cfg, const EnumerationOptions& opt, RelationCache& cache)
        : cfg_(cfg), opt_(opt), cache_(cache) {
        std::vector<bool> placed(cfg.edges().size(), false);
        for (size_t ci = 0; ci < cfg.cycles().size(); ++ci) {
            const auto& c = cfg.cycles()[ci];
            for (size_t i = 0; i < c.size(); ++i) {
                int e = cfg.edge_index(c[i], c[(i + 1) % c.size()]);
                if (!placed[e]) {
                    placed[e] = true;
                    order_.push_back(e);
                }
            }
        }
        for (size_t e = 0; e < placed.size(); ++e)
            if (!placed[e]) order_.push_back(static_cast<int>(e));
        // cycles completed at each step
        completes_.resize(order_.size());
        std::vector<int> pos(cfg.edges().size());
        for (size_t i = 0; i < order_.size(); ++i) pos[order_[i]] = static_cast<int>(i);
        for (size_t ci = 0; ci < cfg.cycles().size(); ++ci) {
            const auto& c = cfg.cycles()[ci];
            int last = 0;
            for (size_t i = 0; i < c.size(); ++i) last = std::max(last, pos[cfg.edge_index(c[i], c[(i + 1) % c.size()])]);
            completes_[last].push_back(ci);
        }
    }

    void run(const std::function<void(const PortLabeling&)>& visit) {
        lab_.assign(2 * cfg_.edges().size(), -1);
        used_.assign(static_cast<size_t>(cfg_.order()), 0);
        visit_ = &visit;
        rec(0);
    }

private:
    const CycleConfig& cfg_;
    const EnumerationOptions& opt_;
    RelationCache& cache_;
    std::vector<int> order_;
    std::vector<std::vector<size_t>> completes_;
    PortLabeling lab_;
    std::vector<int> used_;
    const std::function<void(const PortLabeling&)>* visit_ = nullptr;
    long visited_ = 0;

    void rec(size_t i) {
        if (i == order_.size()) {
            if (opt_.max_raw > 0 && ++visited_ > opt_.max_raw)
                throw std::length_error("more than " + std::to_string(opt_.max_raw) + " labelings");
            (*visit_)(lab_);
            return;
        }
        int e = order_[i];
        auto [u, v] = cfg_.edges()[e];
        bool f2 = opt_.mode == LabelMode::ZeroDivisorF2;
        for (int8_t a : kLabels)
            for (int8_t b : kLabels) {
                if (a == b) continue;
                int ba = 1 << a, bb = 1 << b;
                if (f2 && ((used_[u] & ba) || (used_[v] & bb))) continue;
                lab_[2 * e] = a;
                lab_[2 * e + 1] = b;
                if (f2) used_[u] |= ba, used_[v] |= bb;
                bool ok = true;
                if (opt_.surviving_cycles_only)
                    for (size_t ci : completes_[i])
                        if (cache_.classify_word(cycle_relation(cfg_, lab_, ci)).eliminated()) {
                            ok = false;
                            break;
                        }
                if (ok) rec(i + 1);
                if (f2) used_[u] &= ~ba, used_[v] &= ~bb;
            }
        lab_[2 * e] = lab_[2 * e + 1] = -1;
    }
};

std::vector<TupleClass> classes(const CycleConfig& cfg, const EnumerationOptions& opt, RelationCache& cache, long* raw) {
    auto group = cycle_automorphisms(cfg);
    std::map<PortLabeling, TupleClass> orbits;
    long count = 0;
    Enumerator en(cfg, opt, cache);
    en.run([&](const PortLabeling& lab) {
        ++count;
        PortLabeling best = lab;
        for (const auto& g : group) {
            PortLabeling img = act(cfg, g, lab);
            if (img < best) best = std::move(img);
        }
        auto [it, fresh] = orbits.try_emplace(best);
        if (fresh) {
            it->second.representative = best;
            for (size_t ci = 0; ci < cfg.cycles().size(); ++ci)
                it->second.relations.push_back(cycle_relation(cfg, best, ci).cyclic_canonical());
        }
        ++it->second.orbit_size;
    });
    if (raw) *raw = count;
    std::vector<TupleClass> out;
    out.reserve(orbits.size());
    for (auto& [k, v] : orbits) out.push_back(std::move(v));
    return out;
}

}  // namespace

long count_raw_labelings(const CycleConfig& cfg, const EnumerationOptions& opt) {
    RelationCache cache(opt.classifier);
    long count = 0;
    Enumerator en(cfg, opt, cache);
    en.run([&](const PortLabeling&) { ++count; });
    return count;
}

std::vector<TupleClass> enumerate_labelings(const CycleConfig& cfg, const EnumerationOptions& opt) {
    RelationCache cache(opt.classifier);
    return classes(cfg, opt, cache, nullptr);
}

std::vector<TupleClass> enumerate_labelings(const CycleConfig& cfg, LabelMode mode) {
    EnumerationOptions opt;
    opt.mode = mode;
    return enumerate_labelings(cfg, opt);
}

ConfigurationReport analyze_configuration(const CycleConfig& cfg, const EnumerationOptions& opt) {
    RelationCache cache(opt.classifier);
    ConfigurationReport rep;
    auto cls = classes(cfg, opt, cache, &rep.raw_labelings);
    rep.total_classes = static_cast<long>(cls.size());
    for (auto& tc : cls) {
        Classification c = cache.classify_set(tc.relations);
        if (c.eliminated()) {
            ++rep.eliminated;
            ++rep.by_route[verdict_name(c.verdict)];
        } else {
            rep.surviving.push_back(std::move(tc));
            rep.surviving_verdicts.push_back(std::move(c));
        }
    }
    return rep;
}

CycleConfig two_squares_one_edge() {
    // C = g_i g_j g_k g_l, C' = g_i g_j g_m g_p; common edge g_i g_j
    return CycleConfig(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {4, 5}, {5, 0}}, {{0, 1, 2, 3}, {0, 1, 4, 5}});
}

const std::vector<std::pair<std::array<int8_t, 8>, std::array<int8_t, 8>>>& shared_edge_seeds() {
    static const std::vector<std::pair<std::array<int8_t, 8>, std::array<int8_t, 8>>> seeds = {
        {{2, 0, 2, 3, 0, 2, 0, 3}, {2, 0, 3, 2, 0, 2, 3, 0}},
        {{0, 2, 0, 3, 2, 0, 2, 3}, {0, 2, 3, 0, 2, 0, 3, 2}},
        {{3, 0, 3, 2, 0, 3, 0, 2}, {3, 0, 2, 3, 0, 3, 2, 0}},
        {{0, 3, 0, 2, 3, 0, 3, 2}, {0, 3, 2, 0, 3, 0, 2, 3}},
        {{2, 3, 2, 0, 3, 2, 3, 0}, {2, 3, 0, 2, 3, 2, 0, 3}},
        {{3, 2, 3, 0, 2, 3, 2, 0}, {3, 2, 0, 3, 2, 3, 0, 2}},
    };
    return seeds;
}

namespace {

// Square C_i = a_{i+1} b_{i+1} b_i a_i read from its right rung [c1,d1,...,c4,d4]; the next
// square read from the shared rung is the seed partner. Re-reading that square from its own
// right rung gives [d3,c3,d2,c2,d1,c1,d4,c4].
std::array<int8_t, 8> reread(const std::array<int8_t, 8>& t) {
    return {t[5], t[4], t[3], t[2], t[1], t[0], t[7], t[6]};
}

Word step(int8_t c, int8_t d) { return label_word(d).inverse() * label_word(c); }  // c x = d y => y = d^-1 c x

}  // namespace

std::vector<LadderTrail> verify_ladder_exclusion(int m, LadderClosure closure) {
    if (m < 2) throw std::invalid_argument("ladder needs at least two squares");
    const auto& seeds = shared_edge_seeds();
    std::vector<LadderTrail> out;
    for (size_t s = 0; s < seeds.size(); ++s)
        for (bool swapped : {false, true}) {
            LadderTrail tr;
            tr.seed = static_cast<int>(s) + 1;
            tr.swapped = swapped;
            auto first = swapped ? seeds[s].second : seeds[s].first;
            auto partner = swapped ? seeds[s].first : seeds[s].second;
            tr.squares.push_back(first);
            for (int i = 1; i < m; ++i) {
                auto next = reread(partner);
                if (next != first) throw std::logic_error("ladder propagation broke the induction");
                tr.squares.push_back(next);
            }
            // a_{i+1} = d4^-1 c4 a_i along the top, so a_{m+1} = W a_1.
            Word w;
            for (const auto& t : tr.squares) w = step(t[6], t[7]) * w;
            if (closure == LadderClosure::Prism) {
                tr.closing_word = w;  // a_{m+1} = a_1
            } else {
                // a_{m+1} = b_1 and c3 b_1 = d3 a_1 on the first rung
                const auto& t = tr.squares.front();
                Word rung = label_word(t[4]).inverse() * label_word(t[5]);
                tr.closing_word = rung.inverse() * w;
            }
            if (!tr.closing_word.is_identity()) {
                tr.verdict = classify(Presentation::from_words({tr.closing_word}));
                tr.contradiction = tr.verdict.verdict == Verdict::TorsionWitness ||
                                   tr.verdict.verdict == Verdict::AbelianOrCyclic;
            }
            out.push_back(std::move(tr));
        }
    return out;
}

}  // namespace kzd
