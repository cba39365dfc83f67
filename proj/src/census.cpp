#include "kzd/census.hpp"

#include <algorithm>
#include <bit>
#include <filesystem>
#include <map>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

namespace kzd {

namespace {

using CertSet = std::unordered_set<std::vector<uint64_t>, CertificateHash>;

SimpleGraph diamond_ring(int k) {
    SimpleGraph g(4 * k);
    for (int i = 0; i < k; ++i) {
        int p = 4 * i, q = p + 1, r = p + 2, s = p + 3;
        g.add_edge(p, q);
        g.add_edge(p, r);
        g.add_edge(p, s);
        g.add_edge(q, r);
        g.add_edge(q, s);
        g.add_edge(s, 4 * ((i + 1) % k) + 2);
    }
    return g;
}

SimpleGraph insert_edge(const SimpleGraph& g, std::pair<int, int> e1, std::pair<int, int> e2) {
    int n = g.order();
    SimpleGraph h(n + 2);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    h.remove_edge(e1.first, e1.second);
    h.remove_edge(e2.first, e2.second);
    int x = n, y = n + 1;
    h.add_edge(e1.first, x);
    h.add_edge(x, e1.second);
    h.add_edge(e2.first, y);
    h.add_edge(y, e2.second);
    h.add_edge(x, y);
    return h;
}

// The insertion is triangle-free iff the removed edges hit every triangle and share no vertex.
bool insertion_triangle_free(const SimpleGraph& g, std::pair<int, int> e1, std::pair<int, int> e2) {
    if (e1.first == e2.first || e1.first == e2.second || e1.second == e2.first || e1.second == e2.second)
        return false;
    for (int u = 0; u < g.order(); ++u)
        for (uint64_t a = g.neighbors(u); a; a &= a - 1) {
            int v = std::countr_zero(a);
            if (v <= u) continue;
            uint64_t common = g.neighbors(u) & g.neighbors(v);
            for (; common; common &= common - 1) {
                int w = std::countr_zero(common);
                if (w <= v) continue;
                auto hits = [&](std::pair<int, int> e) {
                    auto in = [&](int z) { return z == u || z == v || z == w; };
                    return in(e.first) && in(e.second);
                };
                if (!hits(e1) && !hits(e2)) return false;
            }
        }
    return true;
}

std::vector<SimpleGraph> finish(std::vector<std::pair<std::vector<uint64_t>, SimpleGraph>>& items) {
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<SimpleGraph> out;
    out.reserve(items.size());
    for (auto& it : items) out.push_back(std::move(it.second));
    return out;
}

class Dedup {
public:
    void offer(const SimpleGraph& h) {
        CanonicalForm f = canonical_form(h);
        if (!seen_.insert(f.certificate).second) return;
        items_.emplace_back(std::move(f.certificate), h.relabel(f.labeling));
    }
    std::vector<SimpleGraph> take() { return finish(items_); }

private:
    CertSet seen_;
    std::vector<std::pair<std::vector<uint64_t>, SimpleGraph>> items_;
};

int degree_two_vertex(const SimpleGraph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 2) return v;
    throw std::logic_error("piece without a degree-2 vertex");
}

SimpleGraph grow(const SimpleGraph& g, int extra) {
    SimpleGraph h(g.order() + extra);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    return h;
}

// Two hubs joined by three chains of diamonds (chain lengths c1 >= c2 >= c3 >= 1).
std::vector<SimpleGraph> theta_of_diamonds(int n) {
    std::vector<SimpleGraph> out;
    if ((n - 2) % 4) return out;
    int total = (n - 2) / 4;
    for (int c1 = 1; c1 <= total; ++c1)
        for (int c2 = 1; c2 <= c1; ++c2) {
            int c3 = total - c1 - c2;
            if (c3 < 1 || c3 > c2) continue;
            SimpleGraph g(n);
            int next = 2;
            for (int len : {c1, c2, c3}) {
                int prev = 0;
                for (int i = 0; i < len; ++i) {
                    int p = next, q = next + 1, r = next + 2, s = next + 3;
                    next += 4;
                    g.add_edge(p, q);
                    g.add_edge(p, r);
                    g.add_edge(p, s);
                    g.add_edge(q, r);
                    g.add_edge(q, s);
                    g.add_edge(prev, r);
                    prev = s;
                }
                g.add_edge(prev, 1);
            }
            out.push_back(g);
        }
    return out;
}

// A connected cubic graph either has an edge whose removal (suppressing the two degree-2
// vertices) leaves a smaller simple connected cubic graph, or has a bridge, or is K4, a ring
// of diamonds, or a cubic multigraph with every edge replaced by a chain of diamonds (for
// n < 28 only the theta case fits). Bridged graphs are joins of two pieces: connected graphs whose degrees are all 3
// except one vertex of degree 2.
class CubicLevels {
public:
    const std::vector<SimpleGraph>& cubic(int n) {
        auto it = cubic_.find(n);
        if (it != cubic_.end()) return it->second;
        Dedup d;
        if (n == 4) {
            d.offer(SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
        } else {
            insertions(cubic(n - 2), false, d);
            for (int a = 5; a <= n - a; a += 2)
                for (const auto& pa : piece(a))
                    for (const auto& pb : piece(n - a)) {
                        SimpleGraph h(n);
                        for (auto [u, v] : pa.edges()) h.add_edge(u, v);
                        for (auto [u, v] : pb.edges()) h.add_edge(a + u, a + v);
                        h.add_edge(degree_two_vertex(pa), a + degree_two_vertex(pb));
                        d.offer(h);
                    }
            if (n % 4 == 0 && n >= 8) d.offer(diamond_ring(n / 4));
            for (const auto& g : theta_of_diamonds(n)) d.offer(g);
        }
        return cubic_[n] = d.take();
    }

    // Triangle-free graphs only need the insertion step: removing any non-bridge edge of a
    // triangle-free cubic graph leaves a simple connected cubic graph.
    std::vector<SimpleGraph> triangle_free(int n) {
        Dedup d;
        if (n > 4) insertions(cubic(n - 2), true, d);
        return d.take();
    }

private:
    std::map<int, std::vector<SimpleGraph>> cubic_, piece_;

    static void insertions(const std::vector<SimpleGraph>& prev, bool triangle_free_only, Dedup& d) {
        for (const auto& g : prev) {
            if (triangle_free_only && g.triangle_count() > 4) continue;
            auto es = g.edges();
            for (size_t i = 0; i < es.size(); ++i)
                for (size_t j = i + 1; j < es.size(); ++j) {
                    if (triangle_free_only && !insertion_triangle_free(g, es[i], es[j])) continue;
                    d.offer(insert_edge(g, es[i], es[j]));
                }
        }
    }

    const std::vector<SimpleGraph>& piece(int k) {
        auto it = piece_.find(k);
        if (it != piece_.end()) return it->second;
        Dedup d;
        // non-adjacent neighbours at the degree-2 vertex: a subdivided cubic graph
        for (const auto& g : cubic(k - 1))
            for (auto [u, v] : g.edges()) {
                SimpleGraph h = grow(g, 1);
                h.remove_edge(u, v);
                h.add_edge(u, k - 1);
                h.add_edge(k - 1, v);
                d.offer(h);
            }
        // adjacent neighbours with distinct outer neighbours: a smaller piece whose
        // degree-2 vertex is blown up into a triangle
        if (k >= 7)
            for (const auto& q : piece(k - 2)) {
                int t = degree_two_vertex(q);
                uint64_t nb = q.neighbors(t);
                int p1 = std::countr_zero(nb), p2 = 63 - std::countl_zero(nb);
                SimpleGraph h = grow(q, 2);
                int a = k - 2, b = k - 1;
                h.remove_edge(t, p1);
                h.remove_edge(t, p2);
                h.add_edge(t, a);
                h.add_edge(t, b);
                h.add_edge(a, b);
                h.add_edge(a, p1);
                h.add_edge(b, p2);
                d.offer(h);
            }
        // adjacent neighbours with a common outer neighbour: a four-vertex gadget hung
        // from a smaller piece
        if (k >= 9)
            for (const auto& q : piece(k - 4)) {
                int t = degree_two_vertex(q);
                SimpleGraph h = grow(q, 4);
                int x = k - 4, a = k - 3, b = k - 2, w = k - 1;
                h.add_edge(x, a);
                h.add_edge(x, b);
                h.add_edge(a, b);
                h.add_edge(a, w);
                h.add_edge(b, w);
                h.add_edge(w, t);
                d.offer(h);
            }
        return piece_[k] = d.take();
    }
};

}  // namespace

std::vector<SimpleGraph> generate_connected_cubic(int n, bool triangle_free_only) {
    if (n < 4 || n % 2 || n > 22) throw std::invalid_argument("n must be even and in 4..22");
    CubicLevels levels;
    if (triangle_free_only) return levels.triangle_free(n);
    return levels.cubic(n);
}

std::vector<SimpleGraph> generate(int n, const std::string& cache_dir) {
    if (n < 4 || n > 20 || n % 2) throw std::invalid_argument("n must be even and in 4..20");
    std::string path;
    if (!cache_dir.empty()) {
        path = cache_dir + "/census-n" + std::to_string(n) + ".g6";
        if (std::filesystem::exists(path)) return read_graph6_file(path);
    }
    auto out = generate_connected_cubic(n, true);
    if (!path.empty()) {
        std::filesystem::create_directories(cache_dir);
        write_graph6_file(path, out);
    }
    return out;
}

std::vector<SimpleGraph> generate_bruteforce(int n, bool triangle_free) {
    if (n < 4 || n > 12 || n % 2) throw std::invalid_argument("brute force supports even n in 4..12");
    CertSet seen;
    std::vector<std::pair<std::vector<uint64_t>, SimpleGraph>> items;
    SimpleGraph g(n);
    // vertex by vertex: vertex u picks its remaining neighbours among later vertices
    auto rec = [&](auto&& self, int u) -> void {
        if (u == n) {
            if (!g.is_connected()) return;
            CanonicalForm f = canonical_form(g);
            if (seen.insert(f.certificate).second) items.emplace_back(f.certificate, g.relabel(f.labeling));
            return;
        }
        int need = 3 - g.degree(u);
        if (need == 0) {
            self(self, u + 1);
            return;
        }
        std::vector<int> cand;
        for (int v = u + 1; v < n; ++v)
            if (g.degree(v) < 3) cand.push_back(v);
        auto pick = [&](auto&& pself, size_t from, int left) -> void {
            if (left == 0) {
                self(self, u + 1);
                return;
            }
            for (size_t i = from; i < cand.size(); ++i) {
                int v = cand[i];
                if (triangle_free && (g.neighbors(u) & g.neighbors(v))) continue;
                g.add_edge(u, v);
                pself(pself, i + 1, left - 1);
                g.remove_edge(u, v);
            }
        };
        pick(pick, 0, need);
    };
    rec(rec, 0);
    return finish(items);
}

void write_graph6_file(const std::string& path, const std::vector<SimpleGraph>& graphs) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary);
        if (!os) throw std::runtime_error("cannot write " + tmp);
        for (const auto& g : graphs) os << to_graph6(g) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

std::vector<SimpleGraph> read_graph6_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot read " + path);
    std::vector<SimpleGraph> out;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        out.push_back(from_graph6(line));
    }
    return out;
}

LadderResult recognize_ladder(const SimpleGraph& g) {
    LadderResult r;
    int n = g.order();
    if (n < 6 || n % 2 || !g.is_regular(3)) return r;
    auto cert = certificate(g);
    if (cert == certificate(prism_graph(n / 2))) return {LadderKind::Prism, n / 2};
    if (cert == certificate(moebius_graph(n / 2))) return {LadderKind::Moebius, n / 2};
    return r;
}

PipelineResult run_pipeline(int n, const std::vector<SimpleGraph>& census, const std::vector<NamedPattern>& patterns) {
    PipelineResult res;
    res.n = n;
    res.total = static_cast<long>(census.size());
    res.removed.assign(patterns.size(), 0);
    for (const auto& g : census) {
        std::string by;
        for (size_t i = 0; i < patterns.size() && by.empty(); ++i)
            if (contains_subgraph(g, patterns[i].graph)) {
                ++res.removed[i];
                by = patterns[i].name;
            }
        if (by.empty()) {
            LadderResult l = recognize_ladder(g);
            if (l.kind == LadderKind::Prism) {
                ++res.prism_hits;
                by = "L_n";
            } else if (l.kind == LadderKind::Moebius) {
                ++res.moebius_hits;
                by = "M_n";
            }
        }
        if (by.empty()) {
            ++res.remains;
            by = "survivor";
            res.survivors.push_back(g);
        }
        res.removed_by.push_back(by);
    }
    return res;
}

}  // namespace kzd
