#include "kzd/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace kzd {

// ---------------------------------------------------------------- basics

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("graph order out of range");
}

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void SimpleGraph::add_edge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("bad edge");
    adj_[static_cast<size_t>(u)] |= uint64_t{1} << v;
    adj_[static_cast<size_t>(v)] |= uint64_t{1} << u;
}

void SimpleGraph::remove_edge(int u, int v) {
    adj_[static_cast<size_t>(u)] &= ~(uint64_t{1} << v);
    adj_[static_cast<size_t>(v)] &= ~(uint64_t{1} << u);
}

int SimpleGraph::degree(int v) const { return std::popcount(adj_[static_cast<size_t>(v)]); }

int SimpleGraph::edge_count() const {
    int s = 0;
    for (auto a : adj_) s += std::popcount(a);
    return s / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

bool SimpleGraph::is_regular(int d) const {
    for (int v = 0; v < n_; ++v)
        if (degree(v) != d) return false;
    return true;
}

bool SimpleGraph::is_connected() const {
    if (n_ == 0) return true;
    uint64_t seen = 1, frontier = 1;
    while (frontier) {
        uint64_t next = 0;
        for (uint64_t f = frontier; f; f &= f - 1) next |= adj_[static_cast<size_t>(std::countr_zero(f))];
        frontier = next & ~seen;
        seen |= next;
    }
    return std::popcount(seen) == n_;
}

int SimpleGraph::triangle_count() const {
    int t = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) {
                uint64_t common = adj_[static_cast<size_t>(u)] & adj_[static_cast<size_t>(v)];
                common &= ~((uint64_t{2} << v) - 1);  // third vertex above v
                t += std::popcount(common);
            }
    return t;
}

bool SimpleGraph::is_triangle_free() const {
    for (int u = 0; u < n_; ++u)
        for (uint64_t a = adj_[static_cast<size_t>(u)]; a; a &= a - 1) {
            int v = std::countr_zero(a);
            if (adj_[static_cast<size_t>(u)] & adj_[static_cast<size_t>(v)]) return false;
        }
    return true;
}

int SimpleGraph::girth() const {
    int best = 0;
    for (int s = 0; s < n_; ++s) {
        std::vector<int> dist(static_cast<size_t>(n_), -1), par(static_cast<size_t>(n_), -1);
        std::vector<int> q{s};
        dist[static_cast<size_t>(s)] = 0;
        for (size_t i = 0; i < q.size(); ++i) {
            int u = q[i];
            for (uint64_t a = adj_[static_cast<size_t>(u)]; a; a &= a - 1) {
                int v = std::countr_zero(a);
                if (dist[static_cast<size_t>(v)] < 0) {
                    dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                    par[static_cast<size_t>(v)] = u;
                    q.push_back(v);
                } else if (par[static_cast<size_t>(u)] != v) {
                    int len = dist[static_cast<size_t>(u)] + dist[static_cast<size_t>(v)] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

SimpleGraph SimpleGraph::relabel(const std::vector<int>& perm) const {
    SimpleGraph g(n_);
    for (auto [u, v] : edges()) g.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
    return g;
}

// ---------------------------------------------------------------- canonical labeling

namespace {

struct Refiner {
    const SimpleGraph& g;
    int n;
    std::vector<std::pair<std::vector<int>, int>> sig;

    explicit Refiner(const SimpleGraph& graph) : g(graph), n(graph.order()), sig(static_cast<size_t>(n)) {}

    // Colours are renumbered 0..k-1 in signature order; returns k.
    int refine(std::vector<int>& col) {
        int k = -1;
        for (;;) {
            for (int v = 0; v < n; ++v) {
                auto& s = sig[static_cast<size_t>(v)];
                s.first.clear();
                s.first.push_back(col[static_cast<size_t>(v)]);
                for (uint64_t a = g.neighbors(v); a; a &= a - 1)
                    s.first.push_back(col[static_cast<size_t>(std::countr_zero(a))]);
                std::sort(s.first.begin() + 1, s.first.end());
                s.second = v;
            }
            std::sort(sig.begin(), sig.end());
            int c = 0;
            for (size_t i = 0; i < sig.size(); ++i) {
                if (i > 0 && sig[i].first != sig[i - 1].first) ++c;
                col[static_cast<size_t>(sig[i].second)] = c;
            }
            int nk = n ? c + 1 : 0;
            if (nk == k) return k;
            k = nk;
        }
    }
};

struct CanonSearch {
    const SimpleGraph& g;
    int n;
    Refiner ref;
    std::vector<uint64_t> best;
    std::vector<int> best_lab;
    std::vector<std::vector<int>> autos;
    long leaves = 0;

    explicit CanonSearch(const SimpleGraph& graph) : g(graph), n(graph.order()), ref(graph) {}

    std::vector<uint64_t> cert_of(const std::vector<int>& lab) const {
        std::vector<uint64_t> rows(static_cast<size_t>(n), 0);
        for (int v = 0; v < n; ++v) {
            uint64_t r = 0;
            for (uint64_t a = g.neighbors(v); a; a &= a - 1)
                r |= uint64_t{1} << lab[static_cast<size_t>(std::countr_zero(a))];
            rows[static_cast<size_t>(lab[static_cast<size_t>(v)])] = r;
        }
        return rows;
    }

    void leaf(const std::vector<int>& lab) {
        ++leaves;
        auto c = cert_of(lab);
        if (best_lab.empty() || c < best) {
            best = std::move(c);
            best_lab = lab;
        } else if (c == best) {
            std::vector<int> inv(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v) inv[static_cast<size_t>(best_lab[static_cast<size_t>(v)])] = v;
            std::vector<int> gamma(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v) gamma[static_cast<size_t>(v)] = inv[static_cast<size_t>(lab[static_cast<size_t>(v)])];
            autos.push_back(std::move(gamma));
        }
    }

    void node(std::vector<int> col, std::vector<int>& prefix) {
        int k = ref.refine(col);
        if (k == n) {
            leaf(col);
            return;
        }
        // first non-singleton cell in colour order
        std::vector<int> count(static_cast<size_t>(k), 0);
        for (int c : col) ++count[static_cast<size_t>(c)];
        int target = 0;
        while (count[static_cast<size_t>(target)] == 1) ++target;
        std::vector<int> cell;
        for (int v = 0; v < n; ++v)
            if (col[static_cast<size_t>(v)] == target) cell.push_back(v);
        std::vector<int> explored;
        for (int v : cell) {
            if (!explored.empty() && same_orbit(prefix, explored, v)) continue;
            std::vector<int> c2(col.size());
            for (int u = 0; u < n; ++u) c2[static_cast<size_t>(u)] = 2 * col[static_cast<size_t>(u)] + 1;
            c2[static_cast<size_t>(v)] = 2 * col[static_cast<size_t>(v)];
            prefix.push_back(v);
            node(std::move(c2), prefix);
            prefix.pop_back();
            explored.push_back(v);
        }
    }

    // Orbits under found automorphisms that fix the prefix pointwise.
    bool same_orbit(const std::vector<int>& prefix, const std::vector<int>& explored, int v) const {
        std::vector<int> parent(static_cast<size_t>(n));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&parent](int x) {
            while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            return x;
        };
        bool any = false;
        for (const auto& a : autos) {
            bool fixes = true;
            for (int p : prefix)
                if (a[static_cast<size_t>(p)] != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            any = true;
            for (int u = 0; u < n; ++u) {
                int x = find(u), y = find(a[static_cast<size_t>(u)]);
                if (x != y) parent[static_cast<size_t>(std::max(x, y))] = std::min(x, y);
            }
        }
        if (!any) return false;
        int rv = find(v);
        for (int w : explored)
            if (find(w) == rv) return true;
        return false;
    }
};

}  // namespace

CanonicalForm canonical_form(const SimpleGraph& g) {
    CanonSearch s(g);
    std::vector<int> col(static_cast<size_t>(g.order()), 0);
    std::vector<int> prefix;
    if (g.order() > 0) s.node(col, prefix);
    CanonicalForm f;
    f.labeling = s.best_lab;
    f.certificate = s.best;
    f.automorphisms_found = static_cast<long>(s.autos.size());
    f.leaves = s.leaves;
    return f;
}

std::vector<uint64_t> certificate(const SimpleGraph& g) {
    auto c = canonical_form(g).certificate;
    c.push_back(static_cast<uint64_t>(g.order()));
    return c;
}

SimpleGraph canonical_graph(const SimpleGraph& g) {
    if (g.order() == 0) return g;
    return g.relabel(canonical_form(g).labeling);
}

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return certificate(a) == certificate(b);
}

size_t CertificateHash::operator()(const std::vector<uint64_t>& c) const {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (uint64_t x : c) h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

// ---------------------------------------------------------------- graph6

std::string to_graph6(const SimpleGraph& g) {
    int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6 encoder supports n <= 62");
    std::string out(1, static_cast<char>(63 + n));
    int acc = 0, bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out += static_cast<char>(63 + acc);
                acc = bits = 0;
            }
        }
    if (bits) out += static_cast<char>(63 + (acc << (6 - bits)));
    return out;
}

SimpleGraph from_graph6(const std::string& s) {
    if (s.empty() || s[0] < 63 || s[0] > 125) throw std::invalid_argument("bad graph6 header");
    int n = s[0] - 63;
    size_t need = (static_cast<size_t>(n) * static_cast<size_t>(n - 1) / 2 + 5) / 6;
    if (s.size() != need + 1) throw std::invalid_argument("bad graph6 length");
    SimpleGraph g(n);
    size_t pos = 1;
    int bit = 5;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            int v = s[pos] - 63;
            if (v < 0 || v > 63) throw std::invalid_argument("bad graph6 character");
            if ((v >> bit) & 1) g.add_edge(i, j);
            if (--bit < 0) {
                bit = 5;
                ++pos;
            }
        }
    return g;
}

// ---------------------------------------------------------------- subgraph matching

namespace {

struct Matcher {
    const SimpleGraph& host;
    const SimpleGraph& pat;
    std::vector<int> order;                  // pattern vertices in matching order
    std::vector<std::vector<int>> back;      // earlier-matched pattern neighbours
    std::vector<int> image;
    uint64_t used = 0;
    long count = 0;
    bool stop_at_first;

    Matcher(const SimpleGraph& h, const SimpleGraph& p, bool first) : host(h), pat(p), stop_at_first(first) {
        int n = p.order();
        std::vector<char> placed(static_cast<size_t>(n), 0);
        std::vector<int> links(static_cast<size_t>(n), 0);
        for (int step = 0; step < n; ++step) {
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[static_cast<size_t>(v)]) continue;
                if (best < 0 || links[static_cast<size_t>(v)] > links[static_cast<size_t>(best)] ||
                    (links[static_cast<size_t>(v)] == links[static_cast<size_t>(best)] && p.degree(v) > p.degree(best)))
                    best = v;
            }
            placed[static_cast<size_t>(best)] = 1;
            order.push_back(best);
            for (uint64_t a = p.neighbors(best); a; a &= a - 1) ++links[static_cast<size_t>(std::countr_zero(a))];
        }
        std::vector<int> pos(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
        back.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            for (uint64_t a = p.neighbors(order[static_cast<size_t>(i)]); a; a &= a - 1) {
                int u = std::countr_zero(a);
                if (pos[static_cast<size_t>(u)] < i) back[static_cast<size_t>(i)].push_back(u);
            }
        image.assign(static_cast<size_t>(n), -1);
    }

    bool rec(size_t i) {
        if (i == order.size()) {
            ++count;
            return stop_at_first;
        }
        int pv = order[i];
        uint64_t cand = host.order() == 64 ? ~uint64_t{0} : (uint64_t{1} << host.order()) - 1;
        for (int u : back[i]) cand &= host.neighbors(image[static_cast<size_t>(u)]);
        cand &= ~used;
        int need = pat.degree(pv);
        for (; cand; cand &= cand - 1) {
            int hv = std::countr_zero(cand);
            if (host.degree(hv) < need) continue;
            image[static_cast<size_t>(pv)] = hv;
            used |= uint64_t{1} << hv;
            bool done = rec(i + 1);
            used &= ~(uint64_t{1} << hv);
            image[static_cast<size_t>(pv)] = -1;
            if (done) return true;
        }
        return false;
    }
};

}  // namespace

bool contains_subgraph(const SimpleGraph& host, const SimpleGraph& pattern) {
    if (pattern.order() > host.order() || pattern.edge_count() > host.edge_count()) return false;
    if (pattern.order() == 0) return true;
    Matcher m(host, pattern, true);
    return m.rec(0);
}

long count_embeddings(const SimpleGraph& host, const SimpleGraph& pattern) {
    if (pattern.order() > host.order()) return 0;
    if (pattern.order() == 0) return 1;
    Matcher m(host, pattern, false);
    m.rec(0);
    return m.count;
}

bool contains_subgraph_bruteforce(const SimpleGraph& host, const SimpleGraph& pattern) {
    int n = host.order(), k = pattern.order();
    if (k > n) return false;
    auto pe = pattern.edges();
    std::vector<int> pick(static_cast<size_t>(k), -1);
    std::vector<char> used(static_cast<size_t>(n), 0);
    // enumerate all injective maps, check edges only at the leaves
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k) {
            for (auto [u, v] : pe)
                if (!host.has_edge(pick[static_cast<size_t>(u)], pick[static_cast<size_t>(v)])) return false;
            return true;
        }
        for (int h = 0; h < n; ++h) {
            if (used[static_cast<size_t>(h)]) continue;
            used[static_cast<size_t>(h)] = 1;
            pick[static_cast<size_t>(i)] = h;
            bool ok = self(self, i + 1);
            used[static_cast<size_t>(h)] = 0;
            if (ok) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

std::vector<std::vector<int>> automorphisms(const SimpleGraph& g) {
    std::vector<std::vector<int>> out;
    Matcher m(g, g, false);
    // reuse the matcher ordering, collecting every bijection
    std::vector<int> img(static_cast<size_t>(g.order()), -1);
    uint64_t used = 0;
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == m.order.size()) {
            out.push_back(img);
            return;
        }
        int pv = m.order[i];
        uint64_t cand = g.order() == 64 ? ~uint64_t{0} : (uint64_t{1} << g.order()) - 1;
        for (int u : m.back[i]) cand &= g.neighbors(img[static_cast<size_t>(u)]);
        cand &= ~used;
        for (; cand; cand &= cand - 1) {
            int hv = std::countr_zero(cand);
            if (g.degree(hv) != g.degree(pv)) continue;
            bool ok = true;
            // non-edges must map to non-edges
            for (size_t j = 0; j < i && ok; ++j) {
                int q = m.order[j];
                ok = g.has_edge(pv, q) == g.has_edge(hv, img[static_cast<size_t>(q)]);
            }
            if (!ok) continue;
            img[static_cast<size_t>(pv)] = hv;
            used |= uint64_t{1} << hv;
            self(self, i + 1);
            used &= ~(uint64_t{1} << hv);
            img[static_cast<size_t>(pv)] = -1;
        }
    };
    if (g.order() > 0) rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- standard graphs

SimpleGraph cycle_graph(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

SimpleGraph prism_graph(int m) {
    SimpleGraph g(2 * m);
    for (int i = 0; i < m; ++i) {
        g.add_edge(i, (i + 1) % m);
        g.add_edge(m + i, m + (i + 1) % m);
        g.add_edge(i, m + i);
    }
    return g;
}

SimpleGraph moebius_graph(int m) {
    SimpleGraph g(2 * m);
    for (int i = 0; i < 2 * m; ++i) g.add_edge(i, (i + 1) % (2 * m));
    for (int i = 0; i < m; ++i) g.add_edge(i, i + m);
    return g;
}

SimpleGraph complete_bipartite(int a, int b) {
    SimpleGraph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

SimpleGraph petersen_graph() {
    SimpleGraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, 5 + i);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

}  // namespace kzd
