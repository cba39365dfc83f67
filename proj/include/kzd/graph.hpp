#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kzd {

// Simple undirected graph on at most 64 vertices, adjacency as bitsets.
class SimpleGraph {
public:
    static constexpr int kMaxVertices = 64;

    SimpleGraph() = default;
    explicit SimpleGraph(int n);
    static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const { return (adj_[static_cast<size_t>(u)] >> v) & 1u; }
    uint64_t neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    bool is_regular(int d) const;
    bool is_connected() const;
    bool is_triangle_free() const;
    int triangle_count() const;
    int girth() const;  // 0 for forests

    SimpleGraph relabel(const std::vector<int>& perm) const;  // vertex v -> perm[v]

    bool operator==(const SimpleGraph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    std::vector<uint64_t> adj_;
};

// Canonical labeling by colour refinement plus individualization with automorphism pruning.
struct CanonicalForm {
    std::vector<int> labeling;       // vertex v -> canonical position
    std::vector<uint64_t> certificate;  // adjacency rows of the canonical graph
    long automorphisms_found = 0;
    long leaves = 0;
};

CanonicalForm canonical_form(const SimpleGraph& g);
std::vector<uint64_t> certificate(const SimpleGraph& g);
SimpleGraph canonical_graph(const SimpleGraph& g);
bool isomorphic(const SimpleGraph& a, const SimpleGraph& b);

struct CertificateHash {
    size_t operator()(const std::vector<uint64_t>& c) const;
};

std::string to_graph6(const SimpleGraph& g);
SimpleGraph from_graph6(const std::string& s);  // throws std::invalid_argument

// Non-induced subgraph containment (injective edge-preserving vertex map).
bool contains_subgraph(const SimpleGraph& host, const SimpleGraph& pattern);
// Number of injective edge-preserving maps (for cross-checks).
long count_embeddings(const SimpleGraph& host, const SimpleGraph& pattern);
// Exhaustive reference implementation over all injective maps (small graphs only).
bool contains_subgraph_bruteforce(const SimpleGraph& host, const SimpleGraph& pattern);

// Automorphisms of g (all, by backtracking); intended for small graphs.
std::vector<std::vector<int>> automorphisms(const SimpleGraph& g);

SimpleGraph cycle_graph(int n);
SimpleGraph prism_graph(int m);    // circular ladder L_{2m}
SimpleGraph moebius_graph(int m);  // Moebius ladder M_{2m}
SimpleGraph complete_bipartite(int a, int b);
SimpleGraph petersen_graph();

}  // namespace kzd
