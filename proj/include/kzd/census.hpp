#pragma once

#include <map>
#include <string>
#include <vector>

#include "kzd/graph.hpp"

namespace kzd {

// Connected cubic graphs on n vertices up to isomorphism, canonical and sorted by certificate.
// Built by edge insertion from order n-2 (plus rings of diamonds); triangle_free_only filters
// the final level.
std::vector<SimpleGraph> generate_connected_cubic(int n, bool triangle_free_only);

// Connected cubic triangle-free graphs; n even, 4 <= n <= 20. Uses cache_dir when nonempty.
std::vector<SimpleGraph> generate(int n, const std::string& cache_dir = "");

// Brute-force reference for small n: all labelled cubic graphs reduced up to isomorphism.
std::vector<SimpleGraph> generate_bruteforce(int n, bool triangle_free = true);

void write_graph6_file(const std::string& path, const std::vector<SimpleGraph>& graphs);
std::vector<SimpleGraph> read_graph6_file(const std::string& path);

enum class LadderKind { Prism, Moebius, Neither };
struct LadderResult {
    LadderKind kind = LadderKind::Neither;
    int m = 0;  // number of rungs
};
LadderResult recognize_ladder(const SimpleGraph& g);

struct NamedPattern {
    std::string name;
    SimpleGraph graph;
};

struct PipelineResult {
    int n = 0;
    long total = 0;
    std::vector<long> removed;  // per pattern, in order
    long prism_hits = 0;
    long moebius_hits = 0;
    long remains = 0;
    std::vector<std::string> removed_by;  // per census graph
    std::vector<SimpleGraph> survivors;
};

PipelineResult run_pipeline(int n, const std::vector<SimpleGraph>& census, const std::vector<NamedPattern>& patterns);

}  // namespace kzd
