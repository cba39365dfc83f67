#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kzd/classifier.hpp"
#include "kzd/graph.hpp"
#include "kzd/word.hpp"

namespace kzd {

// Port labels: 0 is the identity of supp(alpha), 2 is h2, 3 is h3.
constexpr int8_t kLabels[3] = {0, 2, 3};
Word label_word(int8_t label);
std::string label_name(int8_t label);

// A small graph together with the cycles whose relations are tracked.
class CycleConfig {
public:
    // Validates: simple graph, every cycle is a closed walk on distinct vertices along edges,
    // max degree <= 3. Throws std::invalid_argument.
    CycleConfig(int n, std::vector<std::pair<int, int>> edges, std::vector<std::vector<int>> cycles);
    static CycleConfig single_cycle(int k);

    int order() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<std::vector<int>>& cycles() const { return cycles_; }
    int edge_index(int u, int v) const;  // -1 if absent
    SimpleGraph graph() const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> cycles_;
    std::vector<std::vector<int>> index_;
};

// Two labels per edge: entry 2e is the label at edges()[e].first, entry 2e+1 at .second.
using PortLabeling = std::vector<int8_t>;

enum class LabelMode {
    ZeroDivisorF2,  // edge endpoints differ and the ports at each vertex are distinct
    GeneralField,   // edge endpoints differ
};

// Label at vertex u of edge {u, v}.
int8_t port(const CycleConfig& cfg, const PortLabeling& lab, int u, int v);
bool labeling_valid(const CycleConfig& cfg, const PortLabeling& lab, LabelMode mode);

// The tuple [a1, b1, ..., ak, bk] read along cycle i, and its relation (a1^-1 b1)...(ak^-1 bk).
std::vector<int8_t> cycle_tuple(const CycleConfig& cfg, const PortLabeling& lab, size_t cycle);
Word tuple_relation(const std::vector<int8_t>& tuple);
Word cycle_relation(const CycleConfig& cfg, const PortLabeling& lab, size_t cycle);

// One relator per cycle; identity relators dropped. Throws std::domain_error when every
// relator is trivial (the configuration forces nothing).
Presentation relations_of(const PortLabeling& lab, const CycleConfig& cfg);

// Graph automorphisms that map the set of tracked cycles onto itself.
std::vector<std::vector<int>> cycle_automorphisms(const CycleConfig& cfg);
PortLabeling act(const CycleConfig& cfg, const std::vector<int>& perm, const PortLabeling& lab);

struct TupleClass {
    PortLabeling representative;  // least member of the orbit
    long orbit_size = 0;
    std::vector<Word> relations;  // per cycle, cyclic canonical form
};

struct EnumerationOptions {
    LabelMode mode = LabelMode::ZeroDivisorF2;
    // Keep only labelings in which no single cycle relation is eliminated on its own.
    bool surviving_cycles_only = false;
    // Abort with std::length_error once more than this many labelings are visited (0: no limit).
    long max_raw = 0;
    ClassifierConfig classifier;
};

long count_raw_labelings(const CycleConfig& cfg, const EnumerationOptions& opt);
std::vector<TupleClass> enumerate_labelings(const CycleConfig& cfg, const EnumerationOptions& opt);
std::vector<TupleClass> enumerate_labelings(const CycleConfig& cfg, LabelMode mode);

struct ConfigurationReport {
    long raw_labelings = 0;
    long total_classes = 0;
    long eliminated = 0;
    std::map<std::string, long> by_route;  // verdict name -> count
    std::vector<TupleClass> surviving;
    std::vector<Classification> surviving_verdicts;
};

ConfigurationReport analyze_configuration(const CycleConfig& cfg, const EnumerationOptions& opt);

// Caches single-relator verdicts by cyclic canonical form.
class RelationCache {
public:
    explicit RelationCache(ClassifierConfig cfg = {}) : cfg_(cfg) {}
    const Classification& classify_word(const Word& w);
    Classification classify_set(const std::vector<Word>& ws);

private:
    ClassifierConfig cfg_;
    std::map<Word, Classification> single_;
    std::map<std::string, Classification> joint_;
};

// Two squares sharing one edge: vertices g_i=0, g_j=1, g_k=2, g_l=3, g_m=4, g_p=5.
CycleConfig two_squares_one_edge();

// The six tuple pairs for two squares with one common edge, each tuple read from the shared
// edge: C = [a1,b1,...,a4,b4] over g_i,g_j,g_k,g_l and C' over g_i,g_j,g_m,g_p.
const std::vector<std::pair<std::array<int8_t, 8>, std::array<int8_t, 8>>>& shared_edge_seeds();

enum class LadderClosure { Prism, Moebius };

struct LadderTrail {
    int seed = 0;          // 1..6
    bool swapped = false;  // first square takes the second tuple of the seed
    std::vector<std::array<int8_t, 8>> squares;  // tuple of each square read from its right rung
    Word closing_word;  // forced to be trivial in G
    Classification verdict;
    bool contradiction = false;
};

// Propagates every seed along m chained squares and closes the strip.
std::vector<LadderTrail> verify_ladder_exclusion(int m, LadderClosure closure);

}  // namespace kzd
