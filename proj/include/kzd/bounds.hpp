#pragma once

#include <set>
#include <string>
#include <vector>

#include "kzd/graph.hpp"

namespace kzd {

enum class Regime { Kemperman, Hamidoune };

struct ProductSetBound {
    int b = 0, c = 0;
    Regime regime = Regime::Kemperman;
    int bound = 0;
};

struct HamidouneContext {
    bool one_in_c = true;
    bool nonabelian = true;
    bool torsion_free = true;
};

// Kemperman: |BC| >= |B| + |C| - 1 in a torsion-free group.
// Hamidoune: |BC| >= |B| + |C| + 1 when |C| >= 4, 1 in C, |B| >= 3 and the group is nonabelian.
// Throws std::invalid_argument when the regime's preconditions fail.
ProductSetBound product_bound(int b, int c, Regime regime, const HamidouneContext& ctx = {});

// External results used as axioms. Names: "kemperman", "hamidoune", "odd-unit" (no F2 unit with
// supports 3 and the listed sizes), "census-bound" (no F2 zero divisor with supports 3 and < 20).
struct OracleSet {
    std::set<std::string> disabled;
    // Sizes at which "odd-unit" applies. The literal statement covers odd sizes >= 13; the case
    // analysis applies it at 3, 7 and 9.
    enum class OddUnitReading { AsApplied, Literal } odd_unit_reading = OddUnitReading::AsApplied;

    bool enabled(const std::string& name) const { return disabled.count(name) == 0; }
    bool odd_unit_covers(int size) const;
};

struct TrailStep {
    std::string kind;    // "bound", "pigeonhole", "profiles", "reduction", "oracle", "search"
    std::string cites;   // licensing result or arithmetic identity
    std::string detail;
    bool blocked = false;  // needed an oracle that is disabled or does not apply
};

enum class TrailVerdict { Infeasible, Open };

struct ContradictionTrail {
    enum class Mode { ZeroDivisor, Unit } mode = Mode::ZeroDivisor;
    int n = 0;
    std::vector<TrailStep> steps;
    TrailVerdict verdict = TrailVerdict::Open;
    std::vector<std::string> oracles_used;

    bool infeasible() const { return verdict == TrailVerdict::Infeasible; }
    std::string text() const;
    std::string json() const;
};

// Multisets of block sizes (descending) partitioning 3n cells into `blocks` blocks with sizes >= min_size.
std::vector<std::vector<int>> block_profiles(int cells, int blocks, int min_size);

ContradictionTrail zero_divisor_infeasible(int n, const OracleSet& oracles = {});
ContradictionTrail unit_infeasible(int n, const OracleSet& oracles = {});

struct Order8Search {
    std::vector<SimpleGraph> completions;
    std::vector<std::string> log;  // branch decisions
    long nodes = 0;
};

// The seed subgraph H on g1..g8 (vertices 0..7): triangle g1 g3 g4 with g1-g2, g3-g7, g3-g8, g4-g5, g4-g6.
SimpleGraph unit_order8_seed();
// Completes H to a simple graph with degrees g1 = 3, g3 = g4 = 4, others 3; exactly one triangle;
// no K_{2,3} unless `ban_k23` is false.
Order8Search search_unit_order8(bool ban_k23 = true);

struct BoundsReport {
    std::vector<ContradictionTrail> zero_divisor;  // n = 3..9
    std::vector<ContradictionTrail> unit;          // n = 3..8
    bool all_infeasible() const;
    std::string text() const;
    std::string json() const;
};

BoundsReport run_bounds(const OracleSet& oracles = {});

}  // namespace kzd
