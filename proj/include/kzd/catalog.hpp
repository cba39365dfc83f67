#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kzd/cycles.hpp"
#include "kzd/graph.hpp"

namespace kzd {

struct ExpectedCounts {
    long total = 0, eliminated = 0, surviving = 0;
};

struct CatalogEntry {
    std::string name;
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> cycles;
    std::optional<ExpectedCounts> expected;
    // "finite_and_solvable", "finite_or_solvable", "solvable", "vacuous", "classifier" or "theorem".
    std::string elimination_mode;
    bool provisional = false;
    std::optional<int> table3_row;
    std::string field = "F2";  // "F2" or "any"
    std::string note;

    SimpleGraph graph() const;
    CycleConfig config() const;
    // Whether the expected eliminated count is a contract (every route was finite and solvable).
    bool eliminated_is_exact() const { return elimination_mode == "finite_and_solvable"; }
};

class Catalog {
public:
    // Throws std::runtime_error on unreadable input, std::invalid_argument on schema violations.
    static Catalog load(const std::string& path);
    static Catalog parse(const std::string& json_text);
    static std::string default_path();

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    const CatalogEntry* find(const std::string& name) const;
    // Filter-pipeline rows in order (entries carrying a row number).
    std::vector<const CatalogEntry*> table3() const;
    std::string version_hash() const;  // FNV-1a of the canonical serialization
    std::string to_json() const;

private:
    int version_ = 1;
    std::vector<CatalogEntry> entries_;
};

struct EntryCheck {
    std::string name;
    bool provisional = false;
    bool structural_ok = false;  // simple, connected, max degree <= 3, triangle-free unless C3
    std::vector<std::string> problems;
    bool counted = false;  // counts were computed
    bool budget_exceeded = false;  // enumeration stopped at the labeling budget
    ConfigurationReport report;
    bool total_ok = false, eliminated_ok = false;
    bool pass() const { return structural_ok && !budget_exceeded && (!counted || (total_ok && eliminated_ok)); }
};

struct CatalogCheckOptions {
    EnumerationOptions enumeration = [] {
        EnumerationOptions o;
        o.max_raw = 4000000;
        return o;
    }();
    bool count = true;
};

std::vector<std::string> structural_problems(const CatalogEntry& e);
EntryCheck check_entry(const CatalogEntry& e, const CatalogCheckOptions& opt);

}  // namespace kzd
