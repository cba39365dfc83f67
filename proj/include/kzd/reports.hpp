#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kzd/catalog.hpp"
#include "kzd/census.hpp"
#include "kzd/classifier.hpp"

namespace kzd {

struct RunConfig {
    std::string catalog_path;
    long max_cosets = 100000;
    std::string cache_dir;
    int jobs = 1;
    bool extended = false;
    bool witnesses = false;
    std::vector<std::string> disabled_oracles;
    std::string format = "text";  // "text", "json" or "csv"
};

// ---- square relations
struct Table1Row {
    int row = 0;
    std::string relation;
    Classification verdict;
    std::optional<X2Y3Witness> witness;
};

struct Table1Report {
    std::vector<Table1Row> rows;
    int eliminated = 0;
    std::vector<int> survivors;
    std::string text() const;
    std::string csv() const;
    std::string json(const RunConfig& cfg) const;
};

Table1Report run_table1(const RunConfig& cfg);

// ---- census and filtering
struct Table3Expected {
    std::vector<int> n;
    std::vector<long> total, prism, moebius, remains;
    struct Row {
        int row;
        std::string name;
        std::vector<long> removed;
    };
    std::vector<Row> rows;

    static Table3Expected load(const std::string& path);
    static std::string default_path();
    int column(int n) const;  // -1 if absent
};

struct CensusColumn {
    PipelineResult result;
    bool checked = false;  // an expected column exists
    std::vector<std::string> mismatches;
};

struct CensusReport {
    std::vector<std::string> pattern_names;
    std::vector<CensusColumn> columns;
    bool ok() const;
    std::string text() const;
    std::string csv() const;
    std::string json(const RunConfig& cfg, const std::string& catalog_hash) const;
};

// Filter-pipeline patterns in row order from the catalog.
std::vector<NamedPattern> table3_patterns(const Catalog& cat);
CensusReport run_census(const std::vector<int>& ns, const Catalog& cat, const Table3Expected* expected,
                        const RunConfig& cfg);

// ---- catalog verification
struct CatalogReport {
    std::vector<EntryCheck> checks;
    bool ok() const;  // every non-provisional entry passes
    std::string text() const;
    std::string csv() const;
    std::string json(const RunConfig& cfg, const std::string& catalog_hash) const;
};

CatalogReport run_catalog_verify(const Catalog& cat, const RunConfig& cfg);

}  // namespace kzd
