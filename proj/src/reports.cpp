#include "kzd/reports.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace kzd {

using nlohmann::json;

namespace {

json config_json(const RunConfig& cfg) {
    return {{"catalog", cfg.catalog_path}, {"max_cosets", cfg.max_cosets},   {"cache_dir", cfg.cache_dir},
            {"jobs", cfg.jobs},            {"extended", cfg.extended},       {"witnesses", cfg.witnesses},
            {"no_oracle", cfg.disabled_oracles}};
}

}  // namespace

// ---------------------------------------------------------------- square relations

Table1Report run_table1(const RunConfig& cfg) {
    Table1Report rep;
    ClassifierConfig cc;
    cc.max_cosets = cfg.max_cosets;
    const auto& rels = table1_relations();
    for (size_t i = 0; i < rels.size(); ++i) {
        Table1Row r;
        r.row = static_cast<int>(i) + 1;
        r.relation = rels[i];
        r.verdict = classify(Presentation::parse(rels[i]), cc);
        if (r.verdict.eliminated()) {
            ++rep.eliminated;
        } else {
            rep.survivors.push_back(r.row);
            if (cfg.witnesses) r.witness = derive_x2_y3_witness(r.row);
        }
        rep.rows.push_back(std::move(r));
    }
    return rep;
}

std::string Table1Report::text() const {
    std::ostringstream os;
    for (const auto& r : rows) {
        os << std::setw(2) << r.row << "  " << std::left << std::setw(28) << r.relation << std::right << "  "
           << r.verdict.summary();
        if (r.witness)
            os << "  [x=" << r.witness->x.str() << ", y=" << r.witness->y.str() << ", "
               << (r.witness->form_xy ? "supp {1,x,y}" : "supp {1,y,y^-1 x}") << ": x^2 = y^3]";
        os << "\n";
    }
    os << "rows: " << rows.size() << ", eliminated: " << eliminated << ", surviving: " << survivors.size() << " {";
    for (size_t i = 0; i < survivors.size(); ++i) os << (i ? "," : "") << survivors[i];
    os << "}\n";
    return os.str();
}

std::string Table1Report::csv() const {
    std::ostringstream os;
    os << "row,relation,verdict,witness_x,witness_y\n";
    for (const auto& r : rows)
        os << r.row << "," << r.relation << "," << verdict_name(r.verdict.verdict) << ","
           << (r.witness ? r.witness->x.str() : "") << "," << (r.witness ? r.witness->y.str() : "") << "\n";
    return os.str();
}

std::string Table1Report::json(const RunConfig& cfg) const {
    nlohmann::json j;
    j["config"] = config_json(cfg);
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json rj = {{"row", r.row},
                             {"relation", r.relation},
                             {"verdict", verdict_name(r.verdict.verdict)},
                             {"summary", r.verdict.summary()},
                             {"route_log", r.verdict.route_log}};
        if (r.witness)
            rj["witness"] = {{"x", r.witness->x.str()},
                             {"y", r.witness->y.str()},
                             {"form", r.witness->form_xy ? "1,x,y" : "1,y,y^-1x"},
                             {"conjugates_used", r.witness->conjugates_used}};
        j["rows"].push_back(rj);
    }
    j["eliminated"] = eliminated;
    j["survivors"] = survivors;
    return j.dump(2);
}

// ---------------------------------------------------------------- census

Table3Expected Table3Expected::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    Table3Expected t;
    t.n = j.at("n").get<std::vector<int>>();
    t.total = j.at("total").get<std::vector<long>>();
    t.prism = j.at("prism").get<std::vector<long>>();
    t.moebius = j.at("moebius").get<std::vector<long>>();
    t.remains = j.at("remains").get<std::vector<long>>();
    for (const auto& r : j.at("rows"))
        t.rows.push_back({r.at("row").get<int>(), r.at("name").get<std::string>(), r.at("removed").get<std::vector<long>>()});
    return t;
}

std::string Table3Expected::default_path() { return std::string(KZD_DATA_DIR) + "/table3.json"; }

int Table3Expected::column(int nn) const {
    auto it = std::find(n.begin(), n.end(), nn);
    return it == n.end() ? -1 : static_cast<int>(it - n.begin());
}

std::vector<NamedPattern> table3_patterns(const Catalog& cat) {
    std::vector<NamedPattern> out;
    for (const CatalogEntry* e : cat.table3()) out.push_back({e->name, e->graph()});
    return out;
}

namespace {

PipelineResult parallel_pipeline(int n, const std::vector<SimpleGraph>& census, const std::vector<NamedPattern>& pats,
                                 int jobs) {
    if (jobs <= 1 || census.size() < 64) return run_pipeline(n, census, pats);
    size_t chunk = (census.size() + static_cast<size_t>(jobs) - 1) / static_cast<size_t>(jobs);
    std::vector<std::future<PipelineResult>> parts;
    for (size_t lo = 0; lo < census.size(); lo += chunk) {
        size_t hi = std::min(census.size(), lo + chunk);
        parts.push_back(std::async(std::launch::async, [&, lo, hi] {
            std::vector<SimpleGraph> slice(census.begin() + static_cast<long>(lo), census.begin() + static_cast<long>(hi));
            return run_pipeline(n, slice, pats);
        }));
    }
    PipelineResult res;
    res.n = n;
    res.removed.assign(pats.size(), 0);
    for (auto& f : parts) {
        PipelineResult p = f.get();
        res.total += p.total;
        for (size_t i = 0; i < pats.size(); ++i) res.removed[i] += p.removed[i];
        res.prism_hits += p.prism_hits;
        res.moebius_hits += p.moebius_hits;
        res.remains += p.remains;
        res.removed_by.insert(res.removed_by.end(), p.removed_by.begin(), p.removed_by.end());
        res.survivors.insert(res.survivors.end(), p.survivors.begin(), p.survivors.end());
    }
    return res;
}

}  // namespace

CensusReport run_census(const std::vector<int>& ns, const Catalog& cat, const Table3Expected* expected,
                        const RunConfig& cfg) {
    CensusReport rep;
    auto pats = table3_patterns(cat);
    for (const auto& p : pats) rep.pattern_names.push_back(p.name);
    for (int n : ns) {
        CensusColumn col;
        col.result = parallel_pipeline(n, generate(n, cfg.cache_dir), pats, cfg.jobs);
        int c = expected ? expected->column(n) : -1;
        if (c >= 0) {
            col.checked = true;
            auto cmp = [&](const std::string& what, long got, long want) {
                if (got != want)
                    col.mismatches.push_back(what + ": got " + std::to_string(got) + ", expected " + std::to_string(want));
            };
            const auto& r = col.result;
            cmp("Total", r.total, expected->total[c]);
            for (size_t i = 0; i < expected->rows.size() && i < r.removed.size(); ++i)
                cmp("row " + std::to_string(expected->rows[i].row) + " " + expected->rows[i].name, r.removed[i],
                    expected->rows[i].removed[static_cast<size_t>(c)]);
            cmp("L_n", r.prism_hits, expected->prism[c]);
            cmp("M_n", r.moebius_hits, expected->moebius[c]);
            cmp("Remains", r.remains, expected->remains[c]);
        }
        rep.columns.push_back(std::move(col));
    }
    return rep;
}

bool CensusReport::ok() const {
    for (const auto& c : columns)
        if (!c.mismatches.empty()) return false;
    return true;
}

std::string CensusReport::text() const {
    std::ostringstream os;
    os << std::left << std::setw(34) << "n" << std::right;
    for (const auto& c : columns) os << std::setw(8) << c.result.n;
    os << "\n" << std::left << std::setw(34) << "Total" << std::right;
    for (const auto& c : columns) os << std::setw(8) << c.result.total;
    os << "\n";
    for (size_t i = 0; i < pattern_names.size(); ++i) {
        os << std::setw(2) << i + 1 << ") " << std::left << std::setw(30) << pattern_names[i] << std::right;
        for (const auto& c : columns) os << std::setw(8) << c.result.removed[i];
        os << "\n";
    }
    auto line = [&](const char* label, auto get) {
        os << std::left << std::setw(34) << label << std::right;
        for (const auto& c : columns) os << std::setw(8) << get(c.result);
        os << "\n";
    };
    line("Isomorphic to L_n", [](const PipelineResult& r) { return r.prism_hits; });
    line("Isomorphic to M_n", [](const PipelineResult& r) { return r.moebius_hits; });
    line("Remains", [](const PipelineResult& r) { return r.remains; });
    for (const auto& c : columns)
        for (const auto& m : c.mismatches) os << "MISMATCH n=" << c.result.n << " " << m << "\n";
    return os.str();
}

std::string CensusReport::csv() const {
    std::ostringstream os;
    os << "row";
    for (const auto& c : columns) os << "," << c.result.n;
    os << "\nTotal";
    for (const auto& c : columns) os << "," << c.result.total;
    os << "\n";
    for (size_t i = 0; i < pattern_names.size(); ++i) {
        os << pattern_names[i];
        for (const auto& c : columns) os << "," << c.result.removed[i];
        os << "\n";
    }
    os << "L_n";
    for (const auto& c : columns) os << "," << c.result.prism_hits;
    os << "\nM_n";
    for (const auto& c : columns) os << "," << c.result.moebius_hits;
    os << "\nRemains";
    for (const auto& c : columns) os << "," << c.result.remains;
    os << "\n";
    return os.str();
}

std::string CensusReport::json(const RunConfig& cfg, const std::string& catalog_hash) const {
    nlohmann::json j;
    j["config"] = config_json(cfg);
    j["catalog_hash"] = catalog_hash;
    j["patterns"] = pattern_names;
    j["columns"] = nlohmann::json::array();
    for (const auto& c : columns) {
        j["columns"].push_back({{"n", c.result.n},
                                {"total", c.result.total},
                                {"removed", c.result.removed},
                                {"prism", c.result.prism_hits},
                                {"moebius", c.result.moebius_hits},
                                {"remains", c.result.remains},
                                {"checked", c.checked},
                                {"mismatches", c.mismatches}});
    }
    j["ok"] = ok();
    return j.dump(2);
}

// ---------------------------------------------------------------- catalog verification

CatalogReport run_catalog_verify(const Catalog& cat, const RunConfig& cfg) {
    CatalogReport rep;
    CatalogCheckOptions opt;
    opt.enumeration.classifier.max_cosets = cfg.max_cosets;
    std::vector<const CatalogEntry*> todo;
    for (const auto& e : cat.entries()) todo.push_back(&e);
    rep.checks.resize(todo.size());
    size_t jobs = static_cast<size_t>(std::max(1, cfg.jobs));
    for (size_t lo = 0; lo < todo.size(); lo += jobs) {
        std::vector<std::future<EntryCheck>> fs;
        for (size_t i = lo; i < std::min(todo.size(), lo + jobs); ++i)
            fs.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                    [&, i] { return check_entry(*todo[i], opt); }));
        for (size_t i = 0; i < fs.size(); ++i) rep.checks[lo + i] = fs[i].get();
    }
    return rep;
}

bool CatalogReport::ok() const {
    for (const auto& c : checks)
        if (!c.provisional && !c.pass()) return false;
    return true;
}

std::string CatalogReport::text() const {
    std::ostringstream os;
    for (bool prov : {false, true}) {
        os << (prov ? "provisional entries:\n" : "entries:\n");
        for (const auto& c : checks) {
            if (c.provisional != prov) continue;
            os << "  " << (c.pass() ? "PASS " : "FAIL ") << std::left << std::setw(30) << c.name << std::right;
            if (c.counted)
                os << " classes " << c.report.total_classes << ", eliminated " << c.report.eliminated << ", surviving "
                   << c.report.surviving.size() << (c.total_ok ? "" : " [total mismatch]")
                   << (c.eliminated_ok ? "" : " [eliminated mismatch]");
            for (const auto& p : c.problems) os << " [" << p << "]";
            os << "\n";
        }
    }
    return os.str();
}

std::string CatalogReport::csv() const {
    std::ostringstream os;
    os << "name,provisional,pass,classes,eliminated,surviving\n";
    for (const auto& c : checks) {
        os << '"' << c.name << "\"," << c.provisional << "," << c.pass() << ",";
        if (c.counted) os << c.report.total_classes << "," << c.report.eliminated << "," << c.report.surviving.size();
        else os << ",,";
        os << "\n";
    }
    return os.str();
}

std::string CatalogReport::json(const RunConfig& cfg, const std::string& catalog_hash) const {
    nlohmann::json j;
    j["config"] = config_json(cfg);
    j["catalog_hash"] = catalog_hash;
    j["entries"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json e = {{"name", c.name},     {"provisional", c.provisional}, {"pass", c.pass()},
                            {"structural_ok", c.structural_ok}, {"problems", c.problems}, {"counted", c.counted},
                            {"budget_exceeded", c.budget_exceeded}};
        if (c.counted) {
            e["classes"] = c.report.total_classes;
            e["raw_labelings"] = c.report.raw_labelings;
            e["eliminated"] = c.report.eliminated;
            e["surviving"] = c.report.surviving.size();
            e["by_route"] = c.report.by_route;
        }
        j["entries"].push_back(e);
    }
    j["ok"] = ok();
    return j.dump(2);
}

}  // namespace kzd
