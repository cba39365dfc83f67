#include "kzd/catalog.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace kzd {

using nlohmann::json;

SimpleGraph CatalogEntry::graph() const { return SimpleGraph::from_edges(vertices, edges); }

CycleConfig CatalogEntry::config() const { return CycleConfig(vertices, edges, cycles); }

namespace {

const std::set<std::string> kModes = {"finite_and_solvable", "finite_or_solvable", "solvable", "vacuous", "classifier",
                                      "theorem"};

CatalogEntry entry_from_json(const json& j) {
    auto need = [&](const char* k) -> const json& {
        if (!j.contains(k)) throw std::invalid_argument(std::string("catalog entry missing '") + k + "'");
        return j.at(k);
    };
    CatalogEntry e;
    try {
        e.name = need("name").get<std::string>();
        e.vertices = need("vertices").get<int>();
        for (const auto& ed : need("edges")) {
            if (!ed.is_array() || ed.size() != 2) throw std::invalid_argument("edge must be a pair");
            e.edges.emplace_back(ed[0].get<int>(), ed[1].get<int>());
        }
        e.cycles = need("cycles").get<std::vector<std::vector<int>>>();
        const json& ex = need("expected");
        if (!ex.is_null())
            e.expected = ExpectedCounts{ex.at("total").get<long>(), ex.at("eliminated").get<long>(),
                                        ex.at("surviving").get<long>()};
        e.elimination_mode = need("elimination_mode").get<std::string>();
        e.provisional = need("provisional").get<bool>();
        if (j.contains("table3_row") && !j.at("table3_row").is_null()) e.table3_row = j.at("table3_row").get<int>();
        if (j.contains("field")) e.field = j.at("field").get<std::string>();
        if (j.contains("note")) e.note = j.at("note").get<std::string>();
    } catch (const json::exception& ex) {
        throw std::invalid_argument("catalog entry '" + e.name + "': " + ex.what());
    }
    if (!kModes.count(e.elimination_mode))
        throw std::invalid_argument("catalog entry '" + e.name + "': unknown elimination_mode");
    if (e.field != "F2" && e.field != "any") throw std::invalid_argument("catalog entry '" + e.name + "': bad field");
    if (e.vertices < 1 || e.vertices > SimpleGraph::kMaxVertices)
        throw std::invalid_argument("catalog entry '" + e.name + "': bad vertex count");
    for (auto [u, v] : e.edges)
        if (u < 0 || v < 0 || u >= e.vertices || v >= e.vertices || u == v)
            throw std::invalid_argument("catalog entry '" + e.name + "': bad edge");
    return e;
}

json entry_to_json(const CatalogEntry& e) {
    json j;
    j["name"] = e.name;
    j["vertices"] = e.vertices;
    j["edges"] = json::array();
    for (auto [u, v] : e.edges) j["edges"].push_back({u, v});
    j["cycles"] = e.cycles;
    if (e.expected)
        j["expected"] = {{"total", e.expected->total}, {"eliminated", e.expected->eliminated},
                         {"surviving", e.expected->surviving}};
    else
        j["expected"] = nullptr;
    j["elimination_mode"] = e.elimination_mode;
    j["provisional"] = e.provisional;
    j["table3_row"] = e.table3_row ? json(*e.table3_row) : json(nullptr);
    j["field"] = e.field;
    if (!e.note.empty()) j["note"] = e.note;
    return j;
}

}  // namespace

Catalog Catalog::parse(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("catalog: ") + ex.what());
    }
    if (!j.is_object() || !j.contains("entries") || !j.at("entries").is_array())
        throw std::invalid_argument("catalog: expected an object with an 'entries' array");
    Catalog c;
    c.version_ = j.value("version", 1);
    std::set<std::string> names;
    for (const auto& ej : j.at("entries")) {
        CatalogEntry e = entry_from_json(ej);
        if (!names.insert(e.name).second) throw std::invalid_argument("catalog: duplicate entry '" + e.name + "'");
        c.entries_.push_back(std::move(e));
    }
    return c;
}

Catalog Catalog::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read catalog " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string Catalog::default_path() { return std::string(KZD_DATA_DIR) + "/catalog.json"; }

const CatalogEntry* Catalog::find(const std::string& name) const {
    for (const auto& e : entries_)
        if (e.name == name) return &e;
    return nullptr;
}

std::vector<const CatalogEntry*> Catalog::table3() const {
    std::vector<const CatalogEntry*> out;
    for (const auto& e : entries_)
        if (e.table3_row) out.push_back(&e);
    std::sort(out.begin(), out.end(), [](auto a, auto b) { return *a->table3_row < *b->table3_row; });
    return out;
}

std::string Catalog::to_json() const {
    json j;
    j["version"] = version_;
    j["entries"] = json::array();
    for (const auto& e : entries_) j["entries"].push_back(entry_to_json(e));
    return j.dump(1);
}

std::string Catalog::version_hash() const {
    std::string s = to_json();
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<std::string> structural_problems(const CatalogEntry& e) {
    std::vector<std::string> p;
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : e.edges)
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second) p.push_back("repeated edge");
    SimpleGraph g = e.graph();
    if (!g.is_connected()) p.push_back("not connected");
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 3) p.push_back("vertex " + std::to_string(v) + " has degree above 3");
    if (e.name != "C3" && !g.is_triangle_free()) p.push_back("contains a triangle");
    try {
        CycleConfig cfg = e.config();
        std::set<std::pair<int, int>> covered;
        for (const auto& c : e.cycles)
            for (size_t i = 0; i < c.size(); ++i) {
                int a = c[i], b = c[(i + 1) % c.size()];
                covered.insert({std::min(a, b), std::max(a, b)});
            }
        if (covered.size() != seen.size()) p.push_back("cycles do not cover every edge");
    } catch (const std::invalid_argument& ex) {
        p.push_back(ex.what());
    }
    if (e.expected && e.expected->total != e.expected->eliminated + e.expected->surviving && e.note.empty())
        p.push_back("expected counts do not add up");
    return p;
}

EntryCheck check_entry(const CatalogEntry& e, const CatalogCheckOptions& opt) {
    EntryCheck c;
    c.name = e.name;
    c.provisional = e.provisional;
    c.problems = structural_problems(e);
    c.structural_ok = c.problems.empty();
    if (!c.structural_ok || !opt.count || !e.expected || e.cycles.empty()) return c;
    try {
        c.report = analyze_configuration(e.config(), opt.enumeration);
    } catch (const std::length_error& ex) {
        c.budget_exceeded = true;
        c.problems.push_back(std::string("enumeration budget exceeded: ") + ex.what());
        return c;
    }
    c.counted = true;
    c.total_ok = c.report.total_classes == e.expected->total;
    c.eliminated_ok = !e.eliminated_is_exact() || c.report.eliminated == e.expected->eliminated;
    return c;
}

}  // namespace kzd
