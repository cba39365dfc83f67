#include "kzd/kzd.h"

#include <exception>
#include <sstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "kzd/bounds.hpp"
#include "kzd/reports.hpp"

struct kzd_config {
    kzd::RunConfig run;
};

struct kzd_report {
    std::string output;
    bool ok = true;
};

namespace {

thread_local std::string g_error;

kzd_status fail(kzd_status s, const std::string& msg) {
    g_error = msg;
    return s;
}

// Runs body, mapping exceptions onto status codes.
template <class F>
kzd_status guarded(F&& body) {
    try {
        g_error.clear();
        return body();
    } catch (const std::invalid_argument& e) {
        return fail(KZD_EINVAL, e.what());
    } catch (const std::runtime_error& e) {
        return fail(KZD_EIO, e.what());
    } catch (const std::exception& e) {
        return fail(KZD_EINTERNAL, e.what());
    } catch (...) {
        return fail(KZD_EINTERNAL, "unknown error");
    }
}

kzd::Catalog load_catalog(const kzd::RunConfig& cfg) {
    return kzd::Catalog::load(cfg.catalog_path.empty() ? kzd::Catalog::default_path() : cfg.catalog_path);
}

kzd_status emit(kzd_report** out, std::string text, bool ok) {
    auto* r = new kzd_report;
    r->output = std::move(text);
    r->ok = ok;
    *out = r;
    return ok ? KZD_OK : KZD_MISMATCH;
}

kzd::OracleSet oracles_of(const kzd::RunConfig& cfg) {
    kzd::OracleSet o;
    for (const auto& n : cfg.disabled_oracles) o.disabled.insert(n);
    return o;
}

std::string bounds_csv(const kzd::BoundsReport& rep) {
    std::ostringstream os;
    os << "mode,n,verdict,oracles\n";
    auto put = [&](const kzd::ContradictionTrail& t) {
        os << (t.mode == kzd::ContradictionTrail::Mode::Unit ? "unit" : "zero-divisor") << "," << t.n << ","
           << (t.infeasible() ? "infeasible" : "open") << ",";
        for (size_t i = 0; i < t.oracles_used.size(); ++i) os << (i ? ";" : "") << t.oracles_used[i];
        os << "\n";
    };
    for (const auto& t : rep.zero_divisor) put(t);
    for (const auto& t : rep.unit) put(t);
    return os.str();
}

nlohmann::json classify_record(const std::string& relators, long max_cosets) {
    kzd::ClassifierConfig cc;
    cc.max_cosets = max_cosets;
    auto c = kzd::classify(kzd::Presentation::parse(relators), cc);
    nlohmann::json j{{"relators", relators},
                     {"verdict", kzd::verdict_name(c.verdict)},
                     {"summary", c.summary()},
                     {"route_log", c.route_log}};
    if (c.verdict == kzd::Verdict::FiniteOrder) j["order"] = c.order;
    return j;
}

}  // namespace

extern "C" {

const char* kzd_version(void) { return "1.0.0"; }

const char* kzd_last_error(void) { return g_error.c_str(); }

kzd_config* kzd_config_new(void) {
    try {
        return new kzd_config;
    } catch (...) {
        return nullptr;
    }
}

void kzd_config_free(kzd_config* cfg) { delete cfg; }

kzd_status kzd_config_set_catalog(kzd_config* cfg, const char* path) {
    if (!cfg || !path) return fail(KZD_EINVAL, "null argument");
    cfg->run.catalog_path = path;
    return KZD_OK;
}

kzd_status kzd_config_set_max_cosets(kzd_config* cfg, long max_cosets) {
    if (!cfg) return fail(KZD_EINVAL, "null argument");
    if (max_cosets < 1000) return fail(KZD_EINVAL, "max_cosets must be at least 1000");
    cfg->run.max_cosets = max_cosets;
    return KZD_OK;
}

kzd_status kzd_config_set_cache_dir(kzd_config* cfg, const char* dir) {
    if (!cfg || !dir) return fail(KZD_EINVAL, "null argument");
    cfg->run.cache_dir = dir;
    return KZD_OK;
}

kzd_status kzd_config_set_format(kzd_config* cfg, const char* format) {
    if (!cfg || !format) return fail(KZD_EINVAL, "null argument");
    std::string f = format;
    if (f != "text" && f != "json" && f != "csv") return fail(KZD_EINVAL, "format must be text, json or csv");
    cfg->run.format = f;
    return KZD_OK;
}

kzd_status kzd_config_set_jobs(kzd_config* cfg, int jobs) {
    if (!cfg) return fail(KZD_EINVAL, "null argument");
    if (jobs < 1) return fail(KZD_EINVAL, "jobs must be at least 1");
    cfg->run.jobs = jobs;
    return KZD_OK;
}

kzd_status kzd_config_set_extended(kzd_config* cfg, int on) {
    if (!cfg) return fail(KZD_EINVAL, "null argument");
    cfg->run.extended = on != 0;
    return KZD_OK;
}

kzd_status kzd_config_set_witnesses(kzd_config* cfg, int on) {
    if (!cfg) return fail(KZD_EINVAL, "null argument");
    cfg->run.witnesses = on != 0;
    return KZD_OK;
}

kzd_status kzd_config_disable_oracle(kzd_config* cfg, const char* name) {
    if (!cfg || !name) return fail(KZD_EINVAL, "null argument");
    std::string n = name;
    if (n != "kemperman" && n != "hamidoune" && n != "odd-unit" && n != "census-bound")
        return fail(KZD_EINVAL, "unknown oracle '" + n + "'");
    cfg->run.disabled_oracles.push_back(n);
    return KZD_OK;
}

kzd_status kzd_table1(const kzd_config* cfg, kzd_report** out) {
    if (!cfg || !out) return fail(KZD_EINVAL, "null argument");
    return guarded([&] {
        auto rep = kzd::run_table1(cfg->run);
        const auto& f = cfg->run.format;
        bool ok = rep.survivors == kzd::table1_survivor_rows();
        return emit(out, f == "json" ? rep.json(cfg->run) : f == "csv" ? rep.csv() : rep.text(), ok);
    });
}

kzd_status kzd_catalog_verify(const kzd_config* cfg, kzd_report** out) {
    if (!cfg || !out) return fail(KZD_EINVAL, "null argument");
    return guarded([&] {
        auto cat = load_catalog(cfg->run);
        auto rep = kzd::run_catalog_verify(cat, cfg->run);
        const auto& f = cfg->run.format;
        return emit(out, f == "json" ? rep.json(cfg->run, cat.version_hash()) : f == "csv" ? rep.csv() : rep.text(),
                    rep.ok());
    });
}

kzd_status kzd_census(const kzd_config* cfg, const int* ns, size_t count, kzd_report** out) {
    if (!cfg || !out || (count && !ns)) return fail(KZD_EINVAL, "null argument");
    std::vector<int> orders(ns, ns + count);
    if (orders.empty())
        for (int n = 4; n <= (cfg->run.extended ? 20 : 16); n += 2) orders.push_back(n);
    for (int n : orders) {
        if (n < 4 || n > 20 || n % 2) return fail(KZD_EINVAL, "n must be even and within 4..20");
        if (n > 16 && !cfg->run.extended) return fail(KZD_EINVAL, "n above 16 requires the extended flag");
    }
    return guarded([&] {
        auto cat = load_catalog(cfg->run);
        auto expected = kzd::Table3Expected::load(kzd::Table3Expected::default_path());
        auto rep = kzd::run_census(orders, cat, &expected, cfg->run);
        const auto& f = cfg->run.format;
        return emit(out, f == "json" ? rep.json(cfg->run, cat.version_hash()) : f == "csv" ? rep.csv() : rep.text(),
                    rep.ok());
    });
}

kzd_status kzd_bounds(const kzd_config* cfg, kzd_report** out) {
    if (!cfg || !out) return fail(KZD_EINVAL, "null argument");
    return guarded([&] {
        auto rep = kzd::run_bounds(oracles_of(cfg->run));
        const auto& f = cfg->run.format;
        std::string body;
        if (f == "json") {
            auto j = nlohmann::json::parse(rep.json());
            j["config"] = {{"no_oracle", cfg->run.disabled_oracles}};
            body = j.dump(2);
        } else {
            body = f == "csv" ? bounds_csv(rep) : rep.text();
        }
        return emit(out, body, rep.all_infeasible());
    });
}

kzd_status kzd_classify(const kzd_config* cfg, const char* relators, kzd_report** out) {
    if (!cfg || !relators || !out) return fail(KZD_EINVAL, "null argument");
    return guarded([&] {
        auto j = classify_record(relators, cfg->run.max_cosets);
        bool ok = j["verdict"] != "Unresolved";
        return emit(out, cfg->run.format == "json" ? j.dump(2) + "\n" : j["summary"].get<std::string>() + "\n", ok);
    });
}

kzd_status kzd_classify_batch(const kzd_config* cfg, const char* lines, kzd_report** out) {
    if (!cfg || !lines || !out) return fail(KZD_EINVAL, "null argument");
    return guarded([&] {
        std::istringstream in(lines);
        std::ostringstream os;
        std::string line;
        bool ok = true;
        while (std::getline(in, line)) {
            auto b = line.find_first_not_of(" \t\r");
            if (b == std::string::npos || line[b] == '#') continue;
            line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
            auto j = classify_record(line, cfg->run.max_cosets);
            ok = ok && j["verdict"] != "Unresolved";
            os << j.dump() << "\n";
        }
        return emit(out, os.str(), ok);
    });
}

const char* kzd_report_output(const kzd_report* r) { return r ? r->output.c_str() : ""; }

int kzd_report_ok(const kzd_report* r) { return r && r->ok ? 1 : 0; }

void kzd_report_free(kzd_report* r) { delete r; }

}  // extern "C"
