#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kzd/kzd.h"

namespace {

// "4-16", "4,6,8" or "18" -> list of orders.
std::vector<int> parse_orders(const std::string& spec) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos <= spec.size()) {
        size_t comma = spec.find(',', pos);
        std::string part = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        size_t dash = part.find('-');
        size_t used = 0;
        if (dash != std::string::npos) {
            int lo = std::stoi(part.substr(0, dash), &used);
            int hi = std::stoi(part.substr(dash + 1));
            if (lo % 2 || hi % 2 || lo > hi) throw CLI::ValidationError("--n", "range ends must be even, low <= high");
            for (int n = lo; n <= hi; n += 2) out.push_back(n);
        } else {
            out.push_back(std::stoi(part, &used));
            if (used != part.size()) throw CLI::ValidationError("--n", "not an integer: " + part);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    for (int n : out)
        if (n < 4 || n > 20 || n % 2) throw CLI::ValidationError("--n", "orders must be even and within 4..20");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Forbidden-subgraph and bound checks for length-3 zero divisors and units over F2"};
    app.require_subcommand(1);

    std::string catalog, cache_dir, format = "text", n_spec;
    long max_cosets = 100000;
    int jobs = 1;
    bool extended = false, witnesses = false;
    std::vector<std::string> no_oracle;

    app.add_option("--catalog", catalog, "catalog JSON (default: bundled)");
    app.add_option("--max-cosets", max_cosets, "coset enumeration budget")->check(CLI::Range(1000L, 100000000L));
    app.add_option("--cache-dir", cache_dir, "directory for census graph6 caches");
    app.add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
    app.add_flag("--extended", extended, "allow census orders 18 and 20");

    auto* t1 = app.add_subcommand("table1", "classify the 36 square relations");
    t1->add_flag("--witnesses", witnesses, "derive x^2 = y^3 substitutions for the survivors");
    auto* cv = app.add_subcommand("catalog-verify", "recount every catalog configuration");
    auto* cs = app.add_subcommand("census", "census of cubic triangle-free graphs and forbidden-subgraph filter");
    cs->add_option("--n", n_spec, "orders, e.g. 4-16, 18 or 10,12");
    auto* bd = app.add_subcommand("bounds", "support-size contradiction trails");
    bd->add_option("--no-oracle", no_oracle, "disable an external result")
        ->check(CLI::IsMember({"kemperman", "hamidoune", "odd-unit", "census-bound"}));
    std::string relators, batch;
    auto* cl = app.add_subcommand("classify", "classify one relator set, or a batch file of them");
    auto* rel_opt = cl->add_option("relators", relators, "e.g. h2^2*h3^-2*h2");
    auto* batch_opt = cl->add_option("--batch", batch, "file with one relator list per line ('-' for stdin)");
    rel_opt->excludes(batch_opt);
    cl->require_option(1);
    for (auto* sc : {t1, cv, cs, bd, cl}) sc->fallthrough();

    std::vector<int> orders;
    try {
        app.parse(argc, argv);
        if (!n_spec.empty()) orders = parse_orders(n_spec);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "--n: %s\n", e.what());
        return 2;
    }

    kzd_config* cfg = kzd_config_new();
    kzd_status st = KZD_OK;
    if (!catalog.empty()) st = kzd_config_set_catalog(cfg, catalog.c_str());
    if (st == KZD_OK && !cache_dir.empty()) st = kzd_config_set_cache_dir(cfg, cache_dir.c_str());
    if (st == KZD_OK) st = kzd_config_set_format(cfg, format.c_str());
    if (st == KZD_OK) st = kzd_config_set_max_cosets(cfg, max_cosets);
    if (st == KZD_OK) st = kzd_config_set_jobs(cfg, jobs);
    if (st == KZD_OK) st = kzd_config_set_extended(cfg, extended);
    if (st == KZD_OK) st = kzd_config_set_witnesses(cfg, witnesses);
    for (const auto& o : no_oracle)
        if (st == KZD_OK) st = kzd_config_disable_oracle(cfg, o.c_str());

    kzd_report* rep = nullptr;
    if (st == KZD_OK) {
        if (*t1) st = kzd_table1(cfg, &rep);
        else if (*cv) st = kzd_catalog_verify(cfg, &rep);
        else if (*cs) st = kzd_census(cfg, orders.data(), orders.size(), &rep);
        else if (*bd) st = kzd_bounds(cfg, &rep);
        else if (!batch.empty()) {
            std::string text;
            if (batch == "-") {
                text.assign(std::istreambuf_iterator<char>(std::cin), {});
            } else {
                std::ifstream in(batch);
                if (!in) {
                    std::fprintf(stderr, "error: cannot read %s\n", batch.c_str());
                    kzd_config_free(cfg);
                    return 2;
                }
                text.assign(std::istreambuf_iterator<char>(in), {});
            }
            st = kzd_classify_batch(cfg, text.c_str(), &rep);
        } else {
            st = kzd_classify(cfg, relators.c_str(), &rep);
        }
    }
    int code = 0;
    if (rep) {
        std::fputs(kzd_report_output(rep), stdout);
        code = st == KZD_OK ? 0 : 1;
        kzd_report_free(rep);
    } else {
        std::fprintf(stderr, "error: %s\n", kzd_last_error());
        code = 2;
    }
    kzd_config_free(cfg);
    return code;
}
