#include "kzd/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <regex>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace kzd {

FiniteGroupModel::FiniteGroupModel(std::vector<std::vector<int>> table, std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
    int n = order();
    if (n == 0) throw std::invalid_argument("group: empty table");
    if (static_cast<int>(names_.size()) != n) throw std::invalid_argument("group: name count mismatch");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("group: table not square");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("group: entry out of range");
    }
    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
        if (ok) identity_ = e;
    }
    if (identity_ < 0) throw std::invalid_argument("group: no identity");
    inverse_.assign(static_cast<size_t>(n), -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    for (int a = 0; a < n; ++a)
        if (inverse_[a] < 0) throw std::invalid_argument("group: missing inverse");
    auto assoc = [&](int a, int b, int c) { return table_[table_[a][b]][c] == table_[a][table_[b][c]]; };
    if (n <= 200) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (!assoc(a, b, c)) throw std::invalid_argument("group: not associative");
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> d(0, n - 1);
        for (int i = 0; i < 200000; ++i)
            if (!assoc(d(rng), d(rng), d(rng))) throw std::invalid_argument("group: not associative");
    }
}

std::shared_ptr<const FiniteGroupModel> FiniteGroupModel::cyclic(int n, const std::string& gen) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
        names.push_back(a == 0 ? "1" : a == 1 ? gen : gen + "^" + std::to_string(a));
    }
    return std::make_shared<const FiniteGroupModel>(std::move(t), std::move(names));
}

int FiniteGroupModel::find(const std::string& name) const {
    for (int a = 0; a < order(); ++a)
        if (names_[a] == name) return a;
    return -1;
}

GroupAlgebraElement::GroupAlgebraElement(GroupPtr g, int p) : g_(std::move(g)), p_(p) {
    if (!g_) throw std::invalid_argument("algebra element: null group");
    if (p < 2) throw std::invalid_argument("algebra element: modulus must be prime");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("algebra element: modulus must be prime");
}

GroupAlgebraElement GroupAlgebraElement::monomial(GroupPtr g, int p, int element, int coeff) {
    GroupAlgebraElement e(std::move(g), p);
    e.set(element, coeff);
    return e;
}

GroupAlgebraElement GroupAlgebraElement::parse(const std::string& text, GroupPtr g, int p) {
    GroupAlgebraElement e(g, p);
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty element");
    std::string gen = g->name(g->order() > 1 ? 1 : 0);
    // term: [sign][coeff][*]gen[^k] | [sign]coeff
    static const std::regex term(R"(([+-]?)(\d*)(\*?)([A-Za-z]\w*)?(\^(-?\d+))?)");
    size_t pos = 0;
    while (pos < s.size()) {
        std::smatch m;
        std::string rest = s.substr(pos);
        if (!std::regex_search(rest, m, term, std::regex_constants::match_continuous) || m.length(0) == 0)
            throw std::invalid_argument("cannot parse element near '" + rest + "'");
        if (pos > 0 && m[1].length() == 0) throw std::invalid_argument("missing '+' or '-' between terms");
        long c = m[2].length() ? std::stol(m[2]) : 1;
        if (m[1] == "-") c = -c;
        int elem = g->identity();
        if (m[4].matched) {
            if (m[4] != gen) throw std::invalid_argument("unknown generator '" + m[4].str() + "'");
            long k = m[5].matched ? std::stol(m[6]) : 1;
            long n = g->order();
            k = ((k % n) + n) % n;
            elem = g->identity();
            for (long i = 0; i < k; ++i) elem = g->mul(elem, 1);
        } else if (m[3].length() || m[5].matched || m[2].length() == 0) {
            throw std::invalid_argument("malformed term");
        }
        e.set(elem, e.coeff(elem) + c);
        pos += static_cast<size_t>(m.length(0));
    }
    return e;
}

int GroupAlgebraElement::coeff(int element) const {
    auto it = c_.find(element);
    return it == c_.end() ? 0 : it->second;
}

void GroupAlgebraElement::set(int element, long value) {
    if (element < 0 || element >= g_->order()) throw std::invalid_argument("element out of range");
    long r = ((value % p_) + p_) % p_;
    if (r == 0)
        c_.erase(element);
    else
        c_[element] = static_cast<int>(r);
}

std::vector<int> GroupAlgebraElement::support() const {
    std::vector<int> s;
    for (const auto& [k, v] : c_) s.push_back(k);
    return s;
}

bool GroupAlgebraElement::is_one() const {
    return c_.size() == 1 && c_.begin()->first == g_->identity() && c_.begin()->second == 1;
}

std::string GroupAlgebraElement::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : c_) {
        int c = v > p_ / 2 ? v - p_ : v;  // symmetric residue
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        int a = std::abs(c);
        if (k == g_->identity())
            os << a;
        else
            os << (a == 1 ? "" : std::to_string(a) + "*") << g_->name(k);
        first = false;
    }
    return os.str();
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
    if (g_ != o.g_ && !(g_->order() == o.g_->order() && g_->identity() == o.g_->identity()))
        throw std::invalid_argument("multiply: different groups");
    if (p_ != o.p_) throw std::invalid_argument("multiply: different fields");
    std::vector<long> acc(static_cast<size_t>(g_->order()), 0);
    for (const auto& [a, ca] : c_)
        for (const auto& [b, cb] : o.c_) acc[g_->mul(a, b)] += static_cast<long>(ca) * cb;
    GroupAlgebraElement r(g_, p_);
    for (int k = 0; k < g_->order(); ++k) r.set(k, acc[k] % p_);
    return r;
}

GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return a * b; }

int SupportGraph::vertex_index(int element) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), element);
    return it != vertices.end() && *it == element ? static_cast<int>(it - vertices.begin()) : -1;
}

int SupportGraph::multiplicity(int g, int g2) const {
    if (g > g2) std::swap(g, g2);
    return static_cast<int>(std::count_if(edges.begin(), edges.end(), [&](const Edge& e) { return e.g == g && e.g2 == g2; }));
}

bool SupportGraph::simple() const {
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j)
            if (edges[i].g == edges[j].g && edges[i].g2 == edges[j].g2) return false;
    return true;
}

SimpleGraph SupportGraph::underlying() const {
    SimpleGraph s(static_cast<int>(vertices.size()));
    for (const auto& e : edges) {
        int u = vertex_index(e.g), v = vertex_index(e.g2);
        if (!s.has_edge(u, v)) s.add_edge(u, v);
    }
    return s;
}

std::string SupportGraph::to_json(const FiniteGroupModel& grp) const {
    nlohmann::json j;
    j["kind"] = kind == GraphKind::ZeroDivisor ? "zero_divisor" : "unit";
    for (int v : vertices) j["vertices"].push_back(grp.name(v));
    j["edges"] = nlohmann::json::array();
    for (const auto& e : edges)
        j["edges"].push_back({{"h", grp.name(e.h)}, {"h2", grp.name(e.h2)}, {"g", grp.name(e.g)}, {"g2", grp.name(e.g2)}});
    j["simple"] = simple();
    return j.dump();
}

SupportGraph build_support_graph(const GroupAlgebraElement& a, const GroupAlgebraElement& b, GraphKind kind) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("support graph: zero factor");
    GroupAlgebraElement prod = a * b;
    if (kind == GraphKind::ZeroDivisor && !prod.is_zero())
        throw std::invalid_argument("support graph: product is " + prod.str() + ", not 0");
    if (kind == GraphKind::Unit && !prod.is_one())
        throw std::invalid_argument("support graph: product is " + prod.str() + ", not 1");
    const auto& grp = *a.group();
    SupportGraph sg;
    sg.kind = kind;
    sg.vertices = b.support();
    auto ha = a.support();
    std::vector<std::vector<std::pair<int, int>>> by_product(static_cast<size_t>(grp.order()));
    for (int g : sg.vertices)
        for (int h : ha) by_product[grp.mul(h, g)].emplace_back(h, g);
    for (const auto& pairs : by_product)
        for (size_t i = 0; i < pairs.size(); ++i)
            for (size_t j = i + 1; j < pairs.size(); ++j) {
                auto [h, g] = pairs[i];
                auto [h2, g2] = pairs[j];
                if (g == g2) continue;
                if (g > g2) std::swap(h, h2), std::swap(g, g2);
                sg.edges.push_back({h, h2, g, g2});
            }
    return sg;
}

StructuralReport structural_checks(const SupportGraph& g, const StructuralContext& ctx) {
    StructuralReport r;
    r.simple = g.simple();
    SimpleGraph u = g.underlying();
    r.connected = u.is_connected();
    r.triangle_free = u.is_triangle_free();
    std::vector<int> deg(g.vertices.size(), 0);
    for (const auto& e : g.edges) ++deg[g.vertex_index(e.g)], ++deg[g.vertex_index(e.g2)];
    r.cubic = std::all_of(deg.begin(), deg.end(), [](int d) { return d == 3; });
    if (ctx.beta_minimal) r.expectations.emplace_back("connected", r.connected);
    if (ctx.alpha_support_size == 3) r.expectations.emplace_back("simple", r.simple);
    if (ctx.alpha_support_size == 3 && ctx.field_is_f2 && g.kind == GraphKind::ZeroDivisor) {
        r.expectations.emplace_back("cubic", r.cubic);
        r.expectations.emplace_back("triangle_free", r.triangle_free);
    }
    return r;
}

TranslationCertificate translate(const GroupAlgebraElement& a, const GroupAlgebraElement& b, int x, int y,
                                 GraphKind kind) {
    const auto& grp = *a.group();
    if (kind == GraphKind::Unit && y != grp.inv(x))
        throw std::invalid_argument("unit translation needs y = x^-1");
    auto xa = GroupAlgebraElement::monomial(a.group(), a.modulus(), x) * a;
    auto by = b * GroupAlgebraElement::monomial(b.group(), b.modulus(), y);
    TranslationCertificate cert{xa, by, {}, false};
    for (int g : b.support()) cert.vertex_map.emplace_back(g, grp.mul(g, y));
    SupportGraph before = build_support_graph(a, b, kind);
    SupportGraph after = build_support_graph(xa, by, kind);
    auto key = [](int h, int h2, int g, int g2) {
        if (g > g2) std::swap(h, h2), std::swap(g, g2);
        return std::array<int, 4>{h, h2, g, g2};
    };
    std::vector<std::array<int, 4>> mapped, target;
    for (const auto& e : before.edges)
        mapped.push_back(key(grp.mul(x, e.h), grp.mul(x, e.h2), grp.mul(e.g, y), grp.mul(e.g2, y)));
    for (const auto& e : after.edges) target.push_back(key(e.h, e.h2, e.g, e.g2));
    std::sort(mapped.begin(), mapped.end());
    std::sort(target.begin(), target.end());
    std::vector<int> vs;
    for (auto [g, gy] : cert.vertex_map) vs.push_back(gy);
    std::sort(vs.begin(), vs.end());
    cert.verified = mapped == target && vs == after.vertices;
    return cert;
}

}  // namespace kzd
