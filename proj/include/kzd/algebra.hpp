#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "kzd/graph.hpp"

namespace kzd {

// A finite group as an explicit multiplication table.
class FiniteGroupModel {
public:
    // Throws std::invalid_argument unless the table is a group (associativity checked exhaustively
    // up to order 200, sampled beyond).
    FiniteGroupModel(std::vector<std::vector<int>> table, std::vector<std::string> names);
    static std::shared_ptr<const FiniteGroupModel> cyclic(int n, const std::string& gen = "x");

    int order() const { return static_cast<int>(table_.size()); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inverse_[a]; }
    const std::string& name(int a) const { return names_[a]; }
    int find(const std::string& name) const;  // -1 if absent

private:
    std::vector<std::vector<int>> table_;
    std::vector<std::string> names_;
    std::vector<int> inverse_;
    int identity_ = 0;
};

using GroupPtr = std::shared_ptr<const FiniteGroupModel>;

// Element of F_p[G] with p prime.
class GroupAlgebraElement {
public:
    GroupAlgebraElement(GroupPtr g, int p);
    // Parses "c*x^k + ..." over a cyclic group named by generator x; "-x^3", "2*x^4", "1".
    static GroupAlgebraElement parse(const std::string& text, GroupPtr g, int p);
    static GroupAlgebraElement monomial(GroupPtr g, int p, int element, int coeff = 1);

    const GroupPtr& group() const { return g_; }
    int modulus() const { return p_; }
    int coeff(int element) const;
    void set(int element, long value);
    std::vector<int> support() const;
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    std::string str() const;

    GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;
    bool operator==(const GroupAlgebraElement& o) const { return p_ == o.p_ && g_ == o.g_ && c_ == o.c_; }

private:
    GroupPtr g_;
    int p_;
    std::map<int, int> c_;  // element -> nonzero residue in 1..p-1
};

GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

enum class GraphKind { ZeroDivisor, Unit };

// Graph on supp(b) with one edge {(h,h',g,g'), (h',h,g',g)} per coincidence hg = h'g', g != g'.
struct SupportGraph {
    struct Edge {
        int h, h2, g, g2;  // h*g = h2*g2, g < g2 as group indices
    };
    GraphKind kind = GraphKind::ZeroDivisor;
    std::vector<int> vertices;  // group indices of supp(b), ascending
    std::vector<Edge> edges;

    int vertex_index(int element) const;  // -1 if absent
    int multiplicity(int g, int g2) const;
    bool simple() const;
    SimpleGraph underlying() const;  // vertices in the order of `vertices`
    std::string to_json(const FiniteGroupModel& grp) const;
};

// Throws std::invalid_argument when the product is not 0 (zero divisor) or 1 (unit).
SupportGraph build_support_graph(const GroupAlgebraElement& a, const GroupAlgebraElement& b, GraphKind kind);

struct StructuralContext {
    bool field_is_f2 = false;
    int alpha_support_size = 0;
    bool beta_minimal = false;
};

struct StructuralReport {
    bool simple = false, cubic = false, triangle_free = false, connected = false;
    // Predicates the context licenses as expectations, and whether each holds.
    std::vector<std::pair<std::string, bool>> expectations;
};

StructuralReport structural_checks(const SupportGraph& g, const StructuralContext& ctx);

struct TranslationCertificate {
    GroupAlgebraElement a, b;           // x a and b y
    std::vector<std::pair<int, int>> vertex_map;  // g -> g y
    bool verified = false;  // edge multisets correspond under the map
};

// Zero-divisor graphs: any x, y. Unit graphs: requires y = x^-1 (then a' = x a, b' = b x^-1).
TranslationCertificate translate(const GroupAlgebraElement& a, const GroupAlgebraElement& b, int x, int y,
                                 GraphKind kind);

}  // namespace kzd
