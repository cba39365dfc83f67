#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kzd/word.hpp"

namespace kzd {

// Relators of a two-generator presentation <h2, h3 | R>.
class Presentation {
public:
    Presentation() = default;
    // Cyclically reduces, drops identities and duplicates (up to conjugacy and inversion).
    static Presentation from_words(const std::vector<Word>& words);
    static Presentation parse(const std::string& line);  // relators separated by ',' or ';'

    const std::vector<Word>& relators() const { return rel_; }
    bool empty() const { return rel_.empty(); }
    std::string str() const;

private:
    std::vector<Word> rel_;
};

enum class Verdict { AbelianOrCyclic, TorsionWitness, BSQuotient, FiniteOrder, Unresolved };

const char* verdict_name(Verdict v);

struct Classification {
    Verdict verdict = Verdict::Unresolved;
    Word root;          // TorsionWitness
    int exponent = 0;   // TorsionWitness
    int m = 0, n = 0;   // BSQuotient
    Word a, b;          // BSQuotient
    long order = 0;     // FiniteOrder
    std::vector<std::string> route_log;

    bool eliminated() const { return verdict != Verdict::Unresolved; }
    std::string summary() const;
};

// Words known to be nontrivial in every admissible group: h2, h3, h2^-1 h3 and inverses.
class NontrivialityOracle {
public:
    NontrivialityOracle();
    const std::vector<Word>& words() const { return words_; }
    // True if w is conjugate to a member (conjugates of nontrivial elements are nontrivial).
    bool contains(const Word& w) const;

private:
    std::vector<Word> words_;
};

struct ClassifierConfig {
    long max_cosets = 100000;
    int nielsen_depth = 1;  // depth of basis changes tried by the abelian route
    long cyclic_check_cosets = 2000;  // budget for the <h2>, <h3> index-1 test (0 disables)
};

struct CosetResult {
    bool finite = false;  // false: overflow (inconclusive)
    long order = 0;
    long peak_cosets = 0;
    std::vector<std::vector<int>> table;  // [coset][column h2,h2^-1,h3,h3^-1], when finite
};

std::optional<Classification> detect_abelian_or_cyclic(const Presentation& p, int nielsen_depth = 1);

struct TorsionStep {
    std::optional<Classification> verdict;  // set when an oracle word is a proper power root
    Presentation rewritten;                 // roots substituted for non-oracle proper powers
    bool changed = false;
};
TorsionStep detect_torsion(const Presentation& p, const NontrivialityOracle& oracle);

std::optional<Classification> detect_bs_quotient(const Presentation& p);
CosetResult coset_enumerate(const Presentation& p, long max_cosets, bool keep_table = false);
// Cosets of the subgroup generated by `generators`; order() is the index when finite.
CosetResult subgroup_cosets(const Presentation& p, const std::vector<Word>& generators, long max_cosets);
// Fires when h3 lies in <h2> or h2 in <h3> (index 1), i.e. G is cyclic.
std::optional<Classification> detect_cyclic_by_cosets(const Presentation& p, long max_cosets);

struct Abelianization {
    std::vector<long> factors;  // d1 | d2 (zeros for free part)
    int free_rank = 0;
    std::string str() const;
};
Abelianization abelianization(const Presentation& p);

Classification classify(const Presentation& p, const ClassifierConfig& cfg = {});

// The 36 square relations in row order, and the nine surviving rows.
const std::vector<std::string>& table1_relations();
const std::vector<int>& table1_survivor_rows();

struct X2Y3Witness {
    int row;
    Word x, y;
    bool form_xy;  // true: supp = {1,x,y}; false: {1,y,y^-1 x}
    int conjugates_used;  // certificate size
};
// Throws std::runtime_error if x^2 y^-3 cannot be certified trivial modulo the row's relator.
X2Y3Witness derive_x2_y3_witness(int row);

// Bounded search: is w a product of <= max_factors conjugates of r^{+-1}
// (conjugators of length <= max_conj_len for all but one factor)?
int certify_consequence(const Word& w, const Word& r, int max_factors, int max_conj_len);

}  // namespace kzd
