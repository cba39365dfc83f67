#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kzd {

// A letter is +-2 (h2^{+-1}) or +-3 (h3^{+-1}).
struct Letter {
    int gen;   // 2 or 3
    int sign;  // +1 or -1
};

inline int8_t encode(Letter l) { return static_cast<int8_t>(l.gen * l.sign); }
inline Letter decode(int8_t c) { return {c < 0 ? -c : c, c < 0 ? -1 : 1}; }

// Freely reduced word over {h2, h3}; reduction happens on construction.
class Word {
public:
    Word() = default;
    explicit Word(const std::vector<Letter>& raw);
    static Word from_codes(const std::vector<int8_t>& codes);
    static Word gen(int g, int power = 1);
    static Word parse(std::string_view text);  // throws std::invalid_argument

    const std::vector<int8_t>& codes() const { return c_; }
    std::vector<Letter> letters() const;
    size_t size() const { return c_.size(); }
    bool is_identity() const { return c_.empty(); }

    Word inverse() const;
    Word operator*(const Word& o) const;
    Word pow(int k) const;
    bool is_cyclically_reduced() const;
    // w = conjugator * core * conjugator^-1, core cyclically reduced.
    std::pair<Word, Word> cyclic_reduce() const;
    // w = root^exponent with maximal exponent; w must be cyclically reduced and nonempty.
    std::pair<Word, int> power_root() const;
    std::pair<long, long> exponent_sums() const;
    int occurrences(int g) const;
    // Least rotation of w or w^-1 after cyclic reduction: equal iff conjugate up to inversion.
    Word cyclic_canonical() const;
    // Least rotation of the cyclic reduction (no inversion): equal iff conjugate.
    Word conjugacy_canonical() const;
    Word rotate(size_t k) const;
    // Applies the substitution h2 -> a, h3 -> b.
    Word substitute(const Word& a, const Word& b) const;

    std::string str() const;

    bool operator==(const Word& o) const { return c_ == o.c_; }
    bool operator!=(const Word& o) const { return c_ != o.c_; }
    bool operator<(const Word& o) const;

private:
    std::vector<int8_t> c_;
    static void push(std::vector<int8_t>& out, int8_t c);
};

Word reduce(const std::vector<Letter>& raw);
Word invert(const Word& w);
Word concat(const Word& u, const Word& v);

struct WordHash {
    size_t operator()(const Word& w) const;
};

// All reduced words with 1..max_len letters, shortlex order.
std::vector<Word> words_up_to(int max_len);

// True iff {a, b} is a free basis of F(h2, h3) (Nielsen reduction).
bool is_basis(const Word& a, const Word& b);

}  // namespace kzd
