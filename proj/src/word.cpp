#include "kzd/word.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace kzd {

namespace {

int letter_key(int8_t c) {
    switch (c) {
        case 2: return 0;
        case -2: return 1;
        case 3: return 2;
        default: return 3;
    }
}

std::vector<int8_t> rotated(const std::vector<int8_t>& v, size_t k) {
    std::vector<int8_t> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[(i + k) % v.size()];
    return out;
}

bool key_less(const std::vector<int8_t>& a, const std::vector<int8_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return letter_key(a[i]) < letter_key(b[i]);
    return false;
}

std::vector<int8_t> least_rotation(const std::vector<int8_t>& v) {
    std::vector<int8_t> best = v;
    for (size_t k = 1; k < v.size(); ++k) {
        auto r = rotated(v, k);
        if (key_less(r, best)) best = std::move(r);
    }
    return best;
}

struct Parser {
    std::string_view s;
    size_t i = 0;

    void skip() {
        while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '*')) ++i;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("word syntax: " + what + " at position " + std::to_string(i) +
                                    " in '" + std::string(s) + "'");
    }
    int exponent() {
        if (i >= s.size() || s[i] != '^') return 1;
        ++i;
        int sign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            if (s[i] == '-') sign = -1;
            ++i;
        }
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected exponent");
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > 100000) fail("exponent too large");
            ++i;
        }
        return static_cast<int>(sign * v);
    }
    Word sequence(bool nested) {
        Word w;
        bool any = false;
        for (;;) {
            skip();
            if (i >= s.size()) {
                if (nested) fail("unbalanced '('");
                break;
            }
            char c = s[i];
            if (c == ')') {
                if (!nested) fail("unbalanced ')'");
                break;
            }
            any = true;
            if (c == '(') {
                ++i;
                Word inner = sequence(true);
                ++i;  // ')'
                w = w * inner.pow(exponent());
            } else if (c == 'h') {
                ++i;
                if (i >= s.size() || (s[i] != '2' && s[i] != '3')) fail("expected generator h2 or h3");
                int g = s[i] - '0';
                ++i;
                w = w * Word::gen(g, exponent());
            } else if (c == '1') {
                ++i;
                (void)exponent();
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
        }
        if (!any) fail("empty word");
        return w;
    }
};

}  // namespace

void Word::push(std::vector<int8_t>& out, int8_t c) {
    if (!out.empty() && out.back() == -c)
        out.pop_back();
    else
        out.push_back(c);
}

Word::Word(const std::vector<Letter>& raw) {
    for (const auto& l : raw) {
        if ((l.gen != 2 && l.gen != 3) || (l.sign != 1 && l.sign != -1))
            throw std::invalid_argument("letter must be h2^{+-1} or h3^{+-1}");
        push(c_, encode(l));
    }
}

Word Word::from_codes(const std::vector<int8_t>& codes) {
    Word w;
    for (int8_t c : codes) {
        if (c != 2 && c != -2 && c != 3 && c != -3) throw std::invalid_argument("bad letter code");
        push(w.c_, c);
    }
    return w;
}

Word Word::gen(int g, int power) {
    if (g != 2 && g != 3) throw std::invalid_argument("generator must be 2 or 3");
    Word w;
    int8_t c = static_cast<int8_t>(power < 0 ? -g : g);
    for (int k = 0; k < std::abs(power); ++k) w.c_.push_back(c);
    return w;
}

Word Word::parse(std::string_view text) {
    Parser p{text};
    return p.sequence(false);
}

std::vector<Letter> Word::letters() const {
    std::vector<Letter> out;
    out.reserve(c_.size());
    for (int8_t c : c_) out.push_back(decode(c));
    return out;
}

Word Word::inverse() const {
    Word w;
    w.c_.reserve(c_.size());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) w.c_.push_back(static_cast<int8_t>(-*it));
    return w;
}

Word Word::operator*(const Word& o) const {
    Word w = *this;
    for (int8_t c : o.c_) push(w.c_, c);
    return w;
}

Word Word::pow(int k) const {
    Word base = k < 0 ? inverse() : *this;
    Word w;
    for (int i = 0; i < std::abs(k); ++i) w = w * base;
    return w;
}

bool Word::is_cyclically_reduced() const {
    return c_.size() < 2 || c_.front() != -c_.back();
}

std::pair<Word, Word> Word::cyclic_reduce() const {
    size_t lo = 0, hi = c_.size();
    while (hi - lo >= 2 && c_[lo] == -c_[hi - 1]) {
        ++lo;
        --hi;
    }
    Word conj, core;
    conj.c_.assign(c_.begin(), c_.begin() + static_cast<long>(lo));
    core.c_.assign(c_.begin() + static_cast<long>(lo), c_.begin() + static_cast<long>(hi));
    return {conj, core};
}

std::pair<Word, int> Word::power_root() const {
    if (c_.empty()) throw std::invalid_argument("power_root of the identity");
    if (!is_cyclically_reduced()) throw std::invalid_argument("power_root needs a cyclically reduced word");
    size_t n = c_.size();
    for (size_t d = 1; d <= n; ++d) {
        if (n % d) continue;
        bool ok = true;
        for (size_t i = d; i < n && ok; ++i) ok = c_[i] == c_[i - d];
        if (ok) {
            Word r;
            r.c_.assign(c_.begin(), c_.begin() + static_cast<long>(d));
            return {r, static_cast<int>(n / d)};
        }
    }
    return {*this, 1};
}

std::pair<long, long> Word::exponent_sums() const {
    long e2 = 0, e3 = 0;
    for (int8_t c : c_) {
        if (c == 2) ++e2;
        else if (c == -2) --e2;
        else if (c == 3) ++e3;
        else --e3;
    }
    return {e2, e3};
}

int Word::occurrences(int g) const {
    return static_cast<int>(std::count_if(c_.begin(), c_.end(), [g](int8_t c) { return c == g || c == -g; }));
}

Word Word::conjugacy_canonical() const {
    Word core = cyclic_reduce().second;
    Word w;
    w.c_ = least_rotation(core.c_);
    return w;
}

Word Word::cyclic_canonical() const {
    Word a = conjugacy_canonical();
    Word b = inverse().conjugacy_canonical();
    return key_less(b.c_, a.c_) ? b : a;
}

Word Word::rotate(size_t k) const {
    Word w;
    if (!c_.empty()) w.c_ = rotated(c_, k % c_.size());
    return w;
}

Word Word::substitute(const Word& a, const Word& b) const {
    Word ai = a.inverse(), bi = b.inverse();
    Word w;
    for (int8_t c : c_) {
        const Word& img = c == 2 ? a : c == -2 ? ai : c == 3 ? b : bi;
        w = w * img;
    }
    return w;
}

std::string Word::str() const {
    if (c_.empty()) return "1";
    std::string out;
    size_t i = 0;
    while (i < c_.size()) {
        size_t j = i;
        while (j < c_.size() && c_[j] == c_[i]) ++j;
        int g = std::abs(c_[i]);
        long e = static_cast<long>(j - i) * (c_[i] < 0 ? -1 : 1);
        if (!out.empty()) out += '*';
        out += 'h';
        out += static_cast<char>('0' + g);
        if (e != 1) out += '^' + std::to_string(e);
        i = j;
    }
    return out;
}

bool Word::operator<(const Word& o) const { return key_less(c_, o.c_); }

Word reduce(const std::vector<Letter>& raw) { return Word(raw); }
Word invert(const Word& w) { return w.inverse(); }
Word concat(const Word& u, const Word& v) { return u * v; }

size_t WordHash::operator()(const Word& w) const {
    size_t h = 1469598103934665603ull;
    for (int8_t c : w.codes()) h = (h ^ static_cast<uint8_t>(c)) * 1099511628211ull;
    return h;
}

std::vector<Word> words_up_to(int max_len) {
    std::vector<Word> out;
    std::vector<std::vector<int8_t>> layer{{}};
    const int8_t alphabet[4] = {2, -2, 3, -3};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::vector<int8_t>> next;
        for (const auto& w : layer)
            for (int8_t c : alphabet) {
                if (!w.empty() && w.back() == -c) continue;
                auto v = w;
                v.push_back(c);
                next.push_back(v);
            }
        for (const auto& v : next) out.push_back(Word::from_codes(v));
        layer = std::move(next);
    }
    return out;
}

bool is_basis(const Word& a, const Word& b) {
    if (a.is_identity() || b.is_identity()) return false;
    // Stallings folding of the two based loops; the subgroup is everything iff
    // the folded graph is a single vertex carrying both generator loops.
    struct Edge {
        int from, to, gen;
    };
    std::vector<Edge> edges;
    int nv = 1;
    for (const Word* w : {&a, &b}) {
        int cur = 0;
        const auto& c = w->codes();
        for (size_t i = 0; i < c.size(); ++i) {
            int nxt = i + 1 == c.size() ? 0 : nv++;
            int g = std::abs(c[i]);
            if (c[i] > 0) edges.push_back({cur, nxt, g});
            else edges.push_back({nxt, cur, g});
            cur = nxt;
        }
    }
    std::vector<int> parent(static_cast<size_t>(nv));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[static_cast<size_t>(x)] == x ? x : parent[static_cast<size_t>(x)] = find(parent[static_cast<size_t>(x)]); };
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < edges.size() && !changed; ++i)
            for (size_t j = i + 1; j < edges.size() && !changed; ++j) {
                if (edges[i].gen != edges[j].gen) continue;
                int fi = find(edges[i].from), ti = find(edges[i].to);
                int fj = find(edges[j].from), tj = find(edges[j].to);
                if (fi == fj && ti != tj) {
                    parent[static_cast<size_t>(ti)] = tj;
                    changed = true;
                } else if (ti == tj && fi != fj) {
                    parent[static_cast<size_t>(fi)] = fj;
                    changed = true;
                }
            }
    }
    int root = find(0);
    bool has2 = false, has3 = false;
    for (int v = 0; v < nv; ++v)
        if (find(v) != root) return false;
    for (const auto& e : edges) (e.gen == 2 ? has2 : has3) = true;
    return has2 && has3;
}

}  // namespace kzd
