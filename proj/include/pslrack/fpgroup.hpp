#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "pslrack/config.hpp"
#include "pslrack/group.hpp"

namespace pslrack {

/// A word over generators: entry k > 0 is generator k-1, entry -k is its
/// inverse. Words are kept freely reduced.
using Word = std::vector<int>;

inline Word free_reduce(const Word& w) {
    Word out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

inline Word word_inverse(const Word& w) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    std::string word_str(const Word& w) const {
        if (w.empty()) return "1";
        std::string s;
        for (size_t i = 0; i < w.size();) {
            int g = std::abs(w[i]) - 1;
            int sign = w[i] > 0 ? 1 : -1;
            size_t j = i;
            while (j < w.size() && w[j] == w[i]) ++j;
            s += generators[g];
            long e = sign * (long)(j - i);
            if (e != 1) s += "^" + std::to_string(e);
            i = j;
        }
        return s;
    }

    std::string str() const {
        std::string s;
        for (size_t i = 0; i < generators.size(); ++i)
            s += (i ? ", " : "") + generators[i];
        s += " | ";
        for (size_t i = 0; i < relators.size(); ++i)
            s += (i ? ", " : "") + word_str(relators[i]);
        return s;
    }
};

namespace detail {

class PresentationParser {
public:
    PresentationParser(const std::string& text,
                       const std::vector<std::string>& gens)
        : s_(text), gens_(gens) {}

    Word parse_word_all(size_t pos) {
        pos_ = pos;
        Word w = parse_word();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected character");
        return free_reduce(w);
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(msg + " at position " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_]))
            ++pos_;
    }

    bool at(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    void expect(char c) {
        if (!at(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    long parse_int() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_]))
            ++pos_;
        if (pos_ == digits) fail("malformed exponent");
        return std::stol(s_.substr(start, pos_ - start));
    }

    /// Longest declared generator name starting here, or -1.
    int match_generator() {
        skip_ws();
        int best = -1;
        size_t best_len = 0;
        for (size_t g = 0; g < gens_.size(); ++g) {
            const std::string& name = gens_[g];
            if (name.size() > best_len &&
                s_.compare(pos_, name.size(), name) == 0) {
                best = (int)g;
                best_len = name.size();
            }
        }
        if (best >= 0) pos_ += best_len;
        return best;
    }

    Word parse_atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        if (s_[pos_] == '(') {
            ++pos_;
            Word w = parse_word();
            expect(')');
            return w;
        }
        if (s_[pos_] == '[') {
            ++pos_;
            Word x = parse_word();
            expect(',');
            Word y = parse_word();
            expect(']');
            Word w = word_inverse(x);
            Word yi = word_inverse(y);
            w.insert(w.end(), yi.begin(), yi.end());
            w.insert(w.end(), x.begin(), x.end());
            w.insert(w.end(), y.begin(), y.end());
            return w;
        }
        int g = match_generator();
        if (g < 0) fail("unknown symbol");
        return {g + 1};
    }

    Word parse_factor() {
        Word base = parse_atom();
        if (at('^')) {
            ++pos_;
            long e = parse_int();
            Word out;
            Word part = e < 0 ? word_inverse(base) : base;
            for (long k = 0; k < std::abs(e); ++k)
                out.insert(out.end(), part.begin(), part.end());
            return out;
        }
        return base;
    }

    Word parse_word() {
        Word w;
        while (true) {
            skip_ws();
            if (pos_ >= s_.size()) break;
            char c = s_[pos_];
            if (c == ')' || c == ']' || c == ',') break;
            Word f = parse_factor();
            w.insert(w.end(), f.begin(), f.end());
        }
        return w;
    }

    const std::string& s_;
    const std::vector<std::string>& gens_;
    size_t pos_ = 0;
};

inline std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else
            cur += c;
    }
    out.push_back(cur);
    return out;
}

inline std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace detail

/// Parse "g1, g2, ... | w1, w2, ...". Words are products of generator
/// symbols with optional integer exponents, parenthesized subwords, and
/// commutators [x,y] = x^{-1}y^{-1}xy.
inline Presentation parse_presentation(const std::string& text) {
    size_t bar = text.find('|');
    require(bar != std::string::npos, "presentation needs a '|' separator");
    Presentation P;
    for (const auto& part : detail::split_commas(text.substr(0, bar))) {
        std::string name = detail::trim(part);
        require(!name.empty(), "empty generator name");
        for (char c : name)
            require(std::isalnum((unsigned char)c) || c == '_',
                    "generator names must be alphanumeric");
        require(std::isalpha((unsigned char)name[0]),
                "generator names must start with a letter");
        require(std::find(P.generators.begin(), P.generators.end(), name) ==
                    P.generators.end(),
                "duplicate generator name");
        P.generators.push_back(name);
    }
    std::string rel_text = text.substr(bar + 1);
    for (const auto& part : detail::split_commas(rel_text)) {
        if (detail::trim(part).empty()) continue;
        // parse within the full text so error positions are absolute
        size_t off = rel_text.find(part);
        std::string padded(bar + 1 + off, ' ');
        padded += part;
        detail::PresentationParser parser(padded, P.generators);
        P.relators.push_back(parser.parse_word_all(bar + 1 + off));
    }
    return P;
}

/// A complete coset table: the right action of each generator on cosets.
struct CosetTable {
    long cosets = 0;
    std::vector<std::vector<int>> action;     // [gen][coset]
    std::vector<std::vector<int>> action_inv; // [gen][coset]

    int apply(int coset, int letter) const {
        return letter > 0 ? action[letter - 1][coset]
                          : action_inv[-letter - 1][coset];
    }

    int trace(int coset, const Word& w) const {
        for (int x : w) coset = apply(coset, x);
        return coset;
    }
};

namespace detail {

/// HLT-style coset enumeration with immediate coincidence processing and a
/// hard bound on the number of rows ever allocated.
class CosetEnumerator {
public:
    CosetEnumerator(const Presentation& P, const std::vector<Word>& subgroup,
                    long limit)
        : P_(P), width_(2 * (int)P.generators.size()), limit_(limit) {
        new_coset();
        for (const auto& w : subgroup) scan_and_fill(0, free_reduce(w));
        for (size_t c = 0; c < table_.size(); ++c) {
            if (dead(c)) continue;
            for (const auto& w : P_.relators) {
                scan_and_fill((int)c, w);
                if (dead(c)) break;
            }
            if (dead(c)) continue;
            for (int col = 0; col < width_; ++col)
                if (table_[c][col] < 0) define((int)c, col);
        }
    }

    CosetTable result() {
        std::vector<int> live, pos(table_.size(), -1);
        for (size_t c = 0; c < table_.size(); ++c)
            if (!dead(c)) {
                pos[c] = (int)live.size();
                live.push_back((int)c);
            }
        CosetTable T;
        T.cosets = (long)live.size();
        int g = (int)P_.generators.size();
        T.action.assign(g, std::vector<int>(live.size(), -1));
        T.action_inv.assign(g, std::vector<int>(live.size(), -1));
        for (size_t i = 0; i < live.size(); ++i)
            for (int x = 0; x < g; ++x) {
                int f = table_[live[i]][2 * x];
                int b = table_[live[i]][2 * x + 1];
                require(f >= 0 && b >= 0, "incomplete coset table");
                T.action[x][i] = pos[rep(f)];
                T.action_inv[x][i] = pos[rep(b)];
            }
        for (const auto& w : P_.relators)
            for (long c = 0; c < T.cosets; ++c)
                require(T.trace((int)c, w) == c,
                        "relator does not act trivially");
        return T;
    }

private:
    // column for a word letter: generator x forward at 2x, inverse at 2x+1
    static int col_of(int letter) {
        return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
    }
    static int col_inv(int col) { return col ^ 1; }

    int rep(int c) {
        while (parent_[c] != c) {
            parent_[c] = parent_[parent_[c]];
            c = parent_[c];
        }
        return c;
    }
    bool dead(size_t c) const { return parent_[c] != (int)c; }

    int new_coset() {
        require((long)table_.size() < limit_, "coset limit exceeded");
        table_.emplace_back(width_, -1);
        parent_.push_back((int)table_.size() - 1);
        return (int)table_.size() - 1;
    }

    int define(int c, int col) {
        int d = new_coset();
        table_[c][col] = d;
        table_[d][col_inv(col)] = c;
        return d;
    }

    void join(int a, int b, std::vector<int>& queue) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
        queue.push_back(b);
    }

    void coincidence(int a, int b) {
        std::vector<int> queue;
        join(a, b, queue);
        for (size_t i = 0; i < queue.size(); ++i) {
            int c = queue[i];
            for (int col = 0; col < width_; ++col) {
                int d = table_[c][col];
                if (d < 0) continue;
                table_[c][col] = -1;
                int cr = rep(c), dr = rep(d);
                // reinstall the edge c --col--> d under the representatives
                if (table_[cr][col] >= 0)
                    join(table_[cr][col], dr, queue);
                else
                    table_[cr][col] = dr;
                dr = rep(d);
                cr = rep(c);
                if (table_[dr][col_inv(col)] >= 0)
                    join(table_[dr][col_inv(col)], cr, queue);
                else
                    table_[dr][col_inv(col)] = cr;
            }
        }
    }

    void scan_and_fill(int start, const Word& w) {
        if (w.empty()) return;
        while (true) {
            start = rep(start);
            int f = start;
            size_t i = 0;
            while (i < w.size() && table_[f][col_of(w[i])] >= 0) {
                f = rep(table_[f][col_of(w[i])]);
                ++i;
            }
            if (i == w.size()) {
                if (f != start) coincidence(f, start);
                return;
            }
            int b = start;
            size_t r = w.size();
            while (r > i && table_[b][col_inv(col_of(w[r - 1]))] >= 0) {
                b = rep(table_[b][col_inv(col_of(w[r - 1]))]);
                --r;
            }
            if (r == i) {
                coincidence(f, b);
                return;
            }
            if (r == i + 1) {
                // deduction closing the scan
                table_[f][col_of(w[i])] = b;
                table_[b][col_inv(col_of(w[i]))] = f;
                return;
            }
            define(f, col_of(w[i]));
        }
    }

    const Presentation& P_;
    int width_;
    long limit_;
    std::vector<std::vector<int>> table_;
    std::vector<int> parent_;
};

} // namespace detail

/// Enumerate the cosets of the subgroup generated by `subgroup_words`; over
/// the trivial subgroup this is the regular representation of the group.
inline CosetTable todd_coxeter(const Presentation& P,
                               const std::vector<Word>& subgroup_words = {},
                               long limit = 0) {
    if (limit <= 0) limit = Limits::get().coset_limit;
    detail::CosetEnumerator E(P, subgroup_words, limit);
    return E.result();
}

/// The regular permutation group realized by a coset table over the trivial
/// subgroup: cosets are the group elements, coset 0 the identity.
inline FiniteGroup regular_group(const CosetTable& T) {
    require(T.cosets <= 10000, "regular representation degree bound exceeded");
    int n = (int)T.cosets;
    int g = (int)T.action.size();
    // perm[d] = right multiplication by the element of coset d
    std::vector<std::vector<int>> perm(n);
    std::vector<int> order;       // BFS over (coset, via-generator-column)
    std::vector<char> seen(n, 0);
    perm[0].resize(n);
    for (int c = 0; c < n; ++c) perm[0][c] = c;
    seen[0] = 1;
    order.push_back(0);
    for (size_t i = 0; i < order.size(); ++i) {
        int d0 = order[i];
        for (int x = 0; x < 2 * g; ++x) {
            const auto& act = x % 2 ? T.action_inv[x / 2] : T.action[x / 2];
            int d = act[d0];
            if (seen[d]) continue;
            seen[d] = 1;
            perm[d].resize(n);
            for (int c = 0; c < n; ++c) perm[d][c] = act[perm[d0][c]];
            order.push_back(d);
        }
    }
    for (int c = 0; c < n; ++c)
        require(seen[c], "coset table is not transitive");
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) mul[c][d] = perm[d][c];
    return FiniteGroup::from_tables(std::move(mul));
}

struct GroupAnalysis {
    long order = 0;
    std::vector<int> center;
    std::vector<long> class_sizes; // sorted ascending
    long derived_order = 0;
};

inline GroupAnalysis analyze_group(const FiniteGroup& G) {
    GroupAnalysis A;
    A.order = G.order();
    A.center = G.center();
    for (const auto& c : G.conjugacy_classes())
        A.class_sizes.push_back((long)c.size());
    std::sort(A.class_sizes.begin(), A.class_sizes.end());
    A.derived_order = (long)G.derived_subgroup().size();
    return A;
}

inline GroupAnalysis perm_group_analysis(const CosetTable& T) {
    return analyze_group(regular_group(T));
}

struct CentralQuotient {
    FiniteGroup Q;
    std::vector<int> projection; // parent index -> quotient index
};

/// Quotient by the unique central subgroup of order n; the center must be
/// cyclic.
inline CentralQuotient central_quotient(const FiniteGroup& G, long n) {
    auto Z = G.center();
    int gen = -1;
    for (int z : Z)
        if (G.element_order(z) == (int)Z.size()) gen = z;
    require(gen >= 0, "center is not cyclic");
    require(n >= 1 && (long)Z.size() % n == 0, "n must divide the center order");
    int step = G.power(gen, (long)Z.size() / n);
    std::vector<int> sub{0};
    for (int x = step; x != 0; x = G.mult(x, step)) sub.push_back(x);
    std::sort(sub.begin(), sub.end());
    CentralQuotient out;
    out.Q = G.quotient(sub, &out.projection);
    return out;
}

// Reviewed fixtures: two presentations of the sixfold cover of A6 (order
// 2160, center cyclic of order 6).
inline const char* A6_COVER_SCHUR =
    "g1, g2, g3, g4, z | "
    "g1^3z^3, g2^2z^3, g3^2z^3, g4^2z^3, "
    "(g1g2z)^3, (g2g3z)^3, (g3g4z)^3, "
    "(g1g3)^2z^3, (g2g4)^2z^3, (g1g4)^2z, "
    "z^6, [z,g1], [z,g2], [z,g3], [z,g4]";

inline const char* A6_COVER_ROBERTSON =
    "a, b | ab^3(ba)^-4, (ab^2ab^-2)^2ab^2";

inline const char* A5_TRIANGLE = "a, b | a^2, b^3, (ab)^5";

} // namespace pslrack
