#include "lot/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace lot {

Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back({it->sym, -it->sign});
    return out;
}

Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (const Letter& l : w) {
        if (!out.empty() && out.back().sym == l.sym &&
            out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    size_t lo = 0, hi = r.size();
    while (hi - lo >= 2 && r[lo].sym == r[hi - 1].sym &&
           r[lo].sign == -r[hi - 1].sign) {
        ++lo;
        --hi;
    }
    return Word(r.begin() + lo, r.begin() + hi);
}

static bool rotation_equal(const Word& a, const Word& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    const size_t m = a.size();
    for (size_t r = 0; r < m; ++r) {
        bool ok = true;
        for (size_t k = 0; k < m && ok; ++k)
            if (a[(r + k) % m] != b[k]) ok = false;
        if (ok) return true;
    }
    return false;
}

bool cyclic_equal(const Word& a, const Word& b, bool allow_inverse) {
    Word ra = cyclic_reduce(a);
    Word rb = cyclic_reduce(b);
    if (rotation_equal(ra, rb)) return true;
    if (allow_inverse && rotation_equal(cyclic_reduce(inverse(a)), rb))
        return true;
    return false;
}

int exponent_sum(const Word& w, int sym) {
    int s = 0;
    for (const Letter& l : w)
        if (l.sym == sym) s += l.sign;
    return s;
}

int occurrences(const Word& w, int sym) {
    int c = 0;
    for (const Letter& l : w)
        if (l.sym == sym) ++c;
    return c;
}

Positivity positivity(const Word& w, int sym) {
    bool pos = false, neg = false;
    for (const Letter& l : w) {
        if (l.sym != sym) continue;
        (l.sign > 0 ? pos : neg) = true;
    }
    if (!pos && !neg) return Positivity::Absent;
    if (pos && neg) return Positivity::Mixed;
    return pos ? Positivity::StrictlyPositive : Positivity::StrictlyNegative;
}

bool is_positive(Positivity p) {
    return p == Positivity::Absent || p == Positivity::StrictlyPositive;
}

bool is_negative(Positivity p) {
    return p == Positivity::Absent || p == Positivity::StrictlyNegative;
}

const char* positivity_name(Positivity p) {
    switch (p) {
        case Positivity::Absent: return "absent";
        case Positivity::StrictlyPositive: return "strictly-positive";
        case Positivity::StrictlyNegative: return "strictly-negative";
        case Positivity::Mixed: return "mixed";
    }
    return "?";
}

bool is_alternating(const Word& w) {
    const size_t m = w.size();
    if (m == 0 || m % 2 != 0) return false;
    for (size_t k = 0; k < m; ++k)
        if (w[k].sign != -w[(k + 1) % m].sign) return false;
    return true;
}

Word rotate_to_sign(const Word& w, int sign) {
    if (!is_alternating(w))
        throw std::invalid_argument("rotate_to_sign: word is not alternating");
    const size_t m = w.size();
    Word best;
    bool have = false;
    for (size_t off = 0; off < m; ++off) {
        if (w[off].sign != sign) continue;
        Word cand;
        cand.reserve(m);
        cand.insert(cand.end(), w.begin() + off, w.end());
        cand.insert(cand.end(), w.begin(), w.begin() + off);
        if (!have || cand < best) {
            best = std::move(cand);
            have = true;
        }
    }
    if (!have)
        throw std::invalid_argument("rotate_to_sign: no rotation with sign");
    return best;
}

std::string format_letter(const Letter& l, const std::vector<std::string>& names) {
    std::string s;
    if (l.sym == kSymX)
        s = "X";
    else if (l.sym == kSymY)
        s = "Y";
    else
        s = names.at(static_cast<size_t>(l.sym));
    if (l.sign < 0) s += "^-1";
    return s;
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
    std::string s;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) s += ' ';
        s += format_letter(w[k], names);
    }
    return s;
}

}  // namespace lot
