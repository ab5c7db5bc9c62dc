#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "lot/word.hpp"

using namespace lot;

namespace {

Word make(std::initializer_list<std::pair<int, int>> letters) {
    Word w;
    for (auto [sym, sign] : letters) w.push_back({sym, sign});
    return w;
}

Word random_word(std::mt19937& rng, int syms, int len) {
    Word w;
    std::uniform_int_distribution<int> sym(0, syms - 1), sign(0, 1);
    for (int i = 0; i < len; ++i) w.push_back({sym(rng), sign(rng) ? 1 : -1});
    return w;
}

// Insert cancelling pairs at random positions; the free reduction must not
// change.
Word pad_with_cancellations(std::mt19937& rng, Word w, int pairs, int syms) {
    std::uniform_int_distribution<int> sym(0, syms - 1), sign(0, 1);
    for (int i = 0; i < pairs; ++i) {
        std::uniform_int_distribution<size_t> pos(0, w.size());
        size_t p = pos(rng);
        Letter l{sym(rng), sign(rng) ? 1 : -1};
        w.insert(w.begin() + static_cast<long>(p), {l, {l.sym, -l.sign}});
    }
    return w;
}

}  // namespace

TEST_CASE("free reduction") {
    CHECK(free_reduce({}) == Word{});
    CHECK(free_reduce(make({{0, 1}, {0, -1}})) == Word{});
    CHECK(free_reduce(make({{0, 1}, {1, 1}, {1, -1}, {0, -1}})) == Word{});
    CHECK(free_reduce(make({{0, 1}, {1, -1}, {1, 1}, {2, 1}})) == make({{0, 1}, {2, 1}}));
    // same-symbol same-sign neighbours do not cancel
    CHECK(free_reduce(make({{0, 1}, {0, 1}})) == make({{0, 1}, {0, 1}}));

    std::mt19937 rng(20240814);
    for (int trial = 0; trial < 200; ++trial) {
        Word w = random_word(rng, 4, 12);
        Word r = free_reduce(w);
        CHECK(free_reduce(r) == r);
        CHECK(free_reduce(pad_with_cancellations(rng, w, 5, 4)) == r);
        Word ww = w;
        Word inv = inverse(w);
        ww.insert(ww.end(), inv.begin(), inv.end());
        CHECK(free_reduce(ww) == Word{});
    }
}

TEST_CASE("inverse") {
    Word w = make({{0, 1}, {1, -1}, {2, 1}});
    CHECK(inverse(w) == make({{2, -1}, {1, 1}, {0, -1}}));
    CHECK(inverse(inverse(w)) == w);
    CHECK(inverse(Word{}) == Word{});
}

TEST_CASE("cyclic reduction and equality") {
    // conjugate of a reduced word strips down to a rotation of it
    Word core = make({{0, 1}, {1, 1}});
    Word conj = make({{2, 1}, {0, 1}, {1, 1}, {2, -1}});
    CHECK(cyclic_reduce(conj) == make({{0, 1}, {1, 1}}));
    CHECK(cyclic_equal(conj, core));

    CHECK(cyclic_equal(make({{0, 1}, {1, 1}, {2, 1}}), make({{2, 1}, {0, 1}, {1, 1}})));
    CHECK_FALSE(cyclic_equal(make({{0, 1}, {1, 1}}), make({{1, 1}, {0, -1}})));
    CHECK_FALSE(cyclic_equal(make({{0, 1}}), inverse(make({{0, 1}}))));
    CHECK(cyclic_equal(make({{0, 1}, {1, 1}}), inverse(make({{0, 1}, {1, 1}})), true));
    CHECK(cyclic_equal(Word{}, make({{0, 1}, {0, -1}})));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        Word w = free_reduce(random_word(rng, 3, 8));
        if (w.empty()) continue;
        std::uniform_int_distribution<size_t> pos(0, w.size() - 1);
        size_t p = pos(rng);
        Word rot(w.begin() + static_cast<long>(p), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(p));
        CHECK(cyclic_equal(w, rot));
        CHECK(cyclic_equal(w, inverse(rot), true));
    }
}

TEST_CASE("exponent sums and occurrences") {
    Word w = make({{0, 1}, {1, -1}, {0, 1}, {2, -1}, {0, -1}});
    CHECK(exponent_sum(w, 0) == 1);
    CHECK(exponent_sum(w, 1) == -1);
    CHECK(exponent_sum(w, 3) == 0);
    CHECK(occurrences(w, 0) == 3);
    CHECK(occurrences(w, 2) == 1);
    CHECK(occurrences(w, 3) == 0);
}

TEST_CASE("positivity classes") {
    CHECK(positivity(make({{0, 1}, {1, -1}}), 2) == Positivity::Absent);
    CHECK(positivity(make({{0, 1}, {0, 1}}), 0) == Positivity::StrictlyPositive);
    CHECK(positivity(make({{0, -1}, {1, 1}}), 0) == Positivity::StrictlyNegative);
    CHECK(positivity(make({{0, 1}, {0, -1}}), 0) == Positivity::Mixed);
    CHECK(is_positive(Positivity::Absent));
    CHECK(is_negative(Positivity::Absent));
    CHECK(is_positive(Positivity::StrictlyPositive));
    CHECK_FALSE(is_positive(Positivity::StrictlyNegative));
    CHECK_FALSE(is_positive(Positivity::Mixed));
    CHECK_FALSE(is_negative(Positivity::Mixed));
    CHECK(std::string(positivity_name(Positivity::Mixed)) == "mixed");
}

TEST_CASE("alternating words") {
    CHECK_FALSE(is_alternating(Word{}));  // needs at least one sign change
    CHECK(is_alternating(make({{0, 1}, {1, -1}})));
    CHECK(is_alternating(make({{0, -1}, {1, 1}, {2, -1}, {3, 1}})));
    CHECK_FALSE(is_alternating(make({{0, 1}})));                    // odd length
    CHECK_FALSE(is_alternating(make({{0, 1}, {1, 1}})));            // repeat inside
    CHECK_FALSE(is_alternating(make({{0, 1}, {1, -1}, {2, 1}})));   // odd length
    CHECK_FALSE(is_alternating(make({{0, 1}, {1, -1}, {2, -1}, {3, 1}})));
}

TEST_CASE("rotation to a starting sign") {
    Word w = make({{3, 1}, {0, -1}, {1, 1}, {2, -1}});
    Word minus = rotate_to_sign(w, -1);
    CHECK(is_alternating(minus));
    CHECK(minus.front().sign == -1);
    CHECK(cyclic_equal(minus, w));
    // lexicographically least among the two valid rotations starting negative
    CHECK(minus == make({{0, -1}, {1, 1}, {2, -1}, {3, 1}}));
    Word plus = rotate_to_sign(w, 1);
    CHECK(plus.front().sign == 1);
    CHECK(plus == make({{1, 1}, {2, -1}, {3, 1}, {0, -1}}));
}

TEST_CASE("formatting") {
    std::vector<std::string> names{"u", "x", "y"};
    CHECK(format_word(make({{0, 1}, {2, -1}}), names) == "u y^-1");
    CHECK(format_word(make({{kSymX, 1}, {1, 1}, {kSymY, -1}}), names) == "X x Y^-1");
    CHECK(format_word(Word{}, names).empty());
}
