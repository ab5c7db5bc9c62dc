#pragma once

#include <string>
#include <vector>

namespace lot {

// Letters are signed symbols: a vertex index (>= 0) or one of the two
// special edges X, Y of the extended cover.
inline constexpr int kSymX = -1;
inline constexpr int kSymY = -2;

struct Letter {
    int sym = 0;
    int sign = 1;  // +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word inverse(const Word& w);
Word free_reduce(const Word& w);

// Freely reduce, then strip cancelling first/last letters until none.
Word cyclic_reduce(const Word& w);

// Equality of cyclically reduced forms up to rotation (and inversion when
// allow_inverse is set).
bool cyclic_equal(const Word& a, const Word& b, bool allow_inverse = false);

int exponent_sum(const Word& w, int sym);
int occurrences(const Word& w, int sym);

// Sign classification of the occurrences of one symbol.  The classifier
// returns the most specific class; the non-strict predicates below treat
// "absent" as vacuously positive and negative.
enum class Positivity { Absent, StrictlyPositive, StrictlyNegative, Mixed };

Positivity positivity(const Word& w, int sym);
bool is_positive(Positivity p);
bool is_negative(Positivity p);
const char* positivity_name(Positivity p);

// True when the word has even length and signs strictly alternate,
// including across the wraparound.
bool is_alternating(const Word& w);

// Rotate an alternating word so it starts with the given sign, choosing the
// lexicographically least among the valid rotations.
Word rotate_to_sign(const Word& w, int sign);

std::string format_letter(const Letter& l, const std::vector<std::string>& names);
std::string format_word(const Word& w, const std::vector<std::string>& names);

}  // namespace lot
