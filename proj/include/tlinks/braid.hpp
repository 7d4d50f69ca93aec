#pragma once

// Braid words on a fixed strand count, and the permutations of their closures.
//
// Conventions, fixed once for the whole library:
//   * letters are read left to right = top to bottom of the diagram;
//   * letter e > 0 is sigma_e: the strand at position e crosses OVER the
//     strand at position e+1 (so Lorenz braids are all-positive);
//   * letter e < 0 is the inverse crossing.
// Words are kept verbatim; nothing reduces or normalizes a word unless
// free_reduce is called explicitly.

#include <cstdint>
#include <vector>

namespace tlinks {

class BraidWord {
public:
    // trivial braid on one strand
    BraidWord() = default;

    // Validates: strands >= 1, every letter e has e != 0 and |e| < strands.
    static BraidWord make(int strands, std::vector<int> letters);

    int strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    // exponent sum; the writhe of the closure diagram
    long long writhe() const;
    bool positive() const;

    bool operator==(const BraidWord&) const = default;

private:
    int strands_ = 1;
    std::vector<int> letters_;
};

struct Permutation {
    // image[i-1] = position at the bottom reached by the strand entering at
    // position i at the top (values 1..size)
    std::vector<int> image;

    static Permutation identity(int n);
    int size() const { return static_cast<int>(image.size()); }
    bool is_identity() const;
    int cycle_count() const;

    bool operator==(const Permutation&) const = default;
};

// Concatenation of words on the same strand count.
BraidWord compose(const BraidWord& a, const BraidWord& b);

// Every letter index |e| is replaced by |e| + offset (sign kept) and the word
// is re-homed on new_strands strands. offset may be negative.
BraidWord shifted(const BraidWord& b, int offset, int new_strands);

// Reverse the word and invert every letter.
BraidWord inverse(const BraidWord& b);

// Negate every letter (mirror image of the closure).
BraidWord mirrored(const BraidWord& b);

// Cyclic rotation of the letters by k places; closure is unchanged.
BraidWord rotated(const BraidWord& b, long long k);

// Cancel adjacent sigma sigma^-1 pairs until none remain.
BraidWord free_reduce(const BraidWord& b);

Permutation underlying_permutation(const BraidWord& b);

// Number of components of the closure = cycles of the permutation.
int component_count(const BraidWord& b);

// |halftwists| copies of a positive (or negative) half twist on the last
// `width` strands of `total_strands` strands.  width 1 or halftwists 0 gives
// the empty word.
BraidWord delta_power(int total_strands, int width, long long halftwists);

// s copies of the ascending run sigma_{1+d}..sigma_{d+r-1}; for s < 0, -s
// copies of the descending inverse run sigma_{d+r-1}^-1..sigma_{1+d}^-1.
BraidWord torus_block(int r, long long s, int d, int total_strands);

enum class Side { left, right };

// Markov destabilization for the single-occurrence pattern only: the named
// boundary generator must occur exactly once, positively.  The mirror move
// (a single negative occurrence) is behind the allow_negative flag.
BraidWord destabilize(const BraidWord& b, Side side, bool allow_negative = false);

}  // namespace tlinks
