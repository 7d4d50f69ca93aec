#pragma once

// Symbolic dynamics on Lorenz-like templates: code words, the bunch
// construction taking code words to the permutation of the template braid,
// Lorenz vectors, trip numbers, and the positive permutation braid itself.
//
// Points on the branch line are the cyclic letter positions of the code
// words; they are ordered lexicographically by forward itinerary with x < y,
// and the permutation is the shift map read off in that order.  Equal
// itineraries from distinct words are parallel components and keep their
// word order (they arise from vectors with repeated displacements, e.g.
// <2^2>); the validating factory used by all input paths rejects them.

#include <cstdint>
#include <utility>
#include <vector>

#include "tlinks/braid.hpp"

namespace tlinks {

struct Syllable {
    long long xs = 1;  // x-exponent, >= 1
    long long ys = 1;  // y-exponent, >= 1
    bool operator==(const Syllable&) const = default;
};

class CodeWordSet {
public:
    CodeWordSet() = default;

    // Validates exponents >= 1, primitivity of each word, and pairwise
    // distinctness up to cyclic rotation.  All user input goes through here.
    static CodeWordSet make(std::vector<std::vector<Syllable>> words);

    // Faithful cycle readings may repeat a word (parallel components); this
    // skips the distinctness check but still requires well-formed syllables.
    static CodeWordSet make_allowing_parallel(std::vector<std::vector<Syllable>> words);

    const std::vector<std::vector<Syllable>>& words() const { return words_; }
    bool empty() const { return words_.empty(); }

    bool operator==(const CodeWordSet&) const = default;

private:
    std::vector<std::vector<Syllable>> words_;
};

// Permutation of a template braid: positions 1..p are the overcrossing
// (x-side) strands, positions p+1..N undercrossing.  Overcrossing images
// strictly increase and exceed their position; undercrossing images strictly
// increase and fall short of it.  p = 0 forces the identity (an unlink).
class LorenzPermutation {
public:
    LorenzPermutation() = default;  // empty (size 0, p 0)

    static LorenzPermutation make(std::vector<int> image, int p);

    const std::vector<int>& image() const { return image_; }
    int size() const { return static_cast<int>(image_.size()); }
    int p() const { return p_; }
    // displacement of overcrossing strand i (1-based, i <= p)
    int displacement(int i) const { return image_[i - 1] - i; }

    bool operator==(const LorenzPermutation&) const = default;

private:
    std::vector<int> image_;
    int p_ = 0;
};

// <d_1^{s_1}, ..., d_k^{s_k}>: overcrossing displacements d_i (strictly
// increasing, >= 2) with multiplicities s_i >= 1.  Empty encodes unlinks.
class LorenzVector {
public:
    LorenzVector() = default;

    static LorenzVector make(std::vector<std::pair<int, long long>> pairs);

    const std::vector<std::pair<int, long long>>& pairs() const { return pairs_; }
    bool empty() const { return pairs_.empty(); }
    long long p() const;            // sum of multiplicities
    int max_displacement() const;   // d_k, 0 if empty
    long long strand_count() const;  // p + d_k

    bool operator==(const LorenzVector&) const = default;

private:
    std::vector<std::pair<int, long long>> pairs_;
};

// n-bar: the total syllable count, = strands crossing left strip to right.
long long trip_number(const CodeWordSet& cw);

// The bunch construction: branch-line points sorted by itinerary, image =
// shift map, p = number of points on the x side.
LorenzPermutation permutation_from_code_words(const CodeWordSet& cw);

// Inverse reading: one word per cycle (traced from its smallest position),
// symbol x when the position is <= p.  p = 0 gives the empty set.
CodeWordSet code_words_from_permutation(const LorenzPermutation& lp);

LorenzPermutation permutation_from_vector(const LorenzVector& v);

// Reads displacements off the permutation, destabilizing away r_1 = 1
// strands first.
LorenzVector vector_from_permutation(const LorenzPermutation& lp);

// The positive braid in which every pair of strands exchanged by lp crosses
// exactly once, overcrossing strand on top; letter count equals the
// inversion count of the image.
BraidWord permutation_braid(const LorenzPermutation& lp);

// Template braid of the vector on p + d_k strands (empty vector: trivial
// braid on one strand).
BraidWord lorenz_braid(const LorenzVector& v);

// Count of overcrossing strands landing past position p; equals the braid
// index of the closure for these links.
long long trip_number_of_vector(const LorenzVector& v);

}  // namespace tlinks
