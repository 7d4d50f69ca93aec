#include "doctest.h"

#include <random>
#include <stdexcept>

#include "tlinks/braid.hpp"
#include "tlinks/lorenz.hpp"

using namespace tlinks;

namespace {

CodeWordSet words(std::initializer_list<std::vector<Syllable>> ws) {
    return CodeWordSet::make(std::vector<std::vector<Syllable>>(ws));
}

LorenzVector vec(std::initializer_list<std::pair<int, long long>> pairs) {
    return LorenzVector::make(std::vector<std::pair<int, long long>>(pairs));
}

long long brute_inversions(const std::vector<int>& image) {
    long long inv = 0;
    for (std::size_t i = 0; i < image.size(); ++i)
        for (std::size_t j = i + 1; j < image.size(); ++j)
            if (image[i] > image[j]) ++inv;
    return inv;
}

LorenzVector random_vector(std::mt19937& rng, long long max_p, int max_d) {
    std::uniform_int_distribution<int> kd(1, 3);
    const int k = kd(rng);
    std::vector<int> ds;
    std::uniform_int_distribution<int> dd(2, max_d);
    while (static_cast<int>(ds.size()) < k) {
        int d = dd(rng);
        bool fresh = true;
        for (int x : ds) fresh = fresh && (x != d);
        if (fresh) ds.push_back(d);
    }
    std::sort(ds.begin(), ds.end());
    std::vector<std::pair<int, long long>> pairs;
    long long budget = max_p;
    for (int i = 0; i < k; ++i) {
        const long long room = budget - (k - 1 - i);
        std::uniform_int_distribution<long long> sd(1, std::max(1LL, room));
        long long s = sd(rng);
        budget -= s;
        pairs.push_back({ds[i], s});
    }
    return LorenzVector::make(std::move(pairs));
}

}  // namespace

TEST_CASE("trip number counts syllables") {
    CHECK(trip_number(words({{{2, 1}, {1, 1}}})) == 2);  // x^2 y x y
    // x^10 y^2 x^5 y^2 x^7 y^6 x^2 y^2 x^5 y^3
    CHECK(trip_number(words({{{10, 2}, {5, 2}, {7, 6}, {2, 2}, {5, 3}}})) == 5);
    CHECK(trip_number(words({{{1, 1}}})) == 1);  // xy
}

TEST_CASE("code word validation") {
    CHECK_THROWS_AS(words({{{1, 1}}, {{1, 1}}}), std::invalid_argument);  // {xy, xy}
    CHECK_THROWS_AS(words({{{1, 1}, {1, 1}}}), std::invalid_argument);    // xyxy = (xy)^2
    CHECK_THROWS_AS(words({{{0, 1}}}), std::invalid_argument);
    // rotations of one another: x^2 y x y vs x y x^2 y
    CHECK_THROWS_AS(words({{{2, 1}, {1, 1}}, {{1, 1}, {2, 1}}}), std::invalid_argument);
    // distinct orbits pass
    CHECK_NOTHROW(words({{{1, 1}}, {{2, 1}}}));
}

TEST_CASE("bunch construction: points sorted by itinerary, image is the shift") {
    const LorenzPermutation lp = permutation_from_code_words(words({{{2, 1}, {1, 1}}}));
    CHECK(lp.image() == std::vector<int>{3, 4, 5, 1, 2});
    CHECK(lp.p() == 3);

    const LorenzPermutation xy = permutation_from_code_words(words({{{1, 1}}}));
    CHECK(xy.image() == std::vector<int>{2, 1});
    CHECK(xy.p() == 1);
}

TEST_CASE("cycle reading recovers code words") {
    const LorenzPermutation lp = LorenzPermutation::make({3, 4, 5, 1, 2}, 3);
    const CodeWordSet cw = code_words_from_permutation(lp);
    REQUIRE(cw.words().size() == 1);
    CHECK(cw.words()[0] == std::vector<Syllable>{{2, 1}, {1, 1}});  // x^2 y x y

    const CodeWordSet hopf = code_words_from_permutation(LorenzPermutation::make({2, 1}, 1));
    CHECK(hopf.words()[0] == std::vector<Syllable>{{1, 1}});

    // <2^1>: image [3,1,2], cycle 1 -> 3 -> 2 reads x y y
    const CodeWordSet xyy = code_words_from_permutation(LorenzPermutation::make({3, 1, 2}, 1));
    CHECK(xyy.words()[0] == std::vector<Syllable>{{1, 2}});

    // p = 0 permutations are trivial loops with no code words
    CHECK(code_words_from_permutation(LorenzPermutation::make({1, 2}, 0)).empty());
}

TEST_CASE("permutation from vector") {
    const LorenzPermutation a = permutation_from_vector(vec({{2, 3}}));
    CHECK(a.image() == std::vector<int>{3, 4, 5, 1, 2});
    CHECK(a.p() == 3);

    const LorenzPermutation b = permutation_from_vector(vec({{2, 2}, {4, 2}, {7, 3}, {8, 2}}));
    CHECK(b.p() == 9);
    CHECK(b.size() == 17);
    const std::vector<int> expected{3, 4, 7, 8, 12, 13, 14, 16, 17,
                                    1, 2, 5, 6, 9, 10, 11, 15};
    CHECK(b.image() == expected);

    const LorenzPermutation c = permutation_from_vector(vec({{2, 1}}));
    CHECK(c.image() == std::vector<int>{3, 1, 2});
    CHECK(c.p() == 1);

    CHECK(permutation_from_vector(LorenzVector{}).size() == 0);
}

TEST_CASE("vector from permutation, including destabilization") {
    CHECK(vector_from_permutation(LorenzPermutation::make({3, 4, 5, 1, 2}, 3)) == vec({{2, 3}}));
    const LorenzVector fig = vec({{2, 2}, {4, 2}, {7, 3}, {8, 2}});
    CHECK(vector_from_permutation(permutation_from_vector(fig)) == fig);
    // r_1 = 1 twice: shrinks to the empty vector (unknot)
    CHECK(vector_from_permutation(LorenzPermutation::make({2, 3, 1}, 2)).empty());
}

TEST_CASE("template braid of a vector") {
    CHECK(lorenz_braid(vec({{2, 3}})) == BraidWord::make(5, {3, 4, 2, 3, 1, 2}));
    CHECK(lorenz_braid(vec({{2, 1}})) == BraidWord::make(3, {1, 2}));
    CHECK(lorenz_braid(LorenzVector{}) == BraidWord::make(1, {}));

    // positive, letter count = inversions, permutation round trip
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const LorenzVector v = random_vector(rng, 8, 8);
        const LorenzPermutation lp = permutation_from_vector(v);
        const BraidWord braid = permutation_braid(lp);
        CHECK(braid.positive());
        CHECK(static_cast<long long>(braid.size()) == brute_inversions(lp.image()));
        CHECK(underlying_permutation(braid).image == lp.image());
    }
}

TEST_CASE("trip number of a vector counts strands crossing to the right lobe") {
    CHECK(trip_number_of_vector(vec({{2, 3}})) == 2);
    CHECK(trip_number_of_vector(vec({{4, 3}, {5, 2}, {7, 2}})) == 4);
    CHECK(trip_number_of_vector(vec({{2, 2}, {4, 2}, {7, 3}, {8, 2}})) == 5);
    CHECK(trip_number_of_vector(LorenzVector{}) == 0);
}

TEST_CASE("parallel components keep word order through the bunch construction") {
    // <2^2> has two cycles with the same word xy; the cycle reading repeats it
    const LorenzPermutation lp = permutation_from_vector(vec({{2, 2}}));
    CHECK(lp.image() == std::vector<int>{3, 4, 1, 2});
    const CodeWordSet cw = code_words_from_permutation(lp);
    REQUIRE(cw.words().size() == 2);
    CHECK(cw.words()[0] == cw.words()[1]);
    CHECK(permutation_from_code_words(cw) == lp);
}

TEST_CASE("bunch construction with two distinct orbits") {
    // x^2 y and x y^2: six branch-line points, hand-sorted by itinerary
    const CodeWordSet cw = words({{{2, 1}}, {{1, 2}}});
    const LorenzPermutation lp = permutation_from_code_words(cw);
    CHECK(lp.image() == std::vector<int>{2, 4, 6, 1, 3, 5});
    CHECK(lp.p() == 3);
    CHECK(trip_number(cw) == 2);

    Permutation plain;
    plain.image = lp.image();
    CHECK(plain.cycle_count() == 2);

    // reading the vector destabilizes the slope-one strand away
    CHECK(vector_from_permutation(lp) == vec({{2, 1}, {3, 1}}));
    CHECK(trip_number_of_vector(vector_from_permutation(lp)) == 2);

    // the cycle reading gives back the words, one per component
    CHECK(code_words_from_permutation(lp) == cw);
}

TEST_CASE("consistency on the large figure word") {
    // one knot component, 44 branch-line points, 5 syllables
    const CodeWordSet cw = words({{{10, 2}, {5, 2}, {7, 6}, {2, 2}, {5, 3}}});
    const LorenzPermutation lp = permutation_from_code_words(cw);
    CHECK(lp.size() == 44);
    CHECK(lp.p() == 29);
    CHECK(trip_number_of_vector(vector_from_permutation(lp)) == 5);
    CHECK(code_words_from_permutation(lp) == cw);
}

TEST_CASE("random word sets round-trip through the template permutation") {
    std::mt19937 rng(61);
    std::uniform_int_distribution<int> wc(1, 2);
    std::uniform_int_distribution<int> syl(1, 3);
    std::uniform_int_distribution<long long> ex(1, 3);

    auto expand = [](const std::vector<Syllable>& w) {
        std::string s;
        for (const Syllable& b : w) {
            s.append(static_cast<std::size_t>(b.xs), 'x');
            s.append(static_cast<std::size_t>(b.ys), 'y');
        }
        return s;
    };
    auto rotations_match = [&](const std::vector<Syllable>& a, const std::vector<Syllable>& b) {
        const std::string sa = expand(a), sb = expand(b);
        return sa.size() == sb.size() && (sa + sa).find(sb) != std::string::npos;
    };

    int tested = 0;
    while (tested < 60) {
        std::vector<std::vector<Syllable>> ws;
        const int n = wc(rng);
        for (int i = 0; i < n; ++i) {
            std::vector<Syllable> w;
            const int m = syl(rng);
            for (int j = 0; j < m; ++j) w.push_back({ex(rng), ex(rng)});
            ws.push_back(std::move(w));
        }
        CodeWordSet cw;
        try {
            cw = CodeWordSet::make(ws);
        } catch (const std::invalid_argument&) {
            continue;  // sampled a power or a duplicate orbit
        }
        ++tested;

        const LorenzPermutation lp = permutation_from_code_words(cw);
        const CodeWordSet back = code_words_from_permutation(lp);
        CHECK(permutation_from_code_words(back) == lp);

        // each emitted word is a rotation of exactly one input word
        REQUIRE(back.words().size() == cw.words().size());
        std::vector<bool> used(cw.words().size(), false);
        for (const auto& w : back.words()) {
            bool matched = false;
            for (std::size_t i = 0; i < cw.words().size() && !matched; ++i) {
                if (!used[i] && rotations_match(cw.words()[i], w)) {
                    used[i] = true;
                    matched = true;
                }
            }
            CHECK(matched);
        }
    }
}

TEST_CASE("lorenz permutation validation") {
    CHECK_THROWS_AS(LorenzPermutation::make({2, 1, 3}, 1), std::invalid_argument);  // fixed pt
    CHECK_THROWS_AS(LorenzPermutation::make({3, 2, 1}, 1), std::invalid_argument);  // y side up
    CHECK_THROWS_AS(LorenzPermutation::make({1, 2, 3}, 1), std::invalid_argument);  // x side flat
    CHECK_THROWS_AS(LorenzPermutation::make({2, 1}, 0), std::invalid_argument);     // p=0 nontrivial
    CHECK_NOTHROW(LorenzPermutation::make({1, 2, 3}, 0));
}
