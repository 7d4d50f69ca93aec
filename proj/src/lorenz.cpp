#include "tlinks/lorenz.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tlinks/errors.hpp"

namespace tlinks {

namespace {

constexpr long long kMaxPoints = 1LL << 20;

// expand a syllable word to its letter string, 0 = x, 1 = y
std::vector<char> expand_word(const std::vector<Syllable>& word) {
    long long len = 0;
    for (const Syllable& s : word) len += s.xs + s.ys;
    if (len > kMaxPoints)
        throw resource_limit_error("code word expands to " + std::to_string(len) + " letters");
    std::vector<char> out;
    out.reserve(static_cast<std::size_t>(len));
    for (const Syllable& s : word) {
        out.insert(out.end(), static_cast<std::size_t>(s.xs), 0);
        out.insert(out.end(), static_cast<std::size_t>(s.ys), 1);
    }
    return out;
}

bool is_rotation(const std::vector<char>& a, const std::vector<char>& b) {
    if (a.size() != b.size()) return false;
    std::vector<char> doubled(a);
    doubled.insert(doubled.end(), a.begin(), a.end());
    return std::search(doubled.begin(), doubled.end(), b.begin(), b.end()) != doubled.end();
}

bool is_primitive(const std::vector<char>& w) {
    const std::size_t n = w.size();
    for (std::size_t t = 1; t < n; ++t) {
        if (n % t != 0) continue;
        bool periodic = true;
        for (std::size_t i = 0; i + t < n && periodic; ++i)
            if (w[i] != w[i + t]) periodic = false;
        if (periodic) return false;
    }
    return true;
}

void validate_syllables(const std::vector<std::vector<Syllable>>& words) {
    for (const auto& word : words) {
        if (word.empty()) throw std::invalid_argument("code word must have at least one syllable");
        for (const Syllable& s : word)
            if (s.xs < 1 || s.ys < 1)
                throw std::invalid_argument("code word exponents must be >= 1");
    }
}

}  // namespace

CodeWordSet CodeWordSet::make(std::vector<std::vector<Syllable>> words) {
    validate_syllables(words);
    std::vector<std::vector<char>> expanded;
    expanded.reserve(words.size());
    for (const auto& w : words) expanded.push_back(expand_word(w));
    for (std::size_t i = 0; i < expanded.size(); ++i) {
        if (!is_primitive(expanded[i]))
            throw std::invalid_argument("code word " + std::to_string(i + 1) +
                                        " is a proper power of a shorter word");
        for (std::size_t j = i + 1; j < expanded.size(); ++j)
            if (is_rotation(expanded[i], expanded[j]))
                throw std::invalid_argument("code words " + std::to_string(i + 1) + " and " +
                                            std::to_string(j + 1) +
                                            " describe the same periodic orbit");
    }
    CodeWordSet cw;
    cw.words_ = std::move(words);
    return cw;
}

CodeWordSet CodeWordSet::make_allowing_parallel(std::vector<std::vector<Syllable>> words) {
    validate_syllables(words);
    for (const auto& w : words)
        if (!is_primitive(expand_word(w)))
            throw std::invalid_argument("code word is a proper power of a shorter word");
    CodeWordSet cw;
    cw.words_ = std::move(words);
    return cw;
}

LorenzPermutation LorenzPermutation::make(std::vector<int> image, int p) {
    const int n = static_cast<int>(image.size());
    if (p < 0 || p > n) throw std::invalid_argument("p out of range");
    std::vector<char> seen(n, 0);
    for (int v : image) {
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("image is not a permutation of 1..N");
        seen[v - 1] = 1;
    }
    if (p == 0) {
        // no overcrossing strands: only the unlink's identity qualifies
        for (int i = 0; i < n; ++i)
            if (image[i] != i + 1)
                throw std::invalid_argument("a template permutation with p = 0 must be trivial");
        LorenzPermutation lp;
        lp.image_ = std::move(image);
        return lp;
    }
    for (int i = 1; i <= p; ++i) {
        if (image[i - 1] <= i)
            throw std::invalid_argument("overcrossing strand " + std::to_string(i) +
                                        " must move right");
        if (i > 1 && image[i - 1] <= image[i - 2])
            throw std::invalid_argument("overcrossing strands must not cross each other");
    }
    for (int j = p + 1; j <= n; ++j) {
        if (image[j - 1] >= j)
            throw std::invalid_argument("undercrossing strand " + std::to_string(j) +
                                        " must move left");
        if (j > p + 1 && image[j - 1] <= image[j - 2])
            throw std::invalid_argument("undercrossing strands must not cross each other");
    }
    LorenzPermutation lp;
    lp.image_ = std::move(image);
    lp.p_ = p;
    return lp;
}

LorenzVector LorenzVector::make(std::vector<std::pair<int, long long>> pairs) {
    int prev = 1;
    long long p = 0;
    for (auto [d, s] : pairs) {
        if (d < 2) throw std::invalid_argument("vector entries need d >= 2");
        if (d <= prev) throw std::invalid_argument("vector entries must strictly increase");
        if (s < 1) throw std::invalid_argument("vector multiplicities must be >= 1");
        prev = d;
        p += s;
    }
    if (!pairs.empty() && p + pairs.back().first > kMaxPoints)
        throw resource_limit_error("vector spans too many strands to materialize");
    LorenzVector v;
    v.pairs_ = std::move(pairs);
    return v;
}

long long LorenzVector::p() const {
    long long t = 0;
    for (auto [d, s] : pairs_) t += s;
    return t;
}

int LorenzVector::max_displacement() const { return pairs_.empty() ? 0 : pairs_.back().first; }

long long LorenzVector::strand_count() const { return p() + max_displacement(); }

long long trip_number(const CodeWordSet& cw) {
    long long n = 0;
    for (const auto& w : cw.words()) n += static_cast<long long>(w.size());
    return n;
}

LorenzPermutation permutation_from_code_words(const CodeWordSet& cw) {
    std::vector<std::vector<char>> letters;
    letters.reserve(cw.words().size());
    long long total = 0;
    for (const auto& w : cw.words()) {
        letters.push_back(expand_word(w));
        total += static_cast<long long>(letters.back().size());
    }
    if (total > kMaxPoints) throw resource_limit_error("too many branch-line points");

    struct Point {
        int word;
        int offset;
    };
    std::vector<Point> points;
    points.reserve(static_cast<std::size_t>(total));
    for (std::size_t w = 0; w < letters.size(); ++w)
        for (std::size_t t = 0; t < letters[w].size(); ++t)
            points.push_back({static_cast<int>(w), static_cast<int>(t)});

    // Compare infinite forward itineraries; two periodic sequences that agree
    // for the sum of their periods agree everywhere.  Ties are parallel
    // components and keep word order.
    auto cmp = [&](const Point& a, const Point& b) {
        const auto& wa = letters[a.word];
        const auto& wb = letters[b.word];
        const std::size_t bound = wa.size() + wb.size();
        for (std::size_t m = 0; m < bound; ++m) {
            const char ca = wa[(a.offset + m) % wa.size()];
            const char cb = wb[(b.offset + m) % wb.size()];
            if (ca != cb) return ca < cb;
        }
        if (a.word == b.word && a.offset != b.offset)
            throw std::invalid_argument(
                "two branch-line points have identical infinite itineraries");
        return a.word < b.word;
    };
    std::stable_sort(points.begin(), points.end(),
                     [&](const Point& a, const Point& b) {
                         if (a.word == b.word && a.offset == b.offset) return false;
                         return cmp(a, b);
                     });

    // rank[word][offset] = 1-based sorted position
    std::vector<std::vector<int>> rank(letters.size());
    for (std::size_t w = 0; w < letters.size(); ++w) rank[w].resize(letters[w].size());
    for (std::size_t r = 0; r < points.size(); ++r)
        rank[points[r].word][points[r].offset] = static_cast<int>(r) + 1;

    std::vector<int> image(points.size());
    int p = 0;
    for (std::size_t r = 0; r < points.size(); ++r) {
        const Point& pt = points[r];
        const auto& w = letters[pt.word];
        image[r] = rank[pt.word][(pt.offset + 1) % static_cast<int>(w.size())];
        if (w[pt.offset] == 0) ++p;
    }
    return LorenzPermutation::make(std::move(image), p);
}

CodeWordSet code_words_from_permutation(const LorenzPermutation& lp) {
    const int n = lp.size();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<Syllable>> words;
    if (lp.p() == 0) return CodeWordSet::make_allowing_parallel({});  // trivial loops only
    for (int start = 1; start <= n; ++start) {
        if (seen[start - 1]) continue;
        // trace the cycle from its smallest position; it begins on the x side
        std::vector<char> symbols;
        int j = start;
        do {
            seen[j - 1] = 1;
            symbols.push_back(j <= lp.p() ? 0 : 1);
            j = lp.image()[j - 1];
        } while (j != start);
        std::vector<Syllable> word;
        std::size_t i = 0;
        while (i < symbols.size()) {
            Syllable s;
            s.xs = 0;
            while (i < symbols.size() && symbols[i] == 0) ++s.xs, ++i;
            s.ys = 0;
            while (i < symbols.size() && symbols[i] == 1) ++s.ys, ++i;
            if (s.xs == 0 || s.ys == 0)
                throw std::logic_error("cycle reading produced a malformed syllable");
            word.push_back(s);
        }
        words.push_back(std::move(word));
    }
    return CodeWordSet::make_allowing_parallel(std::move(words));
}

LorenzPermutation permutation_from_vector(const LorenzVector& v) {
    const long long p_ll = v.p();
    const long long n_ll = v.strand_count();
    if (n_ll > kMaxPoints) throw resource_limit_error("vector spans too many strands");
    const int p = static_cast<int>(p_ll);
    const int n = static_cast<int>(n_ll);

    std::vector<int> image(n, 0);
    std::vector<char> used(n + 1, 0);
    int i = 0;
    for (auto [d, s] : v.pairs())
        for (long long c = 0; c < s; ++c) {
            ++i;
            image[i - 1] = i + d;
            used[i + d] = 1;
        }
    int j = p;
    for (int target = 1; target <= n; ++target) {
        if (used[target]) continue;
        image[j++] = target;  // undercrossing strands fill the complement in order
    }
    return LorenzPermutation::make(std::move(image), p);
}

LorenzVector vector_from_permutation(const LorenzPermutation& lp) {
    std::vector<int> image = lp.image();
    int p = lp.p();
    // destabilize while the first overcrossing strand moves by one
    while (p >= 1 && image[0] == 2) {
        const int n = static_cast<int>(image.size());
        std::vector<int> next;
        next.reserve(n - 1);
        for (int i = 2; i <= n; ++i) {
            const int v = image[i - 1];
            next.push_back(v == 1 ? 1 : v - 1);  // codomain drops position 2
        }
        image = std::move(next);
        --p;
    }
    std::vector<std::pair<int, long long>> pairs;
    for (int i = 1; i <= p; ++i) {
        const int r = image[i - 1] - i;
        if (!pairs.empty() && pairs.back().first == r)
            ++pairs.back().second;
        else
            pairs.push_back({r, 1});
    }
    return LorenzVector::make(std::move(pairs));
}

BraidWord permutation_braid(const LorenzPermutation& lp) {
    const int n = lp.size();
    if (n == 0) return BraidWord::make(1, {});
    std::vector<int> letters;
    // each overcrossing strand dives right across its displacement, rightmost
    // strand first, so over-strands never cross each other
    for (int i = lp.p(); i >= 1; --i) {
        const int r = lp.displacement(i);
        for (int q = i; q <= i + r - 1; ++q) letters.push_back(q);
    }
    return BraidWord::make(n, std::move(letters));
}

BraidWord lorenz_braid(const LorenzVector& v) {
    if (v.empty()) return BraidWord::make(1, {});
    return permutation_braid(permutation_from_vector(v));
}

long long trip_number_of_vector(const LorenzVector& v) {
    const long long p = v.p();
    long long count = 0;
    long long i = 0;
    for (auto [d, s] : v.pairs())
        for (long long c = 0; c < s; ++c) {
            ++i;
            if (i + d > p) ++count;
        }
    return count;
}

}  // namespace tlinks
