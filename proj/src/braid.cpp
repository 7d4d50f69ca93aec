#include "tlinks/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tlinks/errors.hpp"

namespace tlinks {

namespace {
// letter-count guard for materialized words (delta/torus powers can be asked
// for astronomically large exponents)
constexpr long long kMaxLetters = 1LL << 22;

void check_letter_budget(long long count) {
    if (count > kMaxLetters)
        throw resource_limit_error("braid word would have " + std::to_string(count) +
                                   " letters (limit " + std::to_string(kMaxLetters) + ")");
}
}  // namespace

BraidWord BraidWord::make(int strands, std::vector<int> letters) {
    if (strands < 1)
        throw std::invalid_argument("braid needs at least one strand, got " +
                                    std::to_string(strands));
    for (int e : letters) {
        if (e == 0) throw std::invalid_argument("braid letter 0 is not a generator");
        if (std::abs(e) >= strands)
            throw std::invalid_argument("braid letter " + std::to_string(e) +
                                        " out of range for " + std::to_string(strands) +
                                        " strands");
    }
    BraidWord b;
    b.strands_ = strands;
    b.letters_ = std::move(letters);
    return b;
}

long long BraidWord::writhe() const {
    long long w = 0;
    for (int e : letters_) w += (e > 0) ? 1 : -1;
    return w;
}

bool BraidWord::positive() const {
    return std::all_of(letters_.begin(), letters_.end(), [](int e) { return e > 0; });
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.image.resize(n);
    std::iota(p.image.begin(), p.image.end(), 1);
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (image[i] != i + 1) return false;
    return true;
}

int Permutation::cycle_count() const {
    std::vector<char> seen(image.size(), 0);
    int cycles = 0;
    for (int i = 0; i < size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        int j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = image[j] - 1;
        }
    }
    return cycles;
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands())
        throw std::invalid_argument("cannot compose braids on " + std::to_string(a.strands()) +
                                    " and " + std::to_string(b.strands()) + " strands");
    std::vector<int> letters = a.letters();
    letters.insert(letters.end(), b.letters().begin(), b.letters().end());
    return BraidWord::make(a.strands(), std::move(letters));
}

BraidWord shifted(const BraidWord& b, int offset, int new_strands) {
    std::vector<int> letters;
    letters.reserve(b.size());
    for (int e : b.letters()) {
        int idx = std::abs(e) + offset;
        if (idx < 1 || idx >= new_strands)
            throw std::invalid_argument("shift by " + std::to_string(offset) +
                                        " takes letter " + std::to_string(e) +
                                        " out of range for " + std::to_string(new_strands) +
                                        " strands");
        letters.push_back(e > 0 ? idx : -idx);
    }
    return BraidWord::make(new_strands, std::move(letters));
}

BraidWord inverse(const BraidWord& b) {
    std::vector<int> letters(b.letters().rbegin(), b.letters().rend());
    for (int& e : letters) e = -e;
    return BraidWord::make(b.strands(), std::move(letters));
}

BraidWord mirrored(const BraidWord& b) {
    std::vector<int> letters = b.letters();
    for (int& e : letters) e = -e;
    return BraidWord::make(b.strands(), std::move(letters));
}

BraidWord rotated(const BraidWord& b, long long k) {
    if (b.empty()) return b;
    long long n = static_cast<long long>(b.size());
    long long r = ((k % n) + n) % n;
    std::vector<int> letters = b.letters();
    std::rotate(letters.begin(), letters.begin() + r, letters.end());
    return BraidWord::make(b.strands(), std::move(letters));
}

BraidWord free_reduce(const BraidWord& b) {
    std::vector<int> stack;
    stack.reserve(b.size());
    for (int e : b.letters()) {
        if (!stack.empty() && stack.back() == -e)
            stack.pop_back();
        else
            stack.push_back(e);
    }
    return BraidWord::make(b.strands(), std::move(stack));
}

Permutation underlying_permutation(const BraidWord& b) {
    // who[p-1] = strand currently at position p
    std::vector<int> who(b.strands());
    std::iota(who.begin(), who.end(), 1);
    for (int e : b.letters()) {
        int a = std::abs(e);
        std::swap(who[a - 1], who[a]);
    }
    Permutation perm;
    perm.image.resize(b.strands());
    for (int pos = 1; pos <= b.strands(); ++pos) perm.image[who[pos - 1] - 1] = pos;
    return perm;
}

int component_count(const BraidWord& b) {
    return underlying_permutation(b).cycle_count();
}

BraidWord delta_power(int total_strands, int width, long long halftwists) {
    if (total_strands < 1)
        throw std::invalid_argument("half twist needs at least one strand");
    if (width < 1 || width > total_strands)
        throw std::invalid_argument("half twist width " + std::to_string(width) +
                                    " does not fit on " + std::to_string(total_strands) +
                                    " strands");
    if (width == 1 || halftwists == 0) return BraidWord::make(total_strands, {});

    const long long copies = std::llabs(halftwists);
    check_letter_budget(copies * width * (width - 1) / 2);

    const int lo = total_strands - width + 1;  // leftmost generator of the twisted block
    std::vector<int> one;
    if (halftwists > 0) {
        // (sigma_lo .. sigma_{a-1})(sigma_lo .. sigma_{a-2}) ... (sigma_lo)
        for (int top = total_strands - 1; top >= lo; --top)
            for (int q = lo; q <= top; ++q) one.push_back(q);
    } else {
        // (sigma_{a-1}^-1 .. sigma_lo^-1)(sigma_{a-1}^-1 .. sigma_{lo+1}^-1) ...
        for (int bot = lo; bot <= total_strands - 1; ++bot)
            for (int q = total_strands - 1; q >= bot; --q) one.push_back(-q);
    }
    std::vector<int> letters;
    letters.reserve(one.size() * copies);
    for (long long c = 0; c < copies; ++c) letters.insert(letters.end(), one.begin(), one.end());
    return BraidWord::make(total_strands, std::move(letters));
}

BraidWord torus_block(int r, long long s, int d, int total_strands) {
    if (r < 2) throw std::invalid_argument("torus block needs r >= 2");
    if (d < 0) throw std::invalid_argument("torus block needs d >= 0");
    if (d + r > total_strands)
        throw std::invalid_argument("torus block on strands " + std::to_string(d + 1) + ".." +
                                    std::to_string(d + r) + " does not fit on " +
                                    std::to_string(total_strands) + " strands");
    const long long copies = std::llabs(s);
    check_letter_budget(copies * (r - 1));
    std::vector<int> letters;
    letters.reserve(copies * (r - 1));
    for (long long c = 0; c < copies; ++c) {
        if (s >= 0)
            for (int q = 1 + d; q <= d + r - 1; ++q) letters.push_back(q);
        else
            for (int q = d + r - 1; q >= 1 + d; --q) letters.push_back(-q);
    }
    return BraidWord::make(total_strands, std::move(letters));
}

BraidWord destabilize(const BraidWord& b, Side side, bool allow_negative) {
    if (b.strands() < 2) throw std::invalid_argument("cannot destabilize a one-strand braid");
    const int target = (side == Side::right) ? b.strands() - 1 : 1;
    int count = 0;
    std::size_t at = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (std::abs(b.letters()[i]) == target) {
            ++count;
            at = i;
        }
    }
    if (count != 1)
        throw std::invalid_argument("destabilization needs sigma_" + std::to_string(target) +
                                    " to occur exactly once, found " + std::to_string(count));
    if (b.letters()[at] < 0 && !allow_negative)
        throw std::invalid_argument("destabilization needs the single sigma_" +
                                    std::to_string(target) + " occurrence to be positive");
    std::vector<int> letters;
    letters.reserve(b.size() - 1);
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i == at) continue;
        int e = b.letters()[i];
        if (side == Side::left) e = (e > 0) ? e - 1 : e + 1;
        letters.push_back(e);
    }
    return BraidWord::make(b.strands() - 1, std::move(letters));
}

}  // namespace tlinks
