#include "tlinks/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

namespace tlinks {

namespace {

LaurentPoly delta_poly() {
    return LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
}

// Smoothing pair table for one crossing.  With arcs (a,b,c,d) listed
// counterclockwise from the incoming under-strand, the A-smoothing joins
// (a,d) and (b,c), the B-smoothing joins (a,b) and (c,d); this holds for
// both crossing signs under that labelling.
struct CrossingPairs {
    int a0, a1, a2, a3;  // A: union(a0,a1), union(a2,a3)
    int b0, b1, b2, b3;  // B: union(b0,b1), union(b2,b3)
};

int dsu_find(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

void dsu_union(std::vector<int>& parent, int x, int y) {
    x = dsu_find(parent, x);
    y = dsu_find(parent, y);
    if (x != y) parent[y] = x;
}

}  // namespace

LaurentPoly kauffman_bracket(const PDCode& pd, const OracleOptions& opts) {
    const int c = static_cast<int>(pd.crossings.size());
    if (c > opts.max_crossings)
        throw resource_limit_error("diagram has " + std::to_string(c) +
                                   " crossings, over the state-sum limit of " +
                                   std::to_string(opts.max_crossings));

    if (c == 0) {
        if (pd.free_loops == 0) return LaurentPoly::one();
        LaurentPoly d = delta_poly(), r = LaurentPoly::one();
        for (int i = 1; i < pd.free_loops; ++i) r = r * d;
        return r;
    }

    // dense arc indexing
    std::unordered_map<int, int> dense;
    for (const PDCrossing& x : pd.crossings)
        for (int a : x.arcs)
            dense.emplace(a, static_cast<int>(dense.size()));
    const int n_arcs = static_cast<int>(dense.size());

    std::vector<CrossingPairs> pairs(c);
    for (int i = 0; i < c; ++i) {
        const auto& ar = pd.crossings[i].arcs;
        const int a = dense[ar[0]], b = dense[ar[1]], cc = dense[ar[2]], d = dense[ar[3]];
        pairs[i] = CrossingPairs{a, d, b, cc, a, b, cc, d};
    }

    // Histogram over (number of B-smoothings, number of loops); the bracket
    // is assembled from it once at the end.  Integer bumps commute, so the
    // result does not depend on how states are split across threads.
    const std::uint64_t n_states = std::uint64_t{1} << c;
    const int hist_cols = n_arcs + 1;
    auto run_range = [&](std::uint64_t lo, std::uint64_t hi, std::vector<long long>& hist) {
        std::vector<int> parent(n_arcs);
        for (std::uint64_t s = lo; s < hi; ++s) {
            std::iota(parent.begin(), parent.end(), 0);
            for (int i = 0; i < c; ++i) {
                const CrossingPairs& p = pairs[i];
                if (s >> i & 1) {
                    dsu_union(parent, p.b0, p.b1);
                    dsu_union(parent, p.b2, p.b3);
                } else {
                    dsu_union(parent, p.a0, p.a1);
                    dsu_union(parent, p.a2, p.a3);
                }
            }
            int loops = 0;
            for (int i = 0; i < n_arcs; ++i)
                if (dsu_find(parent, i) == i) ++loops;
            ++hist[static_cast<std::size_t>(std::popcount(s)) * hist_cols + loops];
        }
    };

    int threads = opts.threads;
    if (threads <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        threads = static_cast<int>(std::clamp(hw, 1u, 8u));
    }
    if (c <= 12 || n_states < 4096) threads = 1;

    std::vector<long long> hist(static_cast<std::size_t>(c + 1) * hist_cols, 0);
    if (threads == 1) {
        run_range(0, n_states, hist);
    } else {
        std::vector<std::vector<long long>> parts(
            threads, std::vector<long long>(hist.size(), 0));
        std::vector<std::thread> pool;
        const std::uint64_t chunk = n_states / threads;
        for (int t = 0; t < threads; ++t) {
            const std::uint64_t lo = chunk * t;
            const std::uint64_t hi = (t + 1 == threads) ? n_states : chunk * (t + 1);
            pool.emplace_back([&, lo, hi, t] { run_range(lo, hi, parts[t]); });
        }
        for (auto& th : pool) th.join();
        for (const auto& part : parts)
            for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += part[i];
    }

    const LaurentPoly d = delta_poly();
    std::vector<LaurentPoly> delta_pow(n_arcs + pd.free_loops + 1);
    delta_pow[0] = LaurentPoly::one();
    for (std::size_t i = 1; i < delta_pow.size(); ++i) delta_pow[i] = delta_pow[i - 1] * d;

    LaurentPoly bracket;
    for (int k = 0; k <= c; ++k) {
        LaurentPoly slice;
        for (int loops = 1; loops <= n_arcs; ++loops) {
            const long long n = hist[static_cast<std::size_t>(k) * hist_cols + loops];
            if (n == 0) continue;
            slice += LaurentPoly::monomial(n, 0) * delta_pow[loops - 1 + pd.free_loops];
        }
        bracket += LaurentPoly::monomial(1, c - 2 * k) * slice;
    }
    return bracket;
}

LaurentPoly jones_normalized(const BraidWord& b, const OracleOptions& opts) {
    const long long w = b.writhe();
    const LaurentPoly bracket = kauffman_bracket(closure_pd(free_reduce(b)), opts);
    const long long sign = (w % 2 == 0) ? 1 : -1;
    return LaurentPoly::monomial(sign, static_cast<int>(-3 * w)) * bracket;
}

EquivalenceVerdict equivalence_evidence(const BraidWord& a, const BraidWord& b,
                                        const OracleOptions& opts) {
    EquivalenceVerdict v;
    v.components_a = component_count(a);
    v.components_b = component_count(b);
    v.jones_a = jones_normalized(a, opts);
    v.jones_b = jones_normalized(b, opts);
    v.consistent = (v.components_a == v.components_b) && (v.jones_a == v.jones_b);
    return v;
}

}  // namespace tlinks
