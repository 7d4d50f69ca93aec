#include "tlinks/volume.hpp"

#include <numeric>
#include <stdexcept>

namespace tlinks {

Rat64 Rat64::of(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rat64{n, d};
}

Rat64 Rat64::operator+(const Rat64& o) const { return of(num * o.den + o.num * den, den * o.den); }
Rat64 Rat64::operator*(const Rat64& o) const { return of(num * o.num, den * o.den); }

CrossingBreakdown parent_crossings(long long n_bar) {
    if (n_bar < 0) throw std::invalid_argument("trip number must be >= 0");
    CrossingBreakdown b;
    b.parent_self = Rat64::of(3 * n_bar * (n_bar - 1), 2);
    b.untwist = Rat64::of(2 * n_bar);
    b.side_loops = Rat64::of(2 * 2 * n_bar);
    b.total = b.parent_self + b.untwist + b.side_loops;
    return b;
}

VolumeBound bound_from_trip(long long n_bar) {
    if (n_bar < 0) throw std::invalid_argument("trip number must be >= 0");
    VolumeBound v;
    v.trip_or_index = n_bar;
    v.multiplier = 12 * (n_bar * n_bar + 3 * n_bar);
    v.bound = static_cast<double>(v.multiplier) * kIdealTetrahedronVolume;
    v.breakdown = parent_crossings(n_bar);
    return v;
}

namespace {

long long beta_for(const GenTLinkParams& g, long long n) {
    const long long residual = g.last().s - n * g.last().r;
    if (residual < 0) throw std::invalid_argument("needs s_{k+1} >= n * r_{k+1}");
    std::vector<std::pair<int, long long>> pairs;
    for (const TorusPair& p : g.pairs()) pairs.push_back({p.r, p.s});
    if (residual > 0) pairs.push_back({g.last().r, residual});
    return trip_number_of_vector(LorenzVector::make(std::move(pairs)));
}

GenBoundResult result_for(const GenTLinkParams& g, long long n) {
    GenBoundResult r;
    r.n_used = n;
    r.beta = beta_for(g, n);
    r.multiplier = 12 * (r.beta * r.beta + 3 * r.beta);
    r.bound = static_cast<double>(r.multiplier) * kIdealTetrahedronVolume;
    return r;
}

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

GenBoundResult bound_gen_tlink(const GenTLinkParams& g, std::optional<long long> n,
                               long long window) {
    if (n) return result_for(g, *n);
    if (window < 1) throw std::invalid_argument("search window must cover >= 1 residue class");
    // residuals 0 <= s - n*r < window*r come from exactly `window` twist counts,
    // n_hi down to n_hi - window + 1
    const long long n_hi = floor_div(g.last().s, g.last().r);
    GenBoundResult best = result_for(g, n_hi);
    for (long long k = 1; k < window; ++k) {
        const GenBoundResult alt = result_for(g, n_hi - k);
        if (alt.multiplier < best.multiplier) best = alt;
    }
    return best;
}

GenBoundResult bound_manifold(const GenTLinkParams& g, std::optional<long long> n,
                              long long window) {
    return bound_gen_tlink(g, n, window);
}

}  // namespace tlinks
