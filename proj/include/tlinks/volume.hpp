#pragma once

// Closed-form volume bounds: the quadratic trip-number bound
// 12 * v_tet * (m^2 + 3m), the crossing-count accounting behind it, and the
// braid-index bound for generalised T-links via their associated stacked
// links.  The same number bounds every Dehn filling of the link complement.

#include <cstdint>
#include <optional>

#include "tlinks/tlink.hpp"

namespace tlinks {

// volume of the regular ideal tetrahedron
inline constexpr double kIdealTetrahedronVolume = 1.0149416064096536;

// exact rational arithmetic for the crossing accounting
struct Rat64 {
    long long num = 0;
    long long den = 1;

    static Rat64 of(long long n, long long d = 1);
    Rat64 operator+(const Rat64& o) const;
    Rat64 operator*(const Rat64& o) const;
    bool operator==(const Rat64&) const = default;
    bool is_integer() const { return den == 1; }
};

struct CrossingBreakdown {
    Rat64 parent_self;  // 3/2 * m(m-1), projected self-crossings of the parent link
    Rat64 untwist;      // 2m, from the untwisting unknots
    Rat64 side_loops;   // 4m, from the two loops around the strip annuli
    Rat64 total;        // 3/2 m^2 + 9/2 m; 8 * total = 12(m^2 + 3m) exactly
};

struct VolumeBound {
    long long trip_or_index = 0;
    long long multiplier = 0;  // 12(m^2 + 3m); bound = multiplier * v_tet
    double bound = 0.0;
    std::optional<CrossingBreakdown> breakdown;
};

CrossingBreakdown parent_crossings(long long n_bar);
VolumeBound bound_from_trip(long long n_bar);

struct GenBoundResult {
    long long n_used = 0;
    long long beta = 0;  // braid index of the associated stacked link
    long long multiplier = 0;
    double bound = 0.0;
};

// Bound for the generalised T-link: split n full twists off the final block
// (needs s_{k+1} >= n*r_{k+1}), take the trip number of the remaining stacked
// link as beta.  n = nullopt searches all twist counts whose residual lies in
// [0, window*r_{k+1}) and returns the smallest bound found; the reported
// minimum is valid but carries no optimality claim.
GenBoundResult bound_gen_tlink(const GenTLinkParams& g, std::optional<long long> n,
                               long long window = 2);

// Same computation; the bound also applies to every closed orientable
// 3-manifold obtained by Dehn filling the link complement, since filling
// does not increase volume.
GenBoundResult bound_manifold(const GenTLinkParams& g, std::optional<long long> n,
                              long long window = 2);

}  // namespace tlinks
