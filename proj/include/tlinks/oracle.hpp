#pragma once

// Independent link-invariant oracle: Kauffman bracket state sum, normalized
// Jones polynomial in the variable A (t = A^-4), and an equivalence verdict
// combining Jones with component counts.  Used to check that every rewriting
// in this library preserves link type on desk-scale instances.
//
// The state sum enumerates all 2^c smoothings with union-find loop counting.
// It may run as a parallel reduction over disjoint state ranges; results are
// identical regardless of evaluation order or thread count.

#include "tlinks/braid.hpp"
#include "tlinks/errors.hpp"
#include "tlinks/laurent.hpp"
#include "tlinks/pd.hpp"

namespace tlinks {

struct OracleOptions {
    int max_crossings = 24;  // hard gate; exceeding it raises resource_limit_error
    int threads = 0;         // 0 = pick automatically, 1 = sequential
};

// Sum over smoothing states of A^(a-b) * delta^(loops-1), delta = -A^2 - A^-2;
// free loops contribute one delta factor each.
LaurentPoly kauffman_bracket(const PDCode& pd, const OracleOptions& opts = {});

// (-A^3)^(-writhe) * bracket of the closure.  Adjacent sigma sigma^-1 pairs
// are cancelled before tracing the diagram; this changes neither the writhe
// nor the closure and keeps rewriting outputs inside the crossing gate.
LaurentPoly jones_normalized(const BraidWord& b, const OracleOptions& opts = {});

struct EquivalenceVerdict {
    bool consistent;  // equal Jones and component counts; evidence, not proof
    int components_a = 0;
    int components_b = 0;
    LaurentPoly jones_a;
    LaurentPoly jones_b;
};

EquivalenceVerdict equivalence_evidence(const BraidWord& a, const BraidWord& b,
                                        const OracleOptions& opts = {});

}  // namespace tlinks
