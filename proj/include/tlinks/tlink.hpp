#pragma once

// T-links, twisted T^n-links, generalised T-links, their braid builders, the
// strand-by-strand rewriting engine that takes template braids to T-link
// form, and the parameter-level conversions between the three families.
// Every rewriting preserves the closure's link type; the oracle checks this
// in the test suites.

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "tlinks/braid.hpp"
#include "tlinks/lorenz.hpp"

namespace tlinks {

struct TorusPair {
    int r = 2;         // run width, >= 2
    long long s = 1;   // exponent
    bool operator==(const TorusPair&) const = default;
};

// T((r_1,s_1),...,(r_k,s_k)): 2 <= r_1 < ... < r_k, all s_i > 0.
class TLinkParams {
public:
    static TLinkParams make(std::vector<TorusPair> pairs);
    const std::vector<TorusPair>& pairs() const { return pairs_; }
    int top_width() const { return pairs_.empty() ? 0 : pairs_.back().r; }
    bool operator==(const TLinkParams&) const = default;

private:
    std::vector<TorusPair> pairs_;
};

// T^n((r_1,s_1),...,(r_k,s_k),(r_last; d)): n half twists on the last r_last
// strands of d + r_last; pairs may be empty (then r_last >= 1), otherwise
// 2 <= r_1 < ... < r_k <= r_last and s_i > 0.
class TnLinkParams {
public:
    static TnLinkParams make(long long n, std::vector<TorusPair> pairs, int r_last, long long d);
    long long n() const { return n_; }
    const std::vector<TorusPair>& pairs() const { return pairs_; }
    int r_last() const { return r_last_; }
    long long d() const { return d_; }
    bool operator==(const TnLinkParams&) const = default;

private:
    long long n_ = 0;
    std::vector<TorusPair> pairs_;
    int r_last_ = 1;
    long long d_ = 0;
};

// T((r_1,s_1),...,(r_k,s_k),(r_{k+1},s_{k+1}), d): the final exponent may be
// negative (but not zero); 2 <= r_1 < ... < r_k < r_{k+1}, s_1..s_k > 0.
class GenTLinkParams {
public:
    static GenTLinkParams make(std::vector<TorusPair> pairs, TorusPair last, long long d);
    const std::vector<TorusPair>& pairs() const { return pairs_; }
    const TorusPair& last() const { return last_; }
    long long d() const { return d_; }
    bool operator==(const GenTLinkParams&) const = default;

private:
    std::vector<TorusPair> pairs_;
    TorusPair last_{2, 1};
    long long d_ = 0;
};

// Unlink result of a conversion, kept distinct from parameter tuples.
struct TrivialDescriptor {
    long long components = 1;
    bool operator==(const TrivialDescriptor&) const = default;
};

BraidWord tlink_braid(const TLinkParams& t);
BraidWord tn_link_braid(const TnLinkParams& t);
BraidWord gen_tlink_braid(const GenTLinkParams& g);

// bridge: T((r,s),...) and <r^s,...> carry the same pairs
LorenzVector vector_of_tlink(const TLinkParams& t);
TLinkParams tlink_of_vector(const LorenzVector& v);

// ---- rewriting engine ----------------------------------------------------
//
// State for rewriting a template braid (vector) followed by a braid `beta`
// whose letters all exceed p, with `tail` collecting the torus runs the
// rewriting emits.  The closure of materialize(state) is invariant under
// every step.

struct RewriteState {
    LorenzVector vector;
    BraidWord beta;  // letters all > p, same strand count as tail
    BraidWord tail;
};

RewriteState make_rewrite_state(const LorenzVector& v,
                                std::optional<BraidWord> beta = std::nullopt);

// template braid of the vector, then beta, then tail, on the current strands
BraidWord materialize(const RewriteState& state);

// Slides the first overcrossing strand once around the closure, absorbing it:
// s_1 drops by one, beta and tail shift down a strand, and the run
// sigma_{p}..sigma_{p+d_1-2} (one strand narrower frame) is appended to the
// tail.  Requires k > 1 or s_1 > 1.
RewriteState strand_reduction_step(const RewriteState& state);

struct BlockCollapse {
    BraidWord beta_prime;  // beta shifted down by s1
    BraidWord runs;        // (sigma_1..sigma_{d1-1})^{s1}
};

// Collapses a single block <d1^{s1}> followed by beta (letters > s1) into
// torus runs: the closure of block*beta equals the closure of
// beta_prime*runs on s1 fewer strands.
BlockCollapse collapse_single_block(int d1, long long s1, const BraidWord& beta);

// Full pipeline: iterates strand_reduction_step until one block remains,
// collapses it, and rotates beta to the tail.  Output is
// (sigma_1..sigma_{d_1-1})^{s_1}...(sigma_1..sigma_{d_k-1})^{s_k} * beta'
// on (strands - p) strands.
BraidWord tlink_normal_form(const LorenzVector& v, const BraidWord& beta);
BraidWord tlink_normal_form(const LorenzVector& v);

// ---- conversions ----------------------------------------------------------

// Template link of the vector with n half twists over the last d_k + d
// strands and d_prime boundary-parallel loops, as T^n parameters.
TnLinkParams lorenz_like_to_tn(const LorenzVector& v, long long n, long long d,
                               long long d_prime);

// Strip the twisting: the T-link on the stacked pairs; empty when there are
// no pairs (the unlink family).
std::optional<TLinkParams> associated_lorenz(const TnLinkParams& t);

// Splits n full twists off the final block: requires s_{k+1} >= n*r_{k+1};
// yields the T^{2n}-link with residual exponent s_{k+1} - n*r_{k+1} (pair
// omitted when zero).
TnLinkParams gen_to_tn(const GenTLinkParams& g, long long n);

// Reabsorbs an even twist count into the final block.  Unlinks come back as
// a TrivialDescriptor; boundary-parallel unknots are preserved exactly by
// widening d where the final block narrows.
std::variant<GenTLinkParams, TrivialDescriptor> tn_to_gen(const TnLinkParams& t);

// A T-link as a T^{2n}-link of trip number r_prime, for any n < 0 and
// r_prime >= r_k: distinct r_prime give representations of the same link
// with distinct trip numbers.
TnLinkParams alt_trip_representation(const TLinkParams& t, long long n, int r_prime);

}  // namespace tlinks
