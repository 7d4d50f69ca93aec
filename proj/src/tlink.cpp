#include "tlinks/tlink.hpp"

#include <stdexcept>
#include <string>

namespace tlinks {

namespace {

void check_pairs_increasing(const std::vector<TorusPair>& pairs, int upper, bool upper_strict) {
    int prev = 1;
    for (const TorusPair& p : pairs) {
        if (p.r < 2) throw std::invalid_argument("pair widths must be >= 2");
        if (p.r <= prev) throw std::invalid_argument("pair widths must strictly increase");
        if (p.s < 1) throw std::invalid_argument("pair exponents must be positive");
        prev = p.r;
    }
    if (!pairs.empty() && upper > 0) {
        if (upper_strict ? (prev >= upper) : (prev > upper))
            throw std::invalid_argument("pair widths must not exceed the final width");
    }
}

}  // namespace

TLinkParams TLinkParams::make(std::vector<TorusPair> pairs) {
    check_pairs_increasing(pairs, 0, false);
    TLinkParams t;
    t.pairs_ = std::move(pairs);
    return t;
}

TnLinkParams TnLinkParams::make(long long n, std::vector<TorusPair> pairs, int r_last,
                                long long d) {
    if (d < 0) throw std::invalid_argument("d must be >= 0");
    if (pairs.empty()) {
        if (r_last < 1) throw std::invalid_argument("final width must be >= 1");
    } else {
        if (r_last < 2) throw std::invalid_argument("final width must be >= 2 with pairs present");
        check_pairs_increasing(pairs, r_last, false);
    }
    TnLinkParams t;
    t.n_ = n;
    t.pairs_ = std::move(pairs);
    t.r_last_ = r_last;
    t.d_ = d;
    return t;
}

GenTLinkParams GenTLinkParams::make(std::vector<TorusPair> pairs, TorusPair last, long long d) {
    if (d < 0) throw std::invalid_argument("d must be >= 0");
    if (last.r < 2) throw std::invalid_argument("final width must be >= 2");
    if (last.s == 0) throw std::invalid_argument("final exponent must be nonzero");
    check_pairs_increasing(pairs, last.r, true);
    GenTLinkParams g;
    g.pairs_ = std::move(pairs);
    g.last_ = last;
    g.d_ = d;
    return g;
}

BraidWord tlink_braid(const TLinkParams& t) {
    const int strands = t.pairs().empty() ? 1 : t.top_width();
    BraidWord b = BraidWord::make(strands, {});
    for (const TorusPair& p : t.pairs()) b = compose(b, torus_block(p.r, p.s, 0, strands));
    return b;
}

BraidWord tn_link_braid(const TnLinkParams& t) {
    const long long strands_ll = t.d() + t.r_last();
    const int strands = static_cast<int>(strands_ll);
    BraidWord b = BraidWord::make(strands, {});
    for (const TorusPair& p : t.pairs())
        b = compose(b, torus_block(p.r, p.s, static_cast<int>(t.d()), strands));
    return compose(b, delta_power(strands, t.r_last(), t.n()));
}

BraidWord gen_tlink_braid(const GenTLinkParams& g) {
    const int strands = static_cast<int>(g.d() + g.last().r);
    BraidWord b = BraidWord::make(strands, {});
    for (const TorusPair& p : g.pairs())
        b = compose(b, torus_block(p.r, p.s, static_cast<int>(g.d()), strands));
    return compose(b, torus_block(g.last().r, g.last().s, static_cast<int>(g.d()), strands));
}

LorenzVector vector_of_tlink(const TLinkParams& t) {
    std::vector<std::pair<int, long long>> pairs;
    pairs.reserve(t.pairs().size());
    for (const TorusPair& p : t.pairs()) pairs.push_back({p.r, p.s});
    return LorenzVector::make(std::move(pairs));
}

TLinkParams tlink_of_vector(const LorenzVector& v) {
    std::vector<TorusPair> pairs;
    pairs.reserve(v.pairs().size());
    for (auto [d, s] : v.pairs()) pairs.push_back({d, s});
    return TLinkParams::make(std::move(pairs));
}

// ---- rewriting engine ------------------------------------------------------

namespace {

void check_beta_clears(const BraidWord& b, long long p, const char* what) {
    for (int e : b.letters())
        if (std::abs(e) <= p)
            throw std::invalid_argument(std::string(what) + " has a letter with index <= " +
                                        std::to_string(p));
}

}  // namespace

RewriteState make_rewrite_state(const LorenzVector& v, std::optional<BraidWord> beta) {
    const long long span = v.strand_count();
    BraidWord b = beta ? std::move(*beta) : BraidWord::make(static_cast<int>(std::max<long long>(span, 1)), {});
    if (b.strands() < span)
        throw std::invalid_argument("rewrite state needs at least " + std::to_string(span) +
                                    " strands");
    check_beta_clears(b, v.p(), "beta");
    return RewriteState{v, b, BraidWord::make(b.strands(), {})};
}

BraidWord materialize(const RewriteState& state) {
    const BraidWord blocks = shifted(lorenz_braid(state.vector), 0, state.beta.strands());
    return compose(compose(blocks, state.beta), state.tail);
}

RewriteState strand_reduction_step(const RewriteState& state) {
    const auto& pairs = state.vector.pairs();
    if (pairs.empty()) throw std::invalid_argument("no block left to reduce");
    if (pairs.size() == 1 && pairs[0].second == 1)
        throw std::invalid_argument("strand reduction needs k > 1 or s_1 > 1");
    if (state.beta.strands() != state.tail.strands())
        throw std::invalid_argument("state strand counts disagree");

    const long long p = state.vector.p();
    const int d1 = pairs[0].first;
    if (state.beta.strands() < state.vector.strand_count())
        throw std::invalid_argument("state is too narrow for its vector");
    check_beta_clears(state.beta, p, "beta");
    check_beta_clears(state.tail, p, "tail");

    const int new_strands = state.beta.strands() - 1;

    std::vector<std::pair<int, long long>> next_pairs(pairs.begin(), pairs.end());
    if (--next_pairs[0].second == 0) next_pairs.erase(next_pairs.begin());

    // the freed strand re-enters as a run just past the remaining overcrossing
    // strands: sigma_{p-1+1} .. sigma_{p-1+d1-1} in the narrowed frame
    std::vector<int> run;
    for (long long q = p; q <= p + d1 - 2; ++q) run.push_back(static_cast<int>(q));

    RewriteState next;
    next.vector = LorenzVector::make(std::move(next_pairs));
    next.beta = shifted(state.beta, -1, new_strands);
    next.tail = compose(shifted(state.tail, -1, new_strands),
                        BraidWord::make(new_strands, std::move(run)));
    return next;
}

BlockCollapse collapse_single_block(int d1, long long s1, const BraidWord& beta) {
    if (d1 < 2 || s1 < 1) throw std::invalid_argument("block needs d >= 2 and s >= 1");
    if (beta.strands() < s1 + d1)
        throw std::invalid_argument("beta needs at least s1 + d1 strands");
    check_beta_clears(beta, s1, "beta");
    const int new_strands = static_cast<int>(beta.strands() - s1);
    BlockCollapse out;
    out.beta_prime = shifted(beta, static_cast<int>(-s1), new_strands);
    out.runs = torus_block(d1, s1, 0, new_strands);
    return out;
}

BraidWord tlink_normal_form(const LorenzVector& v, const BraidWord& beta) {
    if (v.empty()) return beta;
    RewriteState state = make_rewrite_state(v, beta);
    while (state.vector.pairs().size() > 1) state = strand_reduction_step(state);
    const auto [d_k, s_k] = state.vector.pairs()[0];
    BlockCollapse col = collapse_single_block(d_k, s_k, compose(state.beta, state.tail));
    // beta' * runs ~ runs-first form after one trip around the closure; the
    // original beta's letters come last
    const int shift_amount = static_cast<int>(-s_k);
    BraidWord tail_down = shifted(state.tail, shift_amount, col.runs.strands());
    BraidWord beta_down = shifted(state.beta, shift_amount, col.runs.strands());
    return compose(compose(tail_down, col.runs), beta_down);
}

BraidWord tlink_normal_form(const LorenzVector& v) {
    return tlink_normal_form(
        v, BraidWord::make(static_cast<int>(std::max<long long>(v.strand_count(), 1)), {}));
}

// ---- conversions ------------------------------------------------------------

TnLinkParams lorenz_like_to_tn(const LorenzVector& v, long long n, long long d,
                               long long d_prime) {
    if (d < 0 || d_prime < 0) throw std::invalid_argument("loop counts must be >= 0");
    const long long r_last = v.max_displacement() + d;
    if (r_last < 1)
        throw std::invalid_argument("an empty vector needs d >= 1 (the twisted loops)");
    std::vector<TorusPair> pairs;
    for (auto [dd, ss] : v.pairs()) pairs.push_back({dd, ss});
    return TnLinkParams::make(n, std::move(pairs), static_cast<int>(r_last), d_prime);
}

std::optional<TLinkParams> associated_lorenz(const TnLinkParams& t) {
    if (t.pairs().empty()) return std::nullopt;
    return TLinkParams::make(t.pairs());
}

TnLinkParams gen_to_tn(const GenTLinkParams& g, long long n) {
    const long long residual = g.last().s - n * g.last().r;
    if (residual < 0)
        throw std::invalid_argument("needs s_{k+1} >= n * r_{k+1}; s = " +
                                    std::to_string(g.last().s) + ", n*r = " +
                                    std::to_string(n * g.last().r));
    std::vector<TorusPair> pairs = g.pairs();
    if (residual > 0) pairs.push_back({g.last().r, residual});
    return TnLinkParams::make(2 * n, std::move(pairs), g.last().r, g.d());
}

std::variant<GenTLinkParams, TrivialDescriptor> tn_to_gen(const TnLinkParams& t) {
    if (t.n() % 2 != 0)
        throw std::invalid_argument("only even twist counts convert to generalised T-links");
    const long long n = t.n() / 2;
    const long long d = t.d();
    const int r_last = t.r_last();

    if (t.pairs().empty()) {
        if (r_last == 1) return GenTLinkParams::make({}, TorusPair{2, 1}, d);
        if (n == 0) return TrivialDescriptor{d + r_last};  // trivial braid closure
        return GenTLinkParams::make({}, TorusPair{r_last, n * r_last}, d);
    }

    std::vector<TorusPair> pairs = t.pairs();
    const TorusPair back = pairs.back();
    if (back.r == r_last) {
        const long long merged = back.s + n * r_last;
        pairs.pop_back();
        if (merged != 0) return GenTLinkParams::make(std::move(pairs), TorusPair{r_last, merged}, d);
        // the final block vanished; the strands it spanned beyond the next
        // block survive as boundary-parallel unknots
        if (pairs.empty()) return TrivialDescriptor{d + r_last};
        const TorusPair new_last = pairs.back();
        pairs.pop_back();
        return GenTLinkParams::make(std::move(pairs), new_last, d + (r_last - new_last.r));
    }
    if (n == 0) {
        // no twisting: a plain T-link plus the untouched strands past r_k
        const TorusPair new_last = pairs.back();
        pairs.pop_back();
        return GenTLinkParams::make(std::move(pairs), new_last, d + (r_last - new_last.r));
    }
    return GenTLinkParams::make(std::move(pairs), TorusPair{r_last, n * r_last}, d);
}

TnLinkParams alt_trip_representation(const TLinkParams& t, long long n, int r_prime) {
    if (n >= 0) throw std::invalid_argument("needs a negative twist parameter n");
    std::vector<TorusPair> pairs = t.pairs();
    if (pairs.empty()) throw std::invalid_argument("needs a nonempty T-link");
    if (pairs.back().s == 1) {
        // right destabilizations trade the final width-r_k block for one more
        // run of width r_{k-1}
        if (pairs.size() == 1)
            throw std::invalid_argument("T((r,1)) is the unknot; no twisted representation here");
        pairs.pop_back();
        ++pairs.back().s;
    }
    if (r_prime < pairs.back().r)
        throw std::invalid_argument("needs r_prime >= r_k");
    --pairs.back().s;  // >= 1 still
    const long long fresh = 1 - n * static_cast<long long>(r_prime);
    if (pairs.back().r == r_prime)
        pairs.back().s += fresh;  // widths match: the runs merge into one block
    else
        pairs.push_back({r_prime, fresh});
    return TnLinkParams::make(2 * n, std::move(pairs), r_prime, 0);
}

}  // namespace tlinks
