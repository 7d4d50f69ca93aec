#include "doctest.h"

#include <stdexcept>
#include <variant>

#include "tlinks/braid.hpp"
#include "tlinks/lorenz.hpp"
#include "tlinks/oracle.hpp"
#include "tlinks/tlink.hpp"

using namespace tlinks;

namespace {

LorenzVector vec(std::initializer_list<std::pair<int, long long>> pairs) {
    return LorenzVector::make(std::vector<std::pair<int, long long>>(pairs));
}

TLinkParams tl(std::initializer_list<TorusPair> pairs) {
    return TLinkParams::make(std::vector<TorusPair>(pairs));
}

bool oracle_equal(const BraidWord& a, const BraidWord& b) {
    return equivalence_evidence(a, b).consistent;
}

}  // namespace

TEST_CASE("braid builders") {
    CHECK(tlink_braid(tl({{2, 3}})) == BraidWord::make(2, {1, 1, 1}));
    CHECK(tlink_braid(tl({{2, 2}, {3, 1}})) == BraidWord::make(3, {1, 1, 1, 2}));
    const BraidWord big = tlink_braid(tl({{4, 3}, {5, 2}, {7, 2}}));
    CHECK(big.strands() == 7);
    CHECK(big.size() == 29);  // 3*3 + 2*4 + 2*6

    CHECK(gen_tlink_braid(GenTLinkParams::make({}, {2, -3}, 0)) ==
          BraidWord::make(2, {-1, -1, -1}));
    CHECK(gen_tlink_braid(GenTLinkParams::make({}, {2, 3}, 0)) ==
          BraidWord::make(2, {1, 1, 1}));
    CHECK(gen_tlink_braid(GenTLinkParams::make({{2, 3}}, {4, -1}, 1)) ==
          BraidWord::make(5, {2, 2, 2, -4, -3, -2}));

    CHECK(tn_link_braid(TnLinkParams::make(2, {{2, 3}}, 2, 0)) ==
          BraidWord::make(2, {1, 1, 1, 1, 1}));
    CHECK(tn_link_braid(TnLinkParams::make(-2, {}, 1, 3)) == BraidWord::make(4, {}));
    CHECK(tn_link_braid(TnLinkParams::make(0, {{2, 3}}, 2, 0)) ==
          BraidWord::make(2, {1, 1, 1}));

    // letter count: sum s_i (r_i - 1) + |n| r(r-1)/2
    const TnLinkParams t = TnLinkParams::make(-3, {{2, 2}, {4, 1}}, 5, 2);
    CHECK(tn_link_braid(t).size() == 2 * 1 + 1 * 3 + 3 * 10);
}

TEST_CASE("half twist identities behind the conversions") {
    // a full twist on r strands is r stacked ascending runs
    for (int r : {2, 3, 4}) {
        CHECK(oracle_equal(delta_power(r, r, 2), torus_block(r, r, 0, r)));
        CHECK(underlying_permutation(delta_power(r, r, 2)).is_identity());
    }
    // opposite half twists cancel in the closure
    for (int r : {2, 3}) {
        const BraidWord both = compose(delta_power(4, r, 1), delta_power(4, r, -1));
        CHECK(oracle_equal(both, BraidWord::make(4, {})));
        CHECK(underlying_permutation(both).is_identity());
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(tl({{3, 1}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(tl({{2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(GenTLinkParams::make({{2, 1}}, {2, 3}, 0), std::invalid_argument);
    CHECK_THROWS_AS(GenTLinkParams::make({}, {3, 0}, 0), std::invalid_argument);
    CHECK_THROWS_AS(GenTLinkParams::make({}, {2, 1}, -1), std::invalid_argument);
    CHECK_THROWS_AS(TnLinkParams::make(0, {{2, 1}}, 1, 0), std::invalid_argument);
    CHECK_NOTHROW(TnLinkParams::make(5, {{2, 1}}, 2, 0));  // equal widths fine
    CHECK_NOTHROW(TnLinkParams::make(-4, {}, 1, 0));
}

TEST_CASE("strand reduction step") {
    RewriteState s0 = make_rewrite_state(vec({{2, 3}}));
    CHECK(s0.beta.strands() == 5);
    const RewriteState s1 = strand_reduction_step(s0);
    CHECK(s1.vector == vec({{2, 2}}));
    CHECK(s1.beta.strands() == 4);  // one strand fewer
    CHECK(s1.tail == BraidWord::make(4, {3}));
    CHECK(oracle_equal(materialize(s0), materialize(s1)));

    const RewriteState s2 = strand_reduction_step(s1);
    CHECK(s2.vector == vec({{2, 1}}));
    CHECK(s2.tail == BraidWord::make(3, {2, 2}));
    CHECK(oracle_equal(materialize(s1), materialize(s2)));

    CHECK_THROWS_AS(strand_reduction_step(s2), std::invalid_argument);  // k=1, s=1

    // pair exhaustion drops the first block
    RewriteState m0 = make_rewrite_state(vec({{2, 1}, {3, 1}}));
    const RewriteState m1 = strand_reduction_step(m0);
    CHECK(m1.vector == vec({{3, 1}}));
    CHECK(oracle_equal(materialize(m0), materialize(m1)));
}

TEST_CASE("single block collapse") {
    const BlockCollapse a = collapse_single_block(2, 3, BraidWord::make(5, {}));
    CHECK(a.beta_prime == BraidWord::make(2, {}));
    CHECK(a.runs == BraidWord::make(2, {1, 1, 1}));
    CHECK(oracle_equal(compose(shifted(lorenz_braid(vec({{2, 3}})), 0, 5),
                               BraidWord::make(5, {})),
                       compose(a.beta_prime, a.runs)));

    const BlockCollapse b = collapse_single_block(3, 1, BraidWord::make(4, {}));
    CHECK(b.runs == BraidWord::make(3, {1, 2}));

    const BlockCollapse c = collapse_single_block(2, 2, BraidWord::make(4, {3}));
    CHECK(c.beta_prime == BraidWord::make(2, {1}));
    CHECK(c.runs == BraidWord::make(2, {1, 1}));
    CHECK(oracle_equal(compose(shifted(lorenz_braid(vec({{2, 2}})), 0, 4),
                               BraidWord::make(4, {3})),
                       compose(c.beta_prime, c.runs)));

    CHECK_THROWS_AS(collapse_single_block(2, 3, BraidWord::make(5, {2})),
                    std::invalid_argument);  // beta letter not above s1
}

TEST_CASE("T-link normal form") {
    CHECK(tlink_normal_form(vec({{2, 3}})) == BraidWord::make(2, {1, 1, 1}));
    CHECK(tlink_normal_form(vec({{2, 2}, {3, 1}})) == BraidWord::make(3, {1, 1, 1, 2}));
    CHECK(tlink_normal_form(vec({{2, 1}})) == BraidWord::make(2, {1}));

    // matches the direct stacked-runs formula, letter for letter
    for (const LorenzVector& v :
         {vec({{2, 3}}), vec({{3, 4}}), vec({{2, 2}, {3, 1}}), vec({{2, 1}, {4, 2}}),
          vec({{2, 2}, {4, 2}, {7, 3}, {8, 2}})}) {
        const BraidWord direct = tlink_braid(tlink_of_vector(v));
        CHECK(tlink_normal_form(v) == shifted(direct, 0, v.max_displacement()));
        CHECK(static_cast<int>(tlink_normal_form(v).strands()) == v.max_displacement());
    }

    // with a trailing braid: closure is preserved and beta lands at the end
    const LorenzVector v = vec({{2, 2}});
    const BraidWord beta = BraidWord::make(5, {4, -3});
    const BraidWord out = tlink_normal_form(v, beta);
    CHECK(out == BraidWord::make(3, {1, 1, 2, -1}));
    CHECK(oracle_equal(out, materialize(make_rewrite_state(v, beta))));
}

TEST_CASE("vector to twisted parameters") {
    CHECK(lorenz_like_to_tn(vec({{2, 3}}), 2, 0, 0) ==
          TnLinkParams::make(2, {{2, 3}}, 2, 0));
    CHECK(lorenz_like_to_tn(LorenzVector{}, -5, 1, 0) == TnLinkParams::make(-5, {}, 1, 0));
    CHECK(lorenz_like_to_tn(vec({{2, 3}}), 0, 1, 2) == TnLinkParams::make(0, {{2, 3}}, 3, 2));
    CHECK_THROWS_AS(lorenz_like_to_tn(LorenzVector{}, 1, 0, 0), std::invalid_argument);

    // the twisted template braid closes to the same link as the parameter braid
    for (long long n : {-2LL, 0LL, 2LL}) {
        const LorenzVector w = vec({{2, 3}});
        const int span = static_cast<int>(w.strand_count());
        const BraidWord lhs = compose(shifted(lorenz_braid(w), 0, span),
                                      delta_power(span, w.max_displacement(), n));
        CHECK(oracle_equal(lhs, tn_link_braid(lorenz_like_to_tn(w, n, 0, 0))));
    }
}

TEST_CASE("associated stacked link") {
    CHECK(*associated_lorenz(TnLinkParams::make(4, {{2, 3}}, 4, 1)) == tl({{2, 3}}));
    CHECK(*associated_lorenz(TnLinkParams::make(2, {{4, 3}, {5, 2}}, 7, 0)) ==
          tl({{4, 3}, {5, 2}}));
    CHECK_FALSE(associated_lorenz(TnLinkParams::make(-2, {}, 3, 0)).has_value());
}

TEST_CASE("gen_to_tn splits full twists off the final block") {
    CHECK(gen_to_tn(GenTLinkParams::make({{2, 3}}, {4, 6}, 0), 1) ==
          TnLinkParams::make(2, {{2, 3}, {4, 2}}, 4, 0));
    CHECK(gen_to_tn(GenTLinkParams::make({}, {2, 3}, 0), 0) ==
          TnLinkParams::make(0, {{2, 3}}, 2, 0));
    CHECK(gen_to_tn(GenTLinkParams::make({}, {2, 4}, 0), 2) ==
          TnLinkParams::make(4, {}, 2, 0));  // residual 0: pair omitted
    CHECK_THROWS_AS(gen_to_tn(GenTLinkParams::make({}, {2, 3}, 0), 2),
                    std::invalid_argument);

    // closure equality, sized so the reduced words stay under the oracle gate
    for (long long n : {-2LL, -1LL, 0LL, 1LL}) {
        const GenTLinkParams g = GenTLinkParams::make({}, {2, 3}, 1);
        CHECK(oracle_equal(gen_tlink_braid(g), tn_link_braid(gen_to_tn(g, n))));
    }
    for (long long n : {0LL, 1LL}) {
        const GenTLinkParams g = GenTLinkParams::make({{2, 2}}, {3, 4}, 1);
        CHECK(oracle_equal(gen_tlink_braid(g), tn_link_braid(gen_to_tn(g, n))));
    }
}

TEST_CASE("tn_to_gen reabsorbs even twists") {
    // widths match: exponents merge
    auto merged = tn_to_gen(TnLinkParams::make(-2, {{2, 5}}, 2, 0));
    CHECK(std::get<GenTLinkParams>(merged) == GenTLinkParams::make({}, {2, 3}, 0));

    // widths differ: a negative block appears
    auto appended = tn_to_gen(TnLinkParams::make(-2, {{2, 3}}, 4, 0));
    CHECK(std::get<GenTLinkParams>(appended) == GenTLinkParams::make({{2, 3}}, {4, -4}, 0));

    // unlink cases
    auto unlink = tn_to_gen(TnLinkParams::make(-2, {}, 1, 3));
    CHECK(std::get<GenTLinkParams>(unlink) == GenTLinkParams::make({}, {2, 1}, 3));
    auto trivial = tn_to_gen(TnLinkParams::make(0, {}, 3, 1));
    CHECK(std::get<TrivialDescriptor>(trivial).components == 4);
    auto twisted_loops = tn_to_gen(TnLinkParams::make(-4, {}, 3, 1));
    CHECK(std::get<GenTLinkParams>(twisted_loops) == GenTLinkParams::make({}, {3, -6}, 1));

    // vanished final block: the d parameter keeps the freed strands
    auto dropped = tn_to_gen(TnLinkParams::make(-2, {{2, 1}, {4, 4}}, 4, 0));
    CHECK(std::get<GenTLinkParams>(dropped) == GenTLinkParams::make({}, {2, 1}, 2));
    auto vanished = tn_to_gen(TnLinkParams::make(-2, {{3, 3}}, 3, 1));
    CHECK(std::get<TrivialDescriptor>(vanished).components == 4);

    CHECK_THROWS_AS(tn_to_gen(TnLinkParams::make(3, {{2, 1}}, 2, 0)), std::invalid_argument);

    // closure equality across the conversion, unknots included
    for (const TnLinkParams& t :
         {TnLinkParams::make(-2, {{2, 5}}, 2, 0), TnLinkParams::make(-2, {{2, 3}}, 4, 0),
          TnLinkParams::make(0, {{2, 2}}, 4, 1), TnLinkParams::make(-2, {{2, 1}, {4, 4}}, 4, 0),
          TnLinkParams::make(2, {{3, 2}}, 3, 1)}) {
        auto back = tn_to_gen(t);
        REQUIRE(std::holds_alternative<GenTLinkParams>(back));
        CHECK(oracle_equal(tn_link_braid(t), gen_tlink_braid(std::get<GenTLinkParams>(back))));
    }
    // trivial results carry the exact component count
    const TnLinkParams t0 = TnLinkParams::make(0, {}, 3, 1);
    CHECK(component_count(tn_link_braid(t0)) ==
          std::get<TrivialDescriptor>(tn_to_gen(t0)).components);
}

TEST_CASE("alternate trip-number representations") {
    // widths merge at r' = r_k
    CHECK(alt_trip_representation(tl({{2, 3}}), -1, 2) ==
          TnLinkParams::make(-2, {{2, 5}}, 2, 0));
    CHECK(alt_trip_representation(tl({{2, 3}}), -1, 3) ==
          TnLinkParams::make(-2, {{2, 2}, {3, 4}}, 3, 0));
    CHECK_THROWS_AS(alt_trip_representation(tl({{2, 3}}), 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(alt_trip_representation(tl({{2, 3}}), -1, 1), std::invalid_argument);

    // s_k = 1 first trades the last block for a wider run below
    CHECK(alt_trip_representation(tl({{2, 2}, {3, 1}}), -1, 3) ==
          TnLinkParams::make(-2, {{2, 2}, {3, 4}}, 3, 0));
    CHECK_THROWS_AS(alt_trip_representation(tl({{3, 1}}), -1, 3), std::invalid_argument);

    // closure is the original T-link; associated trip number is r'
    const TLinkParams trefoil = tl({{2, 3}});
    for (int rp : {2, 3, 4}) {
        const TnLinkParams rep = alt_trip_representation(trefoil, -1, rp);
        CHECK(oracle_equal(tlink_braid(trefoil), tn_link_braid(rep)));
        const auto assoc = associated_lorenz(rep);
        REQUIRE(assoc.has_value());
        CHECK(trip_number_of_vector(vector_of_tlink(*assoc)) == rp);
    }
}
