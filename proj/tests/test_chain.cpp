#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hahnrank/construct.hpp"
#include "oracle_helpers.hpp"

using namespace hahnrank;

TEST_CASE("element comparison on the built-in chains") {
    auto f5 = chains::finite(5);
    CHECK(compare_elements(f5, values::finite_at(1), values::finite_at(3)) == Ordering::Less);
    CHECK(compare_elements(f5, values::finite_at(4), values::finite_at(4)) == Ordering::Equal);

    auto c = chains::concat(chains::finite(2), chains::rationals());
    ChainValue lo = values::concat_at(0, values::rational_at(5));
    ChainValue hi = values::concat_at(1, values::rational_at(-100));
    CHECK(compare_elements(c, lo, hi) == Ordering::Less); // copy index dominates

    auto rq = chains::reverse(chains::rationals());
    CHECK(compare_elements(rq, values::reverse_of(values::rational_at(1)),
                           values::reverse_of(values::rational_at(2))) == Ordering::Greater);

    auto s = chains::singleton();
    CHECK(compare_elements(s, values::finite_at(0), values::finite_at(0)) == Ordering::Equal);
}

TEST_CASE("cross-chain values are rejected") {
    auto f5 = chains::finite(5);
    CHECK_THROWS_AS(compare_elements(f5, values::rational_at(1), values::finite_at(0)), Error);
    try {
        compare_elements(f5, values::finite_at(0), values::finite_at(9)); // out of bounds
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CrossChainComparison);
    }
}

TEST_CASE("the order is total and consistent") {
    auto f6 = chains::finite(6);
    auto elements = enumerate_chain(f6);
    for (const auto& a : elements)
        for (const auto& b : elements) {
            Ordering ab = compare_elements(f6, a, b);
            Ordering ba = compare_elements(f6, b, a);
            CHECK(ab == flip(ba));
            for (const auto& c : elements) {
                if (ab != Ordering::Greater &&
                    compare_elements(f6, b, c) != Ordering::Greater)
                    CHECK(compare_elements(f6, a, c) != Ordering::Greater);
            }
        }

    std::mt19937_64 rng(7);
    auto chain = chains::concat(chains::finite(3), chains::rationals());
    for (int i = 0; i < 200; ++i) {
        ChainValue a = sampling::random_value(chain, rng);
        ChainValue b = sampling::random_value(chain, rng);
        ChainValue c = sampling::random_value(chain, rng);
        CHECK(compare_elements(chain, a, b) == flip(compare_elements(chain, b, a)));
        if (compare_elements(chain, a, b) != Ordering::Greater &&
            compare_elements(chain, b, c) != Ordering::Greater)
            CHECK(compare_elements(chain, a, c) != Ordering::Greater);
    }
}

TEST_CASE("double reversal compares like the original chain") {
    auto q = chains::rationals();
    auto rr = chains::reverse(chains::reverse(q));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        ChainValue a = sampling::random_value(q, rng);
        ChainValue b = sampling::random_value(q, rng);
        ChainValue ra = values::reverse_of(values::reverse_of(a));
        ChainValue rb = values::reverse_of(values::reverse_of(b));
        CHECK(compare_elements(rr, ra, rb) == compare_elements(q, a, b));
    }
}

TEST_CASE("final segment enumeration on finite chains") {
    auto segs3 = enumerate_final_segments(chains::finite(3));
    REQUIRE(segs3.size() == 3);
    // Increasing by inclusion: smallest segment {2} first.
    CHECK(segs3[0].gamma().get<ChainValue::FiniteAt>()->index == 2);
    CHECK(segs3[1].gamma().get<ChainValue::FiniteAt>()->index == 1);
    CHECK(segs3[2].gamma().get<ChainValue::FiniteAt>()->index == 0);
    for (auto& s : segs3)
        CHECK(s.is_principal());

    CHECK(enumerate_final_segments(chains::finite(1)).size() == 1);

    // Counted independently by filtering all subsets for upward closure.
    auto minima = oracle::final_segment_minima(5);
    CHECK(minima.size() == 5);
    CHECK(enumerate_final_segments(chains::finite(5)).size() == minima.size());

    CHECK_THROWS_AS(enumerate_final_segments(chains::rationals()), Error);
}

TEST_CASE("principal segments and their reversal") {
    auto f4 = chains::finite(4);
    FinalSegmentCut cut = principal_segment_of(values::finite_at(2));
    CHECK(cut.is_principal());
    CHECK(segment_contains(f4, cut, values::finite_at(2)));
    CHECK(segment_contains(f4, cut, values::finite_at(3)));
    CHECK_FALSE(segment_contains(f4, cut, values::finite_at(1)));

    auto q = chains::rationals();
    FinalSegmentCut at0 = principal_segment_of(values::rational_at(0));
    CHECK_FALSE(segment_contains(q, at0, values::rational_at(-1)));
    CHECK(segment_contains(q, at0, values::rational_at(0)));
    CHECK(segment_contains(q, at0, values::rational_at(7)));

    // gamma <= gamma' iff segment(gamma) contains segment(gamma'), strictly
    // for strict comparison.
    auto elements = enumerate_chain(f4);
    for (const auto& a : elements)
        for (const auto& b : elements) {
            bool le = compare_elements(f4, a, b) != Ordering::Greater;
            bool contains_all = true;
            for (const auto& e : elements)
                if (segment_contains(f4, principal_segment_of(b), e) &&
                    !segment_contains(f4, principal_segment_of(a), e))
                    contains_all = false;
            CHECK(le == contains_all);
        }
    // In particular segment(1) strictly contains segment(3).
    CHECK(segment_contains(f4, principal_segment_of(values::finite_at(1)), values::finite_at(1)));
    CHECK_FALSE(
        segment_contains(f4, principal_segment_of(values::finite_at(3)), values::finite_at(1)));
}

TEST_CASE("strictly-above cuts") {
    auto q = chains::rationals();
    FinalSegmentCut cut = FinalSegmentCut::strictly_above(values::rational_at(0));
    CHECK_FALSE(segment_contains(q, cut, values::rational_at(0)));
    CHECK(segment_contains(q, cut, values::rational_at(Rational(1, 1000000))));

    // Upward closure on samples.
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        ChainValue a = sampling::random_value(q, rng);
        ChainValue b = sampling::random_value(q, rng);
        if (segment_contains(q, cut, a) && compare_elements(q, b, a) != Ordering::Less)
            CHECK(segment_contains(q, cut, b));
    }
}

TEST_CASE("chain sizes and enumeration") {
    CHECK(chain_size(chains::finite(7)) == 7);
    CHECK(chain_size(chains::singleton()) == 1);
    CHECK(chain_size(chains::concat(chains::finite(2), chains::finite(3))) == 6);
    CHECK(chain_size(chains::reverse(chains::finite(4))) == 4);
    CHECK_FALSE(chain_size(chains::rationals()).has_value());

    auto c = chains::concat(chains::finite(2), chains::finite(2));
    auto elements = enumerate_chain(c);
    REQUIRE(elements.size() == 4);
    for (size_t i = 0; i + 1 < elements.size(); ++i)
        CHECK(compare_elements(c, elements[i], elements[i + 1]) == Ordering::Less);
}

TEST_CASE("rendering is canonical") {
    CHECK(render_chain(chains::concat(chains::finite(3), chains::rationals())) ==
          "concat(finite(3),Q)");
    CHECK(render_chain(chains::finite(0)) == "empty");
    CHECK(render_value(values::concat_at(1, values::rational_at(Rational(-1, 2)))) == "(1,-1/2)");
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, -4).str() == "1/2");
    CHECK(Rational(3).str_explicit() == "3/1");
}
