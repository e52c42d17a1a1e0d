#pragma once

#include <random>

#include "hahnrank/rank.hpp"
#include "hahnrank/report.hpp"

namespace hahnrank {

// Output of a construction recipe: the chain, the lifted tower, its
// classification and the five rank descriptors.
struct ConstructionResult {
    std::string name;
    ChainPtr chain;
    ShiftPtr sigma_chain;
    AutomorphismTower tower;
    Classification classification;
    RankDescriptor rank;
    RankDescriptor principal_rank;
    RankDescriptor sigma_rank;
    RankDescriptor principal_sigma_rank;
    RankDescriptor intersection;
};

// Concatenation of m copies of the non-negative rationals with the copy
// zeros fixed and eta acting on the positives of every copy. The fixed
// points make the intersection of the difference rank with the principal
// rank have order type Finite(m). Throws TrivialEta when eta is the
// identity.
ConstructionResult build_fixed_point_example(int m, const ShiftPtr& eta);

// Concatenation of m copies of the rationals with translation by -1 on
// every copy: an omega-increasing automorphism with principal difference
// rank Finite(m) and empty intersection with the principal rank.
ConstructionResult build_omega_increasing_example(int m);

// Exhaustive check, on the chain Finite(n), that final segments, convex
// subgroups and convex valuation rings correspond bijectively and order
// preservingly. Pools are fixed: group elements with coefficients in
// {-2,-1,1,2} and at most 5 support points; ring membership is probed on
// monomials whose exponents have at most 2 support points. Throws
// PoolTooLarge for n outside 1..8.
Report oracle_verify_rank_correspondences(int n);

// Enumerates every initial segment of the (finite) class quotient and
// checks the ring built from it: convexity, closure under ring operations,
// sigma-compatibility for the sigma relation, strict containment of the
// natural valuation ring, the round trip back to the class segment, and
// principality at the last class. Throws QuotientTooLarge past 6 classes
// and HypothesisNotProven for the sigma relation without square growth.
Report oracle_verify_theorem3(const ChainPtr& chain, const ShiftPtr& sigma_chain,
                              ClassRelation relation, long cap = kDefaultEquivalenceCap);

Report oracle_verify_theorem3(const ConstructionResult& example, ClassRelation relation,
                              long cap = kDefaultEquivalenceCap);

// Deterministic diagram check: v(sigma(a)) = sigma_G(v(a)) on sampled series
// and v_G(sigma_G(g)) = sigma_Gamma(v_G(g)) on sampled group elements.
Report verify_tower_diagram(const AutomorphismTower& tower, int samples, std::uint64_t seed,
                            const std::string& case_id);

namespace sampling {

ChainValue random_value(const ChainPtr& chain, std::mt19937_64& rng);
HahnGroupElement random_group_element(const ChainPtr& chain, std::mt19937_64& rng,
                                      int max_terms = 4);
HahnGroupElement random_nonzero_group_element(const ChainPtr& chain, std::mt19937_64& rng,
                                              int max_terms = 4);
HahnSeries random_series(const ChainPtr& chain, std::mt19937_64& rng, int max_terms = 3);
HahnSeries random_nonzero_series(const ChainPtr& chain, std::mt19937_64& rng, int max_terms = 3);
// Positive with negative valuation: an element of P_K.
HahnSeries random_positive_infinite(const ChainPtr& chain, std::mt19937_64& rng,
                                    int max_terms = 3);

} // namespace sampling

} // namespace hahnrank
