#pragma once

#include "hahnrank/hahn_field.hpp"

namespace hahnrank {

enum class RankKind { Rank, PrincipalRank, SigmaRank, PrincipalSigmaRank,
                      SigmaPrincipalIntersection };

const char* rank_kind_name(RankKind kind);

// An order type reported as a canonical descriptor: Finite(n) with exact
// cardinality in the finite case, a reversed or symbolic final-segment term
// otherwise. The provenance names the correspondence that justified it.
struct RankDescriptor {
    RankKind kind;
    ChainPtr order_type;
    std::optional<long> cardinality; // nullopt: infinite
    std::string provenance;

    bool is_empty() const { return cardinality && *cardinality == 0; }
    std::string order_type_str() const;
    std::string cardinality_str() const;
};

// Order type of the non-empty final segments of the chain.
RankDescriptor rank_of(const ChainPtr& chain);

// Order type of the reversed chain.
RankDescriptor principal_rank_of(const ChainPtr& chain);

// Final segments of the quotient chain; needs a canonical quotient.
RankDescriptor sigma_rank_of(const ChainPtr& chain, const ShiftPtr& sigma_chain);

// Reversed quotient chain.
RankDescriptor principal_sigma_rank_of(const ChainPtr& chain, const ShiftPtr& sigma_chain);

// Order type of the fixed-point chain of the shift, reported reversed per the
// order-reversing correspondence. Finite chains are self-reverse.
RankDescriptor sigma_principal_intersection(const ChainPtr& chain, const ShiftPtr& sigma_chain);

enum class ClassRelation { Mult, Sigma };

const char* class_relation_name(ClassRelation relation);

// An initial segment of the quotient of the positive infinite elements,
// given by an increasing list of pairwise inequivalent representatives, one
// per class of the segment.
struct InitialSegmentInput {
    std::vector<HahnSeries> representatives;
    bool has_last = true;
};

// Membership predicate of the convex subring built from an initial segment
// of classes: the symmetrized union of the classes together with the natural
// valuation ring. Infinite unions are realized through the cofinality of the
// iterate powers inside each class.
class SegmentRing {
public:
    ClassRelation relation() const { return relation_; }
    const std::vector<HahnSeries>& representatives() const { return reps_; }
    const HahnSeries& generator() const { return reps_.back(); }

    bool contains(const HahnSeries& s) const;

    // Principal cut of the generator's value class.
    FinalSegmentCut generator_segment() const;

private:
    friend SegmentRing ring_from_initial_segment(ClassRelation relation,
                                                 const InitialSegmentInput& segment,
                                                 const std::optional<AutomorphismTower>& tower,
                                                 long cap);

    SegmentRing(ClassRelation relation, std::optional<AutomorphismTower> tower,
                std::vector<HahnSeries> reps, long cap)
        : relation_(relation), tower_(std::move(tower)), reps_(std::move(reps)), cap_(cap) {}

    ClassRelation relation_;
    std::optional<AutomorphismTower> tower_;
    std::vector<HahnSeries> reps_;
    long cap_;
};

// Builds the ring predicate for a non-empty initial segment. The sigma
// relation needs a tower with proven square growth. Throws
// InconsistentSegment on empty, unordered or equivalent representatives.
SegmentRing ring_from_initial_segment(ClassRelation relation, const InitialSegmentInput& segment,
                                      const std::optional<AutomorphismTower>& tower = std::nullopt,
                                      long cap = kDefaultEquivalenceCap);

} // namespace hahnrank
