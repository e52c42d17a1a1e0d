#include "hahnrank/rank.hpp"

namespace hahnrank {

const char* rank_kind_name(RankKind kind) {
    switch (kind) {
    case RankKind::Rank: return "rank";
    case RankKind::PrincipalRank: return "principal_rank";
    case RankKind::SigmaRank: return "sigma_rank";
    case RankKind::PrincipalSigmaRank: return "principal_sigma_rank";
    case RankKind::SigmaPrincipalIntersection: return "sigma_principal_intersection";
    }
    return "<unknown>";
}

const char* class_relation_name(ClassRelation relation) {
    return relation == ClassRelation::Mult ? "mult" : "sigma";
}

std::string RankDescriptor::order_type_str() const { return render_chain(order_type); }

std::string RankDescriptor::cardinality_str() const {
    return cardinality ? std::to_string(*cardinality) : "infinite";
}

namespace {

bool chain_known_infinite(const ChainPtr& chain) {
    if (chain->get<ChainDescriptor::Rationals>() || chain->get<ChainDescriptor::NonNegRationals>())
        return true;
    if (const auto* c = chain->get<ChainDescriptor::Concat>()) {
        auto copies = chain_size(c->index);
        return copies && *copies >= 1 && chain_known_infinite(c->component);
    }
    if (const auto* r = chain->get<ChainDescriptor::Reverse>())
        return chain_known_infinite(r->inner);
    if (const auto* q = chain->get<ChainDescriptor::Quotient>()) {
        if (auto canonical = canonical_quotient(q->inner, q->shift))
            return chain_known_infinite(*canonical);
    }
    return false;
}

void require_element_chain(const ChainPtr& chain) {
    if (!chain || chain->get<ChainDescriptor::FinalSegments>())
        throw Error(ErrorCode::UnsupportedShape, "rank computations need an element chain");
}

} // namespace

RankDescriptor rank_of(const ChainPtr& chain) {
    require_element_chain(chain);
    const char* prov = "rank-equals-final-segments";
    if (auto n = chain_size(chain)) {
        // Every non-empty final segment of a finite chain is principal, one
        // per element.
        return {RankKind::Rank, chains::finite(static_cast<int>(*n)), *n, prov};
    }
    if (chain_known_infinite(chain))
        return {RankKind::Rank, chains::final_segments_of(chain), std::nullopt, prov};
    throw Error(ErrorCode::UnsupportedShape,
                "no final segment enumeration or canonical answer for " + render_chain(chain));
}

RankDescriptor principal_rank_of(const ChainPtr& chain) {
    require_element_chain(chain);
    const char* prov = "principal-rank-equals-reversed-chain";
    if (auto n = chain_size(chain))
        return {RankKind::PrincipalRank, chains::finite(static_cast<int>(*n)), *n, prov};
    return {RankKind::PrincipalRank, chains::reverse(chain), std::nullopt, prov};
}

RankDescriptor sigma_rank_of(const ChainPtr& chain, const ShiftPtr& sigma_chain) {
    require_element_chain(chain);
    auto canonical = canonical_quotient(chain, sigma_chain);
    if (!canonical)
        throw Error(ErrorCode::NoCanonicalQuotient,
                    "quotient of " + render_chain(chain) + " by " + render_shift(sigma_chain) +
                        " has no canonical descriptor");
    RankDescriptor inner = rank_of(*canonical);
    return {RankKind::SigmaRank, inner.order_type, inner.cardinality,
            "sigma-rank-equals-quotient-final-segments"};
}

RankDescriptor principal_sigma_rank_of(const ChainPtr& chain, const ShiftPtr& sigma_chain) {
    require_element_chain(chain);
    auto canonical = canonical_quotient(chain, sigma_chain);
    if (!canonical)
        throw Error(ErrorCode::NoCanonicalQuotient,
                    "quotient of " + render_chain(chain) + " by " + render_shift(sigma_chain) +
                        " has no canonical descriptor");
    const char* prov = "principal-sigma-rank-equals-reversed-quotient";
    if (auto n = chain_size(*canonical))
        return {RankKind::PrincipalSigmaRank, chains::finite(static_cast<int>(*n)), *n, prov};
    return {RankKind::PrincipalSigmaRank, chains::reverse(*canonical), std::nullopt, prov};
}

RankDescriptor sigma_principal_intersection(const ChainPtr& chain, const ShiftPtr& sigma_chain) {
    require_element_chain(chain);
    FixedPointSet fps = fixed_points(chain, sigma_chain);
    // The correspondence onto the fixed-point chain reverses order; finite
    // chains are self-reverse, so only the infinite case keeps the marker.
    const char* prov = "sigma-principal-intersection-equals-fixed-points-reversed";
    if (auto n = chain_size(fps.order_type))
        return {RankKind::SigmaPrincipalIntersection, chains::finite(static_cast<int>(*n)), *n,
                prov};
    return {RankKind::SigmaPrincipalIntersection, chains::reverse(fps.order_type), std::nullopt,
            prov};
}

bool SegmentRing::contains(const HahnSeries& s) const {
    if (s.is_zero())
        return true;
    HahnGroupElement v = valuation(s);
    if (group_sign(v) >= 0)
        return true; // inside the natural valuation ring
    HahnSeries magnitude = series_abs(s);
    const HahnSeries& top = generator();
    // The class of the top representative is cofinal in the union, so
    // membership is: at or below the top class.
    if (series_compare(magnitude, top) != Ordering::Greater)
        return true;
    EquivalenceVerdict verdict = relation_ == ClassRelation::Mult
                                     ? mult_equivalent(magnitude, top, cap_)
                                     : sigma_equivalent(*tower_, magnitude, top, cap_);
    if (verdict.is_undecided())
        throw Error(ErrorCode::UndecidedEquivalence,
                    "ring membership needs a decided class comparison");
    return verdict.is_equivalent();
}

FinalSegmentCut SegmentRing::generator_segment() const {
    return principal_segment_of(value_vG(valuation(generator())));
}

SegmentRing ring_from_initial_segment(ClassRelation relation, const InitialSegmentInput& segment,
                                      const std::optional<AutomorphismTower>& tower, long cap) {
    if (segment.representatives.empty())
        throw Error(ErrorCode::InconsistentSegment,
                    "the empty initial segment corresponds to the natural valuation ring, "
                    "which is excluded");
    if (!segment.has_last)
        throw Error(ErrorCode::InconsistentSegment,
                    "a finite representative list always has a last class");
    if (relation == ClassRelation::Sigma) {
        if (!tower)
            throw Error(ErrorCode::DomainMismatch, "the sigma relation needs a tower");
        if (!classify_automorphism(*tower).square_growth.proven_p())
            throw Error(ErrorCode::HypothesisNotProven,
                        "the sigma relation needs a proven square-growth verdict");
    }
    for (const auto& rep : segment.representatives)
        if (!in_P_K(rep))
            throw Error(ErrorCode::NotInPK,
                        "representatives must be positive and infinitely large");
    // Classes are convex, so checking adjacent pairs settles the whole list.
    for (size_t i = 0; i + 1 < segment.representatives.size(); ++i) {
        const HahnSeries& lo = segment.representatives[i];
        const HahnSeries& hi = segment.representatives[i + 1];
        if (series_compare(lo, hi) != Ordering::Less)
            throw Error(ErrorCode::InconsistentSegment,
                        "representatives must be listed strictly increasing");
        EquivalenceVerdict verdict = relation == ClassRelation::Mult
                                         ? mult_equivalent(lo, hi, cap)
                                         : sigma_equivalent(*tower, lo, hi, cap);
        if (verdict.is_equivalent())
            throw Error(ErrorCode::InconsistentSegment,
                        "representatives must be pairwise inequivalent");
        if (verdict.is_undecided())
            throw Error(ErrorCode::UndecidedEquivalence,
                        "could not separate two representatives within the cap");
    }
    return SegmentRing(relation, tower, segment.representatives, cap);
}

} // namespace hahnrank
