#include "hahnrank/hahn_group.hpp"

#include <algorithm>

namespace hahnrank {

HahnGroupElement HahnGroupElement::unit(ChainPtr chain, ChainValue gamma, Rational coeff) {
    return make(std::move(chain), {{std::move(gamma), std::move(coeff)}});
}

HahnGroupElement HahnGroupElement::make(ChainPtr chain, std::vector<Term> terms) {
    for (const auto& [gamma, coeff] : terms) {
        (void)coeff;
        require_in_chain(chain, gamma);
    }
    std::stable_sort(terms.begin(), terms.end(), [&](const Term& x, const Term& y) {
        return compare_elements(chain, x.first, y.first) == Ordering::Less;
    });
    std::vector<Term> normalized;
    normalized.reserve(terms.size());
    for (auto& t : terms) {
        if (!normalized.empty() &&
            compare_elements(chain, normalized.back().first, t.first) == Ordering::Equal) {
            normalized.back().second += t.second;
            if (normalized.back().second.is_zero())
                normalized.pop_back();
        } else if (!t.second.is_zero()) {
            normalized.push_back(std::move(t));
        }
    }
    return HahnGroupElement(std::move(chain), std::move(normalized));
}

void require_same_group(const HahnGroupElement& a, const HahnGroupElement& b) {
    if (!chain_equal(a.chain(), b.chain()))
        throw Error(ErrorCode::DomainMismatch,
                    "group elements live over different chains: " + render_chain(a.chain()) +
                        " vs " + render_chain(b.chain()));
}

HahnGroupElement group_add(const HahnGroupElement& a, const HahnGroupElement& b) {
    require_same_group(a, b);
    const auto& chain = a.chain();
    std::vector<HahnGroupElement::Term> out;
    out.reserve(a.terms().size() + b.terms().size());
    size_t i = 0, j = 0;
    while (i < a.terms().size() && j < b.terms().size()) {
        Ordering o = compare_elements(chain, a.terms()[i].first, b.terms()[j].first);
        if (o == Ordering::Less) {
            out.push_back(a.terms()[i++]);
        } else if (o == Ordering::Greater) {
            out.push_back(b.terms()[j++]);
        } else {
            Rational c = a.terms()[i].second + b.terms()[j].second;
            if (!c.is_zero())
                out.emplace_back(a.terms()[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    for (; i < a.terms().size(); ++i)
        out.push_back(a.terms()[i]);
    for (; j < b.terms().size(); ++j)
        out.push_back(b.terms()[j]);
    return HahnGroupElement::make(chain, std::move(out));
}

HahnGroupElement group_neg(const HahnGroupElement& g) {
    std::vector<HahnGroupElement::Term> out;
    out.reserve(g.terms().size());
    for (const auto& [gamma, coeff] : g.terms())
        out.emplace_back(gamma, -coeff);
    return HahnGroupElement::make(g.chain(), std::move(out));
}

HahnGroupElement group_sub(const HahnGroupElement& a, const HahnGroupElement& b) {
    return group_add(a, group_neg(b));
}

HahnGroupElement group_scale(const Rational& q, const HahnGroupElement& g) {
    if (q.is_zero())
        return HahnGroupElement::zero(g.chain());
    std::vector<HahnGroupElement::Term> out;
    out.reserve(g.terms().size());
    for (const auto& [gamma, coeff] : g.terms())
        out.emplace_back(gamma, q * coeff);
    return HahnGroupElement::make(g.chain(), std::move(out));
}

int group_sign(const HahnGroupElement& g) {
    if (g.is_zero())
        return 0;
    return g.terms().front().second.sign();
}

Ordering group_compare(const HahnGroupElement& a, const HahnGroupElement& b) {
    return ordering_from_sign(group_sign(group_sub(a, b)));
}

bool group_equal(const HahnGroupElement& a, const HahnGroupElement& b) {
    return group_compare(a, b) == Ordering::Equal;
}

HahnGroupElement group_abs(const HahnGroupElement& g) {
    return group_sign(g) < 0 ? group_neg(g) : g;
}

ChainValue value_vG(const HahnGroupElement& g) {
    if (g.is_zero())
        throw Error(ErrorCode::ZeroElement, "the zero element has no group value");
    return g.terms().front().first;
}

EquivalenceVerdict archimedean_equivalent(const HahnGroupElement& g, const HahnGroupElement& h,
                                          long cap) {
    require_same_group(g, h);
    if (g.is_zero() || h.is_zero())
        throw Error(ErrorCode::ZeroElement, "archimedean equivalence is about nonzero elements");
    const auto& chain = g.chain();
    if (compare_elements(chain, value_vG(g), value_vG(h)) != Ordering::Equal)
        return EquivalenceVerdict::not_equivalent(
            "minimum support differs: doubling never changes the leading support point");
    // Same leading support point: doubling on the negative cone meets both
    // inequalities after about log2 of the leading coefficient ratio.
    HahnGroupElement a = group_neg(group_abs(g));
    HahnGroupElement b = group_neg(group_abs(h));
    HahnGroupElement fa = a;
    HahnGroupElement fb = b;
    const long hard_bound = std::max(cap, 4096L);
    for (long n = 0; n <= hard_bound; ++n) {
        if (group_compare(fa, b) != Ordering::Greater && group_compare(fb, a) != Ordering::Greater)
            return EquivalenceVerdict::equivalent(n);
        fa = group_scale(Rational(2), fa);
        fb = group_scale(Rational(2), fb);
    }
    throw Error(ErrorCode::UnsupportedShape,
                "archimedean witness search exceeded the hard bound despite equal group values");
}

bool convex_subgroup_member(const ChainPtr& chain, const FinalSegmentCut& segment,
                            const HahnGroupElement& g) {
    if (!chain_equal(chain, g.chain()))
        throw Error(ErrorCode::DomainMismatch, "segment and element chains differ");
    if (g.is_zero())
        return true;
    return segment_contains(chain, segment, value_vG(g));
}

FinalSegmentCut subgroup_generated_value(const HahnGroupElement& g) {
    return principal_segment_of(value_vG(g));
}

std::string render_group_element(const HahnGroupElement& g) {
    if (g.is_zero())
        return "0";
    std::string out;
    for (const auto& [gamma, coeff] : g.terms()) {
        if (!out.empty())
            out += " + ";
        out += coeff.str() + "*1_" + render_value(gamma);
    }
    return out;
}

GroupAutomorphism GroupAutomorphism::coefficient_scale(const Rational& factor) {
    if (!factor.is_positive())
        throw Error(ErrorCode::DomainMismatch, "coefficient scale factor must be positive");
    return GroupAutomorphism(CoefficientScale{factor});
}

HahnGroupElement GroupAutomorphism::apply(const HahnGroupElement& g) const {
    if (get<Identity>())
        return g;
    if (const auto* l = get<Lifted>()) {
        if (!chain_equal(l->chain, g.chain()))
            throw Error(ErrorCode::DomainMismatch, "automorphism lifted over a different chain");
        std::vector<HahnGroupElement::Term> out;
        out.reserve(g.terms().size());
        for (const auto& [gamma, coeff] : g.terms())
            out.emplace_back(apply_shift(l->chain, *l->shift, gamma), coeff);
        return HahnGroupElement::make(g.chain(), std::move(out));
    }
    const auto* s = get<CoefficientScale>();
    return group_scale(s->factor, g);
}

HahnGroupElement GroupAutomorphism::apply_inverse(const HahnGroupElement& g) const {
    if (get<Identity>())
        return g;
    if (const auto* l = get<Lifted>()) {
        if (!chain_equal(l->chain, g.chain()))
            throw Error(ErrorCode::DomainMismatch, "automorphism lifted over a different chain");
        std::vector<HahnGroupElement::Term> out;
        out.reserve(g.terms().size());
        for (const auto& [gamma, coeff] : g.terms())
            out.emplace_back(apply_shift(l->chain, *l->inverse, gamma), coeff);
        return HahnGroupElement::make(g.chain(), std::move(out));
    }
    const auto* s = get<CoefficientScale>();
    return group_scale(s->factor.inverse(), g);
}

HahnGroupElement GroupAutomorphism::apply_n(const HahnGroupElement& g, long n) const {
    HahnGroupElement out = g;
    for (long i = 0; i < std::labs(n); ++i)
        out = n > 0 ? apply(out) : apply_inverse(out);
    return out;
}

bool GroupAutomorphism::is_identity_on(const ChainPtr& chain) const {
    if (get<Identity>())
        return true;
    if (const auto* l = get<Lifted>())
        return is_identity_shift(chain, *l->shift);
    return get<CoefficientScale>()->factor.is_one();
}

ShiftPtr GroupAutomorphism::chain_shift() const {
    if (const auto* l = get<Lifted>())
        return l->shift;
    // Scalar multiplication fixes every archimedean class.
    return shifts::identity();
}

std::string GroupAutomorphism::render() const {
    if (get<Identity>())
        return "identity";
    if (const auto* l = get<Lifted>())
        return "lifted(" + render_shift(l->shift) + ")";
    return "coeffscale(" + get<CoefficientScale>()->factor.str() + ")";
}

GroupAutomorphism lift_shift_to_group(const ChainPtr& chain, const ShiftPtr& shift) {
    validate_shift(chain, *shift);
    auto inverse = invert_shift(chain, *shift);
    if (!inverse)
        throw Error(ErrorCode::NotInvertible,
                    "shift " + render_shift(shift) + " is not bijective on " +
                        render_chain(chain));
    return GroupAutomorphism(GroupAutomorphism::Lifted{chain, shift, *inverse});
}

} // namespace hahnrank
