#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "hahnrank/shift.hpp"

namespace hahnrank {

// Element of the Hahn group over a chain with rational components: a finite
// formal sum of terms coeff * 1_gamma, support sorted strictly increasing,
// no zero coefficients. The order is lexicographic: the sign is the sign of
// the coefficient at the smallest support point.
class HahnGroupElement {
public:
    using Term = std::pair<ChainValue, Rational>;

    static HahnGroupElement zero(ChainPtr chain) { return HahnGroupElement(std::move(chain), {}); }

    static HahnGroupElement unit(ChainPtr chain, ChainValue gamma, Rational coeff = Rational(1));

    // Normalizes: sorts by chain order, merges equal support points, drops
    // zero coefficients. Throws CrossChainComparison on foreign values.
    static HahnGroupElement make(ChainPtr chain, std::vector<Term> terms);

    const ChainPtr& chain() const { return chain_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

private:
    HahnGroupElement(ChainPtr chain, std::vector<Term> terms)
        : chain_(std::move(chain)), terms_(std::move(terms)) {}

    ChainPtr chain_;
    std::vector<Term> terms_;
};

void require_same_group(const HahnGroupElement& a, const HahnGroupElement& b);

HahnGroupElement group_add(const HahnGroupElement& a, const HahnGroupElement& b);
HahnGroupElement group_neg(const HahnGroupElement& g);
HahnGroupElement group_sub(const HahnGroupElement& a, const HahnGroupElement& b);
HahnGroupElement group_scale(const Rational& q, const HahnGroupElement& g);

int group_sign(const HahnGroupElement& g); // -1, 0, 1
Ordering group_compare(const HahnGroupElement& a, const HahnGroupElement& b);
bool group_equal(const HahnGroupElement& a, const HahnGroupElement& b);
HahnGroupElement group_abs(const HahnGroupElement& g);

// Natural group valuation: the smallest support point. ZeroElement on 0.
ChainValue value_vG(const HahnGroupElement& g);

// Archimedean equivalence of nonzero elements, decided by doubling on the
// negative cone. Agrees with equality of value_vG.
EquivalenceVerdict archimedean_equivalent(const HahnGroupElement& g, const HahnGroupElement& h,
                                          long cap = kDefaultEquivalenceCap);

// Membership in the convex subgroup G_w carved out by a final segment of the
// value chain: g = 0 or v_G(g) in the segment.
bool convex_subgroup_member(const ChainPtr& chain, const FinalSegmentCut& segment,
                            const HahnGroupElement& g);

// Cut of the smallest segment-defined convex subgroup containing g.
FinalSegmentCut subgroup_generated_value(const HahnGroupElement& g);

std::string render_group_element(const HahnGroupElement& g);

// Order automorphism of a Hahn group: either lifted from a bijective chain
// shift (support re-indexing) or scalar multiplication by a positive rational.
class GroupAutomorphism {
public:
    static GroupAutomorphism identity() { return GroupAutomorphism(Identity{}); }
    static GroupAutomorphism coefficient_scale(const Rational& factor);

    HahnGroupElement apply(const HahnGroupElement& g) const;
    HahnGroupElement apply_inverse(const HahnGroupElement& g) const;
    HahnGroupElement apply_n(const HahnGroupElement& g, long n) const; // n may be negative

    bool is_identity_on(const ChainPtr& chain) const;

    // Induced map on the value chain.
    ShiftPtr chain_shift() const;

    std::string render() const;

    struct Identity {};
    struct Lifted {
        ChainPtr chain;
        ShiftPtr shift;
        ShiftPtr inverse;
    };
    struct CoefficientScale { Rational factor; };

    template <class T>
    const T* get() const { return std::get_if<T>(&node_); }

private:
    template <class T>
    explicit GroupAutomorphism(T node) : node_(std::move(node)) {}

    friend GroupAutomorphism lift_shift_to_group(const ChainPtr& chain, const ShiftPtr& shift);

    std::variant<Identity, Lifted, CoefficientScale> node_;
};

// Lifts a bijective chain shift to the Hahn group by re-indexing supports.
// Throws NotInvertible when no inverse shift exists.
GroupAutomorphism lift_shift_to_group(const ChainPtr& chain, const ShiftPtr& shift);

} // namespace hahnrank
