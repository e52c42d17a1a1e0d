#pragma once

#include <optional>

#include "hahnrank/hahn_group.hpp"

namespace hahnrank {

// Generalized power series with finite support over the Hahn group on a
// chain: a finite formal sum of terms coeff * t^g, support sorted strictly
// increasing by the group order, no zero coefficients. The smallest exponent
// is the most significant term; a series is positive iff its leading
// coefficient is.
class HahnSeries {
public:
    using Term = std::pair<HahnGroupElement, Rational>;

    static HahnSeries zero(ChainPtr chain) { return HahnSeries(std::move(chain), {}); }

    static HahnSeries constant(ChainPtr chain, Rational c);
    static HahnSeries one(ChainPtr chain) { return constant(std::move(chain), Rational(1)); }
    static HahnSeries monomial(HahnGroupElement exponent, Rational coeff);

    static HahnSeries make(ChainPtr chain, std::vector<Term> terms);

    const ChainPtr& chain() const { return chain_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

private:
    HahnSeries(ChainPtr chain, std::vector<Term> terms)
        : chain_(std::move(chain)), terms_(std::move(terms)) {}

    ChainPtr chain_;
    std::vector<Term> terms_;
};

void require_same_field(const HahnSeries& a, const HahnSeries& b);

HahnSeries series_add(const HahnSeries& a, const HahnSeries& b);
HahnSeries series_neg(const HahnSeries& s);
HahnSeries series_sub(const HahnSeries& a, const HahnSeries& b);
HahnSeries series_mul(const HahnSeries& a, const HahnSeries& b);
HahnSeries series_pow(const HahnSeries& s, unsigned long e);

int series_sign(const HahnSeries& s);
Ordering series_compare(const HahnSeries& a, const HahnSeries& b);
bool series_equal(const HahnSeries& a, const HahnSeries& b);
HahnSeries series_abs(const HahnSeries& s);

// Natural valuation: the smallest exponent. ZeroSeries on 0.
HahnGroupElement valuation(const HahnSeries& s);

// Positive and infinitely large: s > 0 with v(s) < 0.
bool in_P_K(const HahnSeries& s);

// Truncated inverse: for s = c t^g (1 + eps) with v(eps) > 0 returns
// r = c^-1 t^-g sum_{i<k} (-eps)^i, so that s*r - 1 = -(-eps)^k. The inverse
// is exact when eps = 0.
HahnSeries inverse_truncated(const HahnSeries& s, long k);

std::string render_series(const HahnSeries& s);

enum class TowerTag { IdentityTower, LiftedFromChain, LiftedFromGroup };

// A chain automorphism, its lift to the Hahn group, and the further lift to
// the series field, kept together so the commuting squares can be checked.
class AutomorphismTower {
public:
    static AutomorphismTower identity(ChainPtr chain);
    // Lifts twice: supports re-index by the chain shift, exponents re-index
    // by the group map. Throws NotInvertible for non-bijective shifts.
    static AutomorphismTower lift_chain(ChainPtr chain, ShiftPtr sigma_chain);
    static AutomorphismTower lift_group(ChainPtr chain, GroupAutomorphism sigma_group);

    const ChainPtr& chain() const { return chain_; }
    const ShiftPtr& sigma_chain() const { return sigma_chain_; }
    const GroupAutomorphism& sigma_group() const { return sigma_group_; }
    TowerTag tag() const { return tag_; }

    HahnSeries apply(const HahnSeries& s) const;
    HahnSeries apply_inverse(const HahnSeries& s) const;
    HahnSeries apply_n(const HahnSeries& s, long n) const; // n may be negative

    bool is_identity() const;

private:
    AutomorphismTower(ChainPtr chain, ShiftPtr sigma_chain, GroupAutomorphism sigma_group,
                      TowerTag tag)
        : chain_(std::move(chain)), sigma_chain_(std::move(sigma_chain)),
          sigma_group_(std::move(sigma_group)), tag_(tag) {}

    ChainPtr chain_;
    ShiftPtr sigma_chain_;
    GroupAutomorphism sigma_group_;
    TowerTag tag_;
};

const char* tower_tag_name(TowerTag tag);

// Convex coarsening of the natural valuation, carved out by a final segment
// of the value chain. G_w is the convex subgroup of values whose archimedean
// class lies in the segment; R_w, I_w and the positive units follow from it.
class ConvexValuation {
public:
    ConvexValuation(ChainPtr chain, FinalSegmentCut segment);

    const ChainPtr& chain() const { return chain_; }
    const FinalSegmentCut& segment() const { return segment_; }

    bool group_member(const HahnGroupElement& g) const; // G_w
    bool in_ring(const HahnSeries& s) const;            // w(s) >= 0
    bool in_ideal(const HahnSeries& s) const;           // w(s) > 0
    bool is_positive_unit(const HahnSeries& s) const;   // s > 0, w(s) = 0

    // Compares w(a) and w(b) as cosets v(.) + G_w. ZeroSeries on zero input.
    Ordering w_compare(const HahnSeries& a, const HahnSeries& b) const;

    // Image under the residue map, identified with a series supported on
    // G_w. Throws NotInValuationRing when w(a) < 0.
    HahnSeries residue(const HahnSeries& a) const;

private:
    ChainPtr chain_;
    FinalSegmentCut segment_;
};

// Whether the coarsening's ring is setwise fixed by the automorphism,
// decided exactly at the chain level: the defining segment must be invariant
// under the induced chain map.
bool is_sigma_compatible(const ConvexValuation& w, const AutomorphismTower& tower);

struct Classification {
    Verdict isometry;         // the group map is the identity
    Verdict weak_isometry;    // the chain map is the identity
    Verdict omega_increasing; // the chain map is a strict left shift
    Verdict square_growth;    // sigma(a) >= a^2 for every positive infinite a
};

Classification classify_automorphism(const AutomorphismTower& tower);

// Multiplicative equivalence on the positive infinite elements: squaring as
// the right shift. The kind is decided exactly through the value chain; the
// witness is the minimal field-level iteration count.
EquivalenceVerdict mult_equivalent(const HahnSeries& a, const HahnSeries& b,
                                   long cap = kDefaultEquivalenceCap);

// Difference equivalence via the automorphism as the right shift. Requires a
// proven square-growth verdict; throws HypothesisNotProven otherwise.
EquivalenceVerdict sigma_equivalent(const AutomorphismTower& tower, const HahnSeries& a,
                                    const HahnSeries& b, long cap = kDefaultEquivalenceCap);

} // namespace hahnrank
