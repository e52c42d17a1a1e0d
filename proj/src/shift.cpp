#include "hahnrank/shift.hpp"

#include <algorithm>

namespace hahnrank {

namespace shifts {

ShiftPtr identity() { return std::make_shared<const ShiftMap>(ShiftMap::Identity{}); }

ShiftPtr translate(Rational offset) {
    return std::make_shared<const ShiftMap>(ShiftMap::Translate{std::move(offset)});
}

ShiftPtr scale(Rational factor) {
    if (!factor.is_positive())
        throw Error(ErrorCode::DomainMismatch, "scale factor must be positive");
    return std::make_shared<const ShiftMap>(ShiftMap::Scale{std::move(factor)});
}

ShiftPtr per_copy(ShiftPtr inner) {
    return std::make_shared<const ShiftMap>(ShiftMap::PerCopy{std::move(inner)});
}

ShiftPtr fix_zero_per_copy(ShiftPtr inner) {
    return std::make_shared<const ShiftMap>(ShiftMap::FixZeroPerCopy{std::move(inner)});
}

ShiftPtr clamped_decrement() {
    return std::make_shared<const ShiftMap>(ShiftMap::ClampedDecrement{});
}

} // namespace shifts

const char* orientation_name(Orientation o) {
    switch (o) {
    case Orientation::RightShift: return "right";
    case Orientation::LeftShift: return "left";
    default: return "neutral";
    }
}

std::string EquivalenceVerdict::str() const {
    switch (kind) {
    case Kind::Equivalent: return "equivalent(n=" + std::to_string(witness) + ")";
    case Kind::NotEquivalent: return "not_equivalent: " + certificate;
    default: return "undecided(cap=" + std::to_string(cap) + ")";
    }
}

std::string Verdict::str() const {
    const char* name = state == State::Proven ? "proven"
                       : state == State::Refuted ? "refuted"
                                                 : "undecided";
    if (witness.empty())
        return name;
    return std::string(name) + " (" + witness + ")";
}

bool shift_equal(const ShiftPtr& a, const ShiftPtr& b) {
    if (a.get() == b.get())
        return true;
    if (!a || !b)
        return false;
    if (a->node().index() != b->node().index())
        return false;
    if (const auto* t = a->get<ShiftMap::Translate>())
        return t->offset == b->get<ShiftMap::Translate>()->offset;
    if (const auto* s = a->get<ShiftMap::Scale>())
        return s->factor == b->get<ShiftMap::Scale>()->factor;
    if (const auto* p = a->get<ShiftMap::PerCopy>())
        return shift_equal(p->inner, b->get<ShiftMap::PerCopy>()->inner);
    if (const auto* f = a->get<ShiftMap::FixZeroPerCopy>())
        return shift_equal(f->inner, b->get<ShiftMap::FixZeroPerCopy>()->inner);
    return true; // Identity, ClampedDecrement
}

void validate_shift(const ChainPtr& chain, const ShiftMap& shift) {
    if (!chain)
        throw Error(ErrorCode::DomainMismatch, "shift needs a domain chain");
    if (shift.get<ShiftMap::Identity>()) {
        if (chain->get<ChainDescriptor::FinalSegments>())
            throw Error(ErrorCode::DomainMismatch, "no shifts on a symbolic order type");
        return;
    }
    if (shift.get<ShiftMap::Translate>()) {
        if (!chain->get<ChainDescriptor::Rationals>())
            throw Error(ErrorCode::DomainMismatch,
                        "translate acts on Q, not on " + render_chain(chain));
        return;
    }
    if (shift.get<ShiftMap::Scale>()) {
        if (!chain->get<ChainDescriptor::Rationals>() &&
            !chain->get<ChainDescriptor::NonNegRationals>())
            throw Error(ErrorCode::DomainMismatch,
                        "scale acts on Q or Qnn, not on " + render_chain(chain));
        return;
    }
    if (shift.get<ShiftMap::ClampedDecrement>()) {
        const auto* f = chain->get<ChainDescriptor::Finite>();
        if (!f || f->size < 1)
            throw Error(ErrorCode::DomainMismatch,
                        "clamped decrement acts on a non-empty finite chain, not on " +
                            render_chain(chain));
        return;
    }
    if (const auto* p = shift.get<ShiftMap::PerCopy>()) {
        const auto* c = chain->get<ChainDescriptor::Concat>();
        if (!c)
            throw Error(ErrorCode::DomainMismatch,
                        "per-copy shift acts on a concatenation, not on " + render_chain(chain));
        validate_shift(c->component, *p->inner);
        return;
    }
    if (const auto* f = shift.get<ShiftMap::FixZeroPerCopy>()) {
        const auto* c = chain->get<ChainDescriptor::Concat>();
        if (!c || !c->component->get<ChainDescriptor::NonNegRationals>())
            throw Error(ErrorCode::DomainMismatch,
                        "fix-zero shift acts on a concatenation of Qnn copies, not on " +
                            render_chain(chain));
        if (!f->inner->get<ShiftMap::Scale>() && !f->inner->get<ShiftMap::Identity>())
            throw Error(ErrorCode::DomainMismatch,
                        "fix-zero inner map must be a scaling automorphism of the positives");
        return;
    }
    throw Error(ErrorCode::UnsupportedShape, "unknown shift shape");
}

bool is_identity_shift(const ChainPtr& chain, const ShiftMap& shift) {
    if (shift.get<ShiftMap::Identity>())
        return true;
    if (const auto* t = shift.get<ShiftMap::Translate>())
        return t->offset.is_zero();
    if (const auto* s = shift.get<ShiftMap::Scale>())
        return s->factor.is_one();
    if (shift.get<ShiftMap::ClampedDecrement>()) {
        const auto* f = chain->get<ChainDescriptor::Finite>();
        return f && f->size <= 1;
    }
    if (const auto* p = shift.get<ShiftMap::PerCopy>()) {
        const auto* c = chain->get<ChainDescriptor::Concat>();
        return c && is_identity_shift(c->component, *p->inner);
    }
    if (const auto* f = shift.get<ShiftMap::FixZeroPerCopy>()) {
        const auto* c = chain->get<ChainDescriptor::Concat>();
        return c && is_identity_shift(c->component, *f->inner);
    }
    return false;
}

std::optional<ChainValue> moved_point(const ChainPtr& chain, const ShiftMap& shift) {
    if (is_identity_shift(chain, shift))
        return std::nullopt;
    if (shift.get<ShiftMap::Translate>())
        return values::rational_at(0);
    if (shift.get<ShiftMap::Scale>())
        return values::rational_at(1);
    if (shift.get<ShiftMap::ClampedDecrement>())
        return values::finite_at(1);
    if (const auto* p = shift.get<ShiftMap::PerCopy>()) {
        const auto* c = chain->get<ChainDescriptor::Concat>();
        auto inner = moved_point(c->component, *p->inner);
        if (!inner)
            return std::nullopt;
        return values::concat_at(0, *inner);
    }
    if (shift.get<ShiftMap::FixZeroPerCopy>())
        return values::concat_at(0, values::rational_at(1));
    return std::nullopt;
}

Orientation shift_orientation(const ChainPtr& chain, const ShiftMap& shift) {
    if (is_identity_shift(chain, shift))
        return Orientation::Neutral;
    if (const auto* t = shift.get<ShiftMap::Translate>())
        return t->offset.is_positive() ? Orientation::RightShift : Orientation::LeftShift;
    if (const auto* s = shift.get<ShiftMap::Scale>()) {
        // On Qnn the map fixes 0 and moves positives monotonically; on full Q
        // it moves negatives and positives in opposite directions.
        if (chain->get<ChainDescriptor::NonNegRationals>())
            return s->factor > Rational(1) ? Orientation::RightShift : Orientation::LeftShift;
        return Orientation::Neutral;
    }
    if (shift.get<ShiftMap::ClampedDecrement>())
        return Orientation::LeftShift;
    if (const auto* p = shift.get<ShiftMap::PerCopy>()) {
        const auto* c = chain->get<ChainDescriptor::Concat>();
        return shift_orientation(c->component, *p->inner);
    }
    if (const auto* f = shift.get<ShiftMap::FixZeroPerCopy>()) {
        const auto* s = f->inner->get<ShiftMap::Scale>();
        if (!s)
            return Orientation::Neutral;
        return s->factor > Rational(1) ? Orientation::RightShift : Orientation::LeftShift;
    }
    return Orientation::Neutral;
}

ChainValue apply_shift(const ChainPtr& chain, const ShiftMap& shift, const ChainValue& a, long n) {
    validate_shift(chain, shift);
    require_in_chain(chain, a);
    if (n < 0)
        throw Error(ErrorCode::DomainMismatch, "shift iteration count must be non-negative");
    if (n == 0 || shift.get<ShiftMap::Identity>())
        return a;
    if (const auto* t = shift.get<ShiftMap::Translate>()) {
        const auto& x = a.get<ChainValue::RationalAt>()->value;
        return values::rational_at(x + Rational(n) * t->offset);
    }
    if (const auto* s = shift.get<ShiftMap::Scale>()) {
        const auto& x = a.get<ChainValue::RationalAt>()->value;
        return values::rational_at(x * s->factor.pow(static_cast<unsigned long>(n)));
    }
    if (shift.get<ShiftMap::ClampedDecrement>()) {
        long i = a.get<ChainValue::FiniteAt>()->index;
        return values::finite_at(static_cast<int>(std::max(i - n, 0L)));
    }
    if (const auto* p = shift.get<ShiftMap::PerCopy>()) {
        const auto* c = chain->get<ChainDescriptor::Concat>();
        const auto* at = a.get<ChainValue::ConcatAt>();
        return values::concat_at(*at->copy, apply_shift(c->component, *p->inner, *at->inner, n));
    }
    if (const auto* f = shift.get<ShiftMap::FixZeroPerCopy>()) {
        const auto* c = chain->get<ChainDescriptor::Concat>();
        const auto* at = a.get<ChainValue::ConcatAt>();
        if (at->inner->get<ChainValue::RationalAt>()->value.is_zero())
            return a;
        return values::concat_at(*at->copy, apply_shift(c->component, *f->inner, *at->inner, n));
    }
    throw Error(ErrorCode::UnsupportedShape, "unknown shift shape");
}

namespace {

// Minimal n with factor^n >= target (right) or factor^n <= target (left),
// for positive target. Exact and loop-bounded by the magnitude of target.
long minimal_scale_witness(const Rational& factor, const Rational& xa, const Rational& xb) {
    Rational r1 = xb / xa;
    Rational r2 = xa / xb;
    long n = 0;
    Rational p(1);
    if (factor > Rational(1)) {
        Rational target = std::max(r1, r2);
        while (p < target) {
            p *= factor;
            ++n;
        }
    } else {
        Rational target = std::min(r1, r2);
        while (p > target) {
            p *= factor;
            ++n;
        }
    }
    return n;
}

EquivalenceVerdict positive_scale_equivalent(const Rational& factor, const Rational& xa,
                                             const Rational& xb) {
    bool za = xa.is_zero();
    bool zb = xb.is_zero();
    if (za || zb)
        return EquivalenceVerdict::not_equivalent(
            "fixed point separates: 0 is fixed and no iterate crosses it");
    return EquivalenceVerdict::equivalent(minimal_scale_witness(factor, xa, xb));
}

} // namespace

EquivalenceVerdict shift_equivalent(const ChainPtr& chain, const ShiftMap& shift,
                                    const ChainValue& a, const ChainValue& b, long cap) {
    validate_shift(chain, shift);
    if (cap < 1)
        throw Error(ErrorCode::DomainMismatch, "equivalence cap must be at least 1");
    if (compare_elements(chain, a, b) == Ordering::Equal)
        return EquivalenceVerdict::equivalent(0);
    if (is_identity_shift(chain, shift))
        return EquivalenceVerdict::not_equivalent(
            "identity map: distinct elements are never equivalent");
    if (shift_orientation(chain, shift) == Orientation::Neutral)
        throw Error(ErrorCode::UnknownOrientation,
                    "shift " + render_shift(std::make_shared<const ShiftMap>(shift)) +
                        " has no orientation on " + render_chain(chain));

    if (const auto* t = shift.get<ShiftMap::Translate>()) {
        const auto& xa = a.get<ChainValue::RationalAt>()->value;
        const auto& xb = b.get<ChainValue::RationalAt>()->value;
        Rational distance = (xa - xb).abs();
        return EquivalenceVerdict::equivalent((distance / t->offset.abs()).ceil_long());
    }
    if (const auto* s = shift.get<ShiftMap::Scale>())
        return positive_scale_equivalent(s->factor, a.get<ChainValue::RationalAt>()->value,
                                         b.get<ChainValue::RationalAt>()->value);
    if (shift.get<ShiftMap::ClampedDecrement>()) {
        long ia = a.get<ChainValue::FiniteAt>()->index;
        long ib = b.get<ChainValue::FiniteAt>()->index;
        return EquivalenceVerdict::equivalent(std::labs(ia - ib));
    }
    if (const auto* p = shift.get<ShiftMap::PerCopy>()) {
        const auto* c = chain->get<ChainDescriptor::Concat>();
        const auto* va = a.get<ChainValue::ConcatAt>();
        const auto* vb = b.get<ChainValue::ConcatAt>();
        if (compare_elements(c->index, *va->copy, *vb->copy) != Ordering::Equal)
            return EquivalenceVerdict::not_equivalent(
                "copy index invariant: per-copy maps never change the copy index");
        return shift_equivalent(c->component, *p->inner, *va->inner, *vb->inner, cap);
    }
    if (const auto* f = shift.get<ShiftMap::FixZeroPerCopy>()) {
        const auto* c = chain->get<ChainDescriptor::Concat>();
        const auto* va = a.get<ChainValue::ConcatAt>();
        const auto* vb = b.get<ChainValue::ConcatAt>();
        if (compare_elements(c->index, *va->copy, *vb->copy) != Ordering::Equal)
            return EquivalenceVerdict::not_equivalent(
                "copy index invariant: per-copy maps never change the copy index");
        const auto* s = f->inner->get<ShiftMap::Scale>();
        return positive_scale_equivalent(s->factor, va->inner->get<ChainValue::RationalAt>()->value,
                                         vb->inner->get<ChainValue::RationalAt>()->value);
    }
    return EquivalenceVerdict::undecided(cap);
}

bool witness_confirms(const ChainPtr& chain, const ShiftMap& shift, const ChainValue& a,
                      const ChainValue& b, long n) {
    Orientation o = shift_orientation(chain, shift);
    ChainValue fa = apply_shift(chain, shift, a, n);
    ChainValue fb = apply_shift(chain, shift, b, n);
    if (o == Orientation::Neutral)
        return compare_elements(chain, a, b) == Ordering::Equal;
    if (o == Orientation::RightShift)
        return compare_elements(chain, fa, b) != Ordering::Less &&
               compare_elements(chain, fb, a) != Ordering::Less;
    return compare_elements(chain, fa, b) != Ordering::Greater &&
           compare_elements(chain, fb, a) != Ordering::Greater;
}

Ordering compare_classes(const ChainPtr& chain, const ShiftMap& shift, const ChainValue& a,
                         const ChainValue& b, long cap) {
    EquivalenceVerdict v = shift_equivalent(chain, shift, a, b, cap);
    if (v.is_undecided())
        throw Error(ErrorCode::UndecidedEquivalence,
                    "class comparison needs a decided equivalence verdict (cap " +
                        std::to_string(cap) + ")");
    if (v.is_equivalent())
        return Ordering::Equal;
    // Classes are convex, so inequivalent representatives order their classes.
    return compare_elements(chain, a, b);
}

std::optional<std::vector<ChainValue>> quotient_class_reps(const ChainPtr& chain,
                                                           const ShiftPtr& shift) {
    validate_shift(chain, *shift);
    if (is_identity_shift(chain, *shift)) {
        try {
            return enumerate_chain(chain);
        } catch (const Error&) {
            return std::nullopt;
        }
    }
    if (chain->get<ChainDescriptor::Finite>()) {
        auto elements = enumerate_chain(chain);
        std::vector<ChainValue> reps;
        for (const auto& e : elements) {
            if (reps.empty() ||
                !shift_equivalent(chain, *shift, reps.back(), e).is_equivalent())
                reps.push_back(e);
        }
        return reps;
    }
    if (chain->get<ChainDescriptor::Rationals>() && shift->get<ShiftMap::Translate>())
        return std::vector<ChainValue>{values::rational_at(0)};
    if (chain->get<ChainDescriptor::NonNegRationals>() && shift->get<ShiftMap::Scale>())
        return std::vector<ChainValue>{values::rational_at(0), values::rational_at(1)};
    if (const auto* c = chain->get<ChainDescriptor::Concat>()) {
        auto copies = chain_size(c->index);
        if (!copies)
            return std::nullopt;
        std::optional<std::vector<ChainValue>> inner_reps;
        if (const auto* p = shift->get<ShiftMap::PerCopy>())
            inner_reps = quotient_class_reps(c->component, p->inner);
        else if (shift->get<ShiftMap::FixZeroPerCopy>())
            inner_reps = std::vector<ChainValue>{values::rational_at(0), values::rational_at(1)};
        if (!inner_reps)
            return std::nullopt;
        std::vector<ChainValue> reps;
        reps.reserve(static_cast<size_t>(*copies) * inner_reps->size());
        for (long i = 0; i < *copies; ++i)
            for (const auto& r : *inner_reps)
                reps.push_back(values::concat_at(static_cast<int>(i), r));
        return reps;
    }
    return std::nullopt;
}

std::optional<ChainPtr> canonical_quotient(const ChainPtr& chain, const ShiftPtr& shift) {
    validate_shift(chain, *shift);
    if (is_identity_shift(chain, *shift))
        return chain;
    if (auto reps = quotient_class_reps(chain, shift))
        return chains::finite(static_cast<int>(reps->size()));
    return std::nullopt;
}

QuotientResult quotient_chain(const ChainPtr& chain, const ShiftPtr& shift) {
    validate_shift(chain, *shift);
    if (!is_identity_shift(chain, *shift) &&
        shift_orientation(chain, *shift) == Orientation::Neutral)
        throw Error(ErrorCode::UnknownOrientation,
                    "quotient needs an oriented shift; " + render_shift(shift) +
                        " has none on " + render_chain(chain));
    return {chains::quotient_of(chain, shift), canonical_quotient(chain, shift)};
}

FixedPointSet fixed_points(const ChainPtr& chain, const ShiftPtr& shift) {
    validate_shift(chain, *shift);
    if (is_identity_shift(chain, *shift)) {
        std::optional<std::vector<ChainValue>> pts;
        try {
            pts = enumerate_chain(chain);
        } catch (const Error&) {
            pts = std::nullopt;
        }
        return {chain, std::move(pts)};
    }
    if (shift->get<ShiftMap::Translate>())
        return {chains::finite(0), std::vector<ChainValue>{}};
    if (shift->get<ShiftMap::Scale>())
        return {chains::finite(1), std::vector<ChainValue>{values::rational_at(0)}};
    if (shift->get<ShiftMap::ClampedDecrement>())
        return {chains::finite(1), std::vector<ChainValue>{values::finite_at(0)}};
    if (const auto* p = shift->get<ShiftMap::PerCopy>()) {
        const auto* c = chain->get<ChainDescriptor::Concat>();
        auto copies = chain_size(c->index);
        FixedPointSet inner = fixed_points(c->component, p->inner);
        if (!copies)
            throw Error(ErrorCode::UnsupportedShape, "per-copy fixed points need a finite index");
        auto inner_size = chain_size(inner.order_type);
        ChainPtr order_type = inner_size ? chains::finite(static_cast<int>(*copies * *inner_size))
                                         : chains::concat(c->index, inner.order_type);
        std::optional<std::vector<ChainValue>> pts;
        if (inner.points) {
            pts.emplace();
            for (long i = 0; i < *copies; ++i)
                for (const auto& v : *inner.points)
                    pts->push_back(values::concat_at(static_cast<int>(i), v));
        }
        return {order_type, std::move(pts)};
    }
    if (shift->get<ShiftMap::FixZeroPerCopy>()) {
        const auto* c = chain->get<ChainDescriptor::Concat>();
        auto copies = chain_size(c->index);
        if (!copies)
            throw Error(ErrorCode::UnsupportedShape, "fix-zero fixed points need a finite index");
        std::vector<ChainValue> pts;
        for (long i = 0; i < *copies; ++i)
            pts.push_back(values::concat_at(static_cast<int>(i), values::rational_at(0)));
        return {chains::finite(static_cast<int>(*copies)), std::move(pts)};
    }
    throw Error(ErrorCode::UnsupportedShape, "no fixed point procedure for this shift");
}

std::optional<ShiftPtr> invert_shift(const ChainPtr& chain, const ShiftMap& shift) {
    if (shift.get<ShiftMap::Identity>())
        return shifts::identity();
    if (const auto* t = shift.get<ShiftMap::Translate>())
        return shifts::translate(-t->offset);
    if (const auto* s = shift.get<ShiftMap::Scale>())
        return shifts::scale(s->factor.inverse());
    if (shift.get<ShiftMap::ClampedDecrement>()) {
        const auto* f = chain->get<ChainDescriptor::Finite>();
        if (f && f->size <= 1)
            return shifts::identity();
        return std::nullopt; // not injective: 0 and 1 both land on 0
    }
    if (const auto* p = shift.get<ShiftMap::PerCopy>()) {
        const auto* c = chain->get<ChainDescriptor::Concat>();
        if (!c)
            return std::nullopt;
        auto inner = invert_shift(c->component, *p->inner);
        if (!inner)
            return std::nullopt;
        return shifts::per_copy(*inner);
    }
    if (const auto* fz = shift.get<ShiftMap::FixZeroPerCopy>()) {
        const auto* c = chain->get<ChainDescriptor::Concat>();
        if (!c)
            return std::nullopt;
        auto inner = invert_shift(c->component, *fz->inner);
        if (!inner)
            return std::nullopt;
        return shifts::fix_zero_per_copy(*inner);
    }
    return std::nullopt;
}

Verdict strict_left_shift(const ChainPtr& chain, const ShiftMap& shift) {
    if (is_identity_shift(chain, shift))
        return Verdict::refuted("identity fixes every element");
    if (const auto* t = shift.get<ShiftMap::Translate>()) {
        if (t->offset.is_negative())
            return Verdict::proven("translation by " + t->offset.str() +
                                   " moves every rational strictly down");
        return Verdict::refuted("translation by " + t->offset.str() + " moves 0 up");
    }
    if (shift.get<ShiftMap::Scale>()) {
        if (chain->get<ChainDescriptor::NonNegRationals>())
            return Verdict::refuted("0 is a fixed point");
        return Verdict::refuted("scaling moves points on both sides of 0 in opposite directions");
    }
    if (shift.get<ShiftMap::ClampedDecrement>())
        return Verdict::refuted("0 is a fixed point");
    if (const auto* p = shift.get<ShiftMap::PerCopy>()) {
        const auto* c = chain->get<ChainDescriptor::Concat>();
        return strict_left_shift(c->component, *p->inner);
    }
    if (shift.get<ShiftMap::FixZeroPerCopy>())
        return Verdict::refuted("every copy zero is a fixed point");
    return Verdict::undecided("no strictness certificate for this shape");
}

ChainValue sample_point(const ChainPtr& chain) {
    if (const auto* f = chain->get<ChainDescriptor::Finite>()) {
        if (f->size < 1)
            throw Error(ErrorCode::UnsupportedShape, "empty chain has no sample point");
        return values::finite_at(0);
    }
    if (chain->get<ChainDescriptor::Singleton>())
        return values::finite_at(0);
    if (chain->get<ChainDescriptor::Rationals>() || chain->get<ChainDescriptor::NonNegRationals>())
        return values::rational_at(0);
    if (const auto* c = chain->get<ChainDescriptor::Concat>())
        return values::concat_at(sample_point(c->index), sample_point(c->component));
    if (const auto* r = chain->get<ChainDescriptor::Reverse>())
        return values::reverse_of(sample_point(r->inner));
    if (const auto* q = chain->get<ChainDescriptor::Quotient>())
        return values::class_of(sample_point(q->inner));
    throw Error(ErrorCode::UnsupportedShape,
                "chain " + render_chain(chain) + " has no sample point");
}

std::string render_shift(const ShiftPtr& shift) {
    if (!shift)
        return "<null>";
    if (shift->get<ShiftMap::Identity>())
        return "identity";
    if (const auto* t = shift->get<ShiftMap::Translate>())
        return "translate(" + t->offset.str() + ")";
    if (const auto* s = shift->get<ShiftMap::Scale>())
        return "scale(" + s->factor.str() + ")";
    if (const auto* p = shift->get<ShiftMap::PerCopy>())
        return "percopy(" + render_shift(p->inner) + ")";
    if (const auto* f = shift->get<ShiftMap::FixZeroPerCopy>())
        return "fixzero(" + render_shift(f->inner) + ")";
    if (shift->get<ShiftMap::ClampedDecrement>())
        return "clampdec";
    return "<unknown>";
}

} // namespace hahnrank
