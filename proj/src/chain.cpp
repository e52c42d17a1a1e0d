#include "hahnrank/chain.hpp"

#include <algorithm>

#include "hahnrank/shift.hpp"

namespace hahnrank {

namespace chains {

ChainPtr finite(int n) {
    if (n < 0)
        throw Error(ErrorCode::DomainMismatch, "finite chain size must be non-negative");
    return std::make_shared<const ChainDescriptor>(ChainDescriptor::Finite{n});
}

ChainPtr rationals() {
    return std::make_shared<const ChainDescriptor>(ChainDescriptor::Rationals{});
}

ChainPtr non_neg_rationals() {
    return std::make_shared<const ChainDescriptor>(ChainDescriptor::NonNegRationals{});
}

ChainPtr singleton() {
    return std::make_shared<const ChainDescriptor>(ChainDescriptor::Singleton{});
}

ChainPtr concat(ChainPtr index, ChainPtr component) {
    if (!index || !index->get<ChainDescriptor::Finite>())
        throw Error(ErrorCode::DomainMismatch, "concat index chain must be finite");
    if (!component)
        throw Error(ErrorCode::DomainMismatch, "concat component chain missing");
    return std::make_shared<const ChainDescriptor>(
        ChainDescriptor::Concat{std::move(index), std::move(component)});
}

ChainPtr reverse(ChainPtr inner) {
    return std::make_shared<const ChainDescriptor>(ChainDescriptor::Reverse{std::move(inner)});
}

ChainPtr quotient_of(ChainPtr inner, ShiftPtr shift) {
    return std::make_shared<const ChainDescriptor>(
        ChainDescriptor::Quotient{std::move(inner), std::move(shift)});
}

ChainPtr final_segments_of(ChainPtr inner) {
    return std::make_shared<const ChainDescriptor>(
        ChainDescriptor::FinalSegments{std::move(inner)});
}

} // namespace chains

namespace values {

ChainValue finite_at(int index) { return ChainValue(ChainValue::FiniteAt{index}); }

ChainValue rational_at(Rational value) {
    return ChainValue(ChainValue::RationalAt{std::move(value)});
}

ChainValue concat_at(ChainValue copy, ChainValue inner) {
    return ChainValue(ChainValue::ConcatAt{std::make_shared<const ChainValue>(std::move(copy)),
                                           std::make_shared<const ChainValue>(std::move(inner))});
}

ChainValue concat_at(int copy, ChainValue inner) {
    return concat_at(finite_at(copy), std::move(inner));
}

ChainValue reverse_of(ChainValue inner) {
    return ChainValue(ChainValue::ReverseOf{std::make_shared<const ChainValue>(std::move(inner))});
}

ChainValue class_of(ChainValue representative) {
    return ChainValue(
        ChainValue::ClassOf{std::make_shared<const ChainValue>(std::move(representative))});
}

} // namespace values

bool chain_equal(const ChainPtr& a, const ChainPtr& b) {
    if (a.get() == b.get())
        return true;
    if (!a || !b)
        return false;
    const auto& na = a->node();
    const auto& nb = b->node();
    if (na.index() != nb.index())
        return false;
    if (const auto* fa = a->get<ChainDescriptor::Finite>())
        return fa->size == b->get<ChainDescriptor::Finite>()->size;
    if (const auto* ca = a->get<ChainDescriptor::Concat>()) {
        const auto* cb = b->get<ChainDescriptor::Concat>();
        return chain_equal(ca->index, cb->index) && chain_equal(ca->component, cb->component);
    }
    if (const auto* ra = a->get<ChainDescriptor::Reverse>())
        return chain_equal(ra->inner, b->get<ChainDescriptor::Reverse>()->inner);
    if (const auto* qa = a->get<ChainDescriptor::Quotient>()) {
        const auto* qb = b->get<ChainDescriptor::Quotient>();
        return chain_equal(qa->inner, qb->inner) && shift_equal(qa->shift, qb->shift);
    }
    if (const auto* sa = a->get<ChainDescriptor::FinalSegments>())
        return chain_equal(sa->inner, b->get<ChainDescriptor::FinalSegments>()->inner);
    return true; // Rationals, NonNegRationals, Singleton carry no data
}

bool value_in_chain(const ChainPtr& chain, const ChainValue& v) {
    if (!chain)
        return false;
    if (const auto* f = chain->get<ChainDescriptor::Finite>()) {
        const auto* at = v.get<ChainValue::FiniteAt>();
        return at && at->index >= 0 && at->index < f->size;
    }
    if (chain->get<ChainDescriptor::Rationals>())
        return v.get<ChainValue::RationalAt>() != nullptr;
    if (chain->get<ChainDescriptor::NonNegRationals>()) {
        const auto* at = v.get<ChainValue::RationalAt>();
        return at && !at->value.is_negative();
    }
    if (chain->get<ChainDescriptor::Singleton>()) {
        const auto* at = v.get<ChainValue::FiniteAt>();
        return at && at->index == 0;
    }
    if (const auto* c = chain->get<ChainDescriptor::Concat>()) {
        const auto* at = v.get<ChainValue::ConcatAt>();
        return at && value_in_chain(c->index, *at->copy) && value_in_chain(c->component, *at->inner);
    }
    if (const auto* r = chain->get<ChainDescriptor::Reverse>()) {
        const auto* at = v.get<ChainValue::ReverseOf>();
        return at && value_in_chain(r->inner, *at->inner);
    }
    if (const auto* q = chain->get<ChainDescriptor::Quotient>()) {
        const auto* at = v.get<ChainValue::ClassOf>();
        return at && value_in_chain(q->inner, *at->representative);
    }
    return false; // FinalSegments has no elements
}

void require_in_chain(const ChainPtr& chain, const ChainValue& v) {
    if (!value_in_chain(chain, v))
        throw Error(ErrorCode::CrossChainComparison,
                    "value " + render_value(v) + " does not belong to chain " +
                        render_chain(chain));
}

Ordering compare_elements(const ChainPtr& chain, const ChainValue& a, const ChainValue& b) {
    require_in_chain(chain, a);
    require_in_chain(chain, b);
    if (chain->get<ChainDescriptor::Finite>() || chain->get<ChainDescriptor::Singleton>()) {
        int ia = a.get<ChainValue::FiniteAt>()->index;
        int ib = b.get<ChainValue::FiniteAt>()->index;
        return ordering_from_sign((ia > ib) - (ia < ib));
    }
    if (chain->get<ChainDescriptor::Rationals>() || chain->get<ChainDescriptor::NonNegRationals>())
        return a.get<ChainValue::RationalAt>()->value.compare(b.get<ChainValue::RationalAt>()->value);
    if (const auto* c = chain->get<ChainDescriptor::Concat>()) {
        const auto* va = a.get<ChainValue::ConcatAt>();
        const auto* vb = b.get<ChainValue::ConcatAt>();
        Ordering head = compare_elements(c->index, *va->copy, *vb->copy);
        if (head != Ordering::Equal)
            return head;
        return compare_elements(c->component, *va->inner, *vb->inner);
    }
    if (const auto* r = chain->get<ChainDescriptor::Reverse>())
        return flip(compare_elements(r->inner, *a.get<ChainValue::ReverseOf>()->inner,
                                     *b.get<ChainValue::ReverseOf>()->inner));
    if (const auto* q = chain->get<ChainDescriptor::Quotient>())
        return compare_classes(q->inner, *q->shift, *a.get<ChainValue::ClassOf>()->representative,
                               *b.get<ChainValue::ClassOf>()->representative);
    throw Error(ErrorCode::UnsupportedShape,
                "chain " + render_chain(chain) + " has no element comparison");
}

bool value_equal(const ChainPtr& chain, const ChainValue& a, const ChainValue& b) {
    return compare_elements(chain, a, b) == Ordering::Equal;
}

std::optional<long> chain_size(const ChainPtr& chain) {
    if (!chain)
        return std::nullopt;
    if (const auto* f = chain->get<ChainDescriptor::Finite>())
        return f->size;
    if (chain->get<ChainDescriptor::Singleton>())
        return 1;
    if (const auto* c = chain->get<ChainDescriptor::Concat>()) {
        auto i = chain_size(c->index);
        auto k = chain_size(c->component);
        if (i && k)
            return *i * *k;
        if (i && *i == 0)
            return 0;
        return std::nullopt;
    }
    if (const auto* r = chain->get<ChainDescriptor::Reverse>())
        return chain_size(r->inner);
    if (const auto* q = chain->get<ChainDescriptor::Quotient>()) {
        if (auto canonical = canonical_quotient(q->inner, q->shift))
            return chain_size(*canonical);
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<ChainValue> enumerate_chain(const ChainPtr& chain) {
    if (const auto* f = chain->get<ChainDescriptor::Finite>()) {
        std::vector<ChainValue> out;
        out.reserve(f->size);
        for (int i = 0; i < f->size; ++i)
            out.push_back(values::finite_at(i));
        return out;
    }
    if (chain->get<ChainDescriptor::Singleton>())
        return {values::finite_at(0)};
    if (const auto* c = chain->get<ChainDescriptor::Concat>()) {
        auto idx = enumerate_chain(c->index);
        auto comp = enumerate_chain(c->component);
        std::vector<ChainValue> out;
        out.reserve(idx.size() * comp.size());
        for (const auto& i : idx)
            for (const auto& v : comp)
                out.push_back(values::concat_at(i, v));
        return out;
    }
    if (const auto* r = chain->get<ChainDescriptor::Reverse>()) {
        auto inner = enumerate_chain(r->inner);
        std::vector<ChainValue> out;
        out.reserve(inner.size());
        for (auto it = inner.rbegin(); it != inner.rend(); ++it)
            out.push_back(values::reverse_of(*it));
        return out;
    }
    if (const auto* q = chain->get<ChainDescriptor::Quotient>()) {
        if (auto reps = quotient_class_reps(q->inner, q->shift)) {
            std::vector<ChainValue> out;
            out.reserve(reps->size());
            for (const auto& r : *reps)
                out.push_back(values::class_of(r));
            return out;
        }
    }
    throw Error(ErrorCode::NotFinite, "chain " + render_chain(chain) + " is not finitely enumerable");
}

std::string render_chain(const ChainPtr& chain) {
    if (!chain)
        return "<null>";
    if (const auto* f = chain->get<ChainDescriptor::Finite>())
        return f->size == 0 ? "empty" : "finite(" + std::to_string(f->size) + ")";
    if (chain->get<ChainDescriptor::Rationals>())
        return "Q";
    if (chain->get<ChainDescriptor::NonNegRationals>())
        return "Qnn";
    if (chain->get<ChainDescriptor::Singleton>())
        return "singleton";
    if (const auto* c = chain->get<ChainDescriptor::Concat>())
        return "concat(" + render_chain(c->index) + "," + render_chain(c->component) + ")";
    if (const auto* r = chain->get<ChainDescriptor::Reverse>())
        return "reverse(" + render_chain(r->inner) + ")";
    if (const auto* q = chain->get<ChainDescriptor::Quotient>())
        return "quotient(" + render_chain(q->inner) + ";" + render_shift(q->shift) + ")";
    if (const auto* s = chain->get<ChainDescriptor::FinalSegments>())
        return "finalsegments(" + render_chain(s->inner) + ")";
    return "<unknown>";
}

std::string render_value(const ChainValue& v) {
    if (const auto* f = v.get<ChainValue::FiniteAt>())
        return std::to_string(f->index);
    if (const auto* r = v.get<ChainValue::RationalAt>())
        return r->value.str();
    if (const auto* c = v.get<ChainValue::ConcatAt>())
        return "(" + render_value(*c->copy) + "," + render_value(*c->inner) + ")";
    if (const auto* r = v.get<ChainValue::ReverseOf>())
        return "rev(" + render_value(*r->inner) + ")";
    if (const auto* q = v.get<ChainValue::ClassOf>())
        return "[" + render_value(*q->representative) + "]";
    return "<unknown>";
}

const ChainValue& FinalSegmentCut::gamma() const {
    if (!gamma_)
        throw Error(ErrorCode::UnsupportedShape, "the All segment has no cut point");
    return *gamma_;
}

bool segment_contains(const ChainPtr& chain, const FinalSegmentCut& cut, const ChainValue& v) {
    switch (cut.kind()) {
    case FinalSegmentCut::Kind::All:
        require_in_chain(chain, v);
        return true;
    case FinalSegmentCut::Kind::AtOrAbove:
        return compare_elements(chain, v, cut.gamma()) != Ordering::Less;
    case FinalSegmentCut::Kind::StrictlyAbove:
        return compare_elements(chain, v, cut.gamma()) == Ordering::Greater;
    }
    return false;
}

std::vector<FinalSegmentCut> enumerate_final_segments(const ChainPtr& chain) {
    const auto* f = chain->get<ChainDescriptor::Finite>();
    if (!f)
        throw Error(ErrorCode::NotFinite,
                    "final segment enumeration requires a finite chain, got " +
                        render_chain(chain));
    // On a finite chain every non-empty final segment has a minimum, so the
    // segments are exactly AtOrAbove(i), smallest segment first.
    std::vector<FinalSegmentCut> out;
    out.reserve(f->size);
    for (int i = f->size - 1; i >= 0; --i)
        out.push_back(FinalSegmentCut::at_or_above(values::finite_at(i)));
    return out;
}

FinalSegmentCut principal_segment_of(const ChainValue& gamma) {
    return FinalSegmentCut::at_or_above(gamma);
}

std::string render_segment(const FinalSegmentCut& cut) {
    switch (cut.kind()) {
    case FinalSegmentCut::Kind::All: return "all";
    case FinalSegmentCut::Kind::AtOrAbove: return "at_or_above(" + render_value(cut.gamma()) + ")";
    case FinalSegmentCut::Kind::StrictlyAbove:
        return "strictly_above(" + render_value(cut.gamma()) + ")";
    }
    return "<unknown>";
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::CrossChainComparison: return "CrossChainComparison";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::UnknownOrientation: return "UnknownOrientation";
    case ErrorCode::UndecidedEquivalence: return "UndecidedEquivalence";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::ZeroSeries: return "ZeroSeries";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::NotInPK: return "NotInPK";
    case ErrorCode::HypothesisNotProven: return "HypothesisNotProven";
    case ErrorCode::NotInValuationRing: return "NotInValuationRing";
    case ErrorCode::InconsistentSegment: return "InconsistentSegment";
    case ErrorCode::QuotientTooLarge: return "QuotientTooLarge";
    case ErrorCode::PoolTooLarge: return "PoolTooLarge";
    case ErrorCode::NoCanonicalQuotient: return "NoCanonicalQuotient";
    case ErrorCode::TrivialEta: return "TrivialEta";
    case ErrorCode::ParseFailure: return "ParseFailure";
    }
    return "Error";
}

} // namespace hahnrank
