#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hahnrank/errors.hpp"
#include "hahnrank/ordering.hpp"
#include "hahnrank/rational.hpp"

namespace hahnrank {

class ShiftMap;
using ShiftPtr = std::shared_ptr<const ShiftMap>;

class ChainDescriptor;
using ChainPtr = std::shared_ptr<const ChainDescriptor>;

// Element of a chain, represented as a term whose shape must match the
// declaring descriptor. Values are immutable and cheap to copy.
class ChainValue {
public:
    struct FiniteAt { int index; };
    struct RationalAt { Rational value; };
    struct ConcatAt {
        std::shared_ptr<const ChainValue> copy;  // element of the index chain
        std::shared_ptr<const ChainValue> inner; // element of the component chain
    };
    struct ReverseOf { std::shared_ptr<const ChainValue> inner; };
    struct ClassOf { std::shared_ptr<const ChainValue> representative; };

    using Node = std::variant<FiniteAt, RationalAt, ConcatAt, ReverseOf, ClassOf>;

    explicit ChainValue(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}

    const Node& node() const { return *node_; }

    template <class T>
    const T* get() const { return std::get_if<T>(node_.get()); }

private:
    std::shared_ptr<const Node> node_;
};

// Totally ordered chain given as an inspectable term. Quotient chains carry
// the shift that induced them; FinalSegments is a symbolic order type used in
// rank reports and has no element representation.
class ChainDescriptor {
public:
    struct Finite { int size; }; // size >= 0; size 0 is the empty chain
    struct Rationals {};
    struct NonNegRationals {};
    struct Singleton {};
    struct Concat { ChainPtr index; ChainPtr component; }; // index restricted to Finite
    struct Reverse { ChainPtr inner; };
    struct Quotient { ChainPtr inner; ShiftPtr shift; };
    struct FinalSegments { ChainPtr inner; };

    using Node = std::variant<Finite, Rationals, NonNegRationals, Singleton, Concat, Reverse,
                              Quotient, FinalSegments>;

    explicit ChainDescriptor(Node n) : node_(std::move(n)) {}

    const Node& node() const { return node_; }

    template <class T>
    const T* get() const { return std::get_if<T>(&node_); }

private:
    Node node_;
};

namespace chains {
ChainPtr finite(int n);
ChainPtr rationals();
ChainPtr non_neg_rationals();
ChainPtr singleton();
ChainPtr concat(ChainPtr index, ChainPtr component);
ChainPtr reverse(ChainPtr inner);
ChainPtr quotient_of(ChainPtr inner, ShiftPtr shift);
ChainPtr final_segments_of(ChainPtr inner);
} // namespace chains

namespace values {
ChainValue finite_at(int index);
ChainValue rational_at(Rational value);
inline ChainValue rational_at(long value) { return rational_at(Rational(value)); }
ChainValue concat_at(ChainValue copy, ChainValue inner);
ChainValue concat_at(int copy, ChainValue inner);
ChainValue reverse_of(ChainValue inner);
ChainValue class_of(ChainValue representative);
} // namespace values

bool chain_equal(const ChainPtr& a, const ChainPtr& b);

// True iff the value's term shape fits the chain (bounds included).
bool value_in_chain(const ChainPtr& chain, const ChainValue& v);

// Throws CrossChainComparison when the value does not belong to the chain.
void require_in_chain(const ChainPtr& chain, const ChainValue& v);

// Total order of the chain. Lexicographic on Concat, flipped on Reverse,
// class order on Quotient.
Ordering compare_elements(const ChainPtr& chain, const ChainValue& a, const ChainValue& b);

bool value_equal(const ChainPtr& chain, const ChainValue& a, const ChainValue& b);

// Number of elements when the chain is finite and known.
std::optional<long> chain_size(const ChainPtr& chain);

// All elements in increasing order; NotFinite when the chain is not a finite
// built-in shape.
std::vector<ChainValue> enumerate_chain(const ChainPtr& chain);

std::string render_chain(const ChainPtr& chain);
std::string render_value(const ChainValue& v);

// Non-empty upward-closed subset of a chain, represented by its cut.
class FinalSegmentCut {
public:
    enum class Kind { AtOrAbove, StrictlyAbove, All };

    static FinalSegmentCut at_or_above(ChainValue gamma) {
        return FinalSegmentCut(Kind::AtOrAbove, std::move(gamma));
    }
    static FinalSegmentCut strictly_above(ChainValue gamma) {
        return FinalSegmentCut(Kind::StrictlyAbove, std::move(gamma));
    }
    static FinalSegmentCut all() { return FinalSegmentCut(Kind::All, std::nullopt); }

    Kind kind() const { return kind_; }
    const ChainValue& gamma() const;
    bool is_principal() const { return kind_ == Kind::AtOrAbove; }

private:
    FinalSegmentCut(Kind k, std::optional<ChainValue> g) : kind_(k), gamma_(std::move(g)) {}

    Kind kind_;
    std::optional<ChainValue> gamma_;
};

bool segment_contains(const ChainPtr& chain, const FinalSegmentCut& cut, const ChainValue& v);

// All non-empty final segments of a Finite chain, increasing by inclusion.
std::vector<FinalSegmentCut> enumerate_final_segments(const ChainPtr& chain);

FinalSegmentCut principal_segment_of(const ChainValue& gamma);

std::string render_segment(const FinalSegmentCut& cut);

} // namespace hahnrank
