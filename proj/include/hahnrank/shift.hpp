#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hahnrank/chain.hpp"

namespace hahnrank {

// Order-preserving self-map of a chain. The shape alone fixes the semantics;
// the domain chain is supplied at each call site and validated there.
class ShiftMap {
public:
    struct Identity {};
    struct Translate { Rational offset; };       // on Rationals
    struct Scale { Rational factor; };           // factor > 0, on Rationals or NonNegRationals
    struct PerCopy { ShiftPtr inner; };          // on Concat(Finite, C)
    struct FixZeroPerCopy { ShiftPtr inner; };   // on Concat(Finite, NonNegRationals)
    struct ClampedDecrement {};                  // i -> max(i-1, 0) on Finite

    using Node =
        std::variant<Identity, Translate, Scale, PerCopy, FixZeroPerCopy, ClampedDecrement>;

    explicit ShiftMap(Node n) : node_(std::move(n)) {}

    const Node& node() const { return node_; }

    template <class T>
    const T* get() const { return std::get_if<T>(&node_); }

private:
    Node node_;
};

namespace shifts {
ShiftPtr identity();
ShiftPtr translate(Rational offset);
ShiftPtr scale(Rational factor); // throws DomainMismatch unless factor > 0
ShiftPtr per_copy(ShiftPtr inner);
ShiftPtr fix_zero_per_copy(ShiftPtr inner);
ShiftPtr clamped_decrement();
} // namespace shifts

enum class Orientation { RightShift, LeftShift, Neutral };

const char* orientation_name(Orientation o);

inline constexpr long kDefaultEquivalenceCap = 64;

// Outcome of a shift-equivalence query. Equivalent verdicts carry the minimal
// witness n; NotEquivalent verdicts carry the certificate that rules the pair
// out; Undecided records the exhausted iteration cap.
struct EquivalenceVerdict {
    enum class Kind { Equivalent, NotEquivalent, Undecided };

    Kind kind;
    long witness = 0;
    std::string certificate;
    long cap = 0;

    static EquivalenceVerdict equivalent(long n) { return {Kind::Equivalent, n, "", 0}; }
    static EquivalenceVerdict not_equivalent(std::string why) {
        return {Kind::NotEquivalent, 0, std::move(why), 0};
    }
    static EquivalenceVerdict undecided(long cap) { return {Kind::Undecided, 0, "", cap}; }

    bool is_equivalent() const { return kind == Kind::Equivalent; }
    bool is_not_equivalent() const { return kind == Kind::NotEquivalent; }
    bool is_undecided() const { return kind == Kind::Undecided; }
    bool decided() const { return kind != Kind::Undecided; }

    std::string str() const;
};

// Three-valued result of a universal claim about a map.
struct Verdict {
    enum class State { Proven, Refuted, Undecided };

    State state = State::Undecided;
    std::string witness;

    static Verdict proven(std::string why = "") { return {State::Proven, std::move(why)}; }
    static Verdict refuted(std::string why = "") { return {State::Refuted, std::move(why)}; }
    static Verdict undecided(std::string why = "") { return {State::Undecided, std::move(why)}; }

    bool proven_p() const { return state == State::Proven; }
    bool refuted_p() const { return state == State::Refuted; }

    std::string str() const;
};

bool shift_equal(const ShiftPtr& a, const ShiftPtr& b);

// Throws DomainMismatch when the shift shape does not act on the chain.
void validate_shift(const ChainPtr& chain, const ShiftMap& shift);

// True when the shift acts as the identity on this chain (Translate(0),
// Scale(1), ClampedDecrement on Finite(1), PerCopy of an identity, ...).
bool is_identity_shift(const ChainPtr& chain, const ShiftMap& shift);

// A point the shift moves, when it is not the identity on the chain.
std::optional<ChainValue> moved_point(const ChainPtr& chain, const ShiftMap& shift);

Orientation shift_orientation(const ChainPtr& chain, const ShiftMap& shift);

// phi^n(a); n = 0 returns a unchanged.
ChainValue apply_shift(const ChainPtr& chain, const ShiftMap& shift, const ChainValue& a,
                       long n = 1);

// Decides a ~_phi b. Built-in shapes are decided exactly; the cap only bounds
// searches with no exact procedure.
EquivalenceVerdict shift_equivalent(const ChainPtr& chain, const ShiftMap& shift,
                                    const ChainValue& a, const ChainValue& b,
                                    long cap = kDefaultEquivalenceCap);

// Re-checks an Equivalent(n) verdict from the defining inequalities.
bool witness_confirms(const ChainPtr& chain, const ShiftMap& shift, const ChainValue& a,
                      const ChainValue& b, long n);

// Order of equivalence classes via representatives. Throws
// UndecidedEquivalence when the verdict is undecided.
Ordering compare_classes(const ChainPtr& chain, const ShiftMap& shift, const ChainValue& a,
                         const ChainValue& b, long cap = kDefaultEquivalenceCap);

struct QuotientResult {
    ChainPtr quotient;                 // Quotient(chain, shift) term
    std::optional<ChainPtr> canonical; // isomorphic built-in descriptor when known
};

QuotientResult quotient_chain(const ChainPtr& chain, const ShiftPtr& shift);

std::optional<ChainPtr> canonical_quotient(const ChainPtr& chain, const ShiftPtr& shift);

// Representatives of the quotient classes in increasing order, when the
// quotient is finite and enumerable.
std::optional<std::vector<ChainValue>> quotient_class_reps(const ChainPtr& chain,
                                                           const ShiftPtr& shift);

struct FixedPointSet {
    ChainPtr order_type;                           // Finite(0) when empty
    std::optional<std::vector<ChainValue>> points; // nullopt: every element is fixed
};

// Exact fixed-point set for built-in shapes; UnsupportedShape otherwise.
FixedPointSet fixed_points(const ChainPtr& chain, const ShiftPtr& shift);

// Inverse shift when the map is bijective on its chain.
std::optional<ShiftPtr> invert_shift(const ChainPtr& chain, const ShiftMap& shift);

// sigma(x) < x for every x of the chain.
Verdict strict_left_shift(const ChainPtr& chain, const ShiftMap& shift);

// Some element of the chain, used for deterministic witness reporting.
ChainValue sample_point(const ChainPtr& chain);

std::string render_shift(const ShiftPtr& shift);

} // namespace hahnrank
