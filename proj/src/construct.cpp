#include "hahnrank/construct.hpp"

#include <algorithm>

namespace hahnrank {

ConstructionResult build_fixed_point_example(int m, const ShiftPtr& eta) {
    if (m < 1)
        throw Error(ErrorCode::DomainMismatch, "the number of copies must be at least 1");
    if (!eta)
        throw Error(ErrorCode::DomainMismatch, "an automorphism of the positive rationals is required");
    ChainPtr qnn = chains::non_neg_rationals();
    validate_shift(qnn, *eta);
    if (is_identity_shift(qnn, *eta))
        throw Error(ErrorCode::TrivialEta,
                    "the positive-part automorphism must be non-trivial");
    ChainPtr chain = chains::concat(chains::finite(m), qnn);
    ShiftPtr sigma = shifts::fix_zero_per_copy(eta);
    AutomorphismTower tower = AutomorphismTower::lift_chain(chain, sigma);
    return {"fixedpoint(m=" + std::to_string(m) + ",eta=" + render_shift(eta) + ")",
            chain,
            sigma,
            tower,
            classify_automorphism(tower),
            rank_of(chain),
            principal_rank_of(chain),
            sigma_rank_of(chain, sigma),
            principal_sigma_rank_of(chain, sigma),
            sigma_principal_intersection(chain, sigma)};
}

ConstructionResult build_omega_increasing_example(int m) {
    if (m < 1)
        throw Error(ErrorCode::DomainMismatch, "the number of copies must be at least 1");
    ChainPtr chain = chains::concat(chains::finite(m), chains::rationals());
    ShiftPtr sigma = shifts::per_copy(shifts::translate(Rational(-1)));
    AutomorphismTower tower = AutomorphismTower::lift_chain(chain, sigma);
    return {"omega(m=" + std::to_string(m) + ")",
            chain,
            sigma,
            tower,
            classify_automorphism(tower),
            rank_of(chain),
            principal_rank_of(chain),
            sigma_rank_of(chain, sigma),
            principal_sigma_rank_of(chain, sigma),
            sigma_principal_intersection(chain, sigma)};
}

namespace {

// All group elements over a finite chain with at most max_terms support
// points and coefficients from {-2,-1,1,2}; includes zero.
std::vector<HahnGroupElement> exhaustive_group_pool(const ChainPtr& chain, int max_terms) {
    auto gammas = enumerate_chain(chain);
    const int n = static_cast<int>(gammas.size());
    const Rational coeff_choices[4] = {Rational(-2), Rational(-1), Rational(1), Rational(2)};
    std::vector<HahnGroupElement> pool;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int k = __builtin_popcount(mask);
        if (k > max_terms)
            continue;
        std::vector<int> positions;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                positions.push_back(i);
        long combos = 1;
        for (int i = 0; i < k; ++i)
            combos *= 4;
        for (long code = 0; code < combos; ++code) {
            std::vector<HahnGroupElement::Term> terms;
            long c = code;
            for (int i = 0; i < k; ++i) {
                terms.emplace_back(gammas[positions[i]], coeff_choices[c % 4]);
                c /= 4;
            }
            pool.push_back(HahnGroupElement::make(chain, std::move(terms)));
        }
    }
    return pool;
}

// Monomial exponents with at most 2 support points and the same coefficient
// set, plus the zero exponent.
std::vector<HahnSeries> exhaustive_monomial_pool(const ChainPtr& chain) {
    std::vector<HahnSeries> pool;
    for (const auto& g : exhaustive_group_pool(chain, 2))
        pool.push_back(HahnSeries::monomial(g, Rational(1)));
    return pool;
}

std::string describe_tables_mismatch(size_t i, size_t j) {
    return "tables " + std::to_string(i) + " and " + std::to_string(j);
}

} // namespace

Report oracle_verify_rank_correspondences(int n) {
    if (n < 1 || n > 8)
        throw Error(ErrorCode::PoolTooLarge, "exhaustive pools are kept to chain sizes 1..8");
    Report report;
    const std::string prefix = "correspondences/n=" + std::to_string(n);
    ChainPtr chain = chains::finite(n);
    auto segments = enumerate_final_segments(chain);
    report.check(prefix, "final-segment-count", static_cast<int>(segments.size()) == n,
                 std::to_string(segments.size()));

    auto elements = enumerate_chain(chain);
    bool seg_increasing = true;
    std::string seg_witness;
    for (size_t i = 0; i + 1 < segments.size(); ++i) {
        bool subset = true, strict = false;
        for (const auto& e : elements) {
            bool lo = segment_contains(chain, segments[i], e);
            bool hi = segment_contains(chain, segments[i + 1], e);
            if (lo && !hi)
                subset = false;
            if (hi && !lo)
                strict = true;
        }
        if (!subset || !strict) {
            seg_increasing = false;
            seg_witness = "segments " + std::to_string(i) + "," + std::to_string(i + 1);
            break;
        }
    }
    report.check(prefix, "segments-strictly-increasing-by-inclusion", seg_increasing, seg_witness);

    // Membership tables of the derived convex subgroups over the exhaustive
    // element pool.
    auto group_pool = exhaustive_group_pool(chain, 5);
    std::vector<std::vector<char>> subgroup_tables;
    for (const auto& seg : segments) {
        std::vector<char> table(group_pool.size());
        for (size_t p = 0; p < group_pool.size(); ++p)
            table[p] = convex_subgroup_member(chain, seg, group_pool[p]) ? 1 : 0;
        subgroup_tables.push_back(std::move(table));
    }

    auto tables_distinct = [](const std::vector<std::vector<char>>& tables, std::string& witness) {
        for (size_t i = 0; i < tables.size(); ++i)
            for (size_t j = i + 1; j < tables.size(); ++j)
                if (tables[i] == tables[j]) {
                    witness = describe_tables_mismatch(i, j) + " coincide";
                    return false;
                }
        return true;
    };
    auto tables_nested = [](const std::vector<std::vector<char>>& tables, std::string& witness) {
        for (size_t i = 0; i + 1 < tables.size(); ++i)
            for (size_t p = 0; p < tables[i].size(); ++p)
                if (tables[i][p] && !tables[i + 1][p]) {
                    witness = describe_tables_mismatch(i, i + 1) + " not nested at element " +
                              std::to_string(p);
                    return false;
                }
        return true;
    };

    std::string witness;
    report.check(prefix, "subgroup-tables-distinct", tables_distinct(subgroup_tables, witness),
                 witness);
    report.check(prefix, "subgroup-count",
                 static_cast<int>(subgroup_tables.size()) == n,
                 std::to_string(subgroup_tables.size()));
    witness.clear();
    report.check(prefix, "subgroups-nested-by-inclusion", tables_nested(subgroup_tables, witness),
                 witness);

    // Valuation ring membership tables over the monomial pool.
    auto monomials = exhaustive_monomial_pool(chain);
    std::vector<std::vector<char>> ring_tables;
    for (const auto& seg : segments) {
        ConvexValuation w(chain, seg);
        std::vector<char> table(monomials.size());
        for (size_t p = 0; p < monomials.size(); ++p)
            table[p] = w.in_ring(monomials[p]) ? 1 : 0;
        ring_tables.push_back(std::move(table));
    }
    witness.clear();
    report.check(prefix, "ring-tables-distinct", tables_distinct(ring_tables, witness), witness);
    report.check(prefix, "ring-count", static_cast<int>(ring_tables.size()) == n,
                 std::to_string(ring_tables.size()));
    witness.clear();
    report.check(prefix, "rings-nested-by-inclusion", tables_nested(ring_tables, witness),
                 witness);

    // Both correspondences preserve order: the segment inclusion order, the
    // subgroup tables and the ring tables must agree pairwise.
    bool order_preserved = true;
    witness.clear();
    for (size_t i = 0; i < segments.size() && order_preserved; ++i) {
        for (size_t j = 0; j < segments.size() && order_preserved; ++j) {
            auto table_subset = [](const std::vector<char>& a, const std::vector<char>& b) {
                for (size_t p = 0; p < a.size(); ++p)
                    if (a[p] && !b[p])
                        return false;
                return true;
            };
            bool seg_le = i <= j; // segments are enumerated increasing by inclusion
            bool sub_le = table_subset(subgroup_tables[i], subgroup_tables[j]);
            bool ring_le = table_subset(ring_tables[i], ring_tables[j]);
            if (seg_le != sub_le || seg_le != ring_le) {
                order_preserved = false;
                witness = "pair " + std::to_string(i) + "," + std::to_string(j);
            }
        }
    }
    report.check(prefix, "correspondences-order-preserving", order_preserved, witness);
    return report;
}

namespace {

// Fixed series pool for the initial-segment ring checks: small constants,
// monomials at the class representatives in both directions, and a few sums.
std::vector<HahnSeries> theorem3_series_pool(const ChainPtr& chain,
                                             const std::vector<ChainValue>& gammas) {
    std::vector<HahnSeries> pool;
    pool.push_back(HahnSeries::zero(chain));
    pool.push_back(HahnSeries::one(chain));
    pool.push_back(HahnSeries::constant(chain, Rational(2)));
    pool.push_back(HahnSeries::constant(chain, Rational(-1)));
    pool.push_back(HahnSeries::constant(chain, Rational(1, 2)));
    for (const auto& gamma : gammas) {
        HahnGroupElement down = HahnGroupElement::unit(chain, gamma, Rational(-1));
        HahnGroupElement up = HahnGroupElement::unit(chain, gamma, Rational(1));
        HahnGroupElement down2 = HahnGroupElement::unit(chain, gamma, Rational(-2));
        pool.push_back(HahnSeries::monomial(down, Rational(1)));
        pool.push_back(HahnSeries::monomial(down, Rational(3)));
        pool.push_back(HahnSeries::monomial(down2, Rational(1)));
        pool.push_back(HahnSeries::monomial(up, Rational(1)));
        pool.push_back(series_add(HahnSeries::monomial(down, Rational(1)),
                                  HahnSeries::one(chain)));
        pool.push_back(series_neg(HahnSeries::monomial(down, Rational(1))));
    }
    for (size_t i = 0; i + 1 < gammas.size(); ++i) {
        HahnGroupElement a = HahnGroupElement::unit(chain, gammas[i], Rational(-1));
        HahnGroupElement b = HahnGroupElement::unit(chain, gammas[i + 1], Rational(-1));
        pool.push_back(series_add(HahnSeries::monomial(a, Rational(1)),
                                  HahnSeries::monomial(b, Rational(1))));
    }
    return pool;
}

} // namespace

Report oracle_verify_theorem3(const ChainPtr& chain, const ShiftPtr& sigma_chain,
                              ClassRelation relation, long cap) {
    Report report;
    ShiftPtr class_shift = relation == ClassRelation::Mult ? shifts::identity() : sigma_chain;
    auto gammas = quotient_class_reps(chain, class_shift);
    if (!gammas)
        throw Error(ErrorCode::QuotientTooLarge,
                    "the class quotient of " + render_chain(chain) + " is not finitely enumerable");
    const size_t K = gammas->size();
    if (K > 6)
        throw Error(ErrorCode::QuotientTooLarge,
                    "the class quotient has " + std::to_string(K) + " classes; the oracle is kept to 6");
    std::optional<AutomorphismTower> tower;
    if (relation == ClassRelation::Sigma) {
        tower = AutomorphismTower::lift_chain(chain, sigma_chain);
        if (!classify_automorphism(*tower).square_growth.proven_p())
            throw Error(ErrorCode::HypothesisNotProven,
                        "the sigma relation needs a proven square-growth verdict");
    }

    const std::string prefix =
        std::string("theorem3/") + class_relation_name(relation) + "/" + render_chain(chain);

    // Field representatives: the monomial t^{-1_gamma} has value class gamma;
    // larger gamma means smaller field element, so the class order reverses.
    std::vector<HahnSeries> field_reps;
    for (const auto& gamma : *gammas)
        field_reps.push_back(
            HahnSeries::monomial(HahnGroupElement::unit(chain, gamma, Rational(-1)), Rational(1)));

    report.skip(prefix + "/segment=0", "ring-construction",
                "the empty initial segment corresponds to the natural valuation ring");

    auto pool = theorem3_series_pool(chain, *gammas);

    std::vector<SegmentRing> rings;
    for (size_t k = 1; k <= K; ++k) {
        std::vector<HahnSeries> reps;
        for (size_t j = 0; j < k; ++j)
            reps.push_back(field_reps[K - 1 - j]);
        rings.push_back(ring_from_initial_segment(relation, {reps, true}, tower, cap));
    }

    for (size_t k = 1; k <= K; ++k) {
        const SegmentRing& ring = rings[k - 1];
        const std::string case_id = prefix + "/segment=" + std::to_string(k);

        std::vector<char> in_ring(pool.size());
        for (size_t p = 0; p < pool.size(); ++p)
            in_ring[p] = ring.contains(pool[p]) ? 1 : 0;

        bool strict = ring.contains(ring.generator()) && in_P_K(ring.generator());
        for (size_t p = 0; p < pool.size() && strict; ++p)
            if (pool[p].is_zero() || group_sign(valuation(pool[p])) >= 0)
                strict = in_ring[p];
        report.check(case_id, "strictly-contains-natural-ring", strict);

        bool convex = true;
        std::string witness;
        for (size_t i = 0; i < pool.size() && convex; ++i) {
            if (!in_ring[i])
                continue;
            for (size_t j = 0; j < pool.size() && convex; ++j) {
                if (!in_ring[j] || series_compare(pool[i], pool[j]) == Ordering::Greater)
                    continue;
                for (size_t p = 0; p < pool.size(); ++p) {
                    if (in_ring[p])
                        continue;
                    if (series_compare(pool[i], pool[p]) != Ordering::Greater &&
                        series_compare(pool[p], pool[j]) != Ordering::Greater) {
                        convex = false;
                        witness = "element " + std::to_string(p) + " between members " +
                                  std::to_string(i) + "," + std::to_string(j);
                        break;
                    }
                }
            }
        }
        report.check(case_id, "convex", convex, witness);

        bool closed = true;
        witness.clear();
        for (size_t i = 0; i < pool.size() && closed; ++i) {
            if (!in_ring[i])
                continue;
            for (size_t j = i; j < pool.size(); ++j) {
                if (!in_ring[j])
                    continue;
                if (!ring.contains(series_add(pool[i], pool[j])) ||
                    !ring.contains(series_mul(pool[i], pool[j]))) {
                    closed = false;
                    witness = "pair " + std::to_string(i) + "," + std::to_string(j);
                    break;
                }
            }
        }
        report.check(case_id, "closed-under-ring-operations", closed, witness);

        if (relation == ClassRelation::Sigma) {
            bool compatible = true;
            witness.clear();
            for (size_t p = 0; p < pool.size(); ++p) {
                if (!in_ring[p])
                    continue;
                if (!ring.contains(tower->apply(pool[p])) ||
                    !ring.contains(tower->apply_inverse(pool[p]))) {
                    compatible = false;
                    witness = "element " + std::to_string(p);
                    break;
                }
            }
            report.check(case_id, "sigma-compatible", compatible, witness);
        }

        bool round_trip = true;
        witness.clear();
        for (size_t j = 0; j < K; ++j) {
            bool expected = j >= K - k;
            if (ring.contains(field_reps[j]) != expected) {
                round_trip = false;
                witness = "class " + std::to_string(j);
                break;
            }
        }
        report.check(case_id, "round-trip-reproduces-classes", round_trip, witness);

        // Principality at the last class: within the enumerated family, every
        // ring containing the generator contains the whole ring.
        bool principal = true;
        witness.clear();
        for (size_t m = 1; m <= K && principal; ++m) {
            if (m == k || !rings[m - 1].contains(ring.generator()))
                continue;
            for (size_t p = 0; p < pool.size(); ++p)
                if (in_ring[p] && !rings[m - 1].contains(pool[p])) {
                    principal = false;
                    witness = "ring " + std::to_string(m) + " omits element " + std::to_string(p);
                    break;
                }
        }
        report.check(case_id, "principal-generated-by-last-class", principal, witness);

        if (relation == ClassRelation::Mult) {
            // Cross-check against the segment-built coarsening at the same cut.
            ConvexValuation w(chain, principal_segment_of((*gammas)[K - k]));
            bool matches = true;
            witness.clear();
            for (size_t p = 0; p < pool.size(); ++p)
                if (static_cast<bool>(in_ring[p]) != w.in_ring(pool[p])) {
                    matches = false;
                    witness = "element " + std::to_string(p);
                    break;
                }
            report.check(case_id, "matches-cut-valuation", matches, witness);
        }
    }
    return report;
}

Report oracle_verify_theorem3(const ConstructionResult& example, ClassRelation relation,
                              long cap) {
    return oracle_verify_theorem3(example.chain, example.sigma_chain, relation, cap);
}

Report verify_tower_diagram(const AutomorphismTower& tower, int samples, std::uint64_t seed,
                            const std::string& case_id) {
    Report report;
    std::mt19937_64 rng(seed);
    const ChainPtr& chain = tower.chain();
    bool field_square = true;
    bool group_square = true;
    std::string witness;
    for (int i = 0; i < samples; ++i) {
        HahnSeries s = sampling::random_nonzero_series(chain, rng);
        if (!group_equal(valuation(tower.apply(s)), tower.sigma_group().apply(valuation(s)))) {
            field_square = false;
            witness = "series sample " + std::to_string(i);
            break;
        }
        HahnGroupElement g = sampling::random_nonzero_group_element(chain, rng);
        if (!value_equal(chain, value_vG(tower.sigma_group().apply(g)),
                         apply_shift(chain, *tower.sigma_chain(), value_vG(g)))) {
            group_square = false;
            witness = "group sample " + std::to_string(i);
            break;
        }
    }
    report.check(case_id, "diagram-field-square-commutes", field_square, witness);
    report.check(case_id, "diagram-group-square-commutes", group_square, witness);
    return report;
}

namespace sampling {

namespace {
Rational random_rational(std::mt19937_64& rng, bool non_negative) {
    std::uniform_int_distribution<long> num(non_negative ? 0 : -6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    return Rational(num(rng), den(rng));
}
} // namespace

ChainValue random_value(const ChainPtr& chain, std::mt19937_64& rng) {
    if (const auto* f = chain->get<ChainDescriptor::Finite>()) {
        if (f->size < 1)
            throw Error(ErrorCode::UnsupportedShape, "cannot sample the empty chain");
        std::uniform_int_distribution<int> d(0, f->size - 1);
        return values::finite_at(d(rng));
    }
    if (chain->get<ChainDescriptor::Singleton>())
        return values::finite_at(0);
    if (chain->get<ChainDescriptor::Rationals>())
        return values::rational_at(random_rational(rng, false));
    if (chain->get<ChainDescriptor::NonNegRationals>())
        return values::rational_at(random_rational(rng, true));
    if (const auto* c = chain->get<ChainDescriptor::Concat>())
        return values::concat_at(random_value(c->index, rng), random_value(c->component, rng));
    if (const auto* r = chain->get<ChainDescriptor::Reverse>())
        return values::reverse_of(random_value(r->inner, rng));
    if (const auto* q = chain->get<ChainDescriptor::Quotient>())
        return values::class_of(random_value(q->inner, rng));
    throw Error(ErrorCode::UnsupportedShape, "cannot sample " + render_chain(chain));
}

HahnGroupElement random_group_element(const ChainPtr& chain, std::mt19937_64& rng, int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<long> coeff(1, 3);
    std::uniform_int_distribution<int> sign(0, 1);
    int k = nterms(rng);
    std::vector<HahnGroupElement::Term> terms;
    for (int i = 0; i < k; ++i) {
        Rational c(coeff(rng));
        if (sign(rng))
            c = -c;
        terms.emplace_back(random_value(chain, rng), c);
    }
    return HahnGroupElement::make(chain, std::move(terms));
}

HahnGroupElement random_nonzero_group_element(const ChainPtr& chain, std::mt19937_64& rng,
                                              int max_terms) {
    for (;;) {
        HahnGroupElement g = random_group_element(chain, rng, max_terms);
        if (!g.is_zero())
            return g;
    }
}

HahnSeries random_series(const ChainPtr& chain, std::mt19937_64& rng, int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<long> coeff(1, 3);
    std::uniform_int_distribution<int> sign(0, 1);
    int k = nterms(rng);
    std::vector<HahnSeries::Term> terms;
    for (int i = 0; i < k; ++i) {
        Rational c(coeff(rng));
        if (sign(rng))
            c = -c;
        terms.emplace_back(random_group_element(chain, rng), c);
    }
    return HahnSeries::make(chain, std::move(terms));
}

HahnSeries random_nonzero_series(const ChainPtr& chain, std::mt19937_64& rng, int max_terms) {
    for (;;) {
        HahnSeries s = random_series(chain, rng, max_terms);
        if (!s.is_zero())
            return s;
    }
}

HahnSeries random_positive_infinite(const ChainPtr& chain, std::mt19937_64& rng, int max_terms) {
    std::uniform_int_distribution<long> coeff(1, 3);
    std::uniform_int_distribution<int> extra(0, max_terms - 1);
    // Leading term: negative exponent, positive coefficient. Any further
    // exponents sit strictly above the leading one.
    HahnGroupElement lead =
        HahnGroupElement::unit(chain, random_value(chain, rng), Rational(-coeff(rng)));
    std::vector<HahnSeries::Term> terms;
    terms.emplace_back(lead, Rational(coeff(rng)));
    int k = extra(rng);
    for (int i = 0; i < k; ++i) {
        HahnGroupElement bump = random_group_element(chain, rng, 2);
        if (bump.is_zero())
            continue;
        HahnGroupElement above = group_add(lead, group_abs(bump));
        Rational c(coeff(rng));
        std::uniform_int_distribution<int> sign(0, 1);
        if (sign(rng))
            c = -c;
        terms.emplace_back(above, c);
    }
    return HahnSeries::make(chain, std::move(terms));
}

} // namespace sampling

} // namespace hahnrank
