// Acceptance suite: one line per criterion, exact checks throughout.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "hahnrank/cli.hpp"
#include "hahnrank/construct.hpp"
#include "oracle_helpers.hpp"

using namespace hahnrank;

namespace {

struct PairCase {
    ChainPtr chain;
    ShiftPtr shift;
    bool exhaustive;
};

std::vector<PairCase> law_catalog() {
    std::vector<PairCase> cases;
    for (int n = 1; n <= 12; ++n) {
        cases.push_back({chains::finite(n), shifts::identity(), true});
        cases.push_back({chains::finite(n), shifts::clamped_decrement(), true});
    }
    for (auto [a, b] : {std::pair{2, 3}, std::pair{3, 4}, std::pair{2, 6}}) {
        cases.push_back({chains::concat(chains::finite(a), chains::finite(b)),
                         shifts::per_copy(shifts::clamped_decrement()), true});
        cases.push_back({chains::concat(chains::finite(a), chains::finite(b)),
                         shifts::per_copy(shifts::identity()), true});
    }
    cases.push_back({chains::rationals(), shifts::translate(Rational(-1)), false});
    cases.push_back({chains::rationals(), shifts::translate(Rational(1, 2)), false});
    cases.push_back({chains::non_neg_rationals(), shifts::scale(Rational(2)), false});
    cases.push_back({chains::non_neg_rationals(), shifts::scale(Rational(1, 3)), false});
    cases.push_back({chains::concat(chains::finite(3), chains::rationals()),
                     shifts::per_copy(shifts::translate(Rational(-1))), false});
    cases.push_back({chains::concat(chains::finite(2), chains::non_neg_rationals()),
                     shifts::fix_zero_per_copy(shifts::scale(Rational(2))), false});
    return cases;
}

bool check_laws(const ChainPtr& chain, const ShiftPtr& shift,
                const std::vector<ChainValue>& pts, std::string& detail) {
    auto equivalent = [&](const ChainValue& x, const ChainValue& y) {
        return shift_equivalent(chain, *shift, x, y).is_equivalent();
    };
    for (const auto& a : pts) {
        if (!equivalent(a, a)) {
            detail = "reflexivity fails at " + render_value(a);
            return false;
        }
        if (!equivalent(a, apply_shift(chain, *shift, a))) {
            detail = "class of " + render_value(a) + " is not closed under the map";
            return false;
        }
    }
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = 0; j < pts.size(); ++j) {
            if (equivalent(pts[i], pts[j]) != equivalent(pts[j], pts[i])) {
                detail = "symmetry fails";
                return false;
            }
        }
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = 0; j < pts.size(); ++j) {
            if (!equivalent(pts[i], pts[j]))
                continue;
            for (size_t k = 0; k < pts.size(); ++k) {
                if (equivalent(pts[j], pts[k]) && !equivalent(pts[i], pts[k])) {
                    detail = "transitivity fails";
                    return false;
                }
                // Convexity: anything between two equivalent points joins them.
                if (compare_elements(chain, pts[i], pts[k]) != Ordering::Greater &&
                    compare_elements(chain, pts[k], pts[j]) != Ordering::Greater &&
                    !equivalent(pts[i], pts[k])) {
                    detail = "convexity fails";
                    return false;
                }
            }
        }
    return true;
}

bool criterion_equivalence_laws(std::string& detail) {
    std::mt19937_64 rng(0x5EED01);
    for (const auto& c : law_catalog()) {
        std::vector<ChainValue> pts;
        if (c.exhaustive) {
            pts = enumerate_chain(c.chain);
        } else {
            for (int i = 0; i < 20; ++i) // 20 points give 400 checked pairs
                pts.push_back(sampling::random_value(c.chain, rng));
        }
        if (!check_laws(c.chain, c.shift, pts, detail)) {
            detail += " on " + render_chain(c.chain) + " / " + render_shift(c.shift);
            return false;
        }
    }
    return true;
}

bool criterion_correspondences(std::string& detail) {
    for (int n = 1; n <= 8; ++n) {
        Report r = oracle_verify_rank_correspondences(n);
        if (!r.all_passed()) {
            detail = "violations at n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool criterion_principal_reversal(std::string& detail) {
    for (int n = 1; n <= 8; ++n) {
        ChainPtr chain = chains::finite(n);
        auto segments = enumerate_final_segments(chain);
        if (static_cast<int>(segments.size()) != n) {
            detail = "segment count at n=" + std::to_string(n);
            return false;
        }
        auto elements = enumerate_chain(chain);
        for (size_t i = 0; i < segments.size(); ++i)
            for (size_t j = 0; j < segments.size(); ++j) {
                bool seg_le = i <= j; // increasing by inclusion
                bool gamma_ge =
                    compare_elements(chain, segments[i].gamma(), segments[j].gamma()) !=
                    Ordering::Less;
                bool included = true;
                for (const auto& e : elements)
                    if (segment_contains(chain, segments[i], e) &&
                        !segment_contains(chain, segments[j], e))
                        included = false;
                if (seg_le != gamma_ge || seg_le != included) {
                    detail = "reversal fails at n=" + std::to_string(n);
                    return false;
                }
            }
        for (size_t i = 0; i + 1 < segments.size(); ++i)
            if (value_equal(chain, segments[i].gamma(), segments[i + 1].gamma())) {
                detail = "map is not injective";
                return false;
            }
    }
    return true;
}

bool criterion_hahn_arithmetic(std::string& detail) {
    std::mt19937_64 rng(0x5EED04);
    int samples = 0;
    for (const ChainPtr& chain : {chains::singleton(), chains::finite(2)}) {
        HahnSeries one = HahnSeries::one(chain);
        for (int i = 0; i < 260; ++i, ++samples) {
            HahnSeries a = sampling::random_series(chain, rng);
            HahnSeries b = sampling::random_series(chain, rng);
            HahnSeries c = sampling::random_series(chain, rng);
            if (!series_equal(series_mul(series_mul(a, b), c), series_mul(a, series_mul(b, c))) ||
                !series_equal(series_mul(a, b), series_mul(b, a)) ||
                !series_equal(series_mul(a, series_add(b, c)),
                              series_add(series_mul(a, b), series_mul(a, c))) ||
                !series_equal(series_add(a, series_neg(a)), HahnSeries::zero(chain)) ||
                !series_equal(series_mul(a, one), a)) {
                detail = "ring axiom fails at sample " + std::to_string(samples);
                return false;
            }
            if (series_sign(a) > 0 && series_sign(b) > 0 &&
                (series_sign(series_add(a, b)) <= 0 || series_sign(series_mul(a, b)) <= 0)) {
                detail = "order compatibility fails";
                return false;
            }
            if (!a.is_zero() && !b.is_zero()) {
                if (!group_equal(valuation(series_mul(a, b)),
                                 group_add(valuation(a), valuation(b)))) {
                    detail = "value of a product fails";
                    return false;
                }
                if (series_sign(a) == series_sign(b)) {
                    HahnGroupElement expected =
                        group_compare(valuation(a), valuation(b)) == Ordering::Greater
                            ? valuation(b)
                            : valuation(a);
                    if (!group_equal(valuation(series_add(a, b)), expected)) {
                        detail = "ultrametric law fails";
                        return false;
                    }
                }
                long k = 1 + i % 5;
                HahnSeries lead =
                    HahnSeries::monomial(a.terms().front().first, a.terms().front().second);
                HahnSeries eps = series_sub(series_mul(a, inverse_truncated(lead, 1)), one);
                HahnSeries defect = series_sub(series_mul(a, inverse_truncated(a, k)), one);
                if (eps.is_zero() ? !defect.is_zero()
                                  : !group_equal(valuation(defect),
                                                 group_scale(Rational(k), valuation(eps)))) {
                    detail = "inversion contract fails";
                    return false;
                }
            }
        }
    }
    return samples >= 500;
}

bool criterion_diagram(std::string& detail) {
    for (int m : {1, 2, 3, 5}) {
        if (!verify_tower_diagram(build_omega_increasing_example(m).tower, 110, 0xD00 + m, "a")
                 .all_passed()) {
            detail = "omega tower at m=" + std::to_string(m);
            return false;
        }
        if (!verify_tower_diagram(
                 build_fixed_point_example(m, shifts::scale(Rational(2))).tower, 110, 0xE00 + m,
                 "a")
                 .all_passed()) {
            detail = "fixed-point tower at m=" + std::to_string(m);
            return false;
        }
    }
    return true;
}

bool criterion_omega_examples(std::string& detail) {
    for (int m : {1, 2, 3, 5}) {
        ConstructionResult built = build_omega_increasing_example(m);
        if (built.principal_sigma_rank.cardinality != m) {
            detail = "principal difference rank at m=" + std::to_string(m);
            return false;
        }
        if (!built.classification.omega_increasing.proven_p()) {
            detail = "growth classification at m=" + std::to_string(m);
            return false;
        }
        if (!built.intersection.is_empty()) {
            detail = "intersection not empty at m=" + std::to_string(m);
            return false;
        }
    }
    return true;
}

bool criterion_fixed_point_examples(std::string& detail) {
    for (int m : {1, 2, 3, 5}) {
        ConstructionResult built = build_fixed_point_example(m, shifts::scale(Rational(2)));
        if (built.intersection.cardinality != m) {
            detail = "intersection order type at m=" + std::to_string(m);
            return false;
        }
        FixedPointSet fps = fixed_points(built.chain, built.sigma_chain);
        if (!fps.points || static_cast<int>(fps.points->size()) != m) {
            detail = "fixed point count at m=" + std::to_string(m);
            return false;
        }
    }
    return true;
}

bool criterion_theorem3(std::string& detail) {
    if (!oracle_verify_theorem3(chains::finite(3), shifts::identity(), ClassRelation::Mult)
             .all_passed()) {
        detail = "mult relation on finite(3)";
        return false;
    }
    for (int m : {2, 3}) {
        if (!oracle_verify_theorem3(build_omega_increasing_example(m), ClassRelation::Sigma)
                 .all_passed()) {
            detail = "sigma relation at m=" + std::to_string(m);
            return false;
        }
    }
    return true;
}

bool criterion_three_level(std::string& detail) {
    std::mt19937_64 rng(0x5EED09);
    int checked = 0;
    for (int m : {2, 3}) {
        ConstructionResult omega = build_omega_increasing_example(m);
        ConstructionResult fixed = build_fixed_point_example(m, shifts::scale(Rational(2)));
        for (int i = 0; i < 60; ++i) {
            HahnSeries a = sampling::random_positive_infinite(omega.chain, rng);
            HahnSeries b = sampling::random_positive_infinite(omega.chain, rng);
            bool mult = mult_equivalent(a, b).is_equivalent();
            bool chain_mult = value_equal(omega.chain, value_vG(valuation(a)),
                                          value_vG(valuation(b)));
            bool sigma = sigma_equivalent(omega.tower, a, b).is_equivalent();
            bool chain_sigma =
                shift_equivalent(omega.chain, *omega.sigma_chain, value_vG(valuation(a)),
                                 value_vG(valuation(b)))
                    .is_equivalent();
            if (mult != chain_mult || sigma != chain_sigma) {
                detail = "omega construction, sample " + std::to_string(i);
                return false;
            }
            // The fixed-point tower fails the growth hypothesis, so only the
            // multiplicative relation applies there.
            HahnSeries c = sampling::random_positive_infinite(fixed.chain, rng);
            HahnSeries d = sampling::random_positive_infinite(fixed.chain, rng);
            if (mult_equivalent(c, d).is_equivalent() !=
                value_equal(fixed.chain, value_vG(valuation(c)), value_vG(valuation(d)))) {
                detail = "fixed-point construction, sample " + std::to_string(i);
                return false;
            }
            checked += 2;
        }
    }
    return checked >= 200;
}

bool criterion_weak_isometry(std::string& detail) {
    for (int n = 1; n <= 8; ++n) {
        AutomorphismTower id = AutomorphismTower::identity(chains::finite(n));
        for (const auto& seg : enumerate_final_segments(chains::finite(n)))
            if (!is_sigma_compatible(ConvexValuation(chains::finite(n), seg), id)) {
                detail = "segment not compatible at n=" + std::to_string(n);
                return false;
            }
    }
    return true;
}

bool criterion_class_closure(std::string& detail) {
    std::mt19937_64 rng(0x5EED0B);
    ConstructionResult omega = build_omega_increasing_example(2);
    for (int i = 0; i < 55; ++i) {
        HahnSeries a = sampling::random_positive_infinite(omega.chain, rng, 2);
        HahnSeries b = omega.tower.apply_n(a, 1 + i % 2);
        if (!sigma_equivalent(omega.tower, a, b).is_equivalent() ||
            !sigma_equivalent(omega.tower, a, series_add(a, b)).is_equivalent() ||
            !sigma_equivalent(omega.tower, a, series_mul(a, b)).is_equivalent() ||
            !sigma_equivalent(omega.tower, a, omega.tower.apply(a)).is_equivalent()) {
            detail = "closure fails at sample " + std::to_string(i);
            return false;
        }
        for (long n = 1; n <= 4; ++n)
            if (series_compare(omega.tower.apply_n(a, n),
                               series_pow(a, 1UL << static_cast<unsigned long>(n))) ==
                Ordering::Less) {
                detail = "iterated growth fails at sample " + std::to_string(i);
                return false;
            }
    }
    return true;
}

bool criterion_cli(std::string& detail) {
    std::vector<std::string> invocations = {
        "construct omega --m 3",
        "construct fixedpoint --m 3 --eta scale(2)",
        "classify --chain Q --shift translate(-1)",
        "rank --chain finite(3)",
        "rank --chain concat(finite(3),Q) --shift percopy(translate(-1))",
        "quotient --chain concat(finite(3),Q) --shift percopy(translate(-1))",
        "verify correspondences --n 5",
        "verify theorem3 --n 3 --m 2",
    };
    for (const auto& text : invocations) {
        Command cmd = parse_dsl(text);
        RunResult first = run(cmd);
        RunResult second = run(parse_dsl(text));
        if (first.machine != second.machine || first.machine.empty()) {
            detail = "non-deterministic report for: " + text;
            return false;
        }
        if (first.exit_code != 0) {
            detail = "non-zero exit for: " + text;
            return false;
        }
        Command reparsed = parse_dsl(render_command(cmd));
        if (!command_equal(cmd, reparsed)) {
            detail = "round trip fails for: " + text;
            return false;
        }
    }
    return true;
}

struct Criterion {
    int id;
    const char* label;
    double limit_seconds;
    std::function<bool(std::string&)> body;
};

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "shift-equivalence laws on the built-in catalog", 5.0, criterion_equivalence_laws},
        {2, "segment/subgroup/ring correspondences for n=1..8", 30.0, criterion_correspondences},
        {3, "principal segments reverse the chain order", 1.0, criterion_principal_reversal},
        {4, "series arithmetic, valuation and inversion contracts", 10.0,
         criterion_hahn_arithmetic},
        {5, "lifted towers make both squares commute", 5.0, criterion_diagram},
        {6, "omega-increasing construction hits every finite difference rank", 5.0,
         criterion_omega_examples},
        {7, "fixed-point construction realizes the intersection order type", 5.0,
         criterion_fixed_point_examples},
        {8, "initial-segment rings round trip for both relations", 30.0, criterion_theorem3},
        {9, "field-level and chain-level equivalences agree", 10.0, criterion_three_level},
        {10, "identity chain maps keep every coarsening compatible", 1.0,
         criterion_weak_isometry},
        {11, "class closure and iterated growth under the hypothesis", 10.0,
         criterion_class_closure},
        {12, "deterministic reports and command round trips", 5.0, criterion_cli},
    };

    int failures = 0;
    for (auto& criterion : criteria) {
        std::string detail;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = criterion.body(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                             .count();
        bool in_time = seconds < criterion.limit_seconds;
        if (ok && !in_time)
            detail = "over the time budget";
        bool passed = ok && in_time;
        std::printf("%s criterion %2d [%5.2fs/%.0fs] %s%s%s\n", passed ? "PASS" : "FAIL",
                    criterion.id, seconds, criterion.limit_seconds, criterion.label,
                    detail.empty() ? "" : " -- ", detail.c_str());
        if (!passed)
            ++failures;
    }
    if (failures == 0)
        std::printf("all %zu acceptance criteria hold\n", criteria.size());
    else
        std::printf("%d acceptance criteria failed\n", failures);
    return failures;
}
