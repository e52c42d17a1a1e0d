#include "hahnrank/cli.hpp"

#include <fstream>
#include <iostream>

#include "hahnrank/construct.hpp"
#include "hahnrank/serialize.hpp"

namespace hahnrank {

namespace {

std::string rank_witness(const RankDescriptor& r) {
    return "order_type=" + r.order_type_str() + " cardinality=" + r.cardinality_str();
}

void report_ranks(Report& report, const std::string& case_id, const ConstructionResult& built) {
    for (const auto* r : {&built.rank, &built.principal_rank, &built.sigma_rank,
                          &built.principal_sigma_rank, &built.intersection})
        report.pass(case_id, std::string("rank/") + rank_kind_name(r->kind), rank_witness(*r));
}

void report_classification(Report& report, const std::string& case_id, const Classification& c) {
    report.pass(case_id, "classification/isometry", c.isometry.str());
    report.pass(case_id, "classification/weak-isometry", c.weak_isometry.str());
    report.pass(case_id, "classification/omega-increasing", c.omega_increasing.str());
    report.pass(case_id, "classification/square-growth", c.square_growth.str());
}

Report run_construct(const ConstructCommand& cmd, std::string& human) {
    Report report;
    ConstructionResult built =
        cmd.recipe == "omega"
            ? build_omega_increasing_example(cmd.m)
            : build_fixed_point_example(cmd.m,
                                        cmd.eta ? *cmd.eta : shifts::scale(Rational(2)));
    const std::string case_id = "construct/" + built.name;
    report.pass(case_id, "chain", render_chain(built.chain));
    report.pass(case_id, "sigma-chain", render_shift(built.sigma_chain));
    report.pass(case_id, "tower-tag", tower_tag_name(built.tower.tag()));
    report_classification(report, case_id, built.classification);
    report_ranks(report, case_id, built);

    if (cmd.recipe == "omega") {
        report.check(case_id, "omega-increasing-proven",
                     built.classification.omega_increasing.proven_p(),
                     built.classification.omega_increasing.str());
        report.check(case_id, "square-growth-proven",
                     built.classification.square_growth.proven_p(),
                     built.classification.square_growth.str());
        report.check(case_id, "principal-sigma-rank-counts-copies",
                     built.principal_sigma_rank.cardinality == cmd.m,
                     rank_witness(built.principal_sigma_rank));
        report.check(case_id, "intersection-empty", built.intersection.is_empty(),
                     rank_witness(built.intersection));
    } else {
        report.check(case_id, "intersection-counts-copies",
                     built.intersection.cardinality == cmd.m, rank_witness(built.intersection));
        bool fixes = true;
        std::string fixed_witness;
        for (int i = 0; i < cmd.m && fixes; ++i) {
            ChainValue zero = values::concat_at(i, values::rational_at(0));
            HahnSeries monomial = HahnSeries::monomial(
                HahnGroupElement::unit(built.chain, zero, Rational(-1)), Rational(1));
            fixes = series_equal(built.tower.apply(monomial), monomial);
            fixed_witness = series_json(monomial).dump();
        }
        report.check(case_id, "fixes-copy-zero-monomials", fixes, fixed_witness);
    }
    report.merge(verify_tower_diagram(built.tower, 100, 0xD1A6u, case_id));

    human += built.name + "\n";
    human += "  chain: " + render_chain(built.chain) + "\n";
    human += "  sigma: " + render_shift(built.sigma_chain) + "\n";
    human += "  isometry: " + built.classification.isometry.str() + "\n";
    human += "  weak isometry: " + built.classification.weak_isometry.str() + "\n";
    human += "  omega increasing: " + built.classification.omega_increasing.str() + "\n";
    human += "  square growth: " + built.classification.square_growth.str() + "\n";
    for (const auto* r : {&built.rank, &built.principal_rank, &built.sigma_rank,
                          &built.principal_sigma_rank, &built.intersection})
        human += "  " + std::string(rank_kind_name(r->kind)) + ": " + rank_witness(*r) + "\n";
    return report;
}

Report run_classify(const ClassifyCommand& cmd, std::string& human) {
    Report report;
    validate_shift(cmd.chain, *cmd.shift);
    const std::string case_id =
        "classify/" + render_chain(cmd.chain) + "/" + render_shift(cmd.shift);
    Orientation o = shift_orientation(cmd.chain, *cmd.shift);
    report.pass(case_id, "orientation", orientation_name(o));
    report.pass(case_id, "identity",
                is_identity_shift(cmd.chain, *cmd.shift) ? "true" : "false");
    Verdict sls = strict_left_shift(cmd.chain, *cmd.shift);
    report.pass(case_id, "strict-left-shift", sls.str());
    human += "classify " + render_chain(cmd.chain) + " under " + render_shift(cmd.shift) + "\n";
    human += "  orientation: " + std::string(orientation_name(o)) + "\n";
    human += "  strict left shift: " + sls.str() + "\n";
    if (invert_shift(cmd.chain, *cmd.shift)) {
        AutomorphismTower tower = AutomorphismTower::lift_chain(cmd.chain, cmd.shift);
        Classification c = classify_automorphism(tower);
        report_classification(report, case_id, c);
        human += "  isometry: " + c.isometry.str() + "\n";
        human += "  weak isometry: " + c.weak_isometry.str() + "\n";
        human += "  omega increasing: " + c.omega_increasing.str() + "\n";
        human += "  square growth: " + c.square_growth.str() + "\n";
    } else {
        report.skip(case_id, "classification", "shift is not bijective; no lifted tower");
        human += "  no lifted tower: the shift is not bijective\n";
    }
    return report;
}

Report run_rank(const RankCommand& cmd, std::string& human) {
    Report report;
    const std::string case_id = "rank/" + render_chain(cmd.chain) +
                                (cmd.shift ? "/" + render_shift(*cmd.shift) : "");
    auto emit = [&](const RankDescriptor& r) {
        report.pass(case_id, rank_kind_name(r.kind), rank_witness(r));
        human += "  " + std::string(rank_kind_name(r.kind)) + ": " + rank_witness(r) + "\n";
    };
    auto need_shift = [&]() -> const ShiftPtr& {
        if (!cmd.shift)
            throw Error(ErrorCode::DomainMismatch,
                        "this rank kind needs --shift for the chain automorphism");
        return *cmd.shift;
    };
    human += "rank of " + render_chain(cmd.chain) +
             (cmd.shift ? " under " + render_shift(*cmd.shift) : "") + "\n";
    switch (cmd.which) {
    case RankSelector::All:
        emit(rank_of(cmd.chain));
        emit(principal_rank_of(cmd.chain));
        if (cmd.shift) {
            emit(sigma_rank_of(cmd.chain, *cmd.shift));
            emit(principal_sigma_rank_of(cmd.chain, *cmd.shift));
            emit(sigma_principal_intersection(cmd.chain, *cmd.shift));
        }
        break;
    case RankSelector::Rank: emit(rank_of(cmd.chain)); break;
    case RankSelector::Principal: emit(principal_rank_of(cmd.chain)); break;
    case RankSelector::Sigma: emit(sigma_rank_of(cmd.chain, need_shift())); break;
    case RankSelector::SigmaPrincipal:
        emit(principal_sigma_rank_of(cmd.chain, need_shift()));
        break;
    case RankSelector::Intersection:
        emit(sigma_principal_intersection(cmd.chain, need_shift()));
        break;
    }
    return report;
}

Report run_quotient(const QuotientCommand& cmd, std::string& human) {
    Report report;
    const std::string case_id =
        "quotient/" + render_chain(cmd.chain) + "/" + render_shift(cmd.shift);
    QuotientResult q = quotient_chain(cmd.chain, cmd.shift);
    report.pass(case_id, "quotient-term", render_chain(q.quotient));
    report.pass(case_id, "canonical",
                q.canonical ? render_chain(*q.canonical) : std::string("unknown"));
    human += "quotient of " + render_chain(cmd.chain) + " by " + render_shift(cmd.shift) + "\n";
    human += "  term: " + render_chain(q.quotient) + "\n";
    human +=
        "  canonical: " + (q.canonical ? render_chain(*q.canonical) : std::string("unknown")) +
        "\n";
    return report;
}

Report run_verify(const VerifyCommand& cmd, long cap, std::string& human) {
    Report report;
    if (cmd.suite == "correspondences" || cmd.suite == "all") {
        report.merge(oracle_verify_rank_correspondences(cmd.n));
        human += "correspondence oracle at n=" + std::to_string(cmd.n) + "\n";
    }
    if (cmd.suite == "theorem3" || cmd.suite == "all") {
        report.merge(oracle_verify_theorem3(chains::finite(cmd.n), shifts::identity(),
                                            ClassRelation::Mult, cap));
        human += "initial-segment rings, mult relation, finite(" + std::to_string(cmd.n) + ")\n";
        ConstructionResult omega = build_omega_increasing_example(cmd.m);
        report.merge(oracle_verify_theorem3(omega, ClassRelation::Sigma, cap));
        human += "initial-segment rings, sigma relation, " + omega.name + "\n";
    }
    return report;
}

} // namespace

RunResult run(const Command& cmd) {
    RunResult result;
    Report report;
    if (const auto* c = std::get_if<ConstructCommand>(&cmd.payload))
        report = run_construct(*c, result.human);
    else if (const auto* c = std::get_if<ClassifyCommand>(&cmd.payload))
        report = run_classify(*c, result.human);
    else if (const auto* c = std::get_if<RankCommand>(&cmd.payload))
        report = run_rank(*c, result.human);
    else if (const auto* c = std::get_if<QuotientCommand>(&cmd.payload))
        report = run_quotient(*c, result.human);
    else if (const auto* c = std::get_if<VerifyCommand>(&cmd.payload))
        report = run_verify(*c, cmd.cap, result.human);

    long failed = report.failures();
    long passed = 0, skipped = 0;
    for (const auto& e : report.entries()) {
        if (e.status == "pass")
            ++passed;
        else if (e.status == "skipped")
            ++skipped;
    }
    result.human += "checks: " + std::to_string(passed) + " pass, " + std::to_string(failed) +
                    " fail, " + std::to_string(skipped) + " skipped\n";
    if (failed > 0)
        for (const auto& e : report.entries())
            if (e.status == "fail")
                result.human +=
                    "FAIL " + e.case_id + " " + e.property +
                    (e.witness.empty() ? "" : " (" + e.witness + ")") + "\n";
    result.machine = report.to_jsonl();
    result.exit_code = failed == 0 ? 0 : 1;
    return result;
}

int cli_main(int argc, const char* const* argv) {
    std::string text;
    for (int i = 1; i < argc; ++i) {
        if (i > 1)
            text += ' ';
        text += argv[i];
    }
    if (text.empty()) {
        std::cerr << "usage: construct|classify|rank|quotient|verify ...\n"
                  << "  construct fixedpoint --m <int> [--eta <shift>]\n"
                  << "  construct omega --m <int>\n"
                  << "  classify --chain <chain> --shift <shift>\n"
                  << "  rank --chain <chain> [--shift <shift>] [--which <selector>]\n"
                  << "  quotient --chain <chain> --shift <shift>\n"
                  << "  verify correspondences|theorem3|all [--n <int>] [--m <int>]\n"
                  << "common flags: [--cap <int>] [--json <path>]\n";
        return 2;
    }
    try {
        Command cmd = parse_dsl(text);
        RunResult result = run(cmd);
        std::cout << result.human;
        if (cmd.json_path) {
            std::ofstream out(*cmd.json_path, std::ios::binary);
            if (!out) {
                std::cerr << "cannot open " << *cmd.json_path << " for writing\n";
                return 2;
            }
            out << result.machine;
        }
        return result.exit_code;
    } catch (const ParseError& e) {
        std::cerr << "parse error in \"" << text << "\": " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}

} // namespace hahnrank
