#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hahnrank/cli.hpp"

using namespace hahnrank;

TEST_CASE("parsing the documented command shapes") {
    Command rank = parse_dsl("rank --chain finite(3)");
    const auto* rc = std::get_if<RankCommand>(&rank.payload);
    REQUIRE(rc != nullptr);
    CHECK(chain_equal(rc->chain, chains::finite(3)));
    CHECK(rc->which == RankSelector::All);
    CHECK_FALSE(rc->shift.has_value());
    CHECK(rank.cap == kDefaultEquivalenceCap);

    Command quot =
        parse_dsl("quotient --chain concat(finite(3),Q) --shift percopy(translate(-1/1))");
    const auto* qc = std::get_if<QuotientCommand>(&quot.payload);
    REQUIRE(qc != nullptr);
    CHECK(chain_equal(qc->chain, chains::concat(chains::finite(3), chains::rationals())));
    CHECK(shift_equal(qc->shift, shifts::per_copy(shifts::translate(Rational(-1)))));

    Command con = parse_dsl("construct fixedpoint --m 3 --eta scale(2) --cap 32 --json out.jsonl");
    const auto* cc = std::get_if<ConstructCommand>(&con.payload);
    REQUIRE(cc != nullptr);
    CHECK(cc->recipe == "fixedpoint");
    CHECK(cc->m == 3);
    REQUIRE(cc->eta.has_value());
    CHECK(shift_equal(*cc->eta, shifts::scale(Rational(2))));
    CHECK(con.cap == 32);
    CHECK(con.json_path == "out.jsonl");

    Command ver = parse_dsl("verify correspondences --n 5");
    const auto* vc = std::get_if<VerifyCommand>(&ver.payload);
    REQUIRE(vc != nullptr);
    CHECK(vc->suite == "correspondences");
    CHECK(vc->n == 5);
}

TEST_CASE("parse errors carry exact positions") {
    try {
        parse_dsl("rank --chain finite(");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 21);
        CHECK(e.expected() == "integer");
    }
    try {
        parse_dsl("rank --chian finite(3)");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.column() == 6); // the offending flag, not the end of input
    }
    CHECK_THROWS_AS(parse_dsl("verify nonsense --n 2"), ParseError);
    CHECK_THROWS_AS(parse_dsl("rank --chain finite(3) --chain finite(2)"), ParseError);
    CHECK_THROWS_AS(parse_dsl("frobnicate --chain Q"), ParseError);
    CHECK_THROWS_AS(parse_dsl("classify --chain Q"), ParseError);  // missing --shift
    CHECK_THROWS_AS(parse_dsl("rank --chain finite(0)"), ParseError);
    CHECK_THROWS_AS(parse_dsl("classify --chain Q --shift scale(-2)"), ParseError);
}

TEST_CASE("rationals are canonicalized on parse") {
    ShiftPtr s = parse_shift_term("translate(-2/4)");
    CHECK(render_shift(s) == "translate(-1/2)");
    CHECK(render_shift(parse_shift_term("scale(6/3)")) == "scale(2)");
    CHECK(render_chain(parse_chain_term("concat(finite(2),reverse(Qnn))")) ==
          "concat(finite(2),reverse(Qnn))");
}

TEST_CASE("render and reparse agree for the built-in command shapes") {
    std::vector<std::string> shapes = {
        "construct omega --m 3",
        "construct fixedpoint --m 2 --eta scale(1/2)",
        "construct fixedpoint --m 1",
        "classify --chain Q --shift translate(-1)",
        "classify --chain concat(finite(2),Qnn) --shift fixzero(scale(2))",
        "rank --chain finite(3)",
        "rank --chain concat(finite(3),Q) --shift percopy(translate(-1)) --which sigmaprincipal",
        "rank --chain singleton --which principal",
        "quotient --chain concat(finite(3),Q) --shift percopy(translate(-1))",
        "quotient --chain finite(5) --shift clampdec",
        "verify correspondences --n 5",
        "verify theorem3 --n 3 --m 2",
        "verify all --n 4 --m 2 --cap 32",
        "rank --chain finite(3) --json report.jsonl",
    };
    for (const auto& text : shapes) {
        Command cmd = parse_dsl(text);
        Command again = parse_dsl(render_command(cmd));
        CHECK(command_equal(cmd, again));
        // Rendering is a fixed point.
        CHECK(render_command(again) == render_command(cmd));
    }
}

TEST_CASE("runs are deterministic") {
    std::vector<std::string> invocations = {
        "construct omega --m 2",
        "construct fixedpoint --m 2 --eta scale(2)",
        "classify --chain Q --shift translate(-1)",
        "rank --chain concat(finite(2),Q) --shift percopy(translate(-1))",
        "quotient --chain finite(5) --shift clampdec",
        "verify correspondences --n 3",
        "verify theorem3 --n 3 --m 2",
    };
    for (const auto& text : invocations) {
        RunResult first = run(parse_dsl(text));
        RunResult second = run(parse_dsl(text));
        CHECK(first.machine == second.machine);
        CHECK(first.human == second.human);
        CHECK(first.exit_code == 0);
        CHECK_FALSE(first.machine.empty());
    }
}

TEST_CASE("report bookkeeping") {
    Report r;
    r.pass("c", "p1", "w");
    r.skip("c", "p2", "note");
    CHECK(r.all_passed());
    r.fail("c", "p3", "boom");
    CHECK_FALSE(r.all_passed());
    CHECK(r.failures() == 1);
    CHECK(r.to_jsonl() ==
          "{\"case_id\":\"c\",\"property\":\"p1\",\"status\":\"pass\",\"witness\":\"w\"}\n"
          "{\"case_id\":\"c\",\"property\":\"p2\",\"status\":\"skipped\",\"witness\":\"note\"}\n"
          "{\"case_id\":\"c\",\"property\":\"p3\",\"status\":\"fail\",\"witness\":\"boom\"}\n");

    CHECK(EquivalenceVerdict::equivalent(5).str() == "equivalent(n=5)");
    CHECK(EquivalenceVerdict::not_equivalent("why").str() == "not_equivalent: why");
    CHECK(EquivalenceVerdict::undecided(64).str() == "undecided(cap=64)");
    CHECK(Verdict::proven().str() == "proven");
    CHECK(Verdict::refuted("w").str() == "refuted (w)");
}

TEST_CASE("exit codes and report contents") {
    RunResult omega = run(parse_dsl("construct omega --m 3"));
    CHECK(omega.exit_code == 0);
    CHECK(omega.machine.find("\"principal-sigma-rank-counts-copies\"") != std::string::npos);
    CHECK(omega.machine.find("finite(3)") != std::string::npos);
    CHECK(omega.human.find("0 fail") != std::string::npos);

    // Every machine line is a JSON object with the four report keys.
    size_t start = 0;
    while (start < omega.machine.size()) {
        size_t end = omega.machine.find('\n', start);
        REQUIRE(end != std::string::npos);
        json line = json::parse(omega.machine.substr(start, end - start));
        CHECK(line.contains("case_id"));
        CHECK(line.contains("property"));
        CHECK(line.contains("status"));
        CHECK(line.contains("witness"));
        start = end + 1;
    }

    RunResult classify = run(parse_dsl("classify --chain finite(5) --shift clampdec"));
    CHECK(classify.exit_code == 0);
    CHECK(classify.machine.find("skipped") != std::string::npos); // no lifted tower

    CHECK_THROWS_AS(run(parse_dsl("rank --chain Q --shift scale(2) --which sigma")), Error);
    CHECK_THROWS_AS(run(parse_dsl("rank --chain finite(3) --which sigma")), Error);
}
