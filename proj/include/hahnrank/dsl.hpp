#pragma once

#include <optional>
#include <string>
#include <variant>

#include "hahnrank/shift.hpp"

namespace hahnrank {

enum class RankSelector { All, Rank, Principal, Sigma, SigmaPrincipal, Intersection };

const char* rank_selector_name(RankSelector which);

struct ConstructCommand {
    std::string recipe; // fixedpoint | omega
    int m = 1;
    std::optional<ShiftPtr> eta;
};

struct ClassifyCommand {
    ChainPtr chain;
    ShiftPtr shift;
};

struct RankCommand {
    ChainPtr chain;
    std::optional<ShiftPtr> shift;
    RankSelector which = RankSelector::All;
};

struct QuotientCommand {
    ChainPtr chain;
    ShiftPtr shift;
};

struct VerifyCommand {
    std::string suite; // correspondences | theorem3 | all
    int n = 3;
    int m = 2;
};

// A fully parsed invocation. Parsing is total: every failure is a ParseError
// with an exact line/column position and the expected token.
struct Command {
    std::variant<ConstructCommand, ClassifyCommand, RankCommand, QuotientCommand, VerifyCommand>
        payload;
    long cap = kDefaultEquivalenceCap;
    std::optional<std::string> json_path;
};

Command parse_dsl(const std::string& text);

// Canonical text form; parse_dsl(render_command(c)) equals c.
std::string render_command(const Command& cmd);

bool command_equal(const Command& a, const Command& b);

// Term-only entry points for flag values and tests.
ChainPtr parse_chain_term(const std::string& text);
ShiftPtr parse_shift_term(const std::string& text);

} // namespace hahnrank
