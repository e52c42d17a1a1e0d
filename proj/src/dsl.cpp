#include "hahnrank/dsl.hpp"

#include <cctype>

namespace hahnrank {

const char* rank_selector_name(RankSelector which) {
    switch (which) {
    case RankSelector::All: return "all";
    case RankSelector::Rank: return "rank";
    case RankSelector::Principal: return "principal";
    case RankSelector::Sigma: return "sigma";
    case RankSelector::SigmaPrincipal: return "sigmaprincipal";
    case RankSelector::Intersection: return "intersection";
    }
    return "<unknown>";
}

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                       text_[pos_] == '\n' || text_[pos_] == '\r'))
            ++pos_;
    }

    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& expected) const {
        int line = 1;
        int column = 1;
        for (size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(line, column, expected);
    }

    void expect_char(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("'") + c + "'");
        ++pos_;
    }

    bool try_char(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    // [A-Za-z][A-Za-z0-9]*
    std::string identifier(const std::string& expected) {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0))
            ++pos_;
        if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start])) != 0) {
            pos_ = start;
            fail(expected);
        }
        return text_.substr(start, pos_ - start);
    }

    long integer(const std::string& expected = "integer") {
        skip_ws();
        size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-')
            ++pos_;
        size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0)
            ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            skip_ws();
            fail(expected);
        }
        return std::stol(text_.substr(start, pos_ - start));
    }

    Rational rational() {
        long num = integer("rational");
        if (try_char('/')) {
            long den = integer("denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    // Bare token up to whitespace, for file paths.
    std::string bare_token(const std::string& expected) {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail(expected);
        return text_.substr(start, pos_ - start);
    }

    size_t position() const { return pos_; }
    void rewind(size_t pos) { pos_ = pos; }

private:
    const std::string& text_;
    size_t pos_ = 0;
};

ChainPtr parse_chain(Cursor& cur);
ShiftPtr parse_shift(Cursor& cur);

ChainPtr parse_chain(Cursor& cur) {
    std::string word = cur.identifier("chain term (finite|Q|Qnn|singleton|concat|reverse)");
    if (word == "finite") {
        cur.expect_char('(');
        long n = cur.integer();
        if (n < 1)
            cur.fail("positive chain size");
        cur.expect_char(')');
        return chains::finite(static_cast<int>(n));
    }
    if (word == "Q")
        return chains::rationals();
    if (word == "Qnn")
        return chains::non_neg_rationals();
    if (word == "singleton")
        return chains::singleton();
    if (word == "concat") {
        cur.expect_char('(');
        ChainPtr index = parse_chain(cur);
        cur.expect_char(',');
        ChainPtr component = parse_chain(cur);
        cur.expect_char(')');
        return chains::concat(std::move(index), std::move(component));
    }
    if (word == "reverse") {
        cur.expect_char('(');
        ChainPtr inner = parse_chain(cur);
        cur.expect_char(')');
        return chains::reverse(std::move(inner));
    }
    cur.fail("chain term (finite|Q|Qnn|singleton|concat|reverse)");
}

ShiftPtr parse_shift(Cursor& cur) {
    std::string word =
        cur.identifier("shift term (identity|translate|scale|percopy|fixzero|clampdec)");
    if (word == "identity")
        return shifts::identity();
    if (word == "translate") {
        cur.expect_char('(');
        Rational q = cur.rational();
        cur.expect_char(')');
        return shifts::translate(std::move(q));
    }
    if (word == "scale") {
        cur.expect_char('(');
        Rational q = cur.rational();
        cur.expect_char(')');
        if (!q.is_positive())
            cur.fail("positive scale factor");
        return shifts::scale(std::move(q));
    }
    if (word == "percopy") {
        cur.expect_char('(');
        ShiftPtr inner = parse_shift(cur);
        cur.expect_char(')');
        return shifts::per_copy(std::move(inner));
    }
    if (word == "fixzero") {
        cur.expect_char('(');
        ShiftPtr inner = parse_shift(cur);
        cur.expect_char(')');
        return shifts::fix_zero_per_copy(std::move(inner));
    }
    if (word == "clampdec")
        return shifts::clamped_decrement();
    cur.fail("shift term (identity|translate|scale|percopy|fixzero|clampdec)");
}

RankSelector parse_selector(Cursor& cur) {
    const char* expected =
        "selector (all|rank|principal|sigma|sigmaprincipal|intersection)";
    std::string word = cur.identifier(expected);
    if (word == "all")
        return RankSelector::All;
    if (word == "rank")
        return RankSelector::Rank;
    if (word == "principal")
        return RankSelector::Principal;
    if (word == "sigma")
        return RankSelector::Sigma;
    if (word == "sigmaprincipal")
        return RankSelector::SigmaPrincipal;
    if (word == "intersection")
        return RankSelector::Intersection;
    cur.fail(expected);
}

struct FlagSet {
    std::optional<ChainPtr> chain;
    std::optional<ShiftPtr> shift;
    std::optional<ShiftPtr> eta;
    std::optional<RankSelector> which;
    std::optional<long> m;
    std::optional<long> n;
    std::optional<long> cap;
    std::optional<std::string> json;
};

// Flags are parsed uniformly; each subcommand then states which ones it
// accepts so the error message can list them.
FlagSet parse_flags(Cursor& cur, const std::string& allowed) {
    FlagSet flags;
    while (!cur.eof()) {
        size_t at = cur.position();
        if (!cur.try_char('-') || !cur.try_char('-')) {
            cur.rewind(at);
            cur.fail("flag (" + allowed + ")");
        }
        std::string name = cur.identifier("flag name");
        bool known = ("," + allowed + ",").find(",--" + name + ",") != std::string::npos;
        if (!known) {
            cur.rewind(at);
            cur.fail("flag (" + allowed + ")");
        }
        auto require_fresh = [&](bool already) {
            if (already) {
                cur.rewind(at);
                cur.fail("each flag at most once");
            }
        };
        if (name == "chain") {
            require_fresh(flags.chain.has_value());
            flags.chain = parse_chain(cur);
        } else if (name == "shift") {
            require_fresh(flags.shift.has_value());
            flags.shift = parse_shift(cur);
        } else if (name == "eta") {
            require_fresh(flags.eta.has_value());
            flags.eta = parse_shift(cur);
        } else if (name == "which") {
            require_fresh(flags.which.has_value());
            flags.which = parse_selector(cur);
        } else if (name == "m") {
            require_fresh(flags.m.has_value());
            flags.m = cur.integer();
        } else if (name == "n") {
            require_fresh(flags.n.has_value());
            flags.n = cur.integer();
        } else if (name == "cap") {
            require_fresh(flags.cap.has_value());
            flags.cap = cur.integer();
        } else if (name == "json") {
            require_fresh(flags.json.has_value());
            flags.json = cur.bare_token("path");
        }
    }
    return flags;
}

void apply_common(Command& cmd, const FlagSet& flags, Cursor& cur) {
    if (flags.cap) {
        if (*flags.cap < 1)
            cur.fail("cap of at least 1");
        cmd.cap = *flags.cap;
    }
    cmd.json_path = flags.json;
}

} // namespace

Command parse_dsl(const std::string& text) {
    Cursor cur(text);
    std::string sub = cur.identifier("subcommand (construct|classify|rank|quotient|verify)");
    Command cmd;
    if (sub == "construct") {
        std::string recipe = cur.identifier("recipe (fixedpoint|omega)");
        if (recipe != "fixedpoint" && recipe != "omega")
            cur.fail("recipe (fixedpoint|omega)");
        FlagSet flags = parse_flags(cur, recipe == "fixedpoint"
                                             ? "--m,--eta,--cap,--json"
                                             : "--m,--cap,--json");
        ConstructCommand c;
        c.recipe = recipe;
        if (flags.m) {
            if (*flags.m < 1)
                cur.fail("copy count of at least 1");
            c.m = static_cast<int>(*flags.m);
        }
        c.eta = flags.eta;
        cmd.payload = std::move(c);
        apply_common(cmd, flags, cur);
        return cmd;
    }
    if (sub == "classify") {
        FlagSet flags = parse_flags(cur, "--chain,--shift,--cap,--json");
        if (!flags.chain)
            cur.fail("--chain <chain>");
        if (!flags.shift)
            cur.fail("--shift <shift>");
        cmd.payload = ClassifyCommand{*flags.chain, *flags.shift};
        apply_common(cmd, flags, cur);
        return cmd;
    }
    if (sub == "rank") {
        FlagSet flags = parse_flags(cur, "--chain,--shift,--which,--cap,--json");
        if (!flags.chain)
            cur.fail("--chain <chain>");
        RankCommand c;
        c.chain = *flags.chain;
        c.shift = flags.shift;
        if (flags.which)
            c.which = *flags.which;
        cmd.payload = std::move(c);
        apply_common(cmd, flags, cur);
        return cmd;
    }
    if (sub == "quotient") {
        FlagSet flags = parse_flags(cur, "--chain,--shift,--cap,--json");
        if (!flags.chain)
            cur.fail("--chain <chain>");
        if (!flags.shift)
            cur.fail("--shift <shift>");
        cmd.payload = QuotientCommand{*flags.chain, *flags.shift};
        apply_common(cmd, flags, cur);
        return cmd;
    }
    if (sub == "verify") {
        std::string suite = cur.identifier("suite (correspondences|theorem3|all)");
        if (suite != "correspondences" && suite != "theorem3" && suite != "all")
            cur.fail("suite (correspondences|theorem3|all)");
        FlagSet flags = parse_flags(cur, "--n,--m,--cap,--json");
        VerifyCommand c;
        c.suite = suite;
        if (flags.n) {
            if (*flags.n < 1)
                cur.fail("size of at least 1");
            c.n = static_cast<int>(*flags.n);
        }
        if (flags.m) {
            if (*flags.m < 1)
                cur.fail("copy count of at least 1");
            c.m = static_cast<int>(*flags.m);
        }
        cmd.payload = std::move(c);
        apply_common(cmd, flags, cur);
        return cmd;
    }
    Cursor fresh(text);
    fresh.fail("subcommand (construct|classify|rank|quotient|verify)");
}

std::string render_command(const Command& cmd) {
    std::string out;
    if (const auto* c = std::get_if<ConstructCommand>(&cmd.payload)) {
        out = "construct " + c->recipe + " --m " + std::to_string(c->m);
        if (c->eta)
            out += " --eta " + render_shift(*c->eta);
    } else if (const auto* c = std::get_if<ClassifyCommand>(&cmd.payload)) {
        out = "classify --chain " + render_chain(c->chain) + " --shift " + render_shift(c->shift);
    } else if (const auto* c = std::get_if<RankCommand>(&cmd.payload)) {
        out = "rank --chain " + render_chain(c->chain);
        if (c->shift)
            out += " --shift " + render_shift(*c->shift);
        if (c->which != RankSelector::All)
            out += " --which " + std::string(rank_selector_name(c->which));
    } else if (const auto* c = std::get_if<QuotientCommand>(&cmd.payload)) {
        out = "quotient --chain " + render_chain(c->chain) + " --shift " + render_shift(c->shift);
    } else if (const auto* c = std::get_if<VerifyCommand>(&cmd.payload)) {
        out = "verify " + c->suite + " --n " + std::to_string(c->n) + " --m " +
              std::to_string(c->m);
    }
    if (cmd.cap != kDefaultEquivalenceCap)
        out += " --cap " + std::to_string(cmd.cap);
    if (cmd.json_path)
        out += " --json " + *cmd.json_path;
    return out;
}

bool command_equal(const Command& a, const Command& b) {
    if (a.cap != b.cap || a.json_path != b.json_path ||
        a.payload.index() != b.payload.index())
        return false;
    if (const auto* ca = std::get_if<ConstructCommand>(&a.payload)) {
        const auto* cb = std::get_if<ConstructCommand>(&b.payload);
        if (ca->recipe != cb->recipe || ca->m != cb->m ||
            ca->eta.has_value() != cb->eta.has_value())
            return false;
        return !ca->eta || shift_equal(*ca->eta, *cb->eta);
    }
    if (const auto* ca = std::get_if<ClassifyCommand>(&a.payload)) {
        const auto* cb = std::get_if<ClassifyCommand>(&b.payload);
        return chain_equal(ca->chain, cb->chain) && shift_equal(ca->shift, cb->shift);
    }
    if (const auto* ca = std::get_if<RankCommand>(&a.payload)) {
        const auto* cb = std::get_if<RankCommand>(&b.payload);
        if (!chain_equal(ca->chain, cb->chain) || ca->which != cb->which ||
            ca->shift.has_value() != cb->shift.has_value())
            return false;
        return !ca->shift || shift_equal(*ca->shift, *cb->shift);
    }
    if (const auto* ca = std::get_if<QuotientCommand>(&a.payload)) {
        const auto* cb = std::get_if<QuotientCommand>(&b.payload);
        return chain_equal(ca->chain, cb->chain) && shift_equal(ca->shift, cb->shift);
    }
    const auto* ca = std::get_if<VerifyCommand>(&a.payload);
    const auto* cb = std::get_if<VerifyCommand>(&b.payload);
    return ca->suite == cb->suite && ca->n == cb->n && ca->m == cb->m;
}

ChainPtr parse_chain_term(const std::string& text) {
    Cursor cur(text);
    ChainPtr chain = parse_chain(cur);
    if (!cur.eof())
        cur.fail("end of input");
    return chain;
}

ShiftPtr parse_shift_term(const std::string& text) {
    Cursor cur(text);
    ShiftPtr shift = parse_shift(cur);
    if (!cur.eof())
        cur.fail("end of input");
    return shift;
}

} // namespace hahnrank
