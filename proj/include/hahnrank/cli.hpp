#pragma once

#include "hahnrank/dsl.hpp"
#include "hahnrank/report.hpp"

namespace hahnrank {

// Pure command execution: the human summary, the machine JSON-lines report
// and the exit code (0 all pass, 1 any failed check). Usage and parse
// problems surface as exceptions and map to exit code 2 in the front end.
struct RunResult {
    int exit_code = 0;
    std::string human;
    std::string machine;
};

RunResult run(const Command& cmd);

// Joins the arguments into one command text, parses and runs it, prints the
// human summary to stdout and writes the JSON report to --json when given.
int cli_main(int argc, const char* const* argv);

} // namespace hahnrank
