#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace hahnrank {

using json = nlohmann::ordered_json;

// One checked property. Reports serialize as JSON lines with a stable key
// order so repeated runs are byte-identical.
struct ReportEntry {
    std::string case_id;
    std::string property;
    std::string status; // pass | fail | skipped
    std::string witness;

    json to_json() const {
        return json{{"case_id", case_id}, {"property", property}, {"status", status},
                    {"witness", witness}};
    }
};

class Report {
public:
    void pass(std::string case_id, std::string property, std::string witness = "") {
        entries_.push_back({std::move(case_id), std::move(property), "pass", std::move(witness)});
    }
    void fail(std::string case_id, std::string property, std::string witness = "") {
        entries_.push_back({std::move(case_id), std::move(property), "fail", std::move(witness)});
    }
    void skip(std::string case_id, std::string property, std::string witness = "") {
        entries_.push_back(
            {std::move(case_id), std::move(property), "skipped", std::move(witness)});
    }
    void check(std::string case_id, std::string property, bool ok, std::string witness = "") {
        if (ok)
            pass(std::move(case_id), std::move(property), std::move(witness));
        else
            fail(std::move(case_id), std::move(property), std::move(witness));
    }

    void merge(const Report& other) {
        entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
    }

    const std::vector<ReportEntry>& entries() const { return entries_; }

    long failures() const {
        long n = 0;
        for (const auto& e : entries_)
            if (e.status == "fail")
                ++n;
        return n;
    }

    bool all_passed() const { return failures() == 0; }

    std::string to_jsonl() const {
        std::string out;
        for (const auto& e : entries_) {
            out += e.to_json().dump();
            out += '\n';
        }
        return out;
    }

private:
    std::vector<ReportEntry> entries_;
};

} // namespace hahnrank
