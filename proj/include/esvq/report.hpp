#pragma once

// Verification reports: a flat list of named pass/fail checks with optional
// detail text.  Suites stream each check through a sink as it completes so
// long runs show progress; the summary line is machine-parseable.

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace esvq {

struct Check {
    std::string name;
    bool        pass;
    std::string detail;
};

using CheckSink = std::function<void(const Check&)>;

class Report {
public:
    Report() = default;
    explicit Report(CheckSink sink) : sink_(std::move(sink)) {}

    void add(std::string name, bool pass, std::string detail = "") {
        checks_.push_back({std::move(name), pass, std::move(detail)});
        if (sink_) sink_(checks_.back());
    }

    // Appends checks already emitted by a child report (no re-emission).
    void merge(const Report& other) {
        checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
    }

    bool all_pass() const {
        for (const auto& c : checks_)
            if (!c.pass) return false;
        return true;
    }

    std::size_t size() const { return checks_.size(); }
    const std::vector<Check>& checks() const { return checks_; }

    const Check* first_failure() const {
        for (const auto& c : checks_)
            if (!c.pass) return &c;
        return nullptr;
    }

    std::string summary() const {
        if (const Check* f = first_failure())
            return "FAIL at " + f->name + " n=" + std::to_string(size());
        return "PASS n=" + std::to_string(size());
    }

    const CheckSink& sink() const { return sink_; }

private:
    std::vector<Check> checks_;
    CheckSink          sink_;
};

} // namespace esvq
