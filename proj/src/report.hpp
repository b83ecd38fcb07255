#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "laurent.hpp"

namespace tspp5 {

// Structured result of a named check. A report passes iff it carries no
// witnesses; every runner fills params with the exact inputs it used so runs
// can be diffed.
struct Report {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::pair<std::string, std::string>> witnesses; // (index, value)
    long long elapsed_ms = 0;

    bool passed() const { return witnesses.empty(); }

    void param(std::string key, std::string value);
    void param(std::string key, long value);
    void param(std::string key, const Int& value);
    void witness(std::string index, std::string value);
    void witness(std::string index, const Int& value);
    void witness(long index, const Int& value);

    std::string to_json() const;
    std::string summary_line() const; // "pass  name  (12 ms)"
};

// Fills elapsed_ms when destroyed.
class ReportTimer {
public:
    explicit ReportTimer(Report& r)
        : report_(r), start_(std::chrono::steady_clock::now()) {}
    ~ReportTimer() {
        auto dt = std::chrono::steady_clock::now() - start_;
        report_.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
    }

private:
    Report& report_;
    std::chrono::steady_clock::time_point start_;
};

} // namespace tspp5
