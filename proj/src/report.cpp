#include "report.hpp"

#include <sstream>

namespace tspp5 {
namespace {

void append_escaped(std::ostringstream& os, const std::string& s) {
    os << '"';
    for (char c : s) {
        switch (c) {
        case '"': os << "\\\""; break;
        case '\\': os << "\\\\"; break;
        case '\n': os << "\\n"; break;
        default: os << c;
        }
    }
    os << '"';
}

} // namespace

void Report::param(std::string key, std::string value) {
    params.emplace_back(std::move(key), std::move(value));
}

void Report::param(std::string key, long value) {
    params.emplace_back(std::move(key), std::to_string(value));
}

void Report::param(std::string key, const Int& value) {
    params.emplace_back(std::move(key), value.get_str());
}

void Report::witness(std::string index, std::string value) {
    witnesses.emplace_back(std::move(index), std::move(value));
}

void Report::witness(std::string index, const Int& value) {
    witnesses.emplace_back(std::move(index), value.get_str());
}

void Report::witness(long index, const Int& value) {
    witnesses.emplace_back(std::to_string(index), value.get_str());
}

std::string Report::to_json() const {
    std::ostringstream os;
    os << "{\"name\":";
    append_escaped(os, name);
    os << ",\"params\":{";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) os << ',';
        append_escaped(os, params[i].first);
        os << ':';
        append_escaped(os, params[i].second);
    }
    os << "},\"status\":\"" << (passed() ? "pass" : "fail") << "\",\"witnesses\":[";
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
        if (i) os << ',';
        os << "{\"index\":";
        append_escaped(os, witnesses[i].first);
        os << ",\"value\":";
        append_escaped(os, witnesses[i].second);
        os << '}';
    }
    os << "],\"elapsedMillis\":" << elapsed_ms << '}';
    return os.str();
}

std::string Report::summary_line() const {
    std::ostringstream os;
    os << (passed() ? "pass" : "FAIL") << "  " << name << "  (" << elapsed_ms << " ms";
    if (!passed()) os << ", " << witnesses.size() << " witnesses";
    os << ')';
    return os.str();
}

} // namespace tspp5
