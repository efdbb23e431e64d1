#pragma once

#include <string>
#include <utility>
#include <vector>

#include "holoform/atlas.hpp"

namespace holoform {

/// Structured-text section file (versioned header, then one form body per
/// chart in canonical rendering). Deterministic: equal sections produce
/// byte-identical files.
std::string write_section(const Section& s);

/// Inverse of write_section. Throws std::invalid_argument with a line
/// location on malformed input.
Section read_section(const std::string& text);

/// Generic machine-readable certificate: ordered header fields plus body
/// lines. Serialization is byte-deterministic and round-trips.
struct Certificate {
    std::vector<std::pair<std::string, std::string>> headers;
    std::vector<std::string> body;

    void add(const std::string& key, const std::string& value) {
        headers.emplace_back(key, value);
    }
};

std::string write_certificate(const Certificate& c);
Certificate read_certificate(const std::string& text);

std::string model_to_string(const ChartModel& m);
ChartModel model_from_string(const std::string& text);

}  // namespace holoform
