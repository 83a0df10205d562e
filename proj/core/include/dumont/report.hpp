#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dumont/qseries.hpp"

namespace dumont {

/// First point where a check failed: where it was looking (grid point,
/// matrix entry, integer n), the exponent of the mismatched coefficient,
/// and the two values.
struct Discrepancy {
    std::string location;
    Exp exponent = 0;
    Int lhs;
    Int rhs;
};

/// Machine-readable outcome of one verification run.
struct VerificationReport {
    std::string check_name;
    std::vector<std::pair<std::string, std::string>> parameters;
    bool pass = true;
    std::optional<Discrepancy> first_discrepancy;
    std::int64_t elapsed_ms = 0;

    void add_parameter(std::string key, std::string value) {
        parameters.emplace_back(std::move(key), std::move(value));
    }

    /// Records the failure; only the first one sticks (pass <=> no
    /// discrepancy recorded).
    void fail(Discrepancy d) {
        if (!first_discrepancy) {
            first_discrepancy = std::move(d);
            pass = false;
        }
    }

    /// Compares two series and records the first mismatch under `location`.
    /// Returns true when the series agree on their common known range.
    bool check_series(const std::string& location, const QSeries& lhs, const QSeries& rhs);
};

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

/// Line-delimited JSON form of a report. Deterministic: elapsed_ms is not
/// part of it (see to_meta_json_line).
std::string to_json_line(const VerificationReport& report);

/// Companion metadata line carrying the timing, excluded from the
/// byte-identical-output contract.
std::string to_meta_json_line(const VerificationReport& report);

/// check <TAB> key=value;... <TAB> pass <TAB> discrepancy-or-"-"
std::string to_tsv_line(const VerificationReport& report);

std::string to_human_line(const VerificationReport& report);

}  // namespace dumont
