#pragma once

#include <cdiag/bigint.hpp>

#include <string>
#include <utility>
#include <vector>

namespace cdiag {

struct ReportComponent
{
    int level = 0;
    std::string cell;
    std::string representative;
    BigInt orbit_size;
    std::string group_expr;
    BigInt group_order;
    std::string policy;

    friend auto operator==(const ReportComponent &, const ReportComponent &) -> bool = default;
};

struct ReportCheck
{
    std::string name;
    std::string status; ///< pass, fail or note
    std::string details;

    friend auto operator==(const ReportCheck &, const ReportCheck &) -> bool = default;
};

struct Report
{
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<ReportComponent> components;
    std::vector<ReportCheck> checks;

    auto failed() const -> bool;
    auto add_check(std::string name, bool ok, std::string details) -> void;

    friend auto operator==(const Report &, const Report &) -> bool = default;
};

/// First line: `# cdiag <version> <command>`; the rest is deterministic.
auto to_text(const Report & report) -> std::string;

/// Counts and orders are JSON numbers when they fit in 64 bits, decimal strings otherwise.
auto to_json_text(const Report & report) -> std::string;
auto parse_report_json(const std::string & text) -> Report;

}
