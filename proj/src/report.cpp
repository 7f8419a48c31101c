#include <cdiag/errors.hpp>
#include <cdiag/report.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>

using nlohmann::ordered_json;
using std::size_t;
using std::string;
using std::vector;

namespace cdiag {

namespace {

auto number(const BigInt & value) -> ordered_json
{
    if (value >= 0 && value <= BigInt(std::numeric_limits<std::uint64_t>::max()))
        return static_cast<std::uint64_t>(value);
    return value.str();
}

auto big(const ordered_json & value) -> BigInt
{
    if (value.is_number_unsigned())
        return BigInt(value.get<std::uint64_t>());
    if (value.is_number_integer())
        return BigInt(value.get<std::int64_t>());
    if (value.is_string())
        return BigInt(value.get<string>());
    throw InvalidArgument("expected an integer in report JSON");
}

}

auto Report::failed() const -> bool
{
    return std::any_of(checks.begin(), checks.end(), [](const ReportCheck & c) { return c.status == "fail"; });
}

auto Report::add_check(string name, bool ok, string details) -> void
{
    checks.push_back(ReportCheck{std::move(name), ok ? "pass" : "fail", std::move(details)});
}

auto to_text(const Report & report) -> string
{
    std::ostringstream out;
    out << "# cdiag " << CDIAG_VERSION << ' ' << report.command << '\n';
    out << "command: " << report.command << '\n';
    out << "config:";
    for (const auto & [key, value] : report.config)
        out << ' ' << key << '=' << value;
    out << '\n';

    if (! report.components.empty()) {
        vector<vector<string>> rows{{"level", "cell", "representative", "orbit", "group", "order", "policy"}};
        for (const auto & c : report.components)
            rows.push_back({std::to_string(c.level), c.cell, c.representative, c.orbit_size.str(), c.group_expr,
                c.group_order.str(), c.policy});
        vector<size_t> width(rows[0].size(), 0);
        for (const auto & row : rows)
            for (size_t i = 0; i < row.size(); ++i)
                width[i] = std::max(width[i], row[i].size());
        out << "components: " << report.components.size() << '\n';
        for (const auto & row : rows) {
            string line = " ";
            for (size_t i = 0; i < row.size(); ++i)
                line += ' ' + row[i] + string(i + 1 < row.size() ? width[i] - row[i].size() : 0, ' ');
            out << line << '\n';
        }
    }
    out << "checks:\n";
    for (const auto & c : report.checks)
        out << "  [" << c.status << "] " << c.name << ": " << c.details << '\n';
    auto failures = std::count_if(report.checks.begin(), report.checks.end(), [](const ReportCheck & c) { return c.status == "fail"; });
    out << "result: " << (failures ? "FAIL" : "OK") << " (" << report.checks.size() << " checks, " << failures << " failed)\n";
    return out.str();
}

auto to_json_text(const Report & report) -> string
{
    ordered_json j;
    j["command"] = report.command;
    j["config"] = ordered_json::object();
    for (const auto & [key, value] : report.config)
        j["config"][key] = value;
    j["components"] = ordered_json::array();
    for (const auto & c : report.components)
        j["components"].push_back({{"level", c.level}, {"cell", c.cell}, {"representative", c.representative},
            {"orbit_size", number(c.orbit_size)}, {"group_expr", c.group_expr}, {"group_order", number(c.group_order)},
            {"policy", c.policy}});
    j["checks"] = ordered_json::array();
    for (const auto & c : report.checks)
        j["checks"].push_back({{"name", c.name}, {"status", c.status}, {"details", c.details}});
    return j.dump(2) + "\n";
}

auto parse_report_json(const string & text) -> Report
{
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    }
    catch (const ordered_json::exception & e) {
        throw InvalidArgument(string("malformed report JSON: ") + e.what());
    }
    Report r;
    try {
        r.command = j.at("command").get<string>();
        for (const auto & [key, value] : j.at("config").items())
            r.config.emplace_back(key, value.get<string>());
        for (const auto & c : j.at("components"))
            r.components.push_back(ReportComponent{c.at("level").get<int>(), c.at("cell").get<string>(),
                c.at("representative").get<string>(), big(c.at("orbit_size")), c.at("group_expr").get<string>(),
                big(c.at("group_order")), c.at("policy").get<string>()});
        for (const auto & c : j.at("checks"))
            r.checks.push_back(ReportCheck{c.at("name").get<string>(), c.at("status").get<string>(), c.at("details").get<string>()});
    }
    catch (const ordered_json::exception & e) {
        throw InvalidArgument(string("report JSON does not follow the schema: ") + e.what());
    }
    return r;
}

}
