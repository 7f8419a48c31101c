#include <cdiag/classifying.hpp>
#include <cdiag/commands.hpp>
#include <cdiag/finvect.hpp>

#include <algorithm>
#include <charconv>
#include <map>

using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace cdiag {

namespace {

auto parse_int(string_view text, string_view what) -> int
{
    int value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size())
        throw InvalidArgument("expected an integer for " + string(what) + ", got '" + string(text) + "'");
    return value;
}

auto object_tuple(const FiniteCategory & cat, const Chain & chain) -> string
{
    string s = "(";
    for (size_t i = 0; i < chain.objects.size(); ++i)
        s += (i ? "," : "") + cat.object_name(chain.objects[i]);
    return s + ")";
}

auto cell_name(int n, int m) -> string
{
    return "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

auto base_config(const string & source, const Limits & limits) -> vector<std::pair<string, string>>
{
    vector<std::pair<string, string>> config{{"input", source}};
    for (auto & entry : limits_config(limits))
        config.push_back(std::move(entry));
    return config;
}

auto add_diff(Report & report, const DiffReport & diff, const string & what) -> void
{
    string details = std::to_string(diff.mismatches) + " mismatches over " + std::to_string(diff.rows.size()) + " components";
    for (const auto & p : diff.problems)
        details += "; " + p;
    for (const auto & row : diff.rows)
        if (! row.matches)
            details += "; " + cell_name(row.n, row.m) + " " + row.key + ": " + row.detail;
    report.add_check(what, diff.mismatches == 0, details);
    for (const auto & note : diff.notes)
        report.checks.push_back(ReportCheck{note.name, note.status, note.detail});
}

auto diff_components(Report & report, const DiffReport & diff) -> void
{
    for (const auto & row : diff.rows)
        report.components.push_back(ReportComponent{1, cell_name(row.n, row.m), row.key, row.orbit_size, row.group_expr,
            row.observed_order, row.policy});
}

}

auto builtin_category(string_view selector) -> FiniteCategory
{
    auto colon = selector.find(':');
    auto head = selector.substr(0, colon);
    auto rest = colon == string_view::npos ? string_view{} : selector.substr(colon + 1);
    if (head == "ordinal")
        return ordinal(parse_int(rest, "ordinal:<m>"));
    if (head == "iso-interval" && rest.empty())
        return iso_interval();
    if (head == "walking-arrow" && rest.empty())
        return walking_arrow();
    if (head == "delta")
        return truncated_delta(parse_int(rest, "delta:<M>"));
    if (head == "finset")
        return finset_skeleton(parse_int(rest, "finset:<N>"));
    if (head == "group" && rest.size() >= 2) {
        auto k = parse_int(rest.substr(1), "group:S<k>");
        if (rest[0] == 'S') {
            if (k < 0 || k > 6)
                throw InvalidArgument("group:S<k> supports 0 <= k <= 6");
            return one_object_group(materialize(GroupExpr::symmetric(k)));
        }
        if (rest[0] == 'C') {
            if (k < 1 || k > 512)
                throw InvalidArgument("group:C<k> supports 1 <= k <= 512");
            return one_object_group(materialize(GroupExpr::cyclic(k)));
        }
    }
    if (head == "vect") {
        auto second = rest.find(':');
        if (second == string_view::npos)
            throw InvalidArgument("expected vect:<dim>:<q>");
        return vect_skeleton(parse_int(rest.substr(0, second), "vect:<dim>"), parse_int(rest.substr(second + 1), "vect:<q>"));
    }
    throw InvalidArgument("unknown builtin '" + string(selector)
        + "' (expected ordinal:<m>, group:S<k>, group:C<k>, iso-interval, walking-arrow, delta:<M>, finset:<N>, vect:<dim>:<q>)");
}

auto apply_limit_overrides(Limits & limits, string_view overrides) -> void
{
    size_t at = 0;
    while (at < overrides.size()) {
        auto comma = overrides.find(',', at);
        if (comma == string_view::npos)
            comma = overrides.size();
        auto item = overrides.substr(at, comma - at);
        at = comma + 1;
        if (item.empty())
            continue;
        auto eq = item.find('=');
        if (eq == string_view::npos)
            throw InvalidArgument("limit override '" + string(item) + "' is not name=value");
        auto name = item.substr(0, eq);
        auto text = item.substr(eq + 1);
        size_t value = 0;
        auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || end != text.data() + text.size() || value == 0)
            throw InvalidArgument("limit " + string(name) + " needs a positive integer, got '" + string(text) + "'");
        if (name == "chain_limit")
            limits.chain_limit = value;
        else if (name == "scan_limit")
            limits.scan_limit = value;
        else if (name == "table_limit")
            limits.table_limit = value;
        else if (name == "iso_limit")
            limits.iso_limit = value;
        else
            throw InvalidArgument("unknown limit '" + string(name) + "'");
    }
}

auto limits_config(const Limits & limits) -> vector<std::pair<string, string>>
{
    return {{"chain_limit", std::to_string(limits.chain_limit)}, {"scan_limit", std::to_string(limits.scan_limit)},
        {"table_limit", std::to_string(limits.table_limit)}, {"iso_limit", std::to_string(limits.iso_limit)}};
}

auto decompose_report(const FiniteCategory & cat, const string & source, int from_level, int to_level, const Limits & limits)
    -> Report
{
    if (from_level < 0 || to_level < from_level)
        throw InvalidArgument("levels must satisfy 0 <= from <= to");
    Report report;
    report.command = "decompose";
    report.config = base_config(source, limits);
    report.config.emplace_back("levels", std::to_string(from_level) + ".." + std::to_string(to_level));
    for (int n = from_level; n <= to_level; ++n) {
        auto d = level_decomposition(cat, n, limits);
        size_t total = 0;
        bool divides = true;
        for (const auto & c : d.components) {
            total += c.orbit.orbit_size;
            divides = divides && c.orbit.ambient_order % c.orbit.stabilizer.order == 0;
            report.components.push_back(ReportComponent{n, object_tuple(cat, c.orbit.representative),
                describe(cat, c.orbit.representative), c.orbit.orbit_size, c.group_text(), c.orbit.stabilizer.order, c.policy});
        }
        report.add_check("level " + std::to_string(n) + " orbit sizes", total == d.chain_count,
            std::to_string(d.components.size()) + " components covering " + std::to_string(total) + " of "
                + std::to_string(d.chain_count) + " chains");
        report.add_check("level " + std::to_string(n) + " stabilizer orders", divides,
            "every stabilizer order divides its ambient automorphism order");
    }
    if (from_level == 0 && to_level >= 1) {
        auto fd = face_degeneracy_report(cat, limits);
        string details;
        for (const auto & f : fd.faces)
            details += (details.empty() ? "" : "; ") + ("c" + std::to_string(f.component) + ": d1->" + std::to_string(f.source_component)
                + ", d0->" + std::to_string(f.target_component));
        report.add_check("face maps", std::all_of(fd.faces.begin(), fd.faces.end(), [](const FaceRow & f) { return f.well_defined; }),
            details);
        details.clear();
        for (const auto & d : fd.degeneracies)
            details += (details.empty() ? "" : "; ") + ("c" + std::to_string(d.component) + ": s0->" + std::to_string(d.image_component)
                + " (order " + d.image_stabilizer_order.str() + ")");
        report.add_check("degeneracy maps", fd.ok(), details);
    }
    return report;
}

auto segal_report(const FiniteCategory & cat, const string & source, int from_level, int to_level, const Limits & limits)
    -> Report
{
    if (from_level < 2 || to_level < from_level)
        throw InvalidArgument("Segal levels must satisfy 2 <= from <= to");
    Report report;
    report.command = "segal";
    report.config = base_config(source, limits);
    report.config.emplace_back("levels", std::to_string(from_level) + ".." + std::to_string(to_level));
    for (int n = from_level; n <= to_level; ++n) {
        auto s = segal_check(cat, n, limits);
        report.add_check("segal level " + std::to_string(n), s.ok(),
            std::to_string(s.chain_count) + (s.chain_count == s.fiber_product_count ? " = " : " != ")
                + std::to_string(s.fiber_product_count) + (s.bijection_verified ? ", bijection verified" : ", bijection failed"));
    }
    return report;
}

auto completeness_report(const FiniteCategory & cat, const string & source, const Limits & limits) -> Report
{
    Report report;
    report.command = "complete";
    report.config = base_config(source, limits);
    auto c = completeness_check(cat, limits);
    for (const auto & s : c.iso_classes)
        report.components.push_back(ReportComponent{0, "iso(C)", s.representative, s.class_size, "Aut", s.aut_order, c.policy});
    for (const auto & s : c.interval_classes)
        report.components.push_back(ReportComponent{0, "iso(C^I[1])", s.representative, s.class_size, "Aut", s.aut_order, c.policy});
    report.add_check("class counts", c.class_counts_match,
        std::to_string(c.iso_classes.size()) + " vs " + std::to_string(c.interval_classes.size()));
    report.add_check("automorphism orders", c.aut_orders_match, "multisets of automorphism group orders");
    report.add_check("automorphism groups", c.groups_matched, "matching of classes by " + c.policy);
    return report;
}

auto discrete_report(const FiniteCategory & cat, const string & source, int truncation, const Limits & limits) -> Report
{
    Report report;
    report.command = "discrete";
    report.config = base_config(source, limits);
    report.config.emplace_back("truncation", std::to_string(truncation));
    auto d = is_discrete_classifying(cat, truncation, limits);
    report.checks.push_back(ReportCheck{"iso(C) discrete", d.only_identity_isos ? "pass" : "note",
        d.only_identity_isos ? "the only isomorphisms are identities" : "a nonidentity isomorphism exists"});
    for (const auto & l : d.levels)
        report.checks.push_back(ReportCheck{"level " + std::to_string(l.level), "note",
            std::to_string(l.components) + " components" + (l.all_singleton_trivial ? ", all singleton with trivial stabilizer" : "")});
    report.add_check("levelwise shape agrees", d.consistent(),
        "discreteness of iso(C) matches singleton trivial components at every level <= " + std::to_string(truncation));
    return report;
}

auto nerve_report(const FiniteCategory & groupoid, const string & source, int truncation, const Limits & limits) -> Report
{
    Report report;
    report.command = "nerve";
    report.config = base_config(source, limits);
    report.config.emplace_back("truncation", std::to_string(truncation));
    auto s = nerve_truncation(groupoid, truncation, 4, limits.chain_limit);
    string sizes;
    for (int n = 0; n <= s.truncation(); ++n)
        sizes += (n ? ", " : "") + std::to_string(s.level_size(n));
    report.checks.push_back(ReportCheck{"level sizes", "note", sizes});
    auto failures = s.identity_failures();
    string details = std::to_string(s.identity_checks()) + " checks, " + std::to_string(failures.size()) + " failures";
    for (size_t i = 0; i < failures.size() && i < 5; ++i)
        details += "; " + failures[i];
    report.add_check("simplicial identities", failures.empty(), details);
    return report;
}

auto finset_report(int max_n, FunctionClass variant, bool oracle, const Limits & limits) -> Report
{
    Report report;
    report.command = "finset";
    report.config = limits_config(limits);
    report.config.insert(report.config.begin(), {{"max", std::to_string(max_n)}, {"variant", to_string(variant)}});

    std::map<std::pair<string, string>, string> policy;
    DiffReport diff;
    if (oracle) {
        diff = oracle_diff_finset(max_n, variant, limits);
        for (const auto & row : diff.rows)
            policy[{cell_name(row.n, row.m), row.key}] = row.policy;
    }
    auto policy_of = [&](const string & cell, const string & key) {
        auto it = policy.find({cell, key});
        return it == policy.end() ? string("closed form") : it->second;
    };

    for (const auto & c : closed_form_level0(max_n))
        report.components.push_back(ReportComponent{0, std::to_string(c.n), std::to_string(c.n), 1, to_string(c.group), c.order, "closed form"});
    for (int n = 0; n <= max_n; ++n)
        for (int m = 0; m <= max_n; ++m) {
            vector<SymbolicComponent> cs;
            if (variant == FunctionClass::all)
                cs = closed_form_level1(n, m);
            else if (variant == FunctionClass::surjective)
                cs = surjective_level1(n, m);
            else
                for (auto & i : injective_level1(n, m))
                    cs.push_back(std::move(i.component));
            for (const auto & c : cs) {
                auto key = to_string(c.profile);
                report.components.push_back(ReportComponent{1, cell_name(n, m), key + " " + c.tree.display(), c.orbit_size,
                    to_string(c.group), c.order, policy_of(cell_name(n, m), key)});
            }
        }
    if (oracle)
        add_diff(report, diff, "oracle diff");
    return report;
}

auto finvect_report(int max_dim, int q, bool oracle, const Limits & limits) -> Report
{
    Report report;
    report.command = "finvect";
    report.config = limits_config(limits);
    report.config.insert(report.config.begin(), {{"max_dim", std::to_string(max_dim)}, {"q", std::to_string(q)}});
    for (const auto & c : vect_level0(max_dim, q))
        report.components.push_back(ReportComponent{0, std::to_string(c.n), std::to_string(c.n), 1, to_string(c.group), c.order, "closed form"});
    bool complete = true;
    for (int n = 0; n <= max_dim; ++n)
        for (int m = 0; m <= max_dim; ++m) {
            auto cell = orbits_by_rank(n, m, q, limits);
            complete = complete && cell.rank_is_complete_invariant;
            for (const auto & rc : cell.classes)
                report.components.push_back(ReportComponent{1, cell_name(n, m), "rank " + std::to_string(rc.rank) + " " + to_string(rc.representative),
                    rc.orbit_size, rc.named ? to_string(*rc.named) : "stabilizer", rc.stabilizer_order,
                    rc.direct_scan ? "direct scan" : "orbit-stabilizer"});
        }
    report.add_check("rank classes are orbits", complete, "breadth-first coverage of every rank class");
    if (oracle)
        add_diff(report, oracle_diff_vect(max_dim, q, limits), "oracle diff");
    return report;
}

auto oracle_diff_report(const string & target, int bound, FunctionClass variant, int q, const Limits & limits) -> Report
{
    Report report;
    report.command = "oracle-diff";
    report.config = limits_config(limits);
    DiffReport diff;
    if (target == "finset") {
        report.config.insert(report.config.begin(), {{"target", target}, {"max", std::to_string(bound)}, {"variant", to_string(variant)}});
        diff = oracle_diff_finset(bound, variant, limits);
    }
    else if (target == "vect") {
        report.config.insert(report.config.begin(), {{"target", target}, {"max_dim", std::to_string(bound)}, {"q", std::to_string(q)}});
        diff = oracle_diff_vect(bound, q, limits);
    }
    else
        throw InvalidArgument("oracle-diff target must be finset or vect");
    diff_components(report, diff);
    add_diff(report, diff, "oracle diff");
    return report;
}

}
