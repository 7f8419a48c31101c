#pragma once

#include <cdiag/fincat.hpp>
#include <cdiag/finset.hpp>
#include <cdiag/limits.hpp>
#include <cdiag/report.hpp>

#include <string>
#include <string_view>

namespace cdiag {

/// `ordinal:<m>`, `group:S<k>`, `group:C<k>`, `iso-interval`, `walking-arrow`,
/// `delta:<M>`, `finset:<N>`, `vect:<dim>:<q>`.
auto builtin_category(std::string_view selector) -> FiniteCategory;

/// Applies `name=value,...` overrides (chain_limit, scan_limit, table_limit,
/// iso_limit); values must be positive.
auto apply_limit_overrides(Limits & limits, std::string_view overrides) -> void;

auto limits_config(const Limits & limits) -> std::vector<std::pair<std::string, std::string>>;

/// Category commands; `source` names the input in the report config.
auto decompose_report(const FiniteCategory & cat, const std::string & source, int from_level, int to_level,
    const Limits & limits) -> Report;
auto segal_report(const FiniteCategory & cat, const std::string & source, int from_level, int to_level,
    const Limits & limits) -> Report;
auto completeness_report(const FiniteCategory & cat, const std::string & source, const Limits & limits) -> Report;
auto discrete_report(const FiniteCategory & cat, const std::string & source, int truncation, const Limits & limits)
    -> Report;
auto nerve_report(const FiniteCategory & groupoid, const std::string & source, int truncation, const Limits & limits)
    -> Report;

/// Closed forms; `oracle` adds the brute-force comparison as checks.
auto finset_report(int max_n, FunctionClass variant, bool oracle, const Limits & limits) -> Report;
auto finvect_report(int max_dim, int q, bool oracle, const Limits & limits) -> Report;

/// One row per compared component.
auto oracle_diff_report(const std::string & target, int bound, FunctionClass variant, int q, const Limits & limits)
    -> Report;

}
