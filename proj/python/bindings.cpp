#include <cdiag/catdef.hpp>
#include <cdiag/classifying.hpp>
#include <cdiag/commands.hpp>
#include <cdiag/finset.hpp>
#include <cdiag/finvect.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace cdiag;

namespace {

auto to_py(const BigInt & value) -> py::object
{
    return py::reinterpret_steal<py::object>(PyLong_FromString(value.str().c_str(), nullptr, 10));
}

auto make_limits(std::size_t chain_limit, std::size_t scan_limit, std::size_t table_limit, std::size_t iso_limit) -> Limits
{
    return Limits{chain_limit, scan_limit, table_limit, iso_limit};
}

auto diff_to_py(const DiffReport & diff) -> py::dict
{
    py::list rows;
    for (const auto & r : diff.rows) {
        py::dict row;
        row["n"] = r.n;
        row["m"] = r.m;
        row["key"] = r.key;
        row["group"] = r.group_expr;
        row["expected_order"] = to_py(r.expected_order);
        row["observed_order"] = to_py(r.observed_order);
        row["orbit_size"] = r.orbit_size;
        row["policy"] = r.policy;
        row["matches"] = r.matches;
        rows.append(row);
    }
    py::list notes;
    for (const auto & n : diff.notes)
        notes.append(py::make_tuple(n.name, n.status, n.detail));
    py::dict d;
    d["mismatches"] = diff.mismatches;
    d["rows"] = rows;
    d["problems"] = diff.problems;
    d["notes"] = notes;
    return d;
}

const Limits defaults;

}

PYBIND11_MODULE(_cdiag, m)
{
    m.doc() = "Levels of the classifying diagram of finite categories";

    py::register_exception<Error>(m, "CdiagError", PyExc_ValueError);

    py::class_<FiniteCategory>(m, "Category")
        .def_property_readonly("object_count", &FiniteCategory::object_count)
        .def_property_readonly("morphism_count", &FiniteCategory::morphism_count)
        .def("objects", [](const FiniteCategory & c) {
            std::vector<std::string> names;
            for (ObjectId x = 0; x < c.object_count(); ++x)
                names.push_back(c.object_name(x));
            return names;
        })
        .def("morphisms", [](const FiniteCategory & c) {
            std::vector<std::tuple<std::string, std::string, std::string>> result;
            for (MorphismId f = 0; f < c.morphism_count(); ++f)
                result.emplace_back(c.morphism(f).name, c.object_name(c.source(f)), c.object_name(c.target(f)));
            return result;
        })
        .def("is_groupoid", &FiniteCategory::is_groupoid)
        .def("is_isomorphism", [](const FiniteCategory & c, const std::string & name) { return is_isomorphism(c, name); })
        .def("to_catdef", [](const FiniteCategory & c) { return to_catdef(c); });

    m.def("builtin", [](const std::string & selector) { return builtin_category(selector); }, py::arg("selector"));
    m.def("parse_catdef", [](const std::string & text) { return validate_category(parse_catdef(text)); }, py::arg("text"));
    m.def("maximal_subgroupoid", &maximal_subgroupoid);
    m.def("opposite", &opposite);

    m.def(
        "decompose",
        [](const FiniteCategory & cat, int level, std::size_t chain_limit, std::size_t scan_limit, std::size_t table_limit,
            std::size_t iso_limit) {
            auto d = level_decomposition(cat, level, make_limits(chain_limit, scan_limit, table_limit, iso_limit));
            py::list components;
            for (const auto & c : d.components) {
                py::dict item;
                item["representative"] = describe(cat, c.orbit.representative);
                item["orbit_size"] = c.orbit.orbit_size;
                item["stabilizer_order"] = to_py(c.orbit.stabilizer.order);
                item["group"] = c.group_text();
                item["policy"] = c.policy;
                components.append(item);
            }
            return components;
        },
        py::arg("cat"), py::arg("level"), py::arg("chain_limit") = defaults.chain_limit,
        py::arg("scan_limit") = defaults.scan_limit, py::arg("table_limit") = defaults.table_limit,
        py::arg("iso_limit") = defaults.iso_limit);

    m.def(
        "segal",
        [](const FiniteCategory & cat, int level) {
            auto s = segal_check(cat, level);
            py::dict d;
            d["chain_count"] = s.chain_count;
            d["fiber_product_count"] = s.fiber_product_count;
            d["bijection_verified"] = s.bijection_verified;
            return d;
        },
        py::arg("cat"), py::arg("level"));

    m.def("completeness", [](const FiniteCategory & cat) {
        auto c = completeness_check(cat);
        py::dict d;
        d["iso_classes"] = c.iso_classes.size();
        d["interval_classes"] = c.interval_classes.size();
        d["verdict"] = c.verdict();
        d["policy"] = c.policy;
        return d;
    });

    m.def(
        "discrete",
        [](const FiniteCategory & cat, int truncation) {
            auto r = is_discrete_classifying(cat, truncation);
            py::dict d;
            d["discrete"] = r.only_identity_isos;
            d["consistent"] = r.consistent();
            std::vector<std::size_t> counts;
            for (const auto & l : r.levels)
                counts.push_back(l.components);
            d["component_counts"] = counts;
            return d;
        },
        py::arg("cat"), py::arg("truncation") = 3);

    m.def(
        "nerve",
        [](const FiniteCategory & groupoid, int truncation) {
            auto s = nerve_truncation(groupoid, truncation);
            std::vector<std::size_t> sizes;
            for (int n = 0; n <= s.truncation(); ++n)
                sizes.push_back(s.level_size(n));
            py::dict d;
            d["level_sizes"] = sizes;
            d["identity_checks"] = s.identity_checks();
            d["identity_failures"] = s.identity_failures();
            return d;
        },
        py::arg("groupoid"), py::arg("truncation") = 3);

    m.def("enumerate_profiles", [](int n, int mm) {
        std::vector<std::vector<int>> result;
        for (const auto & p : enumerate_profiles(n, mm))
            result.push_back(p.k);
        return result;
    });

    m.def("closed_form_level1", [](int n, int mm) {
        py::list result;
        for (const auto & c : closed_form_level1(n, mm)) {
            py::dict d;
            d["profile"] = c.profile.k;
            d["tree"] = c.tree.display();
            d["group"] = to_string(c.group);
            d["order"] = to_py(c.order);
            d["orbit_size"] = to_py(c.orbit_size);
            result.append(d);
        }
        return result;
    });

    m.def("glnq_order", [](int n, int q) { return to_py(glnq_order(n, q)); });

    m.def(
        "finset_oracle",
        [](int max_n, const std::string & variant) { return diff_to_py(oracle_diff_finset(max_n, parse_function_class(variant))); },
        py::arg("max_n"), py::arg("variant") = "all");

    m.def(
        "vect_oracle",
        [](int max_dim, int q, std::size_t scan_limit) {
            Limits limits;
            limits.scan_limit = scan_limit;
            return diff_to_py(oracle_diff_vect(max_dim, q, limits));
        },
        py::arg("max_dim"), py::arg("q"), py::arg("scan_limit") = defaults.scan_limit);

    m.def(
        "decompose_report_json",
        [](const std::string & selector, int from_level, int to_level) {
            return to_json_text(decompose_report(builtin_category(selector), selector, from_level, to_level, Limits{}));
        },
        py::arg("selector"), py::arg("from_level"), py::arg("to_level"));
}
