#pragma once

#include <cdiag/fincat.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace cdiag {

struct ObjectDecl
{
    std::string name;
    int line;
};

struct MorphismDecl
{
    std::string name;
    std::string source;
    std::string target;
    int line;
};

/// `compose g f = h`, i.e. g o f = h.
struct ComposeDecl
{
    std::string g;
    std::string f;
    std::string h;
    int line;
};

struct RawCategoryDef
{
    std::vector<ObjectDecl> objects;
    std::vector<MorphismDecl> morphisms;
    std::vector<ComposeDecl> compositions;
};

/**
 * Parses the line-oriented CATDEF format:
 *
 *     # comment
 *     object x
 *     mor f : x -> y
 *     compose g f = h
 *
 * Names match [A-Za-z0-9_]+; `id_<object>` is implicit and reserved.
 * Throws ParseError (with line number) on syntax errors, duplicate names and
 * references to undeclared names.
 */
auto parse_catdef(std::string_view text) -> RawCategoryDef;

/// Assembles and checks a category; identities become `id_<object>`.
/// Throws ValidationError on a missing composite or an axiom violation.
auto validate_category(const RawCategoryDef & def) -> FiniteCategory;

/// Serialises a category back to CATDEF (identities and identity composites omitted).
auto to_catdef(const FiniteCategory & cat) -> std::string;

}
