#include <cdiag/catdef.hpp>

#include <cctype>
#include <map>
#include <set>
#include <sstream>

using std::string;
using std::string_view;
using std::vector;

namespace cdiag {

namespace {

auto valid_name(string_view name) -> bool
{
    if (name.empty())
        return false;
    for (char c : name)
        if (! (std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    return true;
}

auto tokenize(string_view line) -> vector<string>
{
    vector<string> tokens;
    std::istringstream in{string(line)};
    string token;
    while (in >> token)
        tokens.push_back(token);
    return tokens;
}

auto is_reserved(string_view name) -> bool
{
    return name.starts_with("id_");
}

}

auto parse_catdef(string_view text) -> RawCategoryDef
{
    RawCategoryDef def;
    std::set<string> objects;
    std::set<string> morphisms;

    auto check_name = [](int line, const string & name) {
        if (! valid_name(name))
            throw ParseError(line, "invalid name '" + name + "'");
        if (is_reserved(name))
            throw ParseError(line, "names starting with 'id_' are reserved: '" + name + "'");
    };
    auto require_object = [&](int line, const string & name) {
        if (! objects.contains(name))
            throw ParseError(line, "undeclared object '" + name + "'");
    };
    auto require_morphism = [&](int line, const string & name) {
        if (morphisms.contains(name))
            return;
        if (is_reserved(name) && objects.contains(name.substr(3)))
            return;
        throw ParseError(line, "undeclared morphism '" + name + "'");
    };

    int line_number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == string_view::npos)
            end = text.size();
        auto line = text.substr(start, end - start);
        start = end + 1;
        ++line_number;

        if (auto hash = line.find('#'); hash != string_view::npos)
            line = line.substr(0, hash);
        auto tokens = tokenize(line);
        if (tokens.empty()) {
            if (end == text.size())
                break;
            continue;
        }

        const auto & keyword = tokens[0];
        if (keyword == "object") {
            if (tokens.size() != 2)
                throw ParseError(line_number, "expected 'object <name>'");
            check_name(line_number, tokens[1]);
            if (! objects.insert(tokens[1]).second)
                throw ParseError(line_number, "duplicate object '" + tokens[1] + "'");
            def.objects.push_back(ObjectDecl{tokens[1], line_number});
        }
        else if (keyword == "mor") {
            if (tokens.size() != 6 || tokens[2] != ":" || tokens[4] != "->")
                throw ParseError(line_number, "expected 'mor <name> : <src> -> <dst>'");
            check_name(line_number, tokens[1]);
            if (morphisms.contains(tokens[1]))
                throw ParseError(line_number, "duplicate morphism '" + tokens[1] + "'");
            require_object(line_number, tokens[3]);
            require_object(line_number, tokens[5]);
            morphisms.insert(tokens[1]);
            def.morphisms.push_back(MorphismDecl{tokens[1], tokens[3], tokens[5], line_number});
        }
        else if (keyword == "compose") {
            if (tokens.size() != 5 || tokens[3] != "=")
                throw ParseError(line_number, "expected 'compose <g> <f> = <h>'");
            for (int i : {1, 2, 4}) {
                if (! valid_name(tokens[i]))
                    throw ParseError(line_number, "invalid name '" + tokens[i] + "'");
                require_morphism(line_number, tokens[i]);
            }
            def.compositions.push_back(ComposeDecl{tokens[1], tokens[2], tokens[4], line_number});
        }
        else
            throw ParseError(line_number, "unknown declaration '" + keyword + "'");

        if (end == text.size())
            break;
    }
    return def;
}

auto validate_category(const RawCategoryDef & def) -> FiniteCategory
{
    vector<string> objects;
    std::map<string, ObjectId> object_index;
    for (const auto & o : def.objects) {
        object_index[o.name] = static_cast<ObjectId>(objects.size());
        objects.push_back(o.name);
    }

    vector<Morphism> morphisms;
    std::map<string, MorphismId> morphism_index;
    vector<MorphismId> identities;
    for (ObjectId x = 0; x < static_cast<ObjectId>(objects.size()); ++x) {
        identities.push_back(static_cast<MorphismId>(morphisms.size()));
        morphism_index["id_" + objects[x]] = identities.back();
        morphisms.push_back(Morphism{"id_" + objects[x], x, x});
    }
    for (const auto & m : def.morphisms) {
        auto src = object_index.find(m.source);
        auto dst = object_index.find(m.target);
        if (src == object_index.end() || dst == object_index.end())
            throw ValidationError("line " + std::to_string(m.line) + ": morphism " + m.name + " has an undeclared endpoint");
        if (! morphism_index.emplace(m.name, static_cast<MorphismId>(morphisms.size())).second)
            throw ValidationError("line " + std::to_string(m.line) + ": duplicate morphism " + m.name);
        morphisms.push_back(Morphism{m.name, src->second, dst->second});
    }

    auto lookup = [&](const string & name, int line) {
        auto it = morphism_index.find(name);
        if (it == morphism_index.end())
            throw ValidationError("line " + std::to_string(line) + ": undeclared morphism " + name);
        return it->second;
    };

    std::map<std::pair<MorphismId, MorphismId>, MorphismId> table;
    for (const auto & c : def.compositions) {
        auto g = lookup(c.g, c.line), f = lookup(c.f, c.line), h = lookup(c.h, c.line);
        if (morphisms[f].target != morphisms[g].source)
            throw ValidationError("line " + std::to_string(c.line) + ": " + c.g + " o " + c.f + " is not composable");
        if (morphisms[h].source != morphisms[f].source || morphisms[h].target != morphisms[g].target)
            throw ValidationError("line " + std::to_string(c.line) + ": " + c.h + " has the wrong endpoints for " + c.g + " o " + c.f);
        auto [it, inserted] = table.emplace(std::pair{g, f}, h);
        if (! inserted && it->second != h)
            throw ValidationError("line " + std::to_string(c.line) + ": conflicting composites for " + c.g + " o " + c.f);
    }

    // identity composites are implicit; any other omission is an error
    for (MorphismId f = 0; f < static_cast<MorphismId>(morphisms.size()); ++f) {
        table.emplace(std::pair{identities[morphisms[f].target], f}, f);
        table.emplace(std::pair{f, identities[morphisms[f].source]}, f);
    }
    for (MorphismId f = 0; f < static_cast<MorphismId>(morphisms.size()); ++f)
        for (MorphismId g = 0; g < static_cast<MorphismId>(morphisms.size()); ++g)
            if (morphisms[f].target == morphisms[g].source && ! table.contains({g, f}))
                throw ValidationError("missing composite for " + morphisms[g].name + " o " + morphisms[f].name);

    auto compose = tabulate_composition(morphisms, [&](MorphismId g, MorphismId f) { return table.at({g, f}); });
    FiniteCategory cat(std::move(objects), std::move(morphisms), std::move(identities), compose);
    check_axioms(cat);
    return cat;
}

auto to_catdef(const FiniteCategory & cat) -> string
{
    std::ostringstream out;
    for (ObjectId x = 0; x < cat.object_count(); ++x)
        out << "object " << cat.object_name(x) << '\n';
    auto is_identity = [&](MorphismId f) { return cat.identity(cat.source(f)) == f && cat.source(f) == cat.target(f); };
    for (MorphismId f = 0; f < cat.morphism_count(); ++f)
        if (! is_identity(f))
            out << "mor " << cat.morphism(f).name << " : " << cat.object_name(cat.source(f)) << " -> "
                << cat.object_name(cat.target(f)) << '\n';
    for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
        if (is_identity(f))
            continue;
        for (auto g : cat.outgoing(cat.target(f)))
            if (! is_identity(g))
                out << "compose " << cat.morphism(g).name << ' ' << cat.morphism(f).name << " = "
                    << cat.morphism(cat.compose_unchecked(g, f)).name << '\n';
    }
    return out.str();
}

}
