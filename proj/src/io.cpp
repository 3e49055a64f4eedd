#include "sset/io.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sset/error.hpp"

namespace sset {

using Json = nlohmann::ordered_json;

namespace {

Json parse_json(const std::string& text)
{
    try
    {
        return Json::parse(text);
    }
    catch (const Json::parse_error& e)
    {
        // e.byte is the 1-based offset of the offending character.
        int line = 1, column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < end; ++i)
        {
            if (text[i] == '\n')
            {
                ++line;
                column = 1;
            }
            else
                ++column;
        }
        std::string what = e.what();
        if (auto pos = what.find("parse error"); pos != std::string::npos)
            what = what.substr(pos);
        throw ParseError("malformed JSON: " + what, line, column);
    }
}

const Json& field(const Json& doc, const char* key, const char* where)
{
    if (!doc.is_object() || !doc.contains(key))
        throw PresentationError(std::string(where) + " is missing the field '" + key + "'");
    return doc.at(key);
}

FaceRef parse_face_expression(const std::string& expr, const std::string& generator, std::size_t index)
{
    std::istringstream in(expr);
    std::vector<std::string> tokens;
    for (std::string t; in >> t;)
        tokens.push_back(t);
    const std::string where = "face d" + std::to_string(index) + " of generator '" + generator + "'";
    if (tokens.empty())
        throw PresentationError(where + " is empty");
    FaceRef ref;
    for (std::size_t t = 0; t + 1 < tokens.size(); ++t)
    {
        const std::string& tok = tokens[t];
        const bool is_degen = tok.size() > 1 && tok[0] == 's' && tok.find_first_not_of("0123456789", 1) == std::string::npos;
        if (!is_degen)
            throw PresentationError(where + ": expected 's<k>' but found '" + tok + "'");
        if (tok.size() > 6)
            throw PresentationError(where + ": degeneracy index '" + tok + "' is too large");
        ref.degeneracies.push_back(std::stoi(tok.substr(1)));
    }
    ref.generator = tokens.back();
    return ref;
}

}   // namespace

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write '" + path + "'");
    out << content;
    if (!out)
        throw Error("failed writing '" + path + "'");
}

LoadedPresentation parse_presentation(const std::string& text)
{
    const Json doc = parse_json(text);
    if (!doc.is_object())
        throw PresentationError("presentation document must be a JSON object");
    const Json& name = field(doc, "name", "presentation");
    const Json& top = field(doc, "top_dim", "presentation");
    if (!name.is_string())
        throw PresentationError("field 'name' must be a string");
    if (!top.is_number_integer() || top.get<long long>() < 0 || top.get<long long>() > 64)
        throw PresentationError("field 'top_dim' must be an integer in 0..64");
    const int top_dim = top.get<int>();

    LoadedPresentation out;
    bool truncated = false;
    if (doc.contains("truncated"))
    {
        if (!doc["truncated"].is_boolean())
            throw PresentationError("field 'truncated' must be a boolean");
        truncated = doc["truncated"].get<bool>();
    }
    if (doc.contains("kind"))
    {
        if (!doc["kind"].is_string() || (doc["kind"] != "delta" && doc["kind"] != "simplicial"))
            throw PresentationError("field 'kind' must be \"delta\" or \"simplicial\"");
        out.delta_kind = doc["kind"] == "delta";
    }
    for (const auto& [key, value] : doc.items())
    {
        static const std::set<std::string> known{"name", "top_dim", "truncated", "kind", "generators", "faces"};
        if (!known.count(key))
            throw PresentationError("unknown field '" + key + "'");
    }

    const Json& gens = field(doc, "generators", "presentation");
    if (!gens.is_object())
        throw PresentationError("field 'generators' must be an object keyed by dimension");
    const Json empty_faces = Json::object();
    const Json& faces = doc.contains("faces") ? doc["faces"] : empty_faces;
    if (!faces.is_object())
        throw PresentationError("field 'faces' must be an object keyed by generator name");

    PresentationBuilder builder(name.get<std::string>(), top_dim);
    builder.set_truncated(truncated);
    std::set<std::string> seen;
    for (const auto& [key, list] : gens.items())
    {
        if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos || key.size() > 3)
            throw PresentationError("generator dimension key '" + key + "' is not a decimal integer");
        const int dim = std::stoi(key);
        if (!list.is_array())
            throw PresentationError("generators of dimension " + key + " must be a list of names");
        for (const Json& g : list)
        {
            if (!g.is_string())
                throw PresentationError("generator names in dimension " + key + " must be strings");
            const std::string gname = g.get<std::string>();
            if (!seen.insert(gname).second)
                throw PresentationError("generator '" + gname + "' is listed more than once");
            std::vector<FaceRef> refs;
            if (faces.contains(gname))
            {
                const Json& fl = faces[gname];
                if (!fl.is_array())
                    throw PresentationError("faces of generator '" + gname + "' must be a list");
                for (std::size_t i = 0; i < fl.size(); ++i)
                {
                    if (!fl[i].is_string())
                        throw PresentationError("face d" + std::to_string(i) + " of generator '" + gname + "' must be a string");
                    refs.push_back(parse_face_expression(fl[i].get<std::string>(), gname, i));
                }
            }
            else if (dim > 0)
                throw PresentationError("generator '" + gname + "' has no face list");
            builder.add_generator(dim, gname, std::move(refs));
        }
    }
    for (const auto& [gname, value] : faces.items())
        if (!seen.count(gname))
            throw PresentationError("faces given for unknown generator '" + gname + "'");

    out.presentation = builder.build(&out.warnings);
    return out;
}

LoadedPresentation load_presentation(const std::string& path)
{
    return parse_presentation(read_file(path));
}

std::string serialize_presentation(const Presentation& p, bool delta_kind)
{
    Json doc;
    doc["name"] = p.name();
    doc["top_dim"] = p.top_dim();
    if (p.truncated())
        doc["truncated"] = true;
    if (delta_kind)
        doc["kind"] = "delta";
    Json gens = Json::object();
    for (int d = 0; d <= p.top_dim(); ++d)
    {
        Json list = Json::array();
        for (GeneratorId g : p.generators(d))
            list.push_back(p.generator_name(g));
        gens[std::to_string(d)] = std::move(list);
    }
    doc["generators"] = std::move(gens);
    Json faces = Json::object();
    for (GeneratorId g : p.all_generators())
    {
        if (g.dim == 0)
            continue;
        Json list = Json::array();
        for (const Simplex& f : p.faces(g))
            list.push_back(notation(p, f));
        faces[p.generator_name(g)] = std::move(list);
    }
    doc["faces"] = std::move(faces);
    return doc.dump(2) + "\n";
}

void save_presentation(const std::string& path, const Presentation& p, bool delta_kind)
{
    write_file(path, serialize_presentation(p, delta_kind));
}

LoadedMap load_map(const std::string& path)
{
    const Json doc = parse_json(read_file(path));
    const Json& src = field(doc, "source", "map document");
    const Json& tgt = field(doc, "target", "map document");
    const Json& assignment = field(doc, "assignment", "map document");
    if (!src.is_string() || !tgt.is_string())
        throw PresentationError("map 'source' and 'target' must be file names");
    if (!assignment.is_object())
        throw PresentationError("map 'assignment' must be an object keyed by generator name");
    const auto base = std::filesystem::path(path).parent_path();
    auto resolve = [&](const std::string& ref) {
        std::filesystem::path r(ref);
        return (r.is_absolute() ? r : base / r).string();
    };
    auto source = std::make_shared<const Presentation>(load_presentation(resolve(src.get<std::string>())).presentation);
    auto target = std::make_shared<const Presentation>(load_presentation(resolve(tgt.get<std::string>())).presentation);
    std::vector<std::pair<std::string, std::string>> images;
    for (const auto& [name, expr] : assignment.items())
    {
        if (!expr.is_string())
            throw PresentationError("image of '" + name + "' must be a simplex expression");
        images.emplace_back(name, expr.get<std::string>());
    }
    SimplicialMap map = map_from_names(source, target, images);
    return {source, target, std::move(map)};
}

GroupTable parse_group_table(const std::string& text)
{
    const Json doc = parse_json(text);
    const Json& elements = field(doc, "elements", "group document");
    const Json& identity = field(doc, "identity", "group document");
    const Json& table = field(doc, "table", "group document");
    if (!elements.is_array() || !identity.is_string() || !table.is_array())
        throw PresentationError("group document needs 'elements' (list), 'identity' (name) and 'table' (rows)");
    std::vector<std::string> names;
    for (const Json& e : elements)
    {
        if (!e.is_string())
            throw PresentationError("group element names must be strings");
        names.push_back(e.get<std::string>());
    }
    auto index = [&](const Json& v) {
        if (!v.is_string())
            throw PresentationError("group table entries must be element names");
        auto it = std::find(names.begin(), names.end(), v.get<std::string>());
        if (it == names.end())
            throw PresentationError("unknown group element '" + v.get<std::string>() + "'");
        return static_cast<int>(it - names.begin());
    };
    std::vector<std::vector<int>> mult;
    for (const Json& row : table)
    {
        if (!row.is_array())
            throw PresentationError("group table rows must be lists");
        std::vector<int> r;
        for (const Json& v : row)
            r.push_back(index(v));
        mult.push_back(std::move(r));
    }
    return GroupTable(std::move(names), std::move(mult), index(identity));
}

GroupTable load_group_table(const std::string& path)
{
    return parse_group_table(read_file(path));
}

}   // namespace sset
