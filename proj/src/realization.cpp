#include "sset/realization.hpp"

#include "sset/error.hpp"

namespace sset {

CWReport cw_report(const Presentation& p)
{
    CWReport r;
    for (int n = 0; n <= p.top_dim(); ++n)
    {
        r.cells_per_dim.push_back(static_cast<std::size_t>(p.generator_count(n)));
        r.euler += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(p.generator_count(n));
    }
    for (GeneratorId g : p.all_generators())
    {
        AttachmentRow row{g, p.generator_name(g), {}};
        const auto faces = p.faces(g);
        for (std::size_t i = 0; i < faces.size(); ++i)
            row.faces.push_back({static_cast<int>(i), notation(p, faces[i]), faces[i].degenerate()});
        r.attachments.push_back(std::move(row));
    }
    return r;
}

std::vector<std::size_t> delta_realization_report(const DeltaSet& d, int max_dim)
{
    if (max_dim < 0)
        throw IndexError("delta report needs max dimension >= 0");
    std::vector<std::size_t> out;
    for (int n = 0; n <= max_dim; ++n)
        out.push_back(static_cast<std::size_t>(d.data().generator_count(n)));
    return out;
}

std::vector<std::size_t> delta_realization_report(const Presentation& p, int max_dim)
{
    if (max_dim < 0)
        throw IndexError("delta report needs max dimension >= 0");
    p.require_representable(max_dim, "delta realization report");
    std::vector<std::size_t> out;
    for (int n = 0; n <= max_dim; ++n)
        out.push_back(simplex_count(p, n));
    return out;
}

IncidenceGraph incidence_graph(const Presentation& p)
{
    IncidenceGraph g;
    g.nodes = p.all_generators();
    for (GeneratorId x : g.nodes)
    {
        const auto faces = p.faces(x);
        for (std::size_t i = 0; i < faces.size(); ++i)
            g.arcs.push_back({x, faces[i].gen, static_cast<int>(i)});
    }
    return g;
}

namespace {

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char c : s)
    {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string node_id(const Presentation& p, GeneratorId g)
{
    return quoted(p.generator_name(g) + ":" + std::to_string(g.dim));
}

}   // namespace

std::string incidence_export(const Presentation& p)
{
    const IncidenceGraph g = incidence_graph(p);
    std::string out = "digraph " + quoted(p.name()) + " {\n";
    for (GeneratorId n : g.nodes)
        out += "  " + node_id(p, n) + ";\n";
    for (const auto& a : g.arcs)
        out += "  " + node_id(p, a.from) + " -> " + node_id(p, a.to) + " [label=\"" + std::to_string(a.face) + "\"];\n";
    return out + "}\n";
}

}   // namespace sset
