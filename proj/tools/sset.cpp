// Command-line front end. Exit codes: 0 success, 1 mathematical negative
// (validation failure, unfillable horn, ...), 2 usage, IO or parse error.

#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sset/error.hpp"
#include "sset/group.hpp"
#include "sset/homology.hpp"
#include "sset/homotopy.hpp"
#include "sset/io.hpp"
#include "sset/kan.hpp"
#include "sset/product.hpp"
#include "sset/realization.hpp"
#include "sset/standard.hpp"

using namespace sset;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kFailure = 2;

bool g_structured = false;

void emit(const Json& doc, const std::string& text)
{
    if (g_structured)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

PresentationPtr load(const std::string& path, bool* delta_kind = nullptr)
{
    LoadedPresentation lp = load_presentation(path);
    for (const auto& w : lp.warnings)
        std::cerr << "warning: " << path << ": " << w << "\n";
    if (delta_kind)
        *delta_kind = lp.delta_kind;
    return std::make_shared<const Presentation>(std::move(lp.presentation));
}

Json counts_json(const std::vector<std::size_t>& v)
{
    Json a = Json::array();
    for (auto c : v)
        a.push_back(c);
    return a;
}

std::string join_counts(const std::vector<std::size_t>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

Json group_json(const HomologyGroup& h)
{
    Json t = Json::array();
    for (const auto& f : h.torsion)
        t.push_back(f.str());
    return Json{{"betti", h.betti}, {"torsion", t}, {"text", format_group(h)}};
}

std::string table_text(const PiGroup& g)
{
    std::string out;
    std::size_t w = 0;
    for (const auto& l : g.labels)
        w = std::max(w, l.size());
    auto pad = [&](const std::string& s) { return s + std::string(w - s.size() + 2, ' '); };
    out += pad("") + "|";
    for (const auto& l : g.labels)
        out += " " + pad(l);
    out += "\n";
    for (std::size_t a = 0; a < g.table.size(); ++a)
    {
        out += pad(g.labels[a]) + "|";
        for (std::size_t b = 0; b < g.table.size(); ++b)
            out += " " + pad(g.labels[g.table[a][b]]);
        out += "\n";
    }
    return out;
}

Json pi_json(const PiGroup& g, const Presentation& p)
{
    Json classes = Json::array();
    for (std::size_t c = 0; c < g.classes.classes.size(); ++c)
    {
        Json members = Json::array();
        for (int i : g.classes.classes[c])
            members.push_back(notation(p, g.representatives[i]));
        classes.push_back(Json{{"label", g.labels[c]}, {"members", members}});
    }
    Json doc{{"n", g.n}, {"relative", g.relative}, {"order", g.order()}, {"identity", g.labels[g.identity]},
             {"closure_needed", g.classes.closure_needed}, {"classes", classes}};
    if (g.is_group())
    {
        Json table = Json::array();
        for (const auto& row : g.table)
        {
            Json r = Json::array();
            for (int c : row)
                r.push_back(g.labels[c]);
            table.push_back(r);
        }
        doc["table"] = table;
        doc["group_axioms_ok"] = g.group_axioms_ok;
        doc["abelian"] = g.abelian();
        doc["product_well_defined"] = g.product_well_defined;
        doc["horns_with_several_fillers"] = g.horns_with_several_fillers;
        auto opt = [](const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); };
        doc["identity_witnesses_ok"] = opt(g.identity_witnesses_ok);
        doc["inverse_witnesses_ok"] = opt(g.inverse_witnesses_ok);
        doc["associativity_witnesses_ok"] = opt(g.associativity_witnesses_ok);
    }
    return doc;
}

std::string pi_text(const PiGroup& g, const Presentation& p)
{
    std::string out = std::string(g.relative ? "relative " : "") + "pi_" + std::to_string(g.n) + ": " + std::to_string(g.order())
                      + (g.is_group() ? " elements" : " classes (pointed set)") + ", identity " + g.labels[g.identity] + "\n";
    for (std::size_t c = 0; c < g.classes.classes.size(); ++c)
    {
        out += "  [" + g.labels[c] + "] =";
        for (int i : g.classes.classes[c])
            out += " {" + notation(p, g.representatives[i]) + "}";
        out += "\n";
    }
    if (g.is_group())
    {
        out += table_text(g);
        out += std::string("group axioms: ") + (g.group_axioms_ok ? "ok" : "FAILED") + ", abelian: " + (g.abelian() ? "yes" : "no")
               + ", product well defined: " + (g.product_well_defined ? "yes" : "no") + "\n";
    }
    if (g.classes.closure_needed)
        out += "note: homotopy relation needed symmetric-transitive closure\n";
    return out;
}

bool pi_ok(const PiGroup& g)
{
    if (!g.is_group())
        return true;
    return g.group_axioms_ok && g.product_well_defined && g.identity_witnesses_ok.value_or(true) && g.inverse_witnesses_ok.value_or(true)
           && g.associativity_witnesses_ok.value_or(true);
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Computations with finitely presented simplicial sets"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));

    std::string file, file2, out_path, sub_file, basepoint, table_file, x_expr, xp_expr;
    int dim = 0, max_dim = 0, n = 1, cyclic = 0, top_dim = 0;
    bool nondegenerate = false, les = false;
    std::optional<int> delta_n, boundary_n, sphere_n;
    std::vector<int> horn_nk;
    std::function<int()> run;

    auto file_arg = [&](CLI::App* c) { c->add_option("file", file, "Presentation file")->required(); };

    auto* validate_cmd = app.add_subcommand("validate", "Check the face identities of a presentation");
    file_arg(validate_cmd);
    validate_cmd->callback([&] {
        run = [&] {
            bool delta = false;
            auto p = load(file, &delta);
            const auto rep = validate(*p);
            std::optional<std::string> delta_error;
            if (delta)
            {
                try
                {
                    DeltaSet d(*p);
                }
                catch (const PresentationError& e)
                {
                    delta_error = e.what();
                }
            }
            Json v = Json::array();
            std::string text;
            for (const auto& x : rep.violations)
            {
                v.push_back(Json{{"generator", p->generator_name(x.generator)}, {"i", x.i}, {"j", x.j}, {"lhs", notation(*p, x.lhs)},
                                 {"rhs", notation(*p, x.rhs)}});
                text += "violation: " + p->generator_name(x.generator) + ": d" + std::to_string(x.i) + " d" + std::to_string(x.j) + " = "
                        + notation(*p, x.lhs) + " but d" + std::to_string(x.j - 1) + " d" + std::to_string(x.i) + " = "
                        + notation(*p, x.rhs) + "\n";
            }
            if (delta_error)
                text += "delta set error: " + *delta_error + "\n";
            const bool ok = rep.ok() && !delta_error;
            text += ok ? "valid: " + p->name() + "\n" : "invalid: " + std::to_string(rep.violations.size()) + " identity violation(s)\n";
            Json doc{{"name", p->name()}, {"valid", ok}, {"violations", v}};
            if (delta_error)
                doc["delta_error"] = *delta_error;
            emit(doc, text);
            return ok ? kOk : kNegative;
        };
    });

    auto* validate_map_cmd = app.add_subcommand("validate-map", "Check that a map file commutes with faces");
    validate_map_cmd->add_option("file", file, "Map file")->required();
    validate_map_cmd->callback([&] {
        run = [&] {
            const LoadedMap m = load_map(file);
            const auto rep = validate_map(m.map);
            Json v = Json::array();
            std::string text;
            for (const auto& x : rep.violations)
            {
                v.push_back(Json{{"generator", m.source->generator_name(x.generator)}, {"face", x.face},
                                 {"image_of_face", notation(*m.target, x.image_of_face)},
                                 {"face_of_image", notation(*m.target, x.face_of_image)}});
                text += "violation: f(d" + std::to_string(x.face) + " " + m.source->generator_name(x.generator)
                        + ") = " + notation(*m.target, x.image_of_face) + " but d" + std::to_string(x.face) + " f("
                        + m.source->generator_name(x.generator) + ") = " + notation(*m.target, x.face_of_image) + "\n";
            }
            text += rep.ok() ? "valid map\n" : "invalid map\n";
            emit(Json{{"valid", rep.ok()}, {"violations", v}}, text);
            return rep.ok() ? kOk : kNegative;
        };
    });

    auto* census = app.add_subcommand("census", "Count the simplices of one dimension");
    file_arg(census);
    census->add_option("--dim", dim, "Dimension")->required()->check(CLI::NonNegativeNumber);
    census->add_flag("--nondegenerate", nondegenerate, "Count only nondegenerate simplices");
    census->callback([&] {
        run = [&] {
            auto p = load(file);
            std::size_t count;
            if (nondegenerate)
                count = static_cast<std::size_t>(p->generator_count(dim));
            else
            {
                p->require_representable(dim, "census");
                count = simplex_count(*p, dim);
            }
            emit(Json{{"dim", dim}, {"nondegenerate", nondegenerate}, {"count", count}}, std::to_string(count) + "\n");
            return kOk;
        };
    });

    auto* homology_cmd = app.add_subcommand("homology", "Normalized integral homology");
    file_arg(homology_cmd);
    homology_cmd->add_option("--max-dim", max_dim, "Top chain dimension N; degrees 0..N-1 are reported")->required()->check(CLI::PositiveNumber);
    homology_cmd->callback([&] {
        run = [&] {
            auto p = load(file);
            const auto groups = homology(*p, max_dim);
            Json arr = Json::array();
            std::string text;
            for (std::size_t d = 0; d < groups.size(); ++d)
            {
                Json g = group_json(groups[d]);
                g["degree"] = d;
                arr.push_back(g);
                text += "H_" + std::to_string(d) + " = " + format_group(groups[d]) + "\n";
            }
            emit(Json{{"max_dim", max_dim}, {"groups", arr}}, text);
            return kOk;
        };
    });

    auto* euler = app.add_subcommand("euler", "Euler characteristic");
    file_arg(euler);
    euler->callback([&] {
        run = [&] {
            auto p = load(file);
            const long long chi = euler_characteristic(*p);
            emit(Json{{"euler", chi}}, std::to_string(chi) + "\n");
            return kOk;
        };
    });

    auto* kan = app.add_subcommand("kan", "Search for unfillable horns up to a dimension");
    file_arg(kan);
    kan->add_option("--max-dim", max_dim, "Largest horn dimension")->required()->check(CLI::PositiveNumber);
    kan->callback([&] {
        run = [&] {
            auto p = load(file);
            const KanReport r = kan_check(*p, max_dim);
            Json w = Json::array();
            std::string text;
            for (const auto& h : r.unfillable)
            {
                Json faces = Json::object();
                for (int i = 0; i <= h.n; ++i)
                    if (h.faces[i])
                        faces["d" + std::to_string(i)] = notation(*p, *h.faces[i]);
                w.push_back(Json{{"n", h.n}, {"k", h.k}, {"faces", faces}});
                text += "unfillable: " + describe_horn(*p, h) + "\n";
            }
            text += std::to_string(r.horns_checked) + " compatible horns checked up to dimension " + std::to_string(max_dim) + ": "
                    + (r.kan_up_to_bound() ? "all fillable" : std::to_string(r.unfillable.size()) + " unfillable") + "\n";
            emit(Json{{"max_dim", max_dim}, {"horns_checked", r.horns_checked}, {"kan_up_to_bound", r.kan_up_to_bound()}, {"unfillable", w}},
                 text);
            return r.kan_up_to_bound() ? kOk : kNegative;
        };
    });

    auto* pi0 = app.add_subcommand("pi0", "Path components");
    file_arg(pi0);
    pi0->callback([&] {
        run = [&] {
            auto p = load(file);
            const Components c = path_components(*p);
            Json arr = Json::array();
            std::string text = std::to_string(c.partition.size()) + " component(s)\n";
            for (const auto& members : c.partition.classes)
            {
                Json m = Json::array();
                text += " ";
                for (int i : members)
                {
                    m.push_back(p->generator_name(c.vertices[i]));
                    text += " " + p->generator_name(c.vertices[i]);
                }
                text += "\n";
                arr.push_back(m);
            }
            if (c.partition.closure_needed)
                text += "note: edge relation needed symmetric-transitive closure\n";
            emit(Json{{"count", c.partition.size()}, {"closure_needed", c.partition.closure_needed}, {"components", arr}}, text);
            return kOk;
        };
    });

    auto* pi = app.add_subcommand("pi", "Homotopy group pi_n at a basepoint");
    file_arg(pi);
    pi->add_option("--n", n, "Degree n >= 1")->required()->check(CLI::PositiveNumber);
    pi->add_option("--basepoint", basepoint, "Basepoint vertex name (default: first vertex)");
    pi->callback([&] {
        run = [&] {
            auto p = load(file);
            const PiGroup g = pi_n(BasedPresentation(p, basepoint), n);
            emit(pi_json(g, *p), pi_text(g, *p));
            return pi_ok(g) ? kOk : kNegative;
        };
    });

    auto* pirel = app.add_subcommand("pirel", "Relative homotopy pi_n(X, A) at a basepoint");
    file_arg(pirel);
    pirel->add_option("--sub", sub_file, "Sub-presentation file (generators matched by name)")->required();
    pirel->add_option("--n", n, "Degree n >= 1")->required()->check(CLI::PositiveNumber);
    pirel->add_option("--basepoint", basepoint, "Basepoint vertex name (default: first vertex)");
    pirel->add_flag("--les", les, "Also check exactness of the long exact sequence at level n");
    pirel->callback([&] {
        run = [&] {
            auto p = load(file);
            auto a = load(sub_file);
            const BasedPresentation b(p, basepoint);
            const Subcomplex sub(p, a);
            const PiGroup g = pi_n_rel(b, sub, n);
            const auto boundary = les_boundary_map(b, sub, g);
            Json doc = pi_json(g, *p);
            Json bd = Json::array();
            for (int c : boundary)
                bd.push_back(c);
            doc["boundary"] = bd;
            std::string text = pi_text(g, *p);
            text += "boundary to pi_" + std::to_string(n - 1) + "(A):";
            for (std::size_t c = 0; c < boundary.size(); ++c)
                text += " [" + g.labels[c] + "]->" + std::to_string(boundary[c]);
            text += "\n";
            bool ok = pi_ok(g);
            if (les)
            {
                const LesReport r = les_exactness(b, sub, n);
                doc["exact_at_x"] = r.exact_at_x();
                doc["exact_at_rel"] = r.exact_at_rel();
                text += std::string("exact at pi_n(X): ") + (r.exact_at_x() ? "yes" : "no") + ", exact at pi_n(X,A): "
                        + (r.exact_at_rel() ? "yes" : "no") + "\n";
                ok = ok && r.exact_at_x() && r.exact_at_rel();
            }
            emit(doc, text);
            return ok ? kOk : kNegative;
        };
    });

    auto* homotopic = app.add_subcommand("homotopic", "Are two n-simplices homotopic?");
    file_arg(homotopic);
    homotopic->add_option("--n", n, "Dimension of the simplices")->required()->check(CLI::NonNegativeNumber);
    homotopic->add_option("x", x_expr, "First simplex, e.g. \"s0 v\"")->required();
    homotopic->add_option("xp", xp_expr, "Second simplex")->required();
    homotopic->callback([&] {
        run = [&] {
            auto p = load(file);
            const Simplex x = parse_simplex(*p, x_expr, n);
            const Simplex xp = parse_simplex(*p, xp_expr, n);
            const auto witness = homotopy_witness(*p, x, xp);
            // Closure among all n-simplices sharing the boundary of x.
            std::vector<Simplex> pool;
            for (const Simplex& s : simplices(*p, n))
            {
                bool same = true;
                for (int i = 0; i <= n && n > 0 && same; ++i)
                    same = apply_face(*p, s, i) == apply_face(*p, x, i);
                if (same)
                    pool.push_back(s);
            }
            bool related = false;
            bool closure_needed = false;
            if (std::find(pool.begin(), pool.end(), xp) != pool.end())
            {
                const Partition part = homotopy_classes(*p, pool);
                auto pos = [&](const Simplex& s) { return std::find(pool.begin(), pool.end(), s) - pool.begin(); };
                related = part.class_of[pos(x)] == part.class_of[pos(xp)];
                closure_needed = part.closure_needed;
            }
            Json doc{{"homotopic", related}, {"direct_witness", witness ? Json(notation(*p, *witness)) : Json(nullptr)},
                     {"closure_needed", closure_needed}};
            std::string text = related ? "homotopic" : "not homotopic";
            if (witness)
                text += " (witness " + notation(*p, *witness) + ")";
            else if (related)
                text += " (through the closure)";
            emit(doc, text + "\n");
            return related ? kOk : kNegative;
        };
    });

    auto* product_cmd = app.add_subcommand("product", "Product of two presentations");
    product_cmd->add_option("a", file, "First factor")->required();
    product_cmd->add_option("b", file2, "Second factor")->required();
    product_cmd->add_option("-o,--output", out_path, "Output file")->required();
    product_cmd->callback([&] {
        run = [&] {
            auto a = load(file);
            auto b = load(file2);
            const ProductPresentation prod = product(a, b);
            save_presentation(out_path, prod.presentation());
            std::vector<std::size_t> counts;
            for (int d = 0; d <= prod.presentation().top_dim(); ++d)
                counts.push_back(prod.presentation().generator_count(d));
            emit(Json{{"output", out_path}, {"generators_per_dim", counts_json(counts)}},
                 "wrote " + out_path + ", nondegenerate simplices per dimension " + join_counts(counts) + "\n");
            return kOk;
        };
    });

    auto* nerve_cmd = app.add_subcommand("nerve", "Nerve of a finite group");
    auto* cyc = nerve_cmd->add_option("--cyclic", cyclic, "Cyclic group of order M")->check(CLI::PositiveNumber);
    auto* tab = nerve_cmd->add_option("--table", table_file, "Group table file");
    cyc->excludes(tab);
    nerve_cmd->add_option("--top-dim", top_dim, "Truncation dimension")->required()->check(CLI::PositiveNumber);
    nerve_cmd->add_option("-o,--output", out_path, "Output file")->required();
    nerve_cmd->callback([&] {
        run = [&] {
            if (!cyclic && table_file.empty())
                throw CLI::ValidationError("nerve", "one of --cyclic or --table is required");
            const GroupTable g = table_file.empty() ? GroupTable::cyclic(cyclic) : load_group_table(table_file);
            const Presentation p = nerve(g, top_dim);
            save_presentation(out_path, p);
            emit(Json{{"output", out_path}, {"order", g.order()}, {"top_dim", top_dim}},
                 "wrote " + out_path + " (nerve of a group of order " + std::to_string(g.order()) + ", truncated at " + std::to_string(top_dim)
                     + ")\n");
            return kOk;
        };
    });

    auto* standard_cmd = app.add_subcommand("standard", "Standard simplicial sets");
    auto* o_delta = standard_cmd->add_option("--delta", delta_n, "Delta^N");
    auto* o_boundary = standard_cmd->add_option("--boundary", boundary_n, "Boundary of Delta^N");
    auto* o_horn = standard_cmd->add_option("--horn", horn_nk, "Horn Lambda^N_K")->expected(2);
    auto* o_sphere = standard_cmd->add_option("--sphere", sphere_n, "Sphere with one vertex and one N-cell");
    o_delta->excludes(o_boundary)->excludes(o_horn)->excludes(o_sphere);
    o_boundary->excludes(o_horn)->excludes(o_sphere);
    o_horn->excludes(o_sphere);
    standard_cmd->add_option("-o,--output", out_path, "Output file")->required();
    standard_cmd->callback([&] {
        run = [&] {
            Presentation p;
            if (delta_n)
                p = standard_simplex(*delta_n);
            else if (boundary_n)
                p = boundary(*boundary_n);
            else if (horn_nk.size() == 2)
                p = horn(horn_nk[0], horn_nk[1]);
            else if (sphere_n)
                p = sphere_two_cell(*sphere_n);
            else
                throw CLI::ValidationError("standard", "one of --delta, --boundary, --horn, --sphere is required");
            save_presentation(out_path, p);
            emit(Json{{"output", out_path}, {"name", p.name()}}, "wrote " + out_path + " (" + p.name() + ")\n");
            return kOk;
        };
    });

    auto* cw = app.add_subcommand("cw-report", "Cells of the geometric realization");
    file_arg(cw);
    cw->callback([&] {
        run = [&] {
            auto p = load(file);
            const CWReport r = cw_report(*p);
            Json rows = Json::array();
            std::string text = "cells per dimension " + join_counts(r.cells_per_dim) + ", euler characteristic " + std::to_string(r.euler) + "\n";
            for (const auto& row : r.attachments)
            {
                if (row.faces.empty())
                    continue;
                Json faces = Json::array();
                text += "  " + row.name + ":";
                for (const auto& f : row.faces)
                {
                    faces.push_back(Json{{"face", f.index}, {"simplex", f.notation}, {"collapsed", f.collapsed}});
                    text += " d" + std::to_string(f.index) + "=" + f.notation + (f.collapsed ? " (collapsed)" : "");
                }
                text += "\n";
                rows.push_back(Json{{"generator", row.name}, {"dim", row.generator.dim}, {"faces", faces}});
            }
            emit(Json{{"cells_per_dim", counts_json(r.cells_per_dim)}, {"euler", r.euler}, {"attachments", rows}}, text);
            return kOk;
        };
    });

    auto* delta_report = app.add_subcommand("delta-report", "Cells of the Delta-set realization");
    file_arg(delta_report);
    delta_report->add_option("--max-dim", max_dim, "Largest dimension")->required()->check(CLI::NonNegativeNumber);
    delta_report->callback([&] {
        run = [&] {
            bool delta = false;
            auto p = load(file, &delta);
            const auto counts = delta ? delta_realization_report(DeltaSet(*p), max_dim) : delta_realization_report(*p, max_dim);
            emit(Json{{"kind", delta ? "delta" : "simplicial"}, {"max_dim", max_dim}, {"cells_per_dim", counts_json(counts)}},
                 "cells per dimension " + join_counts(counts) + "\n");
            return kOk;
        };
    });

    auto* graph = app.add_subcommand("export-graph", "Face incidence graph in DOT");
    file_arg(graph);
    graph->add_option("-o,--output", out_path, "Output file (default: standard output)");
    graph->callback([&] {
        run = [&] {
            auto p = load(file);
            const std::string dot = incidence_export(*p);
            if (!out_path.empty())
            {
                write_file(out_path, dot);
                emit(Json{{"output", out_path}}, "wrote " + out_path + "\n");
            }
            else if (g_structured)
            {
                const IncidenceGraph ig = incidence_graph(*p);
                Json nodes = Json::array(), arcs = Json::array();
                for (GeneratorId g : ig.nodes)
                    nodes.push_back(p->generator_name(g) + ":" + std::to_string(g.dim));
                for (const auto& a : ig.arcs)
                    arcs.push_back(Json{{"from", p->generator_name(a.from) + ":" + std::to_string(a.from.dim)},
                                        {"to", p->generator_name(a.to) + ":" + std::to_string(a.to.dim)},
                                        {"face", a.face}});
                emit(Json{{"nodes", nodes}, {"arcs", arcs}}, "");
            }
            else
                std::cout << dot;
            return kOk;
        };
    });

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? kOk : kFailure;
    }
    g_structured = format == "structured";
    try
    {
        return run();
    }
    catch (const CLI::ValidationError& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    catch (const HornError& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kNegative;
    }
    catch (const TruncationError& e)
    {
        std::cerr << "error: undecidable at this truncation: " << e.what() << "\n";
        return kFailure;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
}
