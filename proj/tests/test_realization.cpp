#include "catch_amalgamated.hpp"

#include "sset/error.hpp"
#include "sset/group.hpp"
#include "sset/realization.hpp"
#include "sset/standard.hpp"

using namespace sset;

using Counts = std::vector<std::size_t>;

TEST_CASE("two-cell sphere attaches along collapsed faces", "[realization]")
{
    const Presentation s2 = sphere_two_cell(2);
    const CWReport r = cw_report(s2);
    CHECK(r.cells_per_dim == Counts{1, 0, 1});
    CHECK(r.euler == 2);
    REQUIRE(r.attachments.size() == 2);
    const AttachmentRow& cell = r.attachments[1];
    CHECK(cell.name == "sigma");
    REQUIRE(cell.faces.size() == 3);
    for (const auto& f : cell.faces)
    {
        CHECK(f.collapsed);
        CHECK(f.notation == "s0 v");
    }
    const IncidenceGraph g = incidence_graph(s2);
    CHECK(g.nodes.size() == 2);
    CHECK(g.arcs.size() == 3);
    for (const auto& a : g.arcs)
        CHECK(a.to == GeneratorId{0, 0});
}

TEST_CASE("boundary of the tetrahedron", "[realization]")
{
    const Presentation b = boundary(3);
    const CWReport r = cw_report(b);
    CHECK(r.cells_per_dim == Counts{4, 6, 4});
    CHECK(r.euler == 2);
    for (const auto& row : r.attachments)
        for (const auto& f : row.faces)
            CHECK_FALSE(f.collapsed);
    const IncidenceGraph g = incidence_graph(b);
    CHECK(g.nodes.size() == 14);
    CHECK(g.arcs.size() == 24);
}

TEST_CASE("cone cells", "[realization]")
{
    const CWReport r = cw_report(adjoin_degeneracies(cone_fixture()));
    CHECK(r.cells_per_dim == Counts{2, 2, 1});
    CHECK(r.euler == 1);
}

TEST_CASE("Delta realizations", "[realization]")
{
    CHECK(delta_realization_report(delta_point(), 3) == Counts{1, 0, 0, 0});
    // As a Delta set, a simplicial set realizes every simplex.
    CHECK(delta_realization_report(standard_simplex(0), 3) == Counts{1, 1, 1, 1});
    CHECK(delta_realization_report(standard_simplex(1), 3) == Counts{2, 3, 4, 5});
    CHECK(delta_realization_report(cone_fixture(), 2) == Counts{2, 2, 1});
    CHECK_THROWS_AS(delta_realization_report(nerve(GroupTable::cyclic(2), 2), 3), TruncationError);
}

TEST_CASE("incidence export is DOT with name:dim nodes", "[realization]")
{
    const std::string dot = incidence_export(standard_simplex(1));
    CHECK(dot.rfind("digraph \"delta1\" {", 0) == 0);
    CHECK(dot.find("\"[0,1]:1\" -> \"[1]:0\" [label=\"0\"];") != std::string::npos);
    CHECK(dot.find("\"[0,1]:1\" -> \"[0]:0\" [label=\"1\"];") != std::string::npos);
    CHECK(dot == incidence_export(standard_simplex(1)));
}
